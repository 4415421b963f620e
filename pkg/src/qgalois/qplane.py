"""The reduced quantum plane at a primitive N-th root of unity.

Generators x, y satisfy x y = q y x and x**N = y**N = 1, so the monomials
y**k x**l (0 <= k, l < N) form a basis.  The subalgebra generated by x is the
carrier of a semi-commutative Galois extension with tau = y and twisting
endomorphism x -> q x; the whole plane is recovered as that extension, with
the y-degree as the grading.

Also provides the faithful N x N matrix representation
x -> diag(1, q**-1, ..., q**-(N-1)) and y -> the cyclic shift matrix.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .cyclotomic import CycScalar
from .galois import CarrierAlgebra, ExtElement, NotInvertible

_SCALARS = (int, Fraction, CycScalar)


def _as_scalar(order: int, value) -> CycScalar:
    if isinstance(value, CycScalar):
        if value.order != order:
            raise ValueError("order mismatch")
        return value
    return CycScalar.from_rational(order, value)


class XPoly:
    """An element of the x-subalgebra: sum_l c_l x**l with x**N = 1."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != order:
            raise ValueError("coefficient vector must have length N")
        self.order = order
        self.coeffs = coeffs

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(order: int) -> XPoly:
        z = CycScalar.zero(order)
        return XPoly(order, (z,) * order)

    @staticmethod
    def monomial(order: int, power: int, coeff=1) -> XPoly:
        c = [CycScalar.zero(order)] * order
        c[power % order] = _as_scalar(order, coeff)
        return XPoly(order, c)

    @staticmethod
    def one(order: int) -> XPoly:
        return XPoly.monomial(order, 0)

    @staticmethod
    def x(order: int) -> XPoly:
        return XPoly.monomial(order, 1)

    @staticmethod
    def from_scalar(order: int, value) -> XPoly:
        return XPoly.monomial(order, 0, value)

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other) -> "XPoly | None":
        if isinstance(other, XPoly):
            if other.order != self.order:
                raise ValueError("order mismatch")
            return other
        if isinstance(other, _SCALARS):
            return XPoly.from_scalar(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return XPoly(self.order, (a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return XPoly(self.order, (-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self.order
        out = [CycScalar.zero(n)] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    k = (i + j) % n
                    out[k] = out[k] + a * b
        return XPoly(n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = XPoly.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, coeff) -> XPoly:
        c = _as_scalar(self.order, coeff)
        return XPoly(self.order, (c * a for a in self.coeffs))

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- the structure maps --------------------------------------------------

    def twist(self, k: int = 1) -> XPoly:
        """Substitute x -> q**k x (the endomorphism transporting r across y**k)."""
        n = self.order
        return XPoly(
            n,
            (CycScalar.q_power(n, k * l) * c for l, c in enumerate(self.coeffs)),
        )

    def evaluate_at_q_power(self, j: int) -> CycScalar:
        """Value at x = q**j; x**N = 1 splits over Q(q) with these roots."""
        n = self.order
        acc = CycScalar.zero(n)
        for l, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * CycScalar.q_power(n, j * l)
        return acc

    def inverse(self) -> XPoly:
        """Invert by evaluation at the N roots of x**N - 1 and interpolation.

        A zero value at any root means the element is a zero divisor and has
        no inverse; NotInvertible is raised.
        """
        n = self.order
        values = [self.evaluate_at_q_power(j) for j in range(n)]
        if not all(values):
            raise NotInvertible("element vanishes at a root of x**N - 1")
        inv_values = [v.inverse() for v in values]
        inv_n = CycScalar.from_rational(n, Fraction(1, n))
        coeffs = []
        for l in range(n):
            acc = CycScalar.zero(n)
            for j, w in enumerate(inv_values):
                acc = acc + CycScalar.q_power(n, -j * l) * w
            coeffs.append(inv_n * acc)
        return XPoly(n, coeffs)

    def __str__(self):
        return _terms_str(
            ((c, _monomial_str("x", l)) for l, c in enumerate(self.coeffs) if c)
        )

    def __repr__(self):
        return f"XPoly({self.order}, {self!s})"


class XPolyCarrier(CarrierAlgebra):
    """The x-subalgebra as the carrier of the extension generated by tau = y."""

    tau_sign = 1

    def __init__(self, order: int):
        if order < 2:
            raise ValueError("order must be at least 2")
        self.order = order

    def zero(self):
        return XPoly.zero(self.order)

    def one(self):
        return XPoly.one(self.order)

    def add(self, u, v):
        return u + v

    def neg(self, u):
        return -u

    def mul(self, u, v):
        return u * v

    def scalar_mul(self, c, u):
        return u.scale(c)

    def eq(self, u, v):
        return u == v

    def phi(self, u):
        return u.twist(1)

    def phi_power(self, u, k: int):
        return u.twist(k % self.order)

    def invert(self, u):
        return u.inverse()

    def q_element(self, k: int):
        return XPoly.from_scalar(self.order, CycScalar.q_power(self.order, k))

    def x(self) -> XPoly:
        return XPoly.x(self.order)

    def __eq__(self, other):
        return isinstance(other, XPolyCarrier) and other.order == self.order

    def __hash__(self):
        return hash((XPolyCarrier, self.order))

    def __repr__(self):
        return f"XPolyCarrier(order={self.order})"


class PlaneElement:
    """sum_{k,l} c_{kl} y**k x**l; ``grid[k][l]`` is the coefficient of y**k x**l."""

    __slots__ = ("order", "grid")

    def __init__(self, order: int, grid):
        grid = tuple(tuple(row) for row in grid)
        if len(grid) != order or any(len(row) != order for row in grid):
            raise ValueError("coefficient grid must be N x N")
        self.order = order
        self.grid = grid

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(order: int) -> PlaneElement:
        z = CycScalar.zero(order)
        return PlaneElement(order, ((z,) * order,) * order)

    @staticmethod
    def monomial(order: int, ydeg: int, xdeg: int, coeff=1) -> PlaneElement:
        rows = [[CycScalar.zero(order)] * order for _ in range(order)]
        rows[ydeg % order][xdeg % order] = _as_scalar(order, coeff)
        return PlaneElement(order, rows)

    @staticmethod
    def one(order: int) -> PlaneElement:
        return PlaneElement.monomial(order, 0, 0)

    @staticmethod
    def x(order: int) -> PlaneElement:
        return PlaneElement.monomial(order, 0, 1)

    @staticmethod
    def y(order: int) -> PlaneElement:
        return PlaneElement.monomial(order, 1, 0)

    @staticmethod
    def from_scalar(order: int, value) -> PlaneElement:
        return PlaneElement.monomial(order, 0, 0, value)

    @staticmethod
    def from_rows(order: int, rows: list[XPoly]) -> PlaneElement:
        return PlaneElement(order, (r.coeffs for r in rows))

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other) -> "PlaneElement | None":
        if isinstance(other, PlaneElement):
            if other.order != self.order:
                raise ValueError("order mismatch")
            return other
        if isinstance(other, _SCALARS):
            return PlaneElement.from_scalar(self.order, other)
        if isinstance(other, XPoly):
            if other.order != self.order:
                raise ValueError("order mismatch")
            return PlaneElement(
                self.order,
                [other.coeffs] + [PlaneElement.zero(self.order).grid[0]] * (self.order - 1),
            )
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PlaneElement(
            self.order,
            ((a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.grid, o.grid)),
        )

    __radd__ = __add__

    def __neg__(self):
        return PlaneElement(self.order, ((-a for a in row) for row in self.grid))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        """(y**a x**b)(y**c x**d) = q**(b c) y**(a+c) x**(b+d), extended bilinearly."""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self.order
        out = [[CycScalar.zero(n)] * n for _ in range(n)]
        for a in range(n):
            row = self.grid[a]
            for b in range(n):
                alpha = row[b]
                if not alpha:
                    continue
                for c in range(n):
                    orow = o.grid[c]
                    qbc = CycScalar.q_power(n, b * c)
                    left = alpha * qbc
                    for d in range(n):
                        beta = orow[d]
                        if beta:
                            i, j = (a + c) % n, (b + d) % n
                            out[i][j] = out[i][j] + left * beta
        return PlaneElement(n, out)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = PlaneElement.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, coeff) -> PlaneElement:
        c = _as_scalar(self.order, coeff)
        return PlaneElement(self.order, ((c * a for a in row) for row in self.grid))

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self.grid == o.grid

    __hash__ = None

    def is_zero(self) -> bool:
        return all(not c for row in self.grid for c in row)

    # -- grading -------------------------------------------------------------

    def row(self, k: int) -> XPoly:
        """The coefficient of y**k as an element of the x-subalgebra."""
        return XPoly(self.order, self.grid[k % self.order])

    def homogeneous_degrees(self) -> list[int]:
        return [k for k in range(self.order) if any(self.grid[k])]

    def is_homogeneous(self) -> bool:
        return len(self.homogeneous_degrees()) <= 1

    def degree(self) -> int | None:
        live = self.homogeneous_degrees()
        if not live:
            return 0
        if len(live) > 1:
            return None
        return live[0]

    def __str__(self):
        terms = []
        for k, row in enumerate(self.grid):
            for l, c in enumerate(row):
                if c:
                    mono = "*".join(p for p in (_monomial_str("y", k), _monomial_str("x", l)) if p)
                    terms.append((c, mono))
        return _terms_str(terms)

    def __repr__(self):
        return f"PlaneElement({self.order}, {self!s})"


def to_extension(w: PlaneElement) -> ExtElement:
    """View a plane element as sum_k y**k u_k(x) over the x-subalgebra."""
    carrier = XPolyCarrier(w.order)
    return ExtElement(carrier, (w.row(k) for k in range(w.order)))


def from_extension(xi: ExtElement) -> PlaneElement:
    if not isinstance(xi.carrier, XPolyCarrier):
        raise ValueError("element does not live over the x-subalgebra")
    return PlaneElement.from_rows(xi.carrier.order, list(xi.components))


# -- matrix representation ----------------------------------------------------


class RepMatrix:
    """An N x N matrix over Q(q)."""

    __slots__ = ("order", "entries")

    def __init__(self, order: int, entries):
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != order or any(len(row) != order for row in entries):
            raise ValueError("matrix must be N x N")
        self.order = order
        self.entries = entries

    @staticmethod
    def identity(order: int) -> RepMatrix:
        one, zero = CycScalar.one(order), CycScalar.zero(order)
        return RepMatrix(
            order,
            ((one if i == j else zero for j in range(order)) for i in range(order)),
        )

    @staticmethod
    def zero(order: int) -> RepMatrix:
        z = CycScalar.zero(order)
        return RepMatrix(order, ((z,) * order,) * order)

    def _check(self, other):
        if not isinstance(other, RepMatrix) or other.order != self.order:
            raise ValueError("order mismatch")

    def __add__(self, other):
        self._check(other)
        return RepMatrix(
            self.order,
            ((a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __sub__(self, other):
        self._check(other)
        return RepMatrix(
            self.order,
            ((a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __neg__(self):
        return RepMatrix(self.order, ((-a for a in row) for row in self.entries))

    def __mul__(self, other):
        self._check(other)
        n = self.order
        zero = CycScalar.zero(n)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RepMatrix(n, out)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = RepMatrix.identity(self.order)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, coeff) -> RepMatrix:
        c = _as_scalar(self.order, coeff)
        return RepMatrix(self.order, ((c * a for a in row) for row in self.entries))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.order == other.order and self.entries == other.entries

    __hash__ = None

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def __str__(self):
        return "\n".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.entries
        )

    def __repr__(self):
        return f"RepMatrix({self.order})\n{self!s}"


@functools.lru_cache(maxsize=None)
def generator_matrices(order: int) -> tuple[RepMatrix, RepMatrix]:
    """(X, Y): X = diag(q**0, q**-1, ..., q**-(N-1)), Y the cyclic shift."""
    n = order
    zero = CycScalar.zero(n)
    x_rows = [
        [CycScalar.q_power(n, -i) if i == j else zero for j in range(n)]
        for i in range(n)
    ]
    one = CycScalar.one(n)
    y_rows = [[zero] * n for _ in range(n)]
    for i in range(n - 1):
        y_rows[i][i + 1] = one
    y_rows[n - 1][0] = one
    return RepMatrix(n, x_rows), RepMatrix(n, y_rows)


@functools.lru_cache(maxsize=None)
def basis_matrices(order: int) -> dict[tuple[int, int], RepMatrix]:
    """Images of all basis monomials y**k x**l."""
    xm, ym = generator_matrices(order)
    out: dict[tuple[int, int], RepMatrix] = {}
    yk = RepMatrix.identity(order)
    for k in range(order):
        ykxl = yk
        for l in range(order):
            out[(k, l)] = ykxl
            ykxl = ykxl * xm
        yk = yk * ym
    return out


def represent(w: PlaneElement) -> RepMatrix:
    """The matrix image of a plane element; multiplicative and faithful."""
    basis = basis_matrices(w.order)
    acc = RepMatrix.zero(w.order)
    for k in range(w.order):
        for l in range(w.order):
            c = w.grid[k][l]
            if c:
                acc = acc + basis[(k, l)].scale(c)
    return acc


def scalar_rank(vectors: list[list[CycScalar]]) -> int:
    """Rank of a matrix over Q(q) by Gaussian elimination."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [inv * e for e in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [e - f * p for e, p in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


# -- shared term rendering ------------------------------------------------------


def _monomial_str(sym: str, power: int) -> str:
    if power == 0:
        return ""
    if power == 1:
        return sym
    return f"{sym}^{power}"


def _scalar_is_single_term(c: CycScalar) -> bool:
    return sum(1 for a in c.coeffs if a) <= 1


def _terms_str(terms) -> str:
    parts = []
    for c, mono in terms:
        cs = str(c)
        if not mono:
            parts.append(cs if _scalar_is_single_term(c) else f"({cs})")
        elif cs == "1":
            parts.append(mono)
        elif cs == "-1":
            parts.append("-" + mono)
        elif _scalar_is_single_term(c):
            parts.append(f"{cs}*{mono}")
        else:
            parts.append(f"({cs})*{mono}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out
