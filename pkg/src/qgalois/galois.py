"""Graded structure of a semi-commutative Galois extension A[tau].

The extension is generated over a carrier algebra A by one element tau with
tau**N = s*1 (s = +1 or -1) and the commutation rule u*tau = tau*phi(u) for an
algebra endomorphism phi of A with phi**N = id.  Every element splits uniquely
as  xi = sum_k tau**k u_k,  which is the Z_N-grading used throughout.

The differential is the inner graded q-commutator with tau, where q is a fixed
primitive N-th root of unity in the carrier's scalar field.  On a homogeneous
element tau**k u it acts as tau**(k+1) (u - q**k phi(u)); it is nilpotent of
order exactly N and satisfies the graded q-Leibniz rule
d(uv) = d(u) v + q**|u| u d(v).
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any


class NotInvertible(ArithmeticError):
    """The element has no multiplicative inverse in its algebra."""


class NonInvertibleCoordinate(NotInvertible):
    """The finite difference of the chosen coordinate cannot be inverted."""


class CarrierAlgebra(ABC):
    """Operations a carrier algebra must provide to build the extension.

    ``order`` is N; ``tau_sign`` the sign s in tau**N = s*1.  ``q_element(k)``
    embeds the scalar q**k into the carrier, which keeps the grading code
    generic over the scalar field (cyclotomic for the quantum plane, plain
    rational for the quaternion instance where q = -1).
    """

    order: int
    tau_sign: int

    @abstractmethod
    def zero(self) -> Any: ...

    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def add(self, u, v) -> Any: ...

    @abstractmethod
    def neg(self, u) -> Any: ...

    @abstractmethod
    def mul(self, u, v) -> Any: ...

    @abstractmethod
    def scalar_mul(self, c, u) -> Any: ...

    @abstractmethod
    def eq(self, u, v) -> bool: ...

    @abstractmethod
    def phi(self, u) -> Any:
        """The twisting endomorphism; phi**order must be the identity."""

    @abstractmethod
    def invert(self, u) -> Any:
        """Multiplicative inverse; raises NotInvertible when there is none."""

    @abstractmethod
    def q_element(self, k: int) -> Any:
        """The scalar q**k as a carrier element."""

    # -- derived helpers ----------------------------------------------------

    def sub(self, u, v):
        return self.add(u, self.neg(v))

    def is_zero(self, u) -> bool:
        return self.eq(u, self.zero())

    def phi_power(self, u, k: int):
        for _ in range(k % self.order):
            u = self.phi(u)
        return u


class ExtElement:
    """An element sum_k tau**k u_k of the extension, stored by components."""

    __slots__ = ("carrier", "components")

    def __init__(self, carrier: CarrierAlgebra, components):
        components = tuple(components)
        if len(components) != carrier.order:
            raise ValueError("component count must equal the grading order")
        self.carrier = carrier
        self.components = components

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_component(carrier: CarrierAlgebra, k: int, u) -> ExtElement:
        comps = [carrier.zero()] * carrier.order
        comps[k % carrier.order] = u
        return ExtElement(carrier, comps)

    @staticmethod
    def embed(carrier: CarrierAlgebra, u) -> ExtElement:
        return ExtElement.from_component(carrier, 0, u)

    @staticmethod
    def zero(carrier: CarrierAlgebra) -> ExtElement:
        return ExtElement(carrier, [carrier.zero()] * carrier.order)

    @staticmethod
    def one(carrier: CarrierAlgebra) -> ExtElement:
        return ExtElement.from_component(carrier, 0, carrier.one())

    # -- structure -----------------------------------------------------------

    def _check(self, other: ExtElement):
        if self.carrier != other.carrier:
            raise ValueError("elements live over different carriers")

    def __add__(self, other: ExtElement) -> ExtElement:
        self._check(other)
        c = self.carrier
        return ExtElement(c, (c.add(a, b) for a, b in zip(self.components, other.components)))

    def __neg__(self) -> ExtElement:
        c = self.carrier
        return ExtElement(c, (c.neg(a) for a in self.components))

    def __sub__(self, other: ExtElement) -> ExtElement:
        return self + (-other)

    def __mul__(self, other: ExtElement) -> ExtElement:
        """(tau**a u)(tau**b v) = tau**(a+b) phi**b(u) v, folding tau**N = s."""
        self._check(other)
        c = self.carrier
        n = c.order
        out = [c.zero()] * n
        for a, u in enumerate(self.components):
            if c.is_zero(u):
                continue
            for b, v in enumerate(other.components):
                if c.is_zero(v):
                    continue
                w = c.mul(c.phi_power(u, b), v)
                if a + b >= n and c.tau_sign < 0:
                    w = c.neg(w)
                out[(a + b) % n] = c.add(out[(a + b) % n], w)
        return ExtElement(c, out)

    def scale(self, coeff) -> ExtElement:
        c = self.carrier
        return ExtElement(c, (c.scalar_mul(coeff, u) for u in self.components))

    def scale_by_q(self, k: int) -> ExtElement:
        """Multiply by the central scalar q**k."""
        c = self.carrier
        qk = c.q_element(k)
        return ExtElement(c, (c.mul(qk, u) for u in self.components))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtElement):
            return NotImplemented
        if self.carrier != other.carrier:
            return False
        c = self.carrier
        return all(c.eq(a, b) for a, b in zip(self.components, other.components))

    __hash__ = None

    def is_zero(self) -> bool:
        c = self.carrier
        return all(c.is_zero(u) for u in self.components)

    def is_homogeneous(self) -> bool:
        c = self.carrier
        live = [k for k, u in enumerate(self.components) if not c.is_zero(u)]
        return len(live) <= 1

    def degree(self) -> int | None:
        """Degree of a homogeneous element; 0 for zero; None if mixed."""
        c = self.carrier
        live = [k for k, u in enumerate(self.components) if not c.is_zero(u)]
        if not live:
            return 0
        if len(live) > 1:
            return None
        return live[0]

    def component(self, k: int):
        return self.components[k % self.carrier.order]

    def __repr__(self):
        body = ", ".join(repr(u) for u in self.components)
        return f"ExtElement[{body}]"


def tau(carrier: CarrierAlgebra, power: int = 1) -> ExtElement:
    """tau**power as an extension element (power taken mod N, no sign fold)."""
    return ExtElement.from_component(carrier, power, carrier.one())


def q_commutator(v: ExtElement, u: ExtElement) -> ExtElement:
    """Graded q-commutator [v, u]_q = sum_{a,b} (v_a u_b - q**(ab) u_b v_a)."""
    v._check(u)
    c = v.carrier
    out = ExtElement.zero(c)
    for a, va in enumerate(v.components):
        if c.is_zero(va):
            continue
        ea = ExtElement.from_component(c, a, va)
        for b, ub in enumerate(u.components):
            if c.is_zero(ub):
                continue
            eb = ExtElement.from_component(c, b, ub)
            out = out + ea * eb - (eb * ea).scale_by_q(a * b)
    return out


def differential(xi: ExtElement) -> ExtElement:
    """d(xi) = [tau, xi]_q, computed componentwise.

    Component k contributes tau**(k+1) (u_k - q**k phi(u_k)); when k + 1 wraps
    past N the carrier sign of tau**N multiplies the result.
    """
    c = xi.carrier
    n = c.order
    out = [c.zero()] * n
    for k, u in enumerate(xi.components):
        if c.is_zero(u):
            continue
        w = c.sub(u, c.mul(c.q_element(k), c.phi(u)))
        if k + 1 == n and c.tau_sign < 0:
            w = c.neg(w)
        out[(k + 1) % n] = c.add(out[(k + 1) % n], w)
    return ExtElement(c, out)


def delta(carrier: CarrierAlgebra, u):
    """First-order difference Delta(u) = u - phi(u) on the carrier."""
    return carrier.sub(u, carrier.phi(u))


def _delta_inverse(carrier: CarrierAlgebra, x):
    try:
        return carrier.invert(delta(carrier, x))
    except NotInvertible as exc:
        raise NonInvertibleCoordinate(
            "coordinate has a non-invertible finite difference"
        ) from exc


def right_derivative(carrier: CarrierAlgebra, u, x):
    """du/dx = Delta(x)**-1 Delta(u); needs Delta(x) invertible."""
    return carrier.mul(_delta_inverse(carrier, x), delta(carrier, u))


def conjugation_dx(carrier: CarrierAlgebra, u, x):
    """The coefficient-transport u -> Delta(x)**-1 phi(u) Delta(x).

    This is the map that moves a carrier coefficient across dx:
    u * dx = dx * conjugation_dx(u).  It is an algebra endomorphism.
    """
    dx = delta(carrier, x)
    return carrier.mul(carrier.mul(_delta_inverse(carrier, x), carrier.phi(u)), dx)


def change_of_variable(carrier: CarrierAlgebra, y, x):
    """Return (dy/dx, dx/dy); both coordinates need invertible differences."""
    return (
        right_derivative(carrier, y, x),
        right_derivative(carrier, x, y),
    )
