"""Skew polynomials over F_q[x; theta] and R_q[x; Theta_theta].

Multiplication follows ``x * a = theta(a) * x``.  Coefficients are arrays of
field indices: shape ``(L,)`` over a field and ``(L, q)`` over R_q, the last
axis holding CRT coordinates.  Because ``Theta_theta`` (with ``sigma = id``)
acts coordinatewise, the same array code serves both scalar domains; the
ring-specific parts are zero tests and unit tests on coefficients.

Ideals are left ideals and divisors are right divisors throughout.
"""

from __future__ import annotations

import math

import numpy as np

from . import _text
from .errors import DomainError, MismatchError, NotAUnitError, ZeroDivision
from .gf import FieldAutomorphism, FieldElement, GaloisField
from .ring import RingElement, RingRq

ZERO_DEGREE = -math.inf


class SkewPolynomial:
    """An immutable skew polynomial with ascending coefficients."""

    __slots__ = ("base", "s", "coeffs")

    def __init__(self, base: GaloisField | RingRq, s: int, coeffs):
        self.base = base
        field = base if isinstance(base, GaloisField) else base.field
        self.s = s % field.r
        c = np.array(coeffs, dtype=np.int64)
        shape = self._scalar_shape()
        if c.size == 0:
            c = c.reshape((0,) + shape)
        if c.shape[1:] != shape:
            raise DomainError(f"coefficient array shape {c.shape} does not fit {base}")
        nz = (c != 0) if c.ndim == 1 else np.any(c != 0, axis=1)
        top = int(np.nonzero(nz)[0][-1]) + 1 if nz.any() else 0
        c = c[:top]
        c.setflags(write=False)
        self.coeffs = c

    # -- context ---------------------------------------------------------------

    @property
    def is_ring(self) -> bool:
        return isinstance(self.base, RingRq)

    @property
    def field(self) -> GaloisField:
        return self.base.field if self.is_ring else self.base

    @property
    def theta(self) -> FieldAutomorphism:
        return FieldAutomorphism(self.field, self.s)

    def _scalar_shape(self) -> tuple[int, ...]:
        return (self.base.q,) if isinstance(self.base, RingRq) else ()

    def _same(self, other: "SkewPolynomial"):
        if not isinstance(other, SkewPolynomial):
            raise TypeError(f"expected a SkewPolynomial, got {type(other).__name__}")
        if self.base != other.base or self.s != other.s:
            raise MismatchError(
                f"skew polynomials over {self.base}[x; s={self.s}] and {other.base}[x; s={other.s}]"
            )

    def _new(self, coeffs) -> "SkewPolynomial":
        return SkewPolynomial(self.base, self.s, coeffs)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_coeffs(cls, base, s: int, coeffs) -> "SkewPolynomial":
        """Build from ascending coefficients given as elements, ints or strings."""
        arr = [_scalar_indices(base, c) for c in coeffs]
        return cls(base, s, arr)

    @classmethod
    def monomial(cls, base, s: int, degree: int, coeff=1) -> "SkewPolynomial":
        c = _scalar_indices(base, coeff)
        shape = (base.q,) if isinstance(base, RingRq) else ()
        arr = np.zeros((degree + 1,) + shape, dtype=np.int64)
        arr[degree] = c
        return cls(base, s, arr)

    @classmethod
    def constant(cls, base, s: int, c) -> "SkewPolynomial":
        return cls.monomial(base, s, 0, c)

    @classmethod
    def x_n_minus(cls, base, s: int, n: int, lam) -> "SkewPolynomial":
        """``x^n - lambda``."""
        return cls.monomial(base, s, n) - cls.constant(base, s, lam)

    @classmethod
    def parse(cls, base, s: int, text: str) -> "SkewPolynomial":
        """Parse ``c*x^k + ...``; coefficients use the field or ring element syntax."""
        if isinstance(base, RingRq):
            def scalar(t):
                return base.parse(t)
            one = base.one
        else:
            def scalar(t):
                return base(t)
            one = base.one
        terms = _text.parse_polynomial(
            text, "x", scalar, lambda a, b: a * b, lambda a, b: a + b, lambda a: -a, one
        )
        deg = max(terms)
        coeffs = [0] * (deg + 1)
        for d, c in terms.items():
            coeffs[d] = c
        return cls.from_coeffs(base, s, coeffs)

    # -- structure -------------------------------------------------------------

    @property
    def degree(self):
        """Degree, or ``ZERO_DEGREE`` (negative infinity) for the zero polynomial."""
        return len(self.coeffs) - 1 if len(self.coeffs) else ZERO_DEGREE

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def coefficient(self, i: int):
        shape = self._scalar_shape()
        raw = self.coeffs[i] if 0 <= i < len(self.coeffs) else np.zeros(shape, dtype=np.int64)
        if self.is_ring:
            return RingElement(self.base, tuple(int(x) for x in raw))
        return FieldElement(self.base, int(raw))

    @property
    def leading_coefficient(self):
        if self.is_zero():
            raise DomainError("the zero polynomial has no leading coefficient")
        return self.coefficient(len(self.coeffs) - 1)

    def is_monic(self) -> bool:
        return not self.is_zero() and bool(np.all(self.coeffs[-1] == 1))

    def to_word(self, n: int) -> np.ndarray:
        """Coefficient word of length ``n`` (requires ``degree < n``)."""
        if self.degree >= n:
            raise DomainError(f"degree {self.degree} does not fit in length {n}")
        out = np.zeros((n,) + self._scalar_shape(), dtype=np.int64)
        out[: len(self.coeffs)] = self.coeffs
        return out

    # -- arithmetic ------------------------------------------------------------

    def _padded(self, length):
        out = np.zeros((length,) + self._scalar_shape(), dtype=np.int64)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def __add__(self, other):
        self._same(other)
        L = max(len(self.coeffs), len(other.coeffs))
        return self._new(self.field.add(self._padded(L), other._padded(L)))

    def __sub__(self, other):
        self._same(other)
        L = max(len(self.coeffs), len(other.coeffs))
        return self._new(self.field.sub(self._padded(L), other._padded(L)))

    def __neg__(self):
        return self._new(self.field.neg(self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return skew_mul(self, other)

    def lmul(self, c) -> "SkewPolynomial":
        """Left multiplication by a scalar ``c`` (no twist)."""
        idx = np.asarray(_scalar_indices(self.base, c))
        return self._new(self.field.mul(idx, self.coeffs) if len(self.coeffs) else self.coeffs)

    def twist(self, k: int) -> "SkewPolynomial":
        """Apply ``theta^k`` to every coefficient."""
        return self._new(self.field.frobenius(self.coeffs, self.s * k))

    def shift(self, k: int) -> "SkewPolynomial":
        """``x^k * self``."""
        if self.is_zero():
            return self
        tw = self.field.frobenius(self.coeffs, self.s * k)
        pad = np.zeros((k,) + self._scalar_shape(), dtype=np.int64)
        return self._new(np.concatenate([pad, tw]))

    def __eq__(self, other):
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return (
            self.base == other.base
            and self.s == other.s
            and self.coeffs.shape == other.coeffs.shape
            and bool(np.all(self.coeffs == other.coeffs))
        )

    def __hash__(self):
        return hash((self.base, self.s, self.coeffs.tobytes(), self.coeffs.shape))

    def sort_key(self) -> tuple:
        """Deterministic order: degree, then coefficients from the top down."""
        return (len(self.coeffs), tuple(self.coeffs[::-1].reshape(-1).tolist()))

    # -- text ------------------------------------------------------------------

    def __str__(self):
        terms = []
        for j in range(len(self.coeffs)):
            c = self.coefficient(j)
            if c:
                terms.append((j, str(c)))
        return _text.format_polynomial(terms, "x")

    def __repr__(self):
        return f"SkewPolynomial({self}; {self.base}, theta=Frob^{self.s})"


def _scalar_indices(base, c):
    """Coerce a scalar into index form for ``base`` (int, str, element)."""
    if isinstance(base, RingRq):
        if isinstance(c, RingElement):
            if c.ring != base:
                raise MismatchError("coefficient from another ring")
            return list(c.coords)
        if isinstance(c, np.ndarray):
            return c
        return list(base(c).coords)
    if isinstance(c, np.ndarray):
        return c
    if isinstance(c, FieldElement):
        if c.field != base:
            raise MismatchError("coefficient from another field")
        return c.index
    return base(c).index


def _require_unit(poly: SkewPolynomial, c: np.ndarray, what: str):
    if np.any(np.asarray(c) == 0):
        if poly.is_ring:
            raise NotAUnitError(f"{what} is a zero divisor")
        raise ZeroDivision(f"{what} is zero")


# -- operations -------------------------------------------------------------

def skew_mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    """``(a x^i)(b x^j) = a theta^i(b) x^(i+j)``, extended bilinearly."""
    f._same(g)
    if f.is_zero() or g.is_zero():
        return f._new(np.zeros((0,) + f._scalar_shape(), dtype=np.int64))
    F = f.field
    lf, lg = len(f.coeffs), len(g.coeffs)
    out = np.zeros((lf + lg - 1,) + f._scalar_shape(), dtype=np.int64)
    for i in range(lf):
        a = f.coeffs[i]
        if not np.any(a):
            continue
        term = F.mul(a, F.frobenius(g.coeffs, f.s * i))
        out[i : i + lg] = F.add(out[i : i + lg], term)
    return f._new(out)


def right_divmod(f: SkewPolynomial, g: SkewPolynomial) -> tuple[SkewPolynomial, SkewPolynomial]:
    """``f = quotient * g + remainder`` with ``deg remainder < deg g``."""
    f._same(g)
    if g.is_zero():
        raise ZeroDivision("division by the zero polynomial")
    F = f.field
    lead = g.coeffs[-1]
    _require_unit(g, lead, "leading coefficient of the divisor")
    d = len(g.coeffs) - 1
    rem = f._padded(len(f.coeffs)).copy()
    nq = max(len(f.coeffs) - d, 0)
    quo = np.zeros((nq,) + f._scalar_shape(), dtype=np.int64)
    for m in range(len(rem) - 1, d - 1, -1):
        top = rem[m]
        if not np.any(top):
            continue
        k = m - d
        c = F.div(top, F.frobenius(lead, f.s * k))
        quo[k] = c
        rem[k : m + 1] = F.sub(rem[k : m + 1], F.mul(c, F.frobenius(g.coeffs, f.s * k)))
    return f._new(quo), f._new(rem[:d] if d else rem[:0])


def left_divmod(f: SkewPolynomial, g: SkewPolynomial) -> tuple[SkewPolynomial, SkewPolynomial]:
    """``f = g * quotient + remainder`` with ``deg remainder < deg g``."""
    f._same(g)
    if g.is_zero():
        raise ZeroDivision("division by the zero polynomial")
    F = f.field
    lead = g.coeffs[-1]
    _require_unit(g, lead, "leading coefficient of the divisor")
    d = len(g.coeffs) - 1
    rem = f._padded(len(f.coeffs)).copy()
    nq = max(len(f.coeffs) - d, 0)
    quo = np.zeros((nq,) + f._scalar_shape(), dtype=np.int64)
    for m in range(len(rem) - 1, d - 1, -1):
        top = rem[m]
        if not np.any(top):
            continue
        k = m - d
        # g * c x^k has leading coefficient lead * theta^d(c)
        c = F.frobenius(F.div(top, lead), -f.s * d)
        quo[k] = c
        for j in range(d + 1):
            rem[j + k] = F.sub(rem[j + k], F.mul(g.coeffs[j], F.frobenius(c, f.s * j)))
    return f._new(quo), f._new(rem[:d] if d else rem[:0])


def right_divides(g: SkewPolynomial, f: SkewPolynomial) -> bool:
    return right_divmod(f, g)[1].is_zero()


def monic_normalize(g: SkewPolynomial) -> SkewPolynomial:
    """Left-multiply by the inverse of the leading coefficient."""
    if g.is_zero():
        raise ZeroDivision("the zero polynomial cannot be made monic")
    lead = g.coeffs[-1]
    _require_unit(g, lead, "leading coefficient")
    return g._new(g.field.mul(g.field.inv(lead), g.coeffs))


def _field_only(*polys):
    for p in polys:
        if p.is_ring:
            raise DomainError("only defined for skew polynomials over a field")
        if p.is_zero():
            raise DomainError("zero polynomial not allowed")


def lclm(f1: SkewPolynomial, f2: SkewPolynomial) -> SkewPolynomial:
    """Least common left multiple by the extended right Euclidean algorithm.

    With ``r_i = u_i f1 + v_i f2`` along the remainder sequence, the first
    vanishing remainder gives ``u f1 = -v f2``, the lclm up to a unit.
    """
    f1._same(f2)
    _field_only(f1, f2)
    one = SkewPolynomial.constant(f1.base, f1.s, 1)
    zero = one - one
    r0, r1 = f1, f2
    u0, u1 = one, zero
    while not r1.is_zero():
        quo, rem = right_divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - quo * u1
    return monic_normalize(u1 * f1)


def gcrd(f1: SkewPolynomial, f2: SkewPolynomial) -> SkewPolynomial:
    """Monic greatest common right divisor."""
    f1._same(f2)
    _field_only(f1, f2)
    r0, r1 = f1, f2
    while not r1.is_zero():
        r0, r1 = r1, right_divmod(r0, r1)[1]
    return monic_normalize(r0)


def skew_reciprocal(g: SkewPolynomial) -> SkewPolynomial:
    """``g*(x) = sum_j theta^j(a_{k-j}) x^j`` for ``g`` of degree ``k``."""
    if g.is_zero():
        raise DomainError("the zero polynomial has no reciprocal")
    k = len(g.coeffs) - 1
    F = g.field
    out = np.stack([F.frobenius(g.coeffs[k - j], g.s * j) for j in range(k + 1)])
    return g._new(out)


def left_monic_reciprocal(g: SkewPolynomial) -> SkewPolynomial:
    """``g^natural = theta^k(a_0)^{-1} * g*``; needs a nonzero constant term."""
    if g.is_zero():
        raise DomainError("the zero polynomial has no reciprocal")
    a0 = g.coeffs[0]
    if np.any(np.asarray(a0) == 0):
        raise DomainError("left monic reciprocal needs an invertible constant term")
    k = len(g.coeffs) - 1
    F = g.field
    return skew_reciprocal(g).lmul(np.asarray(F.inv(F.frobenius(a0, g.s * k))))


def ring_skew_decompose(F: SkewPolynomial) -> tuple[SkewPolynomial, ...]:
    """Split a polynomial over R_q[x; Theta_theta] into its ``q`` CRT components."""
    if not F.is_ring:
        raise DomainError("decomposition needs a polynomial over R_q")
    field = F.field
    return tuple(
        SkewPolynomial(field, F.s, F.coeffs[:, i] if len(F.coeffs) else [])
        for i in range(F.base.q)
    )


def ring_skew_recompose(ring: RingRq, components) -> SkewPolynomial:
    """``sum_i eta_i F_i`` from ``q`` field skew polynomials sharing one theta."""
    components = list(components)
    if len(components) != ring.q:
        raise DomainError(f"need {ring.q} components, got {len(components)}")
    s = components[0].s
    for c in components:
        if c.is_ring or c.field != ring.field or c.s != s:
            raise MismatchError("components must share the base field and theta")
    L = max(len(c.coeffs) for c in components)
    arr = np.zeros((L, ring.q), dtype=np.int64)
    for i, c in enumerate(components):
        arr[: len(c.coeffs), i] = c.coeffs
    return SkewPolynomial(ring, s, arr)
