"""The ring R_q = F_q[v]/(v^q - v) in Chinese-remainder coordinates.

An element is stored as the tuple of its values at the field points
``alpha_0, ..., alpha_{q-1}`` (the enumeration order of :mod:`skewcodes.gf`).
In these coordinates addition and multiplication are componentwise, the
primitive idempotent ``eta_i`` is the ``i``-th unit vector, and an element is a
unit exactly when no coordinate vanishes.  The ``v``-basis is a presentation
layer reached by evaluation (``from_poly_basis``) and interpolation
(``to_poly_basis``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import _text
from .errors import DomainError, GuardExceeded, MismatchError, NotAUnitError, ParseError
from .gf import FieldAutomorphism, FieldElement, GaloisField, make_field

MAX_ENUM_Q = 6


def _poly_mul(F: GaloisField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    for i, ai in enumerate(a):
        if ai:
            out[i : i + len(b)] = F.add(out[i : i + len(b)], F.mul(int(ai), b))
    return out


class RingRq:
    """R_q over a given base field."""

    def __init__(self, field: GaloisField):
        self.field = field
        self.q = field.q

    @cached_property
    def evaluation_matrix(self) -> np.ndarray:
        """``V[i, j] = alpha_i ** j`` (with ``0**0 = 1``)."""
        F, q = self.field, self.q
        return np.stack([np.asarray(F.power(np.arange(q), j)) for j in range(q)], axis=1)

    @cached_property
    def idempotent_matrix(self) -> np.ndarray:
        """Row ``i`` holds the ``v``-basis coefficients of ``eta_i = 1 - (v - alpha_i)^(q-1)``."""
        F, q = self.field, self.q
        rows = np.zeros((q, q), dtype=np.int64)
        for i in range(q):
            lin = np.array([F.neg(i), 1], dtype=np.int64)
            acc = np.array([1], dtype=np.int64)
            for _ in range(q - 1):
                acc = _poly_mul(F, acc, lin)
            row = F.neg(acc)
            row[0] = F.add(int(row[0]), 1)
            rows[i] = row
        return rows

    # -- constructors ----------------------------------------------------------

    def element(self, coords) -> "RingElement":
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.q:
            raise DomainError(f"R_{self.q} elements have {self.q} coordinates, got {len(coords)}")
        return RingElement(self, coords)

    def scalar(self, c) -> "RingElement":
        """Embed a field element (or integer) as a constant."""
        idx = self.field(c).index
        return RingElement(self, (idx,) * self.q)

    @property
    def zero(self) -> "RingElement":
        return self.scalar(0)

    @property
    def one(self) -> "RingElement":
        return self.scalar(1)

    @property
    def v(self) -> "RingElement":
        return self.element(range(self.q))

    def from_v_indices(self, coeffs) -> "RingElement":
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape != (self.q,):
            raise DomainError(f"expected {self.q} v-basis coefficients, got {coeffs.shape[0]}")
        V = self.evaluation_matrix
        F = self.field
        vals = np.zeros(self.q, dtype=np.int64)
        for j in range(self.q):
            vals = F.add(vals, F.mul(V[:, j], int(coeffs[j])))
        return RingElement(self, tuple(int(x) for x in vals))

    def to_v_indices(self, coords) -> np.ndarray:
        F = self.field
        E = self.idempotent_matrix
        out = np.zeros(self.q, dtype=np.int64)
        for i, c in enumerate(coords):
            if c:
                out = F.add(out, F.mul(int(c), E[i]))
        return out

    def __call__(self, value) -> "RingElement":
        if isinstance(value, RingElement):
            if value.ring != self:
                raise MismatchError("element of another ring")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.scalar(value)

    # -- enumeration ------------------------------------------------------------

    def elements(self, limit: int = 2**20):
        """All elements, generated from the ``v``-basis coefficient tuples in order."""
        if self.q**self.q > limit:
            raise GuardExceeded(f"R_{self.q} has {self.q}^{self.q} elements")
        for coeffs in itertools.product(range(self.q), repeat=self.q):
            yield self.from_v_indices(coeffs)

    def units(self) -> list["RingElement"]:
        return [a for a in self.elements() if a.is_unit()]

    # -- text ------------------------------------------------------------------

    def parse(self, text: str) -> "RingElement":
        """Parse ``[c_0,...,c_{q-1}]`` (coordinates) or a ``v``-polynomial like ``1 + a*v + v^3``."""
        text = text.strip()
        F = self.field
        if text.startswith("[") and text.endswith("]"):
            parts = _text.split_list(text[1:-1])
            return self.element([F.parse(s) for s in parts])

        def scalar(s):
            s = s.strip()
            if s.startswith("[") or "v" in s:
                return self.parse(s)
            return self.scalar(F(s))

        terms = _text.parse_polynomial(
            text, "v", scalar, lambda a, b: a * b, lambda a, b: a + b, lambda a: -a, self.one
        )
        acc = self.zero
        vpow = self.v
        for deg, c in terms.items():
            acc = acc + c * (vpow**deg)
        return acc

    def __eq__(self, other):
        return isinstance(other, RingRq) and self.field == other.field

    def __hash__(self):
        return hash(("R", self.field.p, self.field.r))

    def __repr__(self):
        return f"RingRq({self.field!r})"

    def __str__(self):
        return f"R_{self.q}"


@lru_cache(maxsize=None)
def make_ring(p: int, r: int = 1) -> RingRq:
    return RingRq(make_field(p, r))


@dataclass(frozen=True)
class RingElement:
    ring: RingRq
    coords: tuple[int, ...]

    @property
    def field(self) -> GaloisField:
        return self.ring.field

    def _other(self, other) -> tuple[int, ...]:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise MismatchError(f"{self.ring} vs {other.ring}")
            return other.coords
        return self.ring.scalar(other).coords

    def _wrap(self, arr):
        return RingElement(self.ring, tuple(int(x) for x in arr))

    def __add__(self, other):
        return self._wrap(self.field.add(np.array(self.coords), np.array(self._other(other))))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(np.array(self.coords), np.array(self._other(other))))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(np.array(self._other(other)), np.array(self.coords)))

    def __mul__(self, other):
        return self._wrap(self.field.mul(np.array(self.coords), np.array(self._other(other))))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.field.neg(np.array(self.coords)))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._wrap(self.field.power(np.array(self.coords), e))

    def is_unit(self) -> bool:
        return all(c != 0 for c in self.coords)

    def inverse(self) -> "RingElement":
        if not self.is_unit():
            raise NotAUnitError(f"{self} is a zero divisor")
        return self._wrap(self.field.inv(np.array(self.coords)))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def support(self) -> "IdealDescriptor":
        return IdealDescriptor(self.ring, frozenset(i for i, c in enumerate(self.coords) if c))

    def component(self, i: int) -> FieldElement:
        """``phi_i(self)``."""
        return FieldElement(self.field, self.coords[i])

    def to_poly_basis(self) -> list[FieldElement]:
        return [FieldElement(self.field, int(c)) for c in self.ring.to_v_indices(self.coords)]

    def __str__(self):
        F = self.field
        coeffs = self.ring.to_v_indices(self.coords)
        terms = [(j, F.format(int(c))) for j, c in enumerate(coeffs) if c]
        return _text.format_polynomial(terms, "v")

    def crt_str(self) -> str:
        return "[" + ",".join(self.field.format(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"<{self} in {self.ring}>"


@dataclass(frozen=True)
class IdealDescriptor:
    """The ideal ``I_A`` generated by ``sum_{i in A} eta_i``."""

    ring: RingRq
    A: frozenset

    @property
    def size(self) -> int:
        return self.ring.q ** len(self.A)

    @property
    def generator(self) -> RingElement:
        return self.ring.element([1 if i in self.A else 0 for i in range(self.ring.q)])

    def complement(self) -> "IdealDescriptor":
        """The annihilator ``I_{A-bar}``, which is also the dual of ``I_A`` as a length-1 code."""
        return IdealDescriptor(self.ring, frozenset(range(self.ring.q)) - self.A)

    def __contains__(self, a: RingElement) -> bool:
        return a.support().A <= self.A


def ideals(ring: RingRq) -> list[IdealDescriptor]:
    """All ``2^q`` ideals, ordered by the bitmask of ``A``."""
    q = ring.q
    return [
        IdealDescriptor(ring, frozenset(i for i in range(q) if mask >> i & 1))
        for mask in range(2**q)
    ]


@dataclass(frozen=True)
class RingAutomorphism:
    """``Theta_{theta, sigma}: sum a_i eta_i -> sum theta(a_i) eta_{sigma(i)}``.

    ``sigma`` is stored as the tuple ``(sigma(0), ..., sigma(q-1))``.
    """

    ring: RingRq
    theta: FieldAutomorphism
    sigma: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(int(s) for s in self.sigma))
        if sorted(self.sigma) != list(range(self.ring.q)):
            raise DomainError(f"sigma {self.sigma} is not a permutation of 0..{self.ring.q - 1}")
        if self.theta.field != self.ring.field:
            raise MismatchError("theta acts on a different field")

    @classmethod
    def frobenius(cls, ring: RingRq, s: int = 1) -> "RingAutomorphism":
        """``Theta_theta`` with ``sigma = id``."""
        return cls(ring, FieldAutomorphism(ring.field, s), tuple(range(ring.q)))

    def apply_coords(self, coords: np.ndarray) -> np.ndarray:
        """Act on an array whose last axis holds CRT coordinates."""
        coords = np.asarray(coords, dtype=np.int64)
        out = np.empty_like(coords)
        out[..., list(self.sigma)] = self.theta(coords)
        return out

    def __call__(self, a: RingElement) -> RingElement:
        if a.ring != self.ring:
            raise MismatchError("automorphism applied to an element of another ring")
        return a._wrap(self.apply_coords(np.array(a.coords)))

    def __mul__(self, other: "RingAutomorphism") -> "RingAutomorphism":
        """Composition ``self o other`` (``other`` applied first)."""
        sigma = tuple(self.sigma[other.sigma[i]] for i in range(self.ring.q))
        return RingAutomorphism(self.ring, self.theta * other.theta, sigma)

    def inverse(self) -> "RingAutomorphism":
        inv = [0] * self.ring.q
        for i, s in enumerate(self.sigma):
            inv[s] = i
        return RingAutomorphism(self.ring, self.theta.inverse(), tuple(inv))

    @property
    def sigma_inverse(self) -> tuple[int, ...]:
        return self.inverse().sigma

    @property
    def is_identity(self) -> bool:
        return self.theta.is_identity and self.sigma == tuple(range(self.ring.q))

    @property
    def is_sigma_identity(self) -> bool:
        return self.sigma == tuple(range(self.ring.q))


# -- operation-style API -------------------------------------------------------

def from_poly_basis(ring: RingRq, coeffs) -> RingElement:
    """Evaluate ``r_0 + r_1 v + ... + r_{q-1} v^{q-1}`` at every field point."""
    F = ring.field
    coeffs = list(coeffs)
    if len(coeffs) != ring.q:
        raise DomainError(f"expected {ring.q} coefficients, got {len(coeffs)}")
    return ring.from_v_indices([F(c).index for c in coeffs])


def to_poly_basis(a: RingElement) -> list[FieldElement]:
    return a.to_poly_basis()


def idempotent(ring: RingRq, i: int) -> RingElement:
    if not 0 <= i < ring.q:
        raise DomainError(f"idempotent index {i} out of range for {ring}")
    return ring.element([1 if j == i else 0 for j in range(ring.q)])


def ring_arith(a: RingElement, b: RingElement, op: str) -> RingElement:
    if a.ring != b.ring:
        raise MismatchError("operands from different rings")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "sub":
        return a - b
    raise ValueError(f"unknown operation {op!r}")


def is_unit(a: RingElement) -> bool:
    return a.is_unit()


def support(a: RingElement) -> IdealDescriptor:
    return a.support()


def apply_ring_automorphism(T: RingAutomorphism, a: RingElement) -> RingElement:
    return T(a)


def automorphism_count(ring: RingRq) -> int:
    return ring.field.r * math.factorial(ring.q)


def enumerate_automorphisms(ring: RingRq, max_q: int = MAX_ENUM_Q) -> list[RingAutomorphism]:
    """All ``r * q!`` automorphisms ``Theta_{theta, sigma}``."""
    if ring.q > max_q:
        raise GuardExceeded(f"refusing to enumerate {automorphism_count(ring)} automorphisms of {ring}")
    return [
        RingAutomorphism(ring, FieldAutomorphism(ring.field, s), sigma)
        for s in range(ring.field.r)
        for sigma in itertools.permutations(range(ring.q))
    ]
