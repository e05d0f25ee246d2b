"""Skew constacyclic codes over F_q and over R_q with ``Theta_theta``.

Words are integer arrays of element indices.  A word over R_q has shape
``(n, q)``: position ``j`` holds the CRT coordinates of its ``j``-th entry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .codes import LinearCode, RingLinearCode
from .errors import (
    ConsistencyAlarm,
    DivisibilityError,
    DomainError,
    GuardExceeded,
    NotAUnitError,
    NotCovered,
    ZeroDivision,
)
from .gf import FieldAutomorphism, GaloisField, is_prime
from .ring import RingAutomorphism, RingElement, RingRq
from .skew_poly import (
    SkewPolynomial,
    left_divmod,
    monic_normalize,
    right_divmod,
    ring_skew_recompose,
    skew_reciprocal,
)

DIVISOR_GUARD = 2**20
RECIPROCAL_GUARD = 2**16

CYCLIC = "cyclic"
NEGACYCLIC = "negacyclic"
NOT_SELF_DUAL = "not_self_dual"


def _field_scalar(F: GaloisField, lam) -> int:
    if isinstance(lam, (int, np.integer)) and not isinstance(lam, bool):
        return F(int(lam)).index
    return F(lam).index


def _ring_unit(R: RingRq, lam) -> RingElement:
    if isinstance(lam, RingElement):
        u = lam
    elif isinstance(lam, (tuple, list, np.ndarray)):
        u = R.element(lam)
    else:
        u = R(lam)
    if not u.is_unit():
        raise NotAUnitError(f"lambda = {u} is not a unit of {R}")
    return u


# -- shifts ------------------------------------------------------------------------

def shift_field(F: GaloisField, w, s: int, lam) -> np.ndarray:
    """``T_{theta,lambda}(w) = (lambda theta(w_{n-1}), theta(w_0), ..., theta(w_{n-2}))``.

    Works on a single word or on the rows of a 2-d array.
    """
    lam = _field_scalar(F, lam)
    if lam == 0:
        raise ZeroDivision("the shift constant must be nonzero")
    w = np.asarray(w, dtype=np.int64)
    t = F.frobenius(w, s)
    out = np.roll(t, 1, axis=-1)
    out[..., 0] = F.mul(lam, out[..., 0])
    return out


def shift_ring(R: RingRq, w, T: RingAutomorphism, lam) -> np.ndarray:
    """``T_{Theta,lambda}`` on words of shape ``(..., n, q)``."""
    lam = _ring_unit(R, lam)
    w = np.asarray(w, dtype=np.int64)
    t = T.apply_coords(w)
    out = np.roll(t, 1, axis=-2)
    out[..., 0, :] = R.field.mul(np.array(lam.coords), out[..., 0, :])
    return out


@dataclass(frozen=True)
class TwistSpec:
    """Data of a multi-twisted shift: ``theta``, block permutation ``sigma``, constants.

    ``lambdas`` holds element indices, one per block.
    """

    field: GaloisField
    s: int
    sigma: tuple[int, ...]
    lambdas: tuple[int, ...]

    def __post_init__(self):
        q = len(self.sigma)
        if sorted(self.sigma) != list(range(q)):
            raise DomainError(f"sigma {self.sigma} is not a permutation")
        if len(self.lambdas) != q:
            raise DomainError("one constant per block is required")
        if any(int(x) == 0 for x in self.lambdas):
            raise ZeroDivision("multi-twisted constants must be nonzero")

    @classmethod
    def from_ring(cls, T: RingAutomorphism, lam: RingElement) -> "TwistSpec":
        return cls(T.ring.field, T.theta.s, T.sigma, tuple(lam.coords))

    @property
    def sigma_inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.sigma)
        for i, t in enumerate(self.sigma):
            inv[t] = i
        return tuple(inv)


def multi_twisted_shift(blocks, ts: TwistSpec) -> np.ndarray:
    """Output block ``t`` is ``T_{theta, lambda_t}`` of input block ``sigma^{-1}(t)``.

    ``blocks`` has shape ``(..., q, n)``; a flat Gray word of length ``qn`` is
    also accepted and returned flat.
    """
    blocks = np.asarray(blocks, dtype=np.int64)
    q = len(ts.sigma)
    flat = blocks.ndim == 1
    if flat:
        blocks = blocks.reshape(q, -1)
    src = blocks[..., list(ts.sigma_inverse), :]
    out = np.empty_like(blocks)
    for t in range(q):
        lam_t = ts.field.element(int(ts.lambdas[t]))
        out[..., t, :] = shift_field(ts.field, src[..., t, :], ts.s, lam_t)
    return out.reshape(-1) if flat else out


def is_shift_closed_field(C: LinearCode, s: int, lam) -> bool:
    if C.k == 0:
        return True
    return C.contains(shift_field(C.field, C.G, s, lam))


def is_shift_closed_ring(C: RingLinearCode, T: RingAutomorphism, lam) -> bool:
    """Closure of a ring code under ``T_{Theta,lambda}``.

    The shift is ``Theta``-semilinear, so testing the module generators is enough.
    """
    G = C.generator_matrix()
    if G.shape[0] == 0:
        return True
    return C.contains(shift_ring(C.ring, G, T, lam))


def is_multi_twisted(C: LinearCode, ts: TwistSpec) -> bool:
    """Closure of a length ``qn`` code over F_q under the multi-twisted shift."""
    if C.k == 0:
        return True
    q = len(ts.sigma)
    if C.n % q:
        raise DomainError(f"length {C.n} is not a multiple of {q}")
    shifted = multi_twisted_shift(C.G.reshape(C.k, q, -1), ts).reshape(C.k, -1)
    return C.contains(shifted)


# -- codes over a field ----------------------------------------------------------

class SkewConstacyclicCodeF:
    """The left ideal ``<g>`` in ``F_q[x; theta] / <x^n - lambda>``."""

    def __init__(self, g: SkewPolynomial, n: int, lam):
        if g.is_ring:
            raise DomainError("use SkewConstacyclicCodeR for generators over R_q")
        if g.is_zero() or not g.is_monic():
            raise DomainError(f"generator {g} must be monic")
        if g.degree > n:
            raise DomainError(f"generator degree {g.degree} exceeds the length {n}")
        F = g.field
        lam = _field_scalar(F, lam)
        if lam == 0:
            raise ZeroDivision("lambda must be nonzero")
        if int(g.coeffs[0]) == 0:
            raise DivisibilityError(f"generator {g} has zero constant term")
        rem = right_divmod(SkewPolynomial.x_n_minus(F, g.s, n, F.element(lam)), g)[1]
        if not rem.is_zero():
            raise DivisibilityError(
                f"{g} does not right-divide x^{n} - ({F.format(lam)}); remainder {rem}", rem
            )
        self.g = g
        self.n = n
        self.lam = lam
        self._code = None

    @property
    def field(self) -> GaloisField:
        return self.g.field

    @property
    def s(self) -> int:
        return self.g.s

    @property
    def theta(self) -> FieldAutomorphism:
        return self.g.theta

    @property
    def k(self) -> int:
        return self.n - int(self.g.degree)

    @property
    def modulus(self) -> SkewPolynomial:
        return SkewPolynomial.x_n_minus(self.field, self.s, self.n, self.field.element(self.lam))

    def generator_matrix(self) -> np.ndarray:
        """Rows are the coefficient words of ``g, x g, ..., x^{k-1} g``."""
        rows = [self.g.shift(j).to_word(self.n) for j in range(self.k)]
        return np.array(rows, dtype=np.int64).reshape(self.k, self.n)

    @property
    def code(self) -> LinearCode:
        if self._code is None:
            self._code = LinearCode(self.field, self.n, self.generator_matrix())
        return self._code

    def is_closed(self) -> bool:
        return is_shift_closed_field(self.code, self.s, self.field.element(self.lam))

    def is_self_dual(self) -> bool:
        return self.code.is_self_dual()

    def __eq__(self, other):
        if not isinstance(other, SkewConstacyclicCodeF):
            return NotImplemented
        return (self.g, self.n, self.lam) == (other.g, other.n, other.lam)

    def __hash__(self):
        return hash((self.g, self.n, self.lam))

    def __repr__(self):
        return (
            f"SkewConstacyclicCodeF(<{self.g}>, n={self.n}, "
            f"lambda={self.field.format(self.lam)}, s={self.s})"
        )


def code_from_generator_field(g: SkewPolynomial, n: int, lam=1) -> SkewConstacyclicCodeF:
    return SkewConstacyclicCodeF(g, n, lam)


def dual_constant(F: GaloisField, s: int, a0: int, n: int, k: int, lam: int) -> int:
    """``lambda* = theta^n(a_0) / (a_0 theta^{n-k}(lambda))``."""
    num = F.frobenius(a0, s * n)
    den = F.mul(a0, F.frobenius(lam, s * (n - k)))
    return int(F.div(num, den))


def dual_field(
    C: SkewConstacyclicCodeF,
    constant_rule: Callable[[GaloisField, int, int, int, int, int], int] = dual_constant,
) -> SkewConstacyclicCodeF:
    """Dual through the reciprocal of the check polynomial.

    Solve ``x^n - theta^{-k}(lambda) = g h`` by left division, then the dual is
    ``<h*>`` (made monic) with constant ``constant_rule(...)``.
    """
    F, s, n, k = C.field, C.s, C.n, C.k
    target_const = F.frobenius(C.lam, -s * k)
    target = SkewPolynomial.x_n_minus(F, s, n, F.element(int(target_const)))
    h, rem = left_divmod(target, C.g)
    if not rem.is_zero():
        raise ConsistencyAlarm(f"{C.g} does not left-divide {target}; remainder {rem}")
    hstar = monic_normalize(skew_reciprocal(h))
    lam_star = constant_rule(F, s, int(C.g.coeffs[0]), n, k, C.lam)
    return SkewConstacyclicCodeF(hstar, n, F.element(lam_star))


# -- codes over R_q ----------------------------------------------------------------

class SkewConstacyclicCodeR:
    """``C = <eta_0 g_0, ..., eta_{q-1} g_{q-1}>`` over ``R_q[x; Theta_theta]``."""

    def __init__(self, ring: RingRq, gens, n: int, lam):
        gens = tuple(gens)
        if len(gens) != ring.q:
            raise DomainError(f"need {ring.q} component generators, got {len(gens)}")
        lam = _ring_unit(ring, lam)
        s = gens[0].s
        comps = []
        for i, g in enumerate(gens):
            if g.is_ring or g.field != ring.field or g.s != s:
                raise DomainError("component generators must share the base field and theta")
            try:
                comps.append(SkewConstacyclicCodeF(g, n, ring.field.element(lam.coords[i])))
            except DivisibilityError as e:
                raise DivisibilityError(f"component {i}: {e}", e.remainder) from None
        self.ring = ring
        self.n = n
        self.lam = lam
        self.components = tuple(comps)

    @property
    def s(self) -> int:
        return self.components[0].s

    @property
    def gens(self) -> tuple[SkewPolynomial, ...]:
        return tuple(c.g for c in self.components)

    @property
    def automorphism(self) -> RingAutomorphism:
        return RingAutomorphism.frobenius(self.ring, self.s)

    def principal_generator(self) -> SkewPolynomial:
        return ring_skew_recompose(self.ring, self.gens)

    @property
    def rank(self) -> int:
        return max(c.k for c in self.components)

    @property
    def code(self) -> RingLinearCode:
        return RingLinearCode(self.ring, [c.code for c in self.components])

    def generator_matrix(self) -> np.ndarray:
        """Rows ``x^j g mod (x^n - lambda)`` for ``j < rank``, shape ``(rank, n, q)``."""
        g = self.principal_generator()
        mod = SkewPolynomial.x_n_minus(self.ring, self.s, self.n, self.lam)
        rows = []
        for j in range(self.rank):
            rows.append(right_divmod(g.shift(j), mod)[1].to_word(self.n))
        return np.array(rows, dtype=np.int64).reshape(self.rank, self.n, self.ring.q)

    def divides_modulus(self) -> bool:
        """Check ``(sum eta_i h_i) * g = x^n - lambda`` by multiplying in R_q[x; Theta].

        The leading coefficient of ``g`` is a zero divisor when the component
        degrees differ, so plain right division over R_q is not available.
        """
        mod = SkewPolynomial.x_n_minus(self.ring, self.s, self.n, self.lam)
        cofactors = []
        for c in self.components:
            quo, rem = right_divmod(c.modulus, c.g)
            if not rem.is_zero():
                return False
            cofactors.append(quo)
        h = ring_skew_recompose(self.ring, cofactors)
        return h * self.principal_generator() == mod

    def is_closed(self) -> bool:
        return is_shift_closed_ring(self.code, self.automorphism, self.lam)

    def is_self_dual(self) -> bool:
        return self.code.is_self_dual()

    def __eq__(self, other):
        if not isinstance(other, SkewConstacyclicCodeR):
            return NotImplemented
        return (self.ring, self.n, self.lam, self.components) == (
            other.ring, other.n, other.lam, other.components,
        )

    def __hash__(self):
        return hash((self.ring, self.n, self.lam, self.components))

    def __repr__(self):
        return (
            f"SkewConstacyclicCodeR(<{self.principal_generator()}>, n={self.n}, "
            f"lambda={self.lam.crt_str()}, s={self.s})"
        )


def code_from_components_ring(ring: RingRq, gens, n: int, lam=1) -> SkewConstacyclicCodeR:
    return SkewConstacyclicCodeR(ring, gens, n, lam)


def principal_generator(C: SkewConstacyclicCodeR) -> SkewPolynomial:
    return C.principal_generator()


def dual_ring(C: SkewConstacyclicCodeR, constant_rule=dual_constant) -> SkewConstacyclicCodeR:
    duals = [dual_field(c, constant_rule) for c in C.components]
    lam_star = C.ring.element([d.lam for d in duals])
    return SkewConstacyclicCodeR(C.ring, [d.g for d in duals], C.n, lam_star)


# -- enumeration -----------------------------------------------------------------

def _monic_candidates(F: GaloisField, d: int, guard: int) -> np.ndarray:
    """All ``(g_0, ..., g_{d-1})`` with ``g_0 != 0``, in lexicographic order of
    the coefficient tuple read from the top down."""
    count = (F.q - 1) * F.q ** (d - 1) if d else 1
    if count > guard:
        raise GuardExceeded(f"{count} candidates of degree {d} exceed the guard {guard}")
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    idx = np.arange(count, dtype=np.int64)
    out = np.empty((count, d), dtype=np.int64)
    # g_0 is the least significant digit (radix q-1, shifted to 1..q-1)
    out[:, 0] = idx % (F.q - 1) + 1
    idx //= F.q - 1
    for j in range(1, d):
        out[:, j] = idx % F.q
        idx //= F.q
    return out


def _x_power_mod(F: GaloisField, s: int, low: np.ndarray, n: int) -> np.ndarray:
    """``x^n`` right-reduced modulo each monic ``x^d + low`` (vectorised)."""
    N, d = low.shape
    r = F.neg(low)  # x^d
    for _ in range(d, n):
        t = F.frobenius(r, s)
        top = t[:, -1:]
        r = np.concatenate([np.zeros((N, 1), dtype=np.int64), t[:, :-1]], axis=1)
        r = F.sub(r, F.mul(top, low))
    return r


def right_divisors(
    F: GaloisField, s: int, n: int, lam, degree: int | None = None, guard: int = DIVISOR_GUARD
) -> list[SkewPolynomial]:
    """All monic right divisors of ``x^n - lambda`` (optionally of one degree).

    Deterministic order: by degree, then coefficients read from the top down.
    """
    lam = _field_scalar(F, lam)
    if lam == 0:
        raise ZeroDivision("lambda must be nonzero")
    degrees = range(n + 1) if degree is None else [degree]
    out = []
    for d in degrees:
        if d < 0 or d > n:
            continue
        if d == 0:
            out.append(SkewPolynomial.constant(F, s, 1))
            continue
        low = _monic_candidates(F, d, guard)
        r = _x_power_mod(F, s, low, n)
        want = np.zeros(d, dtype=np.int64)
        want[0] = lam
        hits = low[np.all(r == want, axis=1)]
        polys = [SkewPolynomial(F, s, np.append(h, 1)) for h in hits]
        out.extend(sorted(polys, key=SkewPolynomial.sort_key))
    return out


def skew_constacyclic_codes(F: GaloisField, s: int, n: int, lam, guard: int = DIVISOR_GUARD):
    lam = F(lam)
    return [SkewConstacyclicCodeF(g, n, lam) for g in right_divisors(F, s, n, lam, guard=guard)]


def solve_reciprocal_equation(f: SkewPolynomial, guard: int = RECIPROCAL_GUARD) -> list[SkewPolynomial]:
    """All monic ``g`` with ``g(0) != 0`` and ``g^natural * g = f``."""
    if f.is_ring:
        raise DomainError("reciprocal equations are solved over a field")
    if f.is_zero() or f.degree % 2:
        raise DomainError(f"need a polynomial of even degree, got degree {f.degree}")
    F, s = f.field, f.s
    m = int(f.degree) // 2
    cands = _monic_candidates(F, m, guard)
    out = []
    for low in cands:
        g = SkewPolynomial(F, s, np.append(low, 1))
        k = m
        a0 = int(g.coeffs[0])
        gnat = skew_reciprocal(g).lmul(np.asarray(F.inv(F.frobenius(a0, s * k))))
        if gnat * g == f:
            out.append(g)
    return sorted(out, key=SkewPolynomial.sort_key)


def self_dual_generators(
    F: GaloisField, s: int, n: int, lam, guard: int = DIVISOR_GUARD
) -> list[SkewPolynomial]:
    """Generators of all self-dual skew constacyclic codes (matrix test)."""
    lam = _field_scalar(F, lam)
    if n % 2:
        return []
    out = []
    for g in right_divisors(F, s, n, F.element(lam), degree=n // 2, guard=guard):
        if SkewConstacyclicCodeF(g, n, F.element(lam)).is_self_dual():
            out.append(g)
    return out


def self_dual_ring_codes(R: RingRq, s: int, n: int, lam, guard: int = DIVISOR_GUARD):
    """Every self-dual ``Theta_theta``-``lambda``-constacyclic code over R_q."""
    lam = _ring_unit(R, lam)
    per = [
        self_dual_generators(R.field, s, n, R.field.element(lam.coords[i]), guard) for i in range(R.q)
    ]
    return [SkewConstacyclicCodeR(R, gens, n, lam) for gens in itertools.product(*per)]


# -- existence and classification -------------------------------------------------

def _two_adic(m: int) -> int:
    e = 0
    while m % 2 == 0:
        m //= 2
        e += 1
    return e


def self_dual_exists(p: int, r: int, s: int, k: int, kind: str) -> bool:
    """Existence of a self-dual skew cyclic / negacyclic code of dimension ``k``.

    ``theta`` is the Frobenius power fixing ``F_{p^s}``.  Only odd ``p`` is
    covered; the answer is the same over F_q and over R_q.
    """
    if kind not in (CYCLIC, NEGACYCLIC):
        raise DomainError(f"kind must be {CYCLIC!r} or {NEGACYCLIC!r}")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        raise NotCovered("existence criteria assume odd characteristic")
    if r < 1 or s < 1 or r % s:
        raise DomainError(f"s = {s} must divide r = {r}")
    if k < 1:
        raise DomainError("dimension must be positive")
    q = p**r
    if q % 4 == 1:
        if kind == CYCLIC:
            return p % 4 == 3 and r % 2 == 0 and (s * k) % 2 == 1
        return p % 4 == 1 or (p % 4 == 3 and r % 2 == 0 and (s * k) % 2 == 0)
    if kind == CYCLIC:
        return False
    mu = _two_adic(p + 1)
    return k % 2 ** (mu - 1) == 0


def self_dual_constacyclic_classifier(C) -> str:
    """``cyclic``, ``negacyclic`` or ``not_self_dual`` for an even-length code.

    A self-dual code whose constant is neither ``1`` nor ``-1`` (uniformly)
    raises ConsistencyAlarm.
    """
    if C.n % 2:
        raise DomainError(f"length {C.n} is odd")
    if not C.is_self_dual():
        return NOT_SELF_DUAL
    if isinstance(C, SkewConstacyclicCodeR):
        F = C.ring.field
        lams = set(C.lam.coords)
    else:
        F = C.field
        lams = {C.lam}
    if lams == {F.one.index}:
        return CYCLIC
    if lams == {F.minus_one.index}:
        return NEGACYCLIC
    shown = C.lam.crt_str() if isinstance(C, SkewConstacyclicCodeR) else F.format(C.lam)
    raise ConsistencyAlarm(f"self-dual code with constant {shown}, neither 1 nor -1")
