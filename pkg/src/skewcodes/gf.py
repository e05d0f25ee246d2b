"""Finite fields F_{p^r} backed by exponential/logarithm tables.

Elements are stored by their position in the canonical enumeration

    alpha_0 = 0,  alpha_i = beta^(i-1)   (1 <= i <= q-1)

so index 0 is zero, index 1 is one and index ``i`` is ``beta**(i-1)``.  This
is a zero flag plus a discrete logarithm packed into one integer, which makes
multiplication, division and powers pure index arithmetic.  Addition goes
through a Zech logarithm table, or through full ``q x q`` tables for small
fields.

All arithmetic methods on :class:`GaloisField` are vectorised: they accept
Python ints or integer numpy arrays of indices and broadcast like numpy
ufuncs.  :class:`FieldElement` is the scalar wrapper used at API boundaries.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import FieldError, MismatchError, ParseError, ZeroDivision

DEFAULT_MAX_ORDER = 2**16
# full add/mul tables are built below this size
_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power ``q`` into ``(p, r)``."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    r = 0
    m = q
    while m % p == 0:
        m //= p
        r += 1
    if m != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, r


# -- dense polynomial helpers over F_p (ascending coefficient lists) ---------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(_trim(a)) - 1 >= dm:
        shift = len(a) - 1 - dm
        c = a[-1] * inv_lead % p
        for j, mj in enumerate(m):
            a[shift + j] = (a[shift + j] - c * mj) % p
    return a


def _poly_mulmod(a, b, m, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_rem(prod, m, p)


def _poly_powmod(a, e, m, p):
    result = [1]
    base = _poly_rem(a, m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _digits(v: int, p: int, r: int) -> list[int]:
    out = []
    for _ in range(r):
        out.append(v % p)
        v //= p
    return out


def _undigits(d, p: int) -> int:
    v = 0
    for c in reversed(d):
        v = v * p + c
    return v


def _is_irreducible(m: list[int], p: int) -> bool:
    r = len(m) - 1
    if r == 1:
        return True
    # trial division by every monic polynomial of degree 1..r//2
    for d in range(1, r // 2 + 1):
        for low in range(p**d):
            divisor = _digits(low, p, d) + [1]
            if not _trim(_poly_rem(m, divisor, p)):
                return False
    return True


def _canonical_modulus(p: int, r: int) -> tuple[int, ...]:
    # candidates x^r + c_{r-1} x^{r-1} + ... + c_0 in increasing integer
    # encoding, i.e. lexicographic on (c_{r-1}, ..., c_0)
    for low in range(p**r):
        m = _digits(low, p, r) + [1]
        if r > 1 and m[0] == 0:
            continue
        if _is_irreducible(m, p):
            return tuple(m)
    raise FieldError(f"no irreducible polynomial of degree {r} over F_{p}")  # pragma: no cover


class GaloisField:
    """The field F_{p^r}.

    Construction is deterministic: the modulus is the smallest monic
    irreducible polynomial of degree ``r`` (ordered by its coefficient tuple
    from the top down) and ``beta`` is the smallest primitive element in the
    integer encoding ``sum c_i p^i`` of the polynomial basis.
    """

    def __init__(self, p: int, r: int = 1, max_order: int = DEFAULT_MAX_ORDER):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if r < 1:
            raise FieldError(f"extension degree must be >= 1, got {r}")
        q = p**r
        if q > max_order:
            raise FieldError(f"field size {q} exceeds bound {max_order}")
        self.p = p
        self.r = r
        self.q = q
        self.modulus = _canonical_modulus(p, r)
        self._beta_int = self._find_primitive()
        self._build_tables()

    # -- construction -----------------------------------------------------

    def _find_primitive(self) -> int:
        p, r, q = self.p, self.r, self.q
        if q == 2:
            return 1
        m = list(self.modulus)
        exps = [(q - 1) // f for f in prime_factors(q - 1)]
        for cand in range(2, q):
            d = _trim(_digits(cand, p, r))
            if all(_trim(_poly_powmod(d, e, m, p)) != [1] for e in exps):
                return cand
        raise FieldError("no primitive element found")  # pragma: no cover

    def _build_tables(self):
        p, r, q = self.p, self.r, self.q
        m = list(self.modulus)
        beta = _digits(self._beta_int, p, r)
        # multiplication by beta as an r x r matrix over F_p
        cols = []
        for j in range(r):
            xj = [0] * j + [1]
            cols.append(_poly_mulmod(xj, beta, m, p) + [0] * r)
        mat = np.array([c[:r] for c in cols], dtype=np.int64).T
        weights = p ** np.arange(r, dtype=np.int64)

        exp = np.empty(q - 1, dtype=np.int64)
        vec = np.zeros(r, dtype=np.int64)
        vec[0] = 1
        for i in range(q - 1):
            exp[i] = int(vec @ weights)
            vec = (mat @ vec) % p
        idx_of_int = np.zeros(q, dtype=np.int64)
        idx_of_int[exp] = np.arange(1, q, dtype=np.int64)
        if len(set(exp.tolist())) != q - 1:
            raise FieldError("beta is not primitive")  # pragma: no cover
        int_of_idx = np.concatenate([[0], exp])

        self._int_of_idx = int_of_idx
        self._idx_of_int = idx_of_int
        self._weights = weights

        # Zech table: index of 1 + beta^k
        digits = (exp[:, None] // weights[None, :]) % p
        digits[:, 0] = (digits[:, 0] + 1) % p
        self._zech = idx_of_int[digits @ weights]

        self._neg_one = 1 if p == 2 else 1 + (q - 1) // 2
        self._tables = None
        if q <= _TABLE_LIMIT:
            a, b = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
            self._tables = (self._add_zech(a, b), self._mul_log(a, b))

    # -- raw index arithmetic ----------------------------------------------

    def _mul_log(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        res = (a + b - 2) % (self.q - 1) + 1
        return np.where((a == 0) | (b == 0), 0, res)

    def _add_zech(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        d = (b - a) % (self.q - 1)
        s = self._mul_log(a, self._zech[d])
        return np.where(a == 0, b, np.where(b == 0, a, s))

    @staticmethod
    def _wrap(x, *inputs):
        if all(np.ndim(i) == 0 for i in inputs):
            return int(x)
        return x

    def add_table(self):
        """The full ``q x q`` addition table of indices, or None for large fields."""
        return None if self._tables is None else self._tables[0]

    def add(self, a, b):
        if self._tables is not None:
            out = self._tables[0][a, b]
        else:
            out = self._add_zech(a, b)
        return self._wrap(out, a, b)

    def mul(self, a, b):
        if self._tables is not None:
            out = self._tables[1][a, b]
        else:
            out = self._mul_log(a, b)
        return self._wrap(out, a, b)

    def neg(self, a):
        return self.mul(a, self._neg_one)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def inv(self, a):
        a_arr = np.asarray(a, dtype=np.int64)
        if np.any(a_arr == 0):
            raise ZeroDivision("inverse of zero")
        out = (-(a_arr - 1)) % (self.q - 1) + 1
        return self._wrap(out, a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        a_arr = np.asarray(a, dtype=np.int64)
        if e < 0:
            a_arr = np.asarray(self.inv(a_arr))
            e = -e
        res = ((a_arr - 1) * e) % (self.q - 1) + 1
        if e == 0:
            out = np.ones_like(a_arr)
        else:
            out = np.where(a_arr == 0, 0, res)
        return self._wrap(out, a)

    def frobenius(self, a, s: int):
        """``a -> a^(p^s)``; ``s`` may be negative (inverse automorphism)."""
        s %= self.r
        if s == 0:
            return a
        a_arr = np.asarray(a, dtype=np.int64)
        e = pow(self.p, s, self.q - 1) if self.q > 2 else 1
        out = np.where(a_arr == 0, 0, ((a_arr - 1) * e) % (self.q - 1) + 1)
        return self._wrap(out, a)

    def is_zero(self, a):
        return np.asarray(a) == 0

    # -- conversions -----------------------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def beta(self) -> "FieldElement":
        return FieldElement(self, 2 if self.q > 2 else 1)

    @property
    def minus_one(self) -> "FieldElement":
        return FieldElement(self, self._neg_one)

    @property
    def is_prime_field(self) -> bool:
        return self.r == 1

    def index_of_int(self, n: int) -> int:
        """Index of the image of the integer ``n`` (i.e. ``n * 1``)."""
        return int(self._idx_of_int[n % self.p])

    def index_of_vector(self, coeffs) -> int:
        """Index of ``sum coeffs[i] x^i`` in the polynomial basis."""
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) > self.r:
            raise FieldError("too many polynomial-basis coordinates")
        return int(self._idx_of_int[_undigits(coeffs, self.p)])

    def vector_of_index(self, index: int) -> tuple[int, ...]:
        return tuple(_digits(int(self._int_of_idx[index]), self.p, self.r))

    def int_value(self, index: int) -> int:
        """Integer encoding ``sum c_i p^i`` of an element (its value for prime fields)."""
        return int(self._int_of_idx[index])

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MismatchError("element of another field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, self.index_of_int(int(value)))
        if isinstance(value, str):
            return FieldElement(self, self.parse(value))
        raise TypeError(f"cannot convert {value!r} to a field element")

    def element(self, index: int) -> "FieldElement":
        if not 0 <= index < self.q:
            raise FieldError(f"index {index} out of range for F_{self.q}")
        return FieldElement(self, int(index))

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, i) for i in range(self.q)]

    # -- text ------------------------------------------------------------------

    _ATOM = re.compile(r"^\s*(?:(?P<int>-?\d+)|a(?:\s*\^\s*(?P<exp>-?\d+))?)\s*$")

    def parse(self, text: str) -> int:
        """Parse ``0``, ``1``, ``a``, ``a^k`` (``a`` is beta) or, in a prime field, an integer."""
        m = self._ATOM.match(text)
        if not m:
            raise ParseError(f"bad field element {text!r}")
        if m.group("int") is not None:
            n = int(m.group("int"))
            if not self.is_prime_field and n not in (0, 1):
                raise ParseError(f"integer literal {n} only allowed in prime fields")
            return self.index_of_int(n)
        e = int(m.group("exp")) if m.group("exp") is not None else 1
        return self.power(self.beta.index, e)

    def format(self, index: int) -> str:
        index = int(index)
        if self.is_prime_field:
            return str(self.int_value(index))
        if index <= 1:
            return str(index)
        e = index - 1
        return "a" if e == 1 else f"a^{e}"

    # -- identity --------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, GaloisField) and (self.p, self.r) == (other.p, other.r)

    def __hash__(self):
        return hash((self.p, self.r))

    def __repr__(self):
        return f"GaloisField({self.p}, {self.r})"

    def __str__(self):
        return f"F_{self.q}"


@lru_cache(maxsize=None)
def make_field(p: int, r: int = 1, max_order: int = DEFAULT_MAX_ORDER) -> GaloisField:
    """Cached constructor: equal ``(p, r)`` give the very same object."""
    return GaloisField(p, r, max_order)


def field_of_order(q: int, max_order: int = DEFAULT_MAX_ORDER) -> GaloisField:
    p, r = prime_power(q)
    return make_field(p, r, max_order)


@dataclass(frozen=True)
class FieldElement:
    field: GaloisField
    index: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MismatchError(f"{self.field} vs {other.field}")
            return other.index
        if isinstance(other, (int, np.integer)):
            return self.field.index_of_int(int(other))
        return NotImplemented

    def _bin(self, other, fn):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, fn(self.index, b))

    def __add__(self, other):
        return self._bin(other, self.field.add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._bin(other, self.field.sub)

    def __rsub__(self, other):
        return self._bin(other, lambda a, b: self.field.sub(b, a))

    def __mul__(self, other):
        return self._bin(other, self.field.mul)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._bin(other, self.field.div)

    def __rtruediv__(self, other):
        return self._bin(other, lambda a, b: self.field.div(b, a))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.index, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.index))

    def __bool__(self):
        return self.index != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        if isinstance(other, (int, np.integer)):
            return self.index == self.field.index_of_int(int(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.r, self.index))

    def __str__(self):
        return self.field.format(self.index)

    def __repr__(self):
        return f"<{self} in {self.field}>"


@dataclass(frozen=True)
class FieldAutomorphism:
    """The Frobenius power ``a -> a^(p^s)`` with ``0 <= s < r``."""

    field: GaloisField
    s: int = 1

    def __post_init__(self):
        object.__setattr__(self, "s", self.s % self.field.r)

    def __call__(self, a):
        if isinstance(a, FieldElement):
            if a.field != self.field:
                raise MismatchError("automorphism applied to an element of another field")
            return FieldElement(self.field, self.field.frobenius(a.index, self.s))
        return self.field.frobenius(a, self.s)

    @property
    def order(self) -> int:
        return self.field.r // gcd(self.field.r, self.s)

    def power(self, k: int) -> "FieldAutomorphism":
        return FieldAutomorphism(self.field, self.s * k)

    def inverse(self) -> "FieldAutomorphism":
        return self.power(-1)

    def __mul__(self, other: "FieldAutomorphism") -> "FieldAutomorphism":
        """Composition ``self o other``."""
        if other.field != self.field:
            raise MismatchError("automorphisms of different fields")
        return FieldAutomorphism(self.field, self.s + other.s)

    @property
    def is_identity(self) -> bool:
        return self.s == 0


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Binary arithmetic by name: ``add``, ``sub``, ``mul``, ``div`` or ``pow``.

    For ``pow`` the exponent ``b`` is a plain integer.
    """
    if op == "pow":
        return a ** int(b)
    if not isinstance(b, FieldElement) or a.field != b.field:
        raise MismatchError("operands from different fields")
    fn = {"add": a.field.add, "sub": a.field.sub, "mul": a.field.mul, "div": a.field.div}
    if op not in fn:
        raise ValueError(f"unknown operation {op!r}")
    return FieldElement(a.field, fn[op](a.index, b.index))


def enumerate_elements(field: GaloisField) -> list[FieldElement]:
    """``(alpha_0, ..., alpha_{q-1})`` with ``alpha_0 = 0`` and ``alpha_i = beta^(i-1)``."""
    return field.elements()


def apply_automorphism(theta: FieldAutomorphism, a: FieldElement) -> FieldElement:
    return theta(a)
