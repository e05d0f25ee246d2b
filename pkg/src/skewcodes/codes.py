"""Linear codes over F_q and R_q, Euclidean duals and the Gray map.

A code over R_q is stored only through its components
``C_i = Phi_i(C)``, so that ``C = eta_0 C_0 + ... + eta_{q-1} C_{q-1}``.
Everything else (mixed generator matrix, Gray image, dual) is derived from
that tuple on demand.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import _text, linalg
from .errors import DomainError, GuardExceeded, MismatchError, ParseError
from .gf import GaloisField, make_field, prime_power
from .ring import RingElement, RingRq, make_ring

MAX_CODEWORDS = 2**24
_CHUNK = 2**16


class LinearCode:
    """A linear ``[n, k]`` code over F_q held as an RREF generator matrix."""

    def __init__(self, field: GaloisField, n: int, rows=()):
        self.field = field
        self.n = n
        m = linalg.as_matrix(rows, n)
        if m.size and m.shape[1] != n:
            raise DomainError(f"rows of length {m.shape[1]} for a code of length {n}")
        m = m.reshape(-1, n)
        G, pivots = linalg.rref(field, m)
        G.setflags(write=False)
        self.G = G
        self.pivots = pivots

    @property
    def k(self) -> int:
        return self.G.shape[0]

    @property
    def size(self) -> int:
        return self.field.q**self.k

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.field == other.field
            and self.n == other.n
            and self.G.shape == other.G.shape
            and bool(np.all(self.G == other.G))
        )

    def __hash__(self):
        return hash((self.field, self.n, self.G.tobytes()))

    def contains(self, words) -> bool:
        """True when every given word lies in the code."""
        words = linalg.as_matrix(words, self.n)
        if words.shape[0] == 0:
            return True
        if words.shape[1] != self.n:
            raise DomainError("word length does not match the code")
        return bool(np.all(linalg.in_row_space(self.field, self.G, self.pivots, words)))

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.n, linalg.null_space(self.field, self.G, self.n))

    def is_self_dual(self) -> bool:
        return 2 * self.k == self.n and self == self.dual()

    def is_self_orthogonal(self) -> bool:
        if self.k == 0:
            return True
        gram = linalg.matmul(self.field, self.G, self.G.T)
        return not np.any(gram)

    def _span(self, rows: np.ndarray) -> np.ndarray:
        F = self.field
        acc = np.zeros((1, self.n), dtype=np.int64)
        elems = np.arange(F.q)[:, None]
        for row in rows:
            mult = F.mul(elems, row[None, :])
            acc = F.add(acc[:, None, :], mult[None, :, :]).reshape(-1, self.n)
        return acc

    def codewords(self, guard: int = MAX_CODEWORDS):
        """Yield the codewords in chunks (2-d arrays), zero word first."""
        if self.size > guard:
            raise GuardExceeded(f"{self.size} codewords exceed the guard {guard}")
        q = self.field.q
        inner = 0
        while inner < self.k and q ** (inner + 1) <= _CHUNK:
            inner += 1
        inner_words = self._span(self.G[self.k - inner :])
        outer_words = self._span(self.G[: self.k - inner])
        table = self.field.add_table()
        if table is None:
            for v in outer_words:
                yield self.field.add(inner_words, v[None, :])
            return
        # one flat gather per chunk: table[a * q + b] = a + b
        flat = table.astype(np.uint8).reshape(-1)  # tables exist only for q <= 256
        base = inner_words * q
        for v in outer_words:
            yield flat[base + v[None, :]]

    def min_distance(self, guard: int = MAX_CODEWORDS) -> int:
        """Minimum Hamming weight of a nonzero codeword, by full enumeration."""
        if self.k == 0:
            raise DomainError("the zero code has no minimum distance")
        best = self.n
        first = True
        for chunk in self.codewords(guard):
            w = np.count_nonzero(chunk, axis=1)
            if first:
                w = w[1:]
                first = False
            if w.size:
                best = min(best, int(w.min()))
            if best == 1:
                break
        return best

    @property
    def parameters(self) -> tuple[int, int, int | None]:
        d = self.min_distance() if self.k else None
        return (self.n, self.k, d)

    def format_matrix(self) -> str:
        return format_matrix(self.field, self.G)

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over {self.field})"


def hamming_weight(word) -> int:
    return int(np.count_nonzero(np.asarray(word)))


def code_from_rows(field: GaloisField, n: int, rows) -> LinearCode:
    """Span of the given rows.

    Rows may be an index array or nested sequences whose entries are
    FieldElements, strings, or integers read as multiples of one.
    """
    if isinstance(rows, np.ndarray):
        return LinearCode(field, n, rows)
    rows = [list(r) for r in rows]
    lengths = {len(r) for r in rows}
    if lengths and lengths != {n}:
        raise DomainError(f"ragged rows or wrong length: {sorted(lengths)} vs n = {n}")
    idx = [[field(x).index for x in r] for r in rows]
    return LinearCode(field, n, np.array(idx, dtype=np.int64).reshape(-1, n))


def dual(C: LinearCode) -> LinearCode:
    return C.dual()


def min_distance(C: LinearCode, guard: int = MAX_CODEWORDS) -> int:
    return C.min_distance(guard)


def full_space(field: GaloisField, n: int) -> LinearCode:
    return LinearCode(field, n, np.eye(n, dtype=np.int64))


def zero_code(field: GaloisField, n: int) -> LinearCode:
    return LinearCode(field, n, np.zeros((0, n), dtype=np.int64))


# -- codes over R_q ------------------------------------------------------------

class RingLinearCode:
    """A linear code over R_q stored as its ``q`` component codes."""

    def __init__(self, ring: RingRq, components):
        components = tuple(components)
        if len(components) != ring.q:
            raise DomainError(f"a code over {ring} needs {ring.q} components, got {len(components)}")
        ns = {c.n for c in components}
        if len(ns) != 1:
            raise DomainError(f"component lengths differ: {sorted(ns)}")
        if any(c.field != ring.field for c in components):
            raise MismatchError("components must be codes over the base field of the ring")
        self.ring = ring
        self.n = ns.pop()
        self.components = components

    @classmethod
    def from_ring_rows(cls, ring: RingRq, n: int, rows) -> "RingLinearCode":
        """The R_q-submodule generated by ring words (``(m, n, q)`` array or nested RingElements)."""
        arr = _ring_rows_array(ring, n, rows)
        return cls(ring, [LinearCode(ring.field, n, arr[:, :, i]) for i in range(ring.q)])

    def component(self, i: int) -> LinearCode:
        return self.components[i]

    @property
    def rank(self) -> int:
        return max(c.k for c in self.components)

    @property
    def dimension_sum(self) -> int:
        """``log_q |C|``, the dimension of the Gray image."""
        return sum(c.k for c in self.components)

    @property
    def size(self) -> int:
        return self.ring.q**self.dimension_sum

    def dual(self) -> "RingLinearCode":
        return RingLinearCode(self.ring, [c.dual() for c in self.components])

    def is_self_dual(self) -> bool:
        return all(c.is_self_dual() for c in self.components)

    def __eq__(self, other):
        if not isinstance(other, RingLinearCode):
            return NotImplemented
        return self.ring == other.ring and self.components == other.components

    def __hash__(self):
        return hash((self.ring, self.components))

    def contains(self, words) -> bool:
        """Membership of ring words given as an ``(m, n, q)`` (or ``(n, q)``) array."""
        arr = np.asarray(words, dtype=np.int64)
        if arr.ndim == 2:
            arr = arr[None]
        return all(c.contains(arr[:, :, i]) for i, c in enumerate(self.components))

    def generator_matrix(self) -> np.ndarray:
        """``sum_i eta_i G~_i`` with each ``G_i`` padded by zero rows to the rank."""
        k = self.rank
        out = np.zeros((k, self.n, self.ring.q), dtype=np.int64)
        for i, c in enumerate(self.components):
            out[: c.k, :, i] = c.G
        return out

    def gray_generator_matrix(self) -> np.ndarray:
        """Block-diagonal ``diag(G_0, ..., G_{q-1})``."""
        n, q = self.n, self.ring.q
        out = np.zeros((self.dimension_sum, q * n), dtype=np.int64)
        r = 0
        for i, c in enumerate(self.components):
            out[r : r + c.k, i * n : (i + 1) * n] = c.G
            r += c.k
        return out

    def gray_image(self) -> LinearCode:
        return LinearCode(self.ring.field, self.ring.q * self.n, self.gray_generator_matrix())

    def gray_parameters(self) -> tuple[int, int, int]:
        """``[qn, sum k_i, min d_i]`` over the nonzero components."""
        ds = [c.min_distance() for c in self.components if c.k]
        if not ds:
            raise DomainError("the zero code has no minimum distance")
        return (self.ring.q * self.n, self.dimension_sum, min(ds))

    def format_matrix(self) -> str:
        return format_ring_matrix(self.ring, self.generator_matrix())

    def __repr__(self):
        ks = ",".join(str(c.k) for c in self.components)
        return f"RingLinearCode(n={self.n} over {self.ring}, k_i=({ks}))"


def _ring_rows_array(ring: RingRq, n: int, rows) -> np.ndarray:
    if isinstance(rows, np.ndarray):
        arr = rows.astype(np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, n, ring.q)
    else:
        rows = list(rows)
        if any(len(r) != n for r in rows):
            raise DomainError(f"ragged rows or wrong length for n = {n}")
        arr = np.array([[ring(a).coords for a in r] for r in rows], dtype=np.int64).reshape(-1, n, ring.q)
    if arr.shape[1:] != (n, ring.q):
        raise DomainError(f"ring rows have shape {arr.shape}, expected (m, {n}, {ring.q})")
    return arr


def ring_code_from_components(components, ring: RingRq | None = None) -> RingLinearCode:
    components = list(components)
    if ring is None:
        F = components[0].field
        ring = make_ring(F.p, F.r)
    return RingLinearCode(ring, components)


def component(C: RingLinearCode, i: int) -> LinearCode:
    return C.component(i)


def ring_dual(C: RingLinearCode) -> RingLinearCode:
    return C.dual()


def gray_map(word, ring: RingRq | None = None) -> np.ndarray:
    """``Phi(a) = (Phi_0(a), ..., Phi_{q-1}(a))`` as one flat word of length ``qn``.

    ``word`` is an ``(n, q)`` coordinate array or a sequence of RingElements.
    """
    arr = _ring_word(word, ring)
    return arr.T.reshape(-1).copy()


def gray_blocks(word, ring: RingRq | None = None) -> np.ndarray:
    """The Gray image as a ``(q, n)`` array: row ``i`` is ``Phi_i(a)``."""
    return _ring_word(word, ring).T.copy()


def inverse_gray_map(flat, q: int) -> np.ndarray:
    flat = np.asarray(flat, dtype=np.int64)
    return flat.reshape(q, -1).T.copy()


def gray_weight(word, ring: RingRq | None = None) -> int:
    return hamming_weight(gray_map(word, ring))


def _ring_word(word, ring):
    if isinstance(word, np.ndarray):
        return word.astype(np.int64)
    word = list(word)
    if word and isinstance(word[0], RingElement):
        return np.array([a.coords for a in word], dtype=np.int64)
    if ring is None:
        raise DomainError("a ring is needed to interpret this word")
    return np.array([ring(a).coords for a in word], dtype=np.int64).reshape(-1, ring.q)


def gray_image(C: RingLinearCode) -> LinearCode:
    return C.gray_image()


def gray_dual_commutes(C: RingLinearCode, guard: int = 4096) -> bool:
    """Compare ``Phi(C^perp)`` with ``Phi(C)^perp``, each side computed on its own."""
    if C.ring.q * C.n > guard:
        raise GuardExceeded(f"Gray length {C.ring.q * C.n} exceeds {guard}")
    lhs = C.dual().gray_image()
    rhs = C.gray_image().dual()
    return lhs == rhs


# -- text formats ---------------------------------------------------------------

def format_matrix(field: GaloisField, M) -> str:
    return "\n".join(",".join(field.format(int(x)) for x in row) for row in np.asarray(M))


def format_ring_matrix(ring: RingRq, M, crt: bool = False) -> str:
    lines = []
    for row in np.asarray(M):
        elems = [ring.element(c) for c in row]
        lines.append(",".join(e.crt_str() if crt else str(e) for e in elems))
    return "\n".join(lines)


def parse_matrix(field: GaloisField, text: str) -> np.ndarray:
    rows = [ln for ln in (l.strip() for l in text.splitlines()) if ln and not ln.startswith("#")]
    parsed = [[field.parse(x) for x in _text.split_list(ln)] for ln in rows]
    if len({len(r) for r in parsed}) > 1:
        raise ParseError("ragged matrix rows")
    return np.array(parsed, dtype=np.int64)


def parse_ring_matrix(ring: RingRq, text: str) -> np.ndarray:
    rows = [ln for ln in (l.strip() for l in text.splitlines()) if ln and not ln.startswith("#")]
    parsed = [[ring.parse(x).coords for x in _text.split_list(ln)] for ln in rows]
    if len({len(r) for r in parsed}) > 1:
        raise ParseError("ragged matrix rows")
    return np.array(parsed, dtype=np.int64).reshape(len(parsed), -1, ring.q)


def parse_code_descriptor(text: str) -> LinearCode | RingLinearCode:
    """Read a code file.

    Header lines (any order, before the matrix)::

        field <p> <r>        or   ring <q>   (also: ring <p> <r>)
        length <n>

    followed by one matrix row per line, entries separated by commas.  Lines
    starting with ``#`` are comments.
    """
    kind = None
    p = r = n = None
    body = []
    for raw in text.splitlines():
        ln = raw.strip()
        if not ln or ln.startswith("#"):
            continue
        head = ln.split()
        if head[0] in ("field", "ring") and kind is None:
            kind = head[0]
            nums = [int(t) for t in head[1:]]
            if len(nums) == 1:
                p, r = prime_power(nums[0])
            elif len(nums) == 2:
                p, r = nums
            else:
                raise ParseError(f"bad header line {ln!r}")
            continue
        if head[0] == "length" and n is None:
            if len(head) != 2:
                raise ParseError(f"bad header line {ln!r}")
            n = int(head[1])
            continue
        body.append(ln)
    if kind is None or n is None:
        raise ParseError("code descriptor needs 'field'/'ring' and 'length' header lines")
    if kind == "field":
        F = make_field(p, r)
        M = parse_matrix(F, "\n".join(body)) if body else np.zeros((0, n), dtype=np.int64)
        if M.size and M.shape[1] != n:
            raise ParseError(f"rows have length {M.shape[1]}, header says {n}")
        return LinearCode(F, n, M)
    R = make_ring(p, r)
    M = parse_ring_matrix(R, "\n".join(body)) if body else np.zeros((0, n, R.q), dtype=np.int64)
    if M.size and M.shape[1] != n:
        raise ParseError(f"rows have length {M.shape[1]}, header says {n}")
    return RingLinearCode.from_ring_rows(R, n, M)


def format_code_descriptor(C: LinearCode | RingLinearCode) -> str:
    if isinstance(C, LinearCode):
        head = f"field {C.field.p} {C.field.r}\nlength {C.n}"
        body = C.format_matrix()
    else:
        head = f"ring {C.ring.field.p} {C.ring.field.r}\nlength {C.n}"
        body = C.format_matrix()
    return head + ("\n" + body if body else "") + "\n"


def all_subspaces(field: GaloisField, n: int, limit: int = 2**12) -> list[LinearCode]:
    """Every subspace of ``F_q^n`` (small cases only), deduplicated by RREF."""
    vectors = list(itertools.product(range(field.q), repeat=n))
    if field.q**n > 64:
        raise GuardExceeded("subspace enumeration only for q^n <= 64")
    seen = {zero_code(field, n)}
    frontier = [zero_code(field, n)]
    while frontier:
        nxt = []
        for C in frontier:
            for v in vectors:
                if not C.contains([v]):
                    D = LinearCode(field, n, np.vstack([C.G, np.array([v])]))
                    if D not in seen:
                        seen.add(D)
                        nxt.append(D)
                        if len(seen) > limit:
                            raise GuardExceeded("too many subspaces")
        frontier = nxt
    return sorted(seen, key=lambda c: (c.k, c.G.tobytes()))
