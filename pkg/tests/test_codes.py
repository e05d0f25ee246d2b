import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_dual, brute_min_distance, ring_brute_dual, ring_span, span
from skewcodes import (
    DomainError,
    GuardExceeded,
    LinearCode,
    ParseError,
    RingLinearCode,
    code_from_rows,
    component,
    dual,
    gray_dual_commutes,
    gray_image,
    gray_map,
    gray_weight,
    make_field,
    make_ring,
    min_distance,
    ring_code_from_components,
    ring_dual,
)
from skewcodes.checks import SEC3_G1, SEC3_G3, mixed_component_code
from skewcodes.codes import (
    all_subspaces,
    format_code_descriptor,
    full_space,
    gray_blocks,
    inverse_gray_map,
    parse_code_descriptor,
    zero_code,
)

F4 = make_field(2, 2)
F3 = make_field(3)


def _all(C):
    return np.vstack(list(C.codewords()))


def _words(C):
    return {tuple(int(x) for x in w) for w in _all(C)}


@st.composite
def small_codes(draw):
    F = draw(st.sampled_from([make_field(2), F3, F4, make_field(5)]))
    n = draw(st.integers(1, 5 if F.q <= 3 else 4))
    m = draw(st.integers(0, n + 1))
    rows = draw(st.lists(st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n), min_size=m, max_size=m))
    return F, n, rows


# -- examples ------------------------------------------------------------------

def test_mixed_component_examples():
    G3 = code_from_rows(F4, 6, SEC3_G3)
    G1 = code_from_rows(F4, 6, SEC3_G1)
    assert G3.k == 3 and G1.k == 3
    assert dual(G3) == G3 and G1.dual() == G1
    assert min_distance(G3) == 2 and min_distance(G1) == 3
    assert code_from_rows(F4, 6, [[0] * 6]).k == 0


def test_full_space_and_zero_code():
    assert full_space(F3, 4).dual() == zero_code(F3, 4)
    assert zero_code(F3, 4).dual() == full_space(F3, 4)
    with pytest.raises(DomainError):
        zero_code(F3, 4).min_distance()


def test_repetition_code_distance():
    for F in (F3, F4):
        for n in (1, 3, 5):
            assert code_from_rows(F, n, [[1] * n]).min_distance() == n


def test_ragged_rows_rejected():
    with pytest.raises(DomainError):
        code_from_rows(F3, 3, [[1, 2], [1, 2, 0]])


def test_min_distance_guard():
    with pytest.raises(GuardExceeded):
        full_space(F4, 12).min_distance(guard=2**20)


def test_mixed_component_ring_code():
    C = mixed_component_code()
    R = C.ring
    assert C.rank == 3 and C.size == 4**12
    assert C.is_self_dual() and ring_dual(C) == C
    assert C.size * C.dual().size == R.q ** (R.q * C.n)
    assert C.gray_parameters() == (24, 12, 2)
    gi = gray_image(C)
    assert gi.is_self_dual() and gi.k == 12
    assert gray_dual_commutes(C)


def test_component_roundtrip():
    cs = [code_from_rows(F3, 3, rows) for rows in ([[1, 1, 1]], [[1, 2, 0]], [])]
    C = ring_code_from_components(cs)
    assert all(component(C, i) == cs[i] for i in range(3))
    with pytest.raises(DomainError):
        ring_code_from_components(cs[:2] + [code_from_rows(F3, 4, [])])


def test_equal_components_give_product_gray_image():
    R = make_ring(3)
    base = code_from_rows(F3, 3, [[1, 2, 0], [0, 1, 1]])
    C = RingLinearCode(R, [base] * 3)
    # Phi(C) = base x base x base; only F_q-scalar combinations have equal blocks
    prod = LinearCode(F3, 9, np.kron(np.eye(3, dtype=np.int64), base.G))
    assert C.gray_image() == prod
    rng = np.random.default_rng(0)
    M = C.generator_matrix()
    for _ in range(20):
        coeffs = rng.integers(0, 3, M.shape[0])
        word = np.zeros((3, 3), dtype=np.int64)
        for j in range(M.shape[0]):
            word = F3.add(word, F3.mul(int(coeffs[j]), M[j]))
        blocks = gray_blocks(word)
        assert (blocks == blocks[0]).all()
    eta0_word = F3.mul(np.array([1, 0, 0]), M[0])
    assert C.contains(eta0_word) and not (gray_blocks(eta0_word) == gray_blocks(eta0_word)[0]).all()


def test_zero_ring_code_dual_is_full():
    R = make_ring(3)
    Z = RingLinearCode(R, [zero_code(F3, 2)] * 3)
    assert Z.dual() == RingLinearCode(R, [full_space(F3, 2)] * 3)
    assert gray_dual_commutes(Z)
    assert gray_weight(np.zeros((2, 3), dtype=np.int64)) == 0


# -- properties against explicit word sets ---------------------------------------

@settings(max_examples=120, deadline=None)
@given(small_codes())
def test_code_matches_span(args):
    F, n, rows = args
    C = code_from_rows(F, n, np.array(rows, dtype=np.int64).reshape(-1, n))
    words = span(F, rows, n)
    assert _words(C) == words
    assert C.size == len(words)
    D = C.dual()
    assert _words(D) == brute_dual(F, words, n)
    assert D.dual() == C
    assert C.size * D.size == F.q**n
    if C.k:
        assert C.min_distance() == brute_min_distance(words)


@settings(max_examples=80, deadline=None)
@given(small_codes(), st.integers(0, 2**32 - 1))
def test_rref_canonical(args, seed):
    F, n, rows = args
    C = code_from_rows(F, n, np.array(rows, dtype=np.int64).reshape(-1, n))
    rng = np.random.default_rng(seed)
    # random invertible recombination of the basis plus redundant rows
    k = C.k
    if k == 0:
        return
    while True:
        A = rng.integers(0, F.q, (k, k))
        if LinearCode(F, k, A).k == k:
            break
    new = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            new[i] = F.add(new[i], F.mul(int(A[i, j]), C.G[j]))
    extra = F.add(new[:1], new[-1:])
    D = LinearCode(F, n, np.vstack([new, extra]))
    assert D == C and np.array_equal(D.G, C.G) and hash(D) == hash(C)


def test_all_subspaces_counts():
    # Gaussian binomial counts: F_2^3 has 1 + 7 + 7 + 1 subspaces, F_3^2 has 1 + 4 + 1
    assert len(all_subspaces(make_field(2), 3)) == 16
    assert len(all_subspaces(F3, 2)) == 6
    assert len(all_subspaces(F4, 2)) == 7


def _ring_word_tuples(C):
    """Every codeword of a ring code as a tuple of CRT-coordinate tuples."""
    comps = [_all(c) for c in C.components]
    out = set()
    for choice in itertools.product(*comps):
        out.add(tuple(tuple(int(choice[i][j]) for i in range(len(choice))) for j in range(C.n)))
    return out


@pytest.mark.parametrize("n", [1, 2])
def test_ring_code_matches_ring_span_r2(n):
    R = make_ring(2)
    elems = list(R.elements())
    words = list(itertools.product(elems, repeat=n))
    rng = np.random.default_rng(n)
    for _ in range(25):
        m = int(rng.integers(0, 3))
        rows = [words[int(i)] for i in rng.integers(0, len(words), m)]
        C = RingLinearCode.from_ring_rows(R, n, rows) if rows else RingLinearCode.from_ring_rows(R, n, np.zeros((0, n, 2), dtype=np.int64))
        want = {tuple(a.coords for a in w) for w in ring_span(R, rows, n)}
        assert _ring_word_tuples(C) == want
        wd = {tuple(a.coords for a in w) for w in ring_brute_dual(R, [list(w) for w in ring_span(R, rows, n)], n)}
        assert _ring_word_tuples(C.dual()) == wd


def test_ring_code_matches_ring_span_r3():
    R = make_ring(3)
    elems = list(R.elements())
    rng = np.random.default_rng(7)
    for _ in range(6):
        row = [elems[int(i)] for i in rng.integers(0, 27, 2)]
        C = RingLinearCode.from_ring_rows(R, 2, [row])
        want = {tuple(a.coords for a in w) for w in ring_span(R, [row], 2)}
        assert _ring_word_tuples(C) == want
        assert C.rank == max(c.k for c in C.components) == (1 if any(row) else 0)


def test_gray_dual_commutes_random_r3():
    R = make_ring(3)
    rng = np.random.default_rng(2024)
    for _ in range(100):
        n = int(rng.integers(1, 5))
        m = int(rng.integers(0, n + 1))
        C = RingLinearCode.from_ring_rows(R, n, rng.integers(0, 3, (m, n, 3)))
        assert gray_dual_commutes(C)
        assert C.size * C.dual().size == R.q ** (R.q * n)
        if C.dimension_sum:
            n_, k_, d_ = C.gray_parameters()
            assert (n_, k_) == (3 * n, C.gray_image().k) and d_ == C.gray_image().min_distance()


def test_gray_map_is_bijective_and_weight_preserving():
    R = make_ring(3)
    seen = set()
    for w in itertools.product(list(R.elements()), repeat=2):
        flat = gray_map(w)
        assert gray_weight(w) == int(np.count_nonzero(flat))
        assert sum(a.support().A.__len__() for a in w) == gray_weight(w)
        assert np.array_equal(inverse_gray_map(flat, 3), np.array([a.coords for a in w]))
        seen.add(tuple(flat))
    assert len(seen) == 27**2 == 3 ** (3 * 2)


def test_gray_generator_matrix_block_diagonal():
    C = mixed_component_code()
    M = C.gray_generator_matrix()
    assert M.shape == (12, 24)
    r = 0
    for i, c in enumerate(C.components):
        block = M[r : r + c.k]
        assert np.array_equal(block[:, 6 * i : 6 * i + 6], c.G)
        block = np.delete(block, np.s_[6 * i : 6 * i + 6], axis=1)
        assert not block.any()
        r += c.k


def test_generator_matrix_zero_padding():
    R = make_ring(3)
    cs = [code_from_rows(F3, 3, [[1, 0, 1], [0, 1, 1]]), code_from_rows(F3, 3, [[1, 1, 1]]), zero_code(F3, 3)]
    C = RingLinearCode(R, cs)
    G = C.generator_matrix()
    assert G.shape == (2, 3, 3)
    assert not G[1, :, 1].any() and not G[:, :, 2].any()
    assert RingLinearCode.from_ring_rows(R, 3, G) == C


# -- text formats ----------------------------------------------------------------

def test_descriptor_roundtrip_field():
    C = code_from_rows(F4, 6, SEC3_G1)
    text = format_code_descriptor(C)
    assert text.startswith("field 2 2\nlength 6\n")
    assert parse_code_descriptor(text) == C


def test_descriptor_roundtrip_ring():
    C = mixed_component_code()
    assert parse_code_descriptor(format_code_descriptor(C)) == C
    text = "# comment\nring 4\nlength 2\n[1,0,a,1], v^3 + v^2\n"
    D = parse_code_descriptor(text)
    assert D.ring == make_ring(2, 2) and D.n == 2


def test_descriptor_errors():
    with pytest.raises(ParseError):
        parse_code_descriptor("length 3\n1,0,0\n")
    with pytest.raises(ParseError):
        parse_code_descriptor("field 3 1\nlength 3\n1,0\n")
