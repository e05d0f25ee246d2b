import math
import random

import numpy as np
import pytest

from oracles import PolyField, vbasis_add, vbasis_elements, vbasis_mul
from skewcodes import (
    DomainError,
    FieldAutomorphism,
    GuardExceeded,
    MismatchError,
    NotAUnitError,
    RingAutomorphism,
    apply_ring_automorphism,
    enumerate_automorphisms,
    from_poly_basis,
    idempotent,
    ideals,
    is_unit,
    make_field,
    make_ring,
    ring_arith,
    support,
    to_poly_basis,
)
from skewcodes.checks import R3_UNITS, R4_IDEMPOTENTS


def _vtuple(a):
    F = a.ring.field
    return tuple(F.vector_of_index(c.index) for c in a.to_poly_basis())


def _from_vtuple(R, t):
    F = R.field
    lookup = {F.vector_of_index(i): i for i in range(F.q)}
    return R.from_v_indices([lookup[c] for c in t])


@pytest.mark.parametrize("p,r", [(2, 1), (3, 1)])
def test_multiplication_matches_v_basis_exhaustive(p, r):
    R = make_ring(p, r)
    PF = PolyField(p, R.field.modulus)
    elems = vbasis_elements(PF)
    for x in elems:
        a = _from_vtuple(R, x)
        assert _vtuple(a) == x
        for y in elems:
            b = _from_vtuple(R, y)
            assert _vtuple(a * b) == vbasis_mul(PF, x, y)
            assert _vtuple(a + b) == vbasis_add(PF, x, y)


@pytest.mark.parametrize("p,r", [(2, 2), (5, 1)])
def test_multiplication_matches_v_basis_sampled(p, r):
    R = make_ring(p, r)
    PF = PolyField(p, R.field.modulus)
    rng = random.Random(p + 10 * r)
    elems = PF.elements()
    for _ in range(150):
        x = tuple(rng.choice(elems) for _ in range(R.q))
        y = tuple(rng.choice(elems) for _ in range(R.q))
        a, b = _from_vtuple(R, x), _from_vtuple(R, y)
        assert _vtuple(a * b) == vbasis_mul(PF, x, y)


def test_v_is_root_of_defining_polynomial():
    for p, r in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)]:
        R = make_ring(p, r)
        assert R.v ** R.q == R.v
        assert R.v ** (R.q - 1) != R.one


def test_r3_units_match_list():
    R = make_ring(3)
    units = R.units()
    assert len(units) == 8
    assert {u.coords for u in units} == {R.parse(t).coords for t in R3_UNITS}


def test_r3_example_square_is_one():
    R = make_ring(3)
    u = R.parse("1 + v + 2*v^2")
    assert u * u == R.one
    assert u.inverse() == u
    assert is_unit(u)


@pytest.mark.parametrize("p,r", [(2, 1), (3, 1), (2, 2)])
def test_unit_count_and_inverses(p, r):
    R = make_ring(p, r)
    units = R.units()
    assert len(units) == (R.q - 1) ** R.q
    for u in units:
        assert u * u.inverse() == R.one


def test_non_unit_inverse_raises():
    R = make_ring(3)
    with pytest.raises(NotAUnitError):
        R.v.inverse()


@pytest.mark.parametrize("p,r", [(2, 1), (3, 1), (2, 2)])
def test_idempotents_complete_orthogonal(p, r):
    R = make_ring(p, r)
    etas = [idempotent(R, i) for i in range(R.q)]
    for i, e in enumerate(etas):
        assert e * e == e
        for j, f in enumerate(etas):
            if i != j:
                assert (e * f).is_zero()
    assert sum(etas[1:], etas[0]) == R.one


def test_r4_idempotent_labels():
    R = make_ring(2, 2)
    assert [str(idempotent(R, i)) for i in range(4)] == R4_IDEMPOTENTS


def test_r2_idempotents():
    R = make_ring(2)
    assert str(idempotent(R, 0)) == "v + 1"
    assert str(idempotent(R, 1)) == "v"


def test_poly_basis_roundtrip():
    R = make_ring(2, 2)
    for a in list(R.elements())[::7]:
        assert from_poly_basis(R, to_poly_basis(a)) == a
        assert R.parse(str(a)) == a
        assert R.parse(a.crt_str()) == a


def test_support_and_ideals():
    R = make_ring(3)
    assert len(ideals(R)) == 8
    a = R.element([0, 2, 1])
    I = support(a)
    assert I.A == frozenset({1, 2})
    assert a in I and R.one not in I
    assert I.size == 9
    members = [b for b in R.elements() if b in I]
    assert len(members) == 9
    # the ideal generated by a is exactly I_A
    assert {(a * b).coords for b in R.elements()} == {m.coords for m in members}


def test_ring_arith_and_mismatch():
    R = make_ring(3)
    a, b = R.parse("1 + v"), R.parse("2*v^2")
    assert ring_arith(a, b, "add") == a + b
    assert ring_arith(a, b, "sub") == a - b
    assert ring_arith(a, b, "mul") == a * b
    with pytest.raises(MismatchError):
        ring_arith(a, make_ring(2).one, "add")


def test_element_wrong_length():
    with pytest.raises(DomainError):
        make_ring(3).element([0, 1])
    with pytest.raises(DomainError):
        idempotent(make_ring(3), 3)


def _preserves_operations(T, elems):
    return all(T(a + b) == T(a) + T(b) and T(a * b) == T(a) * T(b) for a in elems for b in elems)


@pytest.mark.parametrize("p,r,count", [(2, 1, 2), (3, 1, 6), (2, 2, 48)])
def test_automorphism_enumeration(p, r, count):
    R = make_ring(p, r)
    auts = enumerate_automorphisms(R)
    assert len(auts) == count == r * math.factorial(R.q)
    assert len(set(auts)) == count
    elems = list(R.elements())
    sample = elems if len(elems) <= 27 else random.Random(0).sample(elems, 12)
    for T in auts:
        assert _preserves_operations(T, sample)
        images = {T(a).coords for a in elems}
        assert len(images) == len(elems)


def test_r2_automorphisms_are_identity_and_swap():
    R = make_ring(2)
    auts = enumerate_automorphisms(R)
    sigmas = sorted(T.sigma for T in auts)
    assert sigmas == [(0, 1), (1, 0)]
    swap = next(T for T in auts if T.sigma == (1, 0))
    assert swap(R.v) == R.v + 1
    assert swap(idempotent(R, 0)) == idempotent(R, 1)


def test_r3_has_exactly_six_automorphisms_by_brute_force():
    # every bijection R_3 -> R_3 fixing 0,1 determined by the image of v
    R = make_ring(3)
    elems = list(R.elements())
    found = 0
    for w in elems:
        images = {}
        ok = True
        for a in elems:
            c = a.to_poly_basis()
            img = R.scalar(c[0]) + R.scalar(c[1]) * w + R.scalar(c[2]) * w * w
            images[a.coords] = img
        if len({x.coords for x in images.values()}) != len(elems):
            continue
        ok = all(images[(a * b).coords] == images[a.coords] * images[b.coords] for a in elems for b in elems[::3])
        found += ok
    assert found == 6


def test_automorphism_examples_r4():
    R = make_ring(2, 2)
    T = RingAutomorphism.frobenius(R, 1)
    # theta acts on every CRT coordinate, so v (coordinates alpha_i) goes to v^2
    assert T(R.v) == R.v**2
    assert T(R.parse("a*v")) == R.parse("a^2*v^2")
    c = R.parse("v^3 + v^2")
    assert T(c) == R.parse("v^3 + v")
    assert apply_ring_automorphism(T, T(c)) == c


def test_automorphism_composition():
    R = make_ring(2, 2)
    auts = enumerate_automorphisms(R)
    rng = random.Random(5)
    elems = list(R.elements())
    for _ in range(40):
        S, T = rng.choice(auts), rng.choice(auts)
        a = rng.choice(elems)
        assert (S * T)(a) == S(T(a))
        assert T.inverse()(T(a)) == a


def test_automorphism_rejects_bad_sigma():
    R = make_ring(3)
    with pytest.raises(DomainError):
        RingAutomorphism(R, FieldAutomorphism(R.field, 0), (0, 0, 1))
    with pytest.raises(MismatchError):
        RingAutomorphism(R, FieldAutomorphism(make_field(2, 2), 0), (0, 1, 2))


def test_enumeration_guards():
    with pytest.raises(GuardExceeded):
        enumerate_automorphisms(make_ring(7))
    with pytest.raises(GuardExceeded):
        list(make_ring(5, 2).elements())


def test_crt_coordinates_are_evaluations():
    R = make_ring(3, 2)
    F = R.field
    rng = np.random.default_rng(3)
    for _ in range(20):
        coeffs = rng.integers(0, F.q, R.q)
        a = R.from_v_indices(coeffs)
        for i in range(R.q):
            x = F.element(i)
            val = F.zero
            for j, c in enumerate(coeffs):
                val = val + F.element(int(c)) * x**j
            assert a.component(i) == val
