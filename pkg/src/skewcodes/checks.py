"""Replay of the worked examples as a list of named PASS/FAIL checks.

Each check is a plain function returning a :class:`CheckResult`.  Some take
overrides (idempotent labels, the dual-constant rule) so that the suite can
be shown to catch a wrong input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import codes as cd
from . import constacyclic as cc
from .gf import make_field
from .ring import automorphism_count, enumerate_automorphisms, idempotent, ideals, make_ring
from .skew_poly import SkewPolynomial, lclm


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


R3_UNITS = ["1", "2", "1 + v^2", "1 + v + 2*v^2", "1 + 2*v + 2*v^2", "2 + v + v^2", "2 + 2*v + v^2", "2 + 2*v^2"]

# idempotents of R_4 in index order 0..3 (value 1 at the points 0, 1, a, a^2)
R4_IDEMPOTENTS = ["v^3 + 1", "v^3 + v^2 + v", "v^3 + a*v^2 + a^2*v", "v^3 + a^2*v^2 + a*v"]
R4_ETA1_TYPO = "v^3 + v + 1"

SEC3_G1 = [[1, 0, 0, "a^2", "a^2", 1], [0, 1, 0, "a^2", 0, "a"], [0, 0, 1, 1, "a", "a"]]
SEC3_G2 = [[1, 0, 0, "a", "a", 1], [0, 1, 0, "a", 0, "a^2"], [0, 0, 1, 1, "a^2", "a^2"]]
SEC3_G3 = [[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1]]

R4_G1 = "x^3 + 1"
R4_G2 = "x^3 + a*x^2 + a*x + 1"
R4_G3 = "x^3 + a^2*x^2 + a^2*x + 1"
R4_PRINCIPAL = "x^3 + (v^3 + v^2)*x^2 + (v^3 + v^2)*x + 1"
_C = "v^3 + v^2"
R4_MATRIX_WITH_TYPOS = [
    ["1", _C, _C, "1", "0", "0"],
    ["0", "1", _C, _C, "1", "0"],
    ["0", "0", "1", _C, _C, "0"],
]


def _f4_poly(text: str) -> SkewPolynomial:
    return SkewPolynomial.parse(make_field(2, 2), 1, text)


def principal_r4_code() -> cc.SkewConstacyclicCodeR:
    """``eta_0 g_1 + eta_1 g_1 + eta_2 g_2 + eta_3 g_3`` over R_4, length 6, cyclic."""
    R = make_ring(2, 2)
    gens = [_f4_poly(t) for t in (R4_G1, R4_G1, R4_G2, R4_G3)]
    return cc.code_from_components_ring(R, gens, 6, 1)


def mixed_component_code() -> cd.RingLinearCode:
    F = make_field(2, 2)
    G1, G2, G3 = (cd.code_from_rows(F, 6, G) for G in (SEC3_G1, SEC3_G2, SEC3_G3))
    return cd.RingLinearCode(make_ring(2, 2), [G1, G1, G2, G3])


def principal_r4_matrix() -> np.ndarray:
    """The typo matrix with ``Theta`` applied in row 2 and the last 1 of row 3 restored."""
    R = make_ring(2, 2)
    c = R.parse(_C)
    tc = cc.RingAutomorphism.frobenius(R, 1)(c)
    one, zero = R.one, R.zero
    rows = [
        [one, c, c, one, zero, zero],
        [zero, one, tc, tc, one, zero],
        [zero, zero, one, c, c, one],
    ]
    return np.array([[e.coords for e in row] for row in rows], dtype=np.int64)


def typo_matrix() -> np.ndarray:
    R = make_ring(2, 2)
    return np.array([[R.parse(t).coords for t in row] for row in R4_MATRIX_WITH_TYPOS], dtype=np.int64)


# -- individual checks ---------------------------------------------------------

def check_r3_units() -> CheckResult:
    R = make_ring(3, 1)
    found = {u.coords for u in R.units()}
    listed = {R.parse(t).coords for t in R3_UNITS}
    ok = len(found) == 8 and found == listed
    return CheckResult("R_3 has exactly the 8 listed units", ok, f"found {len(found)}")


def check_automorphism_counts() -> CheckResult:
    want = {(2, 1): 2, (3, 1): 6, (2, 2): 48}
    got = {}
    for (p, r), n in want.items():
        R = make_ring(p, r)
        got[(p, r)] = len(set(enumerate_automorphisms(R)))
    ok = got == want and all(automorphism_count(make_ring(p, r)) == n for (p, r), n in want.items())
    shown = ", ".join(f"|Aut(R_{p**r})|={n}" for (p, r), n in got.items())
    return CheckResult("automorphism counts r*q! for q = 2, 3, 4", ok, shown)


def check_r2_swap() -> CheckResult:
    R = make_ring(2, 1)
    swap = cc.RingAutomorphism(R, cc.FieldAutomorphism(R.field, 0), (1, 0))
    ok = all(
        swap(R.element([a, b])) == R.element([b, a]) for a in range(2) for b in range(2)
    )
    return CheckResult("R_2 swap automorphism exchanges eta_0 and eta_1", ok)


def check_r4_idempotents(labels=None) -> CheckResult:
    """The given v-basis labels are the complete orthogonal idempotent set, in order."""
    labels = R4_IDEMPOTENTS if labels is None else labels
    R = make_ring(2, 2)
    etas = [R.parse(t) for t in labels]
    ok = all(e * e == e for e in etas)
    ok &= all((etas[i] * etas[j]).is_zero() for i in range(4) for j in range(4) if i != j)
    ok &= sum(etas[1:], etas[0]) == R.one
    ok &= all(etas[i] == idempotent(R, i) for i in range(4))
    return CheckResult("R_4 idempotents eta_0..eta_3", bool(ok), "; ".join(labels))


def check_r4_eta1_typo() -> CheckResult:
    R = make_ring(2, 2)
    e = R.parse(R4_ETA1_TYPO)
    ok = e * e != e and idempotent(R, 1) == R.parse(R4_IDEMPOTENTS[1])
    return CheckResult(
        "eta_1 = v^3 + v + 1 is not idempotent; interpolation gives v^3 + v^2 + v", ok
    )


def check_ideals_length_one() -> CheckResult:
    ok = True
    for p, r in ((2, 1), (3, 1), (2, 2)):
        R = make_ring(p, r)
        ok &= len(ideals(R)) == 2**R.q
        for I in ideals(R):
            if not I.A:
                continue
            a = I.generator
            C = cd.RingLinearCode.from_ring_rows(R, 1, [[a]])
            line = cd.LinearCode(R.field, R.q, [cd.gray_map([a])])
            ok &= C.rank == 1 and C.size == I.size
            ok &= cd.gray_weight([a]) == len(I.A)
            ok &= line.parameters == (R.q, 1, len(I.A))
    return CheckResult("length-1 codes: rank 1, W_G(a) = |A|, F_q Phi(a) is [q,1,|A|]", bool(ok))


def check_mixed_components() -> list[CheckResult]:
    C = mixed_component_code()
    comps = C.components
    out = [
        CheckResult(
            "mixed-component components are self-dual [6,3,3],[6,3,3],[6,3,3],[6,3,2]",
            [c.parameters for c in comps] == [(6, 3, 3)] * 3 + [(6, 3, 2)]
            and all(c.is_self_dual() for c in comps),
        ),
        CheckResult("mixed-component ring code is self-dual", C.is_self_dual() and C.dual() == C),
    ]
    gi = C.gray_image()
    out.append(
        CheckResult(
            "mixed-component Gray image is a self-dual [24,12,2] code",
            C.gray_parameters() == (24, 12, 2) and gi.is_self_dual() and gi.min_distance() == 2,
        )
    )
    out.append(CheckResult("mixed-component Phi(C^perp) = Phi(C)^perp", cd.gray_dual_commutes(C)))
    return out


def check_reciprocal_sets() -> list[CheckResult]:
    G1 = [str(g) for g in cc.solve_reciprocal_equation(_f4_poly("x^2 + 1"))]
    G2 = [str(g) for g in cc.solve_reciprocal_equation(_f4_poly("x^4 + x^2 + 1"))]
    return [
        CheckResult("G_1 = {x + 1}", G1 == ["x + 1"], ", ".join(G1)),
        CheckResult(
            "G_2 = {x^2 + x + 1, x^2 + a, x^2 + a^2}",
            sorted(G2) == sorted(["x^2 + x + 1", "x^2 + a", "x^2 + a^2"]),
            ", ".join(G2),
        ),
    ]


def check_lclms() -> list[CheckResult]:
    cases = [
        ("x + 1", "x^2 + x + 1", R4_G1),
        ("x + 1", "x^2 + a^2", R4_G2),
        ("x + 1", "x^2 + a", R4_G3),
    ]
    out = []
    for f1, f2, want in cases:
        got = str(lclm(_f4_poly(f1), _f4_poly(f2)))
        out.append(CheckResult(f"lclm({f1}, {f2}) = {want}", got == want, got))
    return out


def check_field_codes() -> list[CheckResult]:
    out = []
    for text, d in ((R4_G1, 2), (R4_G2, 3), (R4_G3, 3)):
        C = cc.code_from_generator_field(_f4_poly(text), 6, 1)
        got = C.code.min_distance()
        ok = got == d and C.is_self_dual() and C.is_closed()
        out.append(CheckResult(f"<{text}> is a self-dual skew cyclic [6,3,{d}] code", ok, f"d = {got}"))
    return out


def _dual_corpus():
    for p, r in ((3, 1), (2, 2)):
        F = make_field(p, r)
        for s in range(r):
            for n in range(1, 5):
                for li in range(1, F.q):
                    lam = F.element(li)
                    for g in cc.right_divisors(F, s, n, lam):
                        yield cc.SkewConstacyclicCodeF(g, n, lam)


def check_dual_formula(constant_rule=cc.dual_constant) -> list[CheckResult]:
    """Dual via ``h*`` and ``lambda*`` against the null-space dual."""
    total = bad = 0
    for C in _dual_corpus():
        total += 1
        try:
            D = cc.dual_field(C, constant_rule)
            ok = D.code == C.code.dual()
        except Exception:
            ok = False
        bad += not ok
    out = [CheckResult("dual formula = null-space dual over F_3, F_4 (n <= 4)", bad == 0, f"{total - bad}/{total}")]
    C = principal_r4_code()
    try:
        D = cc.dual_ring(C, constant_rule)
        ok = D.code == C.code.dual() and D.code == C.code
    except Exception:
        ok = False
    out.append(CheckResult("dual formula over R_4 gives the principal R_4 code back", ok))
    return out


def check_principal_r4() -> list[CheckResult]:
    C = principal_r4_code()
    R = C.ring
    g = C.principal_generator()
    out = [
        CheckResult(
            "principal generator x^3 + (v^3 + v^2)x^2 + (v^3 + v^2)x + 1",
            str(g) == R4_PRINCIPAL and C.divides_modulus(),
            str(g),
        ),
        CheckResult(
            "principal R_4 ring code is self-dual and skew Theta-cyclic",
            C.is_self_dual() and C.is_closed() and cc.self_dual_constacyclic_classifier(C) == cc.CYCLIC,
        ),
    ]
    G = C.generator_matrix()
    typo = typo_matrix()
    out.append(CheckResult("generator matrix row 1 equals the reference row", bool(np.all(G[0] == typo[0]))))
    fixed = principal_r4_matrix()
    same_space = cd.RingLinearCode.from_ring_rows(R, 6, fixed) == C.code
    out.append(
        CheckResult(
            "generator matrix equals the reference one with Theta applied in row 2 and row 3's final 1",
            bool(np.all(G == fixed)) and same_space,
        )
    )
    gi = C.code.gray_image()
    out.append(
        CheckResult(
            "principal R_4 Gray image is a self-dual [24,12,2] code",
            C.code.gray_parameters() == (24, 12, 2) and gi.is_self_dual(),
        )
    )
    return out


def check_existence_table() -> CheckResult:
    table = {
        (3, 1, 1): ((False,) * 3, (False, True, True)),
        (5, 1, 1): ((False,) * 3, (True,) * 3),
        (3, 2, 1): ((True, False, False), (False, True, True)),
        (3, 2, 2): ((False,) * 3, (True,) * 3),
    }
    ok = True
    for (p, r, s), (cyc, neg) in table.items():
        ok &= tuple(cc.self_dual_exists(p, r, s, k, cc.CYCLIC) for k in (1, 2, 4)) == cyc
        ok &= tuple(cc.self_dual_exists(p, r, s, k, cc.NEGACYCLIC) for k in (1, 2, 4)) == neg
    return CheckResult("existence criteria on the probe set", bool(ok))


def verify_paper(idempotent_labels=None, constant_rule=cc.dual_constant) -> list[CheckResult]:
    """Run every check; a check that raises is reported as FAIL."""
    steps = [
        check_r3_units,
        check_automorphism_counts,
        check_r2_swap,
        lambda: check_r4_idempotents(idempotent_labels),
        check_r4_eta1_typo,
        check_ideals_length_one,
        check_mixed_components,
        check_reciprocal_sets,
        check_lclms,
        check_field_codes,
        lambda: check_dual_formula(constant_rule),
        check_principal_r4,
        check_existence_table,
    ]
    results: list[CheckResult] = []
    for step in steps:
        try:
            res = step()
        except Exception as e:  # report, do not abort the run
            name = getattr(step, "__name__", "check")
            res = CheckResult(name, False, f"{type(e).__name__}: {e}")
        results.extend(res if isinstance(res, list) else [res])
    return results


def ring_summary(p: int, r: int = 1) -> dict:
    """Counts reported by ``ring-info``."""
    R = make_ring(p, r)
    q = R.q
    return {
        "q": q,
        "units": (q - 1) ** q,
        "units_enumerated": len(R.units()) if q**q <= 2**16 else None,
        "ideals": 2**q,
        "automorphisms": r * math.factorial(q),
        "idempotents": [str(idempotent(R, i)) for i in range(q)],
    }
