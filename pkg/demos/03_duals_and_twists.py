"""Dual codes from the check polynomial, and the multi-twisted view of the Gray image."""
import numpy as np

from skewcodes import TwistSpec, enumerate_automorphisms, gray_map, make_field, make_ring
from skewcodes import multi_twisted_shift, right_divisors, shift_ring
from skewcodes.constacyclic import SkewConstacyclicCodeF, dual_field

# %% A skew constacyclic code over F_4 and its dual
F = make_field(2, 2)
lam = F.one
divs = right_divisors(F, 1, 6, lam)
print(len(divs), "monic right divisors of x^6 - 1")
g = next(d for d in divs if d.degree == 2)
C = SkewConstacyclicCodeF(g, 6, lam)
D = dual_field(C)
print("g  =", g, " lambda =", F.format(C.lam))
print("g* =", D.g, " lambda* =", F.format(D.lam))
print("agrees with the null space:", D.code == C.code.dual())

# %% Shifts over R_3 seen through the Gray map
# Shifting a ring word and then applying the Gray map is the same as applying a
# blockwise twisted shift (with a block permutation) to its Gray image.
R = make_ring(3)
rng = np.random.default_rng(1)
T = enumerate_automorphisms(R)[3]
lam = R.units()[5]
w = rng.integers(0, R.q, (4, R.q))
lhs = gray_map(shift_ring(R, w, T, lam))
rhs = multi_twisted_shift(gray_map(w), TwistSpec.from_ring(T, lam))
print(T)
print(lhs)
print(rhs)
print("equal:", np.array_equal(lhs, rhs))
