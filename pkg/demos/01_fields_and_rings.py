"""Fields, the ring R_q and its automorphisms.

Run with ``python3 demos/01_fields_and_rings.py``.
"""
import numpy as np

from skewcodes import enumerate_automorphisms, idempotent, make_field, make_ring

# %% Finite fields
# F_4 is built from the smallest irreducible x^2 + x + 1; elements print as powers of a.
F = make_field(2, 2)
print(F, [F.format(i) for i in range(F.q)])

# Arithmetic works on numpy arrays of element indices.
x = np.arange(F.q)
print("x * x     =", [F.format(int(i)) for i in F.mul(x, x)])
print("frobenius =", [F.format(int(i)) for i in F.frobenius(x, 1)])

# %% The ring R_3 = F_3[v]/(v^3 - v)
R = make_ring(3)
units = R.units()
print(f"R_3 has {R.q ** R.q} elements and {len(units)} units")
for u in units:
    print("  ", u)

# The primitive idempotents split R_3 into three copies of F_3.
etas = [idempotent(R, i) for i in range(R.q)]
print("idempotents:", etas)
print("sum:", sum(etas[1:], etas[0]))

# %% Automorphisms of R_4
# Each one is a field automorphism followed by a permutation of CRT coordinates.
R4 = make_ring(2, 2)
auts = enumerate_automorphisms(R4)
print(len(auts), "automorphisms of R_4")
T = auts[7]
print(T, ": v ->", T(R4.v))
