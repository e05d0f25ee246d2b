"""Building a self-dual skew cyclic code over R_4 from three codes over F_4."""
from skewcodes import SkewPolynomial, lclm, make_field, solve_reciprocal_equation
from skewcodes.checks import principal_r4_code
from skewcodes.constacyclic import code_from_generator_field

F = make_field(2, 2)


def poly(text):
    return SkewPolynomial.parse(F, 1, text)


# %% Self-reciprocal factors
# x^6 + 1 = (x^2 + 1)(x^4 + x^2 + 1) in F_4[x; frobenius]; look for g with g * g^natural = target.
for target in ("x^2 + 1", "x^4 + x^2 + 1"):
    print(target, "->", [str(g) for g in solve_reciprocal_equation(poly(target))])

# %% Generators of length-6 codes
gens = [lclm(poly("x + 1"), poly(f)) for f in ("x^2 + x + 1", "x^2 + a^2", "x^2 + a")]
for g in gens:
    C = code_from_generator_field(g, 6, 1)
    print(f"{str(g):28s} [6, {C.code.k}, {C.code.min_distance()}] self-dual: {C.code.is_self_dual()}")

# %% The R_4 code with components (g1, g1, g2, g3)
C = principal_r4_code()
print("principal generator:", C.principal_generator())
print("self-dual:", C.is_self_dual())
for row in C.generator_matrix():
    print("  ", [str(C.ring.element(c)) for c in row])

gi = C.code.gray_image()
print(f"Gray image: [{gi.n}, {gi.k}, {gi.min_distance()}], self-dual: {gi.is_self_dual()}")
