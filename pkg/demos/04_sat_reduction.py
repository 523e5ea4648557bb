"""3-SAT to forced/void vertices.

For each formula the reduction graph's census tells us whether the special
vertex w is in every optimal code, and that happens exactly when the formula
is unsatisfiable.
"""
from ldcodes.generators import CnfInstance, brute_force_sat, sat_reduction, verify_reduction

formulas = {
    "x1 or x2 or not x1": CnfInstance(2, ((1, 2, -1),)),
    "(x1|x2|x2)(~x1|x2|x2)": CnfInstance(2, ((1, 2, 2), (-1, 2, 2))),
    "all four sign patterns": CnfInstance(2, ((1, 2, 2), (-1, 2, 2), (1, -2, -2), (-1, -2, -2))),
    "x1 and not x1": CnfInstance(1, ((1, 1, 1), (-1, -1, -1))),
}

for name, F in formulas.items():
    R = sat_reduction(F)
    rep = verify_reduction(F)
    print(f"{name}")
    print(f"  graph n={R.graph.n} m={R.graph.m}; gamma={rep.gamma} (2n+m+1 = {rep.expected_gamma}); {rep.code_count} optimal codes")
    print(f"  satisfying assignment: {brute_force_sat(F)}")
    print(f"  w forced: {rep.w_forced}   v void: {rep.v_void}   all checks: {rep.ok}")
