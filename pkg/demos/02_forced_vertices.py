"""Which vertices lie in every optimal code?

Brooms G_{5m+4,t} carry the most forced vertices a graph of their size can
have; the characterization via G - v agrees with the brute-force census.
"""
from ldcodes.colour_graph import check_forced_bounds
from ldcodes.forced import classify_by_characterization, classify_oracle
from ldcodes.generators import broom, min_void_extremal, random_connected

for m, t in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 3)]:
    G = broom(5 * m + 4, t)
    c = classify_oracle(G)
    r = check_forced_bounds(G, c)
    print(f"broom({5 * m + 4},{t}): n={G.n} gamma={c.gamma} forced={sorted(c.forced)}")
    print(f"    k={r.k}  2/3(n-gamma)={2 * (G.n - c.gamma) / 3:.2f}  2n/5={2 * G.n / 5:.1f}  tight={r.void_bound_tight}")

for h in (2, 3):
    c = classify_oracle(min_void_extremal(h))
    print(f"\nG_{h}: gamma={c.gamma}, {len(c.void)} void vertices: {sorted(c.void)}")

print("\ncharacterization vs census on random graphs (seed printed):")
seed = 11
agree = 0
for i in range(20):
    G = random_connected(10, 0.25, seed + i)
    ok = classify_by_characterization(G) == classify_oracle(G).forced
    agree += ok
print(f"  seed={seed}: {agree}/20 agree")
