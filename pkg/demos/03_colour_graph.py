"""The colour graph of an LD-code, and what it says about swaps."""
from ldcodes.colour_graph import (
    build_colour_graph,
    colour_edge_counts,
    swap_witness,
    two_edge_subgraph,
    verify_structure,
)
from ldcodes.generators import path, star

G, S = path(10), (2, 4, 7, 9)
CG = build_colour_graph(G, S)
print("colour graph of P_10 with S = {2,4,7,9} (0 is the auxiliary vertex):")
for (x, y), u in sorted(CG.colours.items()):
    print(f"  {x:2d} -- {y:2d}  colour {u}")

rep = verify_structure(CG, G, S)
print("\nstructural checks:", " ".join(f"{k}:{'ok' if v else 'FAIL'}" for k, v in rep.checks.items()))
print(f"walks examined for (viii): {rep.walks_checked}")

print("\nedges per colour (whole graph, outside the code):")
for u, (a, b) in colour_edge_counts(CG, S).items():
    print(f"  {u}: {a}, {b}")

H = two_edge_subgraph(CG, S, S)
print(f"\ntwo edges per colour: |V|={H.order} |E|={H.size} components={H.components}")
print(f"  bipartite={H.bipartite} cactus={H.cactus}; 4|V| = {4 * H.order} vs 3|E| + 4cc = {3 * H.size + 4 * H.components}")

# optimal code of K_{1,4}: all leaves; any one leaf can hand over to the centre
K = star(4)
code = (2, 3, 4, 5)
for v in code:
    print(f"star: swap out leaf {v} -> bring in {swap_witness(K, code, v)}")
print(f"P_10: swap out 2 -> {swap_witness(G, S, 2)}")
