"""
Presentations, Smith normal form, abelianization
================================================

Three different presentations of related groups should never disagree
about the abelianization. This script computes it from the vertex
presentation and from the fundamental group of the decomposition, and
shows the exact integer Smith normal form underneath.
"""

import random

from artin import (
    abelianize,
    artin_presentation,
    build_jsj,
    collapse_jsj,
    gog_presentation,
    odd_components,
    parse_graph,
    render_presentation,
    simplify_identifications,
    smith_normal_form,
)

g = parse_graph("e a b 3\ne b c 2\n")

# The vertex presentation has one generator per vertex and one braid
# relation per edge.
pres = artin_presentation(g)
print(render_presentation(pres))

# Abelianizing kills the even relations and glues odd-connected
# generators together, so the rank counts odd components.
print("abelianization:", abelianize(pres).describe())
print("odd components:", odd_components(g))

# The decomposition's fundamental group is presented with duplicated
# vertex copies identified along the tree; simplification removes the
# identification relators again.
gog = build_jsj(g)
big = gog_presentation(gog)
print("decomposition presentation has", len(big.generators), "generators;",
      "simplified:", simplify_identifications(big).generators)
print("same abelianization:", abelianize(big).describe(),
      "and", abelianize(gog_presentation(collapse_jsj(gog))).describe())

# Smith normal form works on any integer matrix and is exact.
m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
print("invariant factors of", m, "->", smith_normal_form(m))

# A quick randomized consistency check of the rank law.
rng = random.Random(7)
for trial in range(3):
    n = rng.randint(3, 6)
    edges = []
    verts = [f"v{i}" for i in range(n)]
    for i in range(1, n):
        j = rng.randrange(i)
        edges.append((verts[i], verts[j], rng.choice((2, 3, 4, 5))))
    h = parse_graph("".join(f"e {u} {v} {m}\n" for u, v, m in edges))
    shape = abelianize(artin_presentation(h))
    print(f"random tree {trial}: rank {shape.free_rank},",
          f"odd components {len(odd_components(h))}")
