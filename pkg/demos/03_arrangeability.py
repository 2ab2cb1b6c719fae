"""Arrangeability certificates and the greedy star coloring they drive.

An ordering with small arrangeability k lets a greedy pass produce a star
coloring with at most (k + 2)^2 colors.
"""

from __future__ import annotations

from sigmacolor import (
    Graph,
    Ordering,
    arrangeability_exact,
    arrangeability_of_ordering,
    gen_subdivided_biclique,
    greedy_star_coloring,
    is_star_coloring,
)

star = Graph(5, [(0, i) for i in range(1, 5)])
for name, order in (("center first", [0, 1, 2, 3, 4]), ("center last", [1, 2, 3, 4, 0])):
    cert = arrangeability_of_ordering(star, Ordering(order))
    print(f"star K_1,4, {name}: k = {cert.k}")

outer = [(i, (i + 1) % 5) for i in range(5)]
spokes = [(i, i + 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
petersen = Graph(10, outer + spokes + inner)

for g_name, g in (("Petersen", petersen), ("subdivided K_3,3", gen_subdivided_biclique(3).graph)):
    cert = arrangeability_exact(g, cap=g.n)
    c = greedy_star_coloring(g, cert.ordering)
    print(
        f"{g_name}: arrangeability {cert.k}, greedy star coloring uses {c.palette_size} "
        f"<= {(cert.k + 2) ** 2} colors, star: {is_star_coloring(g, c)}"
    )
