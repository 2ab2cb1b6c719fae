"""Coloring through a star coloring of the host graph.

A star coloring of G orients every edge so that no vertex has two
in-neighbors of the same color. Coloring the resulting in-arc graph then
yields a valid coloring with at most k^2 * rho colors.
"""

from __future__ import annotations

from sigmacolor import (
    gen_random_instance,
    in_arc_graph,
    is_sigma_valid,
    orientation_from_star_coloring,
    rho,
    sigma_chromatic_exact,
    sigma_color_greedy,
    sigma_color_via_star,
    star_chromatic_exact,
    verify_in_orientation,
)

g, s, _ = gen_random_instance(12, 0.35, 3, seed=42)
print(f"host: {g.n} vertices, {g.m} edges, rho = {rho(s)}")

k, c1 = star_chromatic_exact(g)
print(f"star chromatic number: {k}, coloring {list(c1.color)}")

io = orientation_from_star_coloring(g, c1)
print(f"in-orientation valid: {verify_in_orientation(g, io)}, max out-degree {max(io.out_degrees(g.n))}")
print(f"in-arc graph: {in_arc_graph(g, s, c1).m} edges")

c = sigma_color_via_star(g, s, c1)
print(f"pipeline palette {c.palette_size} <= k^2 rho = {k * k * rho(s)}, valid: {is_sigma_valid(g, s, c)}")
print(f"greedy palette {sigma_color_greedy(g, s).palette_size}, optimum {sigma_chromatic_exact(g, s)}")
