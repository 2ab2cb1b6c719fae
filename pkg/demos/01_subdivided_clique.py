"""A sparse graph whose neighborhood-constrained coloring needs many colors.

Subdividing every edge of K_n once gives a 2-degenerate graph. Asking each
subdivision vertex to see two distinct colors on its two neighbors forces
the n branch vertices to be pairwise distinct, so n colors are needed.
"""

from __future__ import annotations

from sigmacolor import (
    build_sigma_graph,
    degeneracy_ordering,
    gen_subdivided_clique,
    mad_sigma,
    maximum_average_degree,
    omega_sigma,
    rho,
    sigma_chromatic_with_witness,
)

print(f"{'n':>2} {'|V|':>4} {'mad(G)':>7} {'rho':>4} {'omega':>6} {'chi':>4} {'mad(G_S)':>9}")
for n in range(2, 8):
    g, s, _ = gen_subdivided_clique(n)
    chi, _ = sigma_chromatic_with_witness(g, s, cap=g.n)
    omega, _ = omega_sigma(g, s)
    print(
        f"{n:>2} {g.n:>4} {str(maximum_average_degree(g)):>7} {rho(s):>4} "
        f"{omega:>6} {chi:>4} {str(mad_sigma(g, s)):>9}"
    )

g, s, _ = gen_subdivided_clique(5)
_, k = degeneracy_ordering(g)
print(f"\nThe host graph for n = 5 is {k}-degenerate, yet")
print(f"its constraint graph is K_5 plus {g.n - 5} isolated vertices: {sorted(build_sigma_graph(g, s).edges)}")
