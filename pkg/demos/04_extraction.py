"""Recovering structure from a large pairwise-constrained set.

A rank-r hypergraph covering every pair on enough vertices contains a set of
n vertices whose pairs are all covered by 2-element hyperedges. When the
constraints have size two, a large clique of the constraint graph exposes a
1-subdivided K_n in the host.
"""

from __future__ import annotations

from sigmacolor import (
    extract_rank2_subhypergraph,
    extract_subdivided_clique,
    gen_subdivided_clique,
    is_rank2_full_on,
    is_subdivided_clique,
    random_full_hypergraph,
)

for r, n in ((2, 3), (3, 3), (3, 4)):
    h = random_full_hypergraph(4 * r * n * n + 2, r, seed=7)
    y = extract_rank2_subhypergraph(h, n, seed=1)
    print(f"rank {r}, {len(h.vertices)} vertices: found {sorted(y)} (rank-2 full: {is_rank2_full_on(h, y)})")

g, s, _ = gen_subdivided_clique(9)
branch, subdividers = extract_subdivided_clique(g, s, range(9), 3)
print(f"\nbranch vertices {branch}, subdividers {subdividers}")
print(f"verified: {is_subdivided_clique(g, branch, subdividers)}")
