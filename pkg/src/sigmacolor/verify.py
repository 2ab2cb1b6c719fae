"""Inequality suites run by ``sigmacolor verify``.

Each suite walks the built-in fixtures plus ``count`` seeded random
instances and records one entry per checked inequality.
"""

from __future__ import annotations

import hashlib
import random
import time
from math import comb, floor
from typing import Callable, Iterator

from . import formats
from .arrangeability import arrangeability_exact
from .coloring import (
    choosability_check,
    is_sigma_valid,
    sigma_chromatic_exact,
    sigma_color_greedy,
    sigma_color_product,
    sigma_color_via_star,
)
from .families import (
    encode_depth_d_system,
    gen_random_instance,
    gen_star_example,
    gen_subdivided_biclique,
    gen_subdivided_clique,
    gen_subdivision,
)
from .graph import Graph, back_degrees, chromatic_number_exact, degeneracy_ordering
from .hypergraph import (
    extract_rank2_subhypergraph,
    extract_subdivided_clique,
    is_rank2_full_on,
    is_subdivided_clique,
    omega_sigma,
    random_full_hypergraph,
)
from .sigma import NeighborhoodSystem, build_sigma_graph, mad_sigma, rho
from .star import greedy_star_coloring, is_star_coloring, star_chromatic_exact

SUITES = ("chain", "lemma1", "arrangeability", "turan", "families")


def instance_hash(g: Graph, s: NeighborhoodSystem | None = None) -> str:
    text = formats.format_graph(g) + (formats.format_sigma(s) if s is not None else "")
    return hashlib.sha256(text.encode()).hexdigest()[:12]


class Recorder:
    def __init__(self):
        self.checks: list[dict] = []

    def check(self, instance: str, name: str, ok: bool, **values) -> bool:
        self.checks.append({"instance": instance, "check": name, "values": values, "pass": bool(ok)})
        return ok


def random_instances(seed: int, count: int, max_n: int, max_rho: int, depths=(1,)) -> Iterator:
    for i in range(count):
        rng = random.Random(f"{seed}:{i}")
        n = rng.randint(2, max_n)
        p = rng.uniform(0.15, 0.6)
        cap = rng.randint(1, max_rho)
        depth = rng.choice(depths)
        yield gen_random_instance(n, p, cap, seed=rng.randrange(1 << 30), depth=depth)


def _chain(rec: Recorder, g: Graph, s: NeighborhoodSystem) -> None:
    key = instance_hash(g, s)
    gs = build_sigma_graph(g, s)
    r = rho(s)
    omega, _ = omega_sigma(g, s)
    chi = chromatic_number_exact(gs)[0]
    mad = mad_sigma(g, s)
    top = floor(mad) + 1
    if r >= 1:
        rec.check(key, "rho<=omega", r <= omega, rho=r, omega=omega)
    rec.check(key, "omega<=chi", omega <= chi, omega=omega, chi=chi)
    rec.check(key, "chi<=floor(mad)+1", chi <= top, chi=chi, mad=str(mad))
    greedy = sigma_color_greedy(g, s)
    rec.check(
        key,
        "greedy<=floor(mad)+1",
        is_sigma_valid(g, s, greedy) and greedy.palette_size <= top,
        palette=greedy.palette_size,
        bound=top,
    )
    touched = sorted({v for e in gs.edges for v in e})
    core, _ = gs.induced_subgraph(touched)
    if core.n <= 8 and top <= 4:
        lower_fails = chi - 1 < 1 or not choosability_check(core, chi - 1)
        upper_holds = choosability_check(core, top)
        rec.check(key, "chi<=ch<=floor(mad)+1", lower_fails and upper_holds, chi=chi, bound=top)


def suite_chain(rec: Recorder, seed: int, count: int) -> None:
    for n in range(2, 7):
        g, s, _ = gen_subdivided_clique(n)
        _chain(rec, g, s)
        g, s, _ = gen_star_example(n)
        _chain(rec, g, s)
    for g, s, _ in random_instances(seed, count, 16, 4, depths=(1, 1, 2)):
        _chain(rec, g, s)


def suite_lemma1(rec: Recorder, seed: int, count: int) -> None:
    instances = [gen_subdivided_clique(n) for n in range(2, 5)]
    instances += list(random_instances(seed, count, 12, 4))
    for g, s, _ in instances:
        key = instance_hash(g, s)
        k, c1 = star_chromatic_exact(g, cap=max(12, g.n))
        c = sigma_color_via_star(g, s, c1)
        bound = k * k * rho(s)
        rec.check(
            key,
            "via_star valid and <= k^2 rho",
            is_sigma_valid(g, s, c) and c.palette_size <= max(bound, 1),
            k=k,
            rho=rho(s),
            palette=c.palette_size,
            bound=bound,
        )


def suite_arrangeability(rec: Recorder, seed: int, count: int) -> None:
    for g, s, _ in random_instances(seed, count, 10, 4):
        key = instance_hash(g, s)
        cert = arrangeability_exact(g)
        k = cert.k
        back = max(back_degrees(g, cert.ordering), default=0)
        rec.check(key, "back-degree<=k+1", back <= k + 1, k=k, back_degree=back)
        _, degen = degeneracy_ordering(build_sigma_graph(g, s))
        bound = (2 * k + 1) * rho(s)
        rec.check(key, "degeneracy(G_sigma)<=(2k+1)rho", degen <= bound, degeneracy=degen, bound=bound)
        c = greedy_star_coloring(g, cert.ordering)
        rec.check(
            key,
            "greedy star <= (k+2)^2",
            is_star_coloring(g, c) and c.palette_size <= (k + 2) ** 2,
            k=k,
            palette=c.palette_size,
        )


def suite_turan(rec: Recorder, seed: int, count: int) -> None:
    for i in range(count):
        for r, n in ((2, 3), (3, 3)):
            size = 4 * r * n * n + 2
            h = random_full_hypergraph(size, r, seed=f"{seed}:{i}:{r}")
            key = f"hyper-{seed}-{i}-r{r}"
            y = extract_rank2_subhypergraph(h, n, seed=seed + i)
            rec.check(key, "rank2 extraction", is_rank2_full_on(h, y) and len(y) >= n, size=len(y), n=n, r=r)
    for n in (1, 2, 3):
        g, s, _ = gen_subdivided_clique(3 * n)
        branch, subs = extract_subdivided_clique(g, s, range(3 * n), n)
        rec.check(instance_hash(g, s), "subdivision extraction", is_subdivided_clique(g, branch, subs), n=n)


def suite_families(rec: Recorder, seed: int, count: int) -> None:
    for n in range(2, 7):
        g, s, _ = gen_subdivided_clique(n)
        chi = sigma_chromatic_exact(g, s)
        rec.check(instance_hash(g, s), "K_n* chi=n rho=2", chi == n and rho(s) == 2, n=n, chi=chi)
        g, s, _ = gen_star_example(n)
        chi = sigma_chromatic_exact(g, s)
        omega, _ = omega_sigma(g, s)
        rec.check(instance_hash(g, s), "S_n chi=omega=n", chi == omega == n, n=n, chi=chi, omega=omega)
    for n in (1, 2, 3):
        g, _, _ = gen_subdivided_biclique(n)
        k, _ = star_chromatic_exact(g, cap=g.n)
        rec.check(instance_hash(g), "H_n star chromatic <= 3", k <= 3, n=n, star_chromatic=k)
    for pattern in (Graph.complete(4), Graph.cycle(5)):
        for d in (1, 2):
            counts = [random.Random(f"{seed}:{d}:{i}").randint(1, 4 * d + 1) for i in range(pattern.m)]
            g, emb = gen_subdivision(pattern, counts)
            s = encode_depth_d_system(g, emb, d)
            chi = sigma_chromatic_exact(g, s, cap=max(24, g.n))
            target = chromatic_number_exact(pattern)[0]
            rec.check(instance_hash(g, s), "encoded chi >= chi(pattern)", chi >= target, chi=chi, pattern_chi=target)
    for g, s, _ in random_instances(seed, count, 10, 3):
        if rho(s) < 2:
            continue
        c = sigma_color_product(g, s)
        bound = _product_bound(g, s)
        rec.check(
            instance_hash(g, s),
            "product valid and <= k^C(rho,2)",
            is_sigma_valid(g, s, c) and c.palette_size <= bound,
            palette=c.palette_size,
            bound=bound,
        )


def _product_bound(g: Graph, s: NeighborhoodSystem) -> int:
    from .coloring import pair_systems

    k = max(sigma_color_greedy(g, sub).palette_size for sub in pair_systems(s, g))
    return k ** comb(rho(s), 2)


_RUNNERS: dict[str, Callable[[Recorder, int, int], None]] = {
    "chain": suite_chain,
    "lemma1": suite_lemma1,
    "arrangeability": suite_arrangeability,
    "turan": suite_turan,
    "families": suite_families,
}


def run_suite(suite: str, seed: int = 0, count: int = 20) -> dict:
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    rec = Recorder()
    _RUNNERS[suite](rec, seed, count)
    failures = sum(1 for c in rec.checks if not c["pass"])
    return {
        "suite": suite,
        "seed": seed,
        "count": count,
        "checks": rec.checks,
        "total": len(rec.checks),
        "failures": failures,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }
