"""Random hypergraph experiments: sampling, pruning, counting checks.

Every randomized routine takes an explicit integer seed and runs on
Python's Mersenne Twister, so runs are reproducible bit for bit; named
substreams are derived by hashing, never by reusing a generator.

The lab has three jobs: sample and prune families of random 3-graphs
into clique-free, pairwise edge-disjoint colorable layers; check the
counting bound that forces monochromatic cliques in complete pair
colorings; and report the parameter regime where the real construction
lives, which is far beyond anything samplable and therefore kept in
exact log2 form.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence, Union

from .colorengine import BudgetExceeded, EdgeColoring
from .hypercore import Edge, Hypergraph, enumerate_cliques

__all__ = [
    "derive_seed",
    "sample_h3",
    "sample_family",
    "random_complete_graph_coloring",
    "compute_bad_edges",
    "prune",
    "count_supported_cliques",
    "count_bad_supported",
    "property_b_toy_check",
    "RamseyEntry",
    "RamseyTable",
    "FactBoundReport",
    "fact_count_bound",
    "QuantityCheck",
    "ExpectationReport",
    "expectation_report",
    "PaperScaleParams",
    "paper_scale_params",
]


def derive_seed(*parts: Union[str, int]) -> int:
    """Stable 64-bit substream seed from labelled parts.

    Hash-based so it is independent of PYTHONHASHSEED and identical
    across runs and platforms.
    """
    text = "/".join(str(p) for p in parts)
    digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def sample_h3(n: int, p: float, seed: int) -> Hypergraph:
    """Binomial random 3-graph on vertices 0..n-1.

    Triples are visited in lexicographic order, each kept independently
    with probability p, so a seed pins down the hypergraph exactly.
    """
    if n < 0:
        raise ValueError("need a nonnegative vertex count")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [tri for tri in itertools.combinations(range(n), 3) if rng.random() < p]
    return Hypergraph.build(3, edges, vertices=range(n))


def sample_family(n: int, p: float, k: int, seed: int) -> tuple[Hypergraph, ...]:
    """k independent samples of sample_h3 on one vertex set, one per color."""
    if k < 1:
        raise ValueError("need at least one member")
    return tuple(sample_h3(n, p, derive_seed(seed, "member", i)) for i in range(k))


def random_complete_graph_coloring(n: int, k: int, seed: int) -> EdgeColoring:
    """Uniform k-coloring of the pairs of 0..n-1, lexicographic order."""
    if n < 2:
        raise ValueError("need at least two vertices")
    if k < 1:
        raise ValueError("need at least one color")
    rng = random.Random(seed)
    return EdgeColoring(
        k, {pair: rng.randrange(k) + 1 for pair in itertools.combinations(range(n), 2)}
    )


def compute_bad_edges(family: Sequence[Hypergraph], t: int) -> tuple[frozenset[Edge], ...]:
    """Per member: edges inside a t-clique, plus edges shared with another member."""
    if not family:
        raise ValueError("empty family")
    verts = family[0].vertices
    for h in family:
        if h.r != 3:
            raise ValueError("family members must be 3-uniform")
        if h.vertices != verts:
            raise ValueError("family members must share one vertex set")
    out = []
    for i, h in enumerate(family):
        bad: set[Edge] = set()
        for q in enumerate_cliques(h, t):
            bad.update(itertools.combinations(q, 3))
        for j, other in enumerate(family):
            if j != i:
                bad.update(h.edges & other.edges)
        out.append(frozenset(bad))
    return tuple(out)


def prune(family: Sequence[Hypergraph], t: int) -> tuple[Hypergraph, ...]:
    """Drop every bad edge from every member, then verify the outcome.

    The pruned members are t-clique-free (each clique lost all of its
    edges) and pairwise edge-disjoint (shared edges left both sides), so
    coloring member i with color i is well defined and clique-free on
    the union.  Verification failure raises, it is not a soft warning.
    """
    bad = compute_bad_edges(family, t)
    pruned = tuple(
        Hypergraph(h.r, h.vertices, h.edges - bad[i], h.labels)
        for i, h in enumerate(family)
    )
    for h in pruned:
        if enumerate_cliques(h, t):
            raise AssertionError("pruned member still has a clique")
    for x, y in itertools.combinations(pruned, 2):
        if x.edges & y.edges:
            raise AssertionError("pruned members still share an edge")
    return pruned


def count_supported_cliques(
    h: Hypergraph, pair_coloring: EdgeColoring, color: int, t: int
) -> int:
    """(t-1)-sets whose pairs are all one color and triples all edges of h.

    Such a set plus an apex vertex whose link carries pair_coloring is
    exactly a monochromatic K_t candidate in the layered construction.
    """
    if not 1 <= color <= pair_coloring.k:
        raise ValueError(f"color {color} outside 1..{pair_coloring.k}")
    found = 0
    for q in enumerate_cliques(h, t - 1):
        if all(pair_coloring.assignment[pq] == color for pq in itertools.combinations(q, 2)):
            found += 1
    return found


def count_bad_supported(
    family: Sequence[Hypergraph], pair_coloring: EdgeColoring, t: int
) -> int:
    """Supported cliques summed over members, member i in color i."""
    if len(family) != pair_coloring.k:
        raise ValueError("one member per color required")
    return sum(
        count_supported_cliques(h, pair_coloring, i, t)
        for i, h in enumerate(family, start=1)
    )


def property_b_toy_check(
    family: Sequence[Hypergraph], t: int, limit: int = 1 << 22
) -> bool:
    """Does every pair coloring support a clique in some member?

    Exhausts all k^C(n,2) colorings of the pairs, so it is only for tiny
    n; anything past the limit raises BudgetExceeded.  True means no
    coloring of an apex link could avoid a monochromatic clique.
    """
    if not family:
        raise ValueError("empty family")
    k = len(family)
    n = len(family[0].vertices)
    pairs = list(itertools.combinations(range(n), 2))
    total = k ** len(pairs)
    if total > limit:
        raise BudgetExceeded(f"{total} pair colorings exceed the limit")
    for assignment in itertools.product(range(1, k + 1), repeat=len(pairs)):
        psi = EdgeColoring(k, dict(zip(pairs, assignment)))
        if count_bad_supported(family, psi, t) == 0:
            return False
    return True


@dataclass(frozen=True)
class RamseyEntry:
    value: int
    note: str = ""
    engine_verified: bool = False


class RamseyTable:
    """Exact multicolor graph Ramsey numbers r_k(ell), plus a crude bound.

    Ships with r_2(3) = 6.  exact() refuses to guess: a missing entry is
    an error, while upper_bound() falls back to k^(k*ell - 2k + 1).
    """

    def __init__(self, entries: Optional[dict[tuple[int, int], RamseyEntry]] = None) -> None:
        self._entries: dict[tuple[int, int], RamseyEntry] = {
            (2, 3): RamseyEntry(6, "classical two-color triangle number")
        }
        if entries:
            self._entries.update(entries)

    def set(self, k: int, ell: int, entry: RamseyEntry) -> None:
        self._entries[(k, ell)] = entry

    def entry(self, k: int, ell: int) -> RamseyEntry:
        try:
            return self._entries[(k, ell)]
        except KeyError:
            raise ValueError(f"no exact Ramsey entry for k={k}, ell={ell}") from None

    def exact(self, k: int, ell: int) -> int:
        return self.entry(k, ell).value

    @staticmethod
    def generic_bound(k: int, ell: int) -> int:
        if k < 2 or ell < 3:
            raise ValueError("bound defined for k >= 2, ell >= 3")
        return k ** (k * ell - 2 * k + 1)

    def upper_bound(self, k: int, ell: int) -> int:
        if (k, ell) in self._entries:
            return self._entries[(k, ell)].value
        return self.generic_bound(k, ell)


@dataclass(frozen=True)
class FactBoundReport:
    """Monochromatic ell-clique counts of one pair coloring vs the bound."""

    n: int
    ell: int
    k: int
    r: int
    bound: Fraction
    counts: tuple[int, ...]
    best: int
    ok: bool


def fact_count_bound(
    psi: EdgeColoring, ell: int, table: Optional[RamseyTable] = None
) -> FactBoundReport:
    """Check one complete pair coloring against the counting bound.

    Any k-coloring of the pairs of an n-set must have some color with at
    least n^ell / (k * r^ell) monochromatic ell-cliques, r being the
    exact k-color Ramsey number of K_ell: each r-subset contributes a
    monochromatic clique and no clique is counted too often.  psi must
    color every pair of 0..n-1; n is derived from the keys.
    """
    verts = {x for e in psi.assignment for x in e}
    n = len(verts)
    if verts != set(range(n)):
        raise ValueError("pair coloring must live on vertices 0..n-1")
    want = comb(n, 2)
    if len(psi.assignment) != want or any(len(e) != 2 for e in psi.assignment):
        raise ValueError(f"need all {want} pairs of 0..{n - 1} colored")
    if not 2 <= ell <= n:
        raise ValueError("ell must lie in 2..n")
    r = (table or RamseyTable()).exact(psi.k, ell)
    if n < r:
        raise ValueError(f"bound needs n >= {r}: no {r}-subset exists below that")
    bound = Fraction(n**ell, psi.k * r**ell)
    counts = [0] * psi.k
    colors = psi.assignment
    for q in itertools.combinations(range(n), ell):
        it = itertools.combinations(q, 2)
        first = colors[next(it)]
        if all(colors[pq] == first for pq in it):
            counts[first - 1] += 1
    best = max(counts)
    return FactBoundReport(n, ell, psi.k, r, bound, tuple(counts), best, best >= bound)


@dataclass(frozen=True)
class QuantityCheck:
    name: str
    observed: float
    expected: float
    se: float
    ok: bool


@dataclass(frozen=True)
class ExpectationReport:
    n: int
    p: float
    t: int
    k: int
    trials: int
    checks: tuple[QuantityCheck, ...]
    ok: bool


def _mc_check(name: str, values: list[float], expected: float) -> QuantityCheck:
    trials = len(values)
    mean = sum(values) / trials
    var = sum((x - mean) ** 2 for x in values) / (trials - 1)
    se = math.sqrt(var / trials)
    if se == 0.0:
        ok = mean == expected
    else:
        ok = abs(mean - expected) <= 4.0 * se
    return QuantityCheck(name, mean, expected, se, ok)


def expectation_report(
    n: int, p: float, t: int, k: int, trials: int, seed: int
) -> ExpectationReport:
    """Monte Carlo sanity check of three first moments of the sampler.

    Per trial a fresh k-member family is sampled; the observed edge
    count of member 0, shared edge count of members 0 and 1, and
    t-clique count of member 0 are averaged over all trials and must
    land within four standard errors of C(n,3)p, C(n,3)p^2 and
    C(n,t)p^C(t,3) respectively.
    """
    if k < 2:
        raise ValueError("need at least two members to observe sharing")
    if trials < 30:
        raise ValueError("need at least 30 trials for a standard error")
    if t < 3:
        raise ValueError("clique size must be at least 3")
    edges: list[float] = []
    shared: list[float] = []
    cliques: list[float] = []
    for j in range(trials):
        fam = sample_family(n, p, k, derive_seed(seed, "trial", j))
        edges.append(float(fam[0].num_edges))
        shared.append(float(len(fam[0].edges & fam[1].edges)))
        cliques.append(float(len(enumerate_cliques(fam[0], t))))
    checks = (
        _mc_check("edges", edges, comb(n, 3) * p),
        _mc_check("shared-edges", shared, comb(n, 3) * p**2),
        _mc_check("cliques", cliques, comb(n, t) * p ** comb(t, 3)),
    )
    return ExpectationReport(n, p, t, k, trials, checks, all(c.ok for c in checks))


@dataclass(frozen=True)
class PaperScaleParams:
    """Construction parameters at true scale, in exact base-2 logarithms.

    The vertex count, probability and clique budget are far outside
    machine range (log2 n is in the thousands already for k=2, t=4), so
    n, p and C stay None and only f, the per-vertex failure allowance,
    is materialized as an exact Fraction.
    """

    k: int
    t: int
    log2_n: Fraction
    log2_C: Fraction
    log2_p: Fraction
    log2_f: Fraction
    f: Fraction
    n: Optional[int] = None
    p: Optional[Fraction] = None
    C: Optional[Fraction] = None


def paper_scale_params(k: int, t: int) -> PaperScaleParams:
    """Exponents of the random construction's parameter choices."""
    if k < 2:
        raise ValueError("need at least two colors")
    if t < 4:
        raise ValueError("need t >= 4")
    log_n = Fraction(10 * k * t**4)
    log_c = Fraction(100 * k, t)
    log_p = log_c - Fraction(60 * k * t**4, (t - 1) * (t - 2))
    log_f = Fraction(-k * t**2)
    f = Fraction(1, 2 ** (k * t**2))
    return PaperScaleParams(k, t, log_n, log_c, log_p, log_f, f)
