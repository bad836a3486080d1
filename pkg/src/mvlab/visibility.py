"""Visibility sets in graphs and their maximum sizes.

For a graph G and X a set of vertices, two vertices u, v are X-visible
when some shortest u,v-path has no internal vertex in X (endpoints may
lie in X). The supported set properties are:

- mutual:  every pair within X is X-visible
- total:   every pair of vertices of G is X-visible
- dual:    every pair within X and every pair outside X is X-visible
- outer:   every pair with at least one endpoint in X is X-visible
- general-position: no three distinct members of X lie on a common
  shortest path, i.e. dist(u,v) + dist(v,z) > dist(u,z) for all ordered
  triples of distinct members

The X-visibility test computes d = dist(u, v), takes the vertices w with
dist(u,w) + dist(w,v) = d (the shortest-path DAG), removes X, and tests
layered reachability from u to v.

Maximum sizes are found by exact branch and bound for the
subset-monotone variants (mutual, total, outer, general-position:
any subset of a valid set is valid, so an infeasible inclusion prunes
the whole branch). The dual variant is NOT subset-monotone - removing a
vertex from X moves it outside and creates new obligated pairs - so it
is solved by exhaustive enumeration, which caps the graph size it can
handle. Witnesses are canonicalized to the colex-least optimum.

For Kneser graphs with n >= 3k-1 (diameter 2), X is a total visibility
set iff the k-sets outside X, viewed as a k-uniform hypergraph, have
transversal number at least 2k: a pair of outside edges with a small
transversal would leave some pair of vertices with every common
neighbor inside X. ``kneser_total_mv_check_fast`` implements that
reduction; the definitional check must and does agree (swept in tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .budget import Budget, BudgetExhausted, SearchCounters
from .errors import ConstraintError, DomainError, PreconditionError
from .families import FamilyGraph, FamilyKind, format_family, graph_context, kneser
from .hypergraphs import hypergraph, transversal_number
from .subsets import KSubset, k_subset_masks

# definitional max search builds an all-pairs DAG-membership table; keep it
# to graphs where that table stays small
SEARCH_VERTEX_CAP = 128


class Variant(str, Enum):
    MUTUAL = "mutual"
    TOTAL = "total"
    DUAL = "dual"
    OUTER = "outer"
    GENERAL_POSITION = "general-position"


# CLI parameter names for the five maximum-size quantities
PARAM_TO_VARIANT = {
    "mu": Variant.MUTUAL,
    "mu-total": Variant.TOTAL,
    "mu-dual": Variant.DUAL,
    "mu-outer": Variant.OUTER,
    "gp": Variant.GENERAL_POSITION,
}
VARIANT_TO_PARAM = {v: p for p, v in PARAM_TO_VARIANT.items()}

MONOTONE_VARIANTS = frozenset(
    {Variant.MUTUAL, Variant.TOTAL, Variant.OUTER, Variant.GENERAL_POSITION})


@dataclass(frozen=True)
class VertexSet:
    """A validated, canonically ordered set of vertices of one graph."""

    graph: FamilyGraph
    members: tuple[KSubset, ...]

    def __len__(self):
        return len(self.members)

    def member_lists(self) -> list[list[int]]:
        return [list(s.members()) for s in self.members]


def vertex_set(graph: FamilyGraph, members: Iterable[KSubset]) -> VertexSet:
    uniq = {(s.size, s.bits): s for s in members}
    for s in uniq.values():
        if not graph.is_vertex(s):
            raise DomainError(f"{s!r} is not a vertex of {format_family(graph)}")
    ordered = tuple(uniq[key] for key in sorted(uniq))
    return VertexSet(graph, ordered)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    blocking: tuple[KSubset, ...] | None  # failing pair (or triple for gp)

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class VisibilityCertificate:
    graph: FamilyGraph
    variant: Variant
    value: int
    witness: tuple[KSubset, ...]
    status: str  # "exact" | "incomplete"
    nodes_expanded: int
    blocking_pair: tuple[KSubset, ...] | None = None

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def as_json(self) -> dict:
        out = {
            "family": format_family(self.graph),
            "variant": self.variant.value,
            "value": self.value,
            "witness": [list(s.members()) for s in self.witness],
            "status": self.status,
            "nodes_expanded": self.nodes_expanded,
        }
        if self.blocking_pair is not None:
            out["blocking_pair"] = [list(s.members()) for s in self.blocking_pair]
        return out


# ----------------------------------------------------------------------
# indexed machinery shared by the predicate and the search


class VisibilityIndex:
    """Vertex-indexed view of a graph with cached shortest-path layers."""

    __slots__ = ("graph", "ctx", "v", "_layers", "_through")

    def __init__(self, graph: FamilyGraph):
        self.graph = graph
        self.ctx = graph_context(graph)
        self.v = len(self.ctx.masks)
        self._layers: dict[tuple[int, int], tuple[int, list[int]]] = {}
        self._through: list[list[tuple[int, int]]] | None = None

    def index_of(self, s: KSubset) -> int:
        i = self.ctx.index.get(s.bits) if s.n == self.graph.n else None
        if i is None:
            raise DomainError(f"{s!r} is not a vertex of {format_family(self.graph)}")
        return i

    def subset(self, indices: Iterable[int]) -> tuple[KSubset, ...]:
        n = self.graph.n
        return tuple(KSubset(n, self.ctx.masks[i]) for i in sorted(set(indices)))

    def _pair_layers(self, iu: int, iv: int) -> tuple[int, list[int]]:
        """Distance and per-layer masks of internal shortest-path vertices."""
        if iu > iv:
            iu, iv = iv, iu
        key = (iu, iv)
        hit = self._layers.get(key)
        if hit is not None:
            return hit
        du = self.ctx.dist[iu]
        dv = self.ctx.dist[iv]
        d = du[iv]
        layers = [0] * (d + 1)
        if d >= 2:
            for w in range(self.v):
                s = du[w]
                if 0 < s < d and s + dv[w] == d:
                    layers[s] |= 1 << w
        self._layers[key] = (d, layers)
        return d, layers

    def pair_visible(self, iu: int, iv: int, obstacles: int) -> bool:
        """Is some shortest iu,iv-path internally disjoint from obstacles?

        Endpoint bits in ``obstacles`` are ignored (internal vertices only).
        """
        d, layers = self._pair_layers(min(iu, iv), max(iu, iv))
        if d <= 1:
            return True
        iu2, iv2 = min(iu, iv), max(iu, iv)
        adj = self.ctx.adj
        frontier = adj[iu2] & layers[1] & ~obstacles
        for level in range(2, d):
            if not frontier:
                return False
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & layers[level] & ~obstacles
        return bool(frontier & adj[iv2])

    def pairs_through(self) -> list[list[tuple[int, int]]]:
        """For each vertex w: the pairs (i, j) whose shortest-path DAG
        contains w as an internal vertex."""
        if self._through is None:
            v = self.v
            dist = self.ctx.dist
            through: list[list[tuple[int, int]]] = [[] for _ in range(v)]
            for i in range(v):
                di = dist[i]
                for j in range(i + 1, v):
                    dj = dist[j]
                    d = di[j]
                    if d < 2:
                        continue
                    for w in range(v):
                        s = di[w]
                        if 0 < s < d and s + dj[w] == d:
                            through[w].append((i, j))
            self._through = through
        return self._through


_INDEX_CACHE: dict[FamilyGraph, VisibilityIndex] = {}


def visibility_index(graph: FamilyGraph) -> VisibilityIndex:
    idx = _INDEX_CACHE.get(graph)
    if idx is None:
        idx = VisibilityIndex(graph)
        _INDEX_CACHE[graph] = idx
    return idx


# ----------------------------------------------------------------------
# predicates


def is_x_visible(graph: FamilyGraph, x_members: Iterable[KSubset],
                 u: KSubset, v: KSubset) -> bool:
    """Is the pair u, v X-visible (shortest path avoiding X internally)?"""
    idx = visibility_index(graph)
    iu, iv = idx.index_of(u), idx.index_of(v)
    obstacles = 0
    for s in x_members:
        obstacles |= 1 << idx.index_of(s)
    obstacles &= ~((1 << iu) | (1 << iv))
    return idx.pair_visible(iu, iv, obstacles)


def _obligated_pairs(variant: Variant, v: int, x_mask: int):
    """Yield the index pairs a visibility set of this variant must keep
    visible. Quadratic; used by the standalone predicate, not the search."""
    inside = [i for i in range(v) if (x_mask >> i) & 1]
    if variant is Variant.MUTUAL:
        for a in range(len(inside)):
            for b in range(a + 1, len(inside)):
                yield inside[a], inside[b]
    elif variant is Variant.TOTAL:
        for i in range(v):
            for j in range(i + 1, v):
                yield i, j
    elif variant is Variant.DUAL:
        for i in range(v):
            for j in range(i + 1, v):
                if ((x_mask >> i) & 1) == ((x_mask >> j) & 1):
                    yield i, j
    elif variant is Variant.OUTER:
        for i in range(v):
            for j in range(i + 1, v):
                if (x_mask >> i) & 1 or (x_mask >> j) & 1:
                    yield i, j
    else:
        raise DomainError(f"no pair obligations for variant {variant}")


def is_visibility_set(graph: FamilyGraph, x_members: Iterable[KSubset],
                      variant: Variant | str) -> CheckResult:
    """Definitional check of the variant property, with a blocking pair
    (or triple, for general-position) on failure."""
    variant = Variant(variant)
    idx = visibility_index(graph)
    x_idx = sorted({idx.index_of(s) for s in x_members})
    x_mask = 0
    for i in x_idx:
        x_mask |= 1 << i

    if variant is Variant.GENERAL_POSITION:
        dist = idx.ctx.dist
        for a in range(len(x_idx)):
            for b in range(a + 1, len(x_idx)):
                for c in range(b + 1, len(x_idx)):
                    i, j, k = x_idx[a], x_idx[b], x_idx[c]
                    if (dist[i][j] + dist[j][k] == dist[i][k]
                            or dist[j][i] + dist[i][k] == dist[j][k]
                            or dist[i][k] + dist[k][j] == dist[i][j]):
                        return CheckResult(False, idx.subset((i, j, k)))
        return CheckResult(True, None)

    for i, j in _obligated_pairs(variant, idx.v, x_mask):
        if not idx.pair_visible(i, j, x_mask):
            return CheckResult(False, idx.subset((i, j)))
    return CheckResult(True, None)


# ----------------------------------------------------------------------
# maximum visibility numbers


def max_visibility_number(graph: FamilyGraph, variant: Variant | str,
                          budget: Budget | None = None,
                          canonical_witness: bool = True) -> VisibilityCertificate:
    """Largest size of a visibility set of the given variant, by exact
    search; on budget exhaustion the best found so far is returned with
    status "incomplete"."""
    variant = Variant(variant)
    idx = visibility_index(graph)
    if idx.v > SEARCH_VERTEX_CAP:
        raise ConstraintError(
            f"definitional search supports at most {SEARCH_VERTEX_CAP} vertices; "
            f"{format_family(graph)} has {idx.v}")
    counters = SearchCounters(budget)

    if variant is Variant.DUAL:
        value, witness_mask, complete = _max_dual_exhaustive(idx, counters)
    else:
        value, witness_mask, complete = _max_monotone_bb(idx, variant, counters)
        if complete and canonical_witness and value > 0:
            witness_mask = _colex_least_witness(idx, variant, value, counters)

    witness = idx.subset(i for i in range(idx.v) if (witness_mask >> i) & 1)
    return VisibilityCertificate(
        graph=graph,
        variant=variant,
        value=value,
        witness=witness,
        status="exact" if complete else "incomplete",
        nodes_expanded=counters.nodes,
    )


class _MonotoneSearch:
    """Include/exclude DFS for the subset-monotone variants.

    Feasibility is maintained incrementally: when v joins the candidate
    set, only pairs involving v (new obligations) and pairs whose
    shortest-path DAG contains v (v as a new obstacle) are re-verified.
    Branch order follows the conflict heuristic: vertices appearing in
    more discovered blocking pairs are decided first.
    """

    def __init__(self, idx: VisibilityIndex, variant: Variant,
                 counters: SearchCounters):
        self.idx = idx
        self.variant = variant
        self.counters = counters
        self.through = idx.pairs_through() if variant is not Variant.GENERAL_POSITION else None
        self.conflicts = [0] * idx.v
        self.best_size = 0
        self.best_mask = 0

    # -- incremental feasibility ---------------------------------------

    def can_add(self, v: int, chosen_mask: int) -> bool:
        idx = self.idx
        variant = self.variant
        new_mask = chosen_mask | (1 << v)

        if variant is Variant.GENERAL_POSITION:
            dist = idx.ctx.dist
            dv = dist[v]
            inside = _bits_indices(chosen_mask)
            for ai in range(len(inside)):
                a = inside[ai]
                da = dist[a]
                for bi in range(ai + 1, len(inside)):
                    b = inside[bi]
                    if (da[v] + dv[b] == da[b]
                            or dv[a] + da[b] == dv[b]
                            or dv[b] + dist[b][a] == dv[a]):
                        self._record_conflict((v, a, b))
                        return False
            return True

        # pairs with v as a new internal obstacle
        for (i, j) in self.through[v]:
            if not self._obligated(i, j, new_mask):
                continue
            if not idx.pair_visible(i, j, new_mask):
                self._record_conflict((i, j))
                return False
        # pairs newly obligated by v's membership
        for u in self._new_partners(v, new_mask):
            if not idx.pair_visible(v, u, new_mask):
                self._record_conflict((v, u))
                return False
        return True

    def _obligated(self, i: int, j: int, x_mask: int) -> bool:
        variant = self.variant
        if variant is Variant.TOTAL:
            return True
        bi = (x_mask >> i) & 1
        bj = (x_mask >> j) & 1
        if variant is Variant.MUTUAL:
            return bool(bi and bj)
        return bool(bi or bj)  # outer

    def _new_partners(self, v: int, new_mask: int):
        variant = self.variant
        if variant is Variant.MUTUAL:
            return _bits_indices(new_mask & ~(1 << v))
        if variant is Variant.OUTER:
            return [u for u in range(self.idx.v) if u != v]
        # total: v's pairs were already obligated and are unaffected by
        # v joining X (v is an endpoint, never internal to its own pairs)
        return []

    def _record_conflict(self, vertices: tuple[int, ...]) -> None:
        for w in vertices:
            self.conflicts[w] += 1

    # -- search ----------------------------------------------------------

    def run(self) -> tuple[int, int, bool]:
        v = self.idx.v
        complete = True
        try:
            self._dfs(0, (1 << v) - 1)
        except BudgetExhausted:
            complete = False
        return self.best_size, self.best_mask, complete

    def _dfs(self, chosen_mask: int, undecided_mask: int) -> None:
        self.counters.tick()
        size = chosen_mask.bit_count()
        if size > self.best_size:
            self.best_size = size
            self.best_mask = chosen_mask
        if size + undecided_mask.bit_count() <= self.best_size:
            return
        if not undecided_mask:
            return
        v = self._pick(undecided_mask)
        rest = undecided_mask & ~(1 << v)
        if self.can_add(v, chosen_mask):
            self._dfs(chosen_mask | (1 << v), rest)
        self._dfs(chosen_mask, rest)

    def _pick(self, undecided_mask: int) -> int:
        best, best_score = -1, (-1, 0)
        m = undecided_mask
        while m:
            low = m & -m
            w = low.bit_length() - 1
            score = (self.conflicts[w], -w)
            if score > best_score:
                best, best_score = w, score
            m ^= low
        return best

    def feasible_exact(self, forced_mask: int, allowed_mask: int,
                       target: int) -> bool:
        """Does a valid set of size target exist with
        forced subset of X subset of allowed? (decision search)"""
        # forced must itself be valid, built up incrementally
        chosen = 0
        for v in _bits_indices(forced_mask):
            if not self.can_add(v, chosen):
                return False
            chosen |= 1 << v
        return self._decide(chosen, allowed_mask & ~forced_mask, target)

    def _decide(self, chosen_mask: int, undecided_mask: int, target: int) -> bool:
        self.counters.tick()
        size = chosen_mask.bit_count()
        if size >= target:
            return True
        if size + undecided_mask.bit_count() < target:
            return False
        v = self._pick(undecided_mask)
        rest = undecided_mask & ~(1 << v)
        if self.can_add(v, chosen_mask):
            if self._decide(chosen_mask | (1 << v), rest, target):
                return True
        return self._decide(chosen_mask, rest, target)


def _bits_indices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _max_monotone_bb(idx: VisibilityIndex, variant: Variant,
                     counters: SearchCounters) -> tuple[int, int, bool]:
    search = _MonotoneSearch(idx, variant, counters)
    return search.run()


def _colex_least_witness(idx: VisibilityIndex, variant: Variant, target: int,
                         counters: SearchCounters) -> int:
    """Among optimal witnesses, the one whose vertex-index mask is the
    smallest integer (colex-least): ban vertices from the top down
    whenever a valid optimum still exists without them."""
    search = _MonotoneSearch(idx, variant, counters)
    allowed = (1 << idx.v) - 1
    forced = 0
    try:
        for w in range(idx.v - 1, -1, -1):
            bit = 1 << w
            if not allowed & bit:
                continue
            if search.feasible_exact(forced, allowed & ~bit, target):
                allowed &= ~bit
            else:
                forced |= bit
        return forced
    except BudgetExhausted:
        # canonicalization is best-effort; fall back to a fresh search
        fallback = _MonotoneSearch(idx, variant, SearchCounters(None))
        _, mask, _ = fallback.run()
        return mask


def _max_dual_exhaustive(idx: VisibilityIndex,
                         counters: SearchCounters) -> tuple[int, int, bool]:
    """Dual visibility is not subset-monotone; enumerate all subsets in
    ascending mask order (first optimum found is the colex-least)."""
    v = idx.v
    pair_cache: dict[tuple[int, int], tuple[int, ...]] = {}
    best_size, best_mask = 0, 0
    complete = True

    # X = empty set is always dual (no obstacles at all), so best >= 0
    all_pairs = [(i, j) for i in range(v) for j in range(i + 1, v)]
    try:
        for mask in range(1 << v):
            counters.tick()
            size = mask.bit_count()
            if size <= best_size:
                continue
            ok = True
            for i, j in all_pairs:
                same_side = ((mask >> i) & 1) == ((mask >> j) & 1)
                if not same_side:
                    continue
                if not idx.pair_visible(i, j, mask):
                    ok = False
                    break
            if ok:
                best_size, best_mask = size, mask
    except BudgetExhausted:
        complete = False
    return best_size, best_mask, complete


# ----------------------------------------------------------------------
# Kneser total-visibility reduction


def kneser_total_mv_check_fast(n: int, k: int, x_members: Iterable[KSubset]) -> bool:
    """Is X a total visibility set of the Kneser graph, via the
    transversal reduction (requires n >= 3k-1, the diameter-2 regime)?

    X qualifies iff the k-sets outside X form a hypergraph with
    transversal number >= 2k. In particular X = all vertices fails for
    n >= 2k+1 (the empty outside family has transversal number 0).
    """
    graph = kneser(n, k)
    if n < 3 * k - 1:
        raise PreconditionError(
            f"the reduction requires n >= 3k-1 = {3 * k - 1}, got n={n}")
    x_bits = set()
    for s in x_members:
        if not graph.is_vertex(s):
            raise DomainError(f"{s!r} is not a vertex of {format_family(graph)}")
        x_bits.add(s.bits)
    outside = [m for m in k_subset_masks(n, k) if m not in x_bits]
    if not outside:
        return False
    h = hypergraph(n, outside)
    return transversal_number(h).tau >= 2 * k
