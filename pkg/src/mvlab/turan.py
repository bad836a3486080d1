"""Uniform Turan-type searches for suspended 4-cycles and 4-cliques.

A pattern here is a small k-uniform system on an apex set Y of size k-2
plus four extra vertices z1..z4:

- suspended 4-cycle: edges Y+{z1,z2}, Y+{z2,z3}, Y+{z3,z4}, Y+{z4,z1}
- suspended 4-clique: all six edges Y+{zi,zj}

For k = 2 the apex is empty and these are the plain C4 and K4.

Containment of a pattern in a k-uniform system H is decided through link
graphs: fix a candidate apex Y (a (k-2)-subset of [n]); the edges of H
containing Y induce a graph on the remaining vertices (pairs e minus Y),
and the pattern embeds with apex Y iff that link graph contains C4 (some
vertex pair with two common neighbors) resp. K4 (as a subgraph).

ex_uniform(n, k, pattern) is the exact maximum edge count of a
pattern-free k-uniform system on [n], by include/exclude branch and
bound over the colex-ordered candidate edges with the bound
|current| + |remaining candidates| <= incumbent. Since relabeling is a
pattern-automorphism of [n] and the optimum is nonempty, the search
fixes the first candidate edge {1..k} as included (root symmetry
normalization). On budget exhaustion the result degrades to an interval
[best found, candidate-count bound]; the n^(k-1/2)/k! asymptotic guide
can be reported alongside but is never a bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator

from .budget import Budget, Bounds, BudgetExhausted, SearchCounters
from .errors import ConstraintError, DomainError, MvlabError
from .hypergraphs import Hypergraph, hypergraph
from .subsets import k_subset_masks, k_subsets_of_mask, members_of


@dataclass(frozen=True)
class Pattern:
    """A suspended pattern: apex of size k-2 plus a 4-vertex pair-graph.

    ``pair_edges`` lists the zi-zj pairs (0-based into z1..z4) completed
    by the apex; ``name`` is the CLI tag (c4sus / k4sus).
    """

    name: str
    k: int
    pair_edges: tuple[tuple[int, int], ...]

    @property
    def apex_size(self) -> int:
        return self.k - 2

    @property
    def vertex_count(self) -> int:
        return self.k + 2

    @property
    def edge_count(self) -> int:
        return len(self.pair_edges)

    def edges_on(self, apex: tuple[int, ...], zs: tuple[int, int, int, int]
                 ) -> list[tuple[int, ...]]:
        """Concrete edges of an embedding (sorted member tuples)."""
        return [tuple(sorted(apex + (zs[a], zs[b]))) for a, b in self.pair_edges]


def build_c4_suspension(k: int) -> Pattern:
    """Four k-edges: the apex completed by the pairs of a 4-cycle."""
    if k < 2:
        raise ConstraintError(f"suspension patterns need k >= 2, got {k}")
    return Pattern("c4sus", k, ((0, 1), (1, 2), (2, 3), (3, 0)))


def build_k4_suspension(k: int) -> Pattern:
    """Six k-edges: the apex completed by all pairs on four vertices."""
    if k < 2:
        raise ConstraintError(f"suspension patterns need k >= 2, got {k}")
    return Pattern("k4sus", k, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def parse_pattern(spec: str) -> Pattern:
    """Parse a pattern spec string such as ``c4sus:k=3`` or ``k4sus:k=2``."""
    parts = spec.strip().split(":")
    if len(parts) != 2 or not parts[1].startswith("k="):
        raise DomainError(f"bad pattern spec {spec!r}; expected c4sus:k=<int> or k4sus:k=<int>")
    try:
        k = int(parts[1][2:])
    except ValueError:
        raise DomainError(f"bad pattern spec {spec!r}") from None
    if parts[0] == "c4sus":
        return build_c4_suspension(k)
    if parts[0] == "k4sus":
        return build_k4_suspension(k)
    raise DomainError(f"unknown pattern {parts[0]!r}; expected c4sus or k4sus")


def format_pattern(p: Pattern) -> str:
    return f"{p.name}:k={p.k}"


# ----------------------------------------------------------------------
# containment


def _link_graph(h: Hypergraph, apex_mask: int) -> dict[int, int]:
    """Adjacency (bit -> neighbor mask) of pairs completing the apex."""
    adj: dict[int, int] = {}
    for e in h.edges:
        if e & apex_mask == apex_mask:
            rest = e ^ apex_mask
            if rest.bit_count() != 2:
                continue
            lo = rest & -rest
            hi = rest ^ lo
            adj[lo] = adj.get(lo, 0) | hi
            adj[hi] = adj.get(hi, 0) | lo
    return adj


def _find_c4(adj: dict[int, int]) -> tuple[int, int, int, int] | None:
    """A 4-cycle (as bits b1-b2-b3-b4-b1) in a link graph, if any."""
    verts = sorted(adj)
    for i, u in enumerate(verts):
        for w in verts[i + 1:]:
            common = adj[u] & adj[w] & ~u & ~w
            if common.bit_count() >= 2:
                a = common & -common
                b = (common ^ a) & -(common ^ a)
                return u, a, w, b  # cycle u-a-w-b
    return None


def _find_k4(adj: dict[int, int]) -> tuple[int, int, int, int] | None:
    """A K4 (four mutually adjacent bits) in a link graph, if any."""
    for u in sorted(adj):
        nu = adj[u]
        cands = [b for b in sorted(adj) if b > u and nu & b]
        for i, a in enumerate(cands):
            na = adj[a]
            for j in range(i + 1, len(cands)):
                b = cands[j]
                if not na & b:
                    continue
                third = nu & na & adj[b]
                third &= ~(u | a | b)
                if third:
                    c = third & -third
                    return u, a, b, c
    return None


def contains_pattern(h: Hypergraph, pattern: Pattern
                     ) -> tuple[tuple[int, ...], tuple[int, int, int, int]] | None:
    """First embedding of the pattern in H, as (apex members, z members),
    or None. Apexes are scanned in colex order."""
    if h.edges and h.k != pattern.k:
        raise DomainError(
            f"pattern has uniformity {pattern.k}, hypergraph has {h.k or 'mixed'}")
    for apex_mask in k_subset_masks(h.n, pattern.apex_size):
        adj = _link_graph(h, apex_mask)
        if len(adj) < 4:
            continue
        found = _find_c4(adj) if pattern.name == "c4sus" else _find_k4(adj)
        if found is not None:
            zs = tuple(b.bit_length() for b in found)
            return members_of(apex_mask), zs  # type: ignore[return-value]
    return None


# ----------------------------------------------------------------------
# exact extremal search


@dataclass(frozen=True)
class TuranResult:
    n: int
    k: int
    pattern: Pattern
    lo: int
    hi: int
    witness: Hypergraph
    nodes_expanded: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def status(self) -> str:
        return "exact" if self.exact else "interval"

    @property
    def value(self) -> int:
        if not self.exact:
            raise MvlabError(f"extremal count is an interval [{self.lo}, {self.hi}]")
        return self.hi

    @property
    def bounds(self) -> Bounds:
        return Bounds(self.lo, self.hi)

    def as_json(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "pattern": format_pattern(self.pattern),
            "value": self.bounds.as_json(),
            "status": self.status,
            "witness": [list(m) for m in self.witness.edge_members()],
            "nodes_expanded": self.nodes_expanded,
        }
        if not self.exact:
            out["asymptotic_guide"] = {
                "value": mubayi_asymptote(self.n, self.k),
                "binding": False,
            }
        return out


class _EdgeState:
    """Included edges with per-apex link graphs, supporting undo."""

    __slots__ = ("pattern", "edges", "links", "trail")

    def __init__(self, pattern: Pattern):
        self.pattern = pattern
        self.edges: list[int] = []
        self.links: dict[int, dict[int, int]] = {}
        self.trail: list[list[tuple[int, int, int]]] = []

    def completes_pattern(self, edge: int) -> bool:
        """Would adding ``edge`` create a pattern through it?"""
        find = _completes_c4 if self.pattern.name == "c4sus" else _completes_k4
        for pair in _pair_splits(edge):
            apex = edge ^ pair
            adj = self.links.get(apex)
            if adj and find(adj, pair):
                return True
        return False

    def push(self, edge: int) -> None:
        undo: list[tuple[int, int, int]] = []
        for pair in _pair_splits(edge):
            apex = edge ^ pair
            adj = self.links.setdefault(apex, {})
            lo = pair & -pair
            hi = pair ^ lo
            undo.append((apex, lo, adj.get(lo, 0)))
            undo.append((apex, hi, adj.get(hi, 0)))
            adj[lo] = adj.get(lo, 0) | hi
            adj[hi] = adj.get(hi, 0) | lo
        self.trail.append(undo)
        self.edges.append(edge)

    def pop(self) -> None:
        self.edges.pop()
        for apex, bit, old in reversed(self.trail.pop()):
            adj = self.links[apex]
            if old:
                adj[bit] = old
            else:
                del adj[bit]


def _pair_splits(edge: int) -> Iterator[int]:
    """All 2-subsets of an edge (the candidate z-pairs; the rest is apex)."""
    bits = []
    m = edge
    while m:
        low = m & -m
        bits.append(low)
        m ^= low
    for i in range(len(bits)):
        for j in range(i + 1, len(bits)):
            yield bits[i] | bits[j]


def _completes_c4(adj: dict[int, int], pair: int) -> bool:
    """Does adding ``pair`` to the link graph close a 4-cycle through it?"""
    a = pair & -pair
    b = pair ^ a
    na = adj.get(a, 0) & ~b
    nb = adj.get(b, 0) & ~a
    # cycle a-b-x-y-a: x in N(b), y in N(x) cap N(a)
    x = nb
    while x:
        low = x & -x
        if adj.get(low, 0) & na & ~low:
            return True
        x ^= low
    return False


def _completes_k4(adj: dict[int, int], pair: int) -> bool:
    """Does adding ``pair`` close a K4? Needs an adjacent pair among the
    common neighbors of the endpoints."""
    a = pair & -pair
    b = pair ^ a
    common = adj.get(a, 0) & adj.get(b, 0) & ~pair
    x = common
    while x:
        low = x & -x
        if adj.get(low, 0) & common & ~low:
            return True
        x ^= low
    return False


def ex_uniform(n: int, k: int, pattern: Pattern,
               budget: Budget | None = None) -> TuranResult:
    """Exact maximum edges of a pattern-free k-uniform system on [n]."""
    if pattern.k != k:
        raise DomainError(f"pattern uniformity {pattern.k} != k = {k}")
    if n < k:
        return TuranResult(n, k, pattern, 0, 0, hypergraph(n, []), 0)
    candidates = list(k_subset_masks(n, k))
    total = len(candidates)
    if n < pattern.vertex_count:
        # the pattern needs k+2 vertices; everything is pattern-free
        return TuranResult(n, k, pattern, total, total,
                           hypergraph(n, candidates), 0)

    counters = SearchCounters(budget)
    state = _EdgeState(pattern)
    best: list[list[int]] = [[]]
    best_size = 0

    def dfs(i: int) -> None:
        nonlocal best_size
        counters.tick()
        if len(state.edges) > best_size:
            best_size = len(state.edges)
            best[0] = list(state.edges)
        if i >= total or len(state.edges) + (total - i) <= best_size:
            return
        edge = candidates[i]
        if not state.completes_pattern(edge):
            state.push(edge)
            dfs(i + 1)
            state.pop()
        dfs(i + 1)

    complete = True
    try:
        # root normalization: some optimum contains {1..k} up to relabeling
        state.push(candidates[0])
        best_size = 1
        best[0] = list(state.edges)
        dfs(1)
        state.pop()
    except BudgetExhausted:
        complete = False

    hi = best_size if complete else total
    lo = best_size
    witness = hypergraph(n, best[0])
    return TuranResult(n, k, pattern, lo, hi, witness, counters.nodes)


# ----------------------------------------------------------------------
# closed forms and asymptotics


def turan_k4_closed(n: int) -> int:
    """Maximum K4-free edge count on n vertices: floor(n^2 / 3)."""
    if n < 1:
        raise ConstraintError(f"need n >= 1, got {n}")
    return n * n // 3


def mubayi_asymptote(n: int, k: int) -> float:
    """The non-binding asymptotic guide n^(k - 1/2) / k! for the maximum
    suspended-4-cycle-free edge count."""
    if n < 1 or k < 1:
        raise ConstraintError(f"need n, k >= 1, got n={n}, k={k}")
    return float(n ** (k - 0.5) / factorial(k))
