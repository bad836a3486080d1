"""Hypergraphs on [n], transversal numbers and the text exchange format.

A Hypergraph is an immutable set system: ground set [n] (isolated
vertices allowed), edges stored as deduplicated, colex-sorted bitmasks.
``k`` is the uniform edge size, or 0 for mixed edge sizes (allowed
internally; every quantity of interest here is defined on uniform
systems, but the transversal solver does not care).

Text format (used by the CLI to exchange hypergraphs):

    n k
    e11 e12 ... e1k
    ...

First line: ground set size and uniformity (0 if mixed); one edge per
line as space-separated ascending 1-based vertex indices. Writing is
canonical (edges colex-sorted), so write -> read -> write is bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError
from .kernels import ACTIVE_KERNEL, solve_tau
from .subsets import KSubset, MAX_GROUND_SET, mask_of, members_of


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[int, ...]  # bitmasks, deduplicated, colex-sorted

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND_SET:
            raise DomainError(f"ground set size {self.n} outside 1..{MAX_GROUND_SET}")
        seen = set()
        for e in self.edges:
            if e == 0:
                raise DomainError("the empty set cannot be an edge")
            if e >> self.n:
                raise DomainError(f"edge {members_of(e)} exceeds ground set [1..{self.n}]")
            if e in seen:
                raise DomainError(f"duplicate edge {members_of(e)}")
            seen.add(e)
        if list(self.edges) != sorted(self.edges):
            raise DomainError("edges must be colex-sorted; use hypergraph()")

    @property
    def k(self) -> int:
        """Uniform edge size, or 0 when edge sizes are mixed or no edges."""
        sizes = {e.bit_count() for e in self.edges}
        if len(sizes) == 1:
            return sizes.pop()
        return 0

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_sets(self) -> list[KSubset]:
        return [KSubset(self.n, e) for e in self.edges]

    def edge_members(self) -> list[tuple[int, ...]]:
        return [members_of(e) for e in self.edges]


def hypergraph(n: int, edges: Iterable[Sequence[int] | int]) -> Hypergraph:
    """Build a Hypergraph from member tuples or masks, normalizing order."""
    masks = set()
    for e in edges:
        if isinstance(e, int):
            masks.add(e)
        elif isinstance(e, KSubset):
            if e.n != n:
                raise DomainError(f"edge over [1..{e.n}] in a hypergraph on [1..{n}]")
            masks.add(e.bits)
        else:
            masks.add(mask_of(e, n))
    return Hypergraph(n, tuple(sorted(masks)))


def underlying_hypergraph(members: Iterable[KSubset]) -> Hypergraph:
    """The set system whose edges are exactly the given vertex sets.

    All sets must live on the same ground set; mixed ground sets are a
    domain error. Duplicates collapse (the input is a set of vertices).
    """
    members = list(members)
    if not members:
        raise DomainError("underlying hypergraph of an empty family is undefined; "
                          "pass the ground set explicitly via hypergraph(n, [])")
    ns = {s.n for s in members}
    if len(ns) != 1:
        raise DomainError(f"mixed ground sets {sorted(ns)}")
    n = ns.pop()
    return hypergraph(n, [s.bits for s in members])


# ----------------------------------------------------------------------
# transversal number


@dataclass(frozen=True)
class TransversalCertificate:
    """Minimum transversal with witness. ``optimal`` is False only when a
    node cap stopped the search, in which case tau is an upper bound."""

    hypergraph: Hypergraph
    tau: int
    transversal: KSubset
    optimal: bool
    nodes_expanded: int
    kernel: str = field(default=ACTIVE_KERNEL)

    def as_json(self) -> dict:
        return {
            "n": self.hypergraph.n,
            "k": self.hypergraph.k,
            "edge_count": self.hypergraph.edge_count,
            "tau": self.tau,
            "transversal": list(self.transversal.members()),
            "optimal": self.optimal,
            "nodes_expanded": self.nodes_expanded,
            "kernel": self.kernel,
        }


def transversal_number(h: Hypergraph, node_cap: int = 0) -> TransversalCertificate:
    """Exact minimum transversal via the active kernel.

    Every edge is nonempty by construction, so a transversal always
    exists; tau = 0 iff there are no edges.
    """
    tau, mask, nodes, complete = solve_tau(list(h.edges), node_cap)
    return TransversalCertificate(
        hypergraph=h,
        tau=tau,
        transversal=KSubset(h.n, mask),
        optimal=complete,
        nodes_expanded=nodes,
    )


def is_transversal(h: Hypergraph, vertex_mask: int) -> bool:
    return all(e & vertex_mask for e in h.edges)


# ----------------------------------------------------------------------
# independent cross-check route for 2-uniform systems (Gallai: tau + alpha = n)


def independence_number(h: Hypergraph) -> int:
    """Max independent set of a 2-uniform hypergraph (a simple graph).

    Deliberately a different algorithm family than the transversal
    kernel (vertex branching on a max-degree vertex, alpha(G) =
    max(alpha(G - v), 1 + alpha(G - N[v]))), so tau + alpha = n serves as
    a genuine two-route consistency check in tests. Isolated vertices of
    [n] count toward alpha.
    """
    adj = {}
    for e in h.edges:
        if e.bit_count() != 2:
            raise DomainError("independence_number needs 2-uniform edges")
        lo = e & -e
        hi = e ^ lo
        adj[lo] = adj.get(lo, 0) | hi
        adj[hi] = adj.get(hi, 0) | lo

    isolated = h.n - len(adj)

    def alpha(active: int) -> int:
        # pick a max-degree active vertex; on degree 0, all active are free
        best_bit, best_deg = 0, -1
        m = active
        while m:
            low = m & -m
            deg = (adj[low] & active).bit_count()
            if deg > best_deg:
                best_bit, best_deg = low, deg
            m ^= low
        if best_deg <= 0:
            return active.bit_count()
        without = alpha(active ^ best_bit)
        with_v = 1 + alpha(active & ~(adj[best_bit] | best_bit))
        return max(without, with_v)

    covered = 0
    for bit in adj:
        covered |= bit
    return isolated + alpha(covered)


# ----------------------------------------------------------------------
# text format


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.k}"]
    for e in h.edges:
        lines.append(" ".join(str(x) for x in members_of(e)))
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DomainError("empty hypergraph file")
    head = lines[0].split()
    if len(head) != 2:
        raise DomainError(f"bad header {lines[0]!r}; expected 'n k'")
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError:
        raise DomainError(f"bad header {lines[0]!r}; expected integers") from None
    edges = []
    for ln in lines[1:]:
        try:
            members = [int(x) for x in ln.split()]
        except ValueError:
            raise DomainError(f"bad edge line {ln!r}") from None
        if members != sorted(members) or len(set(members)) != len(members):
            raise DomainError(f"edge {ln!r} must list distinct ascending vertices")
        if k > 0 and len(members) != k:
            raise DomainError(f"edge {ln!r} has size {len(members)}, expected {k}")
        edges.append(members)
    return hypergraph(n, edges)
