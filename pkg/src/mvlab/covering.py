"""Covering numbers C(n, k, t) and derived minimum-edge quantities.

C(n, k, t) is the minimum number of k-subsets of [n] (blocks) covering
every t-subset. The solver is an exact set-cover branch and bound:
branch on the colex-least uncovered t-set over the blocks containing it
(forbidding earlier siblings to partition the space), prune with
used + ceil(uncovered / C(k, t)) against the incumbent, seed the
incumbent greedily (callers may inject a stronger seed).

Complementation links coverings to transversals: a k-uniform system on
[n] has transversal number >= t+1 iff the complements of its edges (as
(n-k)-blocks) cover every t-set, because a t-set misses some edge
exactly when the complementary block contains it. Hence

    c_star(n, k) := min edges of a k-uniform system on [n] with
                    transversal number >= 2k  =  C(n, n-k, 2k-1),

computed by the same engine on the complement side. A deliberately
independent reference route, min_edges_with_tau (colex DFS over edge
sets driven by the transversal kernel), is kept for duality checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, ceil

from .budget import Budget, Bounds, BudgetExhausted, SearchCounters
from .constructions import build_h_nk
from .errors import ConstraintError, MvlabError
from .hypergraphs import Hypergraph, TransversalCertificate, hypergraph, transversal_number
from .kernels import solve_tau
from .subsets import k_subset_masks, k_subsets_of_mask, members_of


def steiner_lower_bound(n: int, k: int, t: int) -> int:
    """ceil(C(n,t) / C(k,t)), the counting lower bound for C(n, k, t)."""
    _validate_cover_params(n, k, t)
    return ceil(comb(n, t) / comb(k, t))


def _validate_cover_params(n: int, k: int, t: int) -> None:
    if not 1 <= t <= k <= n:
        raise ConstraintError(f"covering needs 1 <= t <= k <= n, got n={n}, k={k}, t={t}")


@dataclass(frozen=True)
class CoveringCertificate:
    n: int
    k: int
    t: int
    lo: int
    hi: int
    blocks: tuple[int, ...]  # block masks attaining hi
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
            raise MvlabError(f"covering value is an interval [{self.lo}, {self.hi}]")
        return self.hi

    @property
    def bounds(self) -> Bounds:
        return Bounds(self.lo, self.hi)

    def block_members(self) -> list[tuple[int, ...]]:
        return [members_of(b) for b in self.blocks]

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "value": self.bounds.as_json(),
            "status": self.status,
            "blocks": [list(m) for m in self.block_members()],
            "nodes_expanded": self.nodes_expanded,
        }


def covering_number(n: int, k: int, t: int, budget: Budget | None = None,
                    seed_blocks: tuple[int, ...] | None = None) -> CoveringCertificate:
    """Exact C(n, k, t) with witness blocks, or a proven interval on budget."""
    _validate_cover_params(n, k, t)
    if k == n:
        return CoveringCertificate(n, k, t, 1, 1, ((1 << n) - 1,), 0)
    if k == t:
        blocks = tuple(k_subset_masks(n, k))
        return CoveringCertificate(n, k, t, len(blocks), len(blocks), blocks, 0)

    universe = list(k_subset_masks(n, t))
    uidx = {m: i for i, m in enumerate(universe)}
    blocks = list(k_subset_masks(n, k))
    cover = []  # coverage bitmask over universe indices, per block
    blocks_for: list[list[int]] = [[] for _ in universe]
    for bi, b in enumerate(blocks):
        c = 0
        for tm in k_subsets_of_mask(b, t):
            i = uidx[tm]
            c |= 1 << i
            blocks_for[i].append(bi)
        cover.append(c)
    full = (1 << len(universe)) - 1
    per_block = comb(k, t)

    # incumbent: caller seed if valid, else greedy
    best: list[int] | None = None
    if seed_blocks:
        seed_idx = [blocks.index(b) for b in seed_blocks if b in blocks]
        got = 0
        for bi in seed_idx:
            got |= cover[bi]
        if got == full:
            best = sorted(seed_idx)
    if best is None:
        best = _greedy_cover(cover, full)
    best_size = len(best)

    lower = steiner_lower_bound(n, k, t)
    counters = SearchCounters(budget)
    nblocks = len(blocks)
    sols: list[list[int]] = [best]

    def rec(uncov: int, chosen: list[int], forbidden: int) -> None:
        counters.tick()
        nonlocal best_size
        if not uncov:
            if len(chosen) < best_size:
                best_size = len(chosen)
                sols[0] = list(chosen)
            return
        if len(chosen) + ceil(uncov.bit_count() / per_block) >= best_size:
            return
        e = (uncov & -uncov).bit_length() - 1
        newly_forbidden = forbidden
        for bi in blocks_for[e]:
            if (newly_forbidden >> bi) & 1:
                continue
            chosen.append(bi)
            rec(uncov & ~cover[bi], chosen, newly_forbidden)
            chosen.pop()
            newly_forbidden |= 1 << bi

    status_exact = True
    try:
        rec(full, [], 0)
    except BudgetExhausted:
        status_exact = False

    best = sols[0]
    hi = len(best)
    lo = hi if status_exact else max(lower, 0)
    lo = min(lo, hi)
    witness = tuple(sorted(blocks[bi] for bi in best))
    return CoveringCertificate(n, k, t, lo, hi, witness, counters.nodes)


def _greedy_cover(cover: list[int], full: int) -> list[int]:
    uncov = full
    out = []
    while uncov:
        bi = max(range(len(cover)), key=lambda i: ((cover[i] & uncov).bit_count(), -i))
        if not cover[bi] & uncov:
            raise MvlabError("cover candidates cannot cover the universe")
        out.append(bi)
        uncov &= ~cover[bi]
    return sorted(out)


# ----------------------------------------------------------------------
# minimum edges for a forced transversal number


@dataclass(frozen=True)
class CStarCertificate:
    """Minimum edge count of a k-uniform system on [n] with transversal
    number >= 2k, with the witness system and its solved transversal."""

    n: int
    k: int
    lo: int
    hi: int
    witness: Hypergraph
    witness_tau: TransversalCertificate
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
            raise MvlabError(f"c_star is an interval [{self.lo}, {self.hi}]")
        return self.hi

    @property
    def bounds(self) -> Bounds:
        return Bounds(self.lo, self.hi)

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "value": self.bounds.as_json(),
            "status": self.status,
            "edges": [list(m) for m in self.witness.edge_members()],
            "witness_tau": self.witness_tau.tau,
            "nodes_expanded": self.nodes_expanded,
        }


def c_star(n: int, k: int, budget: Budget | None = None) -> CStarCertificate:
    """Minimum edges of a k-uniform system on [n] with transversal number 2k.

    Requires n >= 3k and k >= 2 (below 3k no k-uniform system on [n]
    reaches transversal number 2k). Computed as C(n, n-k, 2k-1) on the
    complement side; the witness returned is the k-uniform edge system,
    re-validated by the transversal kernel.
    """
    if k < 2:
        raise ConstraintError(f"c_star needs k >= 2, got {k}")
    if n < 3 * k:
        raise ConstraintError(f"c_star needs n >= 3k = {3 * k}, got n={n}")
    full = (1 << n) - 1
    seed = _c_star_seed(n, k)
    seed_blocks = tuple(sorted(full ^ e for e in seed)) if seed else None
    cert = covering_number(n, n - k, 2 * k - 1, budget, seed_blocks=seed_blocks)
    edges = tuple(sorted(full ^ b for b in cert.blocks))
    witness = Hypergraph(n, edges)
    tau_cert = transversal_number(witness)
    return CStarCertificate(n, k, cert.lo, cert.hi, witness, tau_cert, cert.nodes_expanded)


def _c_star_seed(n: int, k: int) -> tuple[int, ...] | None:
    """Upper-bound witness to seed the search: 2k disjoint edges when they
    fit (n >= 2k^2), else the doubled construction when it applies."""
    base = (1 << k) - 1
    if n >= 2 * k * k:
        return tuple(base << (k * i) for i in range(2 * k))
    if k >= 3 and n >= 7 * k - 5:
        return tuple(build_h_nk(n, k).edges)
    return None


def min_edges_with_tau(n: int, k: int, tau_target: int,
                       budget: Budget | None = None,
                       m_cap: int | None = None) -> tuple[int, Hypergraph, int]:
    """Reference search: least m with a k-uniform, m-edge system on [n] of
    transversal number >= tau_target.

    Colex DFS over edge subsets with the prune tau(chosen) + slack <
    target, every tau solved by the transversal kernel. Deliberately
    independent of the covering engine; used to check the duality
    C(n, n-k, t) = min edges with tau >= t+1. Returns (m, witness,
    nodes). Raises BudgetExhausted on an exhausted budget (this is a
    reference routine, not a production path; it has no interval shape
    to degrade to).
    """
    if k < 1 or n < k:
        raise ConstraintError(f"need 1 <= k <= n, got n={n}, k={k}")
    if tau_target < 1:
        raise ConstraintError("tau_target must be >= 1")
    t = tau_target - 1
    if t > n - k:
        raise ConstraintError(
            f"no k-uniform system on [{n}] has transversal number {tau_target}")
    candidates = list(k_subset_masks(n, k))
    lb = max(tau_target, steiner_lower_bound(n, n - k, t) if t >= 1 else 1)
    cap = m_cap if m_cap is not None else len(candidates)
    counters = SearchCounters(budget)
    found: list[list[int]] = []

    def dfs(start: int, chosen: list[int], m: int) -> bool:
        counters.tick()
        current_tau = solve_tau(chosen, 0)[0] if chosen else 0
        slack = m - len(chosen)
        if current_tau + slack < tau_target:
            return False
        if not slack:
            found.append(list(chosen))
            return True
        for i in range(start, len(candidates)):
            if len(candidates) - i < slack:
                break
            chosen.append(candidates[i])
            if dfs(i + 1, chosen, m):
                chosen.pop()
                return True
            chosen.pop()
        return False

    for m in range(lb, cap + 1):
        if dfs(0, [], m):
            witness = hypergraph(n, found[0])
            return m, witness, counters.nodes
    raise ConstraintError(
        f"no k-uniform system on [{n}] with at most {cap} edges reaches "
        f"transversal number {tau_target}")
