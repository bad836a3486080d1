# cython: language_level=3, boundscheck=False, wraparound=False
"""Native transversal-number kernel.

Mirror of _tau_fallback.solve_tau: same branch order, same pruning, same
greedy seeds, so both backends return identical (tau, witness, nodes,
complete) tuples and the node counters are directly comparable. Masks are
held in unsigned 64-bit words; inputs with a wider ground set are handed
to the pure-Python kernel, which has no width limit.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64


cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static int mv_popcount(unsigned long long x)
    { return __builtin_popcountll(x); }
    static int mv_ctz(unsigned long long x)
    { return __builtin_ctzll(x); }
    #else
    static int mv_popcount(unsigned long long x)
    { int c = 0; while (x) { x &= x - 1; ++c; } return c; }
    static int mv_ctz(unsigned long long x)
    { int c = 0; while (!(x & 1)) { x >>= 1; ++c; } return c; }
    #endif
    """
    int mv_popcount(u64 x) nogil
    int mv_ctz(u64 x) nogil


cdef int _matching_lower(u64 *edges, int count) nogil:
    cdef u64 used = 0
    cdef int i, out = 0
    for i in range(count):
        if not (edges[i] & used):
            used |= edges[i]
            out += 1
    return out


cdef u64 _greedy_upper(u64 *edges, int count) nogil:
    # max-degree greedy; smallest bit wins ties (ascending scan, strict >)
    cdef u64 chosen = 0, bit
    cdef int counts[64]
    cdef int i, b, best_b, best_c, live
    cdef u64 *work = <u64 *> malloc(count * sizeof(u64))
    if work == NULL:
        return 0  # caller swaps in a worst-case incumbent
    for i in range(count):
        work[i] = edges[i]
    live = count
    while live > 0:
        for b in range(64):
            counts[b] = 0
        for i in range(live):
            bit = work[i]
            while bit:
                counts[mv_ctz(bit)] += 1
                bit &= bit - 1
        best_b = 0
        best_c = 0
        for b in range(64):
            if counts[b] > best_c:
                best_c = counts[b]
                best_b = b
        chosen |= (<u64> 1) << best_b
        i = 0
        for b in range(live):
            if not (work[b] & chosen):
                work[i] = work[b]
                i += 1
        live = i
    free(work)
    return chosen


cdef struct Search:
    u64 *scratch        # 66 levels of edge buffers, m slots each
    int m
    long long nodes
    long long node_cap
    int best_size
    u64 best_mask
    bint complete


cdef void _dfs(Search *s, u64 *uncovered, int count, u64 chosen,
               int depth) nogil:
    cdef int size, i, pc, best_pc, child_count
    cdef u64 branch, bit, low
    cdef u64 *child
    if not s.complete:
        return
    s.nodes += 1
    if s.node_cap and s.nodes > s.node_cap:
        s.complete = False
        return
    size = mv_popcount(chosen)
    if count == 0:
        if size < s.best_size:
            s.best_size = size
            s.best_mask = chosen
        return
    if size + _matching_lower(uncovered, count) >= s.best_size:
        return
    # branch edge: fewest vertices, numerically smallest on ties
    branch = uncovered[0]
    best_pc = mv_popcount(branch)
    for i in range(1, count):
        pc = mv_popcount(uncovered[i])
        if pc < best_pc or (pc == best_pc and uncovered[i] < branch):
            best_pc = pc
            branch = uncovered[i]
    child = s.scratch + (depth + 1) * s.m
    bit = branch
    while bit:
        low = bit & (~bit + 1)
        child_count = 0
        for i in range(count):
            if not (uncovered[i] & low):
                child[child_count] = uncovered[i]
                child_count += 1
        _dfs(s, child, child_count, chosen | low, depth + 1)
        if not s.complete:
            return
        bit &= bit - 1


def solve_tau(edges, node_cap: int = 0):
    """Exact minimum transversal.

    Returns (tau, witness_mask, nodes_expanded, complete). ``complete`` is
    False only when ``node_cap`` > 0 was exhausted, in which case tau is
    the best known upper bound and witness_mask attains it.
    """
    cdef Search s
    cdef u64 *base
    cdef u64 seed
    cdef int m, i

    uniq = sorted(set(int(e) for e in edges))
    if any(e >> 64 for e in uniq):
        from ._tau_fallback import solve_tau as fallback
        return fallback(edges, node_cap)
    minimal = []
    for e in uniq:
        if e == 0:
            raise ValueError("empty edge has no transversal")
        redundant = False
        for f in minimal:
            if f & e == f:
                redundant = True
                break
        if not redundant:
            minimal.append(e)
    if not minimal:
        return 0, 0, 0, True

    m = len(minimal)
    base = <u64 *> malloc(66 * m * sizeof(u64))
    if base == NULL:
        raise MemoryError
    try:
        for i in range(m):
            base[i] = minimal[i]
        seed = _greedy_upper(base, m)
        if seed == 0:
            for e in minimal:
                seed |= <u64> e
        s.scratch = base
        s.m = m
        s.nodes = 0
        s.node_cap = node_cap
        s.best_size = mv_popcount(seed)
        s.best_mask = seed
        s.complete = True
        with nogil:
            _dfs(&s, base, m, 0, 0)
        return s.best_size, int(s.best_mask), int(s.nodes), bool(s.complete)
    finally:
        free(base)
