import itertools
import random

import pytest

from mvlab.errors import DomainError
from mvlab.hypergraphs import (
    format_hypergraph,
    hypergraph,
    independence_number,
    is_transversal,
    parse_hypergraph,
    transversal_number,
    underlying_hypergraph,
)
from mvlab.kernels import ACTIVE_KERNEL, solve_tau
from mvlab._tau_fallback import solve_tau as solve_tau_py
from mvlab.subsets import KSubset

from oracles import brute_tau


def _random_hypergraph(rng: random.Random, n: int, m: int):
    edges = []
    for _ in range(m):
        size = rng.randint(1, min(4, n))
        edges.append(tuple(sorted(rng.sample(range(1, n + 1), size))))
    return edges


def test_tau_matches_brute_force():
    rng = random.Random(20260815)
    for _ in range(60):
        n = rng.randint(2, 9)
        edges = _random_hypergraph(rng, n, rng.randint(1, 10))
        h = hypergraph(n, edges)
        cert = transversal_number(h)
        assert cert.optimal
        assert cert.tau == brute_tau(edges, n)
        assert is_transversal(h, cert.transversal.bits)
        assert cert.transversal.size == cert.tau


def test_tau_zero_iff_no_edges():
    cert = transversal_number(hypergraph(5, []))
    assert cert.tau == 0 and cert.transversal.size == 0


def test_kernel_backends_agree():
    rng = random.Random(7)
    for _ in range(120):
        n = rng.randint(1, 12)
        edges = [tuple(sorted(rng.sample(range(1, n + 1), rng.randint(1, min(3, n)))))
                 for _ in range(rng.randint(1, 12))]
        masks = [sum(1 << (v - 1) for v in e) for e in edges]
        assert solve_tau(masks) == solve_tau_py(masks)
    assert ACTIVE_KERNEL in ("native", "python")


def test_kernel_node_cap_degrades_identically():
    masks = [0b111, 0b1010, 0b10100, 0b1001000, 0b10000001]
    for cap in (1, 2, 3, 5, 8, 0):
        assert solve_tau(masks, cap) == solve_tau_py(masks, cap)
    tau, _, _, complete = solve_tau_py(masks, 1)
    assert not complete or tau == solve_tau_py(masks)[0]


def test_gallai_identity_on_graphs():
    # tau + alpha = n; independence_number is a separate branching algorithm
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(2, 10)
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        edges = rng.sample(pairs, rng.randint(1, len(pairs)))
        h = hypergraph(n, edges)
        assert transversal_number(h).tau + independence_number(h) == n


def test_independence_rejects_non_graphs():
    with pytest.raises(DomainError):
        independence_number(hypergraph(4, [(1, 2, 3)]))


def test_underlying_hypergraph():
    members = [KSubset.from_members([1, 2], 5), KSubset.from_members([3, 5], 5)]
    h = underlying_hypergraph(members)
    assert h.n == 5 and h.edge_count == 2
    assert h.edge_members() == [(1, 2), (3, 5)]


def test_format_parse_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(2, 9)
        edges = _random_hypergraph(rng, n, rng.randint(0, 6))
        h = hypergraph(n, sorted(set(edges)))
        again = parse_hypergraph(format_hypergraph(h))
        assert again.n == h.n and again.edges == h.edges


def test_parse_rejects_malformed():
    for text in ("", "5", "5 2\n1 1", "5 2\n2 1", "5 2\n1 2 3", "x y\n1 2"):
        with pytest.raises(DomainError):
            parse_hypergraph(text)


def test_hypergraph_validates_members():
    with pytest.raises(DomainError):
        hypergraph(3, [(1, 4)])
    with pytest.raises(DomainError):
        hypergraph(3, [()])  # mask 0: the empty set cannot be an edge


def test_certificate_reports_kernel():
    cert = transversal_number(hypergraph(3, [(1, 2)]))
    assert cert.kernel == ACTIVE_KERNEL
    assert cert.as_json()["kernel"] == ACTIVE_KERNEL
