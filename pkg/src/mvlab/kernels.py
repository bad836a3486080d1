"""Kernel selection: native transversal solver when compiled, else pure Python.

``solve_tau(edges, node_cap=0) -> (tau, witness_mask, nodes, complete)``
is the single hot primitive shared by the covering searches, the Kneser
total-visibility fast check and construction validation. The compiled
Cython backend (mvlab._tau_core) is used when the extension built; the
pure-Python fallback implements the identical algorithm. ACTIVE_KERNEL
records which one is live so certificates and benchmarks can report it.
"""

from __future__ import annotations

try:
    from ._tau_core import solve_tau  # type: ignore[attr-defined]

    ACTIVE_KERNEL = "native"
except ImportError:  # extension not built; identical pure-Python algorithm
    from ._tau_fallback import solve_tau

    ACTIVE_KERNEL = "python"

__all__ = ["solve_tau", "ACTIVE_KERNEL"]
