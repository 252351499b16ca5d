"""Orbit-type (genus number) counts for the compact simply connected simple
Lie groups and simply connected simple algebraic groups of types A, B, C, D,
G2, F4.

Closed-form counts are evaluated exactly and independently cross-checked by
exhaustive enumeration of Weyl-group isotropy subgroups over rational grids;
disagreements are reported, never suppressed.
"""

import json as _json

from ._core import (
    partition_count,
    enumerate_partitions,
    formula_genus,
    weyl_order,
    check_derivation,
    _genus_report_json,
    _table_json,
    _compare_lattices_json,
    _selftest_json,
)

__all__ = [
    "partition_count",
    "enumerate_partitions",
    "formula_genus",
    "weyl_order",
    "check_derivation",
    "genus_report",
    "genus_table",
    "compare_lattices",
    "selftest",
]

__version__ = "0.1.0"


def genus_report(type, rank=0, mode="group", method="both", denominators=()):
    """Genus number of one type in one mode, as a dict.

    ``method`` selects "formula", "brute" (exhaustive enumeration), or "both";
    with both, the ``discrepancy`` key flags any disagreement.
    """
    return _json.loads(
        _genus_report_json(type, rank, mode, method, list(denominators))
    )


def genus_table(mode="group", max_rank=4, denominators=()):
    """Summary table over all supported types up to ``max_rank``."""
    return _json.loads(_table_json(mode, max_rank, list(denominators)))


def compare_lattices(type, rank=0, coarse_index=2, denominators=()):
    """Coroot lattice vs the coarser (1/coarse_index)-scaled lattice:
    strata where the stabilizer strictly grows (disconnected-centralizer
    witnesses in the quotient isogeny type)."""
    return _json.loads(
        _compare_lattices_json(type, rank, coarse_index, list(denominators))
    )


def selftest(seed=12345):
    """Run the acceptance suite; returns the result matrix as a dict."""
    return _json.loads(_selftest_json(seed))
