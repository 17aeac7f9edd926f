"""Exact computations on affine moment graphs.

The heavy lifting happens in the compiled extension; this package re-exports
the main operations and adds a couple of conveniences.
"""

from momgra._core import (
    ajs_track,
    bm,
    bott_samelson,
    bott_samelson_sheaf,
    bound_u,
    describe,
    gkm_primes,
    graph,
    kl,
    run_job,
    scan,
    verify,
)

__all__ = [
    "ajs_track",
    "bm",
    "bott_samelson",
    "bott_samelson_sheaf",
    "bound_u",
    "describe",
    "gkm_primes",
    "graph",
    "kl",
    "run_job",
    "scan",
    "verify",
    "stalk_ranks",
]


def stalk_ranks(type_label, w, field="Q", p=0):
    """Ranks of the canonical-sheaf stalks over the ideal below ``w``."""
    result = bm(type_label, w, field, p)
    return {vertex: len(degrees) for vertex, degrees in result["data"]["stalks"].items()}
