"""Exact Appell polynomial toolkit: thin bindings over the C++ core."""

from ._core import (
    bell,
    catalog,
    default_families,
    evaluate,
    moments,
    order_poly,
    poly,
    run_suite,
    series,
    suites,
    umbral_eval,
)

__all__ = [
    "bell",
    "catalog",
    "default_families",
    "evaluate",
    "moments",
    "order_poly",
    "poly",
    "run_suite",
    "series",
    "suites",
    "umbral_eval",
]
