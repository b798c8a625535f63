"""Exact integer-partition enumeration, q-series expansion and identity verification."""

from ._core import (
    ConstraintSpec,
    MSeries,
    Partition,
    boulet,
    conjugate,
    count_by_norm,
    count_crank_class,
    crank,
    decoration,
    durfee,
    enumerate_by_norm,
    enumerate_by_statistic,
    even_index_sum,
    make_partition,
    member,
    min_partition,
    odd_index_sum,
    parity,
    pointwise_add,
    product_form,
    registry_ids,
    statistic,
    sum_form,
    unrestricted_odd_index_series,
    verify,
    verify_all,
    verify_family,
    weight,
    weight_identity_check,
)

__version__ = "0.1.0"

__all__ = [
    "ConstraintSpec",
    "MSeries",
    "Partition",
    "boulet",
    "conjugate",
    "count_by_norm",
    "count_crank_class",
    "crank",
    "decoration",
    "durfee",
    "enumerate_by_norm",
    "enumerate_by_statistic",
    "even_index_sum",
    "make_partition",
    "member",
    "min_partition",
    "odd_index_sum",
    "parity",
    "pointwise_add",
    "product_form",
    "registry_ids",
    "statistic",
    "sum_form",
    "unrestricted_odd_index_series",
    "verify",
    "verify_all",
    "verify_family",
    "weight",
    "weight_identity_check",
]
