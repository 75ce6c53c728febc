"""Python bindings for the sparse_evolve C++ library."""

from ._core import (
    Alpha,
    DegeneracyError,
    EvolvingGraph,
    InfeasibleError,
    RootedExtension,
    asymptotic_exponent,
    classify,
    coeff_C,
    count_embeddings,
    d_value,
    delta,
    edge_probability,
    exact_expectation_oracle,
    expected_count_closed,
    grow,
    integral_I,
    integral_J,
    irregular_vertices,
    is_t_generic,
    rooted_automorphism_count,
    run_experiment,
    weak_closure,
)

__all__ = [
    "Alpha",
    "DegeneracyError",
    "EvolvingGraph",
    "InfeasibleError",
    "RootedExtension",
    "asymptotic_exponent",
    "classify",
    "coeff_C",
    "count_embeddings",
    "d_value",
    "delta",
    "edge_probability",
    "exact_expectation_oracle",
    "expected_count_closed",
    "grow",
    "integral_I",
    "integral_J",
    "irregular_vertices",
    "is_t_generic",
    "rooted_automorphism_count",
    "run_experiment",
    "weak_closure",
]
