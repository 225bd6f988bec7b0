"""Restricted-growth words, the subspace family N^n and the binary symplectic polar space."""

from ._core import (
    BijectionReport,
    ConsistencyError,
    GuardError,
    CaseLabel,
    PolarGeometry,
    StrataReport,
    Subspace,
    build_geometry,
    classify_subspace,
    classify_word,
    count_words,
    enumerate_N,
    enumerate_subspaces,
    enumerate_words,
    export_incidence,
    g,
    in_N,
    is_N,
    quotient_basis,
    run_criterion,
    strata,
    subspace_expand,
    subspace_reduce,
    subspace_to_word,
    symplectic_form,
    udim,
    verify_bijection,
    word_expand,
    word_reduce,
    word_to_subspace,
)

__all__ = [name for name in dir() if not name.startswith("_")]
