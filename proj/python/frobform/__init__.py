"""Exact Frobenius forms, Nakayama automorphisms and homothety probes."""

from ._frobform import (
    Algebra,
    CorpusEntry,
    Element,
    Endo,
    Form,
    FrobformError,
    conjecture,
    extended_nn,
    group_algebra,
    heisenberg27,
    load,
    nakayama_nesbitt,
    nakayama_similar,
    norm,
    planar_quartic,
    probe,
    quartic_companion,
    run,
    straighten,
    truncated_poly,
)

__all__ = [
    "Algebra",
    "CorpusEntry",
    "Element",
    "Endo",
    "Form",
    "FrobformError",
    "conjecture",
    "extended_nn",
    "group_algebra",
    "heisenberg27",
    "load",
    "nakayama_nesbitt",
    "nakayama_similar",
    "norm",
    "planar_quartic",
    "probe",
    "quartic_companion",
    "run",
    "straighten",
    "truncated_poly",
]
