"""Cyclic shift classes, partial conjugation and combinatorial pieces in finite Weyl groups."""

from .coxeter import CoxeterDatum, CoxeterError, DiagramAutomorphism, WeylGroup, parse_automorphism, parse_subset, parse_word
from .decomposition import (
    CycCertificate,
    HypothesisError,
    InductionDatum,
    PartialDecomposition,
    decompose,
    hasse,
    induction_datum,
    iota,
    iota_table,
    partial_leq,
    theorem_cyc,
)
from .parabolic import bedard_sequence, i_subset, min_rep, minimal_reps
from .pieces import CombinatorialPiece, PieceError, conjugate_piece, make_piece, shift_equivalent
from .shiftgraph import ShiftGraph, broue_michel_equiv, build_graph, cyclic_shift_class, reduce_to_min

__all__ = [
    "CombinatorialPiece",
    "CoxeterDatum",
    "CoxeterError",
    "CycCertificate",
    "DiagramAutomorphism",
    "HypothesisError",
    "InductionDatum",
    "PartialDecomposition",
    "PieceError",
    "ShiftGraph",
    "WeylGroup",
    "bedard_sequence",
    "broue_michel_equiv",
    "build_graph",
    "conjugate_piece",
    "cyclic_shift_class",
    "decompose",
    "hasse",
    "i_subset",
    "induction_datum",
    "iota",
    "iota_table",
    "make_piece",
    "min_rep",
    "minimal_reps",
    "parse_automorphism",
    "parse_subset",
    "parse_word",
    "partial_leq",
    "reduce_to_min",
    "shift_equivalent",
    "theorem_cyc",
]
