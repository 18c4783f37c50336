"""Exact graded characters of sl2[t]-modules: CV, local Weyl, Demazure and truncated Weyl modules."""
from __future__ import annotations

from .charlat import (
    FlagDecomposition,
    GradedCharacter,
    IrreducibleDecomposition,
    NoFlag,
    NotAModuleCharacter,
    decompose_irreducible,
    demazure_flag_decompose,
    dimension,
    graded_dimension,
    irr_char,
    shift,
    tensor,
)
from .cvmod import (
    Partition,
    basis_char,
    cv_char,
    cv_dimension,
    demazure_char,
    demazure_partition,
    enumerate_basis,
    hook_partition,
    truncated_weyl_partition,
    weyl_char,
    weyl_partition,
)
from .qalg import QPoly, QRat, falling_q_product, qbinom, qpochhammer

__version__ = "0.1.0"

__all__ = [
    "QPoly",
    "QRat",
    "qbinom",
    "qpochhammer",
    "falling_q_product",
    "GradedCharacter",
    "IrreducibleDecomposition",
    "FlagDecomposition",
    "NoFlag",
    "NotAModuleCharacter",
    "irr_char",
    "tensor",
    "shift",
    "decompose_irreducible",
    "demazure_flag_decompose",
    "graded_dimension",
    "dimension",
    "Partition",
    "cv_char",
    "basis_char",
    "cv_dimension",
    "enumerate_basis",
    "weyl_char",
    "demazure_char",
    "weyl_partition",
    "demazure_partition",
    "truncated_weyl_partition",
    "hook_partition",
]
