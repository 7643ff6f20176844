"""Exact spanning-tree, cycletree and harmonic-cycle computations on chain complexes."""

from .complex import (Chain, ChainComplex, Selection, adjoin_virtual_cell, complement,
                      from_matrices, from_simplicial, graph_complex, validate)
from .errors import CapExceededError, ConditionError, NotACycleError
from .harmonic import (build_certificate, cutting_number, standard_harmonic_cocycle,
                       standard_harmonic_cycle, winding_number)
from .homology import cohomology, reduced_homology, relative_homology

__all__ = [
    "Chain", "ChainComplex", "Selection", "adjoin_virtual_cell", "complement", "from_matrices",
    "from_simplicial", "graph_complex", "validate", "CapExceededError", "ConditionError",
    "NotACycleError", "build_certificate", "cutting_number", "standard_harmonic_cocycle",
    "standard_harmonic_cycle", "winding_number", "cohomology", "reduced_homology",
    "relative_homology",
]
