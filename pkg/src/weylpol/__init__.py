"""Weyl polarizations, Zelevinsky complexes and Verma singular vectors for gl_N."""

from .shifts import ShiftMatrix, DegreeVector, term_set, sigma_zero
from .symtensor import SymTensor, apply_elementary, apply_weyl
from .weyl_ops import ElementaryWord, PolarCombo, left_mul, right_mul, word_to_combo, apply_combo
from .bruhat import ArrowPair, SignatureTable, akin_signature, arrow_pairs
from .zelevinsky import build_complex, homology_dims, schur_dimension_oracle
from .verma import VermaTriple, vs_element, vs_amplitude
from .pbw import GeneratorOrder, UElement, polar_to_pbw, combo_to_pbw, singular_check

__version__ = "0.1.0"

__all__ = [
    "ShiftMatrix", "DegreeVector", "term_set", "sigma_zero",
    "SymTensor", "apply_elementary", "apply_weyl",
    "ElementaryWord", "PolarCombo", "left_mul", "right_mul", "word_to_combo", "apply_combo",
    "ArrowPair", "SignatureTable", "akin_signature", "arrow_pairs",
    "build_complex", "homology_dims", "schur_dimension_oracle",
    "VermaTriple", "vs_element", "vs_amplitude",
    "GeneratorOrder", "UElement", "polar_to_pbw", "combo_to_pbw", "singular_check",
]
