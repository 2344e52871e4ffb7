"""
braidpoly: exact Alexander polynomials of closed braids via the reduced
Burau representation, signatures of alternating block braids, and
trapezoidal-shape checks of the resulting coefficient sequences.
"""

from .braid import BlockBraid, BraidWord
from .burau import AlexanderResult, PolyMatrix, alexander, burau_generator, burau_word
from .conjecture import (
    CoeffFormulaResult,
    ConjectureReport,
    NonIntegerCoefficientError,
    ScanRow,
    check_conjecture,
    closed_form_one_block,
    closed_form_two_block,
    determinant_two_block,
    leading_coeffs,
    scan_csv_lines,
    scan_rows,
    stable_length_one_block,
)
from .laurent import (
    DivisorZeroError,
    LaurentPoly,
    NonPositiveCoefficientsError,
    NotDivisibleError,
    TrapezoidReport,
    ZeroPointError,
    ZeroPolynomialError,
    analyze_shape,
    normalize_symmetric,
    quantum_integer,
)
from .signature import (
    BlockCountNotOneError,
    SignatureReport,
    SymIntMatrix,
    det_int,
    inertia,
    seifert_oracle,
    signature_closed_form,
    signature_four_braid_totals,
    symmetrized_seifert_matrix,
    tridiagonal_form,
)

__version__ = "0.1.0"

__all__ = [
    "AlexanderResult",
    "BlockBraid",
    "BlockCountNotOneError",
    "BraidWord",
    "CoeffFormulaResult",
    "ConjectureReport",
    "DivisorZeroError",
    "LaurentPoly",
    "NonIntegerCoefficientError",
    "NonPositiveCoefficientsError",
    "NotDivisibleError",
    "PolyMatrix",
    "ScanRow",
    "SignatureReport",
    "SymIntMatrix",
    "TrapezoidReport",
    "ZeroPointError",
    "ZeroPolynomialError",
    "alexander",
    "analyze_shape",
    "burau_generator",
    "burau_word",
    "check_conjecture",
    "closed_form_one_block",
    "closed_form_two_block",
    "det_int",
    "determinant_two_block",
    "inertia",
    "leading_coeffs",
    "normalize_symmetric",
    "quantum_integer",
    "scan_csv_lines",
    "scan_rows",
    "seifert_oracle",
    "signature_closed_form",
    "signature_four_braid_totals",
    "stable_length_one_block",
    "symmetrized_seifert_matrix",
    "tridiagonal_form",
    "__version__",
]
