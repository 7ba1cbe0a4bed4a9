"""Exact-integer zero-sum triangles and the special triangular matrices built from them."""

from .patterns import PatternError, expand_boundary
from .recurrences import ProductVectors, products_direct, products_recursive, squared_via_recurrence
from .shifts import (
    NotUnipotentError,
    UnipotentPair,
    jordan_factorization,
    shift_down,
    shift_left,
    shift_matrix,
    unipotent_from_nilpotent,
    unipotent_inverse,
)
from .special import (
    Kind,
    Parity,
    ParityError,
    ParityMode,
    SpecialBuildRequest,
    build_idempotent,
    build_involutory,
    idempotent,
    idempotent_diagonal,
    idempotent_next_even,
    involutory,
    involutory_diagonal,
    involutory_next_even,
    required_odd_parity,
    solve_involutory,
)
from .triangle import (
    BoundaryError,
    BoundarySpec,
    LowerTriangularMatrix,
    RowSums,
    Symmetry,
    Triangle,
    cell_closed_form,
    generate_triangle,
    row_sum_closed,
    row_sum_step,
    row_sums,
    symmetry_kind,
    to_matrix,
    total_sum_closed,
)
from .verify import (
    Property,
    VerificationReport,
    check_idempotent,
    check_involutory,
    check_jordan_product,
    check_unipotent_index2,
    full_report,
    mat_mul,
    nilpotency_index,
)

__version__ = "0.1.0"
