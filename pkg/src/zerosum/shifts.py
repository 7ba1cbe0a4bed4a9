"""Index-2 nilpotent and unipotent matrices from shifted idempotent triangles.

``B_L`` has ones on the first subdiagonal.  Left-multiplying by it moves rows
down one place; right-multiplying moves columns left.  For an idempotent
triangle matrix ``T``, both ``B_L T`` and ``T B_L`` square to zero and
``(I + B_L T)(I + T B_L) == I + B_L``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .special import idempotent
from .triangle import LowerTriangularMatrix, to_matrix
from .verify import mat_mul, nilpotency_index


class NotUnipotentError(ValueError):
    def __init__(self, message: str, index: int | None = None):
        self.index = index
        super().__init__(message)


@dataclass(frozen=True)
class UnipotentPair:
    SD: LowerTriangularMatrix  # I + B_L T
    SL: LowerTriangularMatrix  # I + T B_L

    def product(self) -> LowerTriangularMatrix:
        return mat_mul(self.SD, self.SL)


def shift_matrix(n: int) -> LowerTriangularMatrix:
    return LowerTriangularMatrix.from_function(n, lambda i, j: int(i == j + 1))


def shift_down(T: LowerTriangularMatrix) -> LowerTriangularMatrix:
    """``B_L @ T``: row ``i`` of ``T`` becomes row ``i + 1``."""
    return LowerTriangularMatrix.from_function(T.n, lambda i, j: T[i - 1, j] if i > 0 else 0)


def shift_left(T: LowerTriangularMatrix) -> LowerTriangularMatrix:
    """``T @ B_L``: column ``j + 1`` of ``T`` becomes column ``j``."""
    n = T.n
    return LowerTriangularMatrix.from_function(n, lambda i, j: T[i, j + 1] if j + 1 < n else 0)


def unipotent_from_nilpotent(N: LowerTriangularMatrix) -> LowerTriangularMatrix:
    if any(N.diagonal()):
        raise ValueError("matrix is not strictly lower triangular")
    return LowerTriangularMatrix.identity(N.n) + N


def unipotent_inverse(S: LowerTriangularMatrix) -> LowerTriangularMatrix:
    """``2I - S``, valid only when ``(S - I)**2 == 0``."""
    I = LowerTriangularMatrix.identity(S.n)
    N = S - I
    if any(N.diagonal()):
        raise NotUnipotentError("diagonal is not all ones")
    k = nilpotency_index(N)
    if k is None or k > 2:
        raise NotUnipotentError(f"(S - I) has nilpotency index {k}, need <= 2", k)
    return I - N


def unipotent_pair(T: LowerTriangularMatrix) -> UnipotentPair:
    return UnipotentPair(
        unipotent_from_nilpotent(shift_down(T)),
        unipotent_from_nilpotent(shift_left(T)),
    )


def jordan_factorization(a0: int, odd_entries: Sequence[int], n: int) -> UnipotentPair:
    """Factor ``I + B_L`` into two index-2 unipotents built from an idempotent triangle."""
    return unipotent_pair(to_matrix(idempotent(a0, odd_entries, n)))
