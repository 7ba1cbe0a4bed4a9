"""Exact matrix products and property checks for lower-triangular matrices."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .triangle import BoundarySpec, LowerTriangularMatrix, Triangle, to_matrix


class Property(enum.Enum):
    IDEMPOTENT = "idempotent"
    INVOLUTORY = "involutory"
    NILPOTENT_INDEX2 = "nilpotent2"
    UNIPOTENT_INDEX2 = "unipotent2"
    JORDAN_PRODUCT = "jordan"


@dataclass(frozen=True)
class Failure:
    """First mismatch found; ``label`` names the quantity that was compared."""

    row: int
    column: int
    expected: int
    actual: int
    label: str = ""


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    index: int
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class VerificationReport:
    property: Property
    first_failure: Optional[Failure] = None
    auxiliary: tuple[IdentityCheck, ...] = field(default=())
    degenerate: bool = False

    @property
    def passed(self) -> bool:
        return self.first_failure is None

    def summary(self) -> str:
        name = self.property.value
        if self.passed:
            extra = f", {len(self.auxiliary)} boundary identities" if self.auxiliary else ""
            flag = " (degenerate)" if self.degenerate else ""
            return f"{name}: PASS{flag}{extra}"
        f = self.first_failure
        return (
            f"{name}: FAIL at {f.label}({f.row}, {f.column}): "
            f"expected {f.expected}, got {f.actual}"
        )


def mat_mul(A: LowerTriangularMatrix, B: LowerTriangularMatrix) -> LowerTriangularMatrix:
    if A.n != B.n:
        raise ValueError(f"dimension mismatch: {A.n} vs {B.n}")
    n = A.n
    rows_a = A.lower_rows()
    rows_b = B.lower_rows()
    packed = []
    for i in range(n):
        ra = rows_a[i]
        for j in range(i + 1):
            packed.append(sum(ra[k] * rows_b[k][j] for k in range(j, i + 1)))
    return LowerTriangularMatrix(n, packed)


def mat_pow(M: LowerTriangularMatrix, k: int) -> LowerTriangularMatrix:
    result = LowerTriangularMatrix.identity(M.n)
    for _ in range(k):
        result = mat_mul(result, M)
    return result


def first_difference(expected: LowerTriangularMatrix, actual: LowerTriangularMatrix, label: str = "") -> Optional[Failure]:
    for i in range(expected.n):
        for j, (e, a) in enumerate(zip(expected.row(i), actual.row(i))):
            if e != a:
                return Failure(i, j, e, a, label)
    return None


def check_idempotent(M: LowerTriangularMatrix) -> VerificationReport:
    return VerificationReport(Property.IDEMPOTENT, first_difference(M, mat_mul(M, M), "M*M"))


def check_involutory(M: LowerTriangularMatrix) -> VerificationReport:
    I = LowerTriangularMatrix.identity(M.n)
    return VerificationReport(Property.INVOLUTORY, first_difference(I, mat_mul(M, M), "M*M"))


def nilpotency_index(M: LowerTriangularMatrix, max_k: Optional[int] = None) -> Optional[int]:
    """Smallest ``k <= max_k`` with ``M**k == 0``, or None if there is none.

    ``max_k`` defaults to ``n``, the largest possible index for a triangular
    matrix.  The zero matrix has index 1.
    """
    if max_k is None:
        max_k = max(M.n, 1)
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    if any(M.diagonal()):
        return None
    power = M
    for k in range(1, max_k + 1):
        if power.is_zero():
            return k
        if k < max_k:
            power = mat_mul(power, M)
    return None


def check_nilpotent_index2(M: LowerTriangularMatrix) -> VerificationReport:
    """Pass iff ``M*M == 0``; a zero ``M`` passes flagged as degenerate."""
    Z = LowerTriangularMatrix.zeros(M.n)
    failure = first_difference(Z, mat_mul(M, M), "M*M")
    return VerificationReport(Property.NILPOTENT_INDEX2, failure, degenerate=failure is None and M.is_zero())


def check_unipotent_index2(M: LowerTriangularMatrix) -> VerificationReport:
    n = M.n
    I = LowerTriangularMatrix.identity(n)
    for i, d in enumerate(M.diagonal()):
        if d != 1:
            return VerificationReport(Property.UNIPOTENT_INDEX2, Failure(i, i, 1, d, "M"))
    N = M - I
    failure = first_difference(LowerTriangularMatrix.zeros(n), mat_mul(N, N), "(M-I)^2")
    return VerificationReport(Property.UNIPOTENT_INDEX2, failure, degenerate=failure is None and N.is_zero())


def check_jordan_product(SD: LowerTriangularMatrix, SL: LowerTriangularMatrix) -> VerificationReport:
    n = SD.n
    target = LowerTriangularMatrix.from_function(n, lambda i, j: int(i == j or i == j + 1))
    return VerificationReport(Property.JORDAN_PRODUCT, first_difference(target, mat_mul(SD, SL), "S_D*S_L"))


def boundary_identities(t: Triangle, spec: BoundarySpec, prop: Property) -> tuple[IdentityCheck, ...]:
    """Expected triangle-times-boundary values for the idempotent or involutory family."""
    from .recurrences import products_direct

    pv = products_direct(t, spec)
    a, n = spec.a, spec.n
    a0 = a[0]
    checks: list[IdentityCheck] = []
    if prop is Property.IDEMPOTENT:
        checks += [IdentityCheck("s_0", i, a[i], pv.s0[i]) for i in range(n)]
        checks += [IdentityCheck("s_-1", i, 0, pv.sm1[i]) for i in range(1, n)]
        checks += [IdentityCheck("s_1", i, a0 * (a[i] + a[i + 1]) - a[i], pv.s1[i]) for i in range(n - 1)]
    elif prop is Property.INVOLUTORY:
        checks += [IdentityCheck("s_0", i, int(i == 0), pv.s0[i]) for i in range(n)]
        checks += [IdentityCheck("s_-1", i, (-1) ** i, pv.sm1[i]) for i in range(1, n)]
        if n > 1:
            checks.append(IdentityCheck("s_1", 0, a0 * a[1], pv.s1[0]))
        checks += [IdentityCheck("s_1", i, a0 * (a[i] + a[i + 1]), pv.s1[i]) for i in range(1, n - 1)]
    return tuple(checks)


def full_report(t: Triangle, spec: BoundarySpec, claimed: Property) -> VerificationReport:
    """Matrix-level check for ``claimed`` plus its boundary-product identities."""
    M = to_matrix(t)
    if claimed is Property.IDEMPOTENT:
        base = check_idempotent(M)
    elif claimed is Property.INVOLUTORY:
        base = check_involutory(M)
    elif claimed is Property.NILPOTENT_INDEX2:
        return check_nilpotent_index2(M)
    elif claimed is Property.UNIPOTENT_INDEX2:
        return check_unipotent_index2(M)
    else:
        from .shifts import unipotent_pair

        pair = unipotent_pair(M)
        return check_jordan_product(pair.SD, pair.SL)

    aux = boundary_identities(t, spec, claimed)
    failure = base.first_failure
    if failure is None:
        bad = next((c for c in aux if not c.ok), None)
        if bad is not None:
            failure = Failure(bad.index, 0, bad.expected, bad.actual, bad.name)
    return VerificationReport(claimed, failure, aux)
