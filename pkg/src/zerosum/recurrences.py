"""Recurrence paths for the squared triangle matrix and boundary products.

These compute the same quantities as direct multiplication, but through the
zero-sum recurrences, so agreement between the two is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .triangle import BoundarySpec, LowerTriangularMatrix, Triangle


@dataclass(frozen=True)
class ProductVectors:
    """Triangle matrix applied to the left edge: as is, shifted up, shifted down.

    ``s0[i] = sum_k t(i,k) a_k``, ``s1[i] = sum_k t(i,k) a_{k+1}`` (length
    ``n-1``), ``sm1[i] = sum_{k>=1} t(i,k) a_{k-1}`` (``sm1[0]`` is the empty
    sum, 0).
    """

    s0: tuple[int, ...]
    s1: tuple[int, ...]
    sm1: tuple[int, ...]


def products_direct(t: Triangle, spec: BoundarySpec) -> ProductVectors:
    a, n, rows = spec.a, spec.n, t.rows
    s0 = tuple(sum(rows[i][k] * a[k] for k in range(i + 1)) for i in range(n))
    s1 = tuple(sum(rows[i][k] * a[k + 1] for k in range(i + 1)) for i in range(n - 1))
    sm1 = tuple(sum(rows[i][k] * a[k - 1] for k in range(1, i + 1)) for i in range(n))
    return ProductVectors(s0, s1, sm1)


def products_recursive(spec: BoundarySpec, t: Triangle) -> ProductVectors:
    """Boundary products from the two independent zero-sum relations.

    The four relations pair up into two distinct identities, so one sequence
    has to be seeded: ``s0`` is taken row by row from ``t``, then ``sm1`` runs
    forward from its base case and ``s1`` is recovered from consecutive
    ``s0`` values.
    """
    a, b, n, rows = spec.a, spec.b, spec.n, t.rows
    s0 = [sum(rows[i][k] * a[k] for k in range(i + 1)) for i in range(n)]
    if s0[0] != a[0] * a[0]:
        raise ValueError("triangle apex does not match the boundary")

    sm1 = [0] * n
    if n > 1:
        sm1[1] = a[0] * b[1]
    for i in range(2, n):
        sm1[i] = a[i - 1] * (b[i - 1] + b[i]) - sm1[i - 1] - s0[i - 1]

    s1 = [0] * (n - 1)
    if n > 1:
        s1[0] = a[0] * a[1]
    for i in range(1, n - 1):
        s1[i] = a[0] * (a[i] + a[i + 1]) + a[i + 1] * (b[i] + b[i + 1]) - s0[i] - s0[i + 1]
    return ProductVectors(tuple(s0), tuple(s1), tuple(sm1))


def squared_via_recurrence(t: Triangle, spec: BoundarySpec) -> LowerTriangularMatrix:
    """``T*T`` built diagonal-by-diagonal without a single full dot product.

    Column 0 holds ``s0``; the diagonal is ``b_i**2``; each remaining entry
    comes from its up-left neighbour.
    """
    b, n, rows = spec.b, spec.n, t.rows
    s0 = products_recursive(spec, t).s0
    sq: list[list[int]] = [[0] * (i + 1) for i in range(n)]
    for i in range(n):
        sq[i][0] = s0[i]
        sq[i][i] = b[i] * b[i]
    for i in range(2, n):
        for j in range(1, i):
            sq[i][j] = (
                sq[i - 1][j - 1]
                + rows[i][j] * (b[i - 1] + b[i])
                - rows[i - 1][j - 1] * (b[j - 1] + b[j])
            )
    return LowerTriangularMatrix.from_rows(sq)
