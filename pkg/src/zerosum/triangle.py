"""Zero-sum triangles: generation from boundary edges and closed forms.

Each interior cell is the negated sum of the two cells directly above it,
so ``t(i, j) + t(i-1, j-1) + t(i-1, j) == 0``.  All arithmetic uses Python
ints; cells grow geometrically away from the edges.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


class BoundaryError(ValueError):
    """Boundary sequences are inconsistent (length or shared apex)."""


@dataclass(frozen=True)
class BoundarySpec:
    """Left edge ``a`` (``a[i] = t(i, 0)``) and right edge ``b`` (``b[i] = t(i, i)``)."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __init__(self, a: Iterable[int], b: Iterable[int]):
        a = tuple(int(x) for x in a)
        b = tuple(int(x) for x in b)
        if not a:
            raise BoundaryError("boundary needs at least one row")
        if len(a) != len(b):
            raise BoundaryError(f"edge lengths differ: {len(a)} != {len(b)}")
        if a[0] != b[0]:
            raise BoundaryError(f"apex mismatch: a[0]={a[0]} but b[0]={b[0]}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return len(self.a)

    def truncate(self, n: int) -> "BoundarySpec":
        return BoundarySpec(self.a[:n], self.b[:n])


@dataclass(frozen=True)
class Triangle:
    """Ragged rows of integers; ``rows[i]`` has ``i + 1`` cells."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        for i, r in enumerate(rows):
            if len(r) != i + 1:
                raise ValueError(f"row {i} has {len(r)} cells, expected {i + 1}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(r[0] for r in self.rows)

    @property
    def b(self) -> tuple[int, ...]:
        return tuple(r[-1] for r in self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def spec(self) -> BoundarySpec:
        return BoundarySpec(self.a, self.b)

    def is_zero_sum(self) -> bool:
        rows = self.rows
        return all(
            rows[i][j] + rows[i - 1][j - 1] + rows[i - 1][j] == 0
            for i in range(2, self.n)
            for j in range(1, i)
        )


class LowerTriangularMatrix:
    """Square lower-triangular integer matrix with packed row-major storage.

    Entry ``(i, j)`` with ``j <= i`` lives at ``i*(i+1)//2 + j``; everything
    above the diagonal is an implicit zero.
    """

    __slots__ = ("n", "_data")

    def __init__(self, n: int, data: Iterable[int]):
        data = tuple(data)
        if len(data) != n * (n + 1) // 2:
            raise ValueError(f"packed data for n={n} needs {n * (n + 1) // 2} entries, got {len(data)}")
        self.n = n
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "LowerTriangularMatrix":
        """Build from ragged lower rows or from dense square rows.

        Dense input must be zero above the diagonal.
        """
        n = len(rows)
        packed = []
        for i, r in enumerate(rows):
            if len(r) == n and n != i + 1:
                if any(r[j] != 0 for j in range(i + 1, n)):
                    raise ValueError(f"row {i} has nonzero entries above the diagonal")
            elif len(r) != i + 1:
                raise ValueError(f"row {i} has length {len(r)}; expected {i + 1} or {n}")
            packed.extend(int(x) for x in r[: i + 1])
        return cls(n, packed)

    @classmethod
    def from_function(cls, n: int, fn) -> "LowerTriangularMatrix":
        return cls(n, (fn(i, j) for i in range(n) for j in range(i + 1)))

    @classmethod
    def identity(cls, n: int) -> "LowerTriangularMatrix":
        return cls.from_function(n, lambda i, j: int(i == j))

    @classmethod
    def zeros(cls, n: int) -> "LowerTriangularMatrix":
        return cls(n, (0,) * (n * (n + 1) // 2))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(ij)
        if j > i:
            return 0
        return self._data[i * (i + 1) // 2 + j]

    def row(self, i: int) -> tuple[int, ...]:
        start = i * (i + 1) // 2
        return self._data[start : start + i + 1]

    def lower_rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.n)]

    def dense(self) -> list[list[int]]:
        return [list(self.row(i)) + [0] * (self.n - i - 1) for i in range(self.n)]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self._data[i * (i + 1) // 2 + i] for i in range(self.n))

    def is_zero(self) -> bool:
        return not any(self._data)

    def _check_same(self, other: "LowerTriangularMatrix") -> None:
        if not isinstance(other, LowerTriangularMatrix):
            raise TypeError(f"expected LowerTriangularMatrix, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "LowerTriangularMatrix") -> "LowerTriangularMatrix":
        self._check_same(other)
        return LowerTriangularMatrix(self.n, (x + y for x, y in zip(self._data, other._data)))

    def __sub__(self, other: "LowerTriangularMatrix") -> "LowerTriangularMatrix":
        self._check_same(other)
        return LowerTriangularMatrix(self.n, (x - y for x, y in zip(self._data, other._data)))

    def __neg__(self) -> "LowerTriangularMatrix":
        return LowerTriangularMatrix(self.n, (-x for x in self._data))

    def scale(self, k: int) -> "LowerTriangularMatrix":
        return LowerTriangularMatrix(self.n, (k * x for x in self._data))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LowerTriangularMatrix):
            return NotImplemented
        return self.n == other.n and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.n, self._data))

    def __repr__(self) -> str:
        return f"LowerTriangularMatrix({self.n}, {self.lower_rows()!r})"


@dataclass(frozen=True)
class RowSums:
    per_row: tuple[int, ...]
    total: int


class Symmetry(enum.Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"
    NONE = "none"


def next_interior(prev: Sequence[int]) -> list[int]:
    """Interior cells of the row below ``prev`` under the zero-sum rule."""
    return [-(prev[j - 1] + prev[j]) for j in range(1, len(prev))]


def generate_triangle(spec: BoundarySpec) -> Triangle:
    rows: list[tuple[int, ...]] = [(spec.a[0],)]
    for i in range(1, spec.n):
        rows.append((spec.a[i], *next_interior(rows[-1]), spec.b[i]))
    return Triangle(rows)


def cell_closed_form(spec: BoundarySpec, i: int, j: int) -> int:
    """Interior cell ``t(i, j)`` as signed binomial sums over both edges.

    Only defined for ``0 < j < i < n``; edge cells are the boundary itself.
    """
    if not (0 < j < i < spec.n):
        raise IndexError(f"({i}, {j}) is not an interior cell of an {spec.n}-row triangle")
    a, b = spec.a, spec.b
    total = 0
    for k in range(1, i - j + 1):
        total += (-1) ** (i - k) * comb(i - k - 1, j - 1) * a[k]
    for k in range(1, j + 1):
        total += (-1) ** (i - k) * comb(i - k - 1, i - j - 1) * b[k]
    return total


def row_sum_closed(spec: BoundarySpec, i: int) -> int:
    if not (0 <= i < spec.n):
        raise IndexError(f"row {i} out of range for n={spec.n}")
    a, b = spec.a, spec.b
    if i == 0:
        return a[0]
    if i == 1:
        return a[1] + b[1]
    return a[i] + b[i] - sum((-2) ** (i - k - 1) * (a[k] + b[k]) for k in range(1, i))


def total_sum_closed(spec: BoundarySpec) -> int:
    """Sum of every cell, evaluated without generating the triangle."""
    a, b = spec.a, spec.b
    last = spec.n - 1
    if last < 2:
        return sum(row_sum_closed(spec, i) for i in range(spec.n))
    weighted = sum((2 + (-2) ** (last - k)) * (a[k] + b[k]) for k in range(1, last))
    # 2 + (-2)^m is divisible by 3 for every m >= 1
    assert weighted % 3 == 0, weighted
    return a[0] + a[last] + b[last] + weighted // 3


def row_sum_step(s_prev: int, a_i: int, b_i: int, a_prev: int, b_prev: int) -> int:
    """Row sum ``S_i`` from ``S_{i-1}`` and the edge cells of rows ``i`` and ``i-1``."""
    return (a_i + b_i) + (a_prev + b_prev) - 2 * s_prev


def row_sums(t: Triangle) -> RowSums:
    per_row = tuple(sum(r) for r in t.rows)
    return RowSums(per_row, sum(per_row))


def symmetry_kind(t: Triangle) -> Symmetry:
    rows = t.rows
    if all(r[j] == r[len(r) - 1 - j] for r in rows for j in range(len(r))):
        return Symmetry.SYMMETRIC
    if all(r[j] == -r[len(r) - 1 - j] for r in rows for j in range(len(r))):
        return Symmetry.ANTISYMMETRIC
    return Symmetry.NONE


def to_matrix(t: Triangle) -> LowerTriangularMatrix:
    return LowerTriangularMatrix(t.n, (x for r in t.rows for x in r))
