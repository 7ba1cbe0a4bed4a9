"""Boundary constructions that make the triangle matrix idempotent or involutory.

The right edge is fixed to an alternating pattern, odd-indexed left-edge
cells are free inputs, and each even-indexed left-edge cell is solved from
the rows above it.  Row ``2m``'s interior depends only on row ``2m-1``, so
``a_{2m}`` never appears in its own equation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .triangle import Triangle, next_interior


class Kind(enum.Enum):
    IDEMPOTENT = "idempotent"
    INVOLUTORY = "involutory"


class ParityMode(enum.Enum):
    STRICT = "strict"
    AUTOFIX = "autofix"


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    ANY = "any"


class InsufficientRowsError(ValueError):
    pass


class ParityError(ValueError):
    """The solved even-indexed cell would be a half-integer.

    ``odd_sum`` is the row sum that had to be even; ``required`` is the parity
    ``a_{2m-1}`` needed to make it so.
    """

    def __init__(self, m: int, odd_sum: int, required: Parity):
        self.m = m
        self.odd_sum = odd_sum
        self.required = required
        super().__init__(
            f"parity error at m={m}: a_{2 * m} = -(a0/2)*({odd_sum}) is not an integer; "
            f"a_{2 * m - 1} must be {required.value}"
        )


def odd_count(n: int) -> int:
    """Number of free odd-indexed left-edge cells in an ``n``-row triangle."""
    return n // 2


@dataclass(frozen=True)
class SpecialBuildRequest:
    kind: Kind
    a0: int
    odd_entries: tuple[int, ...]
    n: int
    parity_mode: ParityMode = ParityMode.STRICT

    def __post_init__(self):
        object.__setattr__(self, "odd_entries", tuple(int(x) for x in self.odd_entries))
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.kind is Kind.IDEMPOTENT and self.a0 not in (0, 1):
            raise ValueError(f"idempotent a0 must be 0 or 1, got {self.a0}")
        if self.kind is Kind.INVOLUTORY and self.a0 not in (1, -1):
            raise ValueError(f"involutory a0 must be 1 or -1, got {self.a0}")
        short = len(self.odd_entries) < odd_count(self.n)
        if short and not (self.kind is Kind.INVOLUTORY and self.parity_mode is ParityMode.AUTOFIX):
            raise ValueError(
                f"{self.n} rows need {odd_count(self.n)} odd entries, got {len(self.odd_entries)}"
            )


class Adjustment(NamedTuple):
    index: int  # left-edge index 2m-1
    old: int
    new: int


class BuildResult(NamedTuple):
    triangle: Triangle
    odd_entries: tuple[int, ...]
    adjustments: tuple[Adjustment, ...]


def idempotent_diagonal(a0: int, n: int) -> list[int]:
    if a0 not in (0, 1):
        raise ValueError(f"a0 must be 0 or 1, got {a0}")
    return [(i + a0) % 2 for i in range(n)]


def involutory_diagonal(a0: int, n: int) -> list[int]:
    if a0 not in (1, -1):
        raise ValueError(f"a0 must be 1 or -1, got {a0}")
    return [a0 if i % 2 == 0 else -a0 for i in range(n)]


def _need_rows(rows: Sequence[Sequence[int]], count: int, m: int) -> None:
    if m < 1:
        raise ValueError(f"step m must be >= 1, got {m}")
    if len(rows) < count:
        raise InsufficientRowsError(f"step m={m} needs rows 0..{count - 1}, got {len(rows)} rows")


def idempotent_next_even(rows: Sequence[Sequence[int]], a0: int, m: int) -> int:
    """Solve ``a_{2m}`` from complete rows ``0..2m-1``."""
    _need_rows(rows, 2 * m, m)
    a = [r[0] for r in rows]
    if a0 == 0:
        interior = next_interior(rows[2 * m - 1])
        return sum(interior[k - 1] * a[k] for k in range(1, 2 * m))
    if a0 == 1:
        prev = rows[2 * m - 1]
        return sum(prev[k] * a[k + 1] for k in range(2 * m - 1))
    raise ValueError(f"a0 must be 0 or 1, got {a0}")


def _involutory_sum(rows: Sequence[Sequence[int]], m: int) -> int:
    interior = next_interior(rows[2 * m - 1])
    return sum(interior[k - 1] * rows[k][0] for k in range(1, 2 * m))


def required_odd_parity(rows: Sequence[Sequence[int]], a0: int, m: int) -> Parity:
    """Parity ``a_{2m-1}`` must have for ``a_{2m}`` to come out integral.

    Needs complete rows ``0..2m-2``.  Only the ``a_{2m-1}`` term of the halved
    sum has a parity that depends on the choice; everything else is fixed.
    """
    if a0 not in (1, -1):
        raise ValueError(f"a0 must be 1 or -1, got {a0}")
    if m == 1:
        # a_1 * (a0*a_1 - 1) is always even
        return Parity.ANY
    _need_rows(rows, 2 * m - 1, m)
    a1 = rows[1][0]
    top = rows[2 * m - 2]
    row_odd = next_interior(top)  # interior of row 2m-1, columns 1..2m-2
    t_odd_1 = row_odd[0]
    # columns 2..2m-2 of row 2m use only interior cells of row 2m-1
    t_even = {k: -(row_odd[k - 2] + row_odd[k - 1]) for k in range(2, 2 * m - 1)}
    rest = a1 * t_odd_1 - sum(t_even[k] * rows[k][0] for k in range(2, 2 * m - 1))
    return Parity.EVEN if rest % 2 == 0 else Parity.ODD


def involutory_next_even(rows: Sequence[Sequence[int]], a0: int, m: int) -> int:
    """Solve ``a_{2m} = -(a0/2) * sum_k t(2m,k) a_k``; raise ParityError if the sum is odd."""
    if a0 not in (1, -1):
        raise ValueError(f"a0 must be 1 or -1, got {a0}")
    _need_rows(rows, 2 * m, m)
    total = _involutory_sum(rows, m)
    if total % 2:
        raise ParityError(m, total, required_odd_parity(rows[: 2 * m - 1], a0, m))
    return -a0 * (total // 2)


def _matches(value: int, parity: Parity) -> bool:
    return parity is Parity.ANY or (value % 2 == 0) == (parity is Parity.EVEN)


def _build(req: SpecialBuildRequest) -> BuildResult:
    n, a0 = req.n, req.a0
    need = odd_count(n)
    odds = list(req.odd_entries[:need])
    odds += [0] * (need - len(odds))
    adjustments = []
    if req.kind is Kind.IDEMPOTENT:
        b = idempotent_diagonal(a0, n)
    else:
        b = involutory_diagonal(a0, n)
    rows: list[tuple[int, ...]] = [(a0,)]
    for r in range(1, n):
        if r % 2:
            k = (r - 1) // 2
            a_r = odds[k]
            if req.kind is Kind.INVOLUTORY and req.parity_mode is ParityMode.AUTOFIX and r + 1 < n:
                parity = required_odd_parity(rows, a0, (r + 1) // 2)
                if not _matches(a_r, parity):
                    adjustments.append(Adjustment(r, a_r, a_r + 1))
                    a_r += 1
                    odds[k] = a_r
        elif req.kind is Kind.IDEMPOTENT:
            a_r = idempotent_next_even(rows, a0, r // 2)
        else:
            a_r = involutory_next_even(rows, a0, r // 2)
        rows.append((a_r, *next_interior(rows[-1]), b[r]))
    return BuildResult(Triangle(rows), tuple(odds), tuple(adjustments))


def build_idempotent(req: SpecialBuildRequest) -> Triangle:
    if req.kind is not Kind.IDEMPOTENT:
        raise ValueError("request kind is not idempotent")
    return _build(req).triangle


def solve_involutory(req: SpecialBuildRequest) -> BuildResult:
    """Build an involutory triangle and report any AutoFix parity repairs."""
    if req.kind is not Kind.INVOLUTORY:
        raise ValueError("request kind is not involutory")
    return _build(req)


def build_involutory(req: SpecialBuildRequest) -> Triangle:
    return solve_involutory(req).triangle


def idempotent(a0: int, odd_entries: Sequence[int], n: int) -> Triangle:
    return build_idempotent(SpecialBuildRequest(Kind.IDEMPOTENT, a0, tuple(odd_entries), n))


def involutory(a0: int, odd_entries: Sequence[int], n: int, parity_mode: ParityMode = ParityMode.STRICT) -> Triangle:
    return build_involutory(SpecialBuildRequest(Kind.INVOLUTORY, a0, tuple(odd_entries), n, parity_mode))
