"""Boundary pattern strings such as ``const:1``, ``alt:0,-1`` or ``file:edge.txt``."""

from __future__ import annotations

import itertools
import re
from pathlib import Path


class PatternError(ValueError):
    pass


_SPLIT = re.compile(r"[\s,]+")


def _ints(text: str, pattern: str) -> list[int]:
    parts = [p for p in _SPLIT.split(text.strip()) if p]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise PatternError(f"non-integer value in pattern {pattern!r}") from None


def expand_boundary(pattern: str, n: int, allow_short: bool = False) -> list[int]:
    """Expand ``pattern`` to exactly ``n`` integers.

    ``list:`` and ``file:`` must supply at least ``n`` values (unless
    ``allow_short``, which returns what is there); extras are dropped.  Files
    hold integers separated by commas or whitespace.
    """
    if n < 1:
        raise PatternError(f"count must be >= 1, got {n}")
    kind, sep, body = pattern.partition(":")
    if not sep:
        raise PatternError(f"malformed pattern {pattern!r}; expected <kind>:<values>")
    if kind == "file":
        try:
            body = Path(body).read_text()
        except OSError as e:
            raise PatternError(f"cannot read {body!r}: {e.strerror}") from None
    values = _ints(body, pattern)

    if kind == "const":
        if len(values) != 1:
            raise PatternError(f"const takes one value: {pattern!r}")
        return values * n
    if kind == "alt":
        if len(values) != 2:
            raise PatternError(f"alt takes two values: {pattern!r}")
        return list(itertools.islice(itertools.cycle(values), n))
    if kind == "cycle":
        if not values:
            raise PatternError(f"cycle needs at least one value: {pattern!r}")
        return list(itertools.islice(itertools.cycle(values), n))
    if kind in ("list", "file"):
        if len(values) < n and not allow_short:
            raise PatternError(f"{kind} supplies {len(values)} values, need {n}")
        return values[:n]
    raise PatternError(f"unknown pattern kind {kind!r}")
