"""Golden triangles shipped as JSON documents under ``zerosum/data``."""

from __future__ import annotations

from importlib import resources

from .io import TriangleDocument, parse

NAMES = ("triangle3", "triangle4", "triangle7", "triangle8")


def fixture_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    return resources.files("zerosum").joinpath("data", f"{name}.json").read_text(encoding="utf-8")


def load_fixture(name: str) -> TriangleDocument:
    return parse(fixture_text(name))
