import random

import pytest
from hypothesis import strategies as st

from zerosum import BoundarySpec, to_matrix
from zerosum.fixtures import load_fixture

small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def boundary_specs(draw, min_n=1, max_n=16):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    a = draw(st.lists(small_ints, min_size=n, max_size=n))
    b = [a[0]] + draw(st.lists(small_ints, min_size=n - 1, max_size=n - 1))
    return BoundarySpec(a, b)


def random_spec(rng: random.Random, n: int) -> BoundarySpec:
    a = [rng.randint(-9, 9) for _ in range(n)]
    b = [a[0]] + [rng.randint(-9, 9) for _ in range(n - 1)]
    return BoundarySpec(a, b)


def brute_mul(A, B):
    """Dense schoolbook product over the full index range."""
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


TRIANGLE7_SPEC = BoundarySpec([0] * 9, [0, -1, 1, -1, -1, 1, 1, -1, 1])
TRIANGLE8_SPEC = BoundarySpec([1] + [-1] * 8, [1, 0, 1, 0, 1, 0, 1, 0, 1])


@pytest.fixture(params=["triangle3", "triangle4", "triangle7", "triangle8"])
def fixture_name(request):
    return request.param


@pytest.fixture
def triangle3():
    return load_fixture("triangle3").triangle()


@pytest.fixture
def triangle4():
    return load_fixture("triangle4").triangle()


@pytest.fixture
def triangle7():
    return load_fixture("triangle7").triangle()


@pytest.fixture
def triangle8():
    return load_fixture("triangle8").triangle()


@pytest.fixture
def t3_matrix(triangle3):
    return to_matrix(triangle3)
