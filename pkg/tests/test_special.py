import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import small_ints
from oracles import (
    first_fractional_step,
    idempotent_a0_0,
    idempotent_a0_1,
    involutory_polys,
    rational_involutory_edge,
)
from zerosum import (
    Kind,
    LowerTriangularMatrix,
    Parity,
    ParityError,
    ParityMode,
    Property,
    SpecialBuildRequest,
    Triangle,
    build_idempotent,
    build_involutory,
    check_idempotent,
    full_report,
    generate_triangle,
    idempotent,
    idempotent_diagonal,
    idempotent_next_even,
    involutory,
    involutory_diagonal,
    involutory_next_even,
    mat_mul,
    required_odd_parity,
    solve_involutory,
    to_matrix,
)
from zerosum.special import InsufficientRowsError


def test_idempotent_diagonal():
    assert idempotent_diagonal(1, 4) == [1, 0, 1, 0]
    assert idempotent_diagonal(0, 4) == [0, 1, 0, 1]
    assert idempotent_diagonal(1, 1) == [1]
    with pytest.raises(ValueError):
        idempotent_diagonal(2, 3)


def test_involutory_diagonal():
    assert involutory_diagonal(1, 4) == [1, -1, 1, -1]
    assert involutory_diagonal(-1, 3) == [-1, 1, -1]
    assert involutory_diagonal(1, 1) == [1]
    with pytest.raises(ValueError):
        involutory_diagonal(0, 3)


@pytest.mark.parametrize(
    "a0, a1, expected",
    [(1, 2, 4), (0, 1, -2), (1, -1, 1)],
)
def test_idempotent_first_even(a0, a1, expected):
    rows = [(a0,), (a1, 1 - a0)]
    assert idempotent_next_even(rows, a0, 1) == expected


def test_idempotent_next_even_needs_rows():
    with pytest.raises(InsufficientRowsError):
        idempotent_next_even([(1,)], 1, 1)


def test_involutory_first_even():
    assert involutory_next_even([(1,), (2, -1)], 1, 1) == 1


def _involutory_rows(a0, odds, upto):
    """Rows 0..upto with even entries taken from the rational oracle (must be integral)."""
    edge = rational_involutory_edge(a0, odds, upto + 1)
    assert all(x.denominator == 1 for x in edge)
    b = involutory_diagonal(a0, upto + 1)
    return generate_triangle_rows([int(x) for x in edge], b)


def generate_triangle_rows(a, b):
    from zerosum import BoundarySpec

    return list(generate_triangle(BoundarySpec(a, b)).rows)


def test_involutory_second_even():
    # a_4 from the printed formula with a0=1, a1=1, a3=2 is -1
    rows = _involutory_rows(1, [1, 2], 3)
    assert involutory_next_even(rows, 1, 2) == -1


def test_involutory_parity_error():
    rows = _involutory_rows(1, [1, 1], 3)
    with pytest.raises(ParityError) as exc:
        involutory_next_even(rows, 1, 2)
    assert exc.value.m == 2
    assert exc.value.odd_sum % 2 == 1
    assert exc.value.required is Parity.EVEN


@pytest.mark.parametrize("a0", [1, -1])
def test_required_parity_first_step(a0):
    assert required_odd_parity([], a0, 1) is Parity.ANY


@pytest.mark.parametrize("a1", [1, 2])
def test_required_parity_second_step(a1):
    rows = _involutory_rows(1, [a1, 0], 2)
    assert required_odd_parity(rows, 1, 2) is Parity.EVEN


@settings(max_examples=60, deadline=None)
@given(a0=st.sampled_from([1, -1]), odds=st.lists(small_ints, min_size=6, max_size=6), m=st.integers(2, 6))
def test_required_parity_against_trial(a0, odds, m):
    """Try both parities of a_{2m-1} in the rational build and see which one is integral."""
    # integral prefix up to row 2m-2; the AutoFix build only sets up the input
    prefix = solve_involutory(SpecialBuildRequest(Kind.INVOLUTORY, a0, odds, 2 * m - 1, ParityMode.AUTOFIX))
    rows = list(prefix.triangle.rows)
    parity = required_odd_parity(rows, a0, m)
    assert parity is not Parity.ANY
    trial_odds = list(prefix.odd_entries) + [0]
    for trial in (4, 7):
        trial_odds[m - 1] = trial
        edge = rational_involutory_edge(a0, trial_odds, 2 * m + 1)
        assert edge[: 2 * m - 1] == [Fraction(x) for x in prefix.triangle.a]
        integral = edge[2 * m].denominator == 1
        assert integral == ((trial % 2 == 0) == (parity is Parity.EVEN))


def test_build_idempotent_triangle3(triangle3):
    assert idempotent(1, [-1, -1, -1, -1], 9) == triangle3


def test_build_idempotent_triangle4(triangle4):
    assert idempotent(0, [-1, 1, -1, 1], 9) == triangle4


def test_build_idempotent_single_row():
    t = idempotent(1, [], 1)
    assert t.rows == ((1,),)
    assert check_idempotent(to_matrix(t)).passed


def test_request_validation():
    with pytest.raises(ValueError):
        SpecialBuildRequest(Kind.IDEMPOTENT, -1, (1, 1), 5)
    with pytest.raises(ValueError):
        SpecialBuildRequest(Kind.INVOLUTORY, 0, (1, 1), 5)
    with pytest.raises(ValueError):
        SpecialBuildRequest(Kind.IDEMPOTENT, 1, (1,), 5)
    with pytest.raises(ValueError):
        SpecialBuildRequest(Kind.INVOLUTORY, 1, (1,), 5)
    with pytest.raises(ValueError):
        build_idempotent(SpecialBuildRequest(Kind.INVOLUTORY, 1, (2, 2), 5))
    # AutoFix tolerates short input
    SpecialBuildRequest(Kind.INVOLUTORY, 1, (), 5, ParityMode.AUTOFIX)


@settings(max_examples=40, deadline=None)
@given(a0=st.sampled_from([0, 1]), odds=st.lists(small_ints, min_size=16, max_size=16), n=st.integers(1, 32))
def test_idempotent_property(a0, odds, n):
    t = idempotent(a0, odds, n)
    M = to_matrix(t)
    assert mat_mul(M, M) == M
    assert list(t.a[1::2]) == odds[: n // 2]
    assert list(t.b) == idempotent_diagonal(a0, n)
    assert full_report(t, t.spec(), Property.IDEMPOTENT).passed


def test_involutory_strict_example():
    t = involutory(1, [2, 2], 5)
    assert t.a == (1, 2, 1, 2, 1)
    M = to_matrix(t)
    assert mat_mul(M, M) == LowerTriangularMatrix.identity(5)


@pytest.mark.parametrize("x", [-5, 0, 3, 10**30])
def test_involutory_two_rows(x):
    t = involutory(1, [x], 2)
    assert t.rows == ((1,), (x, -1))
    M = to_matrix(t)
    assert mat_mul(M, M) == LowerTriangularMatrix.identity(2)


def test_involutory_strict_rejects():
    with pytest.raises(ParityError) as exc:
        involutory(1, [1, 1], 5)
    assert exc.value.m == 2


def test_autofix_repairs_and_reports():
    res = solve_involutory(SpecialBuildRequest(Kind.INVOLUTORY, 1, (1, 1), 5, ParityMode.AUTOFIX))
    assert [(a.index, a.old, a.new) for a in res.adjustments] == [(3, 1, 2)]
    assert res.odd_entries == (1, 2)
    M = to_matrix(res.triangle)
    assert mat_mul(M, M) == LowerTriangularMatrix.identity(5)


def test_autofix_zero_fills():
    res = solve_involutory(SpecialBuildRequest(Kind.INVOLUTORY, -1, (3,), 9, ParityMode.AUTOFIX))
    assert len(res.odd_entries) == 4
    assert full_report(res.triangle, res.triangle.spec(), Property.INVOLUTORY).passed


@settings(max_examples=40, deadline=None)
@given(a0=st.sampled_from([1, -1]), odds=st.lists(small_ints, min_size=16, max_size=16), n=st.integers(1, 32))
def test_involutory_autofix_property(a0, odds, n):
    res = solve_involutory(SpecialBuildRequest(Kind.INVOLUTORY, a0, odds, n, ParityMode.AUTOFIX))
    t = res.triangle
    assert full_report(t, t.spec(), Property.INVOLUTORY).passed
    assert list(t.b) == involutory_diagonal(a0, n)
    for adj in res.adjustments:
        assert adj.new == adj.old + 1


@settings(max_examples=60, deadline=None)
@given(a0=st.sampled_from([1, -1]), odds=st.lists(small_ints, min_size=8, max_size=8), n=st.integers(1, 17))
def test_strict_rejects_exactly_fractional(a0, odds, n):
    expected = first_fractional_step(a0, odds, n)
    try:
        involutory(a0, odds, n)
    except ParityError as e:
        assert e.m == expected
    else:
        assert expected is None


def test_printed_polynomials_idempotent():
    rng = random.Random(5)
    for _ in range(50):
        odds = [rng.randint(-20, 20) for _ in range(4)]
        for a0, poly in ((1, idempotent_a0_1), (0, idempotent_a0_0)):
            t = idempotent(a0, odds, 9)
            assert [t.a[k] for k in (2, 4, 6, 8)] == poly(*odds)


def test_printed_polynomials_involutory():
    rng = random.Random(6)
    compared = 0
    for _ in range(50):
        odds = [rng.randint(-20, 20) for _ in range(3)]
        for a0 in (1, -1):
            expected = involutory_polys(a0, *odds)
            edge = rational_involutory_edge(a0, odds, 7)
            assert [edge[k] for k in (2, 4, 6)] == expected
            if all(x.denominator == 1 for x in expected):
                t = involutory(a0, odds, 7)
                assert [Fraction(t.a[k]) for k in (2, 4, 6)] == expected
                compared += 1
    assert compared > 0


def test_edge_deletion(triangle3):
    for t in (triangle3, idempotent(1, [4, -3, 7, 2, -9], 11)):
        inner = Triangle([r[1:] for r in t.rows[1:]])
        assert inner.a[0] == 0
        assert check_idempotent(to_matrix(inner)).passed
        assert generate_triangle(inner.spec()) == inner
