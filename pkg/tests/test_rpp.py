import itertools

import pytest

from rppjt.jacobi_trudi import recurrence_interval
from rppjt.polyring import ZERO, canonical_string, polysum, substitute_t, swap_x, t, x
from rppjt.rpp import (
    InconsistentPartialFilling,
    enumerate_row_flagged,
    format_rpp,
    g_col_flagged,
    g_row_flagged,
    g_unflagged_truncated,
    is_rpp,
    owt,
    parse_rpp,
    r_bar_partial,
    r_partial,
    reachable_partials,
    rpp_count,
    transpose_filling,
    wt,
)
from rppjt.shapes import Flags, SkewShape, flag_condition_row, partitions_in_box

SAMPLE_RPP = """\
. . . 2 2 3
. 1 1 2 3
1 1 2 2 3
1 2 3
2 2 3
"""


def brute_force(shape, flags):
    """Every map cells -> values inside the row flags, filtered by monotonicity."""
    if not shape.is_valid:
        return []
    cells = sorted(shape.cells)
    ranges = [range(flags.alpha[r - 1] + 1, flags.beta[r - 1] + 1) for r, _ in cells]
    out = []
    for values in itertools.product(*ranges):
        filling = dict(zip(cells, values))
        if all(
            filling[(r, c)] <= filling.get((r, c + 1), 10**9) and filling[(r, c)] <= filling.get((r + 1, c), 10**9)
            for r, c in cells
        ):
            out.append(filling)
    return out


def small_cases():
    for n in (1, 2, 3):
        for lam in partitions_in_box(n, 3 if n < 3 else 2):
            for mu in partitions_in_box(n, 2):
                for alpha in itertools.product(range(2), repeat=n):
                    for beta in itertools.product(range(1, 4), repeat=n):
                        yield SkewShape(lam, mu), Flags(alpha, beta)


def test_sample_rpp_weights():
    filling, shape = parse_rpp(SAMPLE_RPP)
    assert shape == SkewShape((6, 5, 5, 3, 3), (3, 1))
    assert is_rpp(filling)
    assert canonical_string(wt(filling)) == "x1^3*x2^5*x3^3*t1*t2^3*t3*t4^2"
    assert canonical_string(owt(filling)) == "x1^3*x2^5*x3^5*t1^2*t2*t3*t4"
    assert owt(filling) == wt(transpose_filling(filling))
    assert format_rpp(filling, shape) == SAMPLE_RPP.rstrip("\n")


def test_small_weights():
    assert wt({(1, 1): 4}) == x(4) and owt({(1, 1): 4}) == x(4)
    assert wt({(2, 3): 5, (3, 3): 5}) == x(5) * t(2)
    assert owt({(2, 3): 5, (2, 4): 5}) == x(5) * t(3)


def test_enumeration_matches_brute_force():
    for shape, flags in small_cases():
        fast = list(enumerate_row_flagged(shape, flags))
        slow = brute_force(shape, flags)
        key = lambda f: sorted(f.items())
        assert sorted(map(key, fast)) == sorted(map(key, slow)), (shape, flags)


def test_generating_functions_match_weight_definitions():
    for shape, flags in small_cases():
        rpps = brute_force(shape, flags)
        assert g_row_flagged(shape, flags) == polysum(wt(r) for r in rpps)
        assert r_bar_partial(shape, flags, {}) == polysum(owt(r) for r in rpps)
        for r in rpps:
            assert owt(r) == wt(transpose_filling(r))


def test_enumeration_order_is_lexicographic_in_fill_order():
    shape, flags = SkewShape((2, 2), (1, 0)), Flags((0, 0), (3, 3))
    seq = [tuple(r[c] for c in shape.cells) for r in enumerate_row_flagged(shape, flags)]
    assert seq == sorted(seq)


def test_examples():
    col2 = SkewShape((1, 1))
    assert rpp_count(col2, Flags((0, 0), (2, 2))) == 3
    assert g_unflagged_truncated(col2, 2) == x(1) * x(2) + x(1) * t(1) + x(2) * t(1)
    assert g_unflagged_truncated(SkewShape((2,)), 2) == x(1) ** 2 + x(1) * x(2) + x(2) ** 2
    assert g_unflagged_truncated(SkewShape((2, 1)), 0) == ZERO
    assert g_row_flagged(SkewShape((), ()), Flags((), ())) == 1
    assert g_row_flagged(SkewShape((2, 1), (2, 1)), Flags((0, 0), (0, 0))) == 1
    assert g_row_flagged(SkewShape((2, 2), (1, 0)), Flags((1, 0), (1, 1))) == ZERO
    assert rpp_count(SkewShape((2, 1)), Flags((0, 2), (3, 2))) == 0
    assert rpp_count(SkewShape((1, 0), (2, 0)), Flags((0, 0), (3, 3))) == 0
    assert rpp_count(SkewShape((1, 1), (0, 1)), Flags((0, 0), (3, 3))) == 0


def test_col_flagged():
    assert g_col_flagged(SkewShape((3, 3), (2, 0)).transpose(), Flags((2, 0), (2, 2))) == ZERO
    # a single column of height 2 with bounds (0, 2]
    assert g_col_flagged(SkewShape((1, 1)), Flags((0,), (2,))) == x(1) * x(2) + x(1) * t(1) + x(2) * t(1)
    assert g_col_flagged(SkewShape((), ()), Flags((), ())) == 1
    with pytest.raises(ValueError):
        g_col_flagged(SkewShape((2,)), Flags((0,), (2,)))


def col_flagged_brute(shape, flags):
    """wt-sum over fillings of ``shape`` whose column j lies in (alpha_j, beta_j]."""
    cells = sorted(shape.cells)
    ranges = [range(flags.alpha[c - 1] + 1, flags.beta[c - 1] + 1) for _, c in cells]
    total = ZERO
    for values in itertools.product(*ranges):
        filling = dict(zip(cells, values))
        if is_rpp(filling):
            total = total + wt(filling)
    return total


def test_col_flagged_against_direct_column_enumeration():
    for lam in partitions_in_box(3, 3):
        for mu in partitions_in_box(3, 2):
            shape = SkewShape(lam, mu)
            if not shape.is_valid:
                continue
            conj = shape.transpose()
            for alpha in itertools.product(range(2), repeat=3):
                for beta in itertools.product(range(1, 3), repeat=3):
                    flags = Flags(alpha, beta)
                    assert g_col_flagged(conj, flags) == col_flagged_brute(conj, flags)


def test_partial_sums():
    shape, flags = SkewShape((3, 2), (1, 0)), Flags((0, 0), (3, 3))
    full = next(enumerate_row_flagged(shape, flags))
    assert r_partial(shape, flags, full) == wt(full)
    assert r_bar_partial(shape, flags, full) == owt(full)
    assert r_partial(shape, flags, {}) == g_row_flagged(shape, flags)
    with pytest.raises(InconsistentPartialFilling):
        r_partial(shape, flags, {(1, 3): 4})
    with pytest.raises(InconsistentPartialFilling):
        r_partial(shape, flags, {(1, 2): 1})
    with pytest.raises(InconsistentPartialFilling):
        r_partial(shape, flags, {(1, 3): 1, (1, 2): 2})


def test_partial_sum_is_zero_when_nothing_fits():
    shape, flags = SkewShape((2, 2)), Flags((0, 1), (3, 2))
    dead = {(1, 2): 3}
    _, a, b = recurrence_interval(shape, flags, dead)
    assert a > b
    assert r_partial(shape, flags, dead) == ZERO
    assert r_bar_partial(shape, flags, dead) == ZERO


def test_branching_recurrence_for_enumeration():
    for shape, flags in small_cases():
        if not shape.is_valid or shape.size() == 0:
            continue
        for r0 in reachable_partials(shape, flags):
            if len(r0) == shape.size():
                continue
            (r, c), a, b = recurrence_interval(shape, flags, r0)
            for f in (r_partial, r_bar_partial):
                total = polysum(f(shape, flags, {**r0, (r, c): k}) for k in range(a, b + 1))
                assert f(shape, flags, r0) == total


def test_t_zero_is_row_strict_count():
    # at t = 0 only column-strict fillings survive
    shape = SkewShape((2, 2))
    g0 = substitute_t(g_unflagged_truncated(shape, 3), default=0)
    assert g0 == x(1) ** 2 * x(2) ** 2 + x(1) ** 2 * x(3) ** 2 + x(2) ** 2 * x(3) ** 2 + x(1) ** 2 * x(2) * x(3) + x(1) * x(2) ** 2 * x(3) + x(1) * x(2) * x(3) ** 2


def test_x_symmetry_small():
    g = g_unflagged_truncated(SkewShape((2, 1)), 3)
    assert swap_x(g, 1, 2) == g and swap_x(g, 2, 3) == g
