import itertools
import math

import pytest

from tupling.shells import (
    INFINITE,
    check_cubic_root_identity,
    check_definition_pairwise,
    check_digit_bound,
    check_shell_inequality,
    check_shell_numbering_prefix,
    constant_shells,
    cubic_shells,
    custom_shells,
    diagonal_shells,
    digit_bound_points,
    dyadic_shells,
    is_max_dominating_prefix,
)
from tupling.tuplings import (
    CANTOR,
    CANTOR_SWAPPED,
    DYADIC,
    RS2,
    TuplingFunction,
    chowla_tupling,
    fold_tupling,
    rs_tupling,
    skolem_tupling,
)

ALL = [CANTOR, CANTOR_SWAPPED, RS2, DYADIC, rs_tupling(3), skolem_tupling(3), chowla_tupling(3)]


def test_standard_shells_pass_prefix():
    assert check_shell_numbering_prefix(CANTOR, diagonal_shells(2), 10 ** 4)
    assert check_shell_numbering_prefix(RS2, cubic_shells(2), 10 ** 4)
    assert check_shell_numbering_prefix(DYADIC, dyadic_shells(), 10 ** 4)


def test_cantor_fails_cubic_prefix():
    v = check_shell_numbering_prefix(CANTOR, cubic_shells(2), 10)
    assert not v
    # max over (0,0),(0,1),(1,0),(0,2),(1,1): 0,1,1,2,1 -> drops at index 4
    assert v.counterexample["indices"] == (3, 4)
    assert v.counterexample["points"] == ((0, 2), (1, 1))
    assert "FAIL" in v.line()


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
def test_prefix_check_agrees_with_pairwise_definition(f):
    for sigma in (diagonal_shells(f.dim), cubic_shells(f.dim)):
        prefix = bool(check_shell_numbering_prefix(f, sigma, 300))
        pairwise = bool(check_definition_pairwise(f, sigma, 300))
        assert prefix == pairwise


@pytest.mark.parametrize("f", ALL, ids=lambda f: f.name)
@pytest.mark.parametrize("k", [0, 1, 7])
def test_constant_numberings_always_pass(f, k):
    assert check_shell_numbering_prefix(f, constant_shells(k, f.dim), 500)


def test_constant_numbering_inequality_uses_infinite_counts():
    sigma = constant_shells(3, 2)
    assert sigma.count(3) == 0 and sigma.count(4) == INFINITE
    pts = [CANTOR.decode(z) for z in range(50)]
    assert check_shell_inequality(CANTOR, sigma, pts)


def test_infinite_lower_count_never_satisfied():
    sigma = custom_shells(lambda p: 1, 2, count_below=lambda n: 0 if n == 0 else INFINITE)
    assert not check_shell_inequality(CANTOR, sigma, [(0, 0)])


def test_closed_form_counts_match_enumeration():
    for d in range(1, 4):
        box = list(itertools.product(range(8), repeat=d))
        for n in range(7):
            assert diagonal_shells(d).count(n) == sum(1 for p in box if sum(p) < n)
            assert cubic_shells(d).count(n) == sum(1 for p in box if max(p) < n)


def test_dyadic_count_matches_enumeration():
    sigma = dyadic_shells()
    # shell < n forces x < 2**n and y < n
    for n in range(0, 9):
        brute = sum(1 for x in range(2 ** n) for y in range(n) if sigma((x, y)) < n)
        assert sigma.count(n) == brute


@pytest.mark.parametrize(
    "f, sigma",
    [(skolem_tupling(3), diagonal_shells(3)), (rs_tupling(3), cubic_shells(3)), (chowla_tupling(3), diagonal_shells(3))],
)
def test_shell_inequality_grid(f, sigma):
    assert check_shell_inequality(f, sigma, itertools.product(range(6), repeat=3))


def test_dyadic_inequality_with_enumerated_box():
    box_sigma = custom_shells(DYADIC.standard_shell.sigma, 2, box=(2 ** 6, 6))
    points = [(x, y) for x in range(8) for y in range(4)]
    assert check_shell_inequality(DYADIC, box_sigma, points)
    assert check_shell_inequality(DYADIC, dyadic_shells(), points)


def test_shell_inequality_detects_wrong_numbering():
    v = check_shell_inequality(CANTOR, cubic_shells(2), itertools.product(range(4), repeat=2))
    assert not v and v.counterexample["point"] is not None


def test_custom_without_count_rejected():
    with pytest.raises(ValueError):
        custom_shells(sum, 2)


@pytest.mark.parametrize("f", [RS2, CANTOR, DYADIC, skolem_tupling(4), fold_tupling(CANTOR, 3)], ids=lambda f: f.name)
def test_max_dominating(f):
    assert is_max_dominating_prefix(f, 10 ** 4)


def test_not_max_dominating_detected():
    shifted = TuplingFunction("shifted", 2, lambda p: RS2.encode(p), lambda z: (z + 1, 0))
    v = is_max_dominating_prefix(shifted, 5)
    assert not v and v.counterexample["code"] == 0


def test_digit_bound_examples():
    assert check_digit_bound(RS2, 2, 2, 2)
    v = check_digit_bound(CANTOR, 2, 2, 2)
    assert not v
    assert CANTOR.encode((3, 2)) == 18 and (3, 2) in [
        p for p in itertools.product(range(4), repeat=2) if CANTOR.encode(p).bit_length() > 4
    ]
    assert check_digit_bound(rs_tupling(3), 2, 1, 3)
    assert check_digit_bound(RS2, 10, 1, 2)
    assert max(RS2.encode(p) for p in itertools.product(range(10), repeat=2)) == RS2.encode((9, 0)) == 99


def test_digit_bound_sampling_switches_on():
    pts, exhaustive = digit_bound_points(2, 8, 3)
    pts = list(pts)
    assert not exhaustive
    assert (255, 255, 255) in pts and (0, 0, 0) in pts
    _, exhaustive = digit_bound_points(2, 4, 4)
    assert exhaustive


def test_cubic_root_identity_iff_cubic_shells():
    grid = list(itertools.product(range(6), repeat=2))
    for f in (RS2, CANTOR, DYADIC):
        cubic = bool(check_shell_inequality(f, cubic_shells(2), grid))
        assert cubic == bool(check_cubic_root_identity(f, grid))
    assert check_cubic_root_identity(rs_tupling(3), itertools.product(range(5), repeat=3))
