import pytest
from hypothesis import given, strategies as st

from tupling import pairings2d as p2
from tupling.natmath import digit_length, iroot

# Hand-labelled small grids: point -> code.
CANTOR_LABELS = {
    (0, 0): 0, (0, 1): 1, (1, 0): 2, (0, 2): 3, (1, 1): 4,
    (2, 0): 5, (0, 3): 6, (1, 2): 7, (2, 1): 8, (3, 0): 9,
}
RS_LABELS = {
    (0, 0): 0, (0, 1): 1, (1, 1): 2, (1, 0): 3, (0, 2): 4, (1, 2): 5, (2, 2): 6, (2, 1): 7,
    (2, 0): 8, (0, 3): 9, (1, 3): 10, (2, 3): 11, (3, 3): 12, (3, 2): 13, (3, 1): 14, (3, 0): 15,
}
DYADIC_LABELS = {
    (0, 0): 0, (0, 1): 1, (1, 0): 2, (0, 2): 3, (2, 0): 4, (1, 1): 5, (3, 0): 6, (0, 3): 7,
    (4, 0): 8, (2, 1): 9, (5, 0): 10, (1, 2): 11, (6, 0): 12, (3, 1): 13, (7, 0): 14,
}

ENCODERS = [
    (p2.cantor, p2.cantor_inverse),
    (p2.cantor_swapped, p2.cantor_swapped_inverse),
    (p2.rosenberg_strong, p2.rosenberg_strong_inverse),
    (p2.dyadic, p2.dyadic_inverse),
]


def test_grid_labels():
    for point, code in CANTOR_LABELS.items():
        assert p2.cantor(*point) == code
    for point, code in RS_LABELS.items():
        assert p2.rosenberg_strong(*point) == code
    for point, code in DYADIC_LABELS.items():
        assert p2.dyadic(*point) == code


def test_cantor_order_matches_sequence():
    grid = [(x, y) for x in range(4) for y in range(4)]
    ordered = sorted(grid, key=lambda p: p2.cantor(*p))
    assert ordered[:6] == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert sorted(grid, key=lambda p: p2.rosenberg_strong(*p)) == sorted(RS_LABELS, key=RS_LABELS.get)


def test_cantor_positive():
    assert p2.cantor_positive(1, 1) == 1
    assert p2.cantor_positive(4, 3) == 19
    for x in range(51):
        for y in range(51):
            assert p2.cantor_positive(x + 1, y + 1) == p2.cantor(x, y) + 1


@pytest.mark.parametrize("x, y", [(0, 1), (1, 0), (0, 0)])
def test_cantor_positive_domain(x, y):
    with pytest.raises(ValueError):
        p2.cantor_positive(x, y)


def test_cantor_positive_inverse():
    for z in range(1, 500):
        assert p2.cantor_positive(*p2.cantor_positive_inverse(z)) == z
    with pytest.raises(ValueError):
        p2.cantor_positive_inverse(0)


@pytest.mark.parametrize(
    "fn, args, expected",
    [
        (p2.cantor, (0, 0), 0),
        (p2.cantor, (3, 2), 18),
        (p2.cantor, (3, 0), 9),
        (p2.cantor_swapped, (0, 1), 2),
        (p2.cantor_swapped, (2, 3), 18),
        (p2.rosenberg_strong, (0, 0), 0),
        (p2.rosenberg_strong, (3, 2), 13),
        (p2.rosenberg_strong, (0, 3), 9),
        (p2.dyadic, (0, 0), 0),
        (p2.dyadic, (1, 2), 11),
        (p2.dyadic, (7, 0), 14),
        (p2.dyadic_shell, (0, 0), 1),
        (p2.dyadic_shell, (1, 1), 3),
        (p2.dyadic_shell, (7, 0), 4),
    ],
)
def test_encode_examples(fn, args, expected):
    assert fn(*args) == expected


@pytest.mark.parametrize(
    "fn, z, expected",
    [
        (p2.cantor_inverse, 0, (0, 0)),
        (p2.cantor_inverse, 9, (3, 0)),
        (p2.cantor_inverse, 18, (3, 2)),
        (p2.rosenberg_strong_inverse, 13, (3, 2)),
        (p2.rosenberg_strong_inverse, 12, (3, 3)),
        (p2.rosenberg_strong_inverse, 4, (0, 2)),
        (p2.dyadic_inverse, 11, (1, 2)),
        (p2.dyadic_inverse, 0, (0, 0)),
        (p2.dyadic_inverse, 5, (1, 1)),
    ],
)
def test_decode_examples(fn, z, expected):
    assert fn(z) == expected


def test_swapped_is_mirror():
    for x in range(20):
        assert p2.cantor_swapped(x, x) == p2.cantor(x, x)
        for y in range(20):
            assert p2.cantor_swapped(x, y) == p2.cantor(y, x)


@pytest.mark.parametrize("encode, decode", ENCODERS)
def test_round_trip_codes(encode, decode):
    for z in range(10 ** 5):
        assert encode(*decode(z)) == z


@pytest.mark.parametrize("encode, decode", ENCODERS)
def test_round_trip_points(encode, decode):
    for x in range(300):
        for y in range(300):
            assert decode(encode(x, y)) == (x, y)


@given(st.integers(min_value=0, max_value=1 << 300), st.integers(min_value=0, max_value=1 << 300))
def test_round_trip_huge(x, y):
    for encode, decode in ENCODERS[:3]:
        assert decode(encode(x, y)) == (x, y)


@given(st.integers(min_value=0, max_value=1 << 300), st.integers(min_value=0, max_value=2000))
def test_dyadic_round_trip_huge(x, y):
    assert p2.dyadic_inverse(p2.dyadic(x, y)) == (x, y)


def test_shell_identities():
    for z in range(20000):
        x, y = p2.cantor_inverse(z)
        w = (iroot(8 * z + 1, 2) - 1) // 2
        assert x + y == w
        assert max(p2.rosenberg_strong_inverse(z)) == iroot(z, 2)
    for x in range(200):
        for y in range(30):
            assert p2.dyadic_shell(x, y) == digit_length(p2.dyadic(x, y) + 1, 2)


def test_trailing_zeros_definition():
    for n in range(1, 5000):
        assert p2.trailing_zeros(n) == (n & -n).bit_length() - 1


def test_only_cantor_variants_are_quadratic():
    quadratic = {k for k in p2.PairingKind if k.is_quadratic_polynomial}
    assert quadratic == {p2.PairingKind.CANTOR, p2.PairingKind.CANTOR_SWAPPED}


def test_rs_and_dyadic_are_not_polynomials():
    # A polynomial of degree <= 2 has constant second differences along a line;
    # r2 and q do not, so neither can be a quadratic polynomial.
    def second_diff(f, y):
        return [f(x + 2, y) - 2 * f(x + 1, y) + f(x, y) for x in range(8)]

    assert len(set(second_diff(p2.rosenberg_strong, 3))) > 1
    assert len(set(second_diff(lambda x, y: p2.dyadic(y, x), 1))) > 1
    assert len(set(second_diff(p2.cantor, 3))) == 1


def test_negative_inputs_rejected():
    with pytest.raises(ValueError):
        p2.cantor(-1, 0)
    with pytest.raises(ValueError):
        p2.rosenberg_strong_inverse(-3)
