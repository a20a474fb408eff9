import random
from fractions import Fraction

import pytest

from lefschetz.family import (
    ACOrderError,
    BetaRangeError,
    GammaRangeError,
    ParameterError,
    SnMatrix,
    build_ci,
    build_ideal,
    classify,
    enumerate_params,
    random_sn,
    sn_alpha,
    sn_det_identity,
    uncovered_params,
    validate,
)
from lefschetz.polyring import parse_ideal


def test_validate_accepts_and_freezes():
    p = validate(8, 7, 6, 3, 2)
    assert p.as_tuple() == (8, 7, 6, 3, 2)
    assert p.socle_degree == 15
    with pytest.raises(AttributeError):
        p.a = 9


@pytest.mark.parametrize(
    "args,exc",
    [
        ((3, 2, 4, 1, 1), ACOrderError),
        ((2, 2, 1, 1, 1), ACOrderError),
        ((4, 3, 3, 3, 1), BetaRangeError),
        ((4, 3, 3, 0, 1), ParameterError),
        ((4, 3, 3, 1, 3), GammaRangeError),
        ((4, 8, 4, 1, 2), GammaRangeError),  # b too large for a twist
        ((0, 3, 3, 1, 1), ParameterError),
        ((4, 3, 3, 1, True), ParameterError),
        ((4.0, 3, 3, 1, 1), ParameterError),
    ],
)
def test_validate_rejects(args, exc):
    with pytest.raises(exc):
        validate(*args)


def test_gamma_error_message_names_the_range():
    with pytest.raises(GammaRangeError, match="1 <= gamma <= 2"):
        validate(4, 3, 3, 1, 3)


def test_build_ci_frozen():
    assert build_ci(2, 2, 2, 1) == parse_ideal("x^2, y^2 - x*z, z^2")
    assert build_ci(5, 5, 5, 4) == parse_ideal("x^5, y^5 - x*z^4, z^5")
    with pytest.raises(GammaRangeError):
        build_ci(3, 3, 3, 3)


def test_build_ideal_frozen():
    ideal = build_ideal(validate(2, 2, 2, 1, 1))
    assert ideal == parse_ideal("x^2, y^2 - x*z, z^2, x*y, y*z")
    ideal = build_ideal(validate(5, 5, 5, 1, 4))
    assert ideal == parse_ideal(
        "x^5, y^5 - x*z^4, z^5, x^4*y^4, y^4*z"
    )


def test_classify_frozen_values():
    report = classify(validate(8, 7, 6, 3, 2))
    assert report.true_flags() == ()
    assert not report.covered
    report = classify(validate(7, 7, 6, 2, 3))
    assert not report.covered
    report = classify(validate(2, 2, 2, 1, 1))
    assert report.true_flags() == (
        "thm37",
        "thm38",
        "cor313a",
        "cor313b",
        "small2",
    )
    report = classify(validate(9, 5, 4, 2, 3))
    assert report.flags() == {
        "thm37": True,
        "thm38": False,
        "cor313a": True,
        "cor313b": True,
        "small2": False,
        "small3": False,
        "small4": True,
        "small5": True,
    }


def test_region_implications_hold_on_enumeration():
    # the beta interval of cor313b is downward closed, and its region sits
    # inside the thm37 one; cor313a only escapes thm37 at tiny b
    for p in enumerate_params(9):
        report = classify(p)
        if report.cor313b:
            assert report.thm37
            if p.beta > 1:
                lower = classify(validate(p.a, p.b, p.c, p.beta - 1, p.gamma))
                assert lower.cor313b
        if report.cor313a:
            assert report.thm37 or report.small2 or report.small3


def test_enumeration_is_sorted_and_valid():
    params = list(enumerate_params(3))
    assert len(params) == 12
    assert params == sorted(params)
    assert params[0].as_tuple() == (2, 2, 2, 1, 1)
    for p in params:
        assert validate(*p.as_tuple()) == p
        assert 2 <= p.c <= p.a and 2 <= p.b <= p.a + p.c - 2


def test_enumeration_window():
    only_four = list(enumerate_params(4, a_min=4))
    assert all(p.a == 4 for p in only_four)
    assert set(only_four) == {
        p for p in enumerate_params(4) if p.a == 4
    }


def test_uncovered_params():
    assert list(uncovered_params(5)) == []
    first = next(uncovered_params(6))
    assert first.as_tuple() == (6, 6, 6, 1, 1)
    uncovered8 = set(p.as_tuple() for p in uncovered_params(8))
    assert (8, 7, 6, 3, 2) in uncovered8
    assert (7, 7, 6, 2, 3) in uncovered8


def test_sn_matrix_layout():
    m = SnMatrix(2, ((3,),), (2, 1))
    assert m.to_matrix().to_lists() == [
        [Fraction(1), Fraction(-3)],
        [Fraction(2), Fraction(1)],
    ]
    assert sn_alpha(m) == (2, 7)
    check = sn_det_identity(m)
    assert check.det == 7 and check.equal and check.positive


def test_sn_all_ones_and_identity_like():
    ones = SnMatrix(3, ((1, 1), (1,)), (1, 1, 1))
    assert sn_alpha(ones) == (1, 2, 4)
    assert sn_det_identity(ones).det == 4
    trivial = SnMatrix(3, ((0, 0), (0,)), (0, 0, 1))
    assert sn_det_identity(trivial).det == 1


def test_sn_validation():
    with pytest.raises(ValueError):
        SnMatrix(1, (), (1,))
    with pytest.raises(ValueError):
        SnMatrix(3, ((1,),), (1, 1, 1))  # missing an upper row
    with pytest.raises(ValueError):
        SnMatrix(2, ((-1,),), (1, 1))
    with pytest.raises(ValueError):
        SnMatrix(2, ((1,),), (1, 0))  # last entry must be positive
    with pytest.raises(ValueError):
        random_sn(2, 0, 0)


def test_random_sn_reproducible():
    assert random_sn(5, 9, seed=42) == random_sn(5, 9, seed=42)
    rng = random.Random(42)
    assert random_sn(5, 9, rng) == random_sn(5, 9, seed=42)


def test_identity_on_random_batch():
    rng = random.Random("sn-batch")
    for _ in range(100):
        size = rng.randint(2, 6)
        check = sn_det_identity(random_sn(size, 9, rng))
        assert check.equal and check.positive
