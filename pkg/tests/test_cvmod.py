from __future__ import annotations

import pytest

from sl2char import cvmod
from sl2char.charlat import GradedCharacter, decompose_irreducible, dimension, irr_char
from sl2char.cvmod import (
    Partition,
    SingletonPartition,
    basis_char,
    cv_char,
    cv_dimension,
    demazure_char,
    demazure_partition,
    enumerate_basis,
    hook_partition,
    partitions,
    ses_transforms,
    truncated_weyl_partition,
    weyl_char,
    weyl_partition,
)
from sl2char.qalg import ONE, Q, QPoly

P = Partition


def test_partition_validation():
    assert P.parse("2,2,1") == P((2, 2, 1))
    assert P.parse("") == P()
    assert str(P((2, 2, 1))) == "2,2,1"
    assert P.canonical([1, 0, 3]) == P((3, 1))
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, 0))
    with pytest.raises(ValueError):
        P.parse("2,a")


def test_partition_count():
    # p(12) = 77
    assert len(list(partitions(12))) == 77
    assert sum(1 for s in range(13) for _ in partitions(s, 5)) == 197


def test_cv_dimension_examples():
    assert cv_dimension(P()) == 1
    assert cv_dimension(P((2, 2, 1))) == 18
    assert cv_dimension(P((1, 1, 1))) == 8


def test_ses_examples():
    assert ses_transforms(P((2, 1))) == (P((3,)), P((1,)), 1)
    assert ses_transforms(P((1, 1))) == (P((2,)), P(), 1)
    assert ses_transforms(P((2, 2))) == (P((3, 1)), P(), 2)
    with pytest.raises(SingletonPartition):
        ses_transforms(P((4,)))


@pytest.mark.parametrize("xi", [xi for s in range(13) for xi in partitions(s) if len(xi) >= 2], ids=str)
def test_ses_size_law(xi):
    plus, minus, _ = ses_transforms(xi)
    assert plus.size == xi.size
    assert minus.size == xi.size - 2 * xi[-1]
    assert cv_dimension(xi) == cv_dimension(plus) + cv_dimension(minus)


def test_cv_char_examples():
    assert cv_char(P((2,))) == irr_char(2)
    assert cv_char(P((1, 1))) == GradedCharacter({2: ONE, 0: ONE + Q, -2: ONE})
    assert cv_char(P((2, 1))) == irr_char(3) + irr_char(1) * Q


def test_basis_examples():
    assert enumerate_basis(P((1,))) == [(0,), (1,)]
    assert enumerate_basis(P((2,))) == [(0,), (1,), (2,)]
    assert len(enumerate_basis(P((2, 1)))) == 6
    assert enumerate_basis(P()) == [()]
    assert basis_char(P((1,))) == irr_char(1)
    assert basis_char(P((1, 1))) == GradedCharacter({2: ONE, 0: ONE + Q, -2: ONE})
    for n in range(9):
        assert basis_char(P.canonical((n,))) == irr_char(n)


@pytest.mark.parametrize("xi", [xi for s in range(13) for xi in partitions(s, 5)], ids=str)
def test_oracle_equivalence(xi):
    basis = enumerate_basis(xi)
    assert len(basis) == len(set(basis)) == cv_dimension(xi)
    assert cv_char(xi) == basis_char(xi)
    assert dimension(cv_char(xi)) == cv_dimension(xi)


def test_family_partitions():
    assert weyl_partition(3) == P((1, 1, 1))
    assert demazure_partition(2, 3) == P((2, 1))
    assert demazure_partition(3, 6) == P((3, 3))
    assert truncated_weyl_partition(5, 3) == P((2, 2, 1))
    assert truncated_weyl_partition(2, 5) == P((1, 1))
    assert truncated_weyl_partition(0, 0) == P()
    assert hook_partition(3, 2) == P((2, 1))
    assert hook_partition(4, 4) == P((1, 1, 1, 1))
    for bad in [lambda: weyl_partition(-1), lambda: demazure_partition(0, 2), lambda: hook_partition(2, 3),
                lambda: truncated_weyl_partition(3, 0), lambda: hook_partition(2, 0)]:
        with pytest.raises(ValueError):
            bad()


def test_weyl_char_examples():
    assert weyl_char(0) == GradedCharacter({0: ONE})
    assert weyl_char(2) == GradedCharacter({2: ONE, 0: ONE + Q, -2: ONE})
    assert decompose_irreducible(weyl_char(3)).parts == {3: ONE, 1: Q + Q**2}


@pytest.mark.parametrize("m", range(13))
def test_weyl_closed_form(m):
    assert weyl_char(m) == cv_char(weyl_partition(m))
    assert dimension(weyl_char(m)) == 2**m


@pytest.mark.parametrize("n", range(11))
def test_level_one_demazure_is_weyl(n):
    assert demazure_char(1, n) == weyl_char(n)


def test_cache_spill_round_trip(tmp_path):
    want = cv_char(P((3, 2, 2, 1)))
    path = tmp_path / "cache.json"
    cvmod.save_cache(path)
    cvmod.clear_cache()
    assert cvmod.load_cache(path) > 0
    assert cvmod._cv_memo[P((3, 2, 2, 1))] == want
    assert cv_char(P((3, 2, 2, 1))) == want
