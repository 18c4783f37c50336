from __future__ import annotations

import pytest

from sl2char.charlat import (
    GradedCharacter,
    character_sum,
    decompose_irreducible,
    demazure_flag_decompose,
    irr_char,
    tensor,
)
from sl2char.closedforms import (
    FiltrationQuotient,
    OrderViolation,
    ShapeNotHook,
    char_2a1b_demazure_form,
    char_2a1b_weyl_form,
    classify_hook,
    dim_sum_check,
    hook_char_closed,
    is_invertible,
    arm_hook_recursion,
    leg_hook_recursion,
    matrix_A,
    matrix_B,
    quotient_character,
    tensor_weyl_weyl_pieri_form,
    tensor_weyl_weyl_truncated_form,
    weyl_tensor_irr_multiplicities,
    weyl_tensor_irr_quotients,
    weyl_tensor_level2_multiplicities,
    weyl_tensor_weyl_quotients,
)
from sl2char.cvmod import Partition, cv_char, weyl_char
from sl2char.qalg import ONE, Q, QPoly, qbinom

P = Partition


def hooks(max_size):
    for s in range(1, max_size + 1):
        for a in range(1, s + 1):
            yield P((a,) + (1,) * (s - a))


# --- hooks -----------------------------------------------------------------


def test_hook_examples():
    assert hook_char_closed("arm", 1, 1) == irr_char(3) + irr_char(1) * Q
    for r in range(6):
        assert hook_char_closed("arm", 0, r) == irr_char(r)
    assert hook_char_closed("leg", 1, 2) == cv_char(P((1, 1, 1, 1)))


def test_classify_hook():
    assert classify_hook(P((3, 1))) == ("arm", 1, 2)
    assert classify_hook(P((2, 1, 1, 1))) == ("balanced", 2, 1)
    assert classify_hook(P((1, 1, 1, 1))) == ("leg", 1, 2)
    with pytest.raises(ShapeNotHook):
        classify_hook(P((2, 2)))


def test_hook_domain_errors():
    with pytest.raises(ShapeNotHook):
        hook_char_closed("leg", 1, 1)
    with pytest.raises(ShapeNotHook):
        hook_char_closed("balanced", 0)
    with pytest.raises(ShapeNotHook):
        hook_char_closed("spiral", 1, 1)


@pytest.mark.parametrize("xi", list(hooks(14)), ids=str)
def test_hook_closed_forms_match_recursion(xi):
    family, k, r = classify_hook(xi)
    assert hook_char_closed(family, k, r) == cv_char(xi)


@pytest.mark.parametrize("k,r", [(k, r) for k in range(1, 13) for r in range(13 - k)])
def test_hook_recursions(k, r):
    assert arm_hook_recursion(k, r) == cv_char(P((k + r,) + (1,) * k))
    assert leg_hook_recursion(k, r) == cv_char(P((k,) + (1,) * (k + r)))


# --- W_loc(m) (x) V(n) ------------------------------------------------------


def test_quotient_examples():
    assert weyl_tensor_irr_quotients(2, 1) == [P((1,)), P((2, 1))]
    # the m <= n branch starts with (n-m) and then hook(n-m+2i, i)
    assert weyl_tensor_irr_quotients(1, 2) == [P((1,)), P((3,))]
    assert weyl_tensor_irr_quotients(1, 1) == [P(), P((2,))]


def test_multiplicity_examples():
    assert weyl_tensor_irr_multiplicities(1, 2).parts == {3: ONE, 1: ONE}
    assert weyl_tensor_irr_multiplicities(2, 1).parts == {3: ONE, 1: ONE + Q}
    assert weyl_tensor_irr_multiplicities(3, 1).parts == {4: ONE, 2: qbinom(3, 1), 0: qbinom(3, 2) - ONE}


MN = [(m, n) for m in range(1, 11) for n in range(1, 11)]


@pytest.mark.parametrize("m,n", MN)
def test_irr_tensor_filtration_and_multiplicities(m, n):
    target = tensor(weyl_char(m), irr_char(n))
    assert character_sum(cv_char(xi) for xi in weyl_tensor_irr_quotients(m, n)) == target
    assert weyl_tensor_irr_multiplicities(m, n) == decompose_irreducible(target)
    assert dim_sum_check(m, n)


def test_dim_sum_examples():
    assert dim_sum_check(2, 1)
    assert dim_sum_check(1, 3)
    assert dim_sum_check(4, 4)


# --- V(2^a, 1^b) -------------------------------------------------------------


def test_2a1b_examples():
    for b in range(6):
        assert char_2a1b_weyl_form(0, b) == weyl_char(b)
    assert char_2a1b_weyl_form(1, 0) == irr_char(2)
    assert char_2a1b_weyl_form(1, 1) == cv_char(P((2, 1)))
    for a in range(5):
        assert char_2a1b_demazure_form(a, 0).parts == {2 * a: ONE}
    assert char_2a1b_demazure_form(0, 2).parts == {2: ONE, 0: Q}
    assert char_2a1b_demazure_form(1, 2).parts == {4: ONE, 2: Q**2}


@pytest.mark.parametrize("a,b", [(a, b) for a in range(8) for b in range(15 - 2 * a)])
def test_2a1b_forms(a, b):
    ch = cv_char(P((2,) * a + (1,) * b))
    assert char_2a1b_weyl_form(a, b) == ch
    form = char_2a1b_demazure_form(a, b)
    assert form.recompose() == ch
    assert demazure_flag_decompose(ch, 2) == form


# --- W_loc(n) (x) W_loc(m) ---------------------------------------------------


def test_tensor_form_examples():
    two = GradedCharacter({2: ONE, 0: QPoly([2]), -2: ONE})
    assert tensor_weyl_weyl_pieri_form(1, 1) == two
    assert tensor_weyl_weyl_truncated_form(1, 1) == two
    assert tensor_weyl_weyl_pieri_form(4, 0) == weyl_char(4)
    assert tensor_weyl_weyl_truncated_form(4, 0) == weyl_char(4)
    assert tensor_weyl_weyl_truncated_form(2, 1) == cv_char(P((2, 1))) + cv_char(P((1,)))
    with pytest.raises(OrderViolation):
        tensor_weyl_weyl_truncated_form(1, 2)


def test_weyl_weyl_quotient_examples():
    assert weyl_tensor_weyl_quotients(1, 1) == [FiltrationQuotient(0, P((2,))), FiltrationQuotient(0, P())]
    assert weyl_tensor_weyl_quotients(2, 1) == [FiltrationQuotient(0, P((2, 1))), FiltrationQuotient(0, P((1,)))]
    with pytest.raises(OrderViolation):
        weyl_tensor_weyl_quotients(1, 2)


def test_level2_examples():
    assert weyl_tensor_level2_multiplicities(1, 1).parts == {2: ONE, 0: ONE}
    with pytest.raises(OrderViolation):
        weyl_tensor_level2_multiplicities(2, 3)


NM = [(n, m) for n in range(11) for m in range(n + 1)]


@pytest.mark.parametrize("n,m", NM)
def test_three_route_tensor_equality(n, m):
    direct = tensor(weyl_char(n), weyl_char(m))
    assert tensor_weyl_weyl_pieri_form(n, m) == direct
    assert tensor_weyl_weyl_truncated_form(n, m) == direct
    if m >= 1:
        quotients = weyl_tensor_weyl_quotients(n, m)
        assert quotient_character(quotients) == direct
        for fq in quotients:
            r = (m + n - fq.partition.size) // 2
            assert 0 <= fq.shift <= r * (m - r)


@pytest.mark.parametrize("n,m", NM)
def test_level2_level2_closed(n, m):
    ch = tensor(weyl_char(n), weyl_char(m))
    closed = weyl_tensor_level2_multiplicities(n, m)
    assert closed == demazure_flag_decompose(ch, 2)
    assert closed.recompose() == ch


# --- matrices ----------------------------------------------------------------


def test_matrix_examples():
    for r in range(1, 8):
        A1 = matrix_A(r, 1)
        assert A1.entries == ((1,),)
        assert is_invertible(A1)
    for r in range(2, 8):
        assert matrix_A(r, 2).determinant() == 1
    assert is_invertible(matrix_B(1, 3))
    assert matrix_B(1, 3).entries == ((1, 1, 1), (1, 2, 3), (0, 1, 3))


def test_matrix_domains():
    with pytest.raises(ValueError):
        matrix_A(2, 3)
    with pytest.raises(ValueError):
        matrix_B(3, 3)


def test_all_matrices_invertible():
    for i in range(1, 13):
        for r in range(1, 13):
            M = matrix_A(r, i) if r >= i else matrix_B(r, i)
            assert is_invertible(M), (r, i)
