from __future__ import annotations

import pytest

from sl2char.closedforms import tensor_weyl_weyl_pieri_form
from sl2char.cvmod import weyl_char
from sl2char.charlat import GradedCharacter
from sl2char.macdonald import (
    InconsistentPieri,
    NonPolynomialCoefficient,
    SymPoly2,
    arm,
    gm,
    gm_series,
    leg,
    macdonald_p,
    pieri_arm_leg,
    pieri_expand,
    pieri_linear_solve,
    sympoly_to_character,
)
from sl2char.qalg import ONE, Q, QPoly, QRat, falling_q_product, qbinom, qpochhammer


def test_sympoly_orbit_representatives():
    p = SymPoly2({(0, 2): 1, (1, 1): 3})
    assert p.terms == {(2, 0): QRat(1), (1, 1): QRat(3)}
    assert p.monomials() == {(2, 0): QRat(1), (0, 2): QRat(1), (1, 1): QRat(3)}


def test_sympoly_product_stays_symmetric():
    e1 = SymPoly2({(1, 0): 1})
    assert e1 * e1 == SymPoly2({(2, 0): 1, (1, 1): 2})
    with pytest.raises(ValueError):
        SymPoly2.from_monomials({(1, 0): QRat(1)})


def test_gm_examples():
    assert gm(0) == SymPoly2({(0, 0): 1})
    assert gm(1) == SymPoly2({(1, 0): QRat(1, ONE - Q)})
    assert gm(2) == SymPoly2({(1, 1): QRat(1, (ONE - Q) ** 2), (2, 0): QRat(1, qpochhammer(2))})


@pytest.mark.parametrize("m", range(11))
def test_gm_series_matches_closed_form(m):
    assert gm_series(m) == gm(m)


def test_macdonald_examples():
    assert macdonald_p((1, 0)) == SymPoly2({(1, 0): 1})
    assert macdonald_p((2, 0)) == SymPoly2({(2, 0): 1, (1, 1): ONE + Q})
    assert macdonald_p((1, 1)) == SymPoly2({(1, 1): 1})
    with pytest.raises(ValueError):
        macdonald_p((1, 2))


def test_arm_and_leg():
    lam = (3, 1)
    assert arm(lam, 1, 1) == 2 and leg(lam, 1, 1) == 1
    assert arm(lam, 1, 3) == 0 and leg(lam, 1, 3) == 0
    assert arm(lam, 2, 1) == 0 and leg(lam, 2, 1) == 0


def test_pieri_examples():
    assert pieri_expand(1, 1) == {(2, 0): QRat(1, ONE - Q), (1, 1): QRat(1)}
    for n in range(6):
        assert pieri_expand(n, 0) == {(n, 0): QRat(1)}
    with pytest.raises(ValueError):
        pieri_expand(1, 2)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(13) for m in range(n + 1) if n + m <= 12])
def test_pieri_routes_agree(n, m):
    a = {k: v for k, v in pieri_arm_leg(n, m).items() if not v.is_zero()}
    assert a == pieri_linear_solve(n, m)


def test_pieri_detects_disagreement(monkeypatch):
    from sl2char import macdonald

    monkeypatch.setattr(macdonald, "pieri_arm_leg", lambda n, m: {(n + m, 0): QRat(2)})
    with pytest.raises(InconsistentPieri):
        macdonald.pieri_expand(2, 1)


def test_character_bridge_examples():
    assert sympoly_to_character(macdonald_p((1, 0))) == weyl_char(1)
    assert sympoly_to_character(macdonald_p((2, 0))) == GradedCharacter({2: ONE, 0: ONE + Q, -2: ONE})
    assert sympoly_to_character(macdonald_p((1, 1))) == GradedCharacter({0: ONE})
    with pytest.raises(NonPolynomialCoefficient):
        sympoly_to_character(gm(1))


@pytest.mark.parametrize("m", range(11))
def test_weyl_bridge(m):
    assert sympoly_to_character(macdonald_p((m, 0))) == weyl_char(m)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(9) for m in range(n + 1)])
def test_pieri_tensor_derivation_end_to_end(n, m):
    poch = QRat(qpochhammer(m))
    lhs = macdonald_p((n, 0)) * gm(m).scale(poch)
    rhs = SymPoly2()
    for lam, phi in pieri_expand(n, m).items():
        coeff = phi * poch
        i = lam[1]
        # each scaled Pieri coefficient is the polynomial weight of W_loc(n+m-2i)
        assert coeff == QRat(qbinom(n, i) * qbinom(m, i) * falling_q_product(i))
        rhs = rhs + macdonald_p(lam).scale(coeff)
    assert lhs == rhs
    assert sympoly_to_character(rhs) == tensor_weyl_weyl_pieri_form(n, m)


def test_json_shape():
    assert macdonald_p((2, 1)).to_json() == {"terms": [{"exponents": [2, 1], "coeff": {"num": ["1"], "den": ["1"]}}]}
    data = macdonald_p((2, 0)).to_json()
    assert data["terms"][0] == {"exponents": [2, 0], "coeff": {"num": ["1"], "den": ["1"]}}
    assert QPoly.from_json(data["terms"][1]["coeff"]["num"]) == ONE + Q
