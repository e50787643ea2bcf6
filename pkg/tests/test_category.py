import numpy as np
import pytest

from zesting.category import (CategoryData, InsufficientData, PointedForm, balancing_check, central_charge,
                              chi_scalar, classify_pointed, compute_grading, gauss_sum, global_dimension,
                              is_modular, mueger_center, validate, verlinde_fusion)
from zesting.cohomology import FinAbGroup
from zesting.cyclotomic import root_of_unity as z
from zesting.gallery import pointed, su_pointed


def test_su3_3_invariants(su3_3):
    assert validate(su3_3).ok
    assert global_dimension(su3_3) == 36
    assert is_modular(su3_3)
    assert mueger_center(su3_3) == [0]
    assert central_charge(su3_3) == -1


def test_su3_3_verlinde_matches_frozen_fusion(su3_3):
    assert (verlinde_fusion(su3_3) == su3_3.fusion).all()
    assert (su3_3.fusion >= 0).all()


def test_su3_3_unitary(su3_3):
    S = su3_3.smatrix
    for i in range(10):
        for j in range(10):
            v = sum((S[i][k] * S[j][k].conjugate() for k in range(10)), z(1) * 0)
            assert v == (36 if i == j else 0)


def test_balancing(su3_3):
    assert balancing_check(su3_3) == []


def test_pointed_action(su3_3):
    assert su3_3.label(su3_3.tensor_invertible("g", "X1")) == "X2"
    assert su3_3.label(su3_3.tensor_invertible("g", "X2")) == "X3"
    assert su3_3.tensor("X1", "Z1") == {0: 1, 3: 1}


def test_grading_from_chi(su3_3):
    gr = compute_grading(su3_3, "g")
    assert gr.component_sizes() == [4, 3, 3]
    # chi_g(X1) = q with q = zeta_3^-1
    assert chi_scalar(su3_3, "g", "X1") == z(3, 2)


def test_insufficient_data(su4_4):
    with pytest.raises(InsufficientData):
        su4_4.require("smatrix")
    assert not su4_4.has("fusion")


def test_json_round_trip(su3_3, su4_2):
    for cat in (su3_3, su4_2):
        back = CategoryData.from_json(cat.to_json())
        assert back == cat
        assert back.to_json() == cat.to_json()


def test_validate_reports_bad_dual(su3_3):
    doc = su3_3.to_json()
    doc["dual"] = list(doc["labels"])
    rep = validate(CategoryData.from_json(doc))
    assert not rep.ok


@pytest.mark.parametrize("N,k,kind", [(3, 3, "symmetric-Tannakian"), (4, 4, "symmetric-superTannakian"),
                                      (4, 2, "degenerate-other"), (3, 1, "modular")])
def test_classify_su_pointed(N, k, kind):
    assert classify_pointed(su_pointed(N, k)).kind == kind


def test_su_pointed_monodromy():
    for N, k in [(3, 3), (4, 4), (4, 2), (5, 2)]:
        p = su_pointed(N, k)
        for s in range(N):
            for t in range(N):
                assert p.bicharacter((s,), (t,)) == z(2 * N, -2 * s * t * k)


def test_su_pointed_4_2_against_eta(su4_2):
    # the A_3 twist formula is the complex conjugate of eta(j) = exp(2 pi i j^2 / 4)
    p = su_pointed(4, 2)
    assert all(p((j,)) == z(4, -j * j) for j in range(4))
    # the builtin follows eta on its pointed part
    assert [su4_2.twists[su4_2.index(x)] for x in ("1", "g", "g2", "g3")] == [z(4, j * j) for j in range(4)]


def test_pointed_categories():
    C3 = FinAbGroup.cyclic(3)
    P = pointed(C3, lambda a: z(3, a[0] ** 2))
    assert validate(P).ok and is_modular(P)
    sv = pointed(FinAbGroup.cyclic(2), lambda a: z(2, a[0]))
    assert validate(sv).ok
    assert mueger_center(sv) == [0, 1]
    assert gauss_sum(sv) == 0


def test_non_quadratic_rejected():
    bad = PointedForm(FinAbGroup.cyclic(4), lambda a: z(8, a[0]))
    assert not bad.is_quadratic()
    with pytest.raises(ValueError):
        classify_pointed(bad)
