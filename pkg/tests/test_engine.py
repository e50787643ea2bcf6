import itertools
from fractions import Fraction

import pytest

from zesting.category import is_modular, validate
from zesting.cohomology import Cochain, CoeffModule, FinAbGroup, enumerate_bicharacters
from zesting.cyclic import CyclicContext, enumerate_assoc, enumerate_braided
from zesting.cyclotomic import root_of_unity as z
from zesting.engine import (AssocZesting, BraidedZesting, ObstructionError, RibbonZesting, ZestingError,
                            assoc_torsor, associative_zestings, braid_scalar, braided_equivalence_classes,
                            check_associative, check_braided, check_ribbon, check_twist, enumerate_j,
                            is_trivial, o1, partial_obstructions, solve_braided, solve_ribbon,
                            zested_category, zested_dimension, zested_dual, zested_fusion,
                            zested_modular_data, zested_mueger_center, zesting_from_json, zesting_to_json)
from zesting.gallery import pointed


def cube(az, x):
    out = {}
    for y, n in zested_fusion(az, x, x).items():
        for w, m in zested_fusion(az, y, x).items():
            out[w] = out.get(w, 0) + n * m
    return out


@pytest.fixture(scope="module")
def su33_assoc(su3_3):
    ctx = CyclicContext.build(su3_3)
    return {(a, b): az for a, b, az in enumerate_assoc(ctx)}


def test_associative_torsor(su3_3):
    A = FinAbGroup.cyclic(3)
    azs = associative_zestings(su3_3, A, lambda a, b: "g" if a[0] + b[0] >= 3 else "1")
    assert len(azs) == 3
    assert all(check_associative(az) for az in azs)
    assert len(assoc_torsor(azs[0])) == 3


def test_lambda2_must_be_symmetric(su3_3):
    A = FinAbGroup.cyclic(3)
    with pytest.raises(ZestingError):
        AssocZesting.from_labels(su3_3, A, lambda a, b: "g" if (a[0], b[0]) == (1, 2) else "1")


def test_projection_required(su4_4):
    with pytest.raises(ZestingError):
        AssocZesting.trivial(su4_4, FinAbGroup.cyclic(2))


def test_general_solver_admissible_pairs(su33_assoc):
    admissible = []
    for (a, b), az in su33_assoc.items():
        try:
            zs = solve_braided(az)
        except ObstructionError:
            continue
        admissible.append((a, b))
        assert len(zs) == 3
        assert all(check_braided(bz) for bz in zs)
        for bz in zs:
            rz = solve_ribbon(bz)
            assert len(rz) == 1
            assert check_twist(rz[0]) and check_ribbon(rz[0])
    assert admissible == [(0, 0), (1, 2), (2, 1)]


def test_general_solver_matches_closed_form(su3_3, su33_assoc):
    ctx = CyclicContext.build(su3_3)
    for a, b in [(0, 0), (1, 2), (2, 1)]:
        general = solve_braided(su33_assoc[(a, b)])
        closed = enumerate_braided(ctx, a, b)
        for bz in closed:
            assert any(bz.t == g.t for g in general)


def test_o1_shape(su33_assoc):
    cocycles = o1(su33_assoc[(1, 2)])
    assert len(cocycles) == 3


def test_enumerate_j_contains_trivial(su33_assoc):
    js = enumerate_j(su33_assoc[(0, 0)])
    assert len(js) >= 1


def test_bicharacter_torsor(su3_3, su33_assoc):
    bz = solve_braided(su33_assoc[(1, 2)])[0]
    A = bz.A
    for bic in enumerate_bicharacters(A):
        assert check_braided(BraidedZesting(bz.assoc, bz.t + bic))
    bump = Cochain.from_turns(A, 2, lambda x, y: Fraction(1, 3) if (x[0], y[0]) == (1, 1) else Fraction(0))
    assert not check_braided(BraidedZesting(bz.assoc, bz.t + bump))


def test_equivalence_classes(su3_3):
    ctx = CyclicContext.build(su3_3)
    zs = enumerate_braided(ctx, 1, 2)
    # Z/3 has no nonzero alternating bicharacter
    assert braided_equivalence_classes(zs) == [[0], [1], [2]]


def test_zested_fusion_no_unit_in_cube(su3_3, su33_assoc):
    az = su33_assoc[(1, 2)]
    assert 0 not in cube(az, "X1")
    dual = zested_dual(az, "X1")
    assert su3_3.label(dual) == "Z2"
    assert zested_fusion(az, "X1", dual) == {0: 1, su3_3.index("Y"): 1}


def test_braid_scalar(su3_3):
    ctx = CyclicContext.build(su3_3)
    bz = [b for b in enumerate_braided(ctx, 1, 2) if b.params["s"] == Fraction(8, 9)][0]
    val, order = braid_scalar(bz, "X1")
    assert val == z(9, 1)


def test_zested_category_valid(su3_3):
    ctx = CyclicContext.build(su3_3)
    bz = enumerate_braided(ctx, 2, 1)[1]
    rz = solve_ribbon(bz)[0]
    cat = zested_category(rz)
    assert validate(cat).ok
    assert is_modular(cat)
    S, T = zested_modular_data(rz)
    assert [S[0][x] for x in range(10)] == [zested_dimension(rz, x) for x in range(10)]


def test_trivial_zesting_is_identity(su3_3):
    az = AssocZesting.trivial(su3_3)
    bz = BraidedZesting(az, Cochain.identity(az.A, CoeffModule.roots_of_unity(1), 2))
    rz = solve_ribbon(bz)[0]
    assert is_trivial(rz)
    cat = zested_category(rz)
    assert cat.to_json() == su3_3.to_json()


def test_json_round_trip(su3_3):
    ctx = CyclicContext.build(su3_3)
    rz = solve_ribbon(enumerate_braided(ctx, 1, 2)[2])[0]
    doc = zesting_to_json(rz)
    back = zesting_from_json(doc, su3_3)
    assert isinstance(back, RibbonZesting)
    assert zesting_to_json(back) == doc


def test_partial_obstructions_su4_4(su4_4):
    A = FinAbGroup.cyclic(2)
    proj = lambda u: (u[0] % 2,)
    rep = partial_obstructions(su4_4, A, lambda a, b: "g" if a[0] + b[0] >= 2 else "1", proj)
    assert rep["first partial obstruction vanishes"].ok
    assert not rep["second partial obstruction vanishes"].ok
    assert "second partial obstruction nontrivial" in rep["second partial obstruction vanishes"].detail
    rep2 = partial_obstructions(su4_4, A, lambda a, b: "g2" if a[0] + b[0] >= 2 else "1", proj)
    assert rep2.ok


def test_su4_4_z2_needs_nontrivial_j(su4_4):
    A = FinAbGroup.cyclic(2)
    proj = lambda u: (u[0] % 2,)
    azs = associative_zestings(su4_4, A, lambda a, b: "g2" if a[0] + b[0] >= 2 else "1", proj)
    found = []
    for az in azs:
        with pytest.raises(ObstructionError):
            solve_braided(az)
        found.extend(solve_braided(az, j=None))
    assert found and all(check_braided(bz) for bz in found)
    assert all(bz.j is not None for bz in found)


def test_mueger_center_z3_example():
    C3 = FinAbGroup.cyclic(3)
    P = pointed(C3, lambda a: z(3, a[0] ** 2))
    az = AssocZesting.trivial(P)
    plus = BraidedZesting(az, Cochain.from_turns(C3, 2, lambda a, b: Fraction(a[0] * b[0], 3)))
    minus = BraidedZesting(az, Cochain.from_turns(C3, 2, lambda a, b: Fraction(-a[0] * b[0], 3)))
    assert check_braided(plus) and check_braided(minus)
    assert zested_mueger_center(plus).modular
    # the other orientation cancels the braiding completely
    assert zested_mueger_center(minus).labels == [0, 1, 2]
    rz = solve_ribbon(minus)[0]
    assert not is_modular(zested_category(rz))


def test_mueger_center_su4_2(su4_2):
    ctx = CyclicContext.build(su4_2)
    centers = {}
    for b in (1, 3):
        bz = enumerate_braided(ctx, 1, b)[0]
        res = zested_mueger_center(bz)
        assert not res.modular
        centers[b] = res.names(su4_2)
    assert centers == {1: ["1", "g3"], 3: ["1", "g"]}
