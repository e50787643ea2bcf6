import itertools

import numpy as np
import pytest

from zesting.cohomology import (BipartiteCochain, Cochain, CoeffModule, FinAbGroup, coboundary_witness,
                                cyclic_cochain, delta_h, delta_v, differential, enumerate_alternating_bicharacters,
                                enumerate_bicharacters, h3_representatives, is_cocycle, shuffle, solve_mod,
                                subgroup_basis)


def random_cochain(rng, G, M, n):
    t = rng.integers(0, M.L, size=(G.order,) * n + (1,))
    return Cochain(G, M, n, t)


@pytest.mark.parametrize("orders", [(4, 2), (6,)])
def test_dd_is_identity(orders):
    rng = np.random.default_rng(7)
    G = FinAbGroup(orders)
    M = CoeffModule.roots_of_unity(12)
    for k in range(100):
        f = random_cochain(rng, G, M, k % 4)
        assert differential(differential(f)).is_identity()


@pytest.mark.parametrize("N", range(1, 7))
def test_beta_and_lambda_differentials(N):
    M = CoeffModule.roots_of_unity(2 * N * N)
    for nu in range(M.L):
        beta = cyclic_cochain("beta", N, nu, M)
        assert differential(beta) == cyclic_cochain("gamma", N, N * nu, M)
        lam = cyclic_cochain("lambda", N, nu, M, strict=False)
        d = differential(lam)
        for i, j, k, m in itertools.product(range(N), repeat=4):
            expect = N * nu if (i + j >= N and k + m >= N) else 0
            assert d(i, j, k, m) == expect % M.L


def test_lambda_strict_rejects_non_cocycle():
    with pytest.raises(ValueError):
        cyclic_cochain("lambda", 3, 1, CoeffModule.roots_of_unity(9))


@pytest.mark.parametrize("p", [1, 2])
def test_shuffle_identity(p):
    rng = np.random.default_rng(3)
    G = FinAbGroup([6])
    M = CoeffModule.roots_of_unity(7)
    n = 3
    for _ in range(4):
        a = random_cochain(rng, G, M, n)
        lhs = shuffle(differential(a), p)
        rhs = BipartiteCochain.zero(G, M, p, n + 1 - p)
        if p >= 2:
            rhs = rhs + delta_h(shuffle(a, p - 1))
        rhs = rhs + delta_v(shuffle(a, p)).scaled((-1) ** p)
        assert lhs == rhs


def test_symmetric_cocycles_on_z4_split():
    G = FinAbGroup([4])
    M = CoeffModule.roots_of_unity(8)
    seen = set()
    for nu in range(8):
        for bv in itertools.product(range(8), repeat=3):
            f = cyclic_cochain("gamma", 4, nu, M) + differential(Cochain(G, M, 1, np.array([[0], *[[v] for v in bv]])))
            key = f.table.tobytes()
            if key in seen:
                continue
            seen.add(key)
            w = coboundary_witness(f)
            assert w is not None and differential(w) == f


def test_gamma_class_nontrivial_in_finite_module():
    g = cyclic_cochain("gamma", 3, (1,), CoeffModule.finite_abelian(FinAbGroup([3])))
    assert is_cocycle(g)
    assert coboundary_witness(g) is None


@pytest.mark.parametrize("orders, count", [((2, 2), 8), ((4, 2), 16), ((3,), 3), ((6,), 6)])
def test_h3_representatives(orders, count):
    reps = h3_representatives(FinAbGroup(orders))
    assert len(reps) == count
    assert all(is_cocycle(r) for r in reps)
    # pairwise non-cohomologous
    for x, y in itertools.combinations(reps[:6], 2):
        assert coboundary_witness(x - y) is None


def test_bicharacter_counts():
    G = FinAbGroup([4, 2])
    assert len(enumerate_bicharacters(G)) == 32
    assert len(enumerate_alternating_bicharacters(G)) == 2


def test_subgroup_basis():
    G = FinAbGroup([4, 2])
    assert len(subgroup_basis(G, [(2, 1)])) == 1
    basis = subgroup_basis(G, [(1, 0), (0, 1)])
    assert sorted(G.element_order(b) for b in basis) == [2, 4]


def test_solve_mod():
    A = np.array([[2, 0], [0, 3]])
    x = solve_mod(A, np.array([4, 3]), 6)
    assert x is not None
    assert ((A @ x - np.array([4, 3])) % 6 == 0).all()
    assert solve_mod(np.array([[2]]), np.array([1]), 4) is None
