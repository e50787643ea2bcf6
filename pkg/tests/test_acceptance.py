"""Acceptance suite: one pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import itertools
import time
from fractions import Fraction

import numpy as np
import pytest

from zesting.category import balancing_check, central_charge
from zesting.cohomology import (BipartiteCochain, Cochain, CoeffModule, FinAbGroup, coboundary_witness,
                                cyclic_cochain, delta_h, delta_v, differential, enumerate_bicharacters, shuffle)
from zesting.cyclic import (CyclicContext, braided_admissible, cyclic_modular_data, enumerate_assoc,
                            enumerate_braided, enumerate_ribbon, fermionic_z2_zestings)
from zesting.cyclotomic import CycNum, root_of_unity
from zesting.engine import (AssocZesting, BraidedZesting, ObstructionError, associative_zestings,
                            check_associative, check_braided, check_ribbon, check_twist, partial_obstructions,
                            solve_braided, solve_ribbon, zested_category, zested_dimension, zested_fusion,
                            zested_modular_data, zested_mueger_center)
from zesting.gallery import builtin, names, pointed

ZERO = CycNum.from_rational(0)


def z(n, k=1):
    return root_of_unity(n, k)


def _fermion_base():
    return pointed(FinAbGroup.cyclic(4), lambda a: z(8, a[0] ** 2), name="C(Z/4, zeta8^(j^2))")


def _ribbons(ctx):
    """(a, b, ribbon) for every closed-form ribbon zesting of the context."""
    for a, b, _ in enumerate_assoc(ctx):
        if braided_admissible(ctx, a, b):
            for bz in enumerate_braided(ctx, a, b):
                for rz in enumerate_ribbon(ctx, bz):
                    yield a, b, rz


def _is_bicharacter(c: Cochain) -> bool:
    A = c.group
    for x, y, w in itertools.product(A.elements, repeat=3):
        if c.turns(A.add(x, y), w) != (c.turns(x, w) + c.turns(y, w)) % 1:
            return False
        if c.turns(w, A.add(x, y)) != (c.turns(w, x) + c.turns(w, y)) % 1:
            return False
    return True


def _mutations(A: FinAbGroup, L: int):
    """Non-bicharacter 2-cochains: single-entry bumps and a few random tables."""
    rng = np.random.default_rng(11)
    out = []
    nz = [x for x in A.elements if x != A.zero]
    for x, y in itertools.product(nz, repeat=2):
        out.append(Cochain.from_turns(A, 2, lambda u, v, x=x, y=y: Fraction(1, L) if (u, v) == (x, y) else Fraction(0), L))
    for _ in range(3):
        vals = rng.integers(0, L, size=(A.order, A.order))
        vals[0, :] = 0
        vals[:, 0] = 0
        out.append(Cochain.from_turns(A, 2, lambda u, v: Fraction(int(vals[A.index(u), A.index(v)]), L), L))
    return [c for c in out if not _is_bicharacter(c)]


# -- criteria ---------------------------------------------------------------------------------

def criterion_1():
    base = builtin("su3_3").category
    ctx = CyclicContext.build(base)
    bz = next(b for b in enumerate_braided(ctx, 1, 2) if b.params["s"] == Fraction(8, 9))
    rz = enumerate_ribbon(ctx, bz)[0]
    s = Fraction(8, 9)
    f_ok = all(rz.f.turns((i,)) == (-i * i * s) % 1 for i in range(3))
    S, T = zested_modular_data(rz)
    q = z(3, -1)
    one = z(1)
    T_ok = T == [one, one, one, -one, q ** -1, one, q, q, q ** -1, one]
    zeta = z(18)
    Ct = [[2 * zeta ** -3, 2 * zeta ** 3, -2 * one], [2 * zeta ** 3, -2 * one, 2 * zeta ** -3],
          [-2 * one, 2 * zeta ** -3, 2 * zeta ** 3]]
    Dt = [[-2 * one, 2 * zeta ** 3, 2 * zeta ** -3], [2 * zeta ** 3, 2 * zeta ** -3, -2 * one],
          [2 * zeta ** -3, -2 * one, 2 * zeta ** 3]]
    assert zeta ** 3 == -q and zeta ** -3 == -q ** -1

    def block(r, c):
        return [row[c:c + 3] for row in S[r:r + 3]]

    S0 = base.smatrix
    checks = {
        "f = s^-i^2": f_ok,
        "T": T_ok,
        "A and B blocks unchanged": all(S[i][j] == S0[i][j] for i in range(4) for j in range(10))
        and all(S[j][i] == S0[j][i] for i in range(4) for j in range(10)),
        "C~ (X,X)": block(4, 4) == Ct,
        "D~ (X,Z)": block(4, 7) == Dt,
        "D~^T (Z,X)": block(7, 4) == [list(r) for r in zip(*Dt)],
        "C~ (Z,Z)": block(7, 7) == Ct,
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, "all blocks equal" if not bad else f"mismatched: {', '.join(bad)}"


def criterion_2():
    base = builtin("su3_3").category
    ctx = CyclicContext.build(base)
    assoc = enumerate_assoc(ctx)
    admissible = [(a, b) for a, b, _ in assoc if braided_admissible(ctx, a, b)]
    counts = {(a, b): len(enumerate_braided(ctx, a, b)) for a, b in admissible}
    ribbons = {}
    spectra = set()
    for a, b, rz in _ribbons(ctx):
        ribbons[(a, b)] = ribbons.get((a, b), 0) + 1
        spectra.add(tuple(sorted(str(t) for t in zested_modular_data(rz)[1])))
    per_braided = all(len(enumerate_ribbon(ctx, bz)) == 1 for a, b in admissible for bz in enumerate_braided(ctx, a, b))

    def cube_has_unit(fuse, x):
        total = {}
        for y, n in fuse(x, x).items():
            for w, m in fuse(y, x).items():
                total[w] = total.get(w, 0) + n * m
        return total.get(0, 0) > 0

    a1 = [az for a, b, az in assoc if a == 1]
    zested_ok = all(not cube_has_unit(lambda x, y, az=az: zested_fusion(az, x, y), base.index("X1")) for az in a1)
    base_ok = all(cube_has_unit(base.tensor, x) for x in range(base.rank))
    ok = (len(assoc) == 9 and admissible == [(0, 0), (1, 2), (2, 1)] and set(counts.values()) == {3}
          and per_braided and sum(ribbons.values()) == 9 and len(spectra) == 3 and zested_ok and base_ok)
    detail = (f"{len(assoc)} associative, admissible {admissible}, braided {sorted(counts.values())}, "
              f"{sum(ribbons.values())} ribbon, {len(spectra)} spectra, 1 not in X1^3: {zested_ok}, "
              f"1 in X^3 in base: {base_ok}")
    return ok, detail


def criterion_3():
    base = builtin("su3_3").category
    ctx = CyclicContext.build(base)
    n = 0
    for _, _, rz in _ribbons(ctx):
        S, _ = zested_modular_data(rz)
        r = len(S)
        for i in range(r):
            for j in range(r):
                v = sum((S[i][k] * S[j][k].conjugate() for k in range(r)), ZERO)
                if v != (36 if i == j else 0):
                    return False, f"S S* != 36 I at ({i},{j})"
        n += 1
    return n == 9, f"{n} zested S-matrices unitary up to 36"


_SU44_TABLE = {
    (0, 0): z(16, -1), (0, 2): -z(16, -1), (1, 0): -z(4) * z(16), (1, 2): z(4) * z(16),
    (2, 1): -z(4) * z(16, -1), (2, 3): z(4) * z(16, -1), (3, 1): -z(16), (3, 3): z(16),
}


def criterion_4():
    t0 = time.perf_counter()
    base = builtin("su4_4").category
    ctx = CyclicContext.build(base)
    admissible = [(a, b) for a, b, _ in enumerate_assoc(ctx) if braided_admissible(ctx, a, b)]
    bad = []
    for a, b in admissible:
        zs = enumerate_braided(ctx, a, b)
        if len(zs) != 4:
            bad.append((a, b, "s count"))
        for bz in zs:
            # the unique ribbon structure with positive dimensions
            pos = [rz for rz in enumerate_ribbon(ctx, bz)
                   if all(complex(zested_dimension(rz, x)).real > 0 for x in range(base.rank))]
            if len(pos) != 1:
                bad.append((a, b, "positive ribbon"))
                continue
            if central_charge(zested_category(pos[0])) != _SU44_TABLE[(a, b)]:
                bad.append((a, b, str(bz.params["s"])))
    elapsed = time.perf_counter() - t0
    ok = admissible == sorted(_SU44_TABLE) and not bad and elapsed < 5
    return ok, f"{len(admissible)} admissible pairs, mismatches {bad}, {elapsed:.2f}s"


def criterion_5():
    base = builtin("su4_4").category
    A = FinAbGroup.cyclic(2)
    proj = lambda u: (u[0] % 2,)
    lam_g = lambda x, y: "g" if x[0] + y[0] >= 2 else "1"
    rep = partial_obstructions(base, A, lam_g, proj)
    second = rep["second partial obstruction vanishes"]
    no_go = (not second.ok) and "second partial obstruction nontrivial" in second.detail
    rejected = True
    for az in associative_zestings(base, A, lam_g, proj):
        for j in ("trivial", None):
            try:
                solve_braided(az, j=j)
                rejected = False
            except ObstructionError:
                pass
    lam_g2 = lambda x, y: "g2" if x[0] + y[0] >= 2 else "1"
    vanish = partial_obstructions(base, A, lam_g2, proj).ok
    produced = []
    for az in associative_zestings(base, A, lam_g2, proj):
        try:
            produced.extend(solve_braided(az, j=None))
        except ObstructionError:
            pass
    produced_ok = bool(produced) and all(check_braided(bz) for bz in produced)
    ok = no_go and rejected and vanish and produced_ok
    return ok, (f"g: second obstruction nontrivial {no_go}, rejected {rejected}; "
                f"g2: obstructions vanish {vanish}, {len(produced)} braided zestings")


def criterion_6():
    base = builtin("su4_2").category
    ctx = CyclicContext.build(base)
    admissible = [(a, b) for a, b, _ in enumerate_assoc(ctx) if braided_admissible(ctx, a, b)]
    g = base.index("g")
    twist, fusion_ok, center = {}, True, {}
    for b in (1, 3):
        for bz in enumerate_braided(ctx, 1, b):
            if zested_fusion(bz.assoc, g, g) != {0: 1}:
                fusion_ok = False
            for rz in enumerate_ribbon(ctx, bz):
                twist.setdefault(b, set()).add(str(zested_category(rz).twists[g]))
            res = zested_mueger_center(bz)
            center.setdefault(b, set()).add((tuple(res.names(base)), res.modular))
    twist_ok = {frozenset(twist[1]), frozenset(twist[3])} == {frozenset({"1"}), frozenset({"-1"})}
    contains_g = {b: all("g" in names_ and not modular for names_, modular in center[b]) for b in (1, 3)}
    ok = admissible == [(0, 0), (0, 2), (1, 1), (1, 3)] and fusion_ok and twist_ok and all(contains_g.values())
    detail = (f"admissible {admissible}, g x1 g = 1: {fusion_ok}, twist of g by b: "
              f"{ {b: sorted(v) for b, v in twist.items()} }, Mueger centers "
              f"{ {b: sorted(v) for b, v in center.items()} }")
    return ok, detail


def criterion_7():
    rng = np.random.default_rng(2024)
    n = 0
    for orders in [(4, 2), (6,)]:
        G = FinAbGroup(orders)
        M = CoeffModule.roots_of_unity(12)
        for k in range(100):
            arity = k % 4
            f = Cochain(G, M, arity, rng.integers(0, 12, size=(G.order,) * arity + (1,)))
            if not differential(differential(f)).is_identity():
                return False, f"dd != 1 on {orders} arity {arity}"
            n += 1
    for N in range(1, 7):
        M = CoeffModule.roots_of_unity(2 * N * N)
        for nu in range(M.L):
            if differential(cyclic_cochain("beta", N, nu, M)) != cyclic_cochain("gamma", N, N * nu, M):
                return False, f"d beta != gamma at N={N}, nu={nu}"
            d = differential(cyclic_cochain("lambda", N, nu, M, strict=False))
            for i, j, k, m in itertools.product(range(N), repeat=4):
                if d(i, j, k, m) != ((N * nu) % M.L if (i + j >= N and k + m >= N) else 0):
                    return False, f"d lambda wrong at N={N}, nu={nu}"
    G6 = FinAbGroup([6])
    M7 = CoeffModule.roots_of_unity(7)
    for _ in range(5):
        a = Cochain(G6, M7, 3, rng.integers(0, 7, size=(6, 6, 6, 1)))
        for p in (1, 2):
            rhs = BipartiteCochain.zero(G6, M7, p, 4 - p)
            if p >= 2:
                rhs = rhs + delta_h(shuffle(a, p - 1))
            rhs = rhs + delta_v(shuffle(a, p)).scaled((-1) ** p)
            if shuffle(differential(a), p) != rhs:
                return False, f"shuffle identity fails at p={p}"
    G4 = FinAbGroup([4])
    M8 = CoeffModule.roots_of_unity(8)
    seen = set()
    for nu in range(8):
        for bv in itertools.product(range(8), repeat=3):
            f = cyclic_cochain("gamma", 4, nu, M8) + differential(Cochain(G4, M8, 1, np.array([[0], *[[v] for v in bv]])))
            key = f.table.tobytes()
            if key in seen:
                continue
            seen.add(key)
            w = coboundary_witness(f)
            if w is None or differential(w) != f:
                return False, "symmetric 2-cocycle without witness"
    return True, f"{n} random dd checks, beta/lambda for N<=6, shuffle p=1,2, {len(seen)} symmetric cocycles split"


def _gallery_bases():
    out = [(name, builtin(name).category) for name in names()]
    out.append(("fermion", _fermion_base()))
    return out


def _contexts(name, base):
    if name == "fermion":
        return [CyclicContext.build(base, "g"), CyclicContext.build(base, "g2")]
    return [CyclicContext.build(base)]


def criterion_8():
    n_assoc = n_braid = n_rib = n_mut = 0
    for name, base in _gallery_bases():
        for ctx in _contexts(name, base):
            for a, b, az in enumerate_assoc(ctx):
                n_assoc += 1
                if not check_associative(az):
                    return False, f"{name} ({a},{b}) associative"
                if not braided_admissible(ctx, a, b):
                    continue
                for bz in enumerate_braided(ctx, a, b):
                    n_braid += 1
                    if not check_braided(bz):
                        return False, f"{name} ({a},{b}) braided"
                    for rz in enumerate_ribbon(ctx, bz):
                        n_rib += 1
                        if not (check_twist(rz) and check_ribbon(rz)):
                            return False, f"{name} ({a},{b}) ribbon"
                    L = bz.t.module.L
                    for bic in enumerate_bicharacters(bz.A):
                        if not check_braided(BraidedZesting(bz.assoc, bz.t + bic)):
                            return False, f"{name} ({a},{b}) bicharacter shift broke check_braided"
                    for mut in _mutations(bz.A, max(L, bz.A.exponent)):
                        n_mut += 1
                        if check_braided(BraidedZesting(bz.assoc, bz.t + mut)):
                            return False, f"{name} ({a},{b}) mutation passed check_braided"
    return True, f"{n_assoc} associative, {n_braid} braided, {n_rib} ribbon, {n_mut} mutations rejected"


def criterion_9():
    for name, base in _gallery_bases():
        az = AssocZesting.trivial(base)
        bz = BraidedZesting(az, Cochain.identity(az.A, CoeffModule.roots_of_unity(1), 2))
        rz = solve_ribbon(bz)[0]
        if zested_category(rz).to_json() != base.to_json():
            return False, f"trivial zesting changed {name}"
    n = 0
    for name, base in _gallery_bases():
        if not base.has("smatrix", "fusion"):
            continue
        for ctx in _contexts(name, base):
            for _, _, rz in _ribbons(ctx):
                zc = zested_category(rz)
                if balancing_check(zc):
                    return False, f"{name}: balancing fails"
                S, T = zested_modular_data(rz)
                if [S[0][x] for x in range(base.rank)] != [zested_dimension(rz, x) for x in range(base.rank)]:
                    return False, f"{name}: S_1X != dim"
                if cyclic_modular_data(ctx, rz) != (S, T):
                    return False, f"{name}: closed form differs"
                n += 1
    return True, f"trivial zesting exact on {len(_gallery_bases())} bases; {n} zested outputs coherent"


def criterion_10():
    zs = fermionic_z2_zestings(_fermion_base(), "g2")
    s = [rz.params["s"] for rz in zs]
    ok = len(zs) == 8 and all((8 * x) % 1 == 0 for x in s) and all(
        check_braided(rz.braided) and check_twist(rz) and check_ribbon(rz) for rz in zs)
    return ok, f"{len(zs)} ribbon zestings, s in {sorted(str(x) for x in s)} turns"


CRITERIA = {
    1: ("SU(3)_3 zested modular data", criterion_1),
    2: ("SU(3)_3 enumeration", criterion_2),
    3: ("SU(3)_3 modularity preserved", criterion_3),
    4: ("SU(4)_4 central charges", criterion_4),
    5: ("SU(4)_4 Z/2 no-go", criterion_5),
    6: ("SU(4)_2 analysis", criterion_6),
    7: ("cohomology properties", criterion_7),
    8: ("axiom suite and bicharacter torsor", criterion_8),
    9: ("fixed point and coherence", criterion_9),
    10: ("fermion count", criterion_10),
}


def _line(num):
    title, fn = CRITERIA[num]
    ok, detail = fn()
    return ok, f"{'PASS' if ok else 'FAIL'} criterion {num}: {title} | {detail}"


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num, capsys):
    ok, line = _line(num)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    for k in sorted(CRITERIA):
        print(_line(k)[1])
