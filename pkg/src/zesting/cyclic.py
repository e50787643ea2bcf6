"""Closed-form Z/N zestings for a cyclic group of invertible objects.

Let C = <g> be a cyclic group of N invertible objects whose monodromy
chi_g grades the category by Z/N, with chi_g(X) = q^{deg X}.  Fix zeta with
zeta^2 = q.  Let m = |Z_2(C)| and h = g^{N/m} the generator of Z_2(C), and
put eps(a) = 1 when Theta_{h^a} = -1, else 0.

* associative zestings are indexed by (a, b) in Z/m x Z/N::

      lambda2(i,j) = h^a        if i + j >= N, else 1
      lambda3(i,j,k) = zeta^{k(eps + 2b)} if i + j >= N, else 1

* (a, b) is braided iff a N/m = eps + 2b mod N; then t_s(i,j) = s^{-ij} for
  each s with s^N = zeta^{-(eps + 2b)}, and j is trivial;
* ribbon structures are f(i) = s^{-i^2}, and (-1)^i f(i) when N is even;
* S~ = s^{2ij} S (times (-1)^{i-j} on the second branch) and T~ = f(i) T.

Representatives 0 <= i < N are used throughout.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .category import (CategoryData, InsufficientData, PointedForm, central_charge, chi_turns,
                       classify_pointed, is_modular)
from .cohomology import Cochain, FinAbGroup
from .cyclotomic import CycNum, root_of_unity
from .engine import (AssocZesting, BraidedZesting, RibbonZesting, ZestingError, zested_category,
                     zested_mueger_center)

__all__ = [
    "CyclicContext",
    "CyclicRow",
    "enumerate_assoc",
    "braided_admissible",
    "s_values",
    "enumerate_braided",
    "enumerate_ribbon",
    "cyclic_modular_data",
    "fermionic_z2_zestings",
    "summary",
]


def _rou(t: Fraction) -> CycNum:
    t = Fraction(t) % 1
    return root_of_unity(t.denominator, t.numerator)


def _principal_half(t: Fraction) -> Fraction:
    """Half of the principal argument of exp(2 pi i t), in turns."""
    t = Fraction(t) % 1
    if t > Fraction(1, 2):
        t -= 1
    return (t / 2) % 1


def _default_q(base: CategoryData, turns: list, N: int) -> Fraction:
    """chi_g on the degree-one component of the base grading, else the smallest primitive value."""
    if base.grading is not None:
        U = base.grading.group
        one = tuple(1 if k == 0 else 0 for k in range(U.rank))
        comp = base.grading.component(one)
        if comp and turns[comp[0]].denominator == N:
            return turns[comp[0]]
    vals = sorted({t for t in turns if t.denominator == N})
    if not vals:
        raise ZestingError("chi_g does not take a primitive N-th root of unity on any label")
    return vals[0]


@dataclass
class CyclicContext:
    """Data of a cyclic subgroup C = <g> used for closed-form zesting.

    Build with :meth:`build`; ``q`` and the degrees come from chi_g, never
    from independent input.
    """

    base: CategoryData
    g: int
    N: int
    q: Fraction
    zeta: Fraction
    powers: tuple          # labels of g^0 .. g^{N-1}
    form: PointedForm
    m: int
    h_exp: int             # h = g^{h_exp}
    degrees: tuple         # Z/N degree of each label
    projection: tuple      # Z/N degree of each element of the base grading group, or None
    notes: dict = field(default_factory=dict)

    @classmethod
    def build(cls, base: CategoryData, generator="g", q: Optional[CycNum] = None,
              zeta: Optional[CycNum] = None) -> "CyclicContext":
        base.require("invertibles", "twists", "dims")
        g = base.index(generator)
        if not base.is_invertible(g):
            raise ZestingError(f"{base.label(g)} is not invertible")
        powers = [0]
        while True:
            nxt = base.tensor_invertible(g, powers[-1])
            if nxt == 0:
                break
            powers.append(nxt)
        N = len(powers)
        turns = [chi_turns(base, g, x) for x in range(base.rank)]
        if q is None:
            qt = _default_q(base, turns, N)
        else:
            qt = q.turns()
        if qt.denominator != N:
            raise ZestingError(f"q must be a primitive {N}-th root of unity")
        degs = []
        for t in turns:
            k = next((k for k in range(N) if (k * qt - t) % 1 == 0), None)
            if k is None:
                raise ZestingError("chi_g is not a power of q on every label")
            degs.append(k)
        zt = _principal_half(qt) if zeta is None else zeta.turns()
        if (2 * zt - qt) % 1:
            raise ZestingError("zeta^2 must equal q")
        form = PointedForm(FinAbGroup.cyclic(N), {(k,): base.twists[x] * base.dims[x] for k, x in enumerate(powers)})
        cls_ = classify_pointed(form)
        proj = None
        if base.grading is not None:
            U = base.grading.group
            proj_map = {}
            for x in range(base.rank):
                u = U.elem(base.grading.degrees[x])
                if proj_map.setdefault(u, degs[x]) != degs[x]:
                    raise ZestingError("chi_g is not constant on components of the base grading")
            if len(proj_map) == U.order:
                proj = tuple((proj_map[u],) for u in U.elements)
        if proj is None:
            raise InsufficientData("the base grading must refine the chi_g grading")
        ctx = cls(base, g, N, qt, zt, tuple(powers), form, cls_.m, cls_.h[0], tuple(degs), proj)
        if degs[ctx.h_power(1)] != 0:
            raise ZestingError("h must lie in the trivially graded component")
        return ctx

    @property
    def A(self) -> FinAbGroup:
        return FinAbGroup.cyclic(self.N)

    def h_power(self, a: int) -> int:
        return self.powers[(a * self.h_exp) % self.N]

    def eps(self, a: int) -> int:
        th = self.form((a * self.h_exp % self.N,))
        return 1 if th == -1 else 0

    @property
    def projection_arg(self):
        """Projection in the form accepted by AssocZesting (None when U = A)."""
        U = self.base.grading.group
        if U.cyclic_orders == (self.N,) and all(p == u for p, u in zip(self.projection, U.elements)):
            return None
        return list(self.projection)


# -- enumeration -------------------------------------------------------------------------

def _lambda3(ctx: CyclicContext, a: int, b: int) -> Cochain:
    N = ctx.N
    e = ctx.eps(a) + 2 * b
    return Cochain.from_turns(ctx.A, 3, lambda i, j, k: k[0] * e * ctx.zeta if i[0] + j[0] >= N else 0)


def _assoc(ctx: CyclicContext, a: int, b: int) -> AssocZesting:
    N = ctx.N
    lab = ctx.h_power(a)
    az = AssocZesting.from_labels(ctx.base, ctx.A, lambda i, j: lab if i[0] + j[0] >= N else 0,
                                  _lambda3(ctx, a, b), ctx.projection_arg)
    az.params = {"a": a, "b": b}
    return az


def enumerate_assoc(ctx: CyclicContext) -> list[tuple[int, int, AssocZesting]]:
    """All (a, b) in Z/m x Z/N with their associative zestings."""
    return [(a, b, _assoc(ctx, a, b)) for a in range(ctx.m) for b in range(ctx.N)]


def braided_admissible(ctx: CyclicContext, a: int, b: int) -> bool:
    """a N/m = eps(a) + 2b mod N."""
    return (a * (ctx.N // ctx.m) - ctx.eps(a) - 2 * b) % ctx.N == 0


def s_values(ctx: CyclicContext, a: int, b: int) -> list[Fraction]:
    """All s (in turns) with s^N = zeta^{-(eps + 2b)}, ordered by exponent."""
    base_t = -ctx.zeta * (ctx.eps(a) + 2 * b)
    return sorted(((base_t + k) / ctx.N) % 1 for k in range(ctx.N))


def enumerate_braided(ctx: CyclicContext, a: int, b: int) -> list[BraidedZesting]:
    """t_s(i,j) = s^{-ij} for each admissible s, j trivial."""
    if not braided_admissible(ctx, a, b):
        raise ZestingError(f"(a, b) = ({a}, {b}) is not braided admissible")
    az = _assoc(ctx, a, b)
    out = []
    for s in s_values(ctx, a, b):
        t = Cochain.from_turns(ctx.A, 2, lambda i, j, s=s: -s * i[0] * j[0])
        bz = BraidedZesting(az, t)
        bz.params = {"a": a, "b": b, "s": s}
        out.append(bz)
    return out


def enumerate_ribbon(ctx: CyclicContext, bz: BraidedZesting) -> list[RibbonZesting]:
    """f(i) = s^{-i^2}, plus (-1)^i s^{-i^2} when N is even."""
    a, s = bz.params["a"], bz.params["s"]
    h = ctx.h_power(a)
    if ctx.base.twists[h] != ctx.form((a * ctx.h_exp % ctx.N,)):
        raise ZestingError("ribbon formula needs theta = Theta on h^a")
    out = []
    for branch in ((0, 1) if ctx.N % 2 == 0 else (0,)):
        f = Cochain.from_turns(ctx.A, 1, lambda i, branch=branch: -s * i[0] ** 2 + Fraction(branch * i[0], 2))
        rz = RibbonZesting(bz, f)
        rz.params = dict(bz.params, branch=branch)
        out.append(rz)
    return out


def cyclic_modular_data(ctx: CyclicContext, rz: RibbonZesting) -> tuple[list[list[CycNum]], list[CycNum]]:
    """Block-rescaled (S, T): s^{2ij} S and f(i) T, with (-1)^{i-j} on the second branch."""
    base = ctx.base
    base.require("smatrix")
    s, branch = rz.params["s"], rz.params["branch"]
    deg = ctx.degrees
    r = base.rank
    S = [[base.smatrix[x][y] * _rou(2 * s * deg[x] * deg[y] + Fraction(branch * (deg[x] - deg[y]), 2))
          for y in range(r)] for x in range(r)]
    T = [base.twists[x] * _rou(-s * deg[x] ** 2 + Fraction(branch * deg[x], 2)) for x in range(r)]
    return S, T


def fermionic_z2_zestings(base: CategoryData, fermion) -> list[RibbonZesting]:
    """The eight Z/2 zestings attached to a fermion: one ribbon f = s^{-i^2} per s."""
    f0 = base.index(fermion)
    if not base.is_invertible(f0) or base.tensor_invertible(f0, f0) != 0 or f0 == 0:
        raise ZestingError("fermion must be a nontrivial invertible with f x f = 1")
    if base.twists[f0] * base.dims[f0] != -1:
        raise ZestingError("fermion must have Theta = -1")
    if all(chi_turns(base, f0, x) == 0 for x in range(base.rank)):
        raise ZestingError("chi of the fermion must be nontrivial")
    ctx = CyclicContext.build(base, f0)
    out = []
    for a in range(ctx.m):
        for b in range(ctx.N):
            if braided_admissible(ctx, a, b):
                for bz in enumerate_braided(ctx, a, b):
                    out.append(enumerate_ribbon(ctx, bz)[0])
    return out


# -- summary table -------------------------------------------------------------------------

@dataclass
class CyclicRow:
    a: int
    b: int
    admissible: bool
    s: Optional[Fraction] = None
    branch: Optional[int] = None
    modular: Optional[bool] = None
    central_charge: Optional[CycNum] = None
    t_spectrum: Optional[str] = None
    members: int = 0
    ribbon: Optional[RibbonZesting] = None

    def to_json(self) -> dict:
        return {
            "a": self.a, "b": self.b, "admissible": self.admissible,
            "s": None if self.s is None else _turn_str(self.s),
            "f_branch": self.branch,
            "modular": self.modular,
            "central_charge": None if self.central_charge is None else str(self.central_charge),
            "t_spectrum": self.t_spectrum,
            "members": self.members,
        }


def _turn_str(t: Fraction) -> str:
    t = Fraction(t) % 1
    return "1" if t == 0 else f"zeta({t.denominator})^{t.numerator}"


def _spectrum_hash(twists) -> str:
    key = ",".join(sorted(str(t) for t in twists))
    return hashlib.sha256(key.encode()).hexdigest()[:12]


def summary(ctx: CyclicContext, expand: bool = False) -> list[CyclicRow]:
    """Summary table of the closed-form enumeration.

    By default there is one row per (a, b).  An admissible row aggregates its
    ribbon zestings: ``members`` counts them, ``modular`` is the conjunction,
    ``central_charge`` is kept only when all members agree and ``t_spectrum``
    lists the distinct spectrum hashes joined by ``|``.  With ``expand=True``
    every (a, b, s, f-branch) tuple gets its own row.
    """
    rows = []
    for a, b, _ in enumerate_assoc(ctx):
        if not braided_admissible(ctx, a, b):
            rows.append(CyclicRow(a, b, False))
            continue
        group = []
        for bz in enumerate_braided(ctx, a, b):
            for rz in enumerate_ribbon(ctx, bz):
                zc = zested_category(rz)
                try:
                    modular = zested_mueger_center(rz).modular
                except ZestingError:
                    modular = is_modular(zc) if zc.has("smatrix") else None
                try:
                    cc = central_charge(zc)
                except (ZeroDivisionError, ValueError):
                    cc = None
                group.append(CyclicRow(a, b, True, rz.params["s"], rz.params["branch"], modular, cc,
                                       _spectrum_hash(zc.twists), 1, rz))
        if expand or not group:
            rows.extend(group)
            continue
        first = group[0]
        mods = [r.modular for r in group]
        ccs = {str(r.central_charge) for r in group}
        rows.append(CyclicRow(
            a, b, True, first.s, first.branch,
            None if None in mods else all(mods),
            first.central_charge if len(ccs) == 1 else None,
            "|".join(sorted({r.t_spectrum for r in group})),
            len(group), first.ribbon,
        ))
    return rows
