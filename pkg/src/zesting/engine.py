"""Zesting of braided fusion categories at the level of scalars.

All zesting data lives on invertible objects, so each structure map is a
scalar multiple of an identity.  An associative zesting is a symmetric
2-cocycle ``lambda2`` on the grading group A with values in the invertible
objects of the trivial component, plus a scalar 3-cochain ``lambda3``.  A
braided zesting adds the scalar 2-cochain ``t`` and a map ``j`` from A to
characters of the universal grading group U.  A ribbon zesting adds ``f``.

Scalars are handled as exact fractions of a turn: the value exp(2 pi i x)
is stored as the Fraction x modulo 1.

Braided equations checked by :func:`check_braided`, for all a, b, c in A::

    j_a(lambda(b,c)) lambda(a,b,c) t(a,b+c) lambda(b,c,a)
        = t(a,b) lambda(b,a,c) t(a,c)
    omega(a,b;c) lambda(a,b,c)^-1 t(a+b,c) lambda(c,a,b)^-1
        = t(b,c) lambda(a,c,b)^-1 t(a,c)

with omega(a,b;c) = chi_{lambda(a,b)}(c) j_{a+b}(c) / (j_a(c) j_b(c)).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from .category import (CategoryData, Grading, InsufficientData, Invertibles, Report, chi_turns,
                       is_modular, mueger_center, twist_turns)
from .cohomology import (Character, Cochain, CoeffModule, FinAbGroup, coboundary_witness,
                         cup_with_pairing, differential, enumerate_alternating_bicharacters,
                         enumerate_bicharacters, enumerate_characters, h3_representatives,
                         is_cocycle, subgroup_basis)
from .cyclotomic import CycNum, cyc, root_of_unity

__all__ = [
    "ZestingError",
    "ObstructionError",
    "UnsupportedError",
    "AssocZesting",
    "BraidedZesting",
    "RibbonZesting",
    "MuegerResult",
    "o4",
    "check_associative",
    "associative_report",
    "associative_zestings",
    "assoc_torsor",
    "partial_obstructions",
    "o1",
    "enumerate_j",
    "solve_braided",
    "check_braided",
    "braided_report",
    "solve_ribbon",
    "check_twist",
    "check_ribbon",
    "zested_fusion",
    "zested_fusion_tensor",
    "zested_dual",
    "zested_modular_data",
    "zested_dimension",
    "zested_category",
    "is_trivial",
    "zested_mueger_center",
    "braid_scalar",
    "braided_equivalence_classes",
    "zesting_to_json",
    "zesting_from_json",
]

Elem = tuple


class ZestingError(ValueError):
    """Inconsistent zesting input."""


class ObstructionError(ZestingError):
    """No zesting of the requested kind exists for the given data."""


class UnsupportedError(ZestingError):
    """The scalar formulas do not cover this input."""


def _rou(t: Fraction) -> CycNum:
    t = Fraction(t) % 1
    return root_of_unity(t.denominator, t.numerator)


def _turns_str(t: Fraction) -> str:
    t = Fraction(t) % 1
    if t == 0:
        return "1"
    if t == Fraction(1, 2):
        return "-1"
    return f"zeta({t.denominator})^{t.numerator}"


def _str_turns(s: str) -> Fraction:
    return cyc(s).turns()


# -- associative zestings --------------------------------------------------------------

def _projection_table(base: CategoryData, A: FinAbGroup, projection) -> tuple:
    U = base.grading.group
    if projection is None:
        if U.cyclic_orders != A.cyclic_orders:
            raise ZestingError("a projection U -> A is required when A differs from the grading group")
        return tuple(U.elements)
    if callable(projection):
        table = tuple(A.elem(projection(u)) for u in U.elements)
    else:
        projection = list(projection)
        if len(projection) != U.order:
            raise ZestingError(f"projection needs {U.order} entries, got {len(projection)}")
        table = tuple(A.elem(x) for x in projection)
    for u, v in itertools.product(U.elements, repeat=2):
        if table[U.index(U.add(u, v))] != A.add(table[U.index(u)], table[U.index(v)]):
            raise ZestingError("projection is not a group homomorphism")
    if len(set(table)) != A.order:
        raise ZestingError("projection is not onto A")
    return table


class AssocZesting:
    """An associative A-zesting of ``base``.

    Parameters
    ----------
    base : CategoryData
        Needs a grading (by the universal grading group U) and invertibles.
    A : FinAbGroup
        The zesting grading group, a quotient of U.
    lambda2 : Cochain
        Symmetric normalized 2-cocycle A x A -> C, where C is the group of
        invertible objects (``base.invertibles.group``).
    lambda3 : Cochain
        Normalized 3-cochain with roots-of-unity values.
    projection : optional
        The map U -> A, as a callable or a list indexed by U elements.
        Defaults to the identity when A equals U.
    """

    def __init__(self, base: CategoryData, A: FinAbGroup, lambda2: Cochain, lambda3: Cochain,
                 projection=None):
        base.require("grading", "invertibles", "twists", "dims")
        self.base = base
        self.A = A
        self.pi = _projection_table(base, A, projection)
        C = base.invertibles.group
        if lambda2.arity != 2 or lambda2.group != A or lambda2.module != CoeffModule.finite_abelian(C):
            raise ZestingError("lambda2 must be a 2-cochain on A with values in the invertibles group")
        if lambda3.arity != 3 or lambda3.group != A or lambda3.module.kind != "roots_of_unity":
            raise ZestingError("lambda3 must be a scalar 3-cochain on A")
        for a, b in itertools.product(A.elements, repeat=2):
            if lambda2(a, b) != lambda2(b, a):
                raise ZestingError(f"lambda2 is not symmetric at {a}, {b}")
        if not lambda2.is_normalized() or not lambda3.is_normalized():
            raise ZestingError("lambda2 and lambda3 must be normalized")
        self.lambda2 = lambda2
        self.lambda3 = lambda3.simplify()
        U = base.grading.group
        self._udeg = [U.elem(d) for d in base.grading.degrees]
        self._adeg = [self.pi[U.index(d)] for d in self._udeg]
        self.params: dict = {}

    @classmethod
    def from_labels(cls, base: CategoryData, A: FinAbGroup, fn: Callable, lambda3: Optional[Cochain] = None,
                    projection=None) -> "AssocZesting":
        """Build lambda2 from ``fn(a, b) -> label`` of an invertible object."""
        C = base.invertibles.group
        lam2 = Cochain.from_function(A, CoeffModule.finite_abelian(C), 2,
                                     lambda a, b: base.invertibles.element_of(base.index(fn(a, b))))
        if lambda3 is None:
            lambda3 = Cochain.identity(A, CoeffModule.roots_of_unity(1), 3)
        return cls(base, A, lam2, lambda3, projection)

    @classmethod
    def trivial(cls, base: CategoryData, A: Optional[FinAbGroup] = None, projection=None) -> "AssocZesting":
        A = A or base.grading.group
        C = base.invertibles.group
        return cls(base, A, Cochain.identity(A, CoeffModule.finite_abelian(C), 2),
                   Cochain.identity(A, CoeffModule.roots_of_unity(1), 3), projection)

    # -- degrees and values -------------------------------------------------------------
    def degree(self, x) -> Elem:
        """A-degree of a label."""
        return self._adeg[self.base.index(x)]

    def udegree(self, x) -> Elem:
        return self._udeg[self.base.index(x)]

    def component(self, a) -> list[int]:
        a = self.A.elem(a)
        return [x for x in range(self.base.rank) if self._adeg[x] == a]

    def section(self, a) -> Elem:
        """Some u in U with pi(u) = a."""
        return self.base.grading.group.elements[self.pi.index(self.A.elem(a))]

    def kernel(self) -> list[Elem]:
        U = self.base.grading.group
        return [u for u, v in zip(U.elements, self.pi) if v == self.A.zero]

    def lam(self, a, b) -> int:
        """Label of lambda2(a, b)."""
        return self.base.invertibles.label_of(self.lambda2(self.A.elem(a), self.A.elem(b)))

    def is_universal(self) -> bool:
        return self.pi == tuple(self.base.grading.group.elements) and self.A == self.base.grading.group

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, AssocZesting) and self.base is other.base and self.A == other.A
                and self.pi == other.pi and self.lambda2 == other.lambda2 and self.lambda3 == other.lambda3)

    def __repr__(self) -> str:
        return f"AssocZesting({self.base.name or 'base'}, A={self.A!r})"


# -- characters of the universal grading ------------------------------------------------

def _component_rep(base: CategoryData, u) -> int:
    key = ("rep", tuple(u))
    if key not in base._cache:
        comp = base.grading.component(u)
        if not comp:
            raise ZestingError(f"grading has an empty component at {u}")
        base._cache[key] = comp[0]
    return base._cache[key]


def _chi_character(base: CategoryData, c: int) -> Character:
    """chi_c as a character of the grading group U (c an invertible label)."""
    key = ("chi_char", c)
    if key not in base._cache:
        U = base.grading.group
        exps = []
        for i, n in enumerate(U.cyclic_orders):
            e = tuple(1 if k == i else 0 for k in range(U.rank))
            v = chi_turns(base, c, _component_rep(base, e)) * n
            if v.denominator != 1:
                raise ZestingError(f"chi of label {base.label(c)} is not a character of the grading group")
            exps.append(int(v))
        base._cache[key] = Character(U, tuple(exps))
    return base._cache[key]


def _j_turns(j, A: FinAbGroup, a, u) -> Fraction:
    if j is None:
        return Fraction(0)
    return j[A.index(a)].turns(u)


def _omega_character(az: AssocZesting, j, a, b) -> Character:
    A = az.A
    chi = _chi_character(az.base, az.lam(a, b))
    if j is None:
        return chi
    return chi * j[A.index(A.add(a, b))] / (j[A.index(a)] * j[A.index(b)])


# -- O4 and associativity -----------------------------------------------------------------

def _symmetric_signs(base: CategoryData, values: Iterable[tuple]) -> dict:
    """nu: S -> {0, 1} on the subgroup S generated by ``values`` if it is symmetric."""
    inv = base.invertibles
    C = inv.group
    gens = [C.elem(v) for v in values]
    sub = {C.zero}
    frontier = {C.zero}
    while frontier:
        frontier = {C.add(x, g) for x in frontier for g in gens} - sub
        sub |= frontier
    form = base.pointed_form()
    nu = {}
    for s in sub:
        t = form(s).turns() if form(s).as_root_of_unity() else None
        if t not in (Fraction(0), Fraction(1, 2)):
            raise UnsupportedError("lambda2 values do not generate a symmetric pointed subcategory "
                                   "(needs morphism-level data)")
        nu[s] = int(t * 2)
    for s, s2 in itertools.product(sub, repeat=2):
        if form.bicharacter(s, s2) != 1:
            raise UnsupportedError("lambda2 values do not generate a symmetric pointed subcategory "
                                   "(needs morphism-level data)")
    return nu


def o4(base: CategoryData, A: FinAbGroup, lambda2: Cochain) -> Cochain:
    """The associativity obstruction (-1)^{nu(lambda2(a1,a2)) nu(lambda2(a3,a4))}."""
    base.require("invertibles", "twists", "dims")
    nu = _symmetric_signs(base, lambda2.values())
    return cup_with_pairing(lambda2, lambda x, y: nu[x] * nu[y])


def associative_report(az: AssocZesting) -> Report:
    rep = Report(f"associative zesting of {az.base.name or 'base'} by {az.A!r}")
    rep.add("lambda2 is a 2-cocycle", is_cocycle(az.lambda2))
    bad = [(a, b) for a, b in itertools.product(az.A.elements, repeat=2)
           if az.degree(az.lam(a, b)) != az.A.zero]
    rep.add("lambda2 values are trivially graded", not bad, offenders=bad)
    obs = o4(az.base, az.A, az.lambda2)
    diff = differential(az.lambda3) - obs
    offenders = [idx for idx in itertools.product(az.A.elements, repeat=4) if diff(*idx) != 0]
    rep.add("delta lambda3 equals O4", not offenders, offenders=offenders)
    return rep


def check_associative(az: AssocZesting) -> bool:
    """True iff lambda2 is a graded cocycle and delta(lambda3) = O4 pointwise."""
    return associative_report(az).ok


def associative_zestings(base: CategoryData, A: FinAbGroup, lambda2: Union[Cochain, Callable],
                         projection=None) -> list[AssocZesting]:
    """All associative zestings with the given lambda2, one per class of H^3(A, C^x).

    ``lambda2`` may be a Cochain or a function (a, b) -> label.
    """
    if callable(lambda2) and not isinstance(lambda2, Cochain):
        az0 = AssocZesting.from_labels(base, A, lambda2, projection=projection)
    else:
        az0 = AssocZesting(base, A, lambda2, Cochain.identity(A, CoeffModule.roots_of_unity(1), 3), projection)
    obs = o4(base, A, az0.lambda2)
    lam3 = coboundary_witness(obs)
    if lam3 is None:
        raise ObstructionError("O4 does not vanish: no associative zesting for this lambda2")
    az = AssocZesting(base, A, az0.lambda2, lam3, projection)
    return assoc_torsor(az)


def assoc_torsor(az: AssocZesting) -> list[AssocZesting]:
    """lambda3 shifted by one representative of each class in H^3(A, C^x)."""
    out = []
    for rep in h3_representatives(az.A):
        new = AssocZesting(az.base, az.A, az.lambda2, (az.lambda3 + rep).simplify(), az.pi)
        out.append(new)
    return out


# -- partial obstructions --------------------------------------------------------------------

def partial_obstructions(base: CategoryData, A: FinAbGroup, lambda2: Union[Cochain, Callable],
                         projection=None) -> Report:
    """Restriction obstructions to braided zesting.

    First: chi_{lambda2(a,b)} must be trivial on the adjoint part (U-degree 0).
    Second: the 2-cocycle (a, b) -> chi_{lambda2(a,b)} restricted to ker(U -> A)
    must be a coboundary in Z^2(A, dual of the kernel).
    """
    if callable(lambda2) and not isinstance(lambda2, Cochain):
        az = AssocZesting.from_labels(base, A, lambda2, projection=projection)
    else:
        az = AssocZesting(base, A, lambda2, Cochain.identity(A, CoeffModule.roots_of_unity(1), 3), projection)
    U = base.grading.group
    rep = Report("partial obstructions")
    adj = base.grading.component(U.zero)
    bad = []
    for a, b in itertools.product(A.elements, repeat=2):
        c = az.lam(a, b)
        bad.extend((a, b, base.label(x)) for x in adj if chi_turns(base, c, x) != 0)
    rep.add("first partial obstruction vanishes", not bad, offenders=bad)

    basis = subgroup_basis(U, az.kernel())
    if not basis:
        rep.add("second partial obstruction vanishes", True, "kernel of U -> A is trivial")
        return rep
    orders = [U.element_order(k) for k in basis]
    K = FinAbGroup(orders)

    def cls(a, b):
        ch = _chi_character(base, az.lam(a, b))
        return tuple(int(ch.turns(k) * n) for k, n in zip(basis, orders))

    c = Cochain.from_function(A, CoeffModule.finite_abelian(K), 2, cls)
    witness = coboundary_witness(c)
    if witness is None:
        vals = {f"{a},{b}": list(c(a, b)) for a, b in itertools.product(A.elements, repeat=2) if any(c(a, b))}
        rep.add("second partial obstruction vanishes", False,
                f"second partial obstruction nontrivial: class of {vals} in H^2(A, dual of {K!r})")
    else:
        rep.add("second partial obstruction vanishes", True)
    return rep


# -- braided zestings ------------------------------------------------------------------------

class BraidedZesting:
    """Braided zesting: an associative zesting with ``t`` and ``j``.

    ``j`` is None for the trivial choice or a sequence of characters of U
    indexed by the elements of A in lexicographic order.
    """

    def __init__(self, assoc: AssocZesting, t: Cochain, j: Optional[Sequence[Character]] = None):
        A = assoc.A
        if t.arity != 2 or t.group != A or t.module.kind != "roots_of_unity":
            raise ZestingError("t must be a scalar 2-cochain on A")
        if not t.is_normalized():
            raise ZestingError("t must be normalized")
        if j is not None:
            j = tuple(j)
            U = assoc.base.grading.group
            if len(j) != A.order or any(ch.group != U for ch in j):
                raise ZestingError("j needs one character of U per element of A")
            if not j[0].is_trivial():
                raise ZestingError("j at the identity must be trivial")
            if all(ch.is_trivial() for ch in j):
                j = None
        self.assoc = assoc
        self.t = t.simplify()
        self.j = j
        self.params: dict = {}

    base = property(lambda self: self.assoc.base)
    A = property(lambda self: self.assoc.A)

    def j_turns(self, a, x) -> Fraction:
        return _j_turns(self.j, self.A, self.A.elem(a), self.assoc.udegree(x))

    def t2(self, a, b) -> Fraction:
        return self.t.turns(a, b) + self.t.turns(b, a)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, BraidedZesting) and self.assoc == other.assoc and self.t == other.t
                and self.j == other.j)

    def __repr__(self) -> str:
        return f"BraidedZesting({self.base.name or 'base'}, A={self.A!r}, j={'trivial' if self.j is None else 'set'})"


def o1(az: AssocZesting, nu: Optional[Cochain] = None, j=None) -> dict:
    """O1(a|b,c) = j_a(lambda2(b,c)) delta_v(nu^-1)(a|b,c) shuffle(lambda3,1)(a|b,c).

    Returns a dict a -> scalar 2-cocycle on A.  Raises ZestingError when a
    slot fails the cocycle test.
    """
    A = az.A
    lam3 = az.lambda3
    nuf = (lambda a, b: nu.turns(a, b)) if nu is not None else (lambda a, b: Fraction(0))
    out = {}
    for a in A.elements:
        def fn(b, c, a=a):
            dnu = nuf(a, c) - nuf(a, A.add(b, c)) + nuf(a, b)
            return (_j_turns(j, A, a, az.udegree(az.lam(b, c))) - dnu
                    + lam3.turns(a, b, c) - lam3.turns(b, a, c) + lam3.turns(b, c, a))
        slot = Cochain.from_turns(A, 2, fn)
        if not is_cocycle(slot):
            raise ZestingError(f"O1 slot at {a} is not a 2-cocycle; inputs are inconsistent")
        out[a] = slot
    return out


def enumerate_j(az: AssocZesting) -> list[tuple]:
    """All normalized j: A -> U^ with omega(a,b) trivial on ker(U -> A)."""
    U = az.base.grading.group
    A = az.A
    K = az.kernel()
    chars = enumerate_characters(U)
    triv = Character.trivial(U)
    out = []
    for choice in itertools.product(chars, repeat=A.order - 1):
        j = (triv,) + tuple(choice)
        if all(_omega_character(az, j, a, b).turns(k) == 0
               for a, b in itertools.product(A.elements, repeat=2) for k in K):
            out.append(None if all(c.is_trivial() for c in j) else j)
    return out


def _solve_for_j(az: AssocZesting, j) -> tuple[list[BraidedZesting], str]:
    A = az.A
    K = az.kernel()
    for a, b in itertools.product(A.elements, repeat=2):
        om = _omega_character(az, j, a, b)
        if any(om.turns(k) != 0 for k in K):
            return [], f"omega({a},{b}) is not trivial on ker(U -> A): j is not admissible"
    slots = o1(az, None, j)
    h = {}
    for a, slot in slots.items():
        w = coboundary_witness(slot)
        if w is None:
            return [], f"O1 does not trivialize at a = {a}"
        h[a] = w
    nu = Cochain.from_turns(A, 2, lambda a, b: h[a].turns(b))
    lam3 = az.lambda3

    def d_fn(a, b, c):
        om = _omega_character(az, j, a, b).turns(az.section(c))
        o2 = (nu.turns(b, c) - nu.turns(A.add(a, b), c) + nu.turns(a, c)
              + lam3.turns(a, b, c) - lam3.turns(a, c, b) + lam3.turns(c, a, b))
        return (om - o2) % 1

    # D(a,b; -) must be a character of A; record it in coordinates of the dual group
    gens = [tuple(1 if k == i else 0 for k in range(A.rank)) for i in range(A.rank)]

    def d_char(a, b):
        exps = []
        for g, n in zip(gens, A.cyclic_orders):
            v = d_fn(a, b, g) * n
            if v.denominator != 1:
                raise ZestingError("omega / O2 is not a character in the last variable")
            exps.append(int(v))
        ch = Character(A, tuple(exps))
        for c in A.elements:
            if ch.turns(c) != d_fn(a, b, c):
                raise ZestingError("omega / O2 is not a character in the last variable")
        return tuple(ch.exps)

    D = Cochain.from_function(A, CoeffModule.finite_abelian(A), 2, d_char)
    if not is_cocycle(D):
        raise ZestingError("omega / O2 is not a 2-cocycle")
    r = coboundary_witness(D)
    if r is None:
        return [], "the class of O2 differs from that of omega"
    t0 = Cochain.from_turns(A, 2, lambda a, b: nu.turns(a, b) + Character(A, r(a)).turns(b))
    out = []
    for beta in enumerate_bicharacters(A):
        bz = BraidedZesting(az, (t0 + beta).simplify(), j)
        if not check_braided(bz):
            raise ZestingError("internal error: solution fails the braided equations")
        out.append(bz)
    return out, ""


_TRIVIAL = "trivial"


def solve_braided(az: AssocZesting, j=_TRIVIAL) -> list[BraidedZesting]:
    """All braided zestings over ``az`` with the given j.

    ``j="trivial"`` (default) fixes j = 1; a sequence of characters fixes j;
    ``j=None`` searches every admissible j.  Raises ObstructionError when
    nothing exists.
    """
    if isinstance(j, str):
        if j != _TRIVIAL:
            raise ValueError(f"unknown j option {j!r}")
        candidates = [None]
    elif j is None:
        candidates = enumerate_j(az)
        if not candidates:
            raise ObstructionError("no braided zesting for this (lambda, j): no j makes omega trivial "
                                   "on the kernel of U -> A")
    else:
        candidates = [tuple(j)]
    results, reasons = [], []
    for cand in candidates:
        sols, why = _solve_for_j(az, cand)
        results.extend(sols)
        if why:
            reasons.append(why)
    if not results:
        raise ObstructionError("no braided zesting for this (lambda, j): " + "; ".join(sorted(set(reasons))))
    return results


def braided_report(bz: BraidedZesting) -> Report:
    A = bz.A
    az = bz.assoc
    lam3 = az.lambda3
    t = bz.t
    rep = Report("braided zesting")
    rep.add("t normalized", t.is_normalized())
    bad1, bad2 = [], []
    for a, b, c in itertools.product(A.elements, repeat=3):
        lhs = (bz.j_turns(a, az.lam(b, c)) + lam3.turns(a, b, c) + t.turns(a, A.add(b, c))
               + lam3.turns(b, c, a))
        rhs = t.turns(a, b) + lam3.turns(b, a, c) + t.turns(a, c)
        if (lhs - rhs) % 1:
            bad1.append((a, b, c))
        om = _omega_character(az, bz.j, a, b).turns(az.section(c))
        lhs = om - lam3.turns(a, b, c) + t.turns(A.add(a, b), c) - lam3.turns(c, a, b)
        rhs = t.turns(b, c) - lam3.turns(a, c, b) + t.turns(a, c)
        if (lhs - rhs) % 1:
            bad2.append((a, b, c))
    rep.add("first braided equation", not bad1, offenders=bad1)
    rep.add("second braided equation", not bad2, offenders=bad2)
    return rep


def check_braided(bz: BraidedZesting) -> bool:
    """Both scalar braided equations at every triple of A."""
    return braided_report(bz).ok


def braid_scalar(bz: BraidedZesting, x) -> tuple[CycNum, int]:
    """Scalar j_a(X) t(a,a) by which the zested braid generator differs; with its order."""
    a = bz.assoc.degree(x)
    tt = (bz.j_turns(a, x) + bz.t.turns(a, a)) % 1
    return _rou(tt), tt.denominator


def braided_equivalence_classes(zs: Sequence[BraidedZesting]) -> list[list[int]]:
    """Group indices of ``zs`` whose t differ by an alternating bicharacter.

    Only zestings with the same associative part and trivial j are merged.
    """
    if not zs:
        return []
    for z in zs:
        if z.j is not None and z.A.rank > 1:
            raise UnsupportedError("equivalence classes with nontrivial j need a cyclic group")
    alt = {}
    parent = list(range(len(zs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(len(zs)), 2):
        zi, zj = zs[i], zs[j]
        if zi.j is not None or zj.j is not None or zi.assoc != zj.assoc:
            continue
        A = zi.A
        if A not in alt:
            alt[A] = enumerate_alternating_bicharacters(A)
        if any(zi.t - zj.t == b for b in alt[A]):
            parent[find(j)] = find(i)
    groups: dict[int, list[int]] = {}
    for i in range(len(zs)):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


# -- ribbon zestings -------------------------------------------------------------------------

class RibbonZesting:
    """Braided zesting with the twist correction f: A -> roots of unity."""

    def __init__(self, braided: BraidedZesting, f: Cochain):
        if f.arity != 1 or f.group != braided.A or f.module.kind != "roots_of_unity":
            raise ZestingError("f must be a scalar 1-cochain on A")
        if f.turns(braided.A.zero) != 0:
            raise ZestingError("f(0) must be 1")
        self.braided = braided
        self.f = f.simplify()
        self.params: dict = {}

    base = property(lambda self: self.braided.base)
    A = property(lambda self: self.braided.A)
    assoc = property(lambda self: self.braided.assoc)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RibbonZesting) and self.braided == other.braided and self.f == other.f

    def __repr__(self) -> str:
        return f"RibbonZesting({self.base.name or 'base'}, A={self.A!r})"


def _twist_defect(bz: BraidedZesting, a, b, x, y) -> Fraction:
    """chi chi theta / (j j t2) for X in B_a, Y in B_b; should equal f(a) f(b) / f(a+b)."""
    az = bz.assoc
    base = az.base
    c = az.lam(a, b)
    return (chi_turns(base, c, x) + chi_turns(base, c, y) + twist_turns(base, c)
            - bz.j_turns(a, y) - bz.j_turns(b, x) - bz.t2(a, b)) % 1


def _ribbon_defect(bz: BraidedZesting, a, x) -> Fraction:
    """chi_{lambda(a,-a)}(X) theta_{lambda(a,-a)}; should equal f(a) / f(-a)."""
    az = bz.assoc
    c = az.lam(a, az.A.neg(a))
    return (chi_turns(az.base, c, x) + twist_turns(az.base, c)) % 1


def solve_ribbon(bz: BraidedZesting) -> list[RibbonZesting]:
    """All f satisfying the twist and ribbon conditions (possibly empty)."""
    A = bz.A
    az = bz.assoc
    comps = {a: az.component(a) for a in A.elements}
    s = {}
    for a, b in itertools.product(A.elements, repeat=2):
        vals = {_twist_defect(bz, a, b, x, y) for x in comps[a] for y in comps[b]}
        if len(vals) != 1:
            # f(a) f(b) / f(a+b) cannot match a value that varies across the component
            return []
        s[a, b] = vals.pop()
    scoc = Cochain.from_turns(A, 2, lambda a, b: s[a, b])
    if not is_cocycle(scoc):
        raise ZestingError("the twist 2-cochain is not a 2-cocycle")
    f0 = coboundary_witness(scoc)
    if f0 is None:
        return []
    out = []
    for ch in enumerate_characters(A):
        f = Cochain.from_turns(A, 1, lambda a, ch=ch: f0.turns(a) + ch.turns(a))
        rz = RibbonZesting(bz, f)
        if check_ribbon(rz):
            if not check_twist(rz):
                raise ZestingError("internal error: f fails the twist condition")
            out.append(rz)
    return out


def check_twist(rz: RibbonZesting) -> bool:
    """f(a+b) chi chi theta = f(a) f(b) j j t2 for every pair of labels."""
    bz = rz.braided
    A = rz.A
    f = rz.f
    for a, b in itertools.product(A.elements, repeat=2):
        want = (f.turns(a) + f.turns(b) - f.turns(A.add(a, b))) % 1
        for x in rz.assoc.component(a):
            for y in rz.assoc.component(b):
                if _twist_defect(bz, a, b, x, y) != want:
                    return False
    return True


def check_ribbon(rz: RibbonZesting) -> bool:
    """f(a) = f(-a) chi_{lambda(a,-a)}(X_a) theta_{lambda(a,-a)} for every label."""
    A = rz.A
    f = rz.f
    for a in A.elements:
        want = (f.turns(a) - f.turns(A.neg(a))) % 1
        for x in rz.assoc.component(a):
            if _ribbon_defect(rz.braided, a, x) != want:
                return False
    return True


# -- zested data ---------------------------------------------------------------------------

def zested_dual(az: AssocZesting, x) -> int:
    """Dual of X_a in the zested category: X* tensor lambda(a,-a)*."""
    base = az.base
    x = base.index(x)
    a = az.degree(x)
    lam = az.lam(a, az.A.neg(a))
    return base.tensor_invertible(base.dual[lam], base.dual[x])


def zested_fusion(az: AssocZesting, x, y) -> dict[int, int]:
    """X tensor Y tensor lambda(a,b) as a multiset {label: multiplicity}."""
    base = az.base
    x, y = base.index(x), base.index(y)
    lam = az.lam(az.degree(x), az.degree(y))
    out: dict[int, int] = {}
    for z, n in base.tensor(x, y).items():
        zz = base.tensor_invertible(lam, z)
        out[zz] = out.get(zz, 0) + n
    return dict(sorted(out.items()))


def zested_fusion_tensor(az: AssocZesting) -> np.ndarray:
    az.base.require("fusion")
    r = az.base.rank
    N = np.zeros((r, r, r), dtype=np.int64)
    for x in range(r):
        for y in range(r):
            for z, n in zested_fusion(az, x, y).items():
                N[x, y, z] = n
    return N


def _zested_twist(rz: RibbonZesting, x: int) -> CycNum:
    return rz.base.twists[x] * _rou(rz.f.turns(rz.assoc.degree(x)))


def zested_dimension(rz: RibbonZesting, x) -> CycNum:
    """f(a) / (dim lambda(-a,a) t(a,a)) * dim X / j_a(X)."""
    base = rz.base
    az = rz.assoc
    x = base.index(x)
    a = az.degree(x)
    lam = az.lam(az.A.neg(a), a)
    tt = rz.f.turns(a) - rz.braided.t.turns(a, a) - rz.braided.j_turns(a, x)
    return _rou(tt) * base.dims[x] / base.dims[lam]


def _m_turns(bz: BraidedZesting, x: int, w: int) -> Fraction:
    if bz.j is None:
        return Fraction(0)
    az = bz.assoc
    A = bz.A
    a, c = az.degree(x), az.degree(w)
    ac = A.add(a, c)
    return (bz.j_turns(a, w) + bz.j_turns(c, x) - bz.j_turns(ac, x) - bz.j_turns(ac, w)
            - bz.j_turns(ac, az.lam(a, c)))


def zested_modular_data(rz: RibbonZesting) -> tuple[list[list[CycNum]], list[CycNum]]:
    """Zested (S, T) from the base S-matrix, twists and the zesting data."""
    base = rz.base
    base.require("smatrix")
    az = rz.assoc
    bz = rz.braided
    A = rz.A
    t = bz.t
    f = rz.f
    r = base.rank
    T = [_zested_twist(rz, x) for x in range(r)]
    S = []
    for x in range(r):
        a = az.degree(x)
        row = []
        for y in range(r):
            b = az.degree(y)
            nb = A.neg(b)
            amb = A.add(a, nb)
            lam_bb = az.lam(b, nb)
            w = base.tensor_invertible(base.dual[lam_bb], base.dual[y])
            phase = (bz.t2(a, nb) + f.turns(amb) - t.turns(amb, amb) + _m_turns(bz, x, w))
            coef = base.dims[az.lam(amb, A.neg(amb))] * base.dims[az.lam(a, nb)]
            val = _rou(phase) * coef * base.smatrix[x][y] * base.smatrix[x][lam_bb] / base.dims[x]
            row.append(val)
        S.append(row)
    return S, T


def zested_category(rz: RibbonZesting, name: str = "") -> CategoryData:
    """The zested category as a dataset, graded by A."""
    base = rz.base
    az = rz.assoc
    r = base.rank
    dual = [zested_dual(az, x) for x in range(r)]
    dims = [zested_dimension(rz, x) for x in range(r)]
    twists = [_zested_twist(rz, x) for x in range(r)]
    fusion = zested_fusion_tensor(az) if base.has("fusion") else None
    smatrix = zested_modular_data(rz)[0] if base.has("smatrix") else None
    grading = Grading(az.A, tuple(az.degree(x) for x in range(r)))
    inv = None
    # the action g x X is unchanged when lambda2(deg g, -) is the unit
    if all(az.lam(az.degree(c), a) == 0 for c in base.invertibles.labels for a in az.A.elements):
        inv = base.invertibles
    trivial = is_trivial(rz)
    if trivial and az.is_universal():
        grading = base.grading
    provenance = dict(base.provenance or {})
    if not trivial:
        provenance["zested_from"] = base.name
    return CategoryData(base.labels, dual, dims, twists, fusion=fusion, smatrix=smatrix, grading=grading,
                        invertibles=inv, name=name or (base.name if trivial else f"{base.name}^zested"),
                        provenance=provenance, assumptions=base.assumptions)


def is_trivial(z: Union[AssocZesting, BraidedZesting, RibbonZesting]) -> bool:
    """True when every layer present is the identity (unit lambda2, zero scalars, trivial j)."""
    rz = z if isinstance(z, RibbonZesting) else None
    bz = z.braided if rz else (z if isinstance(z, BraidedZesting) else None)
    az = bz.assoc if bz else z
    A = az.A
    if any(az.lam(a, b) != 0 for a in A.elements for b in A.elements):
        return False
    if any(az.lambda3.turns(*idx) != 0 for idx in itertools.product(A.elements, repeat=3)):
        return False
    if bz and (bz.j is not None or any(bz.t.turns(a, b) != 0 for a in A.elements for b in A.elements)):
        return False
    return not rz or all(rz.f.turns(a) == 0 for a in A.elements)


# -- Mueger center ---------------------------------------------------------------------------

@dataclass
class MuegerResult:
    labels: list[int]
    route: str
    modular: bool

    def names(self, base: CategoryData) -> list[str]:
        return [base.label(x) for x in self.labels]


def _base_nondegenerate(base: CategoryData) -> bool:
    if base.has("smatrix"):
        return is_modular(base)
    return "modular" in base.assumptions


def _base_super_modular(base: CategoryData) -> bool:
    if not base.has("smatrix"):
        return "super-modular" in base.assumptions
    center = mueger_center(base)
    return len(center) == 2 and any(base.twists[x] == -1 and base.dims[x] == 1 for x in center)


def zested_mueger_center(z: Union[BraidedZesting, RibbonZesting]) -> MuegerResult:
    """Transparent objects of the zested braided category."""
    bz = z.braided if isinstance(z, RibbonZesting) else z
    az = bz.assoc
    base = az.base
    if bz.j is not None:
        if isinstance(z, RibbonZesting) and base.has("smatrix"):
            return _center_from_s(z)
        raise UnsupportedError("undetermined at skeletal level: j is nontrivial")
    nondeg = _base_nondegenerate(base)
    inv = base.invertibles
    if nondeg and az.is_universal():
        form = base.pointed_form()
        if len(form.radical()) == inv.group.order and all(base.is_invertible(x) == (x in inv.labels)
                                                         for x in range(base.rank)):
            return MuegerResult([0], "base center: pointed part symmetric, universal grading", True)
    pointed = all(base.is_invertible(x) for x in range(base.rank))
    if nondeg or pointed or _base_super_modular(base):
        out = []
        for x in inv.labels:
            a = az.degree(x)
            if all((bz.t2(a, az.degree(y)) - twist_turns(base, x) - twist_turns(base, y)
                    + twist_turns(base, base.tensor_invertible(x, y))) % 1 == 0
                   for y in range(base.rank)):
                out.append(x)
        return MuegerResult(sorted(out), "centralizer of the adjoint part is pointed", out == [0])
    if isinstance(z, RibbonZesting) and base.has("smatrix"):
        return _center_from_s(z)
    raise UnsupportedError("undetermined at skeletal level")


def _center_from_s(rz: RibbonZesting) -> MuegerResult:
    S, _ = zested_modular_data(rz)
    d = [S[x][0] for x in range(len(S))]
    out = [x for x in range(len(S)) if all(S[x][y] == d[x] * d[y] for y in range(len(S)))]
    return MuegerResult(out, "zested S-matrix", out == [0])


# -- documents -----------------------------------------------------------------------------

def zesting_to_json(z: Union[AssocZesting, BraidedZesting, RibbonZesting]) -> dict:
    """Zesting document; scalar tables are flat lists over lexicographic tuples."""
    rz = z if isinstance(z, RibbonZesting) else None
    bz = z.braided if rz else (z if isinstance(z, BraidedZesting) else None)
    az = bz.assoc if bz else z
    base = az.base
    A = az.A
    els = A.elements
    doc = {
        "kind": "ribbon" if rz else ("braided" if bz else "associative"),
        "base": base.name,
        "group": A.to_json(),
        "lambda2": [base.label(az.lam(a, b)) for a in els for b in els],
        "lambda3": [_turns_str(az.lambda3.turns(a, b, c)) for a in els for b in els for c in els],
    }
    if not az.is_universal():
        doc["projection"] = [list(p) for p in az.pi]
    if bz:
        doc["j"] = "trivial" if bz.j is None else [ch.to_json() for ch in bz.j]
        doc["t"] = [_turns_str(bz.t.turns(a, b)) for a in els for b in els]
    if rz:
        doc["f"] = [_turns_str(rz.f.turns(a)) for a in els]
    return doc


def zesting_from_json(doc: dict, base: CategoryData):
    """Inverse of :func:`zesting_to_json`; returns the deepest layer present."""
    A = FinAbGroup.from_json(doc["group"])
    els = A.elements
    n = A.order

    def table(key, arity):
        vals = doc[key]
        if len(vals) != n ** arity:
            raise ValueError(f"{key}: expected {n ** arity} entries, got {len(vals)}")
        vals = [_str_turns(str(v)) for v in vals]
        return Cochain.from_turns(A, arity, lambda *args: vals[_flat(A, args)])

    lam_labels = doc["lambda2"]
    if len(lam_labels) != n * n:
        raise ValueError(f"lambda2: expected {n * n} entries")
    lam3 = table("lambda3", 3)
    proj = doc.get("projection")
    az = AssocZesting.from_labels(base, A, lambda a, b: lam_labels[_flat(A, (a, b))], lam3, proj)
    if "t" not in doc:
        return az
    jdoc = doc.get("j", "trivial")
    j = None
    if jdoc != "trivial":
        U = base.grading.group
        j = [Character(U, tuple(e)) for e in jdoc]
    bz = BraidedZesting(az, table("t", 2), j)
    if "f" not in doc:
        return bz
    return RibbonZesting(bz, table("f", 1))


def _flat(A: FinAbGroup, args) -> int:
    i = 0
    for x in args:
        i = i * A.order + A.index(x)
    return i
