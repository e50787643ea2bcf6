"""Skeletal data for (pre)modular categories and derived invariants.

A :class:`CategoryData` holds the label set with duals, quantum dimensions,
twists and, when available, fusion rules, the unnormalized S-matrix, a group
grading and the action of the invertible objects by tensoring.  Optional
fields are tracked through ``capabilities`` so that operations can state what
they need and fail early.

The S-matrix convention is S_{X,Y} = Tr(c_{Y*,X} c_{X,Y*}) with S_{X,1} = dim X.
With this orientation the balancing identity reads

    sum_Z N_{X,Y}^Z theta_Z dim Z = theta_X theta_Y S_{X,Y*}.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .cohomology import FinAbGroup
from .cyclotomic import CycNum, cyc, root_of_unity

__all__ = [
    "CategoryData",
    "Grading",
    "Invertibles",
    "PointedForm",
    "PointedClass",
    "Check",
    "Report",
    "InsufficientData",
    "validate",
    "chi_scalar",
    "chi_turns",
    "twist_turns",
    "compute_grading",
    "mueger_center",
    "transparency",
    "central_charge",
    "gauss_sum",
    "global_dimension",
    "verlinde_fusion",
    "verlinde_check",
    "balancing_check",
    "is_modular",
    "classify_pointed",
]

Label = Union[int, str]
ONE = CycNum.from_rational(1)
ZERO = CycNum.from_rational(0)


class InsufficientData(ValueError):
    """Raised when a computation needs a field the dataset does not carry."""


# -- reports ------------------------------------------------------------------

@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    offenders: list = field(default_factory=list)

    def to_json(self) -> dict:
        doc = {"check": self.name, "ok": self.ok}
        if self.detail:
            doc["detail"] = self.detail
        if self.offenders:
            doc["offenders"] = [list(o) if isinstance(o, tuple) else o for o in self.offenders[:20]]
        return doc


@dataclass
class Report:
    subject: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "", offenders: Optional[list] = None) -> Check:
        c = Check(name, bool(ok), detail, list(offenders or []))
        self.checks.append(c)
        return c

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def to_json(self) -> dict:
        return {"subject": self.subject, "ok": self.ok, "checks": [c.to_json() for c in self.checks]}

    def render(self) -> str:
        lines = [f"{self.subject}: {'ok' if self.ok else 'FAILED'}"]
        for c in self.checks:
            mark = "pass" if c.ok else "FAIL"
            extra = f"  ({c.detail})" if c.detail else ""
            lines.append(f"  [{mark}] {c.name}{extra}")
            for o in c.offenders[:5]:
                lines.append(f"         at {o}")
        return "\n".join(lines)


# -- gradings and invertibles ---------------------------------------------------

@dataclass(frozen=True)
class Grading:
    """A faithful grading by a finite abelian group; degrees are group elements."""

    group: FinAbGroup
    degrees: tuple

    def degree(self, x: int) -> tuple:
        return self.degrees[x]

    def component(self, a) -> list[int]:
        a = self.group.elem(a)
        return [i for i, d in enumerate(self.degrees) if d == a]

    def component_sizes(self) -> list[int]:
        return [len(self.component(a)) for a in self.group.elements]


@dataclass(frozen=True)
class Invertibles:
    """The group C of invertible objects, their labels and the tensoring action.

    ``labels[i]`` is the label of the i-th element of ``group`` (lexicographic
    order) and ``action[i, x]`` is the label of that element tensored with x.
    """

    group: FinAbGroup
    labels: tuple[int, ...]
    action: np.ndarray

    @classmethod
    def cyclic(cls, perm: Sequence[int]) -> "Invertibles":
        """Build the cyclic group generated by tensoring with g, given as a label permutation."""
        perm = np.asarray(perm, dtype=np.int64)
        rows = [np.arange(len(perm))]
        while True:
            nxt = perm[rows[-1]]
            if np.array_equal(nxt, rows[0]):
                break
            rows.append(nxt)
        action = np.array(rows)
        return cls(FinAbGroup.cyclic(len(rows)), tuple(int(r[0]) for r in rows), action)

    def label_of(self, c) -> int:
        return self.labels[self.group.index(c)]

    def element_of(self, x: int):
        try:
            return self.group.elements[self.labels.index(x)]
        except ValueError:
            raise KeyError(f"label {x} is not invertible") from None

    def act(self, c, x: int) -> int:
        return int(self.action[self.group.index(c), x])


# -- the main container ------------------------------------------------------------

class CategoryData:
    """Skeletal data of a fusion category with ribbon structure.

    Parameters
    ----------
    labels : list of str
        Label names; label 0 is the unit object.
    dual : list of int
        Index of the dual of each label.
    dims, twists : list of CycNum
        Quantum dimensions and twists.
    fusion : array of shape (r, r, r), optional
        ``fusion[x, y, z]`` is N_{X,Y}^Z.
    smatrix : list of lists of CycNum, optional
        Unnormalized S-matrix with S_{X,1} = dim X.
    grading : Grading, optional
    invertibles : Invertibles, optional
    assumptions : iterable of str
        Declared facts not derivable from the stored fields (e.g. "modular").
    """

    def __init__(self, labels: Sequence[str], dual: Sequence[int], dims: Sequence, twists: Sequence,
                 fusion=None, smatrix=None, grading: Optional[Grading] = None,
                 invertibles: Optional[Invertibles] = None, name: str = "",
                 provenance: Optional[dict] = None, assumptions: Iterable[str] = ()):
        self.labels = [str(x) for x in labels]
        r = len(self.labels)
        self.dual = [int(d) for d in dual]
        self.dims = [cyc(d) for d in dims]
        self.twists = [cyc(t) for t in twists]
        if not (len(self.dual) == len(self.dims) == len(self.twists) == r):
            raise ValueError("labels, dual, dims and twists must have equal length")
        self.fusion = None if fusion is None else np.asarray(fusion, dtype=np.int64)
        if self.fusion is not None and self.fusion.shape != (r, r, r):
            raise ValueError(f"fusion must have shape {(r, r, r)}")
        self.smatrix = None if smatrix is None else [[cyc(v) for v in row] for row in smatrix]
        if self.smatrix is not None and (len(self.smatrix) != r or any(len(row) != r for row in self.smatrix)):
            raise ValueError("smatrix must be square of size rank")
        self.grading = grading
        self.invertibles = invertibles
        self.name = name
        self.provenance = dict(provenance or {})
        self.assumptions = tuple(sorted(set(assumptions)))
        self._index = {x: i for i, x in enumerate(self.labels)}
        self._cache: dict = {}

    # -- basic access ------------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def capabilities(self) -> tuple[str, ...]:
        caps = ["labels", "dual", "dims", "twists"]
        if self.fusion is not None:
            caps.append("fusion")
        if self.smatrix is not None:
            caps.append("smatrix")
        if self.grading is not None:
            caps.append("grading")
        if self.invertibles is not None:
            caps.append("invertibles")
        return tuple(caps)

    def has(self, *caps: str) -> bool:
        return all(c in self.capabilities for c in caps)

    def require(self, *caps: str) -> None:
        missing = [c for c in caps if c not in self.capabilities]
        if missing:
            raise InsufficientData(f"{self.name or 'category'} lacks {', '.join(missing)}")

    def index(self, x: Label) -> int:
        if isinstance(x, (int, np.integer)):
            if not 0 <= x < self.rank:
                raise IndexError(f"label index {x} out of range")
            return int(x)
        try:
            return self._index[x]
        except KeyError:
            raise KeyError(f"unknown label {x!r}") from None

    def label(self, x: int) -> str:
        return self.labels[x]

    def S(self, x: Label, y: Label) -> CycNum:
        self.require("smatrix")
        return self.smatrix[self.index(x)][self.index(y)]

    def N(self, x: Label, y: Label, z: Label) -> int:
        self.require("fusion")
        return int(self.fusion[self.index(x), self.index(y), self.index(z)])

    def is_invertible(self, x: Label) -> bool:
        x = self.index(x)
        if self.invertibles is not None:
            return x in self.invertibles.labels
        if self.fusion is not None:
            return int(self.fusion[x, self.dual[x]].sum()) == 1
        raise InsufficientData("cannot decide invertibility without fusion or invertibles")

    def tensor_invertible(self, g: Label, x: Label) -> int:
        """Label of g (x) X for invertible g."""
        g, x = self.index(g), self.index(x)
        if self.invertibles is not None and g in self.invertibles.labels:
            return self.invertibles.act(self.invertibles.element_of(g), x)
        if self.fusion is not None:
            out = np.nonzero(self.fusion[g, x])[0]
            if len(out) == 1 and self.fusion[g, x, out[0]] == 1:
                return int(out[0])
            raise ValueError(f"{self.labels[g]} is not invertible")
        raise InsufficientData("no invertible action or fusion available")

    def tensor(self, x: Label, y: Label) -> dict[int, int]:
        """X (x) Y as {label: multiplicity}."""
        x, y = self.index(x), self.index(y)
        if self.fusion is not None:
            return {int(z): int(n) for z, n in enumerate(self.fusion[x, y]) if n}
        for a, b in ((x, y), (y, x)):
            try:
                if self.is_invertible(a):
                    return {self.tensor_invertible(a, b): 1}
            except InsufficientData:
                pass
        raise InsufficientData(f"cannot compute {self.labels[x]} (x) {self.labels[y]} without fusion")

    def pointed_form(self) -> "PointedForm":
        """Quadratic form Theta_c = theta_c dim(c) on the invertible objects."""
        self.require("invertibles")
        inv = self.invertibles
        theta = {c: self.twists[l] * self.dims[l] for c, l in zip(inv.group.elements, inv.labels)}
        return PointedForm(inv.group, theta)

    # -- equality and serialization --------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CategoryData):
            return NotImplemented
        return self.to_json() == other.to_json()

    def __repr__(self) -> str:
        return f"CategoryData({self.name or '?'}, rank={self.rank}, caps={','.join(self.capabilities)})"

    def to_json(self) -> dict:
        doc: dict = {
            "name": self.name,
            "labels": list(self.labels),
            "dual": [self.labels[d] for d in self.dual],
            "dims": {x: d.to_json() for x, d in zip(self.labels, self.dims)},
            "twists": {x: t.to_json() for x, t in zip(self.labels, self.twists)},
        }
        if self.fusion is not None:
            doc["fusion"] = [[self.labels[x], self.labels[y], self.labels[z], int(n)]
                             for x, y, z in zip(*np.nonzero(self.fusion))
                             for n in [self.fusion[x, y, z]]]
        if self.smatrix is not None:
            doc["smatrix"] = [[v.to_json() for v in row] for row in self.smatrix]
        if self.grading is not None:
            doc["grading"] = {
                "group": self.grading.group.to_json(),
                "degrees": {x: list(d) for x, d in zip(self.labels, self.grading.degrees)},
            }
        if self.invertibles is not None:
            inv = self.invertibles
            doc["invertibles"] = {
                "group": inv.group.to_json(),
                "labels": [self.labels[l] for l in inv.labels],
                "action": [[self.labels[v] for v in row] for row in inv.action.tolist()],
            }
        doc["capabilities"] = list(self.capabilities)
        if self.assumptions:
            doc["assumptions"] = list(self.assumptions)
        if self.provenance:
            doc["provenance"] = dict(sorted(self.provenance.items()))
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "CategoryData":
        labels = [str(x) for x in doc["labels"]]
        idx = {x: i for i, x in enumerate(labels)}

        def lab(v):
            if isinstance(v, int):
                return v
            if v not in idx:
                raise ValueError(f"unknown label {v!r}")
            return idx[v]

        def per_label(key):
            val = doc[key]
            if isinstance(val, dict):
                missing = set(labels) - set(val)
                if missing:
                    raise ValueError(f"{key}: no value for {sorted(missing)}")
                return [cyc(val[x]) for x in labels]
            if len(val) != len(labels):
                raise ValueError(f"{key}: expected {len(labels)} values")
            return [cyc(v) for v in val]

        dual = [lab(d) for d in doc["dual"]]
        r = len(labels)
        fusion = None
        if doc.get("fusion") is not None:
            fusion = np.zeros((r, r, r), dtype=np.int64)
            for entry in doc["fusion"]:
                x, y, z = (lab(v) for v in entry[:3])
                n = int(entry[3]) if len(entry) > 3 else 1
                fusion[x, y, z] = n
        smatrix = doc.get("smatrix")
        grading = None
        if doc.get("grading") is not None:
            g = doc["grading"]
            group = FinAbGroup.from_json(g["group"])
            degs = g["degrees"]
            if isinstance(degs, dict):
                degs = [degs[x] for x in labels]
            grading = Grading(group, tuple(group.elem(d) for d in degs))
        invertibles = None
        if doc.get("invertibles") is not None:
            iv = doc["invertibles"]
            group = FinAbGroup.from_json(iv["group"])
            invertibles = Invertibles(group, tuple(lab(v) for v in iv["labels"]),
                                      np.array([[lab(v) for v in row] for row in iv["action"]], dtype=np.int64))
        return cls(labels, dual, per_label("dims"), per_label("twists"), fusion=fusion, smatrix=smatrix,
                   grading=grading, invertibles=invertibles, name=doc.get("name", ""),
                   provenance=doc.get("provenance"), assumptions=doc.get("assumptions", ()))


# -- basic invariants ------------------------------------------------------------------

def global_dimension(cat: CategoryData) -> CycNum:
    """Sum of squared dimensions."""
    total = ZERO
    for d in cat.dims:
        total = total + d * d
    return total


def gauss_sum(cat: CategoryData, sign: int = 1) -> CycNum:
    """tau^+ (sign=1) or tau^- (sign=-1) = sum_X dim(X)^2 theta_X^{+-1}."""
    total = ZERO
    for d, t in zip(cat.dims, cat.twists):
        total = total + d * d * (t if sign > 0 else t.inverse())
    return total


def central_charge(cat: CategoryData) -> CycNum:
    """The phase tau^+/|tau^+| as an exact root of unity."""
    return _phase(gauss_sum(cat))


def _phase(tau: CycNum) -> CycNum:
    if tau.is_zero():
        raise ZeroDivisionError("Gauss sum vanishes; the central charge is undefined")
    z = complex(tau)
    phi = (math.atan2(z.imag, z.real) / (2 * math.pi)) % 1
    base = tau.minimal().order
    base = base if base % 2 == 0 else 2 * base
    for D in range(1, 8 * base + 1):
        k = round(phi * D)
        if abs(phi * D - k) > 1e-7:
            continue
        u = root_of_unity(D, k)
        w = tau * u.conjugate()
        if w == w.conjugate() and complex(w).real > 0:
            return u
    raise ArithmeticError("the Gauss-sum phase is not a root of unity of small order")


def chi_scalar(cat: CategoryData, g: Label, x: Label) -> CycNum:
    """Monodromy scalar chi_g(X) = theta_{g X} / (theta_g theta_X) for invertible g."""
    g, x = cat.index(g), cat.index(x)
    key = ("chi", g, x)
    if key not in cat._cache:
        gx = cat.tensor_invertible(g, x)
        cat._cache[key] = cat.twists[gx] / (cat.twists[g] * cat.twists[x])
    return cat._cache[key]


def chi_turns(cat: CategoryData, g: Label, x: Label) -> Fraction:
    """chi_g(X) as a fraction of a turn."""
    g, x = cat.index(g), cat.index(x)
    key = ("chi_t", g, x)
    if key not in cat._cache:
        cat._cache[key] = chi_scalar(cat, g, x).turns()
    return cat._cache[key]


def twist_turns(cat: CategoryData, x: Label) -> Fraction:
    x = cat.index(x)
    key = ("theta_t", x)
    if key not in cat._cache:
        cat._cache[key] = cat.twists[x].turns()
    return cat._cache[key]


def compute_grading(cat: CategoryData, generator: Optional[Label] = None, q: Optional[CycNum] = None) -> Grading:
    """Grading of the labels by characters of the invertible group C.

    For cyclic C = <g> (pass ``generator``) and a primitive root ``q`` of the
    right order, X gets degree k with chi_g(X) = q^k; the grading group is
    Z/N with N the order of q.  Without ``generator`` the degree of X is the
    exponent vector of c -> chi_c(X) over the generators of C.
    """
    cat.require("invertibles")
    inv = cat.invertibles
    if generator is not None:
        g = cat.index(generator)
        values = [chi_scalar(cat, g, x) for x in range(cat.rank)]
        turns = [v.turns() for v in values]
        N = math.lcm(*(t.denominator for t in turns))
        if q is None:
            q = root_of_unity(N, 1)
        qt = q.turns()
        if qt.denominator != N:
            raise ValueError(f"q must be a primitive {N}-th root of unity")
        degs = []
        for t in turns:
            # solve k * qt = t mod 1
            k = next(k for k in range(N) if (k * qt - t) % 1 == 0)
            degs.append((k,))
        return Grading(FinAbGroup.cyclic(N), tuple(degs))
    gens = inv.group.generators()
    orders = inv.group.cyclic_orders
    degs = []
    for x in range(cat.rank):
        vec = []
        for c, n in zip(gens, orders):
            t = chi_scalar(cat, inv.label_of(c), x).turns()
            e = t * n
            if e.denominator != 1:
                raise ValueError("chi values do not lie in the character group of C")
            vec.append(int(e) % n)
        degs.append(tuple(vec))
    return Grading(FinAbGroup(orders), tuple(degs))


def grading_is_faithful(grading: Grading) -> bool:
    seen = set(grading.degrees)
    return len(seen) == grading.group.order


# -- transparency ---------------------------------------------------------------------------

def transparency(cat: CategoryData) -> dict[int, Optional[bool]]:
    """Per-label transparency: True, False, or None when skeletal data cannot decide."""
    out: dict[int, Optional[bool]] = {}
    if cat.smatrix is not None:
        for x in range(cat.rank):
            out[x] = all(cat.smatrix[x][y] == cat.dims[x] * cat.dims[y] for y in range(cat.rank))
        return out
    if cat.invertibles is None:
        raise InsufficientData("transparency needs an S-matrix or the invertible action")
    for x in range(cat.rank):
        if x in cat.invertibles.labels:
            out[x] = all(chi_scalar(cat, x, y) == ONE for y in range(cat.rank))
        else:
            out[x] = None
    return out


def mueger_center(cat: CategoryData) -> list[int]:
    """Labels known to be transparent (with an S-matrix this is the full center)."""
    return [x for x, t in transparency(cat).items() if t]


# -- S-matrix checks ----------------------------------------------------------------------------

def _s_gram(cat: CategoryData) -> list[list[CycNum]]:
    S = cat.smatrix
    r = cat.rank
    Sbar = [[v.conjugate() for v in row] for row in S]
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            acc = ZERO
            for k in range(r):
                acc = acc + S[i][k] * Sbar[j][k]
            row.append(acc)
        out.append(row)
    return out


def is_modular(cat: CategoryData) -> bool:
    """S conj(S)^T = D^2 I exactly."""
    cat.require("smatrix")
    D2 = global_dimension(cat)
    G = _s_gram(cat)
    return all(G[i][j] == (D2 if i == j else ZERO) for i in range(cat.rank) for j in range(cat.rank))


def verlinde_fusion(cat: CategoryData) -> np.ndarray:
    """Fusion coefficients from the S-matrix; raises if S is singular or the result is not integral."""
    cat.require("smatrix")
    if not is_modular(cat):
        raise ValueError("S singular")
    r = cat.rank
    S = cat.smatrix
    D2inv = global_dimension(cat).inverse()
    w = [D2inv / S[0][k] for k in range(r)]
    Sbar = [[v.conjugate() for v in row] for row in S]
    out = np.zeros((r, r, r), dtype=np.int64)
    for x in range(r):
        for y in range(x, r):
            m = [S[x][k] * S[y][k] * w[k] for k in range(r)]
            for z in range(r):
                acc = ZERO
                for k in range(r):
                    acc = acc + m[k] * Sbar[z][k]
                if not acc.is_rational() or acc.rational().denominator != 1 or acc.rational() < 0:
                    raise ValueError(f"non-integral fusion coefficient at {(x, y, z)}: {acc}")
                out[x, y, z] = out[y, x, z] = int(acc.rational())
    return out


def verlinde_check(cat: CategoryData) -> Report:
    cat.require("smatrix", "fusion")
    rep = Report(f"verlinde {cat.name}")
    try:
        N = verlinde_fusion(cat)
    except ValueError as exc:
        rep.add("verlinde", False, str(exc))
        return rep
    bad = [tuple(cat.labels[i] for i in t) for t in zip(*np.nonzero(N != cat.fusion))]
    rep.add("verlinde", not bad, offenders=bad)
    return rep


def balancing_check(cat: CategoryData, smatrix=None, twists=None, dims=None, fusion=None) -> list[tuple]:
    """Offending (X, Y) for sum_Z N theta_Z dim Z = theta_X theta_Y S_{X,Y*}."""
    S = smatrix if smatrix is not None else cat.smatrix
    T = twists if twists is not None else cat.twists
    d = dims if dims is not None else cat.dims
    N = fusion if fusion is not None else cat.fusion
    bad = []
    for x in range(cat.rank):
        for y in range(cat.rank):
            lhs = ZERO
            for z in np.nonzero(N[x, y])[0]:
                lhs = lhs + int(N[x, y, z]) * T[z] * d[z]
            if lhs != T[x] * T[y] * S[x][cat.dual[y]]:
                bad.append((cat.labels[x], cat.labels[y]))
    return bad


# -- validation ---------------------------------------------------------------------------------

def validate(cat: CategoryData) -> Report:
    """Run every check the dataset's capabilities allow."""
    rep = Report(f"validate {cat.name or 'category'}")
    r = cat.rank
    rep.add("unit twist", cat.twists[0] == ONE)
    rep.add("unit dimension", cat.dims[0] == ONE)
    bad = [cat.labels[x] for x in range(r) if not 0 <= cat.dual[x] < r or cat.dual[cat.dual[x]] != x]
    rep.add("dual involution", not bad and cat.dual[0] == 0, offenders=bad)
    if not bad:
        rep.add("dual dimensions", all(cat.dims[cat.dual[x]] == cat.dims[x] for x in range(r)),
                offenders=[cat.labels[x] for x in range(r) if cat.dims[cat.dual[x]] != cat.dims[x]])
        rep.add("dual twists", all(cat.twists[cat.dual[x]] == cat.twists[x] for x in range(r)),
                offenders=[cat.labels[x] for x in range(r) if cat.twists[cat.dual[x]] != cat.twists[x]])
    bad = [cat.labels[x] for x, t in enumerate(cat.twists) if t.as_root_of_unity() is None]
    rep.add("twists are roots of unity", not bad, offenders=bad)

    if cat.fusion is not None:
        N = cat.fusion
        rep.add("fusion nonnegative", bool((N >= 0).all()))
        eye = np.eye(r, dtype=np.int64)
        rep.add("fusion unit", np.array_equal(N[0], eye) and np.array_equal(N[:, 0, :], eye))
        dual_ok = all(N[x, y, 0] == (1 if y == cat.dual[x] else 0) for x in range(r) for y in range(r))
        rep.add("fusion duality", dual_ok)
        rep.add("fusion commutative", np.array_equal(N, N.transpose(1, 0, 2)))
        left = np.einsum("xyu,uzw->xyzw", N, N)
        right = np.einsum("yzu,xuw->xyzw", N, N)
        bad = [tuple(cat.labels[i] for i in t) for t in zip(*np.nonzero(left != right))]
        rep.add("fusion associative", not bad, offenders=bad)
        bad = []
        for x in range(r):
            for y in range(x, r):
                acc = ZERO
                for z in np.nonzero(N[x, y])[0]:
                    acc = acc + int(N[x, y, z]) * cat.dims[z]
                if acc != cat.dims[x] * cat.dims[y]:
                    bad.append((cat.labels[x], cat.labels[y]))
        rep.add("dimensions multiplicative", not bad, offenders=bad)

    if cat.smatrix is not None:
        S = cat.smatrix
        bad = [(cat.labels[x], cat.labels[y]) for x in range(r) for y in range(x + 1, r) if S[x][y] != S[y][x]]
        rep.add("S symmetric", not bad, offenders=bad)
        bad = [cat.labels[x] for x in range(r) if S[x][0] != cat.dims[x]]
        rep.add("S unit column", not bad, offenders=bad)
        if cat.fusion is not None:
            bad = balancing_check(cat)
            rep.add("balancing", not bad, offenders=bad)
            if is_modular(cat):
                rep.checks.extend(verlinde_check(cat).checks)

    if cat.grading is not None:
        gr = cat.grading
        rep.add("grading unit", gr.degrees[0] == gr.group.zero)
        if cat.fusion is not None:
            bad = [(cat.labels[x], cat.labels[y], cat.labels[z])
                   for x, y, z in zip(*np.nonzero(cat.fusion))
                   if gr.degrees[z] != gr.group.add(gr.degrees[x], gr.degrees[y])]
            rep.add("grading compatible", not bad, offenders=bad)
        bad = [cat.labels[x] for x in range(r) if gr.degrees[cat.dual[x]] != gr.group.neg(gr.degrees[x])]
        rep.add("grading duals", not bad, offenders=bad)

    if cat.invertibles is not None:
        inv = cat.invertibles
        G = inv.group
        ok = inv.action.shape == (G.order, r) and inv.labels[0] == 0
        bad = []
        if ok:
            for i, c in enumerate(G.elements):
                if int(inv.action[i, 0]) != inv.labels[i]:
                    bad.append(("label", cat.labels[inv.labels[i]]))
                for j, e in enumerate(G.elements):
                    k = G.index(G.add(c, e))
                    if not np.array_equal(inv.action[i][inv.action[j]], inv.action[k]):
                        bad.append(("composition", cat.labels[inv.labels[i]], cat.labels[inv.labels[j]]))
            for i in range(G.order):
                for x in range(r):
                    if cat.dims[int(inv.action[i, x])] != cat.dims[inv.labels[i]] * cat.dims[x]:
                        bad.append(("dimension", cat.labels[inv.labels[i]], cat.labels[x]))
        rep.add("invertible action", ok and not bad, offenders=bad)
        if ok and cat.fusion is not None:
            bad = [(cat.labels[inv.labels[i]], cat.labels[x]) for i in range(G.order) for x in range(r)
                   if cat.fusion[inv.labels[i], x, int(inv.action[i, x])] != 1]
            rep.add("invertible action matches fusion", not bad, offenders=bad)
        if ok and not bad and cat.grading is not None:
            gr = cat.grading
            offenders = []
            for i in range(G.order):
                gdeg = gr.degrees[inv.labels[i]]
                for x in range(r):
                    if gr.degrees[int(inv.action[i, x])] != gr.group.add(gdeg, gr.degrees[x]):
                        offenders.append((cat.labels[inv.labels[i]], cat.labels[x]))
            rep.add("invertible action graded", not offenders, offenders=offenders)
        if ok and not bad:
            pf = cat.pointed_form()
            rep.add("pointed part quadratic", pf.is_quadratic())
    return rep


# -- pointed braided categories ---------------------------------------------------------------------

class PointedForm:
    """A quadratic form Theta on a finite abelian group C (the twists of C(C, Theta))."""

    def __init__(self, group: FinAbGroup, theta):
        self.group = group
        if callable(theta):
            self.theta = {c: cyc(theta(c)) for c in group.elements}
        else:
            self.theta = {group.elem(c): cyc(v) for c, v in dict(theta).items()}
        if set(self.theta) != set(group.elements):
            raise ValueError("Theta must be defined on every group element")

    def __call__(self, c) -> CycNum:
        return self.theta[self.group.elem(c)]

    def bicharacter(self, a, b) -> CycNum:
        """B(a,b) = Theta(a+b) / (Theta(a) Theta(b)), the double braiding."""
        return self(self.group.add(a, b)) / (self(a) * self(b))

    def is_quadratic(self) -> bool:
        G = self.group
        if self(G.zero) != ONE:
            return False
        if any(self(G.neg(a)) != self(a) for a in G.elements):
            return False
        for a, b, c in itertools.product(G.elements, repeat=3):
            if self.bicharacter(G.add(a, b), c) != self.bicharacter(a, c) * self.bicharacter(b, c):
                return False
        return True

    def radical(self) -> list:
        """Z_2(C): elements with trivial double braiding against everything."""
        G = self.group
        return [a for a in G.elements if all(self.bicharacter(a, b) == ONE for b in G.elements)]


@dataclass(frozen=True)
class PointedClass:
    kind: str
    m: int
    h: tuple
    theta_h: CycNum
    order_theta_g2: int


def classify_pointed(p: PointedForm, generator=None) -> PointedClass:
    """Modular, symmetric (Tannakian or super-Tannakian) or degenerate.

    For cyclic C = <g>: m = |Z_2(C)| and h = g^{ord(Theta_g^2)} generates Z_2(C).
    """
    if not p.is_quadratic():
        raise ValueError("Theta is not a quadratic form")
    G = p.group
    rad = p.radical()
    m = len(rad)
    if generator is None:
        if G.rank != 1:
            raise ValueError("pass a generator for a non-standard cyclic presentation")
        generator = (1,)
    g = G.elem(generator)
    if G.element_order(g) != G.order:
        raise ValueError("generator does not generate C")
    t2 = (p(g) * p(g)).turns()
    k = t2.denominator
    h = G.scale(k, g)
    if m == 1:
        kind = "modular"
    elif m == G.order:
        kind = "symmetric-Tannakian" if all(p(c) == ONE for c in G.elements) else "symmetric-superTannakian"
    else:
        kind = "degenerate-other"
    return PointedClass(kind, m, h, p(h), k)
