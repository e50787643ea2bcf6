"""Built-in datasets, pointed-category constructors and document I/O.

Three quantum-group categories are shipped:

``su3_3``
    SU(3) at level 3 with full modular data.  Fusion is reconstructed from S
    by the Verlinde formula and stored as a literal.
``su4_4``
    SU(4) at level 4: labels, Z/4 grading, dimensions and twists, together
    with duals and the tensoring action of the generating invertible g.
``su4_2``
    SU(4) at level 2 in the same partial form.

Each entry records where every field came from in ``notes``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Union

import numpy as np

from .category import CategoryData, Grading, Invertibles, PointedForm
from .cohomology import FinAbGroup
from .cyclotomic import CycNum, root_of_unity, sqrt_int

__all__ = ["GalleryEntry", "pointed", "su_pointed", "builtin", "names", "load", "save"]


@dataclass
class GalleryEntry:
    name: str
    category: CategoryData
    notes: dict = field(default_factory=dict)

    @property
    def capabilities(self) -> tuple[str, ...]:
        return self.category.capabilities


def _z(n: int, k: int = 1) -> CycNum:
    return root_of_unity(n, k)


def _element_label(group: FinAbGroup, a: tuple) -> str:
    if group.order == 1 or all(v == 0 for v in a):
        return "1"
    if group.rank == 1:
        return "g" if a[0] == 1 else f"g{a[0]}"
    return "g(" + ",".join(str(v) for v in a) + ")"


# -- pointed categories --------------------------------------------------------------

def pointed(group: FinAbGroup, theta: Union[dict, Callable], name: str = "") -> CategoryData:
    """Pointed braided category C(group, theta) with full data.

    ``theta`` maps group elements to twists and must be a quadratic form.
    S_{a,b} is the inverse of the bicharacter theta(a+b)/(theta(a) theta(b)).
    """
    form = PointedForm(group, theta)
    if not form.is_quadratic():
        raise ValueError("twist function is not a quadratic form")
    els = group.elements
    n = len(els)
    labels = [_element_label(group, a) for a in els]
    dual = [group.index(group.neg(a)) for a in els]
    twists = [form(a) for a in els]
    fusion = np.zeros((n, n, n), dtype=np.int64)
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            fusion[i, j, group.index(group.add(a, b))] = 1
    smat = [[form.bicharacter(a, b).inverse() for b in els] for a in els]
    grading = Grading(group, tuple(els))
    action = np.array([[group.index(group.add(c, b)) for b in els] for c in els], dtype=np.int64)
    inv = Invertibles(group, tuple(range(n)), action)
    return CategoryData(labels, dual, [1] * n, twists, fusion=fusion, smatrix=smat, grading=grading,
                        invertibles=inv, name=name or f"C({group!r})")


def su_pointed(N: int, k: int) -> PointedForm:
    """Pointed part of SU(N)_k: Z/N with theta_j = zeta_{2N}^{k j (N - j)}."""
    if N < 2 or k < 1:
        raise ValueError("need N >= 2 and k >= 1")
    group = FinAbGroup.cyclic(N)
    return PointedForm(group, {(j,): _z(2 * N, k * j * (N - j)) for j in range(N)})


# -- SU(3)_3 ----------------------------------------------------------------------------

_SU33_LABELS = ["1", "g", "g2", "Y", "X1", "X2", "X3", "Z1", "Z2", "Z3"]

# nonzero N_{x,y}^z for x <= y, from the Verlinde formula
_SU33_FUSION = [
    (0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (0, 3, 3, 1), (0, 4, 4, 1), (0, 5, 5, 1),
    (0, 6, 6, 1), (0, 7, 7, 1), (0, 8, 8, 1), (0, 9, 9, 1), (1, 1, 2, 1), (1, 2, 0, 1),
    (1, 3, 3, 1), (1, 4, 5, 1), (1, 5, 6, 1), (1, 6, 4, 1), (1, 7, 9, 1), (1, 8, 7, 1),
    (1, 9, 8, 1), (2, 2, 1, 1), (2, 3, 3, 1), (2, 4, 6, 1), (2, 5, 4, 1), (2, 6, 5, 1),
    (2, 7, 8, 1), (2, 8, 9, 1), (2, 9, 7, 1), (3, 3, 0, 1), (3, 3, 1, 1), (3, 3, 2, 1),
    (3, 3, 3, 2), (3, 4, 4, 1), (3, 4, 5, 1), (3, 4, 6, 1), (3, 5, 4, 1), (3, 5, 5, 1),
    (3, 5, 6, 1), (3, 6, 4, 1), (3, 6, 5, 1), (3, 6, 6, 1), (3, 7, 7, 1), (3, 7, 8, 1),
    (3, 7, 9, 1), (3, 8, 7, 1), (3, 8, 8, 1), (3, 8, 9, 1), (3, 9, 7, 1), (3, 9, 8, 1),
    (3, 9, 9, 1), (4, 4, 7, 1), (4, 4, 9, 1), (4, 5, 8, 1), (4, 5, 9, 1), (4, 6, 7, 1),
    (4, 6, 8, 1), (4, 7, 0, 1), (4, 7, 3, 1), (4, 8, 2, 1), (4, 8, 3, 1), (4, 9, 1, 1),
    (4, 9, 3, 1), (5, 5, 7, 1), (5, 5, 8, 1), (5, 6, 7, 1), (5, 6, 9, 1), (5, 7, 1, 1),
    (5, 7, 3, 1), (5, 8, 0, 1), (5, 8, 3, 1), (5, 9, 2, 1), (5, 9, 3, 1), (6, 6, 8, 1),
    (6, 6, 9, 1), (6, 7, 2, 1), (6, 7, 3, 1), (6, 8, 1, 1), (6, 8, 3, 1), (6, 9, 0, 1),
    (6, 9, 3, 1), (7, 7, 4, 1), (7, 7, 6, 1), (7, 8, 5, 1), (7, 8, 6, 1), (7, 9, 4, 1),
    (7, 9, 5, 1), (8, 8, 4, 1), (8, 8, 5, 1), (8, 9, 4, 1), (8, 9, 6, 1), (9, 9, 5, 1),
    (9, 9, 6, 1),
]


def _su3_3_smatrix() -> list[list[CycNum]]:
    z = lambda k: _z(18, k)  # noqa: E731
    one = CycNum.from_rational(1)
    A = [[one, one, one, one * 3]] * 3 + [[one * 3, one * 3, one * 3, one * -3]]
    B = [[one * 2] * 3, [z(6) * 2] * 3, [z(12) * 2] * 3, [one * 0] * 3]
    Bc = [[v.conjugate() for v in row] for row in B]
    C = [[z(1), z(7), -z(4)], [z(7), -z(4), z(1)], [-z(4), z(1), z(7)]]
    C = [[v * 2 for v in row] for row in C]
    D = [[z(2) - z(5), z(8) - z(5), z(8) + z(2)],
         [z(8) - z(5), z(8) + z(2), z(2) - z(5)],
         [z(8) + z(2), z(2) - z(5), z(8) - z(5)]]
    D = [[v * 2 for v in row] for row in D]
    T = lambda M: [list(r) for r in zip(*M)]  # noqa: E731
    rows = []
    for i in range(4):
        rows.append(A[i] + B[i] + Bc[i])
    for i in range(3):
        rows.append(T(B)[i] + C[i] + D[i])
    for i in range(3):
        rows.append(T(Bc)[i] + T(D)[i] + C[i])
    return rows


def _su3_3() -> GalleryEntry:
    r = 10
    fusion = np.zeros((r, r, r), dtype=np.int64)
    dual = [0, 2, 1, 3, 7, 8, 9, 4, 5, 6]
    for x, y, z, n in _SU33_FUSION:
        fusion[x, y, z] = fusion[y, x, z] = n
    twists = [_z(18, k) for k in (0, 0, 0, 9, 4, 16, 10, 4, 16, 10)]
    dims = [1, 1, 1, 3, 2, 2, 2, 2, 2, 2]
    perm = [1, 2, 0, 3, 5, 6, 4, 9, 7, 8]
    group = FinAbGroup.cyclic(3)
    grading = Grading(group, tuple((d,) for d in (0, 0, 0, 0, 1, 1, 1, 2, 2, 2)))
    cat = CategoryData(_SU33_LABELS, dual, dims, twists, fusion=fusion, smatrix=_su3_3_smatrix(),
                       grading=grading, invertibles=Invertibles.cyclic(perm), name="su3_3",
                       assumptions=("modular",))
    notes = {
        "labels": "ordering 1, g, g2, Y, X1..X3, Z1..Z3 of the SU(3)_3 modular data",
        "smatrix": "block form [[A,B,conj B],[B^T,C,D],[conj B^T,D^T,C]] with zeta = zeta_18; "
                   "third row of B set to 2 zeta^12 so that S is unitary",
        "twists": "[1,1,1,-1,z^4,z^16,z^10,z^4,z^16,z^10], z = zeta_18",
        "dims": "dim Y = 3, dim X_i = dim Z_i = 2",
        "fusion": "Verlinde reconstruction from S, nonnegative and integral",
        "duals": "g <-> g2, X_i <-> Z_i, Y self-dual",
        "invertibles": "g X1 = X2, g X2 = X3 and likewise on the Z labels",
        "grading": "Z/3 by chi_g with q = zeta_3^-1: X in degree 1, Z in degree 2",
    }
    cat.provenance = {"dataset": "su3_3", **notes}
    return GalleryEntry("su3_3", cat, notes)


# -- SU(4)_4 ----------------------------------------------------------------------------

def _su4_4() -> GalleryEntry:
    sqrt2 = _z(8) + _z(8, -1)
    d = sqrt2 + 2
    r2d = (_z(16) + _z(16, -1)) * sqrt2          # sqrt(2d)
    r14 = r2d * (sqrt2 + 1)                       # sqrt(14d - 8)
    w = lambda k: _z(64, k)  # noqa: E731
    v = lambda k: _z(16, k)  # noqa: E731
    one = CycNum.from_rational(1)
    i = _z(4)
    # (base name, orbit size, degree, dim, twists along the g-orbit)
    families = [
        ("", 4, 0, one, [one, -one, one, -one]),
        ("Y", 4, 0, d * 2 - 1, [-one, one, -one, one]),
        ("Z", 2, 0, d * 2 - 2, [-i, i]),
        ("X", 4, 1, r2d, [w(15), w(31), -w(15), -w(31)]),
        ("Xt", 4, 1, r14, [-w(7), -w(23), w(7), w(23)]),
        ("Xp", 4, 2, d, [v(5)] * 4),
        ("Xpp", 4, 2, d, [-v(1)] * 4),
        ("W", 1, 2, d * 4 - 4, [-v(7)]),
        ("Xs", 4, 3, r2d, [w(15), -w(31), -w(15), w(31)]),
        ("Xts", 4, 3, r14, [-w(7), w(23), w(7), -w(23)]),
    ]
    labels, dims, twists, degs, start = [], [], [], [], {}
    for base, size, deg, dim, tw in families:
        start[base] = len(labels)
        for k in range(size):
            prefix = "" if k == 0 else ("g" if k == 1 else f"g{k}")
            labels.append((prefix + base) or "1")
            dims.append(dim)
            twists.append(tw[k])
            degs.append(deg)
    r = len(labels)
    sizes = {f[0]: f[1] for f in families}

    def member(base, k):
        return start[base] + k % sizes[base]

    perm = [0] * r
    dual = [0] * r
    pairs = {"X": "Xs", "Xs": "X", "Xt": "Xts", "Xts": "Xt"}
    for base, size, *_ in families:
        for k in range(size):
            x = member(base, k)
            perm[x] = member(base, k + 1)
            if base in pairs:
                dual[x] = member(pairs[base], -k)
            elif base == "Xpp":
                dual[x] = member(base, 1 - k)
            elif base in ("", "Y", "Xp"):
                dual[x] = member(base, -k)
            else:
                dual[x] = x
    group = FinAbGroup.cyclic(4)
    grading = Grading(group, tuple((g,) for g in degs))
    cat = CategoryData(labels, dual, dims, twists, grading=grading, invertibles=Invertibles.cyclic(perm),
                       name="su4_4", assumptions=("modular",))
    notes = {
        "labels": "35 simple objects in g-orbits; prefix g^k marks g^k tensor the orbit representative",
        "grading": "Z/4 universal grading, component ranks (10, 8, 9, 8)",
        "dims": "d = 2 + sqrt2; orbits of dim 1, 2d-1, 2d-2, sqrt(2d), sqrt(14d-8), d, d, 4d-4; "
                "the Z orbit has dim 2d-2 so the global dimension balances across components",
        "twists": "tabulated twists in zeta_64 and zeta_16; the row printed as g^2 in the Y orbit is g^2 Y",
        "duals": "(g^k F)* = g^-k F* with X <-> Xs, Xt <-> Xts; Xpp is the weight (0,0,2) orbit with "
                 "(g^k Xpp)* = g^(1-k) Xpp; Z, gZ and W self-dual",
        "invertibles": "g acts by shifting each orbit; g^2 fixes Z and W",
    }
    cat.provenance = {"dataset": "su4_4", **notes}
    return GalleryEntry("su4_4", cat, notes)


# -- SU(4)_2 ----------------------------------------------------------------------------

def _su4_2() -> GalleryEntry:
    labels = ["1", "g", "g2", "g3", "Y1", "Y2", "X1", "X2", "Z1", "Z2"]
    r3 = sqrt_int(3)
    dims = [1, 1, 1, 1, 2, 2, r3, r3, r3, r3]
    twists = [_z(1), _z(4), _z(1), _z(4), _z(3), _z(12, 7), _z(16, 11), _z(16, 3), _z(16, 11), _z(16, 3)]
    dual = [0, 3, 2, 1, 4, 5, 8, 9, 6, 7]
    perm = [1, 2, 3, 0, 5, 4, 8, 9, 7, 6]
    degs = [0, 2, 0, 2, 0, 2, 1, 1, 3, 3]
    group = FinAbGroup.cyclic(4)
    grading = Grading(group, tuple((g,) for g in degs))
    cat = CategoryData(labels, dual, dims, twists, grading=grading, invertibles=Invertibles.cyclic(perm),
                       name="su4_2", assumptions=("modular",))
    notes = {
        "labels": "highest weights 1=(000), g=(200), g2=(020), g3=(002), Y1=(101), Y2=(010), "
                  "X1=(001), X2=(110), Z1=(100), Z2=(011)",
        "twists": "theta_mu = exp(2 pi i <mu, mu + 2 rho> / 12) conjugated, so that theta_g = i",
        "dims": "dim Y_i = 2, dim X_i = dim Z_i = sqrt3; global dimension 24",
        "grading": "Z/4 by chi_g with q = -i: B0 = {1, g2, Y1}, B1 = {X1, X2}, B2 = {g, g3, Y2}, B3 = {Z1, Z2}",
        "duals": "g <-> g3, X_i <-> Z_i, the rest self-dual",
        "invertibles": "g: X1 -> Z1 -> X2 -> Z2 -> X1 and Y1 <-> Y2",
    }
    cat.provenance = {"dataset": "su4_2", **notes}
    return GalleryEntry("su4_2", cat, notes)


_BUILTINS = {"su3_3": _su3_3, "su4_4": _su4_4, "su4_2": _su4_2}


def names() -> list[str]:
    return sorted(_BUILTINS)


def builtin(name: str) -> GalleryEntry:
    """Return a fresh copy of the named dataset."""
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown gallery entry {name!r}; available: {', '.join(names())}") from None


# -- documents ------------------------------------------------------------------------

def save(entity, path) -> None:
    """Write a category or zesting document as canonical JSON."""
    if isinstance(entity, GalleryEntry):
        entity = entity.category
    doc = entity.to_json()
    Path(path).write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")


def load(path, base: CategoryData = None):
    """Read a document written by :func:`save`.

    Category documents return :class:`CategoryData`.  Zesting documents (those
    with a ``lambda2`` field) return the deepest zesting layer present and need
    ``base``, or a ``base`` entry naming a builtin.
    """
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: top level must be an object")
    if "lambda2" in doc:
        from .engine import zesting_from_json

        if base is None:
            ref = doc.get("base")
            if not isinstance(ref, str):
                raise ValueError(f"{path}: zesting document needs a base category")
            base = builtin(ref).category
        return zesting_from_json(doc, base)
    try:
        return CategoryData.from_json(doc)
    except KeyError as exc:
        raise ValueError(f"{path}: missing field {exc.args[0]!r}") from None
