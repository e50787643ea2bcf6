"""Normalized cochains on finite abelian groups with trivial coefficients.

Coefficients are written additively throughout.  A root of unity
exp(2 pi i e / L) in mu_L is stored as the exponent e modulo L, so products
of scalars become sums and coboundary questions become linear algebra over
Z/L.  Cochains are dense integer tables indexed by the lexicographic element
order of the group.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from .cyclotomic import CycNum, root_of_unity

__all__ = [
    "FinAbGroup",
    "CoeffModule",
    "Cochain",
    "BipartiteCochain",
    "Character",
    "differential",
    "is_cocycle",
    "coboundary_witness",
    "cyclic_cochain",
    "shuffle",
    "delta_h",
    "delta_v",
    "bipartite_differentials",
    "cup_with_pairing",
    "enumerate_characters",
    "enumerate_bicharacters",
    "enumerate_alternating_bicharacters",
    "h3_representatives",
    "solve_mod",
    "subgroup_basis",
]

GroupElem = tuple


class FinAbGroup:
    """The group Z/n_1 x ... x Z/n_k; elements are tuples of residues."""

    def __init__(self, cyclic_orders: Iterable[int]):
        orders = tuple(int(n) for n in cyclic_orders)
        if any(n < 1 for n in orders):
            raise ValueError("cyclic orders must be positive")
        self.cyclic_orders = orders

    @classmethod
    def cyclic(cls, n: int) -> "FinAbGroup":
        return cls([n])

    @cached_property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    @cached_property
    def elements(self) -> list[GroupElem]:
        return list(itertools.product(*(range(n) for n in self.cyclic_orders)))

    @cached_property
    def _index(self) -> dict[GroupElem, int]:
        return {x: i for i, x in enumerate(self.elements)}

    @property
    def zero(self) -> GroupElem:
        return tuple(0 for _ in self.cyclic_orders)

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    def elem(self, x) -> GroupElem:
        if isinstance(x, int):
            x = (x,)
        return tuple(int(v) % n for v, n in zip(x, self.cyclic_orders))

    def index(self, x) -> int:
        return self._index[self.elem(x)]

    def add(self, x, y) -> GroupElem:
        return tuple((a + b) % n for a, b, n in zip(x, y, self.cyclic_orders))

    def neg(self, x) -> GroupElem:
        return tuple((-a) % n for a, n in zip(x, self.cyclic_orders))

    def scale(self, k: int, x) -> GroupElem:
        return tuple((k * a) % n for a, n in zip(x, self.cyclic_orders))

    def element_order(self, x) -> int:
        x = self.elem(x)
        return math.lcm(*(n // math.gcd(a, n) for a, n in zip(x, self.cyclic_orders))) if x else 1

    def generators(self) -> list[GroupElem]:
        gens = []
        for i in range(self.rank):
            g = [0] * self.rank
            g[i] = 1
            gens.append(tuple(g))
        return gens

    @cached_property
    def add_table(self) -> np.ndarray:
        els = self.elements
        t = np.empty((len(els), len(els)), dtype=np.int64)
        for i, x in enumerate(els):
            for j, y in enumerate(els):
                t[i, j] = self._index[self.add(x, y)]
        return t

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self._index[self.neg(x)] for x in self.elements], dtype=np.int64)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinAbGroup) and self.cyclic_orders == other.cyclic_orders

    def __hash__(self) -> int:
        return hash(self.cyclic_orders)

    def __repr__(self) -> str:
        if not self.cyclic_orders:
            return "FinAbGroup(trivial)"
        return "FinAbGroup(" + " x ".join(f"Z/{n}" for n in self.cyclic_orders) + ")"

    def to_json(self) -> dict:
        return {"cyclic_orders": list(self.cyclic_orders)}

    @classmethod
    def from_json(cls, doc) -> "FinAbGroup":
        if isinstance(doc, FinAbGroup):
            return doc
        if isinstance(doc, int):
            return cls([doc])
        if isinstance(doc, (list, tuple)):
            return cls(doc)
        return cls(doc["cyclic_orders"])


@dataclass(frozen=True)
class CoeffModule:
    """Trivial coefficient module: mu_L (as exponents) or a finite abelian group."""

    kind: str
    moduli: tuple[int, ...]

    @classmethod
    def roots_of_unity(cls, L: int) -> "CoeffModule":
        return cls("roots_of_unity", (int(L),))

    @classmethod
    def finite_abelian(cls, group: FinAbGroup) -> "CoeffModule":
        return cls("finite_abelian", tuple(group.cyclic_orders))

    @property
    def L(self) -> int:
        if self.kind != "roots_of_unity":
            raise AttributeError("only roots-of-unity modules have an L")
        return self.moduli[0]

    @property
    def group(self) -> FinAbGroup:
        return FinAbGroup(self.moduli)

    @property
    def width(self) -> int:
        return len(self.moduli)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return np.mod(arr, np.asarray(self.moduli, dtype=np.int64))

    def identity(self):
        return 0 if self.kind == "roots_of_unity" else tuple(0 for _ in self.moduli)

    def encode(self, value) -> list[int]:
        if self.kind == "roots_of_unity":
            if isinstance(value, Fraction):
                e = value * self.L
                if e.denominator != 1:
                    raise ValueError(f"{value} turns is not in mu_{self.L}")
                return [int(e) % self.L]
            if isinstance(value, CycNum):
                return self.encode(value.turns())
            return [int(value) % self.L]
        if isinstance(value, int):
            value = (value,)
        return [int(v) % n for v, n in zip(value, self.moduli)]

    def decode(self, vec) -> Union[int, tuple]:
        if self.kind == "roots_of_unity":
            return int(vec[0])
        return tuple(int(v) for v in vec)

    def __repr__(self) -> str:
        if self.kind == "roots_of_unity":
            return f"mu_{self.L}"
        return "Z/" + " x Z/".join(str(n) for n in self.moduli)


def _lift(module: CoeffModule, table: np.ndarray, L: int) -> np.ndarray:
    return table * (L // module.L)


class Cochain:
    """Dense normalized n-cochain G^n -> M with trivial action."""

    def __init__(self, group: FinAbGroup, module: CoeffModule, arity: int, table: np.ndarray):
        shape = (group.order,) * arity + (module.width,)
        table = np.asarray(table, dtype=np.int64)
        if table.shape != shape:
            raise ValueError(f"table shape {table.shape} != {shape}")
        self.group = group
        self.module = module
        self.arity = arity
        self.table = module.reduce(table)
        self.table.setflags(write=False)

    # -- construction -----------------------------------------------------
    @classmethod
    def from_function(cls, group: FinAbGroup, module: CoeffModule, arity: int,
                      fn: Callable[..., object]) -> "Cochain":
        shape = (group.order,) * arity + (module.width,)
        table = np.zeros(shape, dtype=np.int64)
        for idx in itertools.product(range(group.order), repeat=arity):
            args = [group.elements[i] for i in idx]
            table[idx] = module.encode(fn(*args))
        return cls(group, module, arity, table)

    @classmethod
    def from_turns(cls, group: FinAbGroup, arity: int, fn: Callable[..., Fraction],
                   L: Optional[int] = None) -> "Cochain":
        """Roots-of-unity cochain from a function returning fractions of a turn."""
        vals = {}
        den = 1
        for idx in itertools.product(range(group.order), repeat=arity):
            v = Fraction(fn(*[group.elements[i] for i in idx])) % 1
            vals[idx] = v
            den = math.lcm(den, v.denominator)
        if L is None:
            L = den
        elif L % den:
            raise ValueError(f"values need mu_{den}, not mu_{L}")
        table = np.zeros((group.order,) * arity + (1,), dtype=np.int64)
        for idx, v in vals.items():
            table[idx] = int(v * L)
        return cls(group, CoeffModule.roots_of_unity(L), arity, table)

    @classmethod
    def identity(cls, group: FinAbGroup, module: CoeffModule, arity: int) -> "Cochain":
        return cls(group, module, arity, np.zeros((group.order,) * arity + (module.width,), dtype=np.int64))

    # -- access -------------------------------------------------------------
    def _idx(self, args) -> tuple[int, ...]:
        if len(args) != self.arity:
            raise TypeError(f"expected {self.arity} arguments")
        return tuple(self.group.index(a) for a in args)

    def __call__(self, *args):
        return self.module.decode(self.table[self._idx(args)])

    def turns(self, *args) -> Fraction:
        if self.module.kind != "roots_of_unity":
            raise TypeError("turns() needs a roots-of-unity module")
        return Fraction(int(self.table[self._idx(args)][0]), self.module.L)

    def scalar(self, *args) -> CycNum:
        t = self.turns(*args)
        return root_of_unity(t.denominator, t.numerator)

    # -- module arithmetic ----------------------------------------------------
    def promote(self, L: int) -> "Cochain":
        if self.module.kind != "roots_of_unity":
            raise TypeError("only roots-of-unity cochains can be promoted")
        if L % self.module.L:
            raise ValueError(f"mu_{self.module.L} is not inside mu_{L}")
        return Cochain(self.group, CoeffModule.roots_of_unity(L), self.arity, _lift(self.module, self.table, L))

    def simplify(self) -> "Cochain":
        """Shrink mu_L to the smallest L that holds every value."""
        if self.module.kind != "roots_of_unity":
            return self
        L = self.module.L
        g = math.gcd(L, *map(int, np.unique(self.table)))
        return Cochain(self.group, CoeffModule.roots_of_unity(L // g), self.arity, self.table // g)

    def _aligned(self, other: "Cochain") -> tuple[np.ndarray, np.ndarray, CoeffModule]:
        if self.group != other.group or self.arity != other.arity:
            raise ValueError("cochains live on different groups or arities")
        if self.module.kind != other.module.kind:
            raise ValueError("incompatible coefficient modules")
        if self.module.kind == "roots_of_unity":
            L = math.lcm(self.module.L, other.module.L)
            return _lift(self.module, self.table, L), _lift(other.module, other.table, L), CoeffModule.roots_of_unity(L)
        if self.module != other.module:
            raise ValueError("incompatible coefficient modules")
        return self.table, other.table, self.module

    def __add__(self, other: "Cochain") -> "Cochain":
        a, b, m = self._aligned(other)
        return Cochain(self.group, m, self.arity, a + b)

    __mul__ = __add__  # multiplicative reading for scalar cochains

    def __neg__(self) -> "Cochain":
        return Cochain(self.group, self.module, self.arity, -self.table)

    inverse = __neg__

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    __truediv__ = __sub__

    def scaled(self, k: int) -> "Cochain":
        return Cochain(self.group, self.module, self.arity, k * self.table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        try:
            a, b, _ = self._aligned(other)
        except ValueError:
            return False
        return bool(np.array_equal(a, b))

    def __hash__(self) -> int:
        c = self.simplify()
        return hash((c.group, c.module, c.arity, c.table.tobytes()))

    def is_identity(self) -> bool:
        return not self.table.any()

    def is_normalized(self) -> bool:
        for axis in range(self.arity):
            sl = [slice(None)] * self.arity
            sl[axis] = 0
            if self.table[tuple(sl)].any():
                return False
        return True

    def values(self) -> list:
        """Flat list of decoded values in lexicographic argument order."""
        flat = self.table.reshape(-1, self.module.width)
        return [self.module.decode(v) for v in flat]

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "arity": self.arity,
            "module": {"kind": self.module.kind, "moduli": list(self.module.moduli)},
            "values": [v if isinstance(v, int) else list(v) for v in self.values()],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Cochain":
        group = FinAbGroup.from_json(doc["group"])
        module = CoeffModule(doc["module"]["kind"], tuple(doc["module"]["moduli"]))
        arity = int(doc["arity"])
        flat = np.array([v if isinstance(v, list) else [v] for v in doc["values"]], dtype=np.int64)
        return cls(group, module, arity, flat.reshape((group.order,) * arity + (module.width,)))

    def __repr__(self) -> str:
        return f"Cochain(arity={self.arity}, {self.group!r}, {self.module!r})"


# -- differentials ------------------------------------------------------------

def _grids(k: int, n: int) -> list[np.ndarray]:
    """Open index grids for k axes of length n."""
    out = []
    for axis in range(k):
        shape = [1] * k
        shape[axis] = n
        out.append(np.arange(n).reshape(shape))
    return out


def _coboundary_table(group: FinAbGroup, table: np.ndarray, arity: int) -> np.ndarray:
    n = arity
    G = group.order
    if n == 0:
        return np.zeros((G,) + table.shape, dtype=np.int64)
    add = group.add_table
    I = _grids(n + 1, G)
    full = (G,) * (n + 1) + table.shape[n:]
    out = np.broadcast_to(table[tuple(I[1:])], full).copy()
    for i in range(n):
        idx = I[:i] + [add[I[i], I[i + 1]]] + I[i + 2:]
        out += (-1) ** (i + 1) * table[tuple(idx)]
    out += (-1) ** (n + 1) * table[tuple(I[:n])]
    return out


def differential(f: Cochain) -> Cochain:
    """The coboundary (delta f)(g_1..g_{n+1}) with trivial action."""
    return Cochain(f.group, f.module, f.arity + 1, _coboundary_table(f.group, f.table, f.arity))


def is_cocycle(f: Cochain) -> bool:
    return differential(f).is_identity()


# -- linear algebra over Z/M ------------------------------------------------------

def _factor(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _valuation(x: np.ndarray, p: int, cap: int) -> np.ndarray:
    v = np.full(x.shape, cap, dtype=np.int64)
    nz = x != 0
    y = x.copy()
    cur = np.zeros(x.shape, dtype=np.int64)
    while True:
        div = nz & (y % p == 0) & (cur < cap)
        if not div.any():
            break
        y = np.where(div, y // p, y)
        cur = cur + div
    v[nz] = cur[nz]
    return v


class _LocalSmith:
    """Diagonalization P A Q = D over Z/p^k, reusable for many right-hand sides."""

    def __init__(self, A: np.ndarray, p: int, k: int):
        q = p**k
        M = np.mod(A, q).astype(np.int64)
        rows, cols = M.shape
        P = np.eye(rows, dtype=np.int64)
        Q = np.eye(cols, dtype=np.int64)
        pivots: list[int] = []
        r = 0
        while r < rows and r < cols:
            sub = M[r:, r:]
            if not sub.any():
                break
            val = _valuation(sub, p, k)
            i, j = np.unravel_index(np.argmin(val), val.shape)
            v = int(val[i, j])
            i += r
            j += r
            M[[r, i]] = M[[i, r]]
            P[[r, i]] = P[[i, r]]
            M[:, [r, j]] = M[:, [j, r]]
            Q[:, [r, j]] = Q[:, [j, r]]
            pv = p**v
            inv = pow(int(M[r, r]) // pv, -1, q)
            M[r] = np.mod(M[r] * inv, q)
            P[r] = np.mod(P[r] * inv, q)
            f = M[r + 1:, r] // pv
            M[r + 1:] = np.mod(M[r + 1:] - np.outer(f, M[r]), q)
            P[r + 1:] = np.mod(P[r + 1:] - np.outer(f, P[r]), q)
            g = M[r, r + 1:] // pv
            M[:, r + 1:] = np.mod(M[:, r + 1:] - np.outer(M[:, r], g), q)
            Q[:, r + 1:] = np.mod(Q[:, r + 1:] - np.outer(Q[:, r], g), q)
            pivots.append(pv)
            r += 1
        self.q, self.P, self.Q = q, P, Q
        self.pivots = np.array(pivots, dtype=np.int64)

    def solve(self, b: np.ndarray) -> Optional[np.ndarray]:
        q = self.q
        c = np.mod(self.P @ np.mod(b, q), q)
        r = len(self.pivots)
        if c[r:].any() or np.mod(c[:r], self.pivots).any():
            return None
        y = np.zeros(self.Q.shape[1], dtype=np.int64)
        y[:r] = c[:r] // self.pivots
        return np.mod(self.Q @ y, q)


def _solve_with(factors: Callable[[int, int], _LocalSmith], b: np.ndarray, M: int, ncols: int) -> Optional[np.ndarray]:
    x = np.zeros(ncols, dtype=np.int64)
    modulus = 1
    for p, k in _factor(M):
        part = factors(p, k).solve(b)
        if part is None:
            return None
        q = p**k
        inv = pow(modulus, -1, q) if modulus > 1 else 1
        x = x + modulus * np.mod((part - x) * inv, q)
        modulus *= q
    return np.mod(x, M)


def solve_mod(A, b, M: int) -> Optional[np.ndarray]:
    """One solution of A x = b over Z/M, or None when the system is inconsistent."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if A.ndim != 2 or A.shape[0] != b.shape[0]:
        raise ValueError("shape mismatch")
    if M == 1:
        return np.zeros(A.shape[1], dtype=np.int64)
    if A.shape[1] == 0:
        return None if np.mod(b, M).any() else np.zeros(0, dtype=np.int64)
    return _solve_with(lambda p, k: _LocalSmith(A, p, k), b, M, A.shape[1])


@functools.lru_cache(maxsize=None)
def _coboundary_matrix(group: FinAbGroup, arity: int) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    """Matrix of delta from normalized (arity)-cochains to all (arity+1)-tuples."""
    G = group.order
    unknowns = list(itertools.product(range(1, G), repeat=arity))
    col = {u: i for i, u in enumerate(unknowns)}
    add = group.add_table
    rows = list(itertools.product(range(G), repeat=arity + 1))
    mat = np.zeros((len(rows), len(unknowns)), dtype=np.int64)
    n = arity
    for r, g in enumerate(rows):
        terms = [(g[1:], 1)]
        for i in range(n):
            merged = g[:i] + (int(add[g[i], g[i + 1]]),) + g[i + 2:]
            terms.append((merged, (-1) ** (i + 1)))
        terms.append((g[:n], (-1) ** (n + 1)))
        for args, sign in terms:
            if 0 in args:
                continue
            mat[r, col[args]] += sign
    return mat, unknowns


@functools.lru_cache(maxsize=None)
def _smith(group: FinAbGroup, arity: int, p: int, k: int) -> _LocalSmith:
    return _LocalSmith(_coboundary_matrix(group, arity)[0], p, k)


def _solve_coboundary(group: FinAbGroup, arity: int, rhs: np.ndarray, M: int) -> Optional[np.ndarray]:
    ncols = len(_coboundary_matrix(group, arity)[1])
    if M == 1:
        return np.zeros(ncols, dtype=np.int64)
    if ncols == 0:
        return None if np.mod(rhs, M).any() else np.zeros(0, dtype=np.int64)
    return _solve_with(lambda p, k: _smith(group, arity, p, k), rhs, M, ncols)


def coboundary_witness(f: Cochain, extend: bool = True) -> Optional[Cochain]:
    """Return g with delta g = f, or None.

    For mu_L coefficients the search runs in mu_{L|G|} when ``extend`` is set:
    a cocycle that dies in the divisible group of all roots of unity already
    dies there, so ``None`` then certifies a nonzero class over C^x.
    """
    if f.arity == 0:
        raise ValueError("0-cochains are not coboundaries")
    group = f.group
    n = f.arity - 1
    mat, unknowns = _coboundary_matrix(group, n)
    if f.module.kind == "roots_of_unity":
        L = f.module.L * (group.order if extend else 1)
        rhs = _lift(f.module, f.table, L).reshape(-1)
        x = _solve_coboundary(group, n, rhs, L)
        if x is None:
            return None
        module = CoeffModule.roots_of_unity(L)
        table = np.zeros((group.order,) * n + (1,), dtype=np.int64)
        for u, val in zip(unknowns, x):
            table[u] = val
        return Cochain(group, module, n, table).simplify()
    table = np.zeros((group.order,) * n + (f.module.width,), dtype=np.int64)
    flat = f.table.reshape(-1, f.module.width)
    for c, m in enumerate(f.module.moduli):
        x = _solve_coboundary(group, n, flat[:, c], m)
        if x is None:
            return None
        for u, val in zip(unknowns, x):
            table[u + (c,)] = val
    return Cochain(group, f.module, n, table)


# -- cyclic representatives ------------------------------------------------------

def cyclic_cochain(kind: str, N: int, nu, module: CoeffModule, strict: bool = True) -> Cochain:
    """beta_nu, gamma_nu or lambda_nu on Z/N (representatives 0 <= i < N).

    beta(i) = i nu; gamma(i,j) = nu if i+j >= N; lambda(i,j,k) = k nu if i+j >= N.
    With ``strict`` the lambda kind insists on N nu = 0 (the cocycle case).
    """
    group = FinAbGroup.cyclic(N)
    v = np.asarray(module.encode(nu), dtype=np.int64)
    if kind == "beta":
        table = np.array([i * v for i in range(N)])
        return Cochain(group, module, 1, table)
    if kind == "gamma":
        table = np.zeros((N, N, module.width), dtype=np.int64)
        for i in range(N):
            for j in range(N):
                if i + j >= N:
                    table[i, j] = v
        return Cochain(group, module, 2, table)
    if kind == "lambda":
        if strict and module.reduce(N * v).any():
            raise ValueError("lambda_nu is a cocycle only when N*nu = 0")
        table = np.zeros((N, N, N, module.width), dtype=np.int64)
        for i in range(N):
            for j in range(N):
                if i + j >= N:
                    for k in range(N):
                        table[i, j, k] = k * v
        return Cochain(group, module, 3, table)
    raise ValueError(f"unknown cyclic cochain kind {kind!r}")


# -- bipartite cochains and shuffles -----------------------------------------------

class BipartiteCochain:
    """A map A^p | A^q -> M stored as a dense table with p + q argument axes."""

    def __init__(self, group: FinAbGroup, module: CoeffModule, p: int, q: int, table: np.ndarray):
        shape = (group.order,) * (p + q) + (module.width,)
        table = np.asarray(table, dtype=np.int64)
        if table.shape != shape:
            raise ValueError(f"table shape {table.shape} != {shape}")
        self.group, self.module, self.p, self.q = group, module, p, q
        self.table = module.reduce(table)

    @classmethod
    def from_function(cls, group: FinAbGroup, module: CoeffModule, p: int, q: int, fn) -> "BipartiteCochain":
        flat = Cochain.from_function(group, module, p + q, lambda *a: fn(a[:p], a[p:]))
        return cls(group, module, p, q, flat.table)

    @classmethod
    def zero(cls, group: FinAbGroup, module: CoeffModule, p: int, q: int) -> "BipartiteCochain":
        return cls(group, module, p, q, np.zeros((group.order,) * (p + q) + (module.width,), dtype=np.int64))

    def __call__(self, left: Sequence, right: Sequence):
        idx = tuple(self.group.index(a) for a in list(left) + list(right))
        return self.module.decode(self.table[idx])

    def _check(self, other: "BipartiteCochain"):
        if (self.group, self.module, self.p, self.q) != (other.group, other.module, other.p, other.q):
            raise ValueError("bipartite cochains of different shapes")

    def __add__(self, other: "BipartiteCochain") -> "BipartiteCochain":
        self._check(other)
        return BipartiteCochain(self.group, self.module, self.p, self.q, self.table + other.table)

    __mul__ = __add__

    def __neg__(self) -> "BipartiteCochain":
        return BipartiteCochain(self.group, self.module, self.p, self.q, -self.table)

    def __sub__(self, other: "BipartiteCochain") -> "BipartiteCochain":
        return self + (-other)

    def scaled(self, k: int) -> "BipartiteCochain":
        return BipartiteCochain(self.group, self.module, self.p, self.q, k * self.table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteCochain):
            return NotImplemented
        return (self.p, self.q) == (other.p, other.q) and np.array_equal(self.table, other.table)

    def is_identity(self) -> bool:
        return not self.table.any()

    def slot(self, left: Sequence) -> Cochain:
        """Fix the left block; the result is a q-cochain in the right block."""
        idx = tuple(self.group.index(a) for a in left)
        return Cochain(self.group, self.module, self.q, self.table[idx])

    def __repr__(self) -> str:
        return f"BipartiteCochain({self.p}|{self.q}, {self.group!r}, {self.module!r})"


def _perm_sign(perm: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def shuffles(p: int, q: int) -> list[tuple[tuple[int, ...], int]]:
    """(p,q)-shuffles as position maps pi (a_i goes to slot pi(i)) with signs."""
    out = []
    n = p + q
    for left in itertools.combinations(range(n), p):
        right = tuple(i for i in range(n) if i not in left)
        pi = left + right
        out.append((pi, _perm_sign(pi)))
    return out


def shuffle(f: Cochain, p: int) -> BipartiteCochain:
    """The p-th shuffle: alternating sum of f over interleavings of the two blocks."""
    n = f.arity
    if not 1 <= p <= n - 1:
        raise ValueError("shuffle index must satisfy 1 <= p <= n-1")
    total = np.zeros_like(f.table)
    for pi, sign in shuffles(p, n - p):
        total = total + sign * np.transpose(f.table, list(pi) + [n])
    return BipartiteCochain(f.group, f.module, p, n - p, total)


def delta_h(F: BipartiteCochain) -> BipartiteCochain:
    """Differential in the left block."""
    p, q = F.p, F.q
    G = F.group.order
    # move the right block into the module slot: a p-cochain with values in arrays
    t = F.table.reshape((G,) * p + (-1,))
    out = _coboundary_table(F.group, t, p)
    return BipartiteCochain(F.group, F.module, p + 1, q, out.reshape((G,) * (p + 1 + q) + (F.module.width,)))


def delta_v(F: BipartiteCochain) -> BipartiteCochain:
    """Differential in the right block."""
    p, q = F.p, F.q
    G = F.group.order
    axes = list(range(p, p + q)) + list(range(p)) + [p + q]
    t = np.transpose(F.table, axes).reshape((G,) * q + (-1,))
    out = _coboundary_table(F.group, t, q).reshape((G,) * (q + 1) + (G,) * p + (F.module.width,))
    back = list(range(q + 1, q + 1 + p)) + list(range(q + 1)) + [p + q + 1]
    return BipartiteCochain(F.group, F.module, p, q + 1, np.transpose(out, back))


def bipartite_differentials(F: BipartiteCochain) -> tuple[BipartiteCochain, BipartiteCochain]:
    return delta_h(F), delta_v(F)


# -- cup products -----------------------------------------------------------------

def cup_with_pairing(lam2: Cochain, pairing: Callable[[tuple, tuple], int]) -> Cochain:
    """(a1..a4) -> pairing(lam2(a1,a2), lam2(a3,a4)) as a mu_2-valued 4-cochain.

    ``pairing`` returns 0 or 1 (the exponent of -1).
    """
    if lam2.arity != 2:
        raise ValueError("expected a 2-cochain")
    G = lam2.group.order
    mod = CoeffModule.roots_of_unity(2)
    vals = [lam2.module.decode(v) for v in lam2.table.reshape(-1, lam2.module.width)]
    cache: dict[tuple, int] = {}
    table = np.zeros((G,) * 4 + (1,), dtype=np.int64)
    for i in range(G * G):
        for j in range(G * G):
            key = (vals[i], vals[j])
            if key not in cache:
                cache[key] = int(pairing(vals[i], vals[j])) % 2
            table[i // G, i % G, j // G, j % G, 0] = cache[key]
    return Cochain(lam2.group, mod, 4, table)


# -- characters ---------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """x -> exp(2 pi i sum_k e_k x_k / n_k) on a FinAbGroup."""

    group: FinAbGroup
    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(e) % n for e, n in zip(self.exps, self.group.cyclic_orders)))

    @classmethod
    def trivial(cls, group: FinAbGroup) -> "Character":
        return cls(group, tuple(0 for _ in group.cyclic_orders))

    def turns(self, x) -> Fraction:
        x = self.group.elem(x)
        return sum((Fraction(e * a, n) for e, a, n in zip(self.exps, x, self.group.cyclic_orders)), Fraction(0)) % 1

    def __call__(self, x) -> CycNum:
        t = self.turns(x)
        return root_of_unity(t.denominator, t.numerator)

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.group, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def inverse(self) -> "Character":
        return Character(self.group, tuple(-a for a in self.exps))

    def __truediv__(self, other: "Character") -> "Character":
        return self * other.inverse()

    def is_trivial(self) -> bool:
        return not any(self.exps)

    def to_json(self) -> list[int]:
        return list(self.exps)


def enumerate_characters(A: FinAbGroup) -> list[Character]:
    return [Character(A, e) for e in A.elements]


def _bichar_table(A: FinAbGroup, mat: dict[tuple[int, int], int]) -> Cochain:
    L = A.exponent
    def fn(x, y):
        t = Fraction(0)
        for (i, j), e in mat.items():
            t += Fraction(e * x[i] * y[j], math.gcd(A.cyclic_orders[i], A.cyclic_orders[j]))
        return t
    return Cochain.from_turns(A, 2, fn, L)


def enumerate_bicharacters(A: FinAbGroup) -> list[Cochain]:
    """All bicharacters A x A -> mu_e, as 2-cochains with values in mu_exp(A)."""
    pairs = [(i, j) for i in range(A.rank) for j in range(A.rank)]
    ranges = [range(math.gcd(A.cyclic_orders[i], A.cyclic_orders[j])) for i, j in pairs]
    out = []
    for choice in itertools.product(*ranges):
        out.append(_bichar_table(A, dict(zip(pairs, choice))))
    return out


def enumerate_alternating_bicharacters(A: FinAbGroup) -> list[Cochain]:
    out = []
    for b in enumerate_bicharacters(A):
        if all(b(x, x) == 0 for x in A.elements):
            out.append(b)
    return out


# -- third cohomology representatives ---------------------------------------------------

def _h3_order(A: FinAbGroup) -> int:
    n = A.cyclic_orders
    out = math.prod(n)
    for i, j in itertools.combinations(range(len(n)), 2):
        out *= math.gcd(n[i], n[j])
    for i, j, k in itertools.combinations(range(len(n)), 3):
        out *= math.gcd(n[i], n[j], n[k])
    return out


def _h3_generators(A: FinAbGroup) -> list[Cochain]:
    n = A.cyclic_orders
    L = A.exponent
    gens = []
    for i in range(A.rank):
        # lambda_nu on the i-th factor, nu a primitive n_i-th root
        gens.append(Cochain.from_turns(
            A, 3, lambda x, y, z, i=i: Fraction(z[i], n[i]) if x[i] + y[i] >= n[i] else Fraction(0), L))
    for i, j in itertools.permutations(range(A.rank), 2):
        g = math.gcd(n[i], n[j])
        gens.append(Cochain.from_turns(
            A, 3, lambda x, y, z, i=i, j=j, g=g: Fraction(z[j], g) if x[i] + y[i] >= n[i] else Fraction(0), L))
    for i, j, k in itertools.combinations(range(A.rank), 3):
        g = math.gcd(n[i], n[j], n[k])
        gens.append(Cochain.from_turns(A, 3, lambda x, y, z, i=i, j=j, k=k, g=g: Fraction(x[i] * y[j] * z[k], g), L))
    return gens


def cohomologous(f: Cochain, g: Cochain) -> bool:
    return coboundary_witness(f - g) is not None


def h3_representatives(A: FinAbGroup) -> list[Cochain]:
    """One normalized 3-cocycle in mu_exp(A) for each class of H^3(A, C^x)."""
    target = _h3_order(A)
    reps = [Cochain.identity(A, CoeffModule.roots_of_unity(A.exponent), 3)]
    frontier = list(reps)
    gens = _h3_generators(A)
    while frontier and len(reps) < target:
        nxt = []
        for c in frontier:
            for g in gens:
                cand = c + g
                if not any(cohomologous(cand, r) for r in reps):
                    reps.append(cand)
                    nxt.append(cand)
        frontier = nxt
    if len(reps) != target:
        raise ArithmeticError(f"found {len(reps)} classes, expected {target}")
    return reps


# -- subgroups -------------------------------------------------------------------------

def subgroup_basis(G: FinAbGroup, elements: Iterable[GroupElem]) -> list[GroupElem]:
    """Independent generators k_1..k_r with <elements> = <k_1> x ... x <k_r>."""
    sub = set()
    frontier = {G.zero}
    gens = [G.elem(x) for x in elements]
    while frontier:
        sub |= frontier
        frontier = {G.add(x, g) for x in frontier for g in gens} - sub
    size = len(sub)
    if size == 1:
        return []
    cands = sorted(sub - {G.zero}, key=lambda x: (-G.element_order(x), x))
    for r in range(1, size.bit_length() + 1):
        for combo in itertools.combinations(cands, r):
            if math.prod(G.element_order(c) for c in combo) != size:
                continue
            span = {G.zero}
            for c in combo:
                span = {G.add(x, G.scale(k, c)) for x in span for k in range(G.element_order(c))}
            if len(span) == size:
                return list(combo)
    raise ArithmeticError("no basis found")
