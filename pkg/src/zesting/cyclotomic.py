"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A :class:`CycNum` stores an element of Q(zeta_n) in the power basis
1, z, ..., z^(phi(n)-1), reduced modulo the n-th cyclotomic polynomial.
Coefficients are kept as a tuple of Python integers over one positive common
denominator, so products never overflow and equality is exact.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

__all__ = [
    "CycNum",
    "MAX_ORDER",
    "root_of_unity",
    "arith",
    "conjugate",
    "promote",
    "as_root_of_unity",
    "approx",
    "cyc",
    "parse",
    "sqrt_int",
]

#: Largest field order arithmetic will promote to.  Raise it if needed.
MAX_ORDER = 256

Number = Union["CycNum", int, Fraction]


@lru_cache(maxsize=None)
def _phi_poly(n: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    from sympy import Poly, Symbol, cyclotomic_poly

    x = Symbol("x")
    coeffs = Poly(cyclotomic_poly(n, x), x).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e is the reduced power-basis vector of zeta_n^e, 0 <= e < n."""
    phi = _phi_poly(n)
    d = len(phi) - 1
    rows = []
    cur = [0] * d
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x, then reduce x^d = -sum phi_i x^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(d):
                cur[i] -= top * phi[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _degree(n: int) -> int:
    return len(_phi_poly(n)) - 1


def _reduce_exponent_form(n: int, bins: dict[int, int] | list[int]) -> list[int]:
    """Turn a sum of integer multiples of zeta_n^e into power-basis integers."""
    table = _power_table(n)
    d = _degree(n)
    out = [0] * d
    items = bins.items() if isinstance(bins, dict) else enumerate(bins)
    for e, c in items:
        if not c:
            continue
        if e < d:
            out[e] += c
            continue
        row = table[e]
        for i in range(d):
            if row[i]:
                out[i] += c * row[i]
    return out


class CycNum:
    """Element of the cyclotomic field Q(zeta_order).

    Construct with :func:`root_of_unity`, :func:`cyc` or arithmetic on
    existing values; the raw constructor expects already-reduced data.
    """

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, num: Iterable[int], den: int = 1):
        if order < 1:
            raise ValueError("order must be positive")
        num = list(num)
        d = _degree(order)
        if len(num) != d:
            raise ValueError(f"expected {d} coefficients for order {order}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = den
        for c in num:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        self.order = order
        self._num = tuple(num)
        self._den = den
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rational(cls, value: Union[int, Fraction], order: int = 1) -> "CycNum":
        value = Fraction(value)
        num = [0] * _degree(order)
        num[0] = value.numerator
        return cls(order, num, value.denominator)

    @classmethod
    def from_exponents(cls, order: int, bins: dict[int, Union[int, Fraction]]) -> "CycNum":
        """Build sum c_e zeta_order^e from a sparse exponent map."""
        den = 1
        for c in bins.values():
            den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
        ints = {e % order: 0 for e in bins}
        for e, c in bins.items():
            ints[e % order] += int(Fraction(c) * den)
        return cls(order, _reduce_exponent_form(order, ints), den)

    # -- views --------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Nonzero power-basis coefficients as exact rationals."""
        return {k: Fraction(c, self._den) for k, c in enumerate(self._num) if c}

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # -- order handling -----------------------------------------------
    def promote(self, m: int) -> "CycNum":
        if m % self.order:
            raise ValueError(f"order {self.order} does not divide {m}")
        if m == self.order:
            return self
        if m > MAX_ORDER:
            raise OverflowError(f"order {m} exceeds MAX_ORDER={MAX_ORDER}")
        step = m // self.order
        bins = {k * step: c for k, c in enumerate(self._num) if c}
        return CycNum(m, _reduce_exponent_form(m, bins), self._den)

    def minimal(self) -> "CycNum":
        """Same number at the smallest order whose field contains it."""
        n = self.order
        if n == 1:
            return self
        if self.is_rational():
            return CycNum(1, [self._num[0]], self._den)
        for d in _divisors(n):
            if d == n:
                return self
            cand = self._demote(d)
            if cand is not None:
                return cand
        return self

    def _demote(self, d: int) -> Optional["CycNum"]:
        # a number lies in Q(zeta_d) iff it is fixed by every sigma_k with
        # k = 1 mod d; then solve for its coordinates at order d
        n = self.order
        for k in range(1, n, d):
            if math.gcd(k, n) == 1 and k != 1 and self.galois(k) != self:
                return None
        step = n // d
        dd = _degree(d)
        table = _power_table(n)
        # columns: images of zeta_d^j in the order-n basis
        cols = [table[(j * step) % n] for j in range(dd)]
        target = [Fraction(c, self._den) for c in self._num]
        sol = _solve_rational(cols, target)
        if sol is None:
            return None
        den = 1
        for s in sol:
            den = den * s.denominator // math.gcd(den, s.denominator)
        return CycNum(d, [int(s * den) for s in sol], den)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other: Number) -> "CycNum":
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_rational(other, self.order)
        return NotImplemented  # type: ignore[return-value]

    @staticmethod
    def _common(a: "CycNum", b: "CycNum") -> tuple["CycNum", "CycNum", int]:
        if a.order == b.order:
            return a, b, a.order
        m = math.lcm(a.order, b.order)
        return a.promote(m), b.promote(m), m

    def __add__(self, other: Number) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, m = self._common(self, other)
        den = a._den * b._den // math.gcd(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        return CycNum(m, [x * fa + y * fb for x, y in zip(a._num, b._num)], den)

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum(self.order, [-c for c in self._num], self._den)

    def __sub__(self, other: Number) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "CycNum":
        return (-self) + other

    def __mul__(self, other: Number) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, m = self._common(self, other)
        bins = [0] * (2 * len(a._num))
        bn = [(j, y) for j, y in enumerate(b._num) if y]
        for i, x in enumerate(a._num):
            if x:
                for j, y in bn:
                    bins[i + j] += x * y
        folded: dict[int, int] = {}
        for e, c in enumerate(bins):
            if c:
                folded[e % m] = folded.get(e % m, 0) + c
        return CycNum(m, _reduce_exponent_form(m, folded), a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        nz = [(k, c) for k, c in enumerate(self._num) if c]
        if len(nz) == 1:
            k, c = nz[0]
            bins = {(-k) % self.order: 1}
            unit = CycNum(self.order, _reduce_exponent_form(self.order, bins))
            return unit * Fraction(self._den, c)
        # product of the other Galois conjugates over the (rational) norm
        n = self.order
        others = [k for k in range(2, n) if math.gcd(k, n) == 1]
        prod = CycNum.from_rational(1, n)
        for k in others:
            prod = prod * self.galois(k)
        norm = (prod * self).minimal()
        if not norm.is_rational():
            raise ArithmeticError("norm computation failed")
        return prod * (1 / norm.rational())

    def __truediv__(self, other: Number) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, CycNum) and other.is_zero():
            raise ZeroDivisionError("division by zero CycNum")
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> "CycNum":
        return self._coerce(other) / self

    def __pow__(self, k: int) -> "CycNum":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum.from_rational(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, k: int) -> "CycNum":
        """Image under zeta -> zeta^k (k coprime to the order)."""
        n = self.order
        if math.gcd(k, n) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        bins: dict[int, int] = {}
        for e, c in enumerate(self._num):
            if c:
                t = (e * k) % n
                bins[t] = bins.get(t, 0) + c
        return CycNum(n, _reduce_exponent_form(n, bins), self._den)

    def conjugate(self) -> "CycNum":
        return self.galois(-1 % self.order) if self.order > 2 else self

    # -- comparison ---------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational() == other
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b, _ = self._common(self, other)
        return a._den == b._den and a._num == b._num

    def __hash__(self) -> int:
        if self._hash is None:
            m = self.minimal()
            self._hash = hash((m.order, m._num, m._den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- numerics and display ------------------------------------------
    def approx(self) -> complex:
        z = cmath.exp(2j * math.pi / self.order)
        return sum(c * z**k for k, c in enumerate(self._num)) / self._den

    def __complex__(self) -> complex:
        return self.approx()

    def as_root_of_unity(self) -> Optional[tuple[int, int]]:
        """Return minimal (n, k) with self = zeta_n^k, or None."""
        z = self.approx()
        if abs(abs(z) - 1) > 1e-9:
            return None
        turns = Fraction(cmath.phase(z) / (2 * math.pi)).limit_denominator(4 * MAX_ORDER) % 1
        n, k = turns.denominator, turns.numerator
        if n > 2 * MAX_ORDER or root_of_unity(n, k) != self:
            # search exhaustively over the field's own roots
            m = self.order if self.order % 2 == 0 else 2 * self.order
            for j in range(m):
                if root_of_unity(m, j) == self:
                    t = Fraction(j, m)
                    return (t.denominator, t.numerator)
            return None
        return (n, k)

    def turns(self) -> Fraction:
        """Root of unity as a fraction of a full turn in [0, 1)."""
        r = self.as_root_of_unity()
        if r is None:
            raise ValueError(f"{self} is not a root of unity")
        return Fraction(r[1], r[0])

    def __repr__(self) -> str:
        return f"CycNum({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        r = self.as_root_of_unity()
        if r is not None:
            n, k = r
            if n == 1:
                return "1"
            if n == 2:
                return "-1"
            return f"zeta({n})^{k}"
        out = ""
        for k, c in self.coeffs.items():
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if k == 0:
                body = str(c)
            elif c == 1:
                body = f"zeta({self.order})^{k}"
            else:
                body = f"{c}*zeta({self.order})^{k}"
            if not out:
                out = body if sign == "+" else "-" + body
            else:
                out += f" {sign} {body}"
        return out

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": {str(k): [c.numerator, c.denominator] for k, c in self.coeffs.items()},
        }

    @classmethod
    def from_json(cls, doc) -> "CycNum":
        if isinstance(doc, CycNum):
            return doc
        if isinstance(doc, (int, Fraction)):
            return cls.from_rational(doc)
        if isinstance(doc, str):
            return parse(doc)
        if not isinstance(doc, dict) or "order" not in doc:
            raise ValueError(f"cannot read scalar from {doc!r}")
        n = int(doc["order"])
        d = _degree(n)
        coeffs = doc.get("coeffs", {})
        vals = [Fraction(0)] * d
        for k, pair in coeffs.items():
            k = int(k)
            if not 0 <= k < d:
                raise ValueError(f"exponent {k} out of range for order {n}")
            if isinstance(pair, (list, tuple)):
                vals[k] = Fraction(int(pair[0]), int(pair[1]))
            else:
                vals[k] = Fraction(pair)
        den = 1
        for v in vals:
            den = den * v.denominator // math.gcd(den, v.denominator)
        return cls(n, [int(v * den) for v in vals], den)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _solve_rational(cols: list[tuple[int, ...]], target: list[Fraction]) -> Optional[list[Fraction]]:
    """Solve sum_j x_j cols[j] = target exactly; None if inconsistent."""
    rows = len(target)
    ncol = len(cols)
    mat = [[Fraction(cols[j][i]) for j in range(ncol)] + [target[i]] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        pv = mat[r][c]
        mat[r] = [v / pv for v in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, rows):
        if mat[i][-1] != 0:
            return None
    sol = [Fraction(0)] * ncol
    for i, c in enumerate(piv_cols):
        sol[c] = mat[i][-1]
    return sol


# -- module-level operations -------------------------------------------

def root_of_unity(n: int, k: int = 1) -> CycNum:
    """zeta_n^k = exp(2 pi i k / n) in canonical form at order n."""
    if n < 1:
        raise ValueError("n must be positive")
    return CycNum(n, _power_table(n)[k % n])


def cyc(value: Union[int, Fraction, str, dict, CycNum]) -> CycNum:
    """Coerce a rational, string or JSON document into a CycNum."""
    return CycNum.from_json(value)


def arith(a: CycNum, b: CycNum, kind: str) -> CycNum:
    ops = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    if kind not in ops:
        raise ValueError(f"unknown operation {kind!r}")
    return ops[kind]()


def conjugate(a: CycNum) -> CycNum:
    return a.conjugate()


def promote(a: CycNum, m: int) -> CycNum:
    return a.promote(m)


def as_root_of_unity(a: CycNum) -> Optional[tuple[int, int]]:
    return a.as_root_of_unity()


def approx(a: CycNum) -> tuple[float, float]:
    z = a.approx()
    return (z.real, z.imag)


def sqrt_int(m: int) -> CycNum:
    """Positive square root of a positive integer, via quadratic Gauss sums."""
    if m <= 0:
        raise ValueError("need a positive integer")
    rest = m
    sq = 1
    p = 2
    while p * p <= rest:
        while rest % (p * p) == 0:
            rest //= p * p
            sq *= p
        p += 1
    out = CycNum.from_rational(sq)
    for q in _prime_factors(rest):
        out = out * _sqrt_prime(q)
    return out


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _sqrt_prime(p: int) -> CycNum:
    if p == 2:
        return root_of_unity(8, 1) + root_of_unity(8, -1)
    # g = sum_a (a/p) zeta_p^a has g^2 = (-1)^((p-1)/2) p
    bins = {a: _legendre(a, p) for a in range(1, p)}
    g = CycNum.from_exponents(p, bins)
    if p % 4 == 1:
        return g
    return g * root_of_unity(4, -1)  # sqrt(p) = -i * g


def _legendre(a: int, p: int) -> int:
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


_TOKEN = re.compile(r"^zeta\((\d+)\)(?:\^(-?\d+))?$")


def parse(text: str) -> CycNum:
    """Read "zeta(n)^k", "-zeta(n)^k", "-1", "1/2" and sums of those."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar string")
    raw = [t for t in re.split(r"(?<!\^)(?=[+-])", s) if t]
    terms: list[str] = []
    pending = ""
    for t in raw:
        if t in "+-":
            pending += t
            continue
        neg = (pending + t[:1]).count("-") % 2 if t[0] in "+-" else pending.count("-") % 2
        terms.append(("-" if neg else "+") + t.lstrip("+-"))
        pending = ""
    total: Optional[CycNum] = None
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        coef = Fraction(1)
        if "*" in body:
            c, body = body.split("*", 1)
            coef = Fraction(c)
        m = _TOKEN.match(body)
        if m:
            val = root_of_unity(int(m.group(1)), int(m.group(2) or 1))
        else:
            try:
                val = CycNum.from_rational(Fraction(body))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"cannot parse scalar term {term!r} in {text!r}") from exc
        val = val * (sign * coef)
        total = val if total is None else total + val
    assert total is not None
    return total
