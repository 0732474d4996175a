"""Cycle index series in the power-sum basis.

A series is a lazily evaluated sequence of homogeneous *slices*.  Slice ``n``
is a dict mapping monomials of degree ``n`` to exact rational coefficients.
A monomial ``p_{l1} p_{l2} ... p_{lr}`` is stored as the partition
``(l1, l2, ..., lr)`` with nonincreasing parts; ``()`` is the monomial ``1``.

Slices are computed on demand, strictly in increasing degree, and memoized.
Once a slice is forced it is never touched again, so evaluation order cannot
change results.  Each series also tracks a lower bound for its valuation
(lowest possibly nonzero degree); the products and plethysms below use it to
avoid touching slices they provably do not need, which is what lets
self-referential definitions such as the compositional inverse work.

Coefficients are :class:`fractions.Fraction` throughout; nothing is ever
rounded.
"""

from __future__ import annotations

import json
import math
import threading
import weakref
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping

from .errors import BadConstantTerm, BadLinearTerm, NonZeroConstantTerm

Rational = Fraction
Monomial = tuple  # nonincreasing positive ints
Slice = dict

__all__ = [
    "Rational",
    "CycleIndexSeries",
    "PowerSeries",
    "add",
    "mul",
    "plethysm",
    "mul_inverse",
    "comp_inverse",
    "type_series",
    "egf",
    "substitute",
    "zE_restricted",
    "z_E",
    "z_X",
    "zero",
    "one",
    "from_slices",
    "monomial_degree",
    "exponents",
    "from_exponents",
    "partitions",
    "z_lambda",
    "series_to_json",
    "series_from_json",
]


# ---------------------------------------------------------------------------
# monomials
# ---------------------------------------------------------------------------

def monomial_degree(m: Monomial) -> int:
    return sum(m)


def exponents(m: Monomial) -> dict[int, int]:
    """Exponent map ``k -> e_k`` of a monomial, keys increasing."""
    out: dict[int, int] = {}
    for k in sorted(m):
        out[k] = out.get(k, 0) + 1
    return out


def from_exponents(e: Mapping[int, int]) -> Monomial:
    parts: list[int] = []
    for k, mult in e.items():
        k, mult = int(k), int(mult)
        if k < 1 or mult < 0:
            raise ValueError(f"bad exponent entry {k}: {mult}")
        parts.extend([k] * mult)
    return tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def _merge(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


@lru_cache(maxsize=None)
def _scale_parts(m: Monomial, k: int) -> Monomial:
    return tuple(part * k for part in m)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Monomial, ...]:
    """All partitions of ``n`` as nonincreasing tuples, in reverse lex order."""
    if n == 0:
        return ((),)
    out = []

    def rec(rem: int, largest: int, prefix: tuple) -> None:
        if rem == 0:
            out.append(prefix)
            return
        for part in range(min(rem, largest), 0, -1):
            rec(rem - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(out)


def z_lambda(m: Monomial) -> int:
    """``prod_i i^{m_i} m_i!``, the centralizer order of cycle type ``m``."""
    z = 1
    for k, mult in exponents(m).items():
        z *= k**mult * math.factorial(mult)
    return z


# ---------------------------------------------------------------------------
# slice arithmetic
# ---------------------------------------------------------------------------

def _axpy(acc: Slice, sl: Mapping, scale=1) -> None:
    for m, c in sl.items():
        v = acc.get(m, 0) + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)


def _mul_slices(a: Mapping, b: Mapping, acc: Slice) -> None:
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = _merge(ma, mb)
            v = acc.get(m, 0) + ca * cb
            if v:
                acc[m] = v
            else:
                del acc[m]


def _clean(sl: Mapping) -> Slice:
    return {m: Fraction(c) for m, c in sl.items() if c}


# ---------------------------------------------------------------------------
# lazy series
# ---------------------------------------------------------------------------

class CycleIndexSeries:
    """Lazy graded series in the power sums.

    ``compute(n)`` must return the degree-``n`` slice; it is called exactly
    once per degree, in increasing order, and may read lower slices of any
    series (including this one).  ``valuation`` is a lower bound on the first
    possibly nonzero degree; slices below it are empty without calling
    ``compute``.
    """

    __slots__ = ("_compute", "_slices", "_lock", "valuation", "name")

    def __init__(self, compute: Callable[[int], Slice], valuation: int = 0, name: str | None = None):
        self._compute = compute
        self._slices: list[Slice] = []
        self._lock = threading.RLock()
        self.valuation = valuation
        self.name = name

    def __repr__(self) -> str:
        label = self.name or "CycleIndexSeries"
        return f"<{label}: forced through degree {self.truncation_order}>"

    @property
    def truncation_order(self) -> int:
        """Highest degree forced so far (-1 if nothing is forced)."""
        return len(self._slices) - 1

    def _slice(self, n: int) -> Slice:
        slices = self._slices
        if n < len(slices):
            return slices[n]
        with self._lock:
            while len(slices) <= n:
                k = len(slices)
                if k < self.valuation:
                    slices.append({})
                else:
                    slices.append(self._compute(k))
            return slices[n]

    def slice(self, n: int) -> dict[Monomial, Fraction]:
        """A copy of the degree-``n`` slice."""
        if n < 0:
            return {}
        return dict(self._slice(n))

    def force(self, n: int) -> "CycleIndexSeries":
        self._slice(n)
        return self

    def coefficient(self, m: Monomial) -> Fraction:
        m = tuple(sorted(m, reverse=True))
        return self._slice(sum(m)).get(m, Fraction(0))

    def slices(self, max_degree: int) -> list[dict[Monomial, Fraction]]:
        return [self.slice(n) for n in range(max_degree + 1)]

    def agrees_with(self, other: "CycleIndexSeries", max_degree: int) -> bool:
        return all(self._slice(n) == other._slice(n) for n in range(max_degree + 1))

    # operator sugar ---------------------------------------------------
    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, _coerce(other), -1)

    def __rsub__(self, other):
        return add(_coerce(other), self, -1)

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return mul(self, _coerce(other))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __call__(self, inner: "CycleIndexSeries") -> "CycleIndexSeries":
        return plethysm(self, inner)


def _coerce(x) -> CycleIndexSeries:
    if isinstance(x, CycleIndexSeries):
        return x
    if isinstance(x, (int, Fraction)):
        return from_slices([{(): Fraction(x)}] if x else [])
    raise TypeError(f"cannot use {type(x).__name__} as a cycle index series")


def from_slices(slices: Iterable[Mapping], name: str | None = None) -> CycleIndexSeries:
    """A series with finitely many given slices; all further slices are zero."""
    fixed = []
    for n, sl in enumerate(slices):
        sl = _clean(sl)
        for m in sl:
            if sum(m) != n:
                raise ValueError(f"monomial {m} in slice {n} has degree {sum(m)}")
        fixed.append(sl)
    val = next((n for n, sl in enumerate(fixed) if sl), len(fixed))
    return CycleIndexSeries(lambda n: dict(fixed[n]) if n < len(fixed) else {}, val, name)


def with_prefix(slices: list[Mapping], rest: CycleIndexSeries) -> CycleIndexSeries:
    """Series that reports ``slices`` first and defers to ``rest`` afterwards.

    Used to resume from cached slices; the caller vouches that the prefix
    agrees with ``rest``.
    """
    fixed = [_clean(sl) for sl in slices]
    return CycleIndexSeries(
        lambda n: dict(fixed[n]) if n < len(fixed) else dict(rest._slice(n)),
        rest.valuation,
        rest.name,
    )


def zero() -> CycleIndexSeries:
    return from_slices([], name="0")


def one() -> CycleIndexSeries:
    return from_slices([{(): 1}], name="1")


def z_X() -> CycleIndexSeries:
    return from_slices([{}, {(1,): 1}], name="X")


def add(f: CycleIndexSeries, g: CycleIndexSeries, g_scale=1) -> CycleIndexSeries:
    """``f + g_scale * g``, slice by slice."""

    def compute(n: int) -> Slice:
        acc = dict(f._slice(n))
        _axpy(acc, g._slice(n), g_scale)
        return acc

    return CycleIndexSeries(compute, min(f.valuation, g.valuation))


def scale(f: CycleIndexSeries, c) -> CycleIndexSeries:
    c = Fraction(c)
    if not c:
        return zero()
    return CycleIndexSeries(lambda n: {m: c * v for m, v in f._slice(n).items()}, f.valuation)


def mul(f: CycleIndexSeries, g: CycleIndexSeries) -> CycleIndexSeries:
    """Graded Cauchy product."""
    vf, vg = f.valuation, g.valuation

    def compute(n: int) -> Slice:
        acc: Slice = {}
        for i in range(vf, n - vg + 1):
            a = f._slice(i)
            if a:
                b = g._slice(n - i)
                if b:
                    _mul_slices(a, b, acc)
        return acc

    return CycleIndexSeries(compute, vf + vg)


def _renamed(g: CycleIndexSeries, k: int, vg: int) -> CycleIndexSeries:
    """``g`` with every ``p_i`` replaced by ``p_{ik}``."""
    if k == 1:
        return g

    def compute(n: int) -> Slice:
        if n % k:
            return {}
        return {_scale_parts(m, k): c for m, c in g._slice(n // k).items()}

    return CycleIndexSeries(compute, k * vg)


def plethysm(f: CycleIndexSeries, g: CycleIndexSeries) -> CycleIndexSeries:
    """``f o g``: each ``p_k`` in ``f`` becomes ``g`` with ``p_i -> p_{ik}``.

    The substitution is extended linearly over the rational coefficients of
    ``f``, so ``g`` may have negative coefficients (``p_k o (-p_1) = -p_k``).
    """
    if g._slice(0):
        raise NonZeroConstantTerm("plethysm argument must have zero constant term")
    vg = max(g.valuation, 1)
    renamed: dict[int, CycleIndexSeries] = {}
    products: dict[Monomial, CycleIndexSeries] = {(): one()}

    def product(lam: Monomial) -> CycleIndexSeries:
        s = products.get(lam)
        if s is None:
            k = lam[0]
            r = renamed.get(k)
            if r is None:
                r = renamed[k] = _renamed(g, k, vg)
            s = products[lam] = mul(r, product(lam[1:]))
        return s

    def compute(n: int) -> Slice:
        acc: Slice = {}
        for m in range(n // vg + 1):
            for lam, c in f._slice(m).items():
                sl = product(lam)._slice(n)
                if sl:
                    _axpy(acc, sl, c)
        return acc

    return CycleIndexSeries(compute, f.valuation * vg)


def mul_inverse(f: CycleIndexSeries) -> CycleIndexSeries:
    """Multiplicative inverse of a series with constant term +1 or -1."""
    c0 = f._slice(0)
    const = c0.get((), 0)
    if set(c0) - {()} or const not in (1, -1):
        raise BadConstantTerm(f"constant term must be +1 or -1, got {dict(c0)}")
    inv_c = Fraction(1, 1) / const

    def compute(n: int) -> Slice:
        if n == 0:
            return {(): inv_c}
        acc: Slice = {}
        for i in range(max(1, f.valuation), n + 1):
            a = f._slice(i)
            if a:
                _mul_slices(a, result._slice(n - i), acc)
        return {m: -inv_c * v for m, v in acc.items()}

    result = CycleIndexSeries(compute, 0)
    return result


def comp_inverse(f: CycleIndexSeries) -> CycleIndexSeries:
    """Compositional inverse of ``f = eps * p1 + (degree >= 2)``, ``eps = +-1``.

    Solved as the fixed point ``g = eps * (p1 - (f - eps p1) o g)``: the
    degree-``n`` slice of the right side only reads slices of ``g`` below
    ``n``.
    """
    if f._slice(0):
        raise BadLinearTerm("compositional inverse needs zero constant term")
    lin = f._slice(1)
    eps = lin.get((1,), 0)
    if len(lin) != 1 or eps not in (1, -1):
        raise BadLinearTerm(f"linear term must be +p1 or -p1, got {dict(lin)}")
    eps = Fraction(eps)
    higher = CycleIndexSeries(lambda n: dict(f._slice(n)) if n >= 2 else {}, 2)
    rest: CycleIndexSeries | None = None

    def compute(n: int) -> Slice:
        if n == 1:
            return {(1,): eps}
        return {m: -eps * c for m, c in rest._slice(n).items()}

    g = CycleIndexSeries(compute, 1)
    rest = plethysm(higher, g)
    return g


# ---------------------------------------------------------------------------
# sets and restrictions
# ---------------------------------------------------------------------------

def _z_e_slices() -> CycleIndexSeries:
    # n Z_{E_n} = sum_{k=1}^n p_k Z_{E_{n-k}}
    def compute(n: int) -> Slice:
        if n == 0:
            return {(): Fraction(1)}
        acc: Slice = {}
        for k in range(1, n + 1):
            _mul_slices({(k,): Fraction(1, n)}, z._slice(n - k), acc)
        return acc

    z = CycleIndexSeries(compute, 0, "E")
    return z


_Z_E = _z_e_slices()


def zE_restricted(lo: int = 0, hi: int | None = None) -> CycleIndexSeries:
    """``sum_{lo <= n < hi} Z_{E_n}``; ``hi=None`` means no upper bound."""
    if lo < 0 or (hi is not None and hi < lo):
        raise ValueError(f"bad range [{lo}, {hi})")

    def compute(n: int) -> Slice:
        if hi is not None and n >= hi:
            return {}
        return dict(_Z_E._slice(n))

    return CycleIndexSeries(compute, lo)


def z_E() -> CycleIndexSeries:
    return zE_restricted(0, None)


# ---------------------------------------------------------------------------
# univariate series
# ---------------------------------------------------------------------------

class PowerSeries:
    """Lazy univariate series with rational coefficients.

    Built from a function ``prefix(N)`` that returns coefficients ``0..N``;
    requests past the cached prefix recompute with a doubled bound.  With
    ``termwise`` the function is ``term(n)`` instead, called once per
    coefficient, so nothing beyond the requested degree is computed.
    """

    __slots__ = ("_prefix", "_term", "_coeffs", "_lock", "__weakref__")

    def __init__(self, prefix: Callable[[int], list] | None = None, *, termwise: Callable[[int], object] | None = None):
        if (prefix is None) == (termwise is None):
            raise TypeError("give exactly one of prefix and termwise")
        self._prefix = prefix
        self._term = termwise
        self._coeffs: list[Fraction] = []
        self._lock = threading.Lock()

    @classmethod
    def from_coefficients(cls, coeffs: Iterable) -> "PowerSeries":
        fixed = [Fraction(c) for c in coeffs]
        return cls(lambda N: fixed[: N + 1] + [Fraction(0)] * (N + 1 - len(fixed)))

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n >= len(self._coeffs):
            with self._lock:
                if self._term is not None:
                    while len(self._coeffs) <= n:
                        self._coeffs.append(Fraction(self._term(len(self._coeffs))))
                elif n >= len(self._coeffs):
                    N = max(n, 2 * len(self._coeffs))
                    got = [Fraction(c) for c in self._prefix(N)]
                    if got[: len(self._coeffs)] != self._coeffs:
                        raise AssertionError("power series prefix changed on recomputation")
                    self._coeffs = got
        return self._coeffs[n]

    def coefficients(self, max_degree: int) -> list[Fraction]:
        self[max_degree]
        return self._coeffs[: max_degree + 1]

    def __iter__(self) -> Iterator[Fraction]:
        n = 0
        while True:
            yield self[n]
            n += 1

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coefficients(7))
        return f"PowerSeries({head}, ...)"

    def to_json(self, max_degree: int) -> list[dict]:
        return [{"num": c.numerator, "den": c.denominator} for c in self.coefficients(max_degree)]


def type_series(f: CycleIndexSeries) -> PowerSeries:
    """Specialize ``p_k -> x^k``: counts of unlabeled structures."""
    return PowerSeries(termwise=lambda n: sum(f._slice(n).values(), Fraction(0)))


def egf(f: CycleIndexSeries) -> PowerSeries:
    """Specialize ``p_1 -> x, p_k -> 0``; coefficient ``n`` is ``|F[n]|``."""
    return PowerSeries(termwise=lambda n: math.factorial(n) * f._slice(n).get((1,) * n, Fraction(0)))


def _poly_mul(a: list, b: list, N: int) -> list:
    out = [0] * (N + 1)
    for i, x in enumerate(a):
        if x and i <= N:
            for j in range(min(len(b), N + 1 - i)):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


class _PowerTable:
    """Truncated products ``prod_i a(x^{lam_i})``, shared by every series
    substituted with the same ``a`` and bound ``N``."""

    def __init__(self, a: PowerSeries, N: int):
        base = a.coefficients(N)
        if all(c.denominator == 1 for c in base):
            base = [int(c) for c in base]  # integer arithmetic is much faster
        self.N = N
        self.base = base
        self.stretched: dict[int, list] = {}
        self.products: dict[Monomial, list] = {(): [1] + [0] * N}
        self.lock = threading.Lock()

    def stretch(self, k: int) -> list:
        s = self.stretched.get(k)
        if s is None:
            s = [0] * (self.N + 1)
            for i in range(0, self.N // k + 1):
                s[i * k] = self.base[i]
            self.stretched[k] = s
        return s

    def product(self, lam: Monomial) -> list:
        p = self.products.get(lam)
        if p is None:
            p = self.products[lam] = _poly_mul(self.stretch(lam[0]), self.product(lam[1:]), self.N)
        return p


_POWER_TABLES: "weakref.WeakKeyDictionary[PowerSeries, dict[int, _PowerTable]]" = weakref.WeakKeyDictionary()


def _power_table(a: PowerSeries, N: int) -> _PowerTable:
    with _TABLES_LOCK:
        by_n = _POWER_TABLES.setdefault(a, {})
        t = by_n.get(N)
        if t is None:
            t = by_n[N] = _PowerTable(a, N)
        return t


_TABLES_LOCK = threading.Lock()


def substitute(f: CycleIndexSeries, a: PowerSeries) -> PowerSeries:
    """``f`` with ``p_k -> a(x^k)``, for ``a`` with zero constant term.

    This is the type series of ``f o g`` when ``a`` is the type series of
    ``g`` (computed without forming the plethysm).
    """

    return PowerSeries(lambda N: _substituted_prefix(f, a, N))


def substitute_coefficient(f: CycleIndexSeries, a: PowerSeries, n: int) -> Fraction:
    """Coefficient of ``x^n`` in :func:`substitute(f, a) <substitute>`,
    touching only slices of ``f`` up to degree ``n``."""
    return _substituted_prefix(f, a, n)[n]


def _substituted_prefix(f: CycleIndexSeries, a: PowerSeries, N: int) -> list:
    if a[0]:
        raise NonZeroConstantTerm("substituted series must have zero constant term")
    table = _power_table(a, N)
    out = [Fraction(0)] * (N + 1)
    with table.lock:
        for m in range(N + 1):
            for lam, c in f._slice(m).items():
                p = table.product(lam)
                for n in range(m, N + 1):
                    if p[n]:
                        out[n] += c * p[n]
    return out


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def series_to_json(f: CycleIndexSeries, max_degree: int) -> dict:
    slices = []
    for n in range(max_degree + 1):
        terms = [
            {
                "monomial": {str(k): e for k, e in exponents(m).items()},
                "num": c.numerator,
                "den": c.denominator,
            }
            for m, c in sorted(f._slice(n).items())
        ]
        slices.append({"degree": n, "terms": terms})
    return {"basis": "powersum", "slices": slices}


def series_from_json(doc: dict | str) -> CycleIndexSeries:
    if isinstance(doc, str):
        doc = json.loads(doc)
    if doc.get("basis") != "powersum":
        raise ValueError("expected basis 'powersum'")
    by_degree: dict[int, dict] = {}
    for entry in doc["slices"]:
        sl = by_degree.setdefault(int(entry["degree"]), {})
        for t in entry["terms"]:
            sl[from_exponents(t["monomial"])] = Fraction(t["num"], t["den"])
    top = max(by_degree, default=-1)
    return from_slices([by_degree.get(n, {}) for n in range(top + 1)])
