"""Species expressions, the graph species built from them, and counting.

Expressions are small immutable trees; :func:`evaluate` turns one into a
cycle index series.  Structurally equal trees share one memoized series.

The counting functions work with type series: an unlabeled count is the
coefficient of ``x^n`` after substituting ``p_k -> Q(x^k)`` into the cycle
index of co-mating graphs, where ``Q`` is the (virtual) type series that
encodes the sibling and tuft bounds.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Optional, Union

from . import symfunc as sf
from .errors import DegreeOverflow, NotReduced, UnknownSeries
from .graphs import Graph, automorphisms, canonical_form, canonical_graph, is_reduced
from .symfunc import CycleIndexSeries, PowerSeries

INF = math.inf
Bound = Union[int, float, None]  # None or math.inf mean "no bound"

# counts are computed through this degree unless a caller asks for more
DEFAULT_TRUNCATION = int(os.environ.get("SPECINE_TRUNCATION", "16"))


def _bound(b: Bound) -> float | int:
    if b is None or b == INF:
        return INF
    if int(b) != b or b < 0:
        raise ValueError(f"bound must be a nonnegative integer or infinity, got {b!r}")
    return int(b)


# ---------------------------------------------------------------------------
# expression trees
# ---------------------------------------------------------------------------

class SpeciesExpr:
    """Base class; supports ``+``, ``-``, ``*`` and ``f(g)`` for composition."""

    def __add__(self, other: "SpeciesExpr") -> "SpeciesExpr":
        return Sum(self, _expr(other))

    def __radd__(self, other) -> "SpeciesExpr":
        return Sum(_expr(other), self)

    def __sub__(self, other) -> "SpeciesExpr":
        return Difference(self, _expr(other))

    def __rsub__(self, other) -> "SpeciesExpr":
        return Difference(_expr(other), self)

    def __neg__(self) -> "SpeciesExpr":
        return Difference(Zero(), self)

    def __mul__(self, other) -> "SpeciesExpr":
        return Product(self, _expr(other))

    def __rmul__(self, other) -> "SpeciesExpr":
        return Product(_expr(other), self)

    def __call__(self, inner: "SpeciesExpr") -> "SpeciesExpr":
        return Composition(self, inner)


def _expr(x) -> SpeciesExpr:
    if isinstance(x, SpeciesExpr):
        return x
    if x == 0:
        return Zero()
    if x == 1:
        return One()
    raise TypeError(f"cannot use {x!r} as a species expression")


@dataclass(frozen=True)
class Zero(SpeciesExpr):
    pass


@dataclass(frozen=True)
class One(SpeciesExpr):
    pass


@dataclass(frozen=True)
class X(SpeciesExpr):
    pass


@dataclass(frozen=True)
class ERange(SpeciesExpr):
    """Sets with ``lo <= size < hi``; ``hi=None`` is unbounded."""

    lo: int = 0
    hi: Optional[int] = None

    def __post_init__(self) -> None:
        if self.lo < 0 or (self.hi is not None and self.hi < self.lo):
            raise ValueError(f"bad size range [{self.lo}, {self.hi})")


@dataclass(frozen=True)
class Sum(SpeciesExpr):
    left: SpeciesExpr
    right: SpeciesExpr


@dataclass(frozen=True)
class Difference(SpeciesExpr):
    left: SpeciesExpr
    right: SpeciesExpr


@dataclass(frozen=True)
class Product(SpeciesExpr):
    left: SpeciesExpr
    right: SpeciesExpr


@dataclass(frozen=True)
class Composition(SpeciesExpr):
    outer: SpeciesExpr
    inner: SpeciesExpr


@dataclass(frozen=True)
class MulInverse(SpeciesExpr):
    arg: SpeciesExpr


@dataclass(frozen=True)
class CompInverse(SpeciesExpr):
    arg: SpeciesExpr


GRAPH_TAGS = ("AllGraphs", "ConnectedGraphs", "CoMating", "CoMatingBullet", "CoMatingR", "PInvBullet")


@dataclass(frozen=True)
class NamedGraphSpecies(SpeciesExpr):
    tag: str
    graph: Optional[Graph] = field(default=None, compare=False, hash=False)
    key: bytes = b""

    def __post_init__(self) -> None:
        if self.tag not in GRAPH_TAGS:
            raise ValueError(f"unknown graph species {self.tag!r}")
        if (self.tag == "CoMatingR") != (self.graph is not None):
            raise ValueError("CoMatingR needs a graph and the other tags take none")
        if self.graph is not None:
            object.__setattr__(self, "graph", canonical_graph(self.graph))
            object.__setattr__(self, "key", canonical_form(self.graph))


E = ERange(0, None)
E_pos = ERange(1, None)
Omega = CompInverse(E_pos)


def E_lt(n: Bound) -> SpeciesExpr:
    """``E_{<n}``; an infinite bound gives ``E``."""
    n = _bound(n)
    return E if n == INF else ERange(0, n)


def patch_expr() -> SpeciesExpr:
    """``P(X, -X, 0) = (1 + X) E(X E_{>=1}(-X)) - 1``."""
    return (One() + X()) * E(X() * E_pos(-X())) - One()


def q_expr(s: Bound, t: Bound) -> SpeciesExpr:
    """``Q^{s,t}(X,X,X) = E_{<2+s} E(X (E_{<1+t} E(-X) - 1)) - 1``."""
    s, t = _bound(s), _bound(t)
    return E_lt(2 + s) * E(X() * (E_lt(1 + t) * E(-X()) - One())) - One()


def patch_with_tufts_expr(s: Bound, t: Bound) -> SpeciesExpr:
    """Sibling-bounded patches with leaves replaced by ``Omega(E_{1<=.<1+t}) - X``,
    every sort set to ``X``; should equal :func:`q_expr`."""
    s, t = _bound(s), _bound(t)
    z_part = ERange(2, None if s == INF else 2 + s)
    y_t = E_pos if t == INF else ERange(1, 1 + t)
    y = Omega(y_t) - X()
    return (One() + X() + z_part(X())) * E(X() * E_pos(y)) - One()


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def _pair_cycles(lam: tuple) -> int:
    c = sum(p // 2 for p in lam)
    for i, a in enumerate(lam):
        for b in lam[i + 1:]:
            c += math.gcd(a, b)
    return c


def _all_graphs() -> CycleIndexSeries:
    def compute(n: int) -> dict:
        return {lam: Fraction(2 ** _pair_cycles(lam), sf.z_lambda(lam)) for lam in sf.partitions(n)}

    return CycleIndexSeries(compute, 0, "all_graphs")


def aut_cycle_index(r: Graph) -> CycleIndexSeries:
    """``(1/|Aut R|) sum_sigma p_{cycle type of sigma}``."""
    if r.n < 1:
        raise ValueError("need a graph with at least one vertex")
    group = automorphisms(r)
    sl: dict[tuple, Fraction] = {}
    w = Fraction(1, len(group))
    for gamma in group:
        lam = tuple(sorted(_cycle_type(gamma), reverse=True))
        sl[lam] = sl.get(lam, Fraction(0)) + w
    return sf.from_slices([{}] * r.n + [sl], name="aut")


def _cycle_type(gamma: tuple) -> list[int]:
    seen = [False] * len(gamma)
    out = []
    for v in range(len(gamma)):
        if not seen[v]:
            k = 0
            while not seen[v]:
                seen[v] = True
                v = gamma[v]
                k += 1
            out.append(k)
    return out


@lru_cache(maxsize=None)
def _series(e: SpeciesExpr) -> CycleIndexSeries:
    if isinstance(e, Zero):
        return sf.zero()
    if isinstance(e, One):
        return sf.one()
    if isinstance(e, X):
        return sf.z_X()
    if isinstance(e, ERange):
        return sf.zE_restricted(e.lo, e.hi)
    if isinstance(e, Sum):
        return sf.add(_series(e.left), _series(e.right))
    if isinstance(e, Difference):
        return sf.add(_series(e.left), _series(e.right), -1)
    if isinstance(e, Product):
        return sf.mul(_series(e.left), _series(e.right))
    if isinstance(e, Composition):
        return sf.plethysm(_series(e.outer), _series(e.inner))
    if isinstance(e, MulInverse):
        return sf.mul_inverse(_series(e.arg))
    if isinstance(e, CompInverse):
        return sf.comp_inverse(_series(e.arg))
    if isinstance(e, NamedGraphSpecies):
        return _cached(_graph_species(e), e)
    raise TypeError(f"not a species expression: {e!r}")


def _graph_species(e: NamedGraphSpecies) -> CycleIndexSeries:
    tag = e.tag
    if tag == "AllGraphs":
        return _all_graphs()
    if tag == "ConnectedGraphs":
        return _series(Omega(NamedGraphSpecies("AllGraphs") - One()))
    if tag == "CoMating":
        return _series(NamedGraphSpecies("ConnectedGraphs")(Omega))
    p_inv = CompInverse(patch_expr())
    if tag == "PInvBullet":
        return _series(p_inv)
    if tag == "CoMatingBullet":
        return _series((X() - X() * X())(p_inv))
    return sf.plethysm(aut_cycle_index(e.graph), _series(p_inv))


def evaluate(e: SpeciesExpr, max_degree: int) -> CycleIndexSeries:
    """Cycle index series of ``e``, forced through ``max_degree``."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    s = _series(e).force(max_degree)
    _persist(e, s)
    return s


# ---------------------------------------------------------------------------
# on-disk slice cache
# ---------------------------------------------------------------------------

_CACHE_FORMAT = "specine-slices-v1"


def _cache_path(e: NamedGraphSpecies) -> Path | None:
    root = os.environ.get("SPECINE_CACHE_DIR")
    if not root:
        return None
    ident = f"{_CACHE_FORMAT}:{e.tag}:{e.key.hex()}"
    return Path(root) / (hashlib.sha256(ident.encode()).hexdigest()[:32] + ".json")


def _cached(fresh: CycleIndexSeries, e: NamedGraphSpecies) -> CycleIndexSeries:
    path = _cache_path(e)
    if path is None or not path.exists():
        return fresh
    try:
        doc = json.loads(path.read_text())
        if doc.get("format") != _CACHE_FORMAT or doc.get("tag") != e.tag:
            return fresh
        stored = sf.series_from_json(doc["series"])
        n = len(doc["series"]["slices"])
        return sf.with_prefix(stored.slices(n - 1), fresh)
    except (OSError, ValueError, KeyError, TypeError):
        return fresh  # an unreadable cache entry is simply recomputed


def _persist(e: SpeciesExpr, s: CycleIndexSeries) -> None:
    if not isinstance(e, NamedGraphSpecies):
        return
    path = _cache_path(e)
    if path is None or s.truncation_order < 0:
        return
    try:
        if path.exists():
            old = json.loads(path.read_text())
            if len(old["series"]["slices"]) > s.truncation_order:
                return
        doc = {"format": _CACHE_FORMAT, "tag": e.tag, "series": sf.series_to_json(s, s.truncation_order)}
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(doc, sort_keys=True))
        tmp.replace(path)
    except (OSError, ValueError, KeyError):
        pass


# ---------------------------------------------------------------------------
# named series
# ---------------------------------------------------------------------------

def z_all_graphs(max_degree: int) -> CycleIndexSeries:
    return evaluate(NamedGraphSpecies("AllGraphs"), max_degree)


def z_connected_graphs(max_degree: int) -> CycleIndexSeries:
    return evaluate(NamedGraphSpecies("ConnectedGraphs"), max_degree)


def z_comating(max_degree: int) -> CycleIndexSeries:
    return evaluate(NamedGraphSpecies("CoMating"), max_degree)


def p_inv(max_degree: int) -> CycleIndexSeries:
    return evaluate(NamedGraphSpecies("PInvBullet"), max_degree)


def z_m_bullet(max_degree: int) -> CycleIndexSeries:
    return evaluate(NamedGraphSpecies("CoMatingBullet"), max_degree)


def z_m_r(r: Graph, max_degree: int) -> CycleIndexSeries:
    return evaluate(_m_r_expr(r), max_degree)


def leafless_sibling_free_expr() -> SpeciesExpr:
    """Connected graphs with neither leaves nor siblings: ``M(P(X,-X,0)) + X^2``."""
    return NamedGraphSpecies("CoMating")(patch_expr()) + X() * X()


def z_reduced(max_degree: int) -> CycleIndexSeries:
    return evaluate(leafless_sibling_free_expr(), max_degree)


def _m_r_expr(r: Graph) -> SpeciesExpr:
    if not r.is_connected() or not is_reduced(r):
        raise NotReduced("R must be connected, leafless and sibling-free")
    if r.n == 1:
        return NamedGraphSpecies("CoMatingBullet")
    return NamedGraphSpecies("CoMatingR", r)


def q_type_series_closed(s: Bound, t: Bound) -> PowerSeries:
    """Expansion of ``(1 - x^{s+2})(1 - x^{t+2}) / (1 - x) - 1``; an infinite
    bound drops its factor."""
    s, t = _bound(s), _bound(t)

    def prefix(N: int) -> list:
        num = [Fraction(0)] * (N + 1)
        num[0] = Fraction(1)
        for b in (s, t):
            if b != INF and b + 2 <= N:
                shifted = [Fraction(0)] * (b + 2) + num[: N + 1 - (b + 2)]
                num = [x - y for x, y in zip(num, shifted)]
        out, acc = [], Fraction(0)
        for c in num:  # divide by 1 - x: running sums
            acc += c
            out.append(acc)
        out[0] -= 1
        return out

    return PowerSeries(prefix)


def _parse_q(key: str) -> tuple[Bound, Bound]:
    body = key[2:]
    try:
        a, b = body.split(",")
        return _parse_bound(a), _parse_bound(b)
    except ValueError as exc:
        raise UnknownSeries(key) from exc


def _parse_bound(text: str) -> Bound:
    text = text.strip().lower()
    if text in ("inf", "infinity", "oo", "∞"):
        return INF
    v = int(text)
    if v < 0:
        raise ValueError(text)
    return v


SERIES_KEYS = ("all_graphs", "connected", "comating", "m_bullet", "p_inv", "reduced", "q:s,t")


def series_expr(name: str) -> SpeciesExpr:
    """Registry lookup: the expression behind a CLI series name."""
    fixed = {
        "all_graphs": NamedGraphSpecies("AllGraphs"),
        "connected": NamedGraphSpecies("ConnectedGraphs"),
        "comating": NamedGraphSpecies("CoMating"),
        "m_bullet": NamedGraphSpecies("CoMatingBullet"),
        "p_inv": NamedGraphSpecies("PInvBullet"),
        "reduced": leafless_sibling_free_expr(),
    }
    if name in fixed:
        return fixed[name]
    if name.startswith("q:"):
        return q_expr(*_parse_q(name))
    raise UnknownSeries(name)


def named_series(name: str, max_degree: int) -> CycleIndexSeries:
    return evaluate(series_expr(name), max_degree)


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CountTable:
    """``matrix[(s, t)]``: connected graphs on ``n`` vertices with sibling
    number ``s`` and tuft number ``t`` (zero entries omitted)."""

    n: int
    matrix: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for (s, t), c in self.matrix.items():
            if c < 0:
                raise ValueError(f"negative count {c} at {(s, t)}")
            if c:
                clean[(int(s), int(t))] = int(c)
        object.__setattr__(self, "matrix", dict(sorted(clean.items())))

    def __getitem__(self, st: tuple[int, int]) -> int:
        return self.matrix.get(st, 0)

    @property
    def total(self) -> int:
        return sum(self.matrix.values())

    @property
    def shape(self) -> tuple[int, int]:
        if not self.matrix:
            return 0, 0
        return max(s for s, _ in self.matrix) + 1, max(t for _, t in self.matrix) + 1

    def is_symmetric(self) -> bool:
        return all(self[t, s] == c for (s, t), c in self.matrix.items())

    def asymmetric_cells(self) -> list[tuple[int, int]]:
        cells = set(self.matrix) | {(t, s) for s, t in self.matrix}
        return sorted((s, t) for s, t in cells if self[s, t] != self[t, s])

    def rows(self) -> list[list[int]]:
        size = max(self.shape)
        return [[self[s, t] for t in range(size)] for s in range(size)]

    def cumulative(self, s: int, t: int) -> int:
        return sum(c for (a, b), c in self.matrix.items() if a <= s and b <= t)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [{"s": s, "t": t, "count": c} for (s, t), c in self.matrix.items()],
        }

    def __add__(self, other: "CountTable") -> "CountTable":
        if other.n != self.n:
            raise ValueError("tables for different n")
        m = dict(self.matrix)
        for k, c in other.matrix.items():
            m[k] = m.get(k, 0) + c
        return CountTable(self.n, m)


_Q_CACHE: dict[tuple, PowerSeries] = {}


def _q(s, t) -> PowerSeries:
    key = (_bound(s), _bound(t))
    q = _Q_CACHE.get(key)
    if q is None:
        q = _Q_CACHE[key] = q_type_series_closed(*key)
    return q


def _substituted(e: SpeciesExpr, s, t, n: int) -> Fraction:
    return sf.substitute_coefficient(_series(e), _q(s, t), n)


def _correction(n: int, s, t) -> int:
    # X^2 - [t>0] XY - [s>0] E_2(Z) at X=Y=Z=x, plus K_2 (s = t = 1) added back
    if n != 2:
        return 0
    return 1 - (t > 0) - (s > 0) + (s >= 1 and t >= 1)


def _check_degree(n: int, max_degree: int | None) -> None:
    limit = DEFAULT_TRUNCATION if max_degree is None else max_degree
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > limit:
        raise DegreeOverflow(f"n={n} exceeds the truncation degree {limit}")


def _as_int(c: Fraction) -> int:
    if c.denominator != 1:
        raise ArithmeticError(f"non-integral count {c}")
    return int(c)


def count_leq(n: int, s: Bound, t: Bound, max_degree: int | None = None) -> int:
    """Connected graphs on ``n`` vertices with sibling number ``<= s`` and
    tuft number ``<= t``; a negative bound gives 0."""
    _check_degree(n, max_degree)
    if (s is not None and s < 0) or (t is not None and t < 0):
        return 0
    s, t = _bound(s), _bound(t)
    c = _substituted(NamedGraphSpecies("CoMating"), s, t, n)
    return _as_int(c) + _correction(n, s, t)


def _inclusion_exclusion(n: int, leq) -> CountTable:
    m = {}
    for s in range(n):
        for t in range(n):
            c = leq(s, t) - leq(s - 1, t) - leq(s, t - 1) + leq(s - 1, t - 1)
            if c:
                m[(s, t)] = c
    return CountTable(n, m)


def joint_matrix(n: int, max_degree: int | None = None) -> CountTable:
    """Joint (sibling, tuft) distribution from the species side."""
    _check_degree(n, max_degree)
    memo: dict = {}

    def leq(s: int, t: int) -> int:
        if (s, t) not in memo:
            memo[(s, t)] = count_leq(n, s, t, max_degree)
        return memo[(s, t)]

    return _inclusion_exclusion(n, leq)


def count_by_reduction(n: int, r: Graph, s: Bound, t: Bound, max_degree: int | None = None) -> int:
    """Connected graphs on ``n`` vertices reducing to ``r`` (``K_2`` counted
    with the bullet) with sibling number ``<= s`` and tuft number ``<= t``."""
    return _count_by_reduction(n, r, _m_r_expr(r), s, t, max_degree)


def _count_by_reduction(n: int, r: Graph, expr: SpeciesExpr, s: Bound, t: Bound, max_degree: int | None) -> int:
    _check_degree(n, max_degree)
    if (s is not None and s < 0) or (t is not None and t < 0):
        return 0
    s, t = _bound(s), _bound(t)
    c = _as_int(_substituted(expr, s, t, n))
    if r.n == 1:
        c += _correction(n, s, t)
    return c


def by_reduction_matrix(n: int, r: Graph, max_degree: int | None = None) -> CountTable:
    expr = _m_r_expr(r)
    memo: dict = {}

    def leq(s: int, t: int) -> int:
        if (s, t) not in memo:
            memo[(s, t)] = _count_by_reduction(n, r, expr, s, t, max_degree)
        return memo[(s, t)]

    return _inclusion_exclusion(n, leq)


def type_coefficients(name: str, max_degree: int, *, egf: bool = False) -> list[Fraction]:
    f = named_series(name, max_degree)
    ps = sf.egf(f) if egf else sf.type_series(f)
    return ps.coefficients(max_degree)
