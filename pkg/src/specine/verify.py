"""Brute-force oracles and the cross-check suite.

Every check compares two independently computed quantities, or tests a
structural property over an exhaustive (or seeded-sampled) family of graphs.
A failing check records the least canonical graph6 string among the graphs
that broke it.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

from . import species as sp
from . import symfunc as sf
from .graphs import (
    Graph,
    TaggedGraph,
    canonical_form,
    comating_graph,
    decorate,
    enumerate_connected,
    from_graph6,
    has_induced_cycle_geq4,
    has_siblings,
    is_isomorphic,
    is_reduced,
    is_valid,
    labeled_connected_graphs,
    labeled_oracle_classes,
    patch_compose,
    reduce,
    rho_lambda,
    sibling_tuft,
    to_graph6,
    undecorate,
)
from .graphs.generate import ORACLE_CAP
from .species import CountTable

# expected values quoted from the literature, used as ground truth
KNOWN_CONNECTED = [1, 1, 2, 6, 21, 112, 853, 11117]
KNOWN_M_BULLET = [0, 1, 0, 1, 2, 5, 14, 43, 141, 491, 1778]
KNOWN_P_INV = [0, 1, 1, 3, 9, 29, 99, 353, 1300, 4913, 18945]
KNOWN_REDUCED = [0, 1, 0, 0, 1, 5, 31, 293, 4986, 151096, 8264613]

SAMPLE_SUBSETS = 64
MAX_EXHAUSTIVE_LEAVES = 6


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

@dataclass
class Check:
    name: str
    status: str  # "pass" or "fail"
    detail: str = ""
    witness: Optional[str] = None
    seconds: float = 0.0


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    parameters: dict = field(default_factory=dict)
    seed: int = 0

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status != "pass"]

    def to_json(self, *, timings: bool = False) -> dict:
        checks = []
        for c in self.checks:
            d = asdict(c)
            if not timings:
                d.pop("seconds")
            checks.append(d)
        return {
            "ok": self.ok,
            "seed": self.seed,
            "parameters": self.parameters,
            "checks": checks,
        }

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(**kw), indent=2, sort_keys=True)

    def table(self) -> str:
        width = max((len(c.name) for c in self.checks), default=4)
        lines = [f"{'check'.ljust(width)}  status  detail"]
        for c in self.checks:
            extra = f" [witness {c.witness}]" if c.witness else ""
            lines.append(f"{c.name.ljust(width)}  {c.status.ljust(6)}  {c.detail}{extra}")
        passed = sum(c.status == "pass" for c in self.checks)
        lines.append(f"{passed}/{len(self.checks)} checks passed")
        return "\n".join(lines)


class _Failure:
    """Collects counterexamples for one check, keeping the least witness."""

    def __init__(self) -> None:
        self.count = 0
        self.witness: Optional[bytes] = None
        self.first: str = ""

    def add(self, g: Optional[Graph], what: str) -> None:
        self.count += 1
        if not self.first:
            self.first = what
        if g is not None:
            key = canonical_form(g)
            if self.witness is None or key < self.witness:
                self.witness = key

    def check(self, name: str, ok_detail: str) -> Check:
        if not self.count:
            return Check(name, "pass", ok_detail)
        w = self.witness.decode().split("|")[0] if self.witness else None
        return Check(name, "fail", f"{self.count} failure(s); first: {self.first}", w)


# ---------------------------------------------------------------------------
# brute-force tables
# ---------------------------------------------------------------------------

def brute_joint_matrix(n: int, graphs: Iterable[Graph] | None = None) -> CountTable:
    """Tally ``(sibling number, tuft number)`` over the connected graphs on
    ``n`` vertices (or over ``graphs`` when given)."""
    src = enumerate_connected(n) if graphs is None else graphs
    return CountTable(n, Counter(sibling_tuft(g) for g in src))


def reduction_key(g: Graph) -> bytes:
    return canonical_form(reduce(g, k2_as_bullet=True))


def brute_by_reduction(n: int) -> dict[bytes, CountTable]:
    """Per-reduction tallies, keyed by the canonical form of the reduction
    (``K_2`` is grouped with the single vertex)."""
    groups: dict[bytes, Counter] = defaultdict(Counter)
    for g in enumerate_connected(n):
        groups[reduction_key(g)][sibling_tuft(g)] += 1
    return {k: CountTable(n, groups[k]) for k in sorted(groups)}


def brute_leafless(n: int) -> int:
    return sum(1 for g in enumerate_connected(n) if not g.leaves())


def brute_comating(n: int) -> int:
    return sum(1 for g in enumerate_connected(n) if not has_siblings(g))


def brute_reduced(n: int) -> int:
    return sum(1 for g in enumerate_connected(n) if is_reduced(g) and not g.is_k2())


def _ints(ps: sf.PowerSeries, lo: int, hi: int) -> list:
    return [int(c) if c.denominator == 1 else c for c in ps.coefficients(hi)[lo:]]


# ---------------------------------------------------------------------------
# individual checks; each takes the suite parameters and returns a Check
# ---------------------------------------------------------------------------

def check_enumeration(params: dict) -> Check:
    f = _Failure()
    oracle_upto = 0 if params["stretch"] else min(params["max_n"], ORACLE_CAP)
    for n in range(1, params["max_n"] + 1):
        got = [g for g in enumerate_connected(n, cap=max(8, params["max_n"]))]
        keys = {canonical_form(g) for g in got}
        if len(keys) != len(got):
            f.add(None, f"n={n}: duplicate isomorphism classes")
        if n <= len(KNOWN_CONNECTED) and len(got) != KNOWN_CONNECTED[n - 1]:
            f.add(None, f"n={n}: {len(got)} graphs, expected {KNOWN_CONNECTED[n - 1]}")
        if n <= oracle_upto:
            oracle = labeled_oracle_classes(n)
            for k in set(oracle) ^ keys:
                g = oracle.get(k) or next(x for x in got if canonical_form(x) == k)
                f.add(g, f"n={n}: enumeration and labeled scan disagree")
    scope = f"n<={params['max_n']}, labeled oracle n<={oracle_upto}"
    return f.check("graphs.enumeration", scope)


def check_graph6_round_trip(params: dict) -> Check:
    f = _Failure()
    for n in range(1, min(params["max_n"], 7) + 1):
        for g in enumerate_connected(n):
            if from_graph6(to_graph6(g)) != g:
                f.add(g, f"graph6 round trip changed {to_graph6(g)}")
    return f.check("graphs.graph6_round_trip", "parse(print(G)) = G")


def check_joint_dual_path(params: dict) -> Check:
    f = _Failure()
    for n in range(1, params["max_n"] + 1):
        brute = brute_joint_matrix(n)
        species = sp.joint_matrix(n, params["max_degree"])
        if brute != species:
            f.add(None, f"n={n}: brute {brute.matrix} != species {species.matrix}")
        if brute.total != sum(1 for _ in enumerate_connected(n)):
            f.add(None, f"n={n}: table total is wrong")
    return f.check("joint.dual_path", f"brute = species for n<={params['max_n']}")


def check_joint_symmetry(params: dict) -> Check:
    f = _Failure()
    for n in range(1, params["max_n"] + 1):
        for label, table in (("brute", brute_joint_matrix(n)), ("species", sp.joint_matrix(n, params["max_degree"]))):
            if not table.is_symmetric():
                f.add(None, f"n={n} {label}: asymmetric at {table.asymmetric_cells()}")
    return f.check("joint.symmetry", "every matrix symmetric")


def check_count_leq(params: dict) -> Check:
    f = _Failure()
    for n in range(1, params["max_n"] + 1):
        brute = brute_joint_matrix(n)
        for s in range(params["max_st"] + 1):
            for t in range(params["max_st"] + 1):
                want = brute.cumulative(s, t)
                got = sp.count_leq(n, s, t, params["max_degree"])
                if got != want:
                    f.add(None, f"count_leq({n},{s},{t}) = {got}, brute {want}")
        total = sum(1 for _ in enumerate_connected(n))
        if sp.count_leq(n, None, None, params["max_degree"]) != total:
            f.add(None, f"count_leq({n},inf,inf) != {total}")
    return f.check("joint.count_leq", f"all s,t<={params['max_st']}")


def check_count_leq_monotone(params: dict) -> Check:
    f = _Failure()
    m = params["max_st"]
    for n in range(1, params["max_degree"] + 1):
        grid = [[sp.count_leq(n, s, t, params["max_degree"]) for t in range(m + 1)] for s in range(m + 1)]
        for s in range(m + 1):
            for t in range(m + 1):
                if grid[s][t] < 0:
                    f.add(None, f"count_leq({n},{s},{t}) negative")
                if s and grid[s][t] < grid[s - 1][t] or t and grid[s][t] < grid[s][t - 1]:
                    f.add(None, f"count_leq({n},·,·) decreases at {(s, t)}")
                if grid[s][t] != grid[t][s]:
                    f.add(None, f"count_leq({n},{s},{t}) != count_leq({n},{t},{s})")
    return f.check("joint.count_leq_monotone_symmetric", f"n<={params['max_degree']}, s,t<={m}")


def check_by_reduction(params: dict) -> Check:
    f = _Failure()
    seen = 0
    for n in range(1, params["max_n"] + 1):
        brute = brute_by_reduction(n)
        total = CountTable(n, {})
        for key, table in brute.items():
            r = from_graph6(key.decode())
            seen += 1
            species = sp.by_reduction_matrix(n, r, params["max_degree"])
            if species != table:
                f.add(r, f"n={n}, R={key.decode()}: brute {table.matrix} != species {species.matrix}")
            if not table.is_symmetric() or not species.is_symmetric():
                f.add(r, f"n={n}, R={key.decode()}: asymmetric")
            total = total + table
        if total != brute_joint_matrix(n):
            f.add(None, f"n={n}: per-reduction tables do not sum to the joint table")
    return f.check("reduction.dual_path", f"{seen} (n, R) pairs, symmetric and equal")


def check_m_bullet_brute(params: dict) -> Check:
    f = _Failure()
    ts = sf.type_series(sp.z_m_bullet(params["max_degree"]))
    bullet = canonical_form(Graph.bullet())
    for n in range(1, params["max_n"] + 1):
        want = sum(1 for g in enumerate_connected(n) if not has_siblings(g) and reduction_key(g) == bullet)
        if ts[n] != want:
            f.add(None, f"n={n}: series {ts[n]}, brute {want}")
    return f.check("series.m_bullet_brute", "co-mating graphs reducing to a point")


def check_known_series(params: dict) -> Check:
    f = _Failure()
    d = params["max_degree"]
    for name, known in (("m_bullet", KNOWN_M_BULLET), ("p_inv", KNOWN_P_INV), ("reduced", KNOWN_REDUCED)):
        top = min(d, len(known) - 1)
        got = _ints(sf.type_series(sp.named_series(name, top)), 0, top)
        if got != known[: top + 1]:
            f.add(None, f"{name}: {got} != {known[: top + 1]}")
    conn = _ints(sf.type_series(sp.z_connected_graphs(8)), 1, 8)
    if conn != KNOWN_CONNECTED:
        f.add(None, f"connected: {conn}")
    return f.check("series.known_values", "M-bullet, P inverse, leafless sibling-free, connected")


def check_all_graphs(params: dict) -> Check:
    f = _Failure()
    z = sp.z_all_graphs(params["max_degree"])
    e = sf.egf(z).coefficients(8)
    if e != [2 ** (n * (n - 1) // 2) for n in range(9)]:
        f.add(None, f"labeled graph counts {e}")
    # unlabeled graphs = multisets of connected graphs (Euler transform of brute counts)
    top = min(params["max_n"], 7)
    conn = [0] + [sum(1 for _ in enumerate_connected(n)) for n in range(1, top + 1)]
    euler = _euler_transform(conn, top)
    got = _ints(sf.type_series(z), 0, top)
    if got != euler:
        f.add(None, f"type series {got}, brute {euler}")
    return f.check("series.all_graphs", "EGF 2^C(n,2); type series vs brute")


def _euler_transform(a: list[int], N: int) -> list[int]:
    # b = prod_n (1 - x^n)^(-a_n)
    b = [1] + [0] * N
    for n in range(1, N + 1):
        for _ in range(a[n]):
            for k in range(n, N + 1):
                b[k] += b[k - n]
    return b


def check_connected_round_trip(params: dict) -> Check:
    f = _Failure()
    d = min(params["max_degree"], 8)
    gc = sp.z_connected_graphs(d)
    if not sf.plethysm(sf.z_E(), gc).agrees_with(sp.z_all_graphs(d), d):
        f.add(None, "E(G^c) != G")
    m = sp.z_comating(d)
    if not sf.plethysm(m, sf.zE_restricted(1)).agrees_with(gc, d):
        f.add(None, "M(E_{>=1}) != G^c")
    return f.check("series.logarithm_round_trips", f"through degree {d}")


def check_kilibarda(params: dict) -> Check:
    f = _Failure()
    ts = sf.type_series(sp.z_comating(params["max_degree"]))
    for n in range(1, params["max_n"] + 1):
        leafless = brute_leafless(n)
        comating = brute_comating(n)
        if leafless != comating:
            f.add(None, f"n={n}: brute co-mating {comating} != leafless {leafless}")
        if ts[n] != sp.count_leq(n, None, 0, params["max_degree"]):
            f.add(None, f"n={n}: series co-mating {ts[n]} != species leafless count")
        if ts[n] != leafless:
            f.add(None, f"n={n}: series co-mating {ts[n]} != brute leafless {leafless}")
    for n in range(params["max_n"] + 1, params["max_degree"] + 1):
        if ts[n] != sp.count_leq(n, None, 0, params["max_degree"]):
            f.add(None, f"n={n}: series co-mating {ts[n]} != species leafless count")
    return f.check("series.kilibarda", "co-mating = leafless (brute and series)")


def check_reduced_brute(params: dict) -> Check:
    f = _Failure()
    top = params["max_n"]
    ts = sf.type_series(sp.z_reduced(max(top, 1)))
    for n in range(1, top + 1):
        want = brute_reduced(n)
        if ts[n] != want:
            f.add(None, f"n={n}: series {ts[n]}, brute {want}")
    return f.check("series.leafless_sibling_free_brute", f"n<={top}")


def check_closed_form(params: dict) -> Check:
    f = _Failure()
    d = params["max_degree"]
    m = min(params["max_st"], 4)
    bounds = list(range(m + 1)) + [None]
    for s in bounds:
        for t in bounds:
            closed = sf.PowerSeries.coefficients(sp.q_type_series_closed(s, t), d)
            engine = sf.type_series(sp.evaluate(sp.q_expr(s, t), d)).coefficients(d)
            if closed != engine:
                f.add(None, f"Q^({s},{t}): engine {engine} != closed {closed}")
            if closed != sp.q_type_series_closed(t, s).coefficients(d):
                f.add(None, f"Q^({s},{t}) closed form not symmetric")
    return f.check("series.q_closed_form", f"s,t<={m} and infinity, degree<={d}")


def check_patch_substitution(params: dict) -> Check:
    f = _Failure()
    d = min(params["max_degree"], 10)
    for s in range(min(params["max_st"], 3) + 1):
        for t in range(min(params["max_st"], 3) + 1):
            lhs = sp.evaluate(sp.patch_with_tufts_expr(s, t), d)
            rhs = sp.evaluate(sp.q_expr(s, t), d)
            if not lhs.agrees_with(rhs, d):
                f.add(None, f"patch substitution differs from Q^({s},{t})")
    return f.check("series.patch_substitution", f"s,t<=3, degree<={d}")


def check_p_inverse(params: dict) -> Check:
    f = _Failure()
    d = min(params["max_degree"], 10)
    p = sp.evaluate(sp.patch_expr(), d)
    inv = sp.p_inv(d)
    if not sf.plethysm(p, inv).agrees_with(sf.z_X(), d) or not sf.plethysm(inv, p).agrees_with(sf.z_X(), d):
        f.add(None, "P(X,-X,0) and its inverse do not compose to X")
    for n, c in enumerate(sf.type_series(inv).coefficients(d)):
        if c < 0 or c.denominator != 1:
            f.add(None, f"type coefficient {n} of the inverse is {c}")
    return f.check("series.p_inverse", f"round trip and nonnegativity, degree<={d}")


def _leaf_subsets(g: Graph, rng: random.Random) -> list[tuple[int, ...]]:
    leaves = g.leaves()
    if len(leaves) <= MAX_EXHAUSTIVE_LEAVES:
        return [s for k in range(len(leaves) + 1) for s in combinations(leaves, k)]
    out = []
    for _ in range(SAMPLE_SUBSETS):
        out.append(tuple(v for v in leaves if rng.random() < 0.5))
    return out


def check_confluence(params: dict) -> Check:
    f = _Failure()
    rng = random.Random(params["seed"])
    tried = 0
    for n in range(1, params["max_n"] + 1):
        for g in enumerate_connected(n):
            if g.is_k2():
                continue
            r = reduce(g)
            for u in _leaf_subsets(g, rng):
                if len(u) == g.n:
                    continue
                tried += 1
                h = rho_lambda(g, u)
                if not is_isomorphic(reduce(h), r):
                    f.add(g, f"{to_graph6(g)} with leaves {u}")
    return f.check("reduction.confluence", f"{tried} (graph, leaf subset) pairs")


def check_reduction_output(params: dict) -> Check:
    f = _Failure()
    for n in range(1, params["max_n"] + 1):
        for g in enumerate_connected(n):
            if g.is_k2():
                continue
            r = reduce(g)
            if not r.is_connected() or not is_reduced(r):
                f.add(g, f"reduction of {to_graph6(g)} has leaves or siblings")
    return f.check("reduction.output_reduced", "leafless and sibling-free")


def check_induced_cycles(params: dict) -> Check:
    f = _Failure()
    chordal = []
    for n in range(1, params["max_n"] + 1):
        graphs = list(enumerate_connected(n))
        for g in graphs:
            r = reduce(g, k2_as_bullet=True)
            if has_induced_cycle_geq4(g) != has_induced_cycle_geq4(r):
                f.add(g, f"induced-cycle status changes under reduction for {to_graph6(g)}")
        table = brute_joint_matrix(n, (g for g in graphs if not has_induced_cycle_geq4(g)))
        chordal.append(table.total)
        if not table.is_symmetric():
            f.add(None, f"n={n}: chordal table asymmetric at {table.asymmetric_cells()}")
    return f.check("reduction.induced_cycles", f"chordal counts {chordal}")


def check_patch_round_trip(params: dict) -> Check:
    f = _Failure()
    total = 0
    for n in range(1, min(params["max_n"], 6) + 1):
        for g in labeled_connected_graphs(n):
            if g.is_k2():
                continue
            total += 1
            d = comating_graph(g)
            back = patch_compose(d)
            if back != g:
                f.add(g, f"compose(decompose(G)) != G for {to_graph6(g)}")
            elif comating_graph(back) != d:
                f.add(g, f"decompose(compose(D)) != D for {to_graph6(g)}")
    return f.check("graphs.patch_round_trip", f"{total} labeled graphs")


def _tagged_candidates(max_size: int):
    """Every tag assignment on every connected base graph whose expansion has
    at most ``max_size`` vertices (one base graph per class)."""
    for m in range(1, max_size + 1):
        for base in enumerate_connected(m):
            budget = max_size - m
            options = [None] + [(kind, k) for kind in "ST" for k in range(1, budget + 1)]

            def assign(v: int, left: int, tags: list):
                if v == m:
                    yield TaggedGraph(base, tuple(tags))
                    return
                for tag in options:
                    cost = 0 if tag is None else tag[1]
                    if cost <= left:
                        tags.append(tag)
                        yield from assign(v + 1, left - cost, tags)
                        tags.pop()

            yield from assign(0, budget, [])


def check_decorated(params: dict) -> Check:
    f = _Failure()
    size = min(params["max_n"], 6)
    images: dict[bytes, bytes] = {}
    n_valid = 0
    for tg in _tagged_candidates(size):
        if not is_valid(tg):
            continue
        key = tg.canonical_form()
        if key in images:
            continue
        n_valid += 1
        g = undecorate(tg)
        gk = canonical_form(g)
        if decorate(g).canonical_form() != key:
            f.add(g, f"decorate(undecorate(T)) != T for {tg.to_json()}")
        if gk in images.values():
            f.add(g, f"two tagged graphs expand to {to_graph6(g)}")
        images[key] = gk
    expected = {canonical_form(g) for n in range(1, size + 1) for g in enumerate_connected(n) if not g.is_k2()}
    missing = expected - set(images.values())
    for k in sorted(missing):
        f.add(from_graph6(k.decode()), "connected graph with no tagged preimage")
    for n in range(1, size + 1):
        for g in enumerate_connected(n):
            if g.is_k2():
                continue
            tg = decorate(g)
            if not is_valid(tg) or not is_isomorphic(undecorate(tg), g):
                f.add(g, f"decorate/undecorate fails on {to_graph6(g)}")
    return f.check("graphs.decorated_characterization", f"{n_valid} valid tagged classes, size<={size}")


def check_figures(params: dict) -> Check:
    f = _Failure()
    if params["max_n"] >= 4:
        fig1 = {(0, 3): 1, (0, 1): 1, (0, 0): 1, (1, 1): 1, (1, 0): 1, (3, 0): 1}
        for label, table in (("brute", brute_joint_matrix(4)), ("species", sp.joint_matrix(4, params["max_degree"]))):
            if table.matrix != dict(sorted(fig1.items())):
                f.add(None, f"n=4 {label} table {table.matrix}")
    if params["max_n"] >= 6:
        for label, table in (("brute", brute_joint_matrix(6)), ("species", sp.joint_matrix(6, params["max_degree"]))):
            if table[1, 2] != 2 or table[2, 1] != 2:
                f.add(None, f"n=6 {label}: (1,2)={table[1, 2]}, (2,1)={table[2, 1]}")
    return f.check("figures.spot_values", "n=4 table; n=6 entries (1,2), (2,1)")


CHECKS: dict[str, Callable[[dict], Check]] = {
    "graphs.enumeration": check_enumeration,
    "graphs.graph6_round_trip": check_graph6_round_trip,
    "graphs.patch_round_trip": check_patch_round_trip,
    "graphs.decorated_characterization": check_decorated,
    "joint.dual_path": check_joint_dual_path,
    "joint.symmetry": check_joint_symmetry,
    "joint.count_leq": check_count_leq,
    "joint.count_leq_monotone_symmetric": check_count_leq_monotone,
    "reduction.dual_path": check_by_reduction,
    "reduction.confluence": check_confluence,
    "reduction.output_reduced": check_reduction_output,
    "reduction.induced_cycles": check_induced_cycles,
    "series.known_values": check_known_series,
    "series.all_graphs": check_all_graphs,
    "series.logarithm_round_trips": check_connected_round_trip,
    "series.kilibarda": check_kilibarda,
    "series.m_bullet_brute": check_m_bullet_brute,
    "series.leafless_sibling_free_brute": check_reduced_brute,
    "series.q_closed_form": check_closed_form,
    "series.patch_substitution": check_patch_substitution,
    "series.p_inverse": check_p_inverse,
    "figures.spot_values": check_figures,
}

def _run_one(name: str, params: dict) -> Check:
    start = time.perf_counter()
    try:
        c = CHECKS[name](params)
    except Exception as exc:  # a crashing check is reported, not raised
        c = Check(name, "fail", f"raised {type(exc).__name__}: {exc}")
    c.seconds = round(time.perf_counter() - start, 3)
    return c


def run_suite(
    max_n: int = 7,
    max_st: int = 6,
    max_degree: int = 12,
    seed: int = 0,
    jobs: int = 1,
    stretch: bool = False,
    only: Iterable[str] | None = None,
) -> VerificationReport:
    """Run every cross-check.  ``stretch`` allows ``max_n = 8`` and skips
    the labeled-scan oracle (canonical augmentation only)."""
    cap = 8 if stretch else ORACLE_CAP
    if not 1 <= max_n <= cap:
        raise ValueError(f"max_n must be in 1..{cap}" + ("" if stretch else " (use stretch for 8)"))
    if max_degree < max_n:
        raise ValueError("max_degree must be at least max_n")
    if max_st < 0:
        raise ValueError("max_st must be nonnegative")
    params = {"max_n": max_n, "max_st": max_st, "max_degree": max_degree, "seed": seed, "stretch": stretch}
    names = sorted(CHECKS if only is None else only)
    for name in names:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}")
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            checks = list(pool.map(_run_one, names, [params] * len(names)))
    else:
        checks = [_run_one(name, params) for name in names]
    checks.sort(key=lambda c: c.name)
    return VerificationReport(checks, params, seed)
