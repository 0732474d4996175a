"""Canonical labeling and automorphisms for small graphs.

The canonical form is the least adjacency bitstring (upper triangle in
graph6 order) over the leaves of an individualization-refinement search
tree.  Subtrees rooted at children that lie in one orbit of the
automorphisms found so far (restricted to those fixing the current prefix)
are skipped, which keeps highly symmetric graphs such as ``K_n`` cheap.
"""

from __future__ import annotations

from typing import Hashable, Sequence

from .core import Graph, bits, to_graph6

Cells = list[list[int]]


def refine(g: Graph, cells: Cells) -> Cells:
    """Coarsest equitable refinement of an ordered partition.

    A cell is split by the vector of neighbor counts into every current
    cell; the pieces are ordered by that vector, so the result depends only
    on the isomorphism class of (graph, ordered partition).
    """
    adj = g.adj
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: Cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(c)
                continue
            changed = True
            for key in keys:
                out.append([v for v in c if sig[v] == key])
        cells = out
        if not changed:
            return cells


def _initial_cells(g: Graph, colors: Sequence[Hashable] | None) -> Cells:
    if colors is None:
        return [list(range(g.n))]
    if len(colors) != g.n:
        raise ValueError("need one color per vertex")
    order = sorted(set(colors))
    return [[v for v in range(g.n) if colors[v] == c] for c in order]


def _certificate(g: Graph, pos: list[int]) -> int:
    # pos[v] = canonical position of v; bits read in graph6 order, first bit most significant
    inv = [0] * g.n
    for v, p in enumerate(pos):
        inv[p] = v
    cert = 0
    adj = g.adj
    for j in range(1, g.n):
        col = adj[inv[j]]
        for i in range(j):
            cert = cert << 1 | (col >> inv[i] & 1)
    return cert


def _search(g: Graph, cells: Cells):
    n = g.n
    best_cert: int | None = None
    best_pos: list[int] | None = None
    autos: list[tuple[int, ...]] = []

    def visit(cells: Cells, prefix: tuple[int, ...]) -> None:
        nonlocal best_cert, best_pos
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            pos = [0] * n
            for i, c in enumerate(cells):
                pos[c[0]] = i
            cert = _certificate(g, pos)
            if best_cert is None or cert < best_cert:
                best_cert, best_pos = cert, pos
            elif cert == best_cert and pos != best_pos:
                inv = [0] * n
                for v, p in enumerate(best_pos):
                    inv[p] = v
                autos.append(tuple(inv[pos[v]] for v in range(n)))
            return
        ti = cells.index(target)
        done: list[int] = []
        for v in target:
            if done:
                stab = [a for a in autos if all(a[u] == u for u in prefix)]
                if stab and _same_orbit(v, done, stab):
                    continue
            rest = [u for u in target if u != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1:]
            visit(refine(g, child), prefix + (v,))
            done.append(v)

    visit(refine(g, cells), ())
    return best_cert, best_pos, autos


def _same_orbit(v: int, done: list[int], gens: list[tuple[int, ...]]) -> bool:
    seen = {v}
    frontier = [v]
    targets = set(done)
    while frontier:
        u = frontier.pop()
        for gamma in gens:
            w = gamma[u]
            if w in targets:
                return True
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return False


def canonical_labeling(g: Graph, colors: Sequence[Hashable] | None = None) -> list[int]:
    """``lab[v]`` is the canonical position of vertex ``v``."""
    if g.n == 0:
        return []
    _, pos, _ = _search(g, _initial_cells(g, colors))
    return pos


def canonical_graph(g: Graph, colors: Sequence[Hashable] | None = None) -> Graph:
    return g.relabel(canonical_labeling(g, colors))


def canonical_form(g: Graph, colors: Sequence[Hashable] | None = None) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic.

    With ``colors`` the isomorphism must also preserve vertex colors; the
    sorted color of each canonical position is appended.
    """
    if g.n == 0:
        return b"?"
    pos = canonical_labeling(g, colors)
    form = to_graph6(g.relabel(pos)).encode()
    if colors is None:
        return form
    by_pos = [None] * g.n
    for v, p in enumerate(pos):
        by_pos[p] = colors[v]
    return form + b"|" + repr(by_pos).encode()


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.num_edges == b.num_edges and canonical_form(a) == canonical_form(b)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Every automorphism of ``g`` as a tuple ``gamma[v]``.

    Plain backtracking: vertices are mapped in order, each to a vertex of
    the same cell of the equitable partition, keeping adjacency to the
    already-mapped vertices consistent.
    """
    n = g.n
    if n == 0:
        return [()]
    cell_of = [0] * n
    for i, c in enumerate(refine(g, [list(range(n))])):
        for v in c:
            cell_of[v] = i
    adj = g.adj
    order = sorted(range(n), key=lambda v: (cell_of[v], v))
    image = [-1] * n
    used = 0
    out: list[tuple[int, ...]] = []

    def extend(k: int) -> None:
        nonlocal used
        if k == n:
            out.append(tuple(image))
            return
        v = order[k]
        for w in range(n):
            if used >> w & 1 or cell_of[w] != cell_of[v]:
                continue
            ok = True
            for u in order[:k]:
                if (adj[v] >> u & 1) != (adj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                extend(k + 1)
                used &= ~(1 << w)
                image[v] = -1

    extend(0)
    return out


def vertex_orbits(g: Graph) -> list[list[int]]:
    """Orbits of ``Aut(g)`` on vertices, each sorted, ordered by least element."""
    group = automorphisms(g)
    orbits: dict[int, list[int]] = {}
    for v in range(g.n):
        orbits.setdefault(min(gamma[v] for gamma in group), []).append(v)
    return [orbits[r] for r in sorted(orbits)]


def subset_orbit_reps(group: list[tuple[int, ...]], n: int, masks) -> list[int]:
    """One representative bitmask per ``group``-orbit among ``masks``."""
    seen: set[int] = set()
    reps = []
    for s in masks:
        if s in seen:
            continue
        reps.append(s)
        for gamma in group:
            t = 0
            for v in bits(s):
                t |= 1 << gamma[v]
            seen.add(t)
    return reps
