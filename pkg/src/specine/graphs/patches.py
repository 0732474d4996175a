"""Patch decomposition: a graph as a co-mating graph with a patch on each vertex.

Leaves designated as *Y-leaves* are cut off; the sibling classes of what
remains become the vertices of the co-mating graph ``M``.  The block of a
class holds its vertices (the roots) together with their Y-leaves, and the
patch records which roots carry tufts.  Composition glues patches back:
roots within a block form a clique, roots of blocks adjacent in ``M`` are
completely joined, and each tuft root gets its leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import DisconnectedInput, ExceptionalSize2, InvalidDecomposition, K2Input, NotALeaf
from .core import Graph, bits
from .invariants import has_siblings, sibling_classes

SINGLE_X_ROOT = "single-X-root"
Z_ROOTS = "Z-roots"
NO_LEAFLESS_ROOT = "no-leafless-root"


def _flag(num_leafless: int) -> str:
    if num_leafless == 0:
        return NO_LEAFLESS_ROOT
    return SINGLE_X_ROOT if num_leafless == 1 else Z_ROOTS


@dataclass(frozen=True)
class Patch:
    tufts: tuple[tuple[int, frozenset[int]], ...]  # (root, leaves), sorted by root
    leafless_roots: frozenset[int]

    @classmethod
    def build(cls, tufts: Iterable[tuple[int, Iterable[int]]], leafless_roots: Iterable[int]) -> "Patch":
        return cls(
            tuple(sorted((r, frozenset(ls)) for r, ls in tufts)),
            frozenset(leafless_roots),
        )

    @property
    def sort_flag(self) -> str:
        return _flag(len(self.leafless_roots))

    @property
    def roots(self) -> frozenset[int]:
        return frozenset(r for r, _ in self.tufts) | self.leafless_roots

    @property
    def leaves(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for _, ls in self.tufts:
            out |= ls
        return out

    @property
    def vertices(self) -> frozenset[int]:
        return self.roots | self.leaves

    def problems(self) -> list[str]:
        out = []
        if not self.vertices:
            out.append("empty patch")
        roots = [r for r, _ in self.tufts]
        if len(set(roots)) != len(roots):
            out.append("two tufts share a root")
        if set(roots) & self.leafless_roots:
            out.append("a tuft root is also listed as leafless")
        seen: set[int] = set()
        for r, ls in self.tufts:
            if not ls:
                out.append(f"tuft at {r} has no leaves")
            if ls & seen or ls & self.roots:
                out.append(f"tuft at {r} shares vertices")
            seen |= ls
        return out


@dataclass(frozen=True)
class PatchDecomposition:
    """``partition[i]`` is block ``i``; vertex ``i`` of ``comating`` is block ``i``."""

    partition: tuple[frozenset[int], ...]
    comating: Graph
    patches: tuple[Patch, ...]

    @property
    def y_leaves(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for p in self.patches:
            out |= p.leaves
        return out

    def normalized(self) -> "PatchDecomposition":
        """Same decomposition with blocks ordered by root with least label."""
        order = sorted(range(len(self.partition)), key=lambda i: min(self.patches[i].roots))
        pos = [0] * len(order)
        for new, old in enumerate(order):
            pos[old] = new
        return PatchDecomposition(
            tuple(self.partition[i] for i in order),
            self.comating.relabel(pos),
            tuple(self.patches[i] for i in order),
        )


def comating_graph(g: Graph, y_leaves: Iterable[int] | None = None) -> PatchDecomposition:
    """Decompose ``g``; ``y_leaves`` defaults to all leaves of ``g``."""
    if g.is_k2():
        raise K2Input("K2 has no patch decomposition")
    if not g.is_connected():
        raise DisconnectedInput("patch decomposition needs a connected graph")
    ys = set(g.leaves() if y_leaves is None else y_leaves)
    for v in ys:
        if not 0 <= v < g.n or g.degree(v) != 1:
            raise NotALeaf(f"vertex {v} is not a leaf")
    h, to_h = g.induced_subgraph(v for v in range(g.n) if v not in ys)
    from_h = {i: v for v, i in to_h.items()}
    classes = [[from_h[i] for i in c] for c in sibling_classes(h)]
    block_of = {v: b for b, c in enumerate(classes) for v in c}
    m_adj = []
    for b, c in enumerate(classes):
        nb = 0
        for u in bits(g.adj[c[0]]):
            if u not in ys and block_of[u] != b:
                nb |= 1 << block_of[u]
        m_adj.append(nb)
    partition, patches = [], []
    for c in classes:
        tufts, leafless = [], []
        for r in c:
            ls = [u for u in bits(g.adj[r]) if u in ys]
            if ls:
                tufts.append((r, ls))
            else:
                leafless.append(r)
        p = Patch.build(tufts, leafless)
        patches.append(p)
        partition.append(p.vertices)
    return PatchDecomposition(tuple(partition), Graph._trusted(len(classes), tuple(m_adj)), tuple(patches))


def _validate(d: PatchDecomposition) -> int:
    if not (len(d.partition) == len(d.patches) == d.comating.n) or not d.partition:
        raise InvalidDecomposition("partition, patches and co-mating graph disagree in size")
    total = 0
    seen: set[int] = set()
    for block, p in zip(d.partition, d.patches):
        problems = p.problems()
        if problems:
            raise InvalidDecomposition("; ".join(problems))
        if p.vertices != block:
            raise InvalidDecomposition(f"patch vertices {sorted(p.vertices)} differ from block {sorted(block)}")
        if block & seen:
            raise InvalidDecomposition("blocks overlap")
        seen |= block
        total += len(block)
    if seen != set(range(total)):
        raise InvalidDecomposition("blocks must partition 0..N-1")
    m = d.comating
    if not m.is_connected() or has_siblings(m):
        raise InvalidDecomposition("co-mating graph must be connected and sibling-free")
    return total


def patch_compose(d: PatchDecomposition) -> Graph:
    n = _validate(d)
    if d.comating.n == 1 and n == 2:
        # a block with two Z-roots, or one tuft with one leaf: both give K2
        raise ExceptionalSize2("this size-2 structure composes to K2")
    edges: list[tuple[int, int]] = []
    roots = [sorted(p.roots) for p in d.patches]
    for p, rs in zip(d.patches, roots):
        edges.extend((a, b) for i, a in enumerate(rs) for b in rs[i + 1:])
        for r, ls in p.tufts:
            edges.extend((r, leaf) for leaf in ls)
    for a, b in d.comating.edges():
        edges.extend((u, v) for u in roots[a] for v in roots[b])
    return Graph.from_edges(n, edges)
