"""Decorated graphs: a graph with its tufts and sibling groups folded into tags.

A tag is ``None``, ``("S", k)`` (the vertex stands for ``k+1`` mutual
siblings) or ``("T", k)`` (the vertex carries ``k`` pendant leaves).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from ..errors import DisconnectedInput, InvalidTags, K2Input
from .canon import canonical_form
from .core import Graph, bits, from_graph6, to_graph6
from .invariants import leaf_counts, sibling_classes

Tag = Optional[tuple[str, int]]


@dataclass(frozen=True)
class TaggedGraph:
    graph: Graph
    tags: tuple[Tag, ...]

    def __post_init__(self) -> None:
        if len(self.tags) != self.graph.n:
            raise ValueError("need one tag per vertex")
        for t in self.tags:
            if t is not None and (t[0] not in ("S", "T") or int(t[1]) < 1):
                raise ValueError(f"bad tag {t!r}")

    @property
    def sibling_number(self) -> int:
        return max((k for kind, k in filter(None, self.tags) if kind == "S"), default=0)

    @property
    def tuft_number(self) -> int:
        return max((k for kind, k in filter(None, self.tags) if kind == "T"), default=0)

    def canonical_form(self) -> bytes:
        colors = [("", 0) if t is None else t for t in self.tags]
        return canonical_form(self.graph, colors)

    def tag_map(self) -> dict[str, Optional[str]]:
        return {str(v): None if t is None else f"{t[0]}{t[1]}" for v, t in enumerate(self.tags)}

    def to_json(self) -> dict:
        return {"graph6": to_graph6(self.graph), "tags": self.tag_map()}

    @classmethod
    def from_json(cls, doc: dict | str) -> "TaggedGraph":
        if isinstance(doc, str):
            doc = json.loads(doc)
        g = from_graph6(doc["graph6"])
        tags: list[Tag] = [None] * g.n
        for key, val in doc.get("tags", {}).items():
            if val is not None:
                tags[int(key)] = (val[0], int(val[1:]))
        return cls(g, tuple(tags))


def decorate(g: Graph) -> TaggedGraph:
    """Tag tuft roots with ``T_k`` and drop their leaves, then fold each
    sibling class of size ``k+1`` into one vertex tagged ``S_k``.

    Vertices keep their relative order; a folded class sits at the position
    of its least member.
    """
    if g.is_k2():
        raise K2Input("K2 has no decorated graph")
    if not g.is_connected():
        raise DisconnectedInput("decorate needs a connected graph")
    counts = leaf_counts(g)
    leaves = {v for v in range(g.n) if g.adj[v].bit_count() == 1}
    if g.n == 1:
        return TaggedGraph(g, (None,))
    classes = [c for c in sibling_classes(g) if c[0] not in leaves]
    rep = {}
    for c in classes:
        if len(c) > 1 and any(counts[v] for v in c):
            raise AssertionError("a vertex with an adjacent leaf has a sibling")
        for v in c:
            rep[v] = c[0]
    keep = sorted({rep[v] for v in range(g.n) if v not in leaves})
    new = {r: i for i, r in enumerate(keep)}
    adj = []
    for r in keep:
        nb = 0
        for u in bits(g.adj[r]):
            if u in leaves:
                continue
            j = new[rep[u]]
            if j != new[r]:
                nb |= 1 << j
        adj.append(nb)
    size = {c[0]: len(c) for c in classes}
    tags: list[Tag] = []
    for r in keep:
        if size[r] > 1:
            tags.append(("S", size[r] - 1))
        elif counts[r]:
            tags.append(("T", counts[r]))
        else:
            tags.append(None)
    return TaggedGraph(Graph._trusted(len(keep), tuple(adj)), tuple(tags))


def tag_violations(t: TaggedGraph) -> list[str]:
    """Reasons ``t`` is not the decorated graph of any connected graph."""
    g, tags = t.graph, t.tags
    problems = []
    if g.n == 0 or not g.is_connected():
        problems.append("underlying graph is not connected")
        return problems
    if g.n == 1 and tags[0] in (("S", 1), ("T", 1)):
        problems.append("a lone vertex tagged S1 or T1 would expand to K2")
    for c in sibling_classes(g):
        untagged_t = [v for v in c if not (tags[v] and tags[v][0] == "T")]
        if len(untagged_t) > 1:
            problems.append(f"siblings {untagged_t} carry no T tag between them")
    for v in range(g.n):
        if tags[v] is None and g.adj[v].bit_count() == 1:
            (u,) = bits(g.adj[v])
            if not (tags[u] and tags[u][0] == "S"):
                problems.append(f"untagged leaf {v} has no S-tagged neighbor")
    return problems


def is_valid(t: TaggedGraph) -> bool:
    return not tag_violations(t)


def undecorate(t: TaggedGraph) -> Graph:
    """Expand ``S_k`` into ``k+1`` siblings and ``T_k`` into ``k`` leaves.

    Original vertices keep their ids; sibling copies follow, then leaves.
    """
    problems = tag_violations(t)
    if problems:
        raise InvalidTags("; ".join(problems))
    g, tags = t.graph, t.tags
    m = g.n
    groups = [[v] for v in range(m)]
    nxt = m
    for v in range(m):
        if tags[v] and tags[v][0] == "S":
            groups[v].extend(range(nxt, nxt + tags[v][1]))
            nxt += tags[v][1]
    edges = []
    for grp in groups:
        edges.extend((a, b) for i, a in enumerate(grp) for b in grp[i + 1:])
    for u, v in g.edges():
        edges.extend((a, b) for a in groups[u] for b in groups[v])
    for v in range(m):
        if tags[v] and tags[v][0] == "T":
            edges.extend((v, leaf) for leaf in range(nxt, nxt + tags[v][1]))
            nxt += tags[v][1]
    return Graph.from_edges(nxt, edges)
