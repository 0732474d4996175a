"""Sibling classes, sibling and tuft numbers, induced cycles."""

from __future__ import annotations

from .core import Graph, bits


def sibling_classes(g: Graph) -> list[list[int]]:
    """Classes of equal closed neighborhood, ordered by least vertex."""
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v] | 1 << v, []).append(v)
    return sorted(groups.values())


def sibling_number(g: Graph) -> int:
    return max((len(c) for c in sibling_classes(g)), default=1) - 1


def has_siblings(g: Graph) -> bool:
    seen = set()
    for v in range(g.n):
        key = g.adj[v] | 1 << v
        if key in seen:
            return True
        seen.add(key)
    return False


def leaf_counts(g: Graph) -> list[int]:
    """``counts[v]`` = number of leaves adjacent to ``v``."""
    leaf_mask = 0
    for v in range(g.n):
        if g.adj[v].bit_count() == 1:
            leaf_mask |= 1 << v
    return [(g.adj[v] & leaf_mask).bit_count() for v in range(g.n)]


def tuft_number(g: Graph) -> int:
    return max(leaf_counts(g), default=0)


def sibling_tuft(g: Graph) -> tuple[int, int]:
    return sibling_number(g), tuft_number(g)


def induced_cycle_lengths(g: Graph) -> set[int]:
    """Lengths ``k >= 4`` of the induced cycles of ``g``.

    Each cycle is grown as an induced path from its least vertex; the path
    closes when its new end sees the start and none of the interior.
    """
    found: set[int] = set()
    adj = g.adj

    def grow(last: int, length: int, on_path: int, interior: int, start: int) -> None:
        for w in bits(adj[last]):
            if w <= start or on_path >> w & 1 or adj[w] & interior:
                continue
            if length >= 2 and adj[w] >> start & 1:
                if length >= 3:
                    found.add(length + 1)
                continue
            inner = interior | 1 << last if length >= 2 else 0
            grow(w, length + 1, on_path | 1 << w, inner, start)

    for s in range(g.n):
        grow(s, 1, 1 << s, 0, s)
    return found


def has_induced_cycle_geq4(g: Graph) -> bool:
    return bool(induced_cycle_lengths(g))


def is_chordal(g: Graph) -> bool:
    return not induced_cycle_lengths(g)
