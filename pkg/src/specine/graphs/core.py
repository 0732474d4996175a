"""Simple undirected graphs on at most 64 vertices, stored as neighbor bitsets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from ..errors import ParseError

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, increasing."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitset of neighbors of ``v``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES or len(self.adj) != self.n:
            raise ValueError(f"need 0 <= n <= {MAX_VERTICES} and one bitset per vertex")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full or nb >> v & 1:
                raise ValueError(f"vertex {v}: neighbor set out of range or has a loop")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u}-{v}")

    # construction ------------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Graph whose edge set is ``mask`` over the pairs of ``combinations(range(n), 2)``."""
        adj = [0] * n
        for i, (u, v) in enumerate(combinations(range(n), 2)):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls._trusted(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, n: int) -> "Graph":
        """Star on ``n`` vertices: center 0 and ``n-1`` leaves."""
        return cls.from_edges(n, [(0, i) for i in range(1, n)])

    @classmethod
    def bullet(cls) -> "Graph":
        return cls._trusted(1, (0,))

    # queries -----------------------------------------------------------
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v].bit_count() == 1]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return self.component_mask(0) == (1 << self.n) - 1

    def component_mask(self, start: int, within: int | None = None) -> int:
        """Bitset of the component of ``start`` in the subgraph induced on ``within``."""
        within = (1 << self.n) - 1 if within is None else within
        seen = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def is_k2(self) -> bool:
        return self.n == 2 and self.adj == (2, 1)

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph on ``keep`` (relabeled in increasing order) and the old->new map."""
        keep = sorted(set(keep))
        new = {old: i for i, old in enumerate(keep)}
        adj = []
        for old in keep:
            nb = 0
            for u in bits(self.adj[old]):
                j = new.get(u)
                if j is not None:
                    nb |= 1 << j
            adj.append(nb)
        return Graph._trusted(len(keep), tuple(adj)), new

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            nb = 0
            for u in bits(self.adj[v]):
                nb |= 1 << perm[u]
            adj[perm[v]] = nb
        return Graph._trusted(self.n, tuple(adj))

    def edge_mask(self) -> int:
        mask = 0
        for i, (u, v) in enumerate(combinations(range(self.n), 2)):
            if self.adj[u] >> v & 1:
                mask |= 1 << i
        return mask

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, g6={to_graph6(self)!r})"


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """graph6 string: vertex count, then the upper triangle column by column,
    packed six bits per printable byte (offset 63), big-endian, zero padded."""
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ParseError("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise ParseError(f"invalid graph6 character in {text!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise ParseError("graph6 vertex counts above 258047 are not supported")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n > MAX_VERTICES:
        raise ParseError(f"graph has {n} vertices; at most {MAX_VERTICES} supported")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = len(body) * 6 - need
    if pad and body[-1] & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits in graph6 string")
    return Graph._trusted(n, tuple(adj))
