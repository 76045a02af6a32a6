"""Immutable simple graphs over vertices ``0..n-1`` with bitmask vertex sets."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Set
from typing import Any

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for invalid graph construction or vertex arguments."""


class EdgeListParseError(GraphError):
    """Raised when edge-list text is malformed.  Carries the 1-based line number."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class VertexSet(Set):
    """Immutable set of vertices stored as an integer bitmask.

    Iteration is always in ascending vertex order.  Set operators return new
    ``VertexSet`` objects and never modify their operands.
    """

    __slots__ = ("bits",)

    def __init__(self, vertices: Iterable[int] = ()) -> None:
        bits = 0
        for v in vertices:
            if v < 0:
                raise GraphError(f"negative vertex {v}")
            bits |= 1 << v
        self.bits = bits

    @classmethod
    def from_mask(cls, bits: int) -> VertexSet:
        obj = cls.__new__(cls)
        obj.bits = bits
        return obj

    @classmethod
    def _from_iterable(cls, it: Iterable[int]) -> VertexSet:
        return cls(it)

    def __contains__(self, v: Any) -> bool:
        return isinstance(v, int) and v >= 0 and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __hash__(self) -> int:
        return hash(("VertexSet", self.bits))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.bits == other.bits
        if isinstance(other, Set):
            return len(self) == len(other) and all(v in self for v in other)
        return NotImplemented

    def __or__(self, other: Iterable[int]) -> VertexSet:
        return VertexSet.from_mask(self.bits | _as_mask(other))

    def __and__(self, other: Iterable[int]) -> VertexSet:
        return VertexSet.from_mask(self.bits & _as_mask(other))

    def __sub__(self, other: Iterable[int]) -> VertexSet:
        return VertexSet.from_mask(self.bits & ~_as_mask(other))

    __ror__ = __or__
    __rand__ = __and__

    def complement(self, n: int) -> VertexSet:
        return VertexSet.from_mask(((1 << n) - 1) & ~self.bits)

    def __repr__(self) -> str:
        return f"VertexSet({list(self)})"


def _as_mask(vs: Iterable[int]) -> int:
    if isinstance(vs, VertexSet):
        return vs.bits
    return VertexSet(vs).bits


def popcount(x: int) -> int:
    return x.bit_count()


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitmask.  Instances are
    immutable; build them with :meth:`from_edges` or :func:`from_edge_list`.
    """

    __slots__ = ("n", "adj", "name")

    def __init__(self, n: int, adj: Iterable[int], name: str = "") -> None:
        adj = tuple(adj)
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(adj) != n:
            raise GraphError("adjacency length does not match order")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if (nb >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in VertexSet.from_mask(nb):
                if not (adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "name", name)

    def __setattr__(self, key: str, value: Any) -> None:
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if (adj[u] >> v) & 1:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, name)

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.from_mask((1 << self.n) - 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in VertexSet.from_mask(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[self._check(v)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[self._check(u)] >> self._check(v)) & 1)

    def closed_masks(self) -> tuple[int, ...]:
        return tuple(a | (1 << v) for v, a in enumerate(self.adj))

    def add_edge(self, u: int, v: int) -> Graph:
        """Return a new graph with the extra edge ``uv``."""
        return Graph.from_edges(self.n, self.edges() + [(min(u, v), max(u, v))], self.name)

    def _check(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range 0..{self.n - 1}")
        return v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.num_edges()}>"


def open_neighborhood(g: Graph, v: int) -> VertexSet:
    return VertexSet.from_mask(g.adj[g._check(v)])


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    return VertexSet.from_mask(g.adj[g._check(v)] | (1 << v))


def is_connected(g: Graph) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in VertexSet.from_mask(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def from_edge_list(text: str, name: str = "") -> Graph:
    """Parse the edge-list text format.

    Comment lines start with ``#``.  The first other line holds the order
    ``n``; every following line is ``"u v"`` with a single space.
    """
    n = None
    adj: list[int] = []
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for lineno, line in enumerate(lines, start=1):
        if line.startswith("#"):
            continue
        if n is None:
            if not (line.isascii() and line.isdigit()):
                raise EdgeListParseError(lineno, f"expected vertex count, got {line!r}")
            n = int(line)
            if not 1 <= n <= MAX_ORDER:
                raise EdgeListParseError(lineno, f"vertex count {n} outside 1..{MAX_ORDER}")
            adj = [0] * n
            continue
        parts = line.split(" ")
        if len(parts) != 2 or not all(p.isascii() and p.isdigit() for p in parts):
            raise EdgeListParseError(lineno, f"expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        for x in (u, v):
            if x >= n:
                raise EdgeListParseError(lineno, f"vertex {x} out of range for n={n}")
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop at vertex {u}")
        if (adj[u] >> v) & 1:
            raise EdgeListParseError(lineno, f"duplicate edge {min(u, v)} {max(u, v)}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if n is None:
        raise EdgeListParseError(len(lines) + 1, "missing vertex count")
    return Graph(n, adj, name)


def to_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(str(g.n))
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"
