"""The four DAG families the sorting algorithms run on, plus vertex orders.

star:N      one source fanning out to N-1 leaves (selection-sort shape)
path:N      a chain (insertion-sort shape)
grid:K:S    K-dimensional grid over [0, S)^K, edges increment one coordinate
            (the Young-tableau shape)
hypercube:K subsets of a K-element universe ordered by single-bit insertion

Every family is graded: each edge moves exactly one BFS layer away from the
source, so layer order equals distance order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Union

from .dag import LabeledDag
from .errors import MultipleSourcesError

# Builds beyond this vertex count are refused outright.
MAX_VERTICES = 1 << 24


@dataclass(frozen=True)
class Star:
    n: int


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class YoungGrid:
    dims: int
    side: int


@dataclass(frozen=True)
class Hypercube:
    dims: int


Topology = Union[Star, Path, YoungGrid, Hypercube]


def parse_topology(spec: str) -> Topology:
    """Parse "star:N", "path:N", "grid:K:S" or "hypercube:K"."""
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind == "star" and len(parts) == 2:
            t: Topology = Star(int(parts[1]))
        elif kind == "path" and len(parts) == 2:
            t = Path(int(parts[1]))
        elif kind == "grid" and len(parts) == 3:
            t = YoungGrid(int(parts[1]), int(parts[2]))
        elif kind == "hypercube" and len(parts) == 2:
            t = Hypercube(int(parts[1]))
        else:
            raise ValueError(f"unrecognized topology spec {spec!r}")
    except ValueError as exc:
        raise ValueError(f"unrecognized topology spec {spec!r}") from exc
    _validate(t)
    return t


def format_topology(t: Topology) -> str:
    if isinstance(t, Star):
        return f"star:{t.n}"
    if isinstance(t, Path):
        return f"path:{t.n}"
    if isinstance(t, YoungGrid):
        return f"grid:{t.dims}:{t.side}"
    return f"hypercube:{t.dims}"


def _validate(t: Topology) -> None:
    if isinstance(t, (Star, Path)):
        if t.n < 1:
            raise ValueError(f"{format_topology(t)}: need n >= 1")
    elif isinstance(t, YoungGrid):
        if t.dims < 0 or t.side < 1:
            raise ValueError(f"{format_topology(t)}: need dims >= 0 and side >= 1")
    elif t.dims < 0:
        raise ValueError(f"{format_topology(t)}: need dims >= 0")
    if capacity(t) > MAX_VERTICES:
        raise OverflowError(f"{format_topology(t)} exceeds {MAX_VERTICES} vertices")


def capacity(t: Topology) -> int:
    """Number of vertices the built DAG will have."""
    if isinstance(t, (Star, Path)):
        return t.n
    if isinstance(t, YoungGrid):
        return t.side**t.dims
    return 1 << t.dims


def build(t: Topology) -> LabeledDag:
    """Construct the family member with every label at INF."""
    _validate(t)
    if isinstance(t, Star):
        edges = [(0, v) for v in range(1, t.n)]
        return LabeledDag.from_edges(t.n, edges)
    if isinstance(t, Path):
        edges = [(v, v + 1) for v in range(t.n - 1)]
        return LabeledDag.from_edges(t.n, edges)
    if isinstance(t, YoungGrid):
        return _build_grid(t.dims, t.side)
    return _build_hypercube(t.dims)


def _build_grid(dims: int, side: int) -> LabeledDag:
    n = side**dims
    # row-major index: coordinate i carries weight side**(dims-1-i)
    strides = [side ** (dims - 1 - i) for i in range(dims)]
    edges = []
    for v in range(n):
        rest = v
        for stride in strides:
            coord = rest // stride
            rest %= stride
            if coord + 1 < side:
                edges.append((v, v + stride))
    return LabeledDag.from_edges(n, edges)


def _build_hypercube(dims: int) -> LabeledDag:
    n = 1 << dims
    edges = []
    for u in range(n):
        for b in range(dims):
            bit = 1 << b
            if not u & bit:
                edges.append((u, u | bit))
    return LabeledDag.from_edges(n, edges)


def bfs_order(g: LabeledDag) -> Iterator[int]:
    """Yield every vertex once, breadth-first from the source, expanding
    neighbours in ascending vertex order. Requires a single-source DAG.
    """
    if sum(1 for p in g.prev_adj if not p) != 1:
        raise MultipleSourcesError("bfs_order requires a single-source DAG")
    seen = [False] * g.n
    seen[g.source] = True
    queue = deque([g.source])
    while queue:
        u = queue.popleft()
        yield u
        for v in g.next_adj[u]:
            if not seen[v]:
                seen[v] = True
                queue.append(v)


def cardinality(v: int) -> int:
    """Popcount: how many elements the bitmask vertex contains."""
    return v.bit_count()


def next_same_popcount(x: int) -> int:
    """Smallest integer above x with the same popcount (x > 0).

    Classic bit trick: move the lowest run's top bit up one position and
    compact the rest of the run to the bottom. Constant time, no table.
    """
    low = x & -x
    carried = x + low
    return carried | (((x ^ carried) >> 2) // low)


def hypercube_order(dims: int) -> Iterator[int]:
    """Yield 0..2^dims-1 grouped by ascending popcount, ascending value
    inside each group; a valid BFS order for the hypercube. O(1) state:
    only the current vertex is kept between yields.
    """
    limit = 1 << dims
    for m in range(dims + 1):
        v = (1 << m) - 1
        yield v
        if v == 0:
            continue
        while True:
            v = next_same_popcount(v)
            if v >= limit:
                break
            yield v


def order_for(t: Topology, g: LabeledDag) -> list[int]:
    """Canonical insertion order for a built family member."""
    if isinstance(t, Hypercube):
        return list(hypercube_order(t.dims))
    return list(bfs_order(g))
