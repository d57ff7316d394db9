"""Sorting by queue discipline: insert everything, then remove minima.

The topology decides which classical algorithm falls out: a star gives
selection sort, a path insertion sort, a grid a Young-tableau sort, and the
hypercube a hybrid whose exact worst-case comparison count has a closed
form (see analysis).
"""

from __future__ import annotations

from dataclasses import dataclass

from .dag import LabeledDag
from .errors import SizeMismatchError
from .pqueue import OrderedDagQueue
from .topologies import Hypercube, Topology, build, capacity, hypercube_order


@dataclass(frozen=True)
class SortReport:
    """Sorted output plus the instrumented comparison counts, split by phase."""

    output: list[int]
    insert_comparisons: int
    remove_comparisons: int
    topology: Topology | None
    n_elements: int

    @property
    def total_comparisons(self) -> int:
        return self.insert_comparisons + self.remove_comparisons


def dag_sort(
    g: LabeledDag,
    values,
    *,
    order=None,
    topology: Topology | None = None,
) -> SortReport:
    """Sort exactly len(values) == g.n integers through the queue.

    g must start all-INF and is returned to that state (n inserts, n
    removals), so a built DAG can be reused across runs.
    """
    values = list(values)
    if len(values) != g.n:
        raise SizeMismatchError(f"{len(values)} values for {g.n} vertices")
    queue = OrderedDagQueue(g, order=order)
    for value in values:
        queue.insert(value)
    insert_comparisons = queue.counter.count
    output = [queue.remove_min() for _ in range(len(values))]
    return SortReport(
        output=output,
        insert_comparisons=insert_comparisons,
        remove_comparisons=queue.counter.count - insert_comparisons,
        topology=topology,
        n_elements=len(values),
    )


def hypercube_sort(values) -> SortReport:
    """Sort any number of integers on the smallest hypercube that fits.

    Picks dims = ceil(log2(len(values))) (0 for empty or singleton input)
    and simply stops after len(values) removals; the unfilled slots stay at
    INF and never surface.
    """
    values = list(values)
    dims = (len(values) - 1).bit_length() if len(values) > 1 else 0
    t = Hypercube(dims)
    g = build(t)
    queue = OrderedDagQueue(g, order=hypercube_order(dims))
    for value in values:
        queue.insert(value)
    insert_comparisons = queue.counter.count
    output = [queue.remove_min() for _ in range(len(values))]
    return SortReport(
        output=output,
        insert_comparisons=insert_comparisons,
        remove_comparisons=queue.counter.count - insert_comparisons,
        topology=t,
        n_elements=len(values),
    )


def worst_case_input(t: Topology, n: int) -> list[int]:
    """The strictly decreasing input n, n-1, ..., 1: every insert is a new
    minimum and sifts the full distance to the source."""
    if capacity(t) != n:
        raise ValueError(f"n={n} does not fill {t!r} (capacity {capacity(t)})")
    return list(range(n, 0, -1))
