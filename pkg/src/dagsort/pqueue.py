"""Any single-source DAG as a min-priority queue.

Vertices holding INF are free slots; finite labels are the queue contents.
The ordered property makes the source the minimum. Inserting lowers a free
slot's label into place; remove-min raises the source's label to INF. Free
slots are handed out by ascending position in the insertion order (a BFS
order of the DAG), so a fresh queue fills layer by layer.
"""

from __future__ import annotations

import heapq

from .dag import INF, LabeledDag, Label, is_finite_label
from .errors import (
    EmptyQueueError,
    FullQueueError,
    MultipleSourcesError,
    NonFiniteLabelError,
    NotAllInfinityError,
    RaiseToInfinityError,
)
from .reorder import ComparisonCounter, ExchangeTrace, lower_label, raise_label
from .topologies import bfs_order


class OrderedDagQueue:
    """Priority queue over a labeled DAG.

    ``order`` fixes where values are inserted: the free vertex at the
    smallest order position. Defaults to the DAG's BFS order; callers may
    pass any BFS-compatible order (the hypercube's popcount order, say).
    All comparison costs accumulate in ``counter``.
    """

    def __init__(self, dag: LabeledDag, order=None):
        if sum(1 for p in dag.prev_adj if not p) != 1:
            raise MultipleSourcesError("queue requires a single-source DAG")
        if any(l != INF for l in dag.labels):
            raise NotAllInfinityError("queue creation requires all labels at INF")
        self.dag = dag
        order_list = list(order) if order is not None else list(bfs_order(dag))
        if len(order_list) != dag.n or set(order_list) != set(range(dag.n)):
            raise ValueError("order must be a permutation of the vertices")
        if order_list[0] != dag.source:
            raise ValueError("order must start at the source")
        self._order = order_list
        self._position = [0] * dag.n
        for pos, v in enumerate(order_list):
            self._position[v] = pos
        self._free_positions = list(range(dag.n))  # ascending, already a heap
        self._infinite = set(range(dag.n))
        self.counter = ComparisonCounter()
        self.occupied = 0

    @property
    def capacity(self) -> int:
        return self.dag.n

    @property
    def insertion_order(self) -> tuple[int, ...]:
        return tuple(self._order)

    def __len__(self) -> int:
        return self.occupied

    def infinity_slots(self) -> frozenset[int]:
        return frozenset(self._infinite)

    def _pop_free_vertex(self) -> int:
        # lazy deletion: stale positions are skipped on the way out
        while self._free_positions:
            pos = heapq.heappop(self._free_positions)
            v = self._order[pos]
            if v in self._infinite:
                return v
        raise FullQueueError("no free slot available")

    def _absorb_infinity_moves(self, trace: ExchangeTrace) -> None:
        # A lowering sift can displace an INF label off a later slot; each
        # such step moves the free slot from step.to_vertex to
        # step.from_vertex. Raising sifts never displace INF (nothing
        # compares above it), so this is a no-op for them.
        for step in trace.steps:
            if step.moved_label == INF:
                self._infinite.discard(step.to_vertex)
                self._infinite.add(step.from_vertex)
                heapq.heappush(self._free_positions, self._position[step.from_vertex])

    def insert(self, label: Label) -> int:
        """Place a finite label at the first free slot and sift; returns the
        vertex where the label settled."""
        if not is_finite_label(label):
            raise NonFiniteLabelError(f"cannot insert {label!r}")
        if self.occupied >= self.dag.n:
            raise FullQueueError("queue is full")
        v = self._pop_free_vertex()
        self._infinite.discard(v)
        trace = lower_label(self.dag, v, label, self.counter)
        self._absorb_infinity_moves(trace)
        self.occupied += 1
        return trace.terminal_vertex

    def get_min(self) -> tuple[int, Label]:
        """Source vertex and its label; costs zero comparisons."""
        if self.occupied == 0:
            raise EmptyQueueError("queue is empty")
        return self.dag.source, self.dag.labels[self.dag.source]

    def remove_min(self) -> Label:
        if self.occupied == 0:
            raise EmptyQueueError("queue is empty")
        source = self.dag.source
        smallest = self.dag.labels[source]
        trace = raise_label(self.dag, source, INF, self.counter)
        self._infinite.add(trace.terminal_vertex)
        heapq.heappush(self._free_positions, self._position[trace.terminal_vertex])
        self.occupied -= 1
        return smallest

    def lower_label_at(self, v: int, new_label: Label) -> ExchangeTrace:
        """Decrease the label held at v. Lowering a free (INF) slot is a
        targeted insert and consumes that slot."""
        if not is_finite_label(new_label):
            raise NonFiniteLabelError(f"cannot lower to {new_label!r}")
        was_free = self.dag.labels[v] == INF
        trace = lower_label(self.dag, v, new_label, self.counter)
        if was_free:
            self._infinite.discard(v)
            self.occupied += 1
        self._absorb_infinity_moves(trace)
        return trace

    def raise_label_at(self, v: int, new_label: Label) -> ExchangeTrace:
        """Increase the label held at v; raising to INF must use remove_min
        so the free-slot accounting stays truthful."""
        if new_label == INF:
            raise RaiseToInfinityError("use remove_min to vacate a slot")
        if not is_finite_label(new_label):
            raise NonFiniteLabelError(f"cannot raise to {new_label!r}")
        return raise_label(self.dag, v, new_label, self.counter)
