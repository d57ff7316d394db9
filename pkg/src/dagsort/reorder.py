"""Sift procedures that restore the ordered property after one label changes.

Lowering a label walks it toward the source, repeatedly swapping with the
largest violating previous neighbour; raising mirrors that toward the sinks
with the smallest violating next neighbour. Raising can also be phrased as
lowering the negated label on the edge-reversed DAG, which
``raise_label_via_reversal`` implements as a cross-check.

Cost model: selecting among a vertex's m previous (or next) neighbours costs
exactly m label comparisons when m >= 1 (m - 1 to find the extreme neighbour
plus one violation test) and 0 when m = 0. Every count in the package is in
these units.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from .dag import Label, LabeledDag, format_label
from .errors import NotLoweringError, NotOrderedError, NotRaisingError


class ComparisonCounter:
    """Mutable tally of label-vs-label comparisons."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def add(self, amount: int) -> None:
        self.count += amount

    def reset(self) -> None:
        self.count = 0

    def __repr__(self) -> str:
        return f"ComparisonCounter(count={self.count})"


class ExchangeStep(NamedTuple):
    """One swap: ``moved_label`` was displaced out of ``to_vertex`` into
    ``from_vertex`` while the sifted label advanced the other way."""

    from_vertex: int
    to_vertex: int
    moved_label: Label


@dataclass(frozen=True)
class ExchangeTrace:
    """Record of one sift: the swaps in order plus where the label settled.

    Consecutive steps form a directed path: each ``to_vertex`` is a previous
    neighbour of its ``from_vertex`` when lowering, a next neighbour when
    raising.
    """

    steps: tuple[ExchangeStep, ...]
    terminal_vertex: int

    def __len__(self) -> int:
        return len(self.steps)


IterationHook = Optional[Callable[[LabeledDag, int], None]]


def format_trace(trace: ExchangeTrace) -> str:
    """Serialize a trace, one ``swap u v label=x`` line per step."""
    return "".join(
        f"swap {s.from_vertex} {s.to_vertex} label={format_label(s.moved_label)}\n"
        for s in trace.steps
    )


def get_largest_violating(
    g: LabeledDag, v: int, counter: ComparisonCounter | None = None
) -> int | None:
    """Previous neighbour of v with the maximum label if that label exceeds
    labels[v], else None. Ties break toward the smallest vertex id. Charges
    len(prev_adj[v]) comparisons when the neighbourhood is nonempty.
    """
    prev = g.prev_adj[v]
    if not prev:
        return None
    labels = g.labels
    best = prev[0]
    best_label = labels[best]
    for u in prev[1:]:
        lu = labels[u]
        if lu > best_label:
            best = u
            best_label = lu
    if counter is not None:
        counter.count += len(prev)
    if best_label > labels[v]:
        return best
    return None


def get_smallest_violating_next(
    g: LabeledDag, v: int, counter: ComparisonCounter | None = None
) -> int | None:
    """Mirror of get_largest_violating: next neighbour with the minimum label
    if that label is below labels[v], smallest-id tie-break, cost
    len(next_adj[v]) when nonempty.
    """
    nxt = g.next_adj[v]
    if not nxt:
        return None
    labels = g.labels
    best = nxt[0]
    best_label = labels[best]
    for u in nxt[1:]:
        lu = labels[u]
        if lu < best_label:
            best = u
            best_label = lu
    if counter is not None:
        counter.count += len(nxt)
    if best_label < labels[v]:
        return best
    return None


def lower_label(
    g: LabeledDag,
    v: int,
    new_label: Label,
    counter: ComparisonCounter | None = None,
    *,
    iteration_hook: IterationHook = None,
    check_ordered: bool = False,
) -> ExchangeTrace:
    """Replace labels[v] with a strictly smaller value and sift it toward the
    source until no previous neighbour violates the ordered property.

    Requires an ordered g on entry (validated only when ``check_ordered`` is
    set, the scan is O(edges)); leaves g ordered with the same label multiset
    except for the one replacement. ``iteration_hook``, when given, is called
    with (g, current_vertex) at the end of every loop iteration; it exists
    for instrumented tests and costs nothing otherwise.
    """
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    if not new_label < g.labels[v]:
        raise NotLoweringError(
            f"new label {new_label!r} does not lower {g.labels[v]!r} at vertex {v}"
        )
    if check_ordered and not g.is_ordered():
        raise NotOrderedError("lower_label requires an ordered DAG")

    labels = g.labels
    labels[v] = new_label
    current = v
    steps: list[ExchangeStep] = []
    while True:
        u = get_largest_violating(g, current, counter)
        if u is None:
            if iteration_hook is not None:
                iteration_hook(g, current)
            break
        displaced = labels[u]
        labels[u] = labels[current]
        labels[current] = displaced
        steps.append(ExchangeStep(current, u, displaced))
        current = u
        if iteration_hook is not None:
            iteration_hook(g, current)
    return ExchangeTrace(tuple(steps), current)


def raise_label(
    g: LabeledDag,
    v: int,
    new_label: Label,
    counter: ComparisonCounter | None = None,
    *,
    iteration_hook: IterationHook = None,
    check_ordered: bool = False,
) -> ExchangeTrace:
    """Replace labels[v] with a strictly larger value (INF allowed) and sift
    it toward the sinks. Exact mirror of lower_label.
    """
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    if not new_label > g.labels[v]:
        raise NotRaisingError(
            f"new label {new_label!r} does not raise {g.labels[v]!r} at vertex {v}"
        )
    if check_ordered and not g.is_ordered():
        raise NotOrderedError("raise_label requires an ordered DAG")

    labels = g.labels
    labels[v] = new_label
    current = v
    steps: list[ExchangeStep] = []
    while True:
        u = get_smallest_violating_next(g, current, counter)
        if u is None:
            if iteration_hook is not None:
                iteration_hook(g, current)
            break
        displaced = labels[u]
        labels[u] = labels[current]
        labels[current] = displaced
        steps.append(ExchangeStep(current, u, displaced))
        current = u
        if iteration_hook is not None:
            iteration_hook(g, current)
    return ExchangeTrace(tuple(steps), current)


def raise_label_via_reversal(
    g: LabeledDag,
    v: int,
    new_label: Label,
    counter: ComparisonCounter | None = None,
) -> ExchangeTrace:
    """Raise by lowering on the logically reversed DAG.

    Negates every label in place (INF becomes -INF), runs lower_label over a
    view that swaps the adjacency roles, then negates back. No edges are
    copied and g ends with its original orientation and label signs, plus the
    one raised label. Must agree exactly with raise_label, swap for swap.
    """
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    if not new_label > g.labels[v]:
        raise NotRaisingError(
            f"new label {new_label!r} does not raise {g.labels[v]!r} at vertex {v}"
        )
    labels = g.labels
    for i in range(g.n):
        labels[i] = -labels[i]
    # source is meaningless on the reversed view; the sift never consults it
    reversed_view = LabeledDag(
        n=g.n,
        prev_adj=g.next_adj,
        next_adj=g.prev_adj,
        labels=labels,
        source=g.source,
    )
    inner = lower_label(reversed_view, v, -new_label, counter)
    for i in range(g.n):
        labels[i] = -labels[i]
    steps = tuple(
        ExchangeStep(s.from_vertex, s.to_vertex, -s.moved_label) for s in inner.steps
    )
    return ExchangeTrace(steps, inner.terminal_vertex)
