"""Render exchange traces as DOT snapshot sequences.

One digraph per sift iteration: the vertex currently holding the sifted
label is filled gray, the neighbour the next exchange will target is filled
black. The final snapshot has no black vertex. Output is fully
deterministic, byte for byte.
"""

from __future__ import annotations

from .dag import Label, LabeledDag, format_label
from .reorder import ExchangeTrace


def _snapshot(
    g: LabeledDag,
    labels: list[Label],
    index: int,
    current: int,
    target: int | None,
) -> str:
    lines = [f"digraph sift_{index} {{"]
    for v in range(g.n):
        attrs = [f'label="{format_label(labels[v])}"']
        if v == current:
            attrs.append("style=filled")
            attrs.append("fillcolor=gray")
        elif v == target:
            attrs.append("style=filled")
            attrs.append("fillcolor=black")
            attrs.append("fontcolor=white")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_snapshots(
    g: LabeledDag,
    labels_before: list[Label],
    vertex: int,
    new_label: Label,
    trace: ExchangeTrace,
) -> list[str]:
    """Replay a lowering (or raising) trace against the pre-sift labels and
    render len(trace) + 1 snapshots."""
    labels = list(labels_before)
    labels[vertex] = new_label
    steps = trace.steps
    first_target = steps[0].to_vertex if steps else None
    snapshots = [_snapshot(g, labels, 0, vertex, first_target)]
    for i, step in enumerate(steps):
        labels[step.from_vertex], labels[step.to_vertex] = (
            step.moved_label,
            labels[step.from_vertex],
        )
        nxt = steps[i + 1].to_vertex if i + 1 < len(steps) else None
        snapshots.append(_snapshot(g, labels, i + 1, step.to_vertex, nxt))
    return snapshots
