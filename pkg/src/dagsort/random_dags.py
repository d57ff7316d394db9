"""Seeded generators for random single-source DAGs and ordered labelings.

Edges always point from a lower to a higher vertex id, so vertex order is a
topological order and acyclicity is free. Every vertex past 0 gets at least
one incoming edge, which makes 0 the unique source.
"""

from __future__ import annotations

import random

from .dag import INF, LabeledDag, topological_order


def random_single_source_dag(
    rng: random.Random, n: int, extra_edges: int | None = None
) -> LabeledDag:
    """A random DAG on n vertices with single source 0.

    Besides the n-1 spanning edges, up to ``extra_edges`` random forward
    pairs are added (default 2n; duplicates are simply skipped, so the count
    is approximate).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    edges = []
    present = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v))
        present.add((u, v))
    if n >= 2:
        budget = 2 * n if extra_edges is None else extra_edges
        max_pairs = n * (n - 1) // 2
        budget = min(budget, max_pairs - len(present))
        for _ in range(budget):
            u = rng.randrange(n - 1)
            v = rng.randrange(u + 1, n)
            if (u, v) not in present:
                edges.append((u, v))
                present.add((u, v))
    return LabeledDag.from_edges(n, edges)


def random_ordered_labels(
    rng: random.Random,
    g: LabeledDag,
    *,
    spread: int = 6,
    infinity_tail: int = 0,
) -> None:
    """Assign random labels in place that satisfy the ordered property.

    Walks a topological order giving each vertex a label at least the max of
    its predecessors (ties allowed). ``infinity_tail`` vertices at the end
    of the order get INF; that set is successor-closed, so ordering holds.
    """
    order = topological_order(g)
    labels = g.labels
    for v in order:
        floor = max((labels[u] for u in g.prev_adj[v]), default=rng.randint(-20, 20))
        labels[v] = floor + rng.randrange(spread)
    for v in order[g.n - infinity_tail :] if infinity_tail > 0 else []:
        labels[v] = INF
