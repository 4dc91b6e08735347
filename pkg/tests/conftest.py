"""Shared fixtures and independent oracles used across the test suite.

The oracles here deliberately re-derive everything from definitions
(exhaustive enumeration, definition-chasing digraph construction) so
they stay independent of the code paths they check.
"""

from __future__ import annotations

import itertools

import pytest

from matroid_chroma import (
    Coloring,
    ExchangeDigraph,
    IntersectionInstance,
    LaminarMatroid,
    PartitionMatroid,
)
from matroid_chroma.generators import generate
from matroid_chroma.instances import instance_from_json

LABELS6 = tuple(f"x{i}" for i in range(1, 7))


@pytest.fixture
def laminar6():
    """Two-colorable laminar matroid on six elements."""
    return LaminarMatroid(
        6,
        [{4, 5}, {2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}],
        [1, 2, 3],
        labels=LABELS6,
    )


@pytest.fixture
def laminar6_partial():
    """Partial 2-coloring: classes {x3,x5} and {x1,x2,x4}, x6 uncolored."""
    return Coloring((2, 2, 1, 2, 1, 0), 2)


@pytest.fixture
def matching_parts6():
    """Capacity-1 partition matroid with parts {x1,x6},{x2,x3},{x4,x5}."""
    return PartitionMatroid([{0, 5}, {1, 2}, {3, 4}], n=6, labels=LABELS6)


@pytest.fixture
def pair_instance(laminar6, matching_parts6):
    return IntersectionInstance(laminar6, (matching_parts6,), alpha=2)


@pytest.fixture
def pair_partial():
    """Partial 3-coloring: {x5}, {x3,x4}, {x1,x2}, x6 uncolored."""
    return Coloring((3, 3, 2, 2, 1, 0), 3)


def load_generated(seed, family, **kw):
    """Generate-then-validate helper; returns a LoadedInstance."""
    return instance_from_json(generate(seed, family, **kw), where=f"gen({seed},{family})")


# ---------------------------------------------------------------------------
# Independent oracles.


def subsets(universe):
    items = sorted(universe)
    for r in range(len(items) + 1):
        yield from (frozenset(c) for c in itertools.combinations(items, r))


def brute_rank(m, s):
    """Rank by exhaustive subset enumeration."""
    return max((len(t) for t in subsets(s) if m.is_independent(t)), default=0)


def brute_circuits(m, s):
    """All inclusion-minimal dependent subsets of s, exhaustively."""
    dependents = [t for t in subsets(s) if t and not m.is_independent(t)]
    return [
        c
        for c in dependents
        if not any(d < c for d in dependents)
    ]


def naive_digraph(m, coloring: Coloring) -> ExchangeDigraph:
    """Definition-chasing digraph construction, no circuit shortcut."""
    arcs_by_color = []
    for i in range(1, coloring.num_colors + 1):
        cls = coloring.color_class(i)
        arcs = []
        for x in range(m.n):
            if x in cls:
                continue
            if m.is_independent(cls | {x}):
                arcs.append((-i, x))
            else:
                for y in cls:
                    if m.is_independent((cls - {y}) | {x}):
                        arcs.append((y, x))
        arcs_by_color.append(arcs)
    return ExchangeDigraph(m.n, coloring.num_colors, arcs_by_color, coloring.uncolored())


def all_source_sink_paths(g: ExchangeDigraph, limit: int | None = None):
    """Every simple source-sink path of an exchange digraph (small inputs)."""
    sinks = set(g.sinks)
    found = []

    def walk(path, on_path):
        if limit is not None and len(found) >= limit:
            return
        v = path[-1]
        if v in sinks:
            found.append(tuple(path))
            return
        for w in g.targets_of(v):
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                walk(path, on_path)
                path.pop()
                on_path.remove(w)

    for s in g.sources:
        walk([s], {s})
    return found


def all_subgraph_paths(h, coloring):
    """Every source-sink path of a layered subgraph.

    Arcs strictly climb layers, so paths are simple automatically.
    """
    out = h.out_edges()
    sinks = set(h.sinks(coloring))
    found = []

    def walk(path):
        v = path[-1]
        if v in sinks:
            found.append(tuple(path))
        for w in out.get(v, ()):
            path.append(w)
            walk(path)
            path.pop()

    for v in sorted(v for v, layer in h.layer_of.items() if layer == 0):
        walk([v])
    return found


def chromatic_by_exhaustion(systems, n, max_palette):
    """Minimum palette by enumerating every assignment (tiny n only)."""
    for palette in range(1, max_palette + 1):
        for assignment in itertools.product(range(1, palette + 1), repeat=n):
            classes = {}
            for x, c in enumerate(assignment):
                classes.setdefault(c, set()).add(x)
            if all(
                s.is_independent(cls) for s in systems for cls in classes.values()
            ):
                return palette
    return None
