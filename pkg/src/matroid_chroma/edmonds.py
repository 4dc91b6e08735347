"""Exchange digraph, color-chordless paths, and single-matroid coloring.

Vertex convention used throughout the package: a ground-set element is
its own index (0-based, always >= 0) and the node for color ``i``
(1-based) is encoded as ``-i``.  A path is a plain tuple of such
vertices, source first, sink last.  Arcs leave only color nodes and
colored elements, so every vertex after the first on a path is an
element.

The digraph for a coloring ``c`` with classes ``S_1..S_t`` has, per
color ``i``:

* an arc ``(-i, x)`` for every ``x`` outside ``S_i`` with ``S_i + {x}``
  independent, and
* arcs ``(y, x)`` for every ``y`` in the unique circuit of
  ``S_i + {x}`` (minus ``x`` itself) when that union is dependent.

Updating along a source-sink path shifts each vertex to its
predecessor's old color and colors the sink; a path with no
"color chord" (an arc jumping forward from a vertex with the same color
as the landing vertex's predecessor) preserves feasibility.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import ceil
from typing import Callable, Iterable, Mapping

from .errors import ContractError, InputError, ValidationError
from .matroids import Matroid

Path = tuple[int, ...]


def color_node(i: int) -> int:
    """Vertex encoding of color ``i`` (1-based)."""
    if i < 1:
        raise InputError(f"colors are 1-based, got {i}")
    return -i


def is_color_node(v: int) -> bool:
    return v < 0


def vertex_color(v: int, coloring: "Coloring") -> int:
    """Color of a vertex: itself for a color node, else its assignment."""
    return -v if v < 0 else coloring.color_of(v)


@dataclass(frozen=True)
class Coloring:
    """A total map from elements to ``{0..num_colors}``; 0 means uncolored."""

    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self):
        for x, c in enumerate(self.colors):
            if not 0 <= c <= self.num_colors:
                raise ValidationError(
                    f"element {x} has color {c}, outside 0..{self.num_colors}"
                )

    @classmethod
    def empty(cls, n: int, num_colors: int) -> "Coloring":
        return cls((0,) * n, num_colors)

    @classmethod
    def from_classes(
        cls, n: int, num_colors: int, classes: Mapping[int, Iterable[int]]
    ) -> "Coloring":
        colors = [0] * n
        for i, members in classes.items():
            for x in members:
                if colors[x]:
                    raise ValidationError(f"element {x} assigned two colors")
                colors[x] = i
        return cls(tuple(colors), num_colors)

    @property
    def n(self) -> int:
        return len(self.colors)

    def color_of(self, x: int) -> int:
        return self.colors[x]

    def color_class(self, i: int) -> frozenset[int]:
        return frozenset(x for x, c in enumerate(self.colors) if c == i)

    def classes(self) -> list[frozenset[int]]:
        """All classes, index ``i - 1`` holding class ``i`` (may be empty)."""
        out: list[set[int]] = [set() for _ in range(self.num_colors)]
        for x, c in enumerate(self.colors):
            if c:
                out[c - 1].add(x)
        return [frozenset(s) for s in out]

    def uncolored(self) -> tuple[int, ...]:
        return tuple(x for x, c in enumerate(self.colors) if c == 0)

    @property
    def colored_count(self) -> int:
        return sum(1 for c in self.colors if c)

    @property
    def is_total(self) -> bool:
        return all(self.colors)

    def colors_used(self) -> int:
        return len({c for c in self.colors if c})


class ExchangeDigraph:
    """The exchange digraph of a matroid under a coloring.

    ``arcs_by_color[i - 1]`` is the arc set contributed by class ``i``;
    every arc in it has a source of color ``i``.  Sources are the color
    nodes, sinks the uncolored elements.
    """

    def __init__(
        self,
        n: int,
        num_colors: int,
        arcs_by_color: Iterable[Iterable[tuple[int, int]]],
        sinks: Iterable[int],
    ):
        self.n = n
        self.num_colors = num_colors
        self.arcs_by_color = tuple(frozenset(a) for a in arcs_by_color)
        self.sources = tuple(color_node(i) for i in range(1, num_colors + 1))
        self.sinks = tuple(sorted(sinks))
        out: dict[int, list[int]] = {}
        incoming: dict[int, list[tuple[int, int]]] = {}
        for i, arcs in enumerate(self.arcs_by_color, start=1):
            for src, dst in arcs:
                out.setdefault(src, []).append(dst)
                incoming.setdefault(dst, []).append((src, i))
        self.out_adj = {v: tuple(sorted(ts)) for v, ts in out.items()}
        self.in_adj = {v: tuple(sorted(ps)) for v, ps in incoming.items()}

    @property
    def all_arcs(self) -> frozenset[tuple[int, int]]:
        return frozenset(a for arcs in self.arcs_by_color for a in arcs)

    def has_arc(self, src: int, dst: int) -> bool:
        return dst in self.out_adj.get(src, ())

    def targets_of(self, v: int) -> tuple[int, ...]:
        return self.out_adj.get(v, ())


def build_digraph(m: Matroid, coloring: Coloring) -> ExchangeDigraph:
    """Construct the exchange digraph of ``m`` under ``coloring``.

    Every color class must be independent; a dependent class raises a
    ContractError naming it.  Arcs are derived through one circuit
    computation per (color, outside-element) pair.
    """
    n = m.n
    arcs_by_color: list[list[tuple[int, int]]] = []
    classes = coloring.classes()
    for i, cls in enumerate(classes, start=1):
        if not m.is_independent(cls):
            raise ContractError(
                f"color class {i} is dependent: {sorted(cls)}"
            )
    for i, cls in enumerate(classes, start=1):
        arcs: list[tuple[int, int]] = []
        node = color_node(i)
        for x in range(n):
            if x in cls:
                continue
            circuit = m.find_circuit(cls, x, check=False)
            if circuit is None:
                arcs.append((node, x))
            else:
                arcs.extend((y, x) for y in circuit if y != x)
        arcs_by_color.append(arcs)
    return ExchangeDigraph(n, coloring.num_colors, arcs_by_color, coloring.uncolored())


def is_color_chordless(g: ExchangeDigraph, coloring: Coloring, path: Path) -> bool:
    """True iff no arc jumps forward from the color of the landing's predecessor.

    A color chord of ``(x_1..x_l)`` is an arc ``(x_j, x_k)`` between
    element vertices with ``j <= k - 2`` whose source has the same color
    as ``x_{k-1}`` under ``coloring``.
    """
    for k in range(2, len(path)):
        prev_color = vertex_color(path[k - 1], coloring)
        target = path[k]
        for j in range(k - 1):
            v = path[j]
            if is_color_node(v):
                continue
            if coloring.color_of(v) == prev_color and g.has_arc(v, target):
                return False
    return True


def apply_path(coloring: Coloring, path: Path) -> Coloring:
    """The coloring obtained by shifting colors along ``path``.

    Each vertex from the third on takes its predecessor's old color; the
    second takes the head's color (the head itself, for a color node,
    else its old assignment, after which an element head is uncolored).
    The input coloring is not modified.  A one-vertex path is a no-op.
    """
    if len(path) < 2:
        return coloring
    new = list(coloring.colors)
    head, second = path[0], path[1]
    if is_color_node(head):
        new[second] = -head
    else:
        new[second] = coloring.color_of(head)
        new[head] = 0
    for k in range(2, len(path)):
        new[path[k]] = coloring.color_of(path[k - 1])
    return Coloring(tuple(new), coloring.num_colors)


def shortest_path_selector(g: ExchangeDigraph, coloring: Coloring) -> Path | None:
    """Shortest source-sink path by BFS with index tie-breaking.

    Color nodes seed the queue in ascending color order and neighbors
    expand in ascending index order, so the parent tree is deterministic.
    The sink is the lowest-index uncolored element reachable.  A
    shortest path has no chords at all, hence is color-chordless.
    """
    parent: dict[int, int] = {}
    seen = set(g.sources)
    queue = deque(g.sources)
    while queue:
        v = queue.popleft()
        for w in g.targets_of(v):
            if w not in seen:
                seen.add(w)
                parent[w] = v
                queue.append(w)
    reachable = [x for x in g.sinks if x in seen]
    if not reachable:
        return None
    v = reachable[0]
    rev = [v]
    while not is_color_node(v):
        v = parent[v]
        rev.append(v)
    return tuple(reversed(rev))


def dfs_chordless_selector(g: ExchangeDigraph, coloring: Coloring) -> Path | None:
    """Some color-chordless source-sink path, by backtracking DFS.

    Extends the current path only when the new vertex introduces no
    color chord, so any path reaching a sink is color-chordless by
    construction.  Deterministic (ascending colors, ascending targets)
    but deliberately not shortest; worst-case exponential, intended for
    small instances exercising path-choice freedom.
    """
    sink_set = set(g.sinks)
    path: list[int] = []
    on_path: set[int] = set()

    def creates_chord(w: int) -> bool:
        tail_color = vertex_color(path[-1], coloring)
        for v in path[:-1]:
            if is_color_node(v):
                continue
            if coloring.color_of(v) == tail_color and g.has_arc(v, w):
                return True
        return False

    def extend(v: int) -> Path | None:
        path.append(v)
        on_path.add(v)
        if v in sink_set:
            return tuple(path)
        for w in g.targets_of(v):
            if w in on_path or creates_chord(w):
                continue
            found = extend(w)
            if found is not None:
                return found
        path.pop()
        on_path.remove(v)
        return None

    for source in g.sources:
        found = extend(source)
        if found is not None:
            return found
    return None


Selector = Callable[[ExchangeDigraph, Coloring], Path | None]

SELECTORS: dict[str, Selector] = {
    "shortest": shortest_path_selector,
    "dfs-chordless": dfs_chordless_selector,
}


def resolve_selector(selector: str | Selector) -> Selector:
    if callable(selector):
        return selector
    try:
        return SELECTORS[selector]
    except KeyError:
        raise InputError(
            f"unknown selector {selector!r}; expected one of {sorted(SELECTORS)}"
        ) from None


def color_single(
    m: Matroid, alpha: int, selector: str | Selector = "shortest"
) -> Coloring | None:
    """Color all elements of ``m`` with ``alpha`` colors, or fail.

    One element is newly colored per iteration by updating along a
    color-chordless source-sink path of the freshly built exchange
    digraph.  Returns None (a normal outcome, not an error) when some
    iteration has no source-sink path.  Loops in ``m`` are rejected.
    """
    if alpha < 1:
        raise InputError(f"need at least one color, got {alpha}")
    loops = m.loops()
    if loops:
        raise InputError(f"matroid has loops {list(loops)}; no coloring can place them")
    pick = resolve_selector(selector)
    coloring = Coloring.empty(m.n, alpha)
    for _ in range(m.n):
        g = build_digraph(m, coloring)
        path = pick(g, coloring)
        if path is None:
            return None
        coloring = apply_path(coloring, path)
    return coloring


def chromatic_number(m: Matroid, selector: str | Selector = "shortest") -> int:
    """Minimum palette size admitting a feasible total coloring.

    Binary search over the palette; success is monotone in the palette
    size.  The search starts at ``ceil(n / rank)``.
    """
    if m.n == 0:
        return 0
    loops = m.loops()
    if loops:
        raise InputError(f"matroid has loops {list(loops)}")
    lo = ceil(m.n / m.rank())
    hi = m.n
    while lo < hi:
        mid = (lo + hi) // 2
        if color_single(m, mid, selector) is not None:
            hi = mid
        else:
            lo = mid + 1
    return lo


@dataclass(frozen=True)
class VerificationReport:
    """Independence verdicts for every nonempty class of a coloring."""

    class_results: tuple[tuple[int, int, bool], ...]  # (matroid, color, ok)
    uncolored: tuple[int, ...]

    @property
    def feasible(self) -> bool:
        return all(ok for _, _, ok in self.class_results)

    @property
    def complete(self) -> bool:
        return not self.uncolored

    def violations(self) -> tuple[tuple[int, int], ...]:
        return tuple((mi, ci) for mi, ci, ok in self.class_results if not ok)

    def describe(self) -> str:
        if self.feasible:
            body = "all classes independent"
        else:
            body = "; ".join(
                f"class {ci} dependent in matroid {mi}" for mi, ci in self.violations()
            )
        if self.uncolored:
            body += f"; uncolored elements {list(self.uncolored)}"
        return body


def verify_coloring(ms: Iterable[Matroid], coloring: Coloring) -> VerificationReport:
    """Check every nonempty class of ``coloring`` against every matroid."""
    results = []
    for mi, m in enumerate(ms):
        for ci, cls in enumerate(coloring.classes(), start=1):
            if cls:
                results.append((mi, ci, m.is_independent(cls)))
    return VerificationReport(tuple(results), coloring.uncolored())
