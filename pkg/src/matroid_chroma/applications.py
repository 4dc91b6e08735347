"""Rainbow matroid covering and graph-matroid strong coloring.

Both applications reduce to intersection coloring.  A rainbow instance
turns its blocks into a capacity-1 partition matroid over the covered
elements; a graph becomes one capacity-1 partition matroid per matching
of a ``max_degree + 1`` edge coloring, each matching contributing the
matched pairs as two-element parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .edmonds import Coloring
from .errors import InputError, ValidationError
from .intersection import IntersectionInstance, color_intersection
from .matroids import Matroid, PartitionMatroid

Edge = tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected simple graph: no self-loops, no parallel edges."""

    num_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        seen = set()
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValidationError(
                    f"edge ({u},{v}) outside vertex range 0..{self.num_vertices - 1}"
                )
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise ValidationError(f"parallel edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def max_degree(self) -> int:
        deg = [0] * self.num_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return max(deg, default=0)

    def is_independent_set(self, vertices: Iterable[int]) -> bool:
        s = set(vertices)
        return not any(u in s and v in s for u, v in self.edges)


class GraphIndependenceSystem:
    """Duck-typed oracle over a graph's independent vertex sets.

    Not a matroid; exists so brute-force chromatic search can treat the
    graph and matroid constraints uniformly.
    """

    kind = "graph"

    def __init__(self, graph: SimpleGraph):
        self.graph = graph

    @property
    def n(self) -> int:
        return self.graph.num_vertices

    def is_independent(self, vertices: Iterable[int]) -> bool:
        return self.graph.is_independent_set(vertices)


class _EdgeColorer:
    """Mutable scratch state for the fan/alternating-path edge colorer."""

    def __init__(self, graph: SimpleGraph):
        self.palette = graph.max_degree + 1
        self.color: dict[Edge, int] = {}
        # per vertex: color -> neighbor reached through that color
        self.via: list[dict[int, int]] = [dict() for _ in range(graph.num_vertices)]

    def set_color(self, u: int, v: int, c: int) -> None:
        self.color[(min(u, v), max(u, v))] = c
        self.via[u][c] = v
        self.via[v][c] = u

    def unset(self, u: int, v: int) -> int:
        c = self.color.pop((min(u, v), max(u, v)))
        del self.via[u][c]
        del self.via[v][c]
        return c

    def free_color(self, v: int) -> int:
        for c in range(1, self.palette + 1):
            if c not in self.via[v]:
                return c
        raise AssertionError("degree exceeds palette - 1")  # pragma: no cover

    def alternating_path(self, start: int, first: int, second: int) -> list[Edge]:
        """Edges of the maximal path from ``start`` alternating two colors."""
        edges = []
        cur, want, other = start, first, second
        while want in self.via[cur]:
            nxt = self.via[cur][want]
            edges.append((cur, nxt))
            cur, want, other = nxt, other, want
        return edges

    def invert(self, path_edges: list[Edge], a: int, b: int) -> None:
        swapped = [(e, self.unset(*e)) for e in path_edges]
        for (u, v), c in swapped:
            self.set_color(u, v, b if c == a else a)

    def rotate(self, center: int, fan: list[int]) -> None:
        """Shift each fan edge's color to its predecessor; the last edge
        ends up uncolored for the caller to assign."""
        shifted = [self.unset(center, w) for w in fan[1:]]
        for w, c in zip(fan[:-1], shifted):
            self.set_color(center, w, c)

    def extend(self, u: int, v0: int) -> None:
        """Color the uncolored edge (u, v0), possibly recoloring others.

        Builds a maximal fan at ``u``; if the fan tip's free color is
        also free at ``u`` a rotation finishes.  Otherwise the tip's
        free color re-enters the fan at some position j, and flipping an
        alternating path (chosen so it avoids ``u``) frees one shared
        color at ``u`` and at either fan[j-1] or the tip, after which a
        prefix rotation finishes.
        """
        for c in range(1, self.palette + 1):
            if c not in self.via[u] and c not in self.via[v0]:
                self.set_color(u, v0, c)  # mutually free: no recoloring needed
                return
        fan = [v0]
        in_fan = {v0}
        while True:
            tip = fan[-1]
            beta = self.free_color(tip)
            if beta not in self.via[u]:
                self.rotate(u, fan)
                self.set_color(u, tip, beta)
                return
            z = self.via[u][beta]
            if z in in_fan:
                break
            fan.append(z)
            in_fan.add(z)

        j = fan.index(z)  # j >= 1: the uncolored fan base cannot carry beta
        alpha = self.free_color(u)
        path = self.alternating_path(fan[j - 1], alpha, beta)
        on_path = {fan[j - 1]} | {w for e in path for w in e}
        if u not in on_path:
            w_idx = j - 1
        else:
            # u's alternating component is a single path, so the one from
            # the fan tip is a different component and cannot meet u.
            w_idx = len(fan) - 1
            path = self.alternating_path(fan[w_idx], alpha, beta)
        self.invert(path, alpha, beta)
        prefix = fan[: w_idx + 1]
        self.rotate(u, prefix)
        self.set_color(u, prefix[-1], alpha)


def edge_color(g: SimpleGraph) -> list[tuple[Edge, ...]]:
    """Partition the edges into at most ``max_degree + 1`` matchings.

    Fan rotation plus alternating-path inversion in the style of
    Misra and Gries; empty palette slots are dropped, so low-degree
    graphs return fewer matchings.
    """
    state = _EdgeColorer(g)
    for u, v in g.edges:
        state.extend(u, v)
    by_color: dict[int, list[Edge]] = {}
    for e, c in state.color.items():
        by_color.setdefault(c, []).append(e)
    return [tuple(sorted(by_color[c])) for c in sorted(by_color)]


def matching_to_partition(g: SimpleGraph, matching: Sequence[Edge]) -> PartitionMatroid:
    """Capacity-1 partition matroid over the vertices induced by a matching.

    Matched pairs become two-element parts; every other vertex is a
    singleton part.  The chromatic number is 2 whenever the matching is
    nonempty.
    """
    edge_set = {(min(u, v), max(u, v)) for u, v in g.edges}
    used: set[int] = set()
    parts: list[frozenset[int]] = []
    for u, v in matching:
        e = (min(u, v), max(u, v))
        if e not in edge_set:
            raise InputError(f"edge {e} is not an edge of the graph")
        if u in used or v in used:
            raise InputError(f"edges share vertex: not a matching (at {e})")
        used.update(e)
        parts.append(frozenset(e))
    parts.extend(
        frozenset((w,)) for w in range(g.num_vertices) if w not in used
    )
    parts.sort(key=min)
    return PartitionMatroid(parts, n=g.num_vertices)


def strong_color(g: SimpleGraph, m: Matroid) -> Coloring:
    """Color the vertices so every class is independent in ``g`` and ``m``.

    Edge-colors the graph, converts each matching to a capacity-1
    partition matroid, and colors the resulting intersection.  Uses at
    most ``max_degree + chromatic(m) + 1`` colors.
    """
    if m.n != g.num_vertices:
        raise ValidationError(
            f"matroid ground set ({m.n}) must equal the vertex count "
            f"({g.num_vertices})"
        )
    partitions = tuple(
        matching_to_partition(g, matching) for matching in edge_color(g)
    )
    return color_intersection(IntersectionInstance(m, partitions))


def check_strong_coloring(
    g: SimpleGraph, m: Matroid, coloring: Coloring
) -> list[str]:
    """Violation messages for a claimed strong coloring (empty if valid)."""
    problems = []
    for i, cls in enumerate(coloring.classes(), start=1):
        if not cls:
            continue
        if not g.is_independent_set(cls):
            problems.append(f"class {i} contains an edge of the graph: {sorted(cls)}")
        if not m.is_independent(cls):
            problems.append(f"class {i} is dependent in the matroid: {sorted(cls)}")
    if not coloring.is_total:
        problems.append(f"vertices left uncolored: {list(coloring.uncolored())}")
    return problems


@dataclass(frozen=True)
class RainbowInstance:
    """Disjoint independent blocks of a matroid, to be covered rainbow-wise."""

    matroid: Matroid
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "blocks", tuple(frozenset(b) for b in self.blocks)
        )
        seen: set[int] = set()
        for i, block in enumerate(self.blocks):
            if seen & block:
                raise InputError(
                    f"blocks are not pairwise disjoint (block {i} overlaps)"
                )
            seen |= block
            if not self.matroid.is_independent(block):
                raise InputError(f"block {i} is dependent: {sorted(block)}")

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def covered(self) -> tuple[int, ...]:
        return tuple(sorted(set().union(*self.blocks))) if self.blocks else ()

    def covered_rank(self) -> int:
        return self.matroid.rank(self.covered)

    def cover_bound(self) -> int:
        """Guided size bound: block count plus covered rank minus one."""
        if not self.covered:
            return 0
        return self.num_blocks + self.covered_rank() - 1


def rainbow_cover(inst: RainbowInstance) -> list[frozenset[int]]:
    """Cover the blocks by independent sets taking at most one per block.

    Restricts the matroid to the covered elements, pairs it with the
    capacity-1 partition matroid whose parts are the blocks, and colors
    that intersection.  The number of returned sets is at most
    ``num_blocks + covered_rank - 1``.
    """
    covered = inst.covered
    if not covered:
        return []
    index_of = {e: i for i, e in enumerate(covered)}
    restricted = inst.matroid.restrict(covered)
    parts = [
        frozenset(index_of[e] for e in block)
        for block in inst.blocks
        if block
    ]
    blocks_matroid = PartitionMatroid(parts, n=len(covered))
    coloring = color_intersection(
        IntersectionInstance(restricted, (blocks_matroid,))
    )
    return [
        frozenset(covered[i] for i in cls)
        for cls in coloring.classes()
        if cls
    ]


def check_rainbow_cover(
    inst: RainbowInstance, sets: Sequence[frozenset[int]]
) -> list[str]:
    """Violation messages for a claimed rainbow cover (empty if valid)."""
    problems = []
    union: set[int] = set()
    for j, r in enumerate(sets):
        union |= r
        if not inst.matroid.is_independent(r):
            problems.append(f"set {j} is dependent: {sorted(r)}")
        for i, block in enumerate(inst.blocks):
            if len(block & r) > 1:
                problems.append(
                    f"set {j} takes {len(block & r)} elements from block {i}"
                )
    if union != set(inst.covered):
        problems.append(
            f"cover mismatch: missing {sorted(set(inst.covered) - union)}, "
            f"extra {sorted(union - set(inst.covered))}"
        )
    if len(sets) > inst.cover_bound():
        problems.append(
            f"{len(sets)} sets exceed the bound {inst.cover_bound()}"
        )
    return problems
