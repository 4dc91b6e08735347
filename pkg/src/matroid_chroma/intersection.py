"""Coloring the intersection of one arbitrary matroid with partition matroids.

The palette is ``alpha + surplus`` where ``alpha`` bounds the chromatic
number of the arbitrary matroid and ``surplus`` is the sum of
``chromatic - 1`` over the partition matroids; that equals
``1 + sum(chromatic_i - 1)`` over all matroids.  Each iteration builds
the exchange digraph of the arbitrary matroid, extracts a layered
subgraph in which every vertex keeps ``surplus + 1`` in-arcs from
distinct source colors (preferring the earliest layers per color), and
walks backwards from a sink, greedily prepending an in-neighbor whose
color stays within every part capacity.  Every source-sink path of the
layered subgraph is color-chordless in the full digraph, so the shifted
coloring stays feasible in the arbitrary matroid as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .edmonds import (
    Coloring,
    ExchangeDigraph,
    Path,
    apply_path,
    build_digraph,
    chromatic_number,
    is_color_node,
    vertex_color,
)
from .errors import ContractError, InputError, InvariantViolationError, ValidationError
from .matroids import Matroid, PartitionMatroid


@dataclass
class IntersectionInstance:
    """One arbitrary matroid plus a collection of partition matroids.

    ``alpha`` optionally pins the palette share of ``m1``; when omitted
    it is computed exactly.  Supplying a larger value simply widens the
    palette; supplying a smaller one surfaces as an invariant violation
    during the run.
    """

    m1: Matroid
    partitions: tuple[PartitionMatroid, ...] = ()
    alpha: int | None = None

    def __post_init__(self):
        self.partitions = tuple(self.partitions)
        for pm in self.partitions:
            if pm.n != self.m1.n:
                raise ValidationError(
                    f"ground-set sizes differ: {self.m1.n} vs {pm.n}"
                )
        if self.alpha is not None and self.alpha < 1 and self.m1.n > 0:
            raise InputError(f"alpha must be >= 1, got {self.alpha}")

    @property
    def n(self) -> int:
        return self.m1.n

    @property
    def surplus(self) -> int:
        """Palette surplus: sum of (chromatic - 1) over the partitions."""
        return sum(pm.chromatic() - 1 for pm in self.partitions)

    def resolve_alpha(self) -> int:
        return self.alpha if self.alpha is not None else chromatic_number(self.m1)

    def all_matroids(self) -> tuple[Matroid, ...]:
        return (self.m1, *self.partitions)

    def validate_loop_free(self) -> None:
        loops = self.m1.loops()
        if loops:
            raise ValidationError(
                f"elements {list(loops)} are loops in the arbitrary matroid"
            )


@dataclass
class LayeredSubgraph:
    """Layered subgraph of an exchange digraph.

    Layer 0 holds the color nodes.  Every later vertex is admitted once
    ``surplus + 1`` distinct source colors reach it from earlier layers
    and keeps exactly one in-arc per chosen color: the arc from the
    earliest-layer (then lowest-index) source of that color, keeping the
    lowest color indices.  Arcs therefore always climb strictly upward
    in layers.
    """

    surplus: int
    layer_of: dict[int, int]
    chosen_in: dict[int, tuple[int, ...]]
    height: int

    def __contains__(self, v: int) -> bool:
        return v in self.layer_of

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.layer_of))

    def sinks(self, coloring: Coloring) -> tuple[int, ...]:
        return tuple(x for x in coloring.uncolored() if x in self.layer_of)

    def out_edges(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for x, sources in self.chosen_in.items():
            for y in sources:
                out.setdefault(y, []).append(x)
        return {v: tuple(sorted(ts)) for v, ts in out.items()}


def build_layered_subgraph(
    g: ExchangeDigraph, coloring: Coloring, surplus: int
) -> LayeredSubgraph:
    """Fixed-point layering of ``g`` with in-degree ``surplus + 1``.

    Rounds admit every not-yet-placed element reached by at least
    ``surplus + 1`` distinct source colors from placed vertices.  A
    first-writer rule per (target, color) implements the
    earliest-layer-then-lowest-index arc preference, since layers are
    processed in order and each layer in ascending vertex order.
    """
    need = surplus + 1
    layer_of: dict[int, int] = {}
    chosen_in: dict[int, tuple[int, ...]] = {}
    pending: dict[int, dict[int, int]] = {}

    frontier = list(g.sources)  # colors ascending; layer 0
    for v in frontier:
        layer_of[v] = 0
    height = 0
    while frontier:
        for v in frontier:
            color = vertex_color(v, coloring)
            for w in g.targets_of(v):
                if w in layer_of:
                    continue
                pending.setdefault(w, {}).setdefault(color, v)
        admitted = sorted(
            x for x, sources in pending.items()
            if x not in layer_of and len(sources) >= need
        )
        if not admitted:
            break
        height += 1
        for x in admitted:
            layer_of[x] = height
            picked = sorted(pending[x])[:need]
            chosen_in[x] = tuple(pending[x][c] for c in picked)
        frontier = admitted
    return LayeredSubgraph(surplus, layer_of, chosen_in, height)


def assert_reaches_sink(h: LayeredSubgraph, coloring: Coloring) -> bool:
    """Confirm the layered subgraph contains an uncolored element.

    This is guaranteed whenever the palette is at least the chromatic
    number of the arbitrary matroid plus the surplus; failure therefore
    raises, carrying the separating cut, and suggests either a bug or an
    undersized ``alpha``.
    """
    if not coloring.uncolored():
        raise ContractError("no uncolored element exists")
    if h.sinks(coloring):
        return True
    inside = sorted(h.layer_of)
    outside = sorted(set(range(coloring.n)) - set(h.layer_of))
    raise InvariantViolationError(
        "layered subgraph contains no uncolored element; "
        "is alpha below the chromatic number of the arbitrary matroid?",
        in_subgraph=inside,
        cut=outside,
    )


@dataclass(frozen=True)
class SuffixState:
    """A suffix of the path under construction, plus its shifted coloring.

    ``working`` is the coloring obtained by applying the suffix to the
    iteration's starting coloring; the head of the suffix is uncolored
    in it.  Every suffix held here keeps all partition matroids within
    their capacities.
    """

    suffix: Path
    working: tuple[int, ...]

    @property
    def head(self) -> int:
        return self.suffix[0]


def start_suffix(coloring: Coloring, sink: int) -> SuffixState:
    return SuffixState((sink,), coloring.colors)


def _swap_feasible(
    partitions: tuple[PartitionMatroid, ...],
    working: tuple[int, ...],
    head: int,
    source: int,
    color: int,
) -> bool:
    """Would recoloring ``head`` with ``color`` (vacated by ``source``)
    keep every part within capacity?"""
    for pm in partitions:
        idx = pm.part_of[head]
        count = sum(1 for w in pm.parts[idx] if working[w] == color)
        if source >= 0 and pm.part_of[source] == idx:
            count -= 1  # the source leaves this color as the head enters
        if count + 1 > pm.capacities[idx]:
            return False
    return True


def extend_suffix(
    h: LayeredSubgraph,
    state: SuffixState,
    partitions: tuple[PartitionMatroid, ...],
) -> SuffixState:
    """Prepend a feasible in-neighbor of the suffix head.

    Candidates are the head's chosen in-arcs, tried in ascending color
    order; the head takes the candidate's color and an element candidate
    becomes uncolored.  A feasible candidate always exists (at most
    ``surplus`` colors can be capacity-blocked across the head's parts,
    and there are ``surplus + 1`` distinctly colored candidates); none
    being feasible means a counting bug and raises with diagnostics.
    """
    head = state.head
    if is_color_node(head):
        raise ContractError("suffix already starts at a color node")
    tried = []
    for z in h.chosen_in[head]:
        color = -z if z < 0 else state.working[z]
        if _swap_feasible(partitions, state.working, head, z, color):
            working = list(state.working)
            working[head] = color
            if z >= 0:
                working[z] = 0
            return SuffixState((z, *state.suffix), tuple(working))
        tried.append((z, color))
    raise InvariantViolationError(
        "no feasible suffix extension exists",
        head=head,
        candidates=tried,
        suffix=state.suffix,
        working=state.working,
    )


def find_path(
    h: LayeredSubgraph,
    coloring: Coloring,
    partitions: tuple[PartitionMatroid, ...],
) -> Path:
    """Source-sink path of ``h`` every suffix of which respects the partitions.

    The sink is the lowest-index uncolored element of ``h``; the path is
    grown backwards via ``extend_suffix`` and terminates at a color node
    because every prepended vertex sits in a strictly lower layer.
    """
    sinks = h.sinks(coloring)
    if not sinks:
        raise ContractError("layered subgraph contains no sink")
    state = start_suffix(coloring, min(sinks))
    while not is_color_node(state.head):
        state = extend_suffix(h, state, partitions)
    return state.suffix


@dataclass(frozen=True)
class IterationStep:
    """One augmentation: the structures built and the coloring after."""

    digraph: ExchangeDigraph
    subgraph: LayeredSubgraph
    path: Path
    coloring: Coloring


def intersection_steps(inst: IntersectionInstance) -> Iterator[IterationStep]:
    """Drive the intersection coloring one augmentation at a time."""
    inst.validate_loop_free()
    alpha = inst.resolve_alpha()
    surplus = inst.surplus
    coloring = Coloring.empty(inst.n, alpha + surplus)
    for _ in range(inst.n):
        g = build_digraph(inst.m1, coloring)
        h = build_layered_subgraph(g, coloring, surplus)
        assert_reaches_sink(h, coloring)
        path = find_path(h, coloring, inst.partitions)
        coloring = apply_path(coloring, path)
        yield IterationStep(g, h, path, coloring)


def color_intersection(inst: IntersectionInstance) -> Coloring:
    """Total coloring feasible in the arbitrary matroid and every partition.

    Uses ``alpha + surplus`` colors, i.e. ``1 + sum(chromatic_i - 1)``
    when ``alpha`` is the exact chromatic number of the arbitrary
    matroid.
    """
    coloring = None
    for step in intersection_steps(inst):
        coloring = step.coloring
    if coloring is None:  # empty ground set
        coloring = Coloring.empty(inst.n, inst.resolve_alpha() + inst.surplus)
    return coloring


def greedy_baseline(inst: IntersectionInstance) -> Coloring:
    """First-fit coloring when every matroid (including m1) is a partition.

    Uses the same ``1 + sum(chromatic_i - 1)`` palette; by pigeonhole an
    element's parts can block at most ``sum(chromatic_i - 1)`` colors,
    so first-fit never fails within scope.
    """
    if not isinstance(inst.m1, PartitionMatroid):
        raise InputError(
            "greedy baseline only supports an all-partition instance; "
            f"the arbitrary matroid has kind {inst.m1.kind!r}"
        )
    matroids = (inst.m1, *inst.partitions)
    palette = 1 + sum(pm.chromatic() - 1 for pm in matroids)
    counts = [
        [[0] * (palette + 1) for _ in pm.parts] for pm in matroids
    ]
    assignment = [0] * inst.n
    for x in range(inst.n):
        for color in range(1, palette + 1):
            if all(
                counts[mi][pm.part_of[x]][color] < pm.capacities[pm.part_of[x]]
                for mi, pm in enumerate(matroids)
            ):
                assignment[x] = color
                for mi, pm in enumerate(matroids):
                    counts[mi][pm.part_of[x]][color] += 1
                break
        else:  # pragma: no cover - pigeonhole makes this unreachable
            raise InvariantViolationError(
                "greedy baseline found no free color", element=x
            )
    return Coloring(tuple(assignment), palette)
