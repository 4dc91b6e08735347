"""Ground sets, independence oracles, and the standard matroid families.

Every algorithm in this package talks to a matroid exclusively through
``is_independent``; rank, circuits, loops and the axiom checker are all
derived from independence queries, so a user-supplied oracle that only
implements ``_independent`` gets the full surface for free.

Elements are dense integer indices ``0..n-1``.  Query sets are plain
iterables of indices and are validated on every public call.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import ceil
from typing import Iterable, Iterator, Sequence

from .errors import ContractError, InputError, ValidationError


@dataclass(frozen=True)
class GroundSet:
    """A ground set of ``n`` elements with optional display labels."""

    n: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError(f"ground set size must be >= 0, got {self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValidationError(
                f"expected {self.n} labels, got {len(self.labels)}"
            )

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def elements(self) -> range:
        return range(self.n)


class Matroid:
    """Independence oracle over an integer-indexed ground set.

    Subclasses implement ``_independent`` over a validated frozenset.
    All derived operations (rank, circuits, loops) issue only
    ``is_independent`` calls, which keeps oracle-call accounting honest
    and works for any oracle that can merely test independence.

    Oracles are immutable after construction; all operations are pure.
    """

    kind = "abstract"

    def __init__(self, ground: GroundSet):
        self.ground = ground

    @property
    def n(self) -> int:
        return self.ground.n

    def _as_set(self, elements: Iterable[int]) -> frozenset[int]:
        s = frozenset(elements)
        for x in s:
            if not isinstance(x, int) or not 0 <= x < self.n:
                raise InputError(
                    f"element {x!r} out of range for ground set of size {self.n}"
                )
        return s

    def is_independent(self, elements: Iterable[int]) -> bool:
        """Return True iff the given element set is independent."""
        return self._independent(self._as_set(elements))

    def _independent(self, s: frozenset[int]) -> bool:
        raise NotImplementedError

    def rank(self, elements: Iterable[int] | None = None) -> int:
        """Size of a maximum independent subset, by greedy augmentation.

        With no argument, the rank of the whole ground set.
        """
        s = range(self.n) if elements is None else sorted(self._as_set(elements))
        picked: set[int] = set()
        for x in s:
            if self.is_independent(picked | {x}):
                picked.add(x)
        return len(picked)

    def find_circuit(
        self, independent: Iterable[int], x: int, *, check: bool = True
    ) -> frozenset[int] | None:
        """Unique circuit of ``independent + {x}``, or None if still independent.

        The circuit is ``{x}`` together with every ``y`` whose removal
        repairs independence; this costs ``|independent|`` oracle calls
        beyond the membership test.  ``check=False`` skips the
        precondition test when the caller has already verified it.
        """
        s = self._as_set(independent)
        if not 0 <= x < self.n:
            raise InputError(f"element {x} out of range")
        if x in s:
            raise ContractError(f"element {x} is already in the set")
        if check and not self.is_independent(s):
            raise ContractError("find_circuit requires an independent base set")
        if self.is_independent(s | {x}):
            return None
        members = {y for y in s if self.is_independent((s - {y}) | {x})}
        return frozenset(members | {x})

    def loops(self) -> tuple[int, ...]:
        """Elements whose singleton is dependent (never colorable)."""
        return tuple(x for x in range(self.n) if not self.is_independent((x,)))

    def restrict(self, elements: Iterable[int]) -> "RestrictedMatroid":
        """Restriction to a subset, reindexed densely in sorted order."""
        return RestrictedMatroid(self, elements)


class RestrictedMatroid(Matroid):
    """A matroid restricted to a subset of its ground set.

    Element ``i`` of the restriction is ``keep[i]`` of the parent, where
    ``keep`` is the sorted retained subset.
    """

    kind = "restriction"

    def __init__(self, parent: Matroid, elements: Iterable[int]):
        keep = sorted(parent._as_set(elements))
        labels = None
        if parent.ground.labels is not None:
            labels = tuple(parent.ground.labels[x] for x in keep)
        super().__init__(GroundSet(len(keep), labels))
        self.parent = parent
        self.keep = tuple(keep)

    def _independent(self, s: frozenset[int]) -> bool:
        return self.parent.is_independent(self.keep[i] for i in s)


class CountingMatroid(Matroid):
    """Wrapper that counts ``is_independent`` calls made to an oracle."""

    def __init__(self, inner: Matroid):
        super().__init__(inner.ground)
        self.inner = inner
        self.calls = 0

    @property
    def kind(self) -> str:  # type: ignore[override]
        return self.inner.kind

    def is_independent(self, elements: Iterable[int]) -> bool:
        self.calls += 1
        return self.inner.is_independent(elements)


class UniformMatroid(Matroid):
    """Independent iff the set has at most ``max_rank`` elements."""

    kind = "uniform"

    def __init__(self, n: int, max_rank: int, labels: Sequence[str] | None = None):
        super().__init__(GroundSet(n, tuple(labels) if labels else None))
        if max_rank < 0:
            raise ValidationError(f"rank must be >= 0, got {max_rank}")
        self.max_rank = max_rank

    def _independent(self, s: frozenset[int]) -> bool:
        return len(s) <= self.max_rank


class PartitionMatroid(Matroid):
    """Per-part cardinality caps over a partition of the ground set.

    ``parts`` must be pairwise disjoint and cover ``0..n-1``; every
    capacity must be at least 1 (omitted capacities default to 1).
    """

    kind = "partition"

    def __init__(
        self,
        parts: Sequence[Iterable[int]],
        capacities: Sequence[int] | None = None,
        *,
        n: int | None = None,
        labels: Sequence[str] | None = None,
    ):
        norm = tuple(frozenset(p) for p in parts)
        total = sum(len(p) for p in norm)
        union: set[int] = set()
        for p in norm:
            union |= p
        if len(union) != total:
            raise ValidationError("partition parts overlap")
        inferred = max(union) + 1 if union else 0
        if n is None:
            n = inferred
        if union != set(range(n)):
            missing = sorted(set(range(n)) - union)
            raise ValidationError(
                f"partition parts must cover 0..{n - 1}; missing {missing}"
            )
        if capacities is None:
            capacities = [1] * len(norm)
        caps = tuple(int(c) for c in capacities)
        if len(caps) != len(norm):
            raise ValidationError(
                f"expected {len(norm)} capacities, got {len(caps)}"
            )
        if any(c < 1 for c in caps):
            raise ValidationError("every part capacity must be >= 1")
        super().__init__(GroundSet(n, tuple(labels) if labels else None))
        self.parts = norm
        self.capacities = caps
        self.part_of = [0] * n
        for idx, p in enumerate(norm):
            for x in p:
                self.part_of[x] = idx

    def _independent(self, s: frozenset[int]) -> bool:
        counts = [0] * len(self.parts)
        for x in s:
            i = self.part_of[x]
            counts[i] += 1
            if counts[i] > self.capacities[i]:
                return False
        return True

    def chromatic(self) -> int:
        """Exact chromatic number: max over parts of ceil(size/capacity)."""
        if self.n == 0:
            return 1
        return max(
            (ceil(len(p) / c) for p, c in zip(self.parts, self.capacities)),
            default=1,
        )


def partition_chromatic(p: PartitionMatroid) -> int:
    """Closed-form chromatic number of a partition matroid."""
    return p.chromatic()


class LaminarMatroid(Matroid):
    """Capacity caps over a laminar (nested-or-disjoint) set family."""

    kind = "laminar"

    def __init__(
        self,
        n: int,
        sets: Sequence[Iterable[int]],
        capacities: Sequence[int],
        labels: Sequence[str] | None = None,
    ):
        super().__init__(GroundSet(n, tuple(labels) if labels else None))
        family = tuple(frozenset(a) for a in sets)
        caps = tuple(int(c) for c in capacities)
        if len(caps) != len(family):
            raise ValidationError(
                f"expected {len(family)} capacities, got {len(caps)}"
            )
        if any(c < 1 for c in caps):
            raise ValidationError("every laminar capacity must be >= 1")
        for a in family:
            for x in a:
                if not 0 <= x < n:
                    raise InputError(f"element {x} out of range")
        for a, b in itertools.combinations(family, 2):
            if a & b and not (a <= b or b <= a):
                raise ValidationError(
                    f"family is not laminar: {sorted(a)} and {sorted(b)} "
                    "intersect without nesting"
                )
        self.family = family
        self.capacities = caps
        self._containing: list[tuple[int, ...]] = [
            tuple(i for i, a in enumerate(family) if x in a) for x in range(n)
        ]

    def _independent(self, s: frozenset[int]) -> bool:
        counts = [0] * len(self.family)
        for x in s:
            for i in self._containing[x]:
                counts[i] += 1
                if counts[i] > self.capacities[i]:
                    return False
        return True


class GraphicMatroid(Matroid):
    """Forests of a graph; ground element ``i`` is edge ``i``.

    Self-loop edges are representable (they are matroid loops) so that
    loop rejection can be exercised; parallel edges are fine.
    """

    kind = "graphic"

    def __init__(
        self,
        num_vertices: int,
        edges: Sequence[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ):
        super().__init__(GroundSet(len(edges), tuple(labels) if labels else None))
        if num_vertices < 0:
            raise ValidationError("vertex count must be >= 0")
        for u, v in edges:
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValidationError(
                    f"edge ({u},{v}) has an endpoint outside 0..{num_vertices - 1}"
                )
        self.num_vertices = num_vertices
        self.edges = tuple((int(u), int(v)) for u, v in edges)

    def _independent(self, s: frozenset[int]) -> bool:
        parent = list(range(self.num_vertices))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in s:
            u, v = self.edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


class TransversalMatroid(Matroid):
    """Sets matchable into right-side nodes of a bipartite graph.

    ``adjacency[i]`` lists the right nodes element ``i`` may match to.
    Independence is decided by a fresh augmenting-path matching per
    query; matchings are never cached across queries.
    """

    kind = "transversal"

    def __init__(
        self,
        adjacency: Sequence[Iterable[int]],
        num_right: int | None = None,
        labels: Sequence[str] | None = None,
    ):
        super().__init__(GroundSet(len(adjacency), tuple(labels) if labels else None))
        adj = tuple(tuple(sorted(set(a))) for a in adjacency)
        top = max((r for a in adj for r in a), default=-1)
        if num_right is None:
            num_right = top + 1
        if top >= num_right:
            raise ValidationError(
                f"right node {top} out of range for {num_right} right nodes"
            )
        if any(r < 0 for a in adj for r in a):
            raise ValidationError("right node indices must be >= 0")
        self.adjacency = adj
        self.num_right = num_right

    def _independent(self, s: frozenset[int]) -> bool:
        match_right: dict[int, int] = {}

        def augment(x: int, seen: set[int]) -> bool:
            for r in self.adjacency[x]:
                if r in seen:
                    continue
                seen.add(r)
                if r not in match_right or augment(match_right[r], seen):
                    match_right[r] = x
                    return True
            return False

        for x in sorted(s):
            if not augment(x, set()):
                return False
        return True


class ExplicitMatroid(Matroid):
    """An explicitly listed independence family, for testing.

    The listed family is taken as-is; nothing is validated here, so the
    axiom checker can be pointed at deliberately broken families.
    Instance loading does enforce the axioms for this kind.
    """

    kind = "explicit"

    def __init__(
        self,
        n: int,
        independent_sets: Iterable[Iterable[int]],
        labels: Sequence[str] | None = None,
    ):
        super().__init__(GroundSet(n, tuple(labels) if labels else None))
        masks = set()
        for s in independent_sets:
            mask = 0
            for x in s:
                if not 0 <= x < n:
                    raise InputError(f"element {x} out of range")
                mask |= 1 << x
            masks.add(mask)
        self.masks = frozenset(masks)

    @classmethod
    def from_oracle(cls, m: Matroid, limit: int = 16) -> "ExplicitMatroid":
        """Materialize any oracle's family by exhaustive enumeration."""
        if m.n > limit:
            raise InputError(f"refusing to enumerate 2^{m.n} subsets (limit {limit})")
        sets = [
            s
            for s in _all_subsets(m.n)
            if m.is_independent(_mask_to_set(s))
        ]
        return cls(m.n, [_mask_to_set(s) for s in sets], labels=m.ground.labels)

    def _independent(self, s: frozenset[int]) -> bool:
        mask = 0
        for x in s:
            mask |= 1 << x
        return mask in self.masks

    def independent_sets(self) -> list[frozenset[int]]:
        return sorted(
            (frozenset(_mask_to_set(m)) for m in self.masks),
            key=lambda s: (len(s), sorted(s)),
        )


def _all_subsets(n: int) -> range:
    return range(1 << n)


def _mask_to_set(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class AxiomCheckReport:
    """Outcome of an exhaustive matroid-axiom verification."""

    ok: bool
    axiom: str | None = None
    counterexample: tuple[tuple[int, ...], ...] | None = None
    subsets_checked: int = 0

    def describe(self) -> str:
        if self.ok:
            return f"all axioms hold ({self.subsets_checked} subsets checked)"
        witness = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.counterexample)
        return f"{self.axiom} axiom fails: {witness}"


def axiom_check(m: Matroid, max_n: int = 12) -> AxiomCheckReport:
    """Exhaustively verify the matroid axioms plus the circuit axiom.

    Checks, in order: empty set independent; downward closure; the
    exchange property; and that two distinct circuits sharing an element
    leave a circuit when that element is removed.  Returns at the first
    counterexample.  Refuses ground sets above ``max_n`` (2^n cost).
    """
    n = m.n
    if n > max_n:
        raise InputError(
            f"axiom_check on n={n} exceeds the configured bound {max_n}"
        )
    indep = [m.is_independent(_mask_to_set(mask)) for mask in range(1 << n)]
    checked = 1 << n

    if not indep[0]:
        return AxiomCheckReport(False, "empty-set", ((),), checked)

    # One-element deletions suffice for downward closure, by induction.
    for mask in range(1 << n):
        if not indep[mask]:
            continue
        sub = mask
        while sub:
            bit = sub & -sub
            if not indep[mask ^ bit]:
                return AxiomCheckReport(
                    False, "subset", (_mask_to_set(mask), _mask_to_set(mask ^ bit)), checked
                )
            sub ^= bit

    # Exchange from sets exactly one element larger is equivalent given
    # downward closure, and much cheaper than all size pairs.
    by_size: dict[int, list[int]] = {}
    for mask in range(1 << n):
        if indep[mask]:
            by_size.setdefault(bin(mask).count("1"), []).append(mask)
    for size, smaller in sorted(by_size.items()):
        for big in by_size.get(size + 1, ()):
            for small in smaller:
                extra = big & ~small
                if not extra:
                    continue
                ok = False
                probe = extra
                while probe:
                    bit = probe & -probe
                    if indep[small | bit]:
                        ok = True
                        break
                    probe ^= bit
                if not ok:
                    return AxiomCheckReport(
                        False, "exchange", (_mask_to_set(small), _mask_to_set(big)), checked
                    )

    circuits = [
        mask
        for mask in range(1, 1 << n)
        if not indep[mask]
        and all(indep[mask ^ (1 << i)] for i in _mask_to_set(mask))
    ]
    for ca, cb in itertools.combinations(circuits, 2):
        common = ca & cb
        probe = common
        while probe:
            bit = probe & -probe
            rest = (ca | cb) ^ bit
            if indep[rest]:
                return AxiomCheckReport(
                    False,
                    "circuit",
                    (_mask_to_set(ca), _mask_to_set(cb), _mask_to_set(bit)),
                    checked,
                )
            probe ^= bit

    return AxiomCheckReport(True, subsets_checked=checked)
