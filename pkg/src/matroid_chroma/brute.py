"""Exact brute-force chromatic search, the testing oracle of last resort.

Works over any collection of duck-typed independence systems (anything
with ``n`` and ``is_independent``), which lets graph independence
constraints participate alongside matroids.
"""

from __future__ import annotations

from typing import Protocol, Sequence

from .errors import InputError, ValidationError


class IndependenceSystem(Protocol):
    @property
    def n(self) -> int: ...

    def is_independent(self, elements) -> bool: ...


def brute_chromatic(systems: Sequence[IndependenceSystem], max_n: int = 10) -> int:
    """Minimum palette so that every class is independent in every system.

    Backtracking over elements in index order with symmetry breaking:
    a new class may only be opened as the next unused one, which orders
    classes by their smallest element.  Refuses ground sets larger than
    ``max_n``; raises if no coloring exists at any palette size (some
    singleton must be dependent somewhere).
    """
    if not systems:
        raise InputError("need at least one independence system")
    n = systems[0].n
    if any(s.n != n for s in systems):
        raise ValidationError("systems disagree on ground-set size")
    if n > max_n:
        raise InputError(f"brute_chromatic on n={n} exceeds the bound {max_n}")
    if n == 0:
        return 0

    for palette in range(1, n + 1):
        if _colorable(systems, n, palette):
            return palette
    raise ValidationError(
        "no feasible coloring exists at any palette size "
        "(is some singleton dependent?)"
    )


def _colorable(systems: Sequence[IndependenceSystem], n: int, palette: int) -> bool:
    classes: list[set[int]] = []

    def place(x: int) -> bool:
        if x == n:
            return True
        limit = min(len(classes) + 1, palette)
        for ci in range(limit):
            if ci == len(classes):
                classes.append(set())
            cls = classes[ci]
            cls.add(x)
            if all(s.is_independent(cls) for s in systems) and place(x + 1):
                return True
            cls.remove(x)
            if ci == len(classes) - 1 and not cls:
                classes.pop()
        return False

    return place(0)
