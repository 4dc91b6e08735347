"""Seeded random instance generation.

Every generator draws exclusively from one ``random.Random(seed)``, and
the returned JSON object serializes canonically, so the same seed and
parameters always produce a byte-identical file.  Generated instances
satisfy every loader validation rule (in particular: no loops).
"""

from __future__ import annotations

import random
from typing import Any

from .errors import InputError
from .instances import SCHEMA, matroid_from_json

INTERSECTION_FAMILIES = ("uniform", "partition", "laminar", "graphic", "transversal")
FAMILIES = INTERSECTION_FAMILIES + ("rainbow", "strong")


def generate(
    seed: int,
    family: str,
    n: int = 12,
    partitions: int = 2,
    blocks: int = 3,
    max_degree: int = 3,
) -> dict[str, Any]:
    """Produce a random instance JSON object, deterministic in ``seed``.

    ``family`` names the arbitrary matroid's kind for intersection
    instances (each paired with ``partitions`` random partition
    matroids), or one of ``rainbow`` / ``strong``.
    """
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 0:
        raise InputError(f"size must be >= 0, got {n}")
    if partitions < 0:
        raise InputError(f"partition count must be >= 0, got {partitions}")
    rng = random.Random(seed)
    if family == "rainbow":
        return _gen_rainbow(rng, n, blocks)
    if family == "strong":
        return _gen_strong(rng, n, max_degree)
    obj = {
        "schema": SCHEMA,
        "m1": _gen_matroid(rng, family, n),
        "partitions": [_gen_partition(rng, n) for _ in range(partitions)],
    }
    return obj


def _gen_matroid(rng: random.Random, kind: str, n: int) -> dict:
    if kind == "uniform":
        return {"kind": "uniform", "data": {"n": n, "rank": rng.randint(1, max(1, n))}}
    if kind == "partition":
        return _gen_partition(rng, n)
    if kind == "laminar":
        return _gen_laminar(rng, n)
    if kind == "graphic":
        return _gen_graphic(rng, n)
    if kind == "transversal":
        return _gen_transversal(rng, n)
    raise InputError(f"no generator for matroid kind {kind!r}")


def _gen_partition(rng: random.Random, n: int, max_cap: int = 2) -> dict:
    order = list(range(n))
    rng.shuffle(order)
    parts: list[list[int]] = []
    i = 0
    while i < n:
        size = rng.randint(1, min(4, n - i))
        parts.append(sorted(order[i : i + size]))
        i += size
    parts.sort()
    caps = [rng.randint(1, max_cap) for _ in parts]
    return {
        "kind": "partition",
        "data": {"n": n, "parts": parts, "capacities": caps},
    }


def _gen_laminar(rng: random.Random, n: int) -> dict:
    order = list(range(n))
    rng.shuffle(order)
    sets: list[list[int]] = []
    caps: list[int] = []

    def carve(lo: int, hi: int, depth: int) -> None:
        span = hi - lo
        if span < 1 or depth > 3:
            return
        if rng.random() < 0.8:
            members = sorted(order[lo:hi])
            sets.append(members)
            caps.append(rng.randint(1, max(1, span - span // 3)))
        if span >= 2 and rng.random() < 0.7:
            cut = rng.randint(lo + 1, hi - 1)
            carve(lo, cut, depth + 1)
            carve(cut, hi, depth + 1)

    carve(0, n, 0)
    return {"kind": "laminar", "data": {"n": n, "sets": sets, "capacities": caps}}


def _gen_graphic(rng: random.Random, n_edges: int) -> dict:
    # Enough vertices to keep forests interesting, few enough for cycles.
    vertices = max(2, rng.randint(max(2, n_edges // 3), max(2, (2 * n_edges) // 3 + 1))) if n_edges else 1
    edges = []
    for _ in range(n_edges):
        u = rng.randrange(vertices)
        v = rng.randrange(vertices - 1)
        if v >= u:
            v += 1  # no self-loops: those would be matroid loops
        edges.append([min(u, v), max(u, v)])
    return {"kind": "graphic", "data": {"vertices": vertices, "edges": edges}}


def _gen_transversal(rng: random.Random, n: int) -> dict:
    right = max(1, rng.randint(max(1, n // 3), max(1, n)))
    adjacency = []
    for _ in range(n):
        degree = rng.randint(1, min(3, right))  # nonempty: no loops
        adjacency.append(sorted(rng.sample(range(right), degree)))
    return {
        "kind": "transversal",
        "data": {"n": n, "right": right, "adjacency": adjacency},
    }


def _gen_rainbow(rng: random.Random, n: int, blocks: int) -> dict:
    kind = rng.choice(("uniform", "graphic", "laminar"))
    mobj = _gen_matroid(rng, kind, n)
    matroid = matroid_from_json(mobj, "generated")
    order = list(range(n))
    rng.shuffle(order)
    pool = [x for x in order if matroid.is_independent((x,))]
    out: list[list[int]] = []
    for _ in range(max(1, blocks)):
        current: list[int] = []
        rest = []
        for x in pool:
            if matroid.is_independent(current + [x]) and (
                len(current) < 1 or rng.random() < 0.8
            ):
                current.append(x)
            else:
                rest.append(x)
        pool = rest
        if current:
            out.append(sorted(current))
        if not pool:
            break
    return {"schema": SCHEMA, "matroid": mobj, "blocks": out}


def _gen_strong(rng: random.Random, n: int, max_degree: int) -> dict:
    degree = [0] * n
    edges: list[list[int]] = []
    seen: set[tuple[int, int]] = set()
    attempts = 3 * n
    for _ in range(attempts):
        if n < 2:
            break
        u, v = rng.sample(range(n), 2)
        e = (min(u, v), max(u, v))
        if e in seen or degree[u] >= max_degree or degree[v] >= max_degree:
            continue
        seen.add(e)
        degree[u] += 1
        degree[v] += 1
        edges.append(list(e))
    edges.sort()
    kind = rng.choice(("uniform", "partition", "laminar"))
    return {
        "schema": SCHEMA,
        "graph": {"vertices": n, "edges": edges},
        "matroid": _gen_matroid(rng, kind, n),
    }
