"""Instance file schema, loading with validation, and canonical saving.

Files are UTF-8 JSON with a top-level ``schema: "matroid-chroma/1"``.
Matroids are ``{"kind": ..., "data": {...}}`` objects; colorings are
arrays with 0 meaning uncolored.  The payload determines the instance
type: ``blocks`` marks a rainbow instance, ``graph`` (at top level) a
strong-coloring instance, and ``m1`` an intersection instance.
``docs/format.md`` documents every field with the shipped fixtures as
normative examples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path as FilePath
from typing import Any

from .applications import RainbowInstance, SimpleGraph
from .edmonds import Coloring
from .errors import FormatError, InputError, ValidationError
from .intersection import IntersectionInstance
from .matroids import (
    ExplicitMatroid,
    GraphicMatroid,
    LaminarMatroid,
    Matroid,
    PartitionMatroid,
    TransversalMatroid,
    UniformMatroid,
    axiom_check,
)

SCHEMA = "matroid-chroma/1"


@dataclass(frozen=True)
class StrongInstance:
    """A graph plus a matroid over its vertex set."""

    graph: SimpleGraph
    matroid: Matroid


@dataclass(frozen=True)
class LoadedInstance:
    """A validated instance plus any optional coloring it shipped with."""

    instance: IntersectionInstance | RainbowInstance | StrongInstance
    coloring: Coloring | None = None

    @property
    def kind(self) -> str:
        if isinstance(self.instance, IntersectionInstance):
            return "intersection"
        if isinstance(self.instance, RainbowInstance):
            return "rainbow"
        return "strong"


def _require(obj: dict, key: str, where: str) -> Any:
    if key not in obj:
        raise ValidationError(f"{where}: missing required field {key!r}")
    return obj[key]


def matroid_from_json(obj: Any, where: str, labels=None) -> Matroid:
    """Build an oracle from a ``{kind, data}`` descriptor."""
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: expected an object, got {type(obj).__name__}")
    kind = _require(obj, "kind", where)
    data = _require(obj, "data", where)
    try:
        if kind == "uniform":
            return UniformMatroid(
                _require(data, "n", where), _require(data, "rank", where), labels
            )
        if kind == "partition":
            return PartitionMatroid(
                _require(data, "parts", where),
                data.get("capacities"),
                n=data.get("n"),
                labels=labels,
            )
        if kind == "laminar":
            return LaminarMatroid(
                _require(data, "n", where),
                data.get("sets", []),
                data.get("capacities", []),
                labels,
            )
        if kind == "graphic":
            edges = [tuple(e) for e in _require(data, "edges", where)]
            return GraphicMatroid(_require(data, "vertices", where), edges, labels)
        if kind == "transversal":
            return TransversalMatroid(
                _require(data, "adjacency", where), data.get("right"), labels
            )
        if kind == "explicit":
            m = ExplicitMatroid(
                _require(data, "n", where),
                _require(data, "independent", where),
                labels,
            )
            report = axiom_check(m, max_n=16)
            if not report.ok:
                raise ValidationError(
                    f"{where}: explicit family is not a matroid ({report.describe()})"
                )
            return m
    except (TypeError, KeyError) as exc:
        raise ValidationError(f"{where}: malformed {kind} data ({exc})") from exc
    raise ValidationError(f"{where}: unknown matroid kind {kind!r}")


def matroid_to_json(m: Matroid) -> dict:
    if isinstance(m, UniformMatroid):
        data = {"n": m.n, "rank": m.max_rank}
    elif isinstance(m, PartitionMatroid):
        data = {
            "n": m.n,
            "parts": [sorted(p) for p in m.parts],
            "capacities": list(m.capacities),
        }
    elif isinstance(m, LaminarMatroid):
        data = {
            "n": m.n,
            "sets": [sorted(a) for a in m.family],
            "capacities": list(m.capacities),
        }
    elif isinstance(m, GraphicMatroid):
        data = {"vertices": m.num_vertices, "edges": [list(e) for e in m.edges]}
    elif isinstance(m, TransversalMatroid):
        data = {
            "n": m.n,
            "right": m.num_right,
            "adjacency": [list(a) for a in m.adjacency],
        }
    elif isinstance(m, ExplicitMatroid):
        data = {
            "n": m.n,
            "independent": [sorted(s) for s in m.independent_sets()],
        }
    else:
        raise InputError(f"matroid kind {m.kind!r} has no file representation")
    return {"kind": m.kind, "data": data}


def _reject_loops(m: Matroid, where: str) -> None:
    loops = m.loops()
    if loops:
        names = ", ".join(m.ground.label(x) for x in loops)
        raise ValidationError(
            f"{where}: elements [{names}] are loops and can never be colored"
        )


def _coloring_from_json(obj: Any, n: int, where: str) -> Coloring:
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: expected an object with 'colors'")
    colors = _require(obj, "colors", where)
    if len(colors) != n:
        raise ValidationError(
            f"{where}: expected {n} entries, got {len(colors)}"
        )
    palette = obj.get("palette", max(colors, default=0))
    try:
        return Coloring(tuple(int(c) for c in colors), int(palette))
    except ValidationError as exc:
        raise ValidationError(f"{where}: {exc}") from exc


def instance_from_json(obj: Any, where: str = "instance") -> LoadedInstance:
    """Validate a parsed JSON object into a typed instance."""
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: top level must be an object")
    schema = obj.get("schema")
    if schema != SCHEMA:
        raise ValidationError(
            f"{where}: schema must be {SCHEMA!r}, got {schema!r}"
        )
    labels = tuple(obj["labels"]) if obj.get("labels") else None

    if "blocks" in obj:
        matroid = matroid_from_json(_require(obj, "matroid", where), f"{where}.matroid", labels)
        _reject_loops(matroid, f"{where}.matroid")
        try:
            blocks = tuple(frozenset(map(int, b)) for b in obj["blocks"])
            instance: Any = RainbowInstance(matroid, blocks)
        except InputError as exc:
            raise ValidationError(f"{where}.blocks: {exc}") from exc
        n = matroid.n
    elif "graph" in obj:
        gobj = obj["graph"]
        graph = SimpleGraph(
            _require(gobj, "vertices", f"{where}.graph"),
            tuple(tuple(e) for e in _require(gobj, "edges", f"{where}.graph")),
        )
        matroid = matroid_from_json(_require(obj, "matroid", where), f"{where}.matroid", labels)
        _reject_loops(matroid, f"{where}.matroid")
        if matroid.n != graph.num_vertices:
            raise ValidationError(
                f"{where}: matroid ground set ({matroid.n}) must match the "
                f"vertex count ({graph.num_vertices})"
            )
        instance = StrongInstance(graph, matroid)
        n = graph.num_vertices
    elif "m1" in obj:
        m1 = matroid_from_json(obj["m1"], f"{where}.m1", labels)
        _reject_loops(m1, f"{where}.m1")
        partitions = []
        for i, pobj in enumerate(obj.get("partitions", [])):
            field = f"{where}.partitions[{i}]"
            pm = matroid_from_json(pobj, field, labels)
            if not isinstance(pm, PartitionMatroid):
                raise ValidationError(f"{field}: kind must be 'partition'")
            if pm.n != m1.n:
                raise ValidationError(
                    f"{field}: ground set ({pm.n}) must match m1 ({m1.n})"
                )
            partitions.append(pm)
        alpha = obj.get("alpha")
        instance = IntersectionInstance(m1, tuple(partitions), alpha)
        n = m1.n
    else:
        raise ValidationError(
            f"{where}: expected one of 'm1', 'blocks' or 'graph'"
        )

    coloring = None
    if obj.get("coloring") is not None:
        coloring = _coloring_from_json(obj["coloring"], n, f"{where}.coloring")
    return LoadedInstance(instance, coloring)


def instance_to_json(loaded: LoadedInstance) -> dict:
    """Canonical JSON object for an instance (inverse of loading)."""
    inst = loaded.instance
    obj: dict[str, Any] = {"schema": SCHEMA}
    if isinstance(inst, IntersectionInstance):
        labels = inst.m1.ground.labels
        obj["m1"] = matroid_to_json(inst.m1)
        obj["partitions"] = [matroid_to_json(pm) for pm in inst.partitions]
        if inst.alpha is not None:
            obj["alpha"] = inst.alpha
    elif isinstance(inst, RainbowInstance):
        labels = inst.matroid.ground.labels
        obj["matroid"] = matroid_to_json(inst.matroid)
        obj["blocks"] = [sorted(b) for b in inst.blocks]
    else:
        labels = inst.matroid.ground.labels
        obj["graph"] = {
            "vertices": inst.graph.num_vertices,
            "edges": [list(e) for e in inst.graph.edges],
        }
        obj["matroid"] = matroid_to_json(inst.matroid)
    if labels:
        obj["labels"] = list(labels)
    if loaded.coloring is not None:
        obj["coloring"] = {
            "palette": loaded.coloring.num_colors,
            "colors": list(loaded.coloring.colors),
        }
    return obj


def dumps_instance(obj: dict) -> str:
    """Deterministic pretty serialization for instance files."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_instance(path: str | FilePath) -> LoadedInstance:
    """Load and validate an instance file.

    Unparseable files raise FormatError (with line/column from the JSON
    decoder); structurally invalid ones raise ValidationError naming the
    offending field.
    """
    path = FilePath(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    return instance_from_json(obj, where=str(path))


def save_instance(loaded: LoadedInstance, path: str | FilePath) -> None:
    FilePath(path).write_text(dumps_instance(instance_to_json(loaded)), encoding="utf-8")
