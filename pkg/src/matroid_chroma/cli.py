"""Command-line interface.

Machine-readable reports go to stdout as one canonical JSON object per
line; human summaries go to stderr (suppressed by ``--json``).  Exit
codes: 0 success, 2 bound or verification violation, 3 input/validation
error (including usage errors), 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import applications, generators
from .brute import brute_chromatic
from .edmonds import (
    Coloring,
    SELECTORS,
    chromatic_number,
    color_single,
    verify_coloring,
)
from .errors import (
    ContractError,
    FormatError,
    InputError,
    InvariantViolationError,
    ValidationError,
)
from .instances import (
    LoadedInstance,
    StrongInstance,
    dumps_instance,
    instance_from_json,
    load_instance,
)
from .intersection import IntersectionInstance, color_intersection
from .applications import RainbowInstance, check_rainbow_cover, check_strong_coloring
from .matroids import CountingMatroid, Matroid, axiom_check
from .report import RunReport, canonical_json

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_INVALID = 3
EXIT_INVARIANT = 4


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the validation code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _say(args, text: str) -> None:
    if not args.json:
        print(text, file=sys.stderr)


def _emit(obj) -> None:
    print(canonical_json(obj))


def _primary_matroid(loaded: LoadedInstance) -> Matroid:
    inst = loaded.instance
    if isinstance(inst, IntersectionInstance):
        return inst.m1
    return inst.matroid


def _cmd_color(args) -> int:
    loaded = load_instance(args.instance)
    m = CountingMatroid(_primary_matroid(loaded))
    start = time.perf_counter()
    if m.n == 0:
        alpha = args.alpha if args.alpha is not None else 0
        coloring = Coloring.empty(0, max(alpha, 0))
    else:
        alpha = args.alpha if args.alpha is not None else chromatic_number(m, args.selector)
        coloring = color_single(m, alpha, args.selector)
    wall = (time.perf_counter() - start) * 1000
    status = "success" if coloring is not None else "failure"
    report = RunReport(
        command="color",
        status=status,
        n=m.n,
        colors_used=coloring.colors_used() if coloring else 0,
        palette_bound=alpha,
        feasible=[verify_coloring([m], coloring).feasible] if coloring else [],
        complete=coloring.is_total if coloring else False,
        iterations=m.n if coloring else 0,
        oracle_calls={"primary": m.calls},
        wall_ms=wall,
        extra={"alpha": alpha, "selector": args.selector},
    )
    _emit(report.to_json_obj())
    _say(args, report.summary())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_chi(args) -> int:
    loaded = load_instance(args.instance)
    m = CountingMatroid(_primary_matroid(loaded))
    start = time.perf_counter()
    value = chromatic_number(m, args.selector)
    wall = (time.perf_counter() - start) * 1000
    _emit(
        {
            "command": "chi",
            "chi": value,
            "n": m.n,
            "oracle_calls": {"primary": m.calls},
            "status": "success",
        }
    )
    _say(args, f"chi: {value} on {m.n} elements; {m.calls} oracle calls; {wall:.1f} ms")
    return EXIT_OK


def _cmd_intersect(args) -> int:
    loaded = load_instance(args.instance)
    if not isinstance(loaded.instance, IntersectionInstance):
        raise ValidationError(f"{args.instance}: not an intersection instance")
    base = loaded.instance
    m1 = CountingMatroid(base.m1)
    partitions = tuple(base.partitions)
    alpha = args.alpha if args.alpha is not None else base.alpha
    inst = IntersectionInstance(m1, partitions, alpha)

    start = time.perf_counter()
    resolved_alpha = inst.resolve_alpha()
    inst.alpha = resolved_alpha
    coloring = color_intersection(inst)
    wall = (time.perf_counter() - start) * 1000

    verdicts = verify_coloring([m1, *partitions], coloring)
    bound = resolved_alpha + inst.surplus
    report = RunReport(
        command="intersect",
        status="success",
        n=inst.n,
        colors_used=coloring.colors_used(),
        palette_bound=bound,
        feasible=[
            all(ok for mi2, _, ok in verdicts.class_results if mi2 == mi)
            for mi in range(1 + len(partitions))
        ],
        complete=coloring.is_total,
        iterations=inst.n,
        oracle_calls={"m1": m1.calls},
        wall_ms=wall,
        extra={
            "alpha": resolved_alpha,
            "surplus": inst.surplus,
            "coloring": list(coloring.colors),
        },
    )
    _emit(report.to_json_obj())
    _say(args, report.summary())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_rainbow(args) -> int:
    loaded = load_instance(args.instance)
    if not isinstance(loaded.instance, RainbowInstance):
        raise ValidationError(f"{args.instance}: not a rainbow instance")
    m = CountingMatroid(loaded.instance.matroid)
    inst = RainbowInstance(m, loaded.instance.blocks)
    start = time.perf_counter()
    sets = applications.rainbow_cover(inst)
    wall = (time.perf_counter() - start) * 1000
    problems = check_rainbow_cover(inst, sets)
    report = RunReport(
        command="rainbow",
        status="success" if not problems else "failure",
        n=m.n,
        colors_used=len(sets),
        palette_bound=inst.cover_bound(),
        feasible=[not problems],
        complete=True,
        iterations=len(inst.covered),
        oracle_calls={"matroid": m.calls},
        wall_ms=wall,
        extra={
            "blocks": inst.num_blocks,
            "sets": [sorted(s) for s in sets],
            "violations": problems,
        },
    )
    _emit(report.to_json_obj())
    _say(args, report.summary())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_strong(args) -> int:
    loaded = load_instance(args.instance)
    if not isinstance(loaded.instance, StrongInstance):
        raise ValidationError(f"{args.instance}: not a strong-coloring instance")
    graph = loaded.instance.graph
    m = CountingMatroid(loaded.instance.matroid)
    start = time.perf_counter()
    coloring = applications.strong_color(graph, m)
    chi_m = chromatic_number(m) if m.n else 0
    wall = (time.perf_counter() - start) * 1000
    problems = check_strong_coloring(graph, m, coloring)
    bound = graph.max_degree + chi_m + 1
    report = RunReport(
        command="strong",
        status="success" if not problems else "failure",
        n=graph.num_vertices,
        colors_used=coloring.colors_used(),
        palette_bound=bound,
        feasible=[not problems],
        complete=coloring.is_total,
        iterations=graph.num_vertices,
        oracle_calls={"matroid": m.calls},
        wall_ms=wall,
        extra={
            "max_degree": graph.max_degree,
            "coloring": list(coloring.colors),
            "violations": problems,
        },
    )
    _emit(report.to_json_obj())
    _say(args, report.summary())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_verify(args) -> int:
    loaded = load_instance(args.instance)
    if loaded.coloring is None:
        raise ValidationError(f"{args.instance}: no coloring to verify")
    coloring = loaded.coloring
    inst = loaded.instance
    problems: list[str] = []
    if isinstance(inst, IntersectionInstance):
        names = ["m1"] + [f"partitions[{i}]" for i in range(len(inst.partitions))]
        verdicts = verify_coloring(inst.all_matroids(), coloring)
        problems = [
            f"class {ci} is dependent in {names[mi]}: "
            f"{sorted(coloring.color_class(ci))}"
            for mi, ci in verdicts.violations()
        ]
    elif isinstance(inst, RainbowInstance):
        sets = [cls for cls in coloring.classes() if cls]
        problems = check_rainbow_cover(inst, sets)
    else:
        problems = check_strong_coloring(inst.graph, inst.matroid, coloring)
    _emit(
        {
            "command": "verify",
            "status": "success" if not problems else "failure",
            "n": coloring.n,
            "colors_used": coloring.colors_used(),
            "uncolored": list(coloring.uncolored()),
            "violations": problems,
        }
    )
    if problems:
        _say(args, "verify: FAIL\n  " + "\n  ".join(problems))
        return EXIT_VIOLATION
    _say(args, "verify: ok")
    return EXIT_OK


def _cmd_gen(args) -> int:
    obj = generators.generate(
        args.seed,
        args.family,
        n=args.n,
        partitions=args.partitions,
        blocks=args.blocks,
        max_degree=args.max_degree,
    )
    instance_from_json(obj, where="generated")  # round-trip sanity
    text = dumps_instance(obj)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        _say(args, f"gen: wrote {args.out} ({len(text)} bytes)")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _run_generated(obj: dict, max_n: int, use_brute: bool) -> dict:
    loaded = instance_from_json(obj, where="bench")
    inst = loaded.instance
    if isinstance(inst, IntersectionInstance):
        m1 = CountingMatroid(inst.m1)
        run = IntersectionInstance(m1, inst.partitions, inst.alpha)
        alpha = run.resolve_alpha()
        run.alpha = alpha
        coloring = color_intersection(run)
        verdicts = verify_coloring([m1, *inst.partitions], coloring)
        bound = alpha + run.surplus
        out = {
            "kind": "intersection",
            "n": inst.n,
            "colors_used": coloring.colors_used(),
            "palette_bound": bound,
            "feasible": verdicts.feasible,
            "complete": coloring.is_total,
            "oracle_calls": m1.calls,
        }
        if use_brute and inst.n <= max_n:
            out["optimum"] = brute_chromatic(
                [inst.m1, *inst.partitions], max_n=max_n
            )
        return out
    if isinstance(inst, RainbowInstance):
        m = CountingMatroid(inst.matroid)
        wrapped = RainbowInstance(m, inst.blocks)
        sets = applications.rainbow_cover(wrapped)
        problems = check_rainbow_cover(wrapped, sets)
        return {
            "kind": "rainbow",
            "n": inst.matroid.n,
            "colors_used": len(sets),
            "palette_bound": wrapped.cover_bound(),
            "feasible": not problems,
            "complete": True,
            "oracle_calls": m.calls,
        }
    m = CountingMatroid(inst.matroid)
    coloring = applications.strong_color(inst.graph, m)
    problems = check_strong_coloring(inst.graph, inst.matroid, coloring)
    bound = inst.graph.max_degree + (chromatic_number(inst.matroid) if m.n else 0) + 1
    return {
        "kind": "strong",
        "n": inst.graph.num_vertices,
        "colors_used": coloring.colors_used(),
        "palette_bound": bound,
        "feasible": not problems,
        "complete": coloring.is_total,
        "oracle_calls": m.calls,
    }


def _cmd_bench(args) -> int:
    start = time.perf_counter()
    violations = 0
    for i in range(args.count):
        seed = args.seed + i
        obj = generators.generate(
            seed,
            args.family,
            n=args.n,
            partitions=args.partitions,
            blocks=args.blocks,
            max_degree=args.max_degree,
        )
        result = _run_generated(obj, args.max_n, args.brute)
        result.update({"command": "bench", "seed": seed, "status": "success"})
        ok = result["feasible"] and result["complete"] and (
            result["colors_used"] <= result["palette_bound"]
        )
        if not ok:
            violations += 1
            result["status"] = "failure"
        _emit(result)
    wall = (time.perf_counter() - start) * 1000
    _say(
        args,
        f"bench: {args.count} x {args.family}, {violations} violations, "
        f"{wall:.1f} ms total",
    )
    return EXIT_OK if violations == 0 else EXIT_VIOLATION


def _cmd_axioms(args) -> int:
    loaded = load_instance(args.instance)
    inst = loaded.instance
    if isinstance(inst, IntersectionInstance):
        matroids = [("m1", inst.m1)] + [
            (f"partitions[{i}]", pm) for i, pm in enumerate(inst.partitions)
        ]
    else:
        matroids = [("matroid", inst.matroid)]
    results = []
    all_ok = True
    for name, m in matroids:
        rep = axiom_check(m, max_n=args.max_n)
        results.append(
            {
                "matroid": name,
                "ok": rep.ok,
                "axiom": rep.axiom,
                "counterexample": [list(s) for s in rep.counterexample or ()],
                "subsets_checked": rep.subsets_checked,
            }
        )
        all_ok = all_ok and rep.ok
        _say(args, f"axioms[{name}]: {rep.describe()}")
    _emit({"command": "axioms", "status": "success" if all_ok else "failure", "results": results})
    return EXIT_OK if all_ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matroid-chroma", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, func, help_: str, instance_arg: bool = True):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="suppress the human summary on stderr")
        if instance_arg:
            p.add_argument("instance", help="path to an instance file")
        return p

    p = add("color", _cmd_color, "color the primary matroid with a fixed palette")
    p.add_argument("--alpha", type=int, help="palette size (default: exact chromatic number)")
    p.add_argument("--selector", choices=sorted(SELECTORS), default="shortest")

    p = add("chi", _cmd_chi, "exact chromatic number of the primary matroid")
    p.add_argument("--selector", choices=sorted(SELECTORS), default="shortest")

    p = add("intersect", _cmd_intersect, "color the intersection with the partition matroids")
    p.add_argument("--alpha", type=int, help="override the arbitrary matroid's chromatic number")

    add("rainbow", _cmd_rainbow, "rainbow-cover the instance's blocks")
    add("strong", _cmd_strong, "strong-color the graph against the matroid")
    add("verify", _cmd_verify, "verify the coloring shipped inside the instance file")

    p = add("gen", _cmd_gen, "generate a random instance", instance_arg=False)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--family", choices=sorted(generators.FAMILIES), required=True)
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--partitions", type=int, default=2)
    p.add_argument("--blocks", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("-o", "--out", help="output path (default: stdout)")

    p = add("bench", _cmd_bench, "run a seeded batch and report each instance", instance_arg=False)
    p.add_argument("--seed", type=int, required=True, help="first seed; instance i uses seed+i")
    p.add_argument("--family", choices=sorted(generators.FAMILIES), required=True)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--partitions", type=int, default=2)
    p.add_argument("--blocks", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--max-n", type=int, default=10, help="brute-force guard")
    p.add_argument("--brute", action="store_true", help="add exact optima where n <= --max-n")

    p = add("axioms", _cmd_axioms, "exhaustively check the matroid axioms")
    p.add_argument("--max-n", type=int, default=12, help="refuse larger ground sets")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        _emit({"status": "error", "category": "format", "error": str(exc)})
        _say(args, f"format error: {exc}")
        return EXIT_INVALID
    except (ValidationError, InputError) as exc:
        _emit({"status": "error", "category": "validation", "error": str(exc)})
        _say(args, f"validation error: {exc}")
        return EXIT_INVALID
    except (ContractError, InvariantViolationError) as exc:
        _emit({"status": "error", "category": "invariant", "error": str(exc)})
        _say(args, f"internal invariant violation: {exc}")
        return EXIT_INVARIANT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
