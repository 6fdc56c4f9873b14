"""Command-line interface.

Exit codes: 0 success, 1 domain error (invalid model, not a conic fiber, ...),
2 I/O, usage or schema error.  Errors are printed to stdout as a JSON object
``{"error": ..., "message": ...}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import export
from .admissibility import admits
from .conics import classify_fiber, enumerate_conic_bundles
from .construction import conic_class_from_pencil
from .errors import DomainError, ModelFormatError, ResconicError
from .kodaira import format_config, parse_config
from .modelfile import load_model
from .surface import negative_curve_inventory, validate_model

EXIT_OK, EXIT_DOMAIN, EXIT_IO = 0, 1, 2


class _Failed(Exception):
    """Command produced output but the result is a domain failure."""


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _unsupported(fmt: str, command: str) -> ModelFormatError:
    return ModelFormatError(f"format {fmt!r} is not available for {command}")


def cmd_validate(args) -> str:
    m = load_model(args.model)
    report = validate_model(m)
    pencils = []
    for q in m.pencils:
        try:
            cc = conic_class_from_pencil(m, q)
            pencils.append({"pencil": q.to_dict(), "class": cc.to_json()})
        except DomainError as exc:
            report.failures.append(f"pencil {q.to_dict()}: {exc}")
            pencils.append({"pencil": q.to_dict(), "error": exc.to_dict()})
    if args.format == "dot":
        text = export.model_to_dot(m, negative_curve_inventory(m))
    elif args.format == "text":
        lines = [f"{m.name}: {'valid' if report.ok else 'INVALID'}",
                 f"config {format_config(m.config)}: euler {report.config.euler}, rank {report.config.rank}",
                 f"sections: {', '.join(report.sections) or '-'}",
                 f"(-2)-curves: {', '.join(report.fiber_components) or '-'}"]
        lines += [f"FAIL {x}" for x in report.failures + report.config.failures]
        lines += [f"warn {x}" for x in report.warnings]
        text = "\n".join(lines) + "\n"
    else:
        d = report.to_dict()
        d["pencils"] = pencils
        text = export.dumps(d)
    if not report.ok:
        _emit(text, args.output)
        raise _Failed
    return text


def cmd_admits(args) -> str:
    if args.config:
        config = parse_config(args.config)
    elif args.model:
        config = load_model(args.model).config
    else:
        raise ModelFormatError("admits needs a model file or --config")
    report = admits(config)
    if args.format == "dot":
        raise _unsupported("dot", "admits")
    if args.format == "text":
        d = report.to_dict()
        lines = [f"config {format_config(report.config)}, rank {d['rank']}"]
        for k in ("a2", "an", "d3", "dm"):
            lines.append(f"{k}: {d[k]}  ({d['reasons'][k]})")
        return "\n".join(lines) + "\n"
    return export.dumps(report.to_dict())


def cmd_bundles(args) -> str:
    if args.bound < 0:
        raise ModelFormatError("--bound must be >= 0")
    m = load_model(args.model)
    bundles = enumerate_conic_bundles(m, args.bound)
    if args.format == "dot":
        return export.bundles_to_dot(m, bundles)
    if args.format == "text":
        return export.bundles_to_text(m, bundles)
    return export.dumps(export.bundles_to_dict(m, args.bound, bundles))


def cmd_classify(args) -> str:
    m = load_model(args.model)
    try:
        spec = json.loads(args.fiber)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"--fiber is not valid JSON: {exc}") from None
    if not isinstance(spec, list) or not all(
            isinstance(x, list) and len(x) == 2 and isinstance(x[0], str) for x in spec):
        raise ModelFormatError('--fiber must be a list of ["label", multiplicity] pairs')
    support = []
    for lab, mult in spec:
        try:
            support.append((m.curve(lab), mult))
        except KeyError:
            raise ModelFormatError(f"unknown curve {lab!r}") from None
    ftype = classify_fiber(support)
    from .lattice import total
    cls = total((c.cls, k) for c, k in support)
    if args.format == "dot":
        from .conics import SingularConicFiber
        return export.fibers_to_dot(f"{m.name}_fiber", [SingularConicFiber(tuple(support), ftype, cls)])
    if args.format == "text":
        return f"{ftype}: {export.format_divisor(support)}  (class {cls})\n"
    return export.dumps({"type": str(ftype), "class": cls.to_json(), "support": spec})


def cmd_corpus(args) -> str:
    from .corpus import run_corpus
    results = run_corpus()
    passed = sum(r.ok for r in results)
    if args.format == "dot":
        raise _unsupported("dot", "corpus")
    if args.format == "text":
        lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.fixture:<14} {r.config:<16} "
                 + " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in r.checks.items())
                 for r in results]
        lines.append(f"{passed}/{len(results)} fixtures pass")
        text = "\n".join(lines) + "\n"
    else:
        text = export.dumps({"passed": passed, "total": len(results),
                             "fixtures": [r.to_dict() for r in results]})
    if passed != len(results):
        _emit(text, args.output)
        raise _Failed
    return text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot", "text"), default="json")
    common.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")

    p = argparse.ArgumentParser(prog="resconic",
                                description="Conic bundles on rational elliptic surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check a model file")
    s.add_argument("model", help="model file or builtin:NAME")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("admits", parents=[common], help="fiber types allowed by a configuration")
    s.add_argument("model", nargs="?", help="model file or builtin:NAME")
    s.add_argument("--config", help='configuration instead of a model, e.g. "I7, II, 3I1"')
    s.set_defaults(func=cmd_admits)

    s = sub.add_parser("bundles", parents=[common], help="enumerate conic bundles")
    s.add_argument("model", help="model file or builtin:NAME")
    s.add_argument("--bound", type=int, default=1, help="largest degree a of a*l - sum bi*ei searched")
    s.set_defaults(func=cmd_bundles)

    s = sub.add_parser("classify", parents=[common], help="classify a divisor as a conic fiber")
    s.add_argument("model", help="model file or builtin:NAME")
    s.add_argument("--fiber", required=True, help='JSON list like [["E9", 2], ["E8", 1]]')
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("corpus", parents=[common], help="run the bundled example surfaces")
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except _Failed:
        return EXIT_DOMAIN
    except DomainError as exc:
        sys.stdout.write(export.dumps(exc.to_dict()))
        return EXIT_DOMAIN
    except ResconicError as exc:
        sys.stdout.write(export.dumps(exc.to_dict()))
        return EXIT_IO
    except OSError as exc:
        sys.stdout.write(export.dumps({"error": "IOError", "message": str(exc)}))
        return EXIT_IO
    _emit(text, args.output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
