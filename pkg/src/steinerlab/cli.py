"""Command-line interface.

Subcommands: ``gen`` (emit a shape), ``op`` (apply an operation), ``info``,
``atoms``, ``check`` (named verification suites), ``verify-retract``, and
``suite`` (the full acceptance battery).  Exit codes: 0 pass, 1 verified
failure, 2 usage or input error.  Stdout is deterministic; timing and
diagnostics go to stderr.  ``--json`` switches reports to JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import acceptance
from .basic import interval, unit, zero
from .core import BasedComplex, CheckReport, SteinerlabError, graded_counts, validate_complex
from .io import emit, parse
from .names import parse_name, render_name
from .ops import (
    antijoin,
    antisuspension,
    dual_co,
    dual_coop,
    dual_op,
    gray_tensor,
    join,
    suspension,
)
from .retract import (
    RetractionPair,
    section_ell,
    section_q_cube,
    section_xi,
    theta_left_inverse,
    theta_retract_into_oriental,
    zeta,
)
from .shapes import (
    ThetaSpec,
    antioriental,
    boundary_decomposition_check,
    boundary_disk,
    cube,
    disk,
    oriental,
    theta,
    top_cell_decomposition_check,
    wedge,
)
from .steiner import atom_table, is_steiner


class UsageError(Exception):
    pass


def _parse_shape_ref(text: str) -> Optional[BasedComplex]:
    plain = {"unit": unit, "zero": zero, "interval": interval}
    if text in plain:
        return plain[text]()
    if ":" in text:
        kind, _, arg = text.partition(":")
        table = {
            "disk": disk,
            "boundary-disk": boundary_disk,
            "cube": cube,
            "oriental": oriental,
            "antioriental": antioriental,
        }
        if kind in table:
            try:
                n = int(arg)
            except ValueError:
                raise UsageError(f"bad shape parameter in {text!r}") from None
            return table[kind](n)
    return None


def _load_complex(ref: str) -> BasedComplex:
    shape = _parse_shape_ref(ref)
    if shape is not None:
        return shape
    if ref == "-":
        text = sys.stdin.read()
    else:
        path = Path(ref)
        if not path.exists():
            raise UsageError(f"no such file or shape reference: {ref}")
        text = path.read_text()
    value = parse(text)
    if not isinstance(value, BasedComplex):
        raise UsageError(f"{ref} does not contain a complex document")
    return value


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _ints(values: Sequence[str], what: str) -> list[int]:
    try:
        return [int(v) for v in values]
    except ValueError:
        raise UsageError(f"{what} must be integers, got {values!r}") from None


def _parse_csv_ints(text: str, what: str) -> tuple[int, ...]:
    if not text:
        return ()
    return tuple(_ints(text.split(","), what))


_SIDE_CODES = {"ts": ("target", "source"), "st": ("source", "target"),
               "ss": ("source", "source"), "tt": ("target", "target")}


def _parse_sides(text: str) -> tuple[tuple[str, str], ...]:
    if not text:
        return ()
    sides = []
    for token in text.split(","):
        if token not in _SIDE_CODES:
            raise UsageError(
                f"bad side code {token!r}; use ts, st, ss, or tt"
            )
        sides.append(_SIDE_CODES[token])
    return tuple(sides)


def _theta_spec_from_args(args) -> ThetaSpec:
    dims = _parse_csv_ints(args.dims, "dims")
    glue = _parse_csv_ints(args.glue, "glue") if args.glue else ()
    if args.sides:
        sides = _parse_sides(args.sides)
    else:
        sides = tuple(("target", "source") for _ in glue)
    return ThetaSpec(dims, glue, sides)


def _report_payload(report: CheckReport) -> dict:
    return {
        "passed": report.passed,
        "checks": [
            {"name": item.name, "passed": item.passed, "witness": item.witness}
            for item in report.checks
        ],
    }


def _print_report(report: CheckReport, as_json: bool) -> int:
    if as_json:
        sys.stdout.write(json.dumps(_report_payload(report), indent=2) + "\n")
    else:
        for line in report.lines():
            sys.stdout.write(line + "\n")
        sys.stdout.write(("PASSED" if report.passed else "FAILED") + "\n")
    return 0 if report.passed else 1


def _cmd_gen(args) -> int:
    kind = args.shape
    if kind in ("disk", "boundary-disk", "cube", "oriental", "antioriental"):
        if len(args.params) != 1:
            raise UsageError(f"gen {kind} takes one dimension parameter")
        (n,) = _ints(args.params, "dimension")
        builders = {
            "disk": disk,
            "boundary-disk": boundary_disk,
            "cube": cube,
            "oriental": oriental,
            "antioriental": antioriental,
        }
        value = builders[kind](n)
    elif kind == "theta":
        if len(args.params) != 1:
            raise UsageError("gen theta takes a comma-separated dims list")
        spec = ThetaSpec(
            _parse_csv_ints(args.params[0], "dims"),
            _parse_csv_ints(args.glue, "glue") if args.glue else (),
            _parse_sides(args.sides)
            if args.sides
            else tuple(
                ("target", "source")
                for _ in (_parse_csv_ints(args.glue, "glue") if args.glue else ())
            ),
        )
        value = theta(spec)
    elif kind == "wedge":
        if len(args.params) != 4:
            raise UsageError("gen wedge takes: complex_a gen_a complex_b gen_b")
        a = _load_complex(args.params[0])
        b = _load_complex(args.params[2])
        value = wedge(a, parse_name(args.params[1]), b, parse_name(args.params[3]))
    else:
        raise UsageError(f"unknown shape {kind!r}")
    _write_output(emit(value), args.out)
    return 0


def _cmd_op(args) -> int:
    op = args.operation
    binary = {"tensor": gray_tensor, "join": join, "antijoin": antijoin}
    unary = {
        "susp": suspension,
        "antisusp": antisuspension,
        "op": dual_op,
        "co": dual_co,
        "coop": dual_coop,
    }
    if op in binary:
        if len(args.inputs) != 2:
            raise UsageError(f"op {op} takes two inputs")
        value = binary[op](_load_complex(args.inputs[0]), _load_complex(args.inputs[1]))
    elif op in unary:
        if len(args.inputs) != 1:
            raise UsageError(f"op {op} takes one input")
        value = unary[op](_load_complex(args.inputs[0]))
    else:
        raise UsageError(f"unknown operation {op!r}")
    _write_output(emit(value), args.out)
    return 0


def _cmd_info(args) -> int:
    c = _load_complex(args.input)
    counts = graded_counts(c)
    check = validate_complex(c)
    if args.json:
        payload = {
            "graded_counts": {str(k): v for k, v in counts.items()},
            "total_generators": c.size,
            "top_degree": max(counts) if counts else None,
            "validation": _report_payload(check),
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(f"graded counts: {counts}\n")
        sys.stdout.write(f"total generators: {c.size}\n")
        sys.stdout.write(
            f"top degree: {max(counts) if counts else 'empty'}\n"
        )
        sys.stdout.write(
            "validation: " + ("passed" if check.passed else "FAILED") + "\n"
        )
        for line in check.lines():
            sys.stdout.write("  " + line + "\n")
    return 0 if check.passed else 1


def _cmd_atoms(args) -> int:
    c = _load_complex(args.input)
    if args.gen:
        gens = [(c.degree_of(parse_name(args.gen)), parse_name(args.gen))]
    else:
        gens = list(c.all_generators())
    payload = []
    for _, g in gens:
        table = atom_table(c, g)
        entry = {
            "generator": render_name(g),
            "dim": table.dim,
            "minus": [
                [{"generator": render_name(n), "coeff": str(v)} for n, v in ch.items()]
                for ch in table.minus
            ],
            "plus": [
                [{"generator": render_name(n), "coeff": str(v)} for n, v in ch.items()]
                for ch in table.plus
            ],
        }
        payload.append(entry)
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for entry in payload:
            sys.stdout.write(f"atom {entry['generator']} (dim {entry['dim']})\n")
            for side in ("minus", "plus"):
                for level, terms in enumerate(entry[side]):
                    rendered = " + ".join(
                        (f"{t['coeff']}*" if t["coeff"] != "1" else "")
                        + t["generator"]
                        for t in terms
                    )
                    sys.stdout.write(
                        f"  {side}[{level}] = {rendered if rendered else '0'}\n"
                    )
    return 0


def _cmd_check(args) -> int:
    which = args.suite
    if which == "steiner":
        if len(args.params) != 1:
            raise UsageError("check steiner takes one complex input")
        report = is_steiner(_load_complex(args.params[0]))
    elif which in ("boundary-decomp", "top-cell"):
        if len(args.params) != 2 or args.params[0] not in ("cube", "oriental"):
            raise UsageError(f"check {which} takes: <cube|oriental> <n>")
        n = _ints(args.params[1:], "dimension")[0]
        fn = (
            boundary_decomposition_check
            if which == "boundary-decomp"
            else top_cell_decomposition_check
        )
        report = fn(args.params[0], n)
    elif which == "identities":
        report = acceptance.criterion_dualities()
    else:
        raise UsageError(f"unknown check suite {which!r}")
    return _print_report(report, args.json)


def _cmd_verify_retract(args) -> int:
    kind = args.kind
    if kind == "xi":
        if len(args.params) != 1:
            raise UsageError("verify-retract xi takes one dimension")
        pair = section_xi(_ints(args.params, "dimension")[0])
    elif kind == "q-cube":
        if len(args.params) != 1:
            raise UsageError("verify-retract q-cube takes one dimension")
        pair = section_q_cube(_ints(args.params, "dimension")[0])
    elif kind == "ell":
        if len(args.params) != 1:
            raise UsageError("verify-retract ell takes one dimension")
        pair = section_ell(_ints(args.params, "dimension")[0])
    elif kind == "zeta":
        if len(args.params) != 2:
            raise UsageError("verify-retract zeta takes two dimensions")
        n, m = _ints(args.params, "dimensions")
        z, t = zeta(n, m), theta_left_inverse(n, m)
        pair = RetractionPair(z, t)
    elif kind == "theta":
        if len(args.params) != 1:
            raise UsageError("verify-retract theta takes a dims list")
        spec = ThetaSpec(
            _parse_csv_ints(args.params[0], "dims"),
            _parse_csv_ints(args.glue, "glue") if args.glue else (),
            _parse_sides(args.sides)
            if args.sides
            else tuple(
                ("target", "source")
                for _ in (_parse_csv_ints(args.glue, "glue") if args.glue else ())
            ),
        )
        pair = theta_retract_into_oriental(spec)
    else:
        raise UsageError(f"unknown retraction {kind!r}")
    return _print_report(pair.verify(), args.json)


def _cmd_suite(args) -> int:
    t0 = time.time()
    results = acceptance.run_all()
    all_passed = all(rep.passed for _, rep in results)
    if args.json:
        payload = {
            "passed": all_passed,
            "criteria": [
                {"criterion": name, **_report_payload(rep)} for name, rep in results
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        width = max(len(name) for name, _ in results)
        for name, rep in results:
            status = "PASS" if rep.passed else "FAIL"
            sys.stdout.write(f"{status}  {name:<{width}}  ({len(rep.checks)} checks)\n")
            if not rep.passed:
                for item in rep.failures():
                    witness = f"  [{item.witness}]" if item.witness else ""
                    sys.stdout.write(f"      FAIL {item.name}{witness}\n")
        sys.stdout.write(("PASSED" if all_passed else "FAILED") + "\n")
    sys.stderr.write(f"suite completed in {time.time() - t0:.1f}s\n")
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinerlab",
        description="Exact-integer calculator for based augmented directed complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a shape")
    p_gen.add_argument("shape")
    p_gen.add_argument("params", nargs="*")
    p_gen.add_argument("--glue", default="")
    p_gen.add_argument("--sides", default="")
    p_gen.add_argument("--out")
    p_gen.set_defaults(fn=_cmd_gen)

    p_op = sub.add_parser("op", help="apply an operation to complexes")
    p_op.add_argument("operation")
    p_op.add_argument("inputs", nargs="*")
    p_op.add_argument("--out")
    p_op.set_defaults(fn=_cmd_op)

    p_info = sub.add_parser("info", help="graded counts and validation summary")
    p_info.add_argument("input")
    p_info.add_argument("--json", action="store_true")
    p_info.set_defaults(fn=_cmd_info)

    p_atoms = sub.add_parser("atoms", help="print atom tables")
    p_atoms.add_argument("input")
    p_atoms.add_argument("--gen")
    p_atoms.add_argument("--json", action="store_true")
    p_atoms.set_defaults(fn=_cmd_atoms)

    p_check = sub.add_parser("check", help="run a named verification suite")
    p_check.add_argument("suite", choices=["steiner", "boundary-decomp", "top-cell", "identities"])
    p_check.add_argument("params", nargs="*")
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(fn=_cmd_check)

    p_verify = sub.add_parser("verify-retract", help="build and verify a retraction pair")
    p_verify.add_argument("kind", choices=["xi", "q-cube", "ell", "zeta", "theta"])
    p_verify.add_argument("params", nargs="*")
    p_verify.add_argument("--glue", default="")
    p_verify.add_argument("--sides", default="")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(fn=_cmd_verify_retract)

    p_suite = sub.add_parser("suite", help="run the full acceptance battery")
    p_suite.add_argument("--json", action="store_true")
    p_suite.set_defaults(fn=_cmd_suite)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except FileNotFoundError as exc:
        sys.stderr.write(f"io error: {exc}\n")
        return 2
    except SteinerlabError as exc:
        sys.stderr.write(f"error [{exc.code}]: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
