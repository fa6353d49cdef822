"""Command-line front end for the resolution and cohomology computations.

Every command builds one report dictionary (plain strings, ints, booleans,
None) and renders it with a pure function, so the JSON output round-trips:
parsing the emitted JSON and re-rendering yields the identical text table.
JSON is emitted with sorted keys and no timestamps, which makes repeated
runs byte-identical.

Commands:

* ``hh``      cohomology dimension table with recorded-value comparison
* ``verify``  full structural verification of the bimodule resolution
* ``center``  basis of the center, compared against the recorded one
* ``ext``     extension dimensions between the simples, against closed forms
* ``gsz``     the one-sided generator sets in path notation
* ``homdims`` cochain-space and syzygy-hom dimension tables

Exit codes: 0 all checks pass, 1 a mathematical mismatch was found, 2 usage
error. A mismatch between a computed value and a recorded one is reported,
never patched over: over F2 the recorded general-degree cohomology rows are
provably two above the computed ranks, so ``hh --field f2`` exits 1 while
``verify --field f2`` (whose checks are structural, not comparative) exits 0.

The CSV format uses the fixed schema ``n,value,expected,status`` with one
row per degree. Commands whose natural table carries more than one value a
degree flatten it: ``ext`` sums the four simple-pair dimensions, ``verify``
reports the cohomology dimension with a status that also folds in the
structural flags, ``homdims`` emits the cochain table followed by the
syzygy table, and ``gsz``/``center`` write one element per row.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .bimodule import (BimoduleResolution, hh_dim_formula, hom_dim_formula,
                       hom_omega_formula)
from .one_sided import (OneSided, PresetShape, ext_dim_formula,
                        free_expansion, gsz_sets, label_str, verify_gsz)
from .oracle import DEGREE_CAP, generic_minimal_resolution
from .path_algebra import (FreeElement, build_algebra, parse_presentation,
                           preset_presentation)

GSZ_CHECK_DEPTH = 12
GSZ_PRINT_CAP = 12
ORACLE_HH_CAP = DEGREE_CAP - 2

CENTER_BASIS = (
    ("e(1)", "e(2)"),
    ("eps",),
    ("alpha*beta", "beta*alpha"),
    ("eps*eps",),
    ("beta*alpha*beta*alpha",),
)

GSZ_RECORDED = {
    (0, "g^1_0"): "e(1)",
    (0, "f22_0"): "e(2)",
    (1, "g^1_1"): "eps",
    (1, "f12_1"): "alpha",
    (1, "f21_1"): "beta",
    (2, "g^1_2"): "eps^2 - alpha*beta*alpha*beta",
    (2, "f12_2"): "eps*alpha",
    (2, "f21_2"): "beta*eps",
}


class UsageError(ValueError):
    """Bad flag combination or value; maps to exit code 2."""


@dataclass
class RunConfig:
    command: str
    preset: str | None
    presentation: str | None
    field_spec: str
    max_degree: int
    method: str
    format: str
    out: str | None
    degree: int | None = None


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def parse_field_spec(spec: str) -> int:
    """Map 'q' to characteristic 0 and 'f<p>' to a prime characteristic."""
    if spec == "q":
        return 0
    if spec.startswith("f") and spec[1:].isdigit():
        p = int(spec[1:])
        if not _is_prime(p):
            raise UsageError(f"field {spec!r}: {p} is not prime")
        return p
    raise UsageError(f"unrecognized field {spec!r} (use q, f2, f3, f<p>)")


def build_table(cfg: RunConfig):
    from .exact_linalg import Field

    char = parse_field_spec(cfg.field_spec)
    if cfg.presentation is not None:
        try:
            with open(cfg.presentation, encoding="utf-8") as handle:
                source = handle.read()
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.presentation}: {exc}")
        presentation = parse_presentation(source)
    else:
        presentation = preset_presentation(cfg.preset)
    return build_algebra(presentation, Field(char))


def _status(value, expected) -> str:
    if expected is None:
        return "unstated"
    return "match" if value == expected else "MISMATCH"


def _algebra_name(cfg: RunConfig) -> str:
    return cfg.presentation if cfg.presentation is not None else cfg.preset


def _base_report(cfg: RunConfig) -> dict:
    return {
        "command": cfg.command,
        "algebra": _algebra_name(cfg),
        "field": cfg.field_spec,
        "max_degree": cfg.max_degree,
        "method": cfg.method,
    }


# -- commands -------------------------------------------------------------


def cmd_hh(cfg: RunConfig) -> dict:
    if cfg.method == "oracle" and cfg.max_degree > ORACLE_HH_CAP:
        raise UsageError("the oracle method is capped at degree "
                         f"{ORACLE_HH_CAP}; lower --max-degree or use "
                         "--method explicit or both")
    table = build_table(cfg)
    report = _base_report(cfg)
    rows = []
    oracle_ok = True
    explicit = None
    if cfg.method in ("explicit", "both"):
        explicit = BimoduleResolution(table)
        rows = explicit.hh_table(cfg.max_degree)
    if cfg.method in ("oracle", "both"):
        depth = min(cfg.max_degree, ORACLE_HH_CAP)
        oracle = generic_minimal_resolution(table, max_degree=depth + 1)
        if cfg.method == "oracle":
            for n in range(cfg.max_degree + 1):
                value = oracle.hh_dim(n)
                expected = hh_dim_formula(table.field.char, n)
                rows.append({"n": n, "value": value, "expected": expected,
                             "status": _status(value, expected)})
        else:
            for row in rows:
                if row["n"] <= depth:
                    row["oracle"] = oracle.hh_dim(row["n"])
                    if row["oracle"] != row["value"]:
                        oracle_ok = False
    report["rows"] = rows
    report["ok"] = (oracle_ok
                    and all(r["status"] != "MISMATCH" for r in rows))
    if cfg.method == "both":
        report["oracle_ok"] = oracle_ok
    return report


def cmd_verify(cfg: RunConfig) -> dict:
    table = build_table(cfg)
    resolution = BimoduleResolution(table)
    one = OneSided(table)
    gsz_depth = min(cfg.max_degree, GSZ_CHECK_DEPTH)

    complex_report = resolution.verify_complex(cfg.max_degree)
    exact_report = resolution.verify_exactness(cfg.max_degree)
    minimal_report = resolution.verify_minimality(cfg.max_degree, one)
    simples_report = resolution.compare_with_simples(cfg.max_degree)
    gsz_report = verify_gsz(table, gsz_depth, one)

    checks = {
        "complex": complex_report["ok"],
        "exactness": exact_report["ok"],
        "minimality": minimal_report["ok"],
        "simples": simples_report["ok"],
        "gsz": gsz_report["ok"],
    }
    if cfg.method in ("oracle", "both"):
        depth = min(cfg.max_degree, ORACLE_HH_CAP)
        oracle = generic_minimal_resolution(table, max_degree=depth + 1)
        agree = True
        for n in range(depth + 1):
            counts = {pair: m for pair, m in
                      resolution.summand_counts(n).items() if m}
            if oracle.multiplicities(n) != counts:
                agree = False
            if oracle.hh_dim(n) != resolution.hh_dim(n):
                agree = False
        checks["oracle"] = agree

    complex_by_n = {row["n"]: row["ok"] for row in complex_report["degrees"]}
    exact_by_n = {row["n"]: row["ok"] for row in exact_report["degrees"]}
    minimal_by_n = {row["n"]: row["ok"] for row in minimal_report["degrees"]}
    rows = []
    for n in range(cfg.max_degree + 1):
        betti = [{"i": i, "j": j, "mult": m}
                 for (i, j), m in sorted(resolution.summand_counts(n).items())
                 if m]
        value = resolution.hh_dim(n)
        expected = hh_dim_formula(table.field.char, n)
        rows.append({
            "n": n,
            "complex_ok": complex_by_n.get(n),
            "exact_ok": exact_by_n[n],
            "minimal_ok": minimal_by_n[n],
            "betti": betti,
            "hom_dim": resolution.hom_dim(n),
            "hh_dim": value,
            "expected": expected,
            "status": _status(value, expected),
        })

    report = _base_report(cfg)
    report["gsz_depth"] = gsz_depth
    report["checks"] = checks
    report["rows"] = rows
    report["ok"] = all(checks.values())
    return report


def cmd_center(cfg: RunConfig) -> dict:
    table = build_table(cfg)
    computed = table.center()
    quiver = table.quiver

    def parse_path(text: str) -> dict:
        if text.startswith("e(") and text.endswith(")"):
            element = FreeElement.idempotent(quiver, text[2:-1])
        else:
            element = FreeElement.path(quiver, text.split("*"))
        return table.reduce(element).coeffs

    field = table.field
    expected_coeffs = []
    for paths in CENTER_BASIS:
        vec: dict = {}
        for text in paths:
            for i, c in parse_path(text).items():
                vec[i] = field.add(vec.get(i, field.zero()), c)
        expected_coeffs.append({i: c for i, c in vec.items()
                                if not field.is_zero(c)})

    def sort_key(coeffs: dict):
        return sorted(coeffs)

    computed_coeffs = sorted((z.coeffs for z in computed), key=sort_key)
    expected_sorted = sorted(expected_coeffs, key=sort_key)
    expected_strings = [" + ".join(paths) for paths in CENTER_BASIS]

    rows = []
    for idx, coeffs in enumerate(computed_coeffs):
        pretty = table.element(coeffs).pretty()
        ok = coeffs in expected_sorted
        rows.append({"n": idx, "value": pretty,
                     "expected": pretty if ok else None,
                     "status": "match" if ok else "MISMATCH"})
    report = _base_report(cfg)
    report["dimension"] = len(computed)
    report["recorded"] = sorted(expected_strings)
    report["rows"] = rows
    report["ok"] = computed_coeffs == expected_sorted
    return report


def cmd_ext(cfg: RunConfig) -> dict:
    table = build_table(cfg)
    one = OneSided(table)
    shape = PresetShape(table.quiver)
    vertices = table.quiver.vertices
    rows = []
    for n in range(cfg.max_degree + 1):
        dims = {}
        expected = {}
        for i in vertices:
            for j in vertices:
                dims[f"{i},{j}"] = one.ext_dim(i, j, n)
                expected[f"{i},{j}"] = ext_dim_formula(shape, i, j, n)
        rows.append({"n": n, "dims": dims, "expected": expected,
                     "status": "match" if dims == expected else "MISMATCH"})
    report = _base_report(cfg)
    report["rows"] = rows
    report["ok"] = all(r["status"] == "match" for r in rows)
    return report


def cmd_gsz(cfg: RunConfig) -> dict:
    if cfg.degree > GSZ_PRINT_CAP:
        raise UsageError("free expansions grow exponentially; --degree is "
                         f"capped at {GSZ_PRINT_CAP}")
    table = build_table(cfg)
    quiver = table.quiver
    sets = gsz_sets(quiver, cfg.degree)
    rows = []
    for label, el in sets[cfg.degree].items():
        name = label_str(label, cfg.degree)
        value = free_expansion(quiver, sets, cfg.degree, label).pretty()
        expected = GSZ_RECORDED.get((cfg.degree, name))
        rows.append({"label": name, "source": el.source, "target": el.target,
                     "value": value, "expected": expected,
                     "status": _status(value, expected)})
    report = _base_report(cfg)
    report["degree"] = cfg.degree
    report["rows"] = rows
    report["ok"] = all(r["status"] != "MISMATCH" for r in rows)
    return report


def cmd_homdims(cfg: RunConfig) -> dict:
    table = build_table(cfg)
    resolution = BimoduleResolution(table)
    char = table.field.char
    hom_rows = []
    for n in range(cfg.max_degree + 1):
        value = resolution.hom_dim(n)
        expected = hom_dim_formula(n)
        hom_rows.append({"n": n, "value": value, "expected": expected,
                         "status": _status(value, expected)})
    omega_rows = []
    for n in range(1, cfg.max_degree + 1):
        value = resolution.hom_omega_dim(n)
        expected = hom_omega_formula(char, n)
        omega_rows.append({"n": n, "value": value, "expected": expected,
                           "status": _status(value, expected)})
    report = _base_report(cfg)
    report["hom_rows"] = hom_rows
    report["omega_rows"] = omega_rows
    report["ok"] = all(r["status"] != "MISMATCH"
                       for r in hom_rows + omega_rows)
    return report


# -- renderers ------------------------------------------------------------


def _render_cell(value) -> str:
    if value is None:
        return "-"
    if value is True:
        return "ok"
    if value is False:
        return "FAIL"
    return str(value)


def _render_table(headers, rows) -> list:
    cells = [[_render_cell(v) for v in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for k, text in enumerate(row):
            widths[k] = max(widths[k], len(text))
    lines = ["  ".join(h.rjust(widths[k]) for k, h in enumerate(headers))]
    for row in cells:
        lines.append("  ".join(text.rjust(widths[k])
                               for k, text in enumerate(row)))
    return lines


def _header_line(report: dict) -> str:
    parts = [f"algebra: {report['algebra']}", f"field: {report['field']}"]
    if report["command"] in ("hh", "verify", "ext", "homdims"):
        parts.append(f"degrees: 0..{report['max_degree']}")
    if report["command"] == "gsz":
        parts.append(f"degree: {report['degree']}")
    if report["command"] in ("hh", "verify"):
        parts.append(f"method: {report['method']}")
    return "   ".join(parts)


def _mismatch_line(rows, what: str) -> str:
    bad = [str(r["n"]) for r in rows if r.get("status") == "MISMATCH"]
    if not bad:
        return f"all computed {what} agree with the recorded values"
    return (f"MISMATCH: computed {what} differ from the recorded values "
            f"at degrees {', '.join(bad)}")


_TITLES = {
    "hh": "hochschild cohomology dimensions",
    "verify": "bimodule resolution verification",
    "center": "center of the algebra",
    "ext": "extension dimensions between the simples",
    "gsz": "one-sided generator set",
    "homdims": "cochain and syzygy hom dimensions",
}


def render_text(report: dict) -> str:
    command = report["command"]
    lines = [_TITLES[command], _header_line(report)]
    lines.append("")
    if command == "hh":
        headers = ["n", "dim", "expected", "status"]
        rows = [[r["n"], r["value"], r["expected"], r["status"]]
                for r in report["rows"]]
        if any("oracle" in r for r in report["rows"]):
            headers.insert(2, "oracle")
            rows = [[r["n"], r["value"], r.get("oracle"), r["expected"],
                     r["status"]] for r in report["rows"]]
        lines.extend(_render_table(headers, rows))
        lines.append("")
        lines.append(_mismatch_line(report["rows"], "dimensions"))
        if report.get("oracle_ok") is False:
            lines.append("MISMATCH: the oracle disagrees with the "
                         "explicit resolution")
    elif command == "verify":
        checks = report["checks"]
        lines.append("checks: " + "   ".join(
            f"{name} {_render_cell(checks[name])}"
            for name in sorted(checks)))
        lines.append(f"generator-set depth: {report['gsz_depth']}")
        lines.append("")
        headers = ["n", "complex", "exact", "minimal", "betti", "hom",
                   "hh", "expected", "status"]
        rows = []
        for r in report["rows"]:
            betti = " ".join(f"{b['i']},{b['j']}:{b['mult']}"
                             for b in r["betti"])
            rows.append([r["n"], r["complex_ok"], r["exact_ok"],
                         r["minimal_ok"], betti, r["hom_dim"], r["hh_dim"],
                         r["expected"], r["status"]])
        lines.extend(_render_table(headers, rows))
        lines.append("")
        for name in sorted(checks):
            if checks[name]:
                continue
            key = {"complex": "complex_ok", "exactness": "exact_ok",
                   "minimality": "minimal_ok"}.get(name)
            if key is not None:
                bad = [str(r["n"]) for r in report["rows"] if r[key] is False]
                lines.append(f"FAIL: {name} first fails at degree {bad[0]}")
            else:
                lines.append(f"FAIL: {name} check failed")
        if report["ok"]:
            lines.append("all structural checks pass")
    elif command == "center":
        lines.append(f"dimension: {report['dimension']}")
        lines.extend(_render_table(
            ["n", "element", "status"],
            [[r["n"], r["value"], r["status"]] for r in report["rows"]]))
        lines.append("")
        if report["ok"]:
            lines.append("the center matches the recorded basis")
        else:
            lines.append("MISMATCH: recorded basis is "
                         + "; ".join(report["recorded"]))
    elif command == "ext":
        pairs = sorted(report["rows"][0]["dims"]) if report["rows"] else []
        headers = ["n"] + pairs + ["status"]
        rows = [[r["n"]] + [r["dims"][p] for p in pairs] + [r["status"]]
                for r in report["rows"]]
        lines.extend(_render_table(headers, rows))
        lines.append("")
        lines.append(_mismatch_line(report["rows"], "dimensions"))
    elif command == "gsz":
        headers = ["label", "source", "target", "element", "status"]
        rows = [[r["label"], r["source"], r["target"], r["value"],
                 r["status"]] for r in report["rows"]]
        lines.extend(_render_table(headers, rows))
        lines.append("")
        lines.append(_mismatch_line(report["rows"], "elements"))
    elif command == "homdims":
        lines.append("cochain space dimensions:")
        lines.extend(_render_table(
            ["n", "dim", "expected", "status"],
            [[r["n"], r["value"], r["expected"], r["status"]]
             for r in report["hom_rows"]]))
        lines.append("")
        lines.append("syzygy hom dimensions:")
        lines.extend(_render_table(
            ["n", "dim", "expected", "status"],
            [[r["n"], r["value"], r["expected"], r["status"]]
             for r in report["omega_rows"]]))
        lines.append("")
        lines.append(_mismatch_line(report["hom_rows"] + report["omega_rows"],
                                    "dimensions"))
    return "\n".join(lines) + "\n"


def _csv_rows(report: dict) -> list:
    command = report["command"]
    if command in ("hh",):
        return [[r["n"], r["value"], r["expected"], r["status"]]
                for r in report["rows"]]
    if command == "verify":
        rows = []
        for r in report["rows"]:
            structural = (r["complex_ok"] is not False and r["exact_ok"]
                          and r["minimal_ok"])
            status = r["status"] if structural else "FAIL"
            rows.append([r["n"], r["hh_dim"], r["expected"], status])
        return rows
    if command == "center":
        return [[r["n"], r["value"], r["expected"], r["status"]]
                for r in report["rows"]]
    if command == "ext":
        rows = []
        for r in report["rows"]:
            total = sum(r["dims"].values())
            expected = sum(r["expected"].values())
            rows.append([r["n"], total, expected, r["status"]])
        return rows
    if command == "gsz":
        return [[report["degree"], f"{r['label']} = {r['value']}",
                 r["expected"], r["status"]] for r in report["rows"]]
    if command == "homdims":
        return ([[r["n"], r["value"], r["expected"], r["status"]]
                 for r in report["hom_rows"]]
                + [[r["n"], r["value"], r["expected"], r["status"]]
                   for r in report["omega_rows"]])
    raise ValueError(f"no CSV rendering for {command!r}")


def render_csv(report: dict) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "value", "expected", "status"])
    for row in _csv_rows(report):
        writer.writerow(["" if v is None else v for v in row])
    return buffer.getvalue()


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}
COMMANDS = {"hh": cmd_hh, "verify": cmd_verify, "center": cmd_center,
            "ext": cmd_ext, "gsz": cmd_gsz, "homdims": cmd_homdims}


# -- driver ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--preset", default="hecke_s4_qm1",
                        help="built-in algebra presentation (default: "
                             "hecke_s4_qm1)")
    source.add_argument("--presentation", metavar="FILE",
                        help="read the algebra presentation from a file")
    common.add_argument("--field", default="q", metavar="SPEC",
                        help="q for characteristic zero or f<p> for a prime "
                             "field (default: q)")
    common.add_argument("--max-degree", type=int, default=24, metavar="N",
                        help="highest cohomological degree (default: 24)")
    common.add_argument("--method", choices=("explicit", "oracle", "both"),
                        default="explicit",
                        help="computation path; oracle replays the "
                             "resolution generically and is capped at "
                             f"degree {ORACLE_HH_CAP}")
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format (default: text)")
    common.add_argument("--out", metavar="FILE",
                        help="write the rendered output to a file")

    parser = argparse.ArgumentParser(
        prog="quiverhh",
        description="exact minimal-resolution computations for a fixed "
                    "two-vertex quiver algebra")
    subparsers = parser.add_subparsers(dest="command", required=True)
    helps = {
        "hh": "cohomology dimensions with recorded-value comparison",
        "verify": "verify the bimodule resolution degree by degree",
        "center": "compute the center and compare with the recorded basis",
        "ext": "extension dimensions between the simple modules",
        "gsz": "print the one-sided generator set of one degree",
        "homdims": "cochain-space and syzygy hom dimension tables",
    }
    for name in COMMANDS:
        sub = subparsers.add_parser(name, parents=[common], help=helps[name])
        if name == "gsz":
            sub.add_argument("--degree", type=int, default=2,
                             help="generator degree to print (default: 2)")
    return parser


def run(cfg: RunConfig) -> tuple:
    """Execute one command; returns (exit_code, rendered_output)."""
    if cfg.max_degree < 1:
        raise UsageError("--max-degree must be at least 1")
    if cfg.degree is not None and cfg.degree < 0:
        raise UsageError("--degree must be nonnegative")
    report = COMMANDS[cfg.command](cfg)
    return (0 if report["ok"] else 1), RENDERERS[cfg.format](report)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code else 0
    cfg = RunConfig(
        command=args.command,
        preset=args.preset,
        presentation=args.presentation,
        field_spec=args.field,
        max_degree=args.max_degree,
        method=args.method,
        format=args.format,
        out=args.out,
        degree=getattr(args, "degree", None),
    )
    try:
        code, output = run(cfg)
        if cfg.out is not None:
            with open(cfg.out, "w", encoding="utf-8") as handle:
                handle.write(output)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.out is None:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
