"""Command-line front end.

Exit codes: 0 for success (including a clean "not integral" finding),
1 when a verification is mathematically refuted, 2 for usage or input
errors. Output on stdout is byte-identical across runs for identical
inputs; timing goes to stderr.
"""

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from orbitspectra.graphs import (
    Graph,
    all_pairs_distances,
    build_circulant,
    build_complete,
    build_crown,
    build_cycle,
    build_johnson,
    build_lcr,
    build_line_graph,
    is_distance_regular,
    pair_vertices,
)
from orbitspectra.spectral import (
    METHODS,
    STABILIZER_CELL_REPS,
    VerificationError,
    is_distance_integral,
    lcr_quotient_closed_form,
    quotient_matrix,
    verify_lcr,
)
from orbitspectra.perms import (
    GeneratorSet,
    lcr_automorphism_gens,
    lcr_stabilizer_gens,
    orbits,
    parse_cycles,
)


class UsageError(ValueError):
    pass


class EdgeListError(ValueError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


FAMILIES = ("crown", "lcr", "cycle", "complete", "johnson", "line-johnson", "circulant")


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation: a single graph source plus output options."""

    command: str
    family: str | None
    input_path: str | None
    n_values: tuple
    k: int | None
    connections: tuple
    method: str
    fmt: str
    output: str | None
    stabilizer_gens: str | None = None
    transitive_gens: str | None = None

    def __post_init__(self):
        if (self.family is None) == (self.input_path is None) and self.command not in (
            "verify-lcr",
            "quotient",
        ):
            raise UsageError("exactly one graph source: --family with --n, or --input")


def parse_edge_list(text) -> Graph:
    """Parse the edge-list format: "p <count>" then "e <u> <v>" lines.

    Blank lines and lines starting with "#" are ignored; duplicate
    edges, self-loops and malformed lines are errors with line numbers.
    """
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise EdgeListError(lineno, "duplicate 'p' line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise EdgeListError(lineno, "expected 'p <vertex_count>'")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise EdgeListError(lineno, "edge listed before the 'p' line")
            if len(parts) != 3:
                raise EdgeListError(lineno, "expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise EdgeListError(lineno, "edge endpoints must be integers") from None
            if u == v:
                raise EdgeListError(lineno, f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise EdgeListError(lineno, f"edge ({u},{v}) out of range 0..{n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise EdgeListError(lineno, f"duplicate edge ({u},{v})")
            seen.add(key)
            edges.append(key)
        else:
            raise EdgeListError(lineno, f"unrecognized directive {parts[0]!r}")
    if n is None:
        raise EdgeListError(0, "missing 'p <vertex_count>' line")
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.vertex_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def build_family(family, n, k=None, connections=()):
    """Construct a named family member and its report description."""
    if family == "crown":
        return build_crown(n), f"crown n={n}"
    if family == "lcr":
        return build_lcr(n), f"lcr n={n}"
    if family == "cycle":
        return build_cycle(n), f"cycle n={n}"
    if family == "complete":
        return build_complete(n), f"complete n={n}"
    if family == "johnson":
        if k is None:
            raise UsageError("--k is required for the johnson family")
        return build_johnson(n, k), f"johnson n={n} k={k}"
    if family == "line-johnson":
        if k is None:
            raise UsageError("--k is required for the line-johnson family")
        return build_line_graph(build_johnson(n, k)), f"line-johnson n={n} k={k}"
    if family == "circulant":
        if not connections:
            raise UsageError("--connections is required for the circulant family")
        conn = ",".join(str(c) for c in connections)
        return build_circulant(n, connections), f"circulant n={n} c={conn}"
    raise UsageError(f"unknown family {family!r}; expected one of {FAMILIES}")


def _parse_n_range(text):
    """"a" or "a..b" (inclusive, ascending)."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            raise UsageError(f"bad range {text!r}: expected 'a..b'") from None
        if hi < lo:
            raise UsageError(f"bad range {text!r}: end below start")
        return tuple(range(lo, hi + 1))
    try:
        return (int(text),)
    except ValueError:
        raise UsageError(f"bad value {text!r}: expected an integer or 'a..b'") from None


def _parse_connections(text):
    try:
        return tuple(int(x) for x in text.split(",") if x)
    except ValueError:
        raise UsageError(f"bad connection set {text!r}: expected e.g. '1,2'") from None


def _thread_count():
    raw = os.environ.get("ORBITSPECTRA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _load_graph(config):
    if config.input_path is not None:
        try:
            with open(config.input_path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {config.input_path}: {exc}") from exc
        return parse_edge_list(text), config.input_path
    n = config.n_values[0]
    return build_family(config.family, n, config.k, config.connections)


def _report_lines(report):
    yield f"graph: {report.graph}"
    yield f"order: {report.order}"
    yield f"method: {report.method}"
    yield ("distance integral: yes" if report.integral else "NOT distance integral")
    yield "eigenvalues: " + " ".join(f"{v}^{m}" for v, m in report.spectrum.integer_part)
    if report.spectrum.residual is not None:
        yield f"residual: {report.spectrum.residual}"
    yield "distinct: " + " ".join(str(v) for v in report.distinct)


def _csv_rows(report, n):
    for v, m in report.spectrum.integer_part:
        yield [report.graph, n, v, m]


def _emit_csv(rows, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["graph", "n", "eigenvalue", "multiplicity"])
    for row in rows:
        writer.writerow(row)


def _parse_generator_list(text, degree):
    """Semicolon-separated cycle notations over 1-based vertex numbers."""
    perms = [parse_cycles(part, degree) for part in text.split(";") if part.strip()]
    if not perms:
        raise UsageError("empty generator list")
    return GeneratorSet.of(*perms)


def _spectrum_report(config, g, description, n):
    if config.method != "quotient-assisted":
        return is_distance_integral(g, config.method, description=description)
    if config.stabilizer_gens and config.transitive_gens:
        stab = _parse_generator_list(config.stabilizer_gens, g.vertex_count)
        trans = _parse_generator_list(config.transitive_gens, g.vertex_count)
        return is_distance_integral(
            g,
            "quotient-assisted",
            description=description,
            partition=orbits(stab),
            transitive_gens=trans,
        )
    if config.family == "lcr":
        return is_distance_integral(
            g,
            "quotient-assisted",
            description=description,
            partition=orbits(lcr_stabilizer_gens(n)),
            transitive_gens=lcr_automorphism_gens(n),
        )
    raise UsageError(
        "quotient-assisted spectra need --stabilizer-gens and --transitive-gens "
        "(cycle notation over 1-based vertex numbers); only --family lcr has "
        "them built in"
    )


def _single_n(config):
    if len(config.n_values) > 1:
        raise UsageError(
            f"{config.command} works on one graph; use scan for an n range"
        )
    return config.n_values[0] if config.n_values else None


def cmd_spectrum(config, out):
    single = _single_n(config)
    g, description = _load_graph(config)
    n = single if config.family else g.vertex_count
    report = _spectrum_report(config, g, description, n)
    if config.fmt == "json":
        out.write(json.dumps(report.to_json_dict(), indent=2) + "\n")
    elif config.fmt == "csv":
        _emit_csv(_csv_rows(report, n), out)
    else:
        for line in _report_lines(report):
            out.write(line + "\n")
    return 0


def cmd_scan(config, out):
    if config.family is None:
        raise UsageError("scan needs --family")
    reports = []
    workers = _thread_count()

    def one(n):
        start = time.monotonic()
        g, description = build_family(config.family, n, config.k, config.connections)
        report = is_distance_integral(g, config.method, description=description)
        return n, report, time.monotonic() - start

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(one, config.n_values))
    else:
        reports = [one(n) for n in config.n_values]

    for n, _, elapsed in reports:
        print(f"n={n}: {elapsed:.3f}s", file=sys.stderr)

    if config.fmt == "json":
        out.write(
            json.dumps([r.to_json_dict() for _, r, _ in reports], indent=2) + "\n"
        )
    elif config.fmt == "csv":
        rows = []
        for n, report, _ in reports:
            rows.extend(_csv_rows(report, n))
        _emit_csv(rows, out)
    else:
        for k, (n, report, _) in enumerate(reports):
            if k:
                out.write("\n")
            for line in _report_lines(report):
                out.write(line + "\n")
    return 0


def cmd_verify_lcr(config, out):
    failures = 0
    results = []
    for n in config.n_values:
        try:
            report = verify_lcr(n)
            results.append((n, report, None))
        except VerificationError as exc:
            failures += 1
            results.append((n, None, exc))
    if config.fmt == "json":
        payload = []
        for n, report, exc in results:
            if report is not None:
                payload.append(report.to_json_dict())
            else:
                payload.append(
                    {"graph": f"lcr n={n}", "verified": False,
                     "stage": exc.stage, "detail": exc.detail}
                )
        out.write(json.dumps(payload, indent=2) + "\n")
    elif config.fmt == "csv":
        rows = []
        for n, report, _ in results:
            if report is not None:
                rows.extend(_csv_rows(report, n))
        _emit_csv(rows, out)
    else:
        for n, report, exc in results:
            if report is not None:
                values = " ".join(str(v) for v in report.distinct)
                out.write(f"n={n}: PASS distinct eigenvalues {values}\n")
            else:
                out.write(f"n={n}: FAIL at stage '{exc.stage}': {exc.detail}\n")
    return 1 if failures else 0


def cmd_quotient(config, out):
    n = _single_n(config)
    if n is None or n < 4:
        raise UsageError("quotient needs --n with a single integer >= 4")
    g = build_lcr(n)
    d = all_pairs_distances(g)
    pi = orbits(lcr_stabilizer_gens(n))
    index = {p: k for k, p in enumerate(pair_vertices(n))}
    pi = pi.reorder_by_representatives(
        [index[p] for p in STABILIZER_CELL_REPS]
    )
    q = quotient_matrix(d, pi)
    closed = lcr_quotient_closed_form(n)
    match = q.matrix == closed
    if config.fmt == "json":
        payload = {
            "graph": f"lcr n={n}",
            "cells": [
                {"representative": g.label(cell[0]), "size": len(cell)}
                for cell in pi.cells
            ],
            "computed": q.matrix.to_decimal_rows(),
            "closed_form": closed.to_decimal_rows(),
            "match": match,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    elif config.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["row", "col", "entry"])
        for i, row in enumerate(q.matrix.entries):
            for j, x in enumerate(row):
                writer.writerow([i, j, x])
    else:
        out.write(f"quotient matrix of lcr n={n} over the stabilizer orbits\n")
        for cell in pi.cells:
            out.write(f"cell rep {g.label(cell[0])} size {len(cell)}\n")
        width = max(len(str(x)) for row in q.matrix.entries for x in row)
        for row in q.matrix.entries:
            out.write(" ".join(str(x).rjust(width) for x in row) + "\n")
        out.write(f"matches closed form: {'yes' if match else 'NO'}\n")
    return 0 if match else 1


def cmd_distances(config, out):
    _single_n(config)
    g, description = _load_graph(config)
    d = all_pairs_distances(g)
    if config.fmt == "json":
        payload = {
            "graph": description,
            "order": d.order,
            "labels": list(g.vertex_labels),
            "rows": [list(r) for r in d.rows],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    elif config.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["u", "v", "distance"])
        for u in range(d.order):
            for v in range(d.order):
                writer.writerow([u, v, d.rows[u][v]])
    else:
        out.write(f"graph: {description}\n")
        width = max(len(str(x)) for r in d.rows for x in r)
        label_w = max(len(x) for x in g.vertex_labels)
        for u in range(d.order):
            cells = " ".join(str(x).rjust(width) for x in d.rows[u])
            out.write(f"{g.label(u).rjust(label_w)} | {cells}\n")
    return 0


def cmd_check_dr(config, out):
    _single_n(config)
    if config.fmt == "csv":
        raise UsageError("check-dr reports as text or json")
    g, description = _load_graph(config)
    result = is_distance_regular(g)
    if config.fmt == "json":
        payload = {"graph": description, "distance_regular": result.is_distance_regular}
        if result.is_distance_regular:
            b_arr, c_arr = result.intersection_array
            payload["intersection_array"] = {"b": list(b_arr), "c": list(c_arr)}
        else:
            dist, pair_a, counts_a, pair_b, counts_b = result.witness
            payload["witness"] = {
                "distance": dist,
                "pair_a": [g.label(pair_a[0]), g.label(pair_a[1])],
                "counts_a": list(counts_a),
                "pair_b": [g.label(pair_b[0]), g.label(pair_b[1])],
                "counts_b": list(counts_b),
            }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(f"graph: {description}\n")
        if result.is_distance_regular:
            b_arr, c_arr = result.intersection_array
            b_text = ",".join(str(x) for x in b_arr)
            c_text = ",".join(str(x) for x in c_arr)
            out.write(f"distance-regular: yes  intersection array {{{b_text}; {c_text}}}\n")
        else:
            dist, pair_a, counts_a, pair_b, counts_b = result.witness
            out.write("distance-regular: no\n")
            out.write(
                f"witness: at distance {dist}, pair "
                f"({g.label(pair_a[0])},{g.label(pair_a[1])}) has (c,a,b)={counts_a} "
                f"but ({g.label(pair_b[0])},{g.label(pair_b[1])}) has {counts_b}\n"
            )
    return 0


def _add_source_args(p, need_method=True):
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", help="family parameter, an integer or a range 'a..b'")
    p.add_argument("--k", type=int, help="second parameter (johnson families)")
    p.add_argument("--connections", help="circulant connection set, e.g. '1,2'")
    p.add_argument("--input", help="edge-list file as an alternative to --family")
    if need_method:
        p.add_argument(
            "--method",
            choices=METHODS,
            default="rank-sweep",
        )
        p.add_argument(
            "--stabilizer-gens",
            help="generators of an automorphism subgroup whose orbit partition "
                 "has a singleton cell, as cycles over 1-based vertex numbers, "
                 "e.g. '(2 6)(3 5)'; ';'-separated",
        )
        p.add_argument(
            "--transitive-gens",
            help="automorphism generators witnessing vertex-transitivity, "
                 "same notation as --stabilizer-gens",
        )
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", help="write the report here instead of stdout")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="orbitspectra",
        description="Exact distance spectra of graphs via orbit-partition quotients",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    _add_source_args(sub.add_parser("spectrum", help="distance spectrum of one graph"))
    _add_source_args(sub.add_parser("scan", help="spectra over a range of n"))

    p_verify = sub.add_parser("verify-lcr", help="certify the crown line graph theorem")
    p_verify.add_argument("--n", required=True, help="an integer or a range 'a..b'")
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_verify.add_argument("--output")

    p_quot = sub.add_parser("quotient", help="orbit quotient matrix of the crown line graph")
    p_quot.add_argument("--n", required=True, help="an integer >= 4")
    p_quot.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_quot.add_argument("--output")

    _add_source_args(sub.add_parser("distances", help="exact distance matrix"), need_method=False)
    _add_source_args(sub.add_parser("check-dr", help="distance-regularity test"), need_method=False)
    return parser


def _config_from_args(args):
    n_values = _parse_n_range(args.n) if getattr(args, "n", None) else ()
    family = getattr(args, "family", None)
    input_path = getattr(args, "input", None)
    if args.command in ("verify-lcr", "quotient"):
        family, input_path = "lcr", None
    elif family is not None and not n_values:
        raise UsageError("--family needs --n")
    connections = (
        _parse_connections(args.connections)
        if getattr(args, "connections", None)
        else ()
    )
    return RunConfig(
        command=args.command,
        family=family,
        input_path=input_path,
        n_values=n_values,
        k=getattr(args, "k", None),
        connections=connections,
        method=getattr(args, "method", "rank-sweep"),
        fmt=args.format,
        output=args.output,
        stabilizer_gens=getattr(args, "stabilizer_gens", None),
        transitive_gens=getattr(args, "transitive_gens", None),
    )


_HANDLERS = {
    "spectrum": cmd_spectrum,
    "scan": cmd_scan,
    "verify-lcr": cmd_verify_lcr,
    "quotient": cmd_quotient,
    "distances": cmd_distances,
    "check-dr": cmd_check_dr,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        buffer = io.StringIO()
        status = _HANDLERS[args.command](config, buffer)
        if config.output:
            with open(config.output, "w", encoding="utf-8") as fh:
                fh.write(buffer.getvalue())
        else:
            sys.stdout.write(buffer.getvalue())
        return status
    except (UsageError, EdgeListError, ValueError, OSError) as exc:
        if isinstance(exc, VerificationError):
            print(f"REFUTED: {exc}", file=sys.stderr)
            return 1
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
