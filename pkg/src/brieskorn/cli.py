"""Command-line front end.

Subcommands: bci, graph, cycles, pg, pgmax, series, semigroup, case2334,
table.  Output is deterministic: identical invocations produce byte-identical
output.  Failures print a JSON envelope {"error": {...}} to stderr and exit
with 2 (bad input), 3 (model inconsistency) or 4 (internal invariant breach).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import gcd

from . import bci as _bci
from .cycles import arithmetic_genus, cycle_report, fundamental_cycle
from .errors import InputError, InternalInvariantError, ModelInconsistencyError
from .graph import canonical_cycle, is_numerically_gorenstein, seifert_of_graph
from .numerics import NumericalSemigroup, pg_from_series
from .pdmodel import (BciModel, case_study_2334, max_type_2334,
                      multiplicity_bound, mz_criterion_weighted, pg_max,
                      pinkham_pg, table1_rows)
from .pdmodel import TABLE2_VECTORS

SCHEMA_VERSION = 1

# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so errors share one envelope."""

    def error(self, message):
        raise InputError(message)


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _exact(v):
    """JSON encoding of an exact value; fractions become 'p/q' strings."""
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)
    return v


def _text_lines(report, keys):
    out = []
    for k in keys:
        v = report[k]
        if isinstance(v, (dict, list)):
            v = _dumps(v)
        out.append("%s: %s" % (k, v))
    return "\n".join(out) + "\n"


def _parse_exponents(values):
    try:
        return tuple(int(v) for v in values)
    except (TypeError, ValueError):
        raise InputError("exponents must be integers, got %r" % (values,))


def _batch_tuples(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError("cannot read batch file %s: %s" % (path, exc))
    items = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.replace(",", " ").split()
        try:
            items.append((lineno, tuple(int(p) for p in parts)))
        except ValueError:
            raise InputError("batch line %d is not an exponent tuple: %r"
                             % (lineno, stripped))
    if not items:
        raise InputError("batch file %s has no exponent tuples" % path)
    return items


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


def bci_report(exponents, order=None):
    """Full invariant report for one Brieskorn complete intersection."""
    data = _bci.bci_data(exponents)
    graph = _bci.bci_graph(data)
    model = BciModel(data)
    series = _bci.hilbert_series(data)

    pg = pinkham_pg(model)
    pg_series = pg_from_series(series)
    if pg != pg_series:
        raise InternalInvariantError(
            "cohomology route gives pg = %d, series route %d" % (pg, pg_series))

    z = fundamental_cycle(graph)
    mx = _bci.maximal_ideal_cycle(data, graph)
    zk = canonical_cycle(graph)
    mz = mz_criterion_weighted(model)
    bound = multiplicity_bound(graph, mx)
    a_inv = _bci.a_invariant(data)
    weights = _bci.weight_semigroup(data)
    if order is None:
        order = min(2 * data.ell, 64)

    report = data.to_json_dict()
    report.update({
        "schema_version": SCHEMA_VERSION,
        "seifert": {"g": data.g, "c0": data.c0,
                    "arms": [list(p) for p in _bci.bci_seifert(data).arms]},
        "graph": graph.to_json_dict(),
        "deg_divisor": _exact(data.deg_divisor()),
        "fundamental_cycle": z.coeff_map(),
        "maximal_ideal_cycle": mx.coeff_map(),
        "canonical_cycle": zk.coeff_map(),
        "numerically_gorenstein": is_numerically_gorenstein(graph),
        "pa_fundamental_cycle": arithmetic_genus(graph, z),
        "minus_z_squared": -graph.pairing(z, z),
        "minus_m_squared": bound.minus_square,
        "multiplicity_lower_bound": bound.lower_bound,
        "pg": pg,
        "a_invariant": a_inv,
        "a_invariant_in_weights": weights.contains(a_inv),
        "gorenstein": True,
        "m_equals_z": mz.verdict,
        "e_m": mz.e_m,
        "alpha": data.alpha,
        "h0_alpha_nonzero": mz.h0_alpha_nonzero,
        "z0": mz.z0,
        "m0": mz.m0,
        "embedding_dimension": data.m,
        "weight_semigroup_generators": weights.minimal_generators(),
        "series_numerator": list(series.numerator.coeffs),
        "series_denominator_factors": list(series.denominator_factors),
        "series": series.format(),
        "hilbert_coefficients": series.expand(order),
    })
    return report


_BCI_TEXT_KEYS = (
    "exponents", "ell", "e", "alpha_i", "alpha", "ghat", "ghat_i", "beta_i",
    "g", "c0", "deg_divisor", "seifert", "fundamental_cycle",
    "maximal_ideal_cycle", "canonical_cycle", "numerically_gorenstein",
    "pa_fundamental_cycle", "minus_z_squared", "minus_m_squared",
    "multiplicity_lower_bound", "pg", "a_invariant", "m_equals_z", "e_m",
    "z0", "m0", "embedding_dimension", "weight_semigroup_generators",
    "series",
)


def graph_report(exponents):
    data = _bci.bci_data(exponents)
    graph = _bci.bci_graph(data)
    seifert = seifert_of_graph(graph)
    return {
        "schema_version": SCHEMA_VERSION,
        "exponents": list(data.exponents),
        "graph": graph.to_json_dict(),
        "seifert": {"g": seifert.g, "c0": seifert.c0,
                    "arms": [list(p) for p in seifert.arms]},
        "negative_definite": True,  # construction would have failed otherwise
        "numerically_gorenstein": is_numerically_gorenstein(graph),
    }, graph


def cycles_report(exponents, order=None):
    data = _bci.bci_data(exponents)
    graph = _bci.bci_graph(data)
    z = fundamental_cycle(graph)
    mx = _bci.maximal_ideal_cycle(data, graph)
    report = {
        "schema_version": SCHEMA_VERSION,
        "exponents": list(data.exponents),
        "fundamental_cycle": cycle_report(graph, z).to_json_dict(),
        "maximal_ideal_cycle": cycle_report(graph, mx).to_json_dict(),
        "canonical_cycle": canonical_cycle(graph).coeff_map(),
        "numerically_gorenstein": is_numerically_gorenstein(graph),
    }
    if order is not None:
        from .cycles import deg_on_central, minimal_cycle
        ladder = {}
        for n in range(1, order + 1):
            ln = minimal_cycle(graph, n)
            ladder[str(n)] = {"cycle": ln.coeff_map(),
                              "deg_on_central": deg_on_central(graph, ln)}
        report["minimal_cycles"] = ladder
    return report


def pg_report(exponents):
    data = _bci.bci_data(exponents)
    pg = pinkham_pg(BciModel(data))
    pg_series = pg_from_series(_bci.hilbert_series(data))
    if pg != pg_series:
        raise InternalInvariantError(
            "cohomology route gives pg = %d, series route %d" % (pg, pg_series))
    return {"schema_version": SCHEMA_VERSION, "exponents": list(data.exponents),
            "pg": pg}


def pgmax_report(exponents):
    data = _bci.bci_data(exponents)
    result = pg_max(_bci.bci_graph(data))
    report = {"schema_version": SCHEMA_VERSION, "exponents": list(data.exponents)}
    report.update(result.to_json_dict())
    return report


def series_report(exponents, order=None):
    data = _bci.bci_data(exponents)
    series = _bci.hilbert_series(data)
    if order is None:
        order = min(2 * data.ell, 64)
    return {
        "schema_version": SCHEMA_VERSION,
        "exponents": list(data.exponents),
        "numerator": list(series.numerator.coeffs),
        "denominator_factors": list(series.denominator_factors),
        "series": series.format(),
        "order": order,
        "coefficients": series.expand(order),
    }


def semigroup_report(generators, member=None):
    sg = NumericalSemigroup(generators)
    report = {
        "schema_version": SCHEMA_VERSION,
        "generators": list(sg.generators),
        "minimal_generators": sg.minimal_generators(),
    }
    g = 0
    for x in sg.generators:
        g = gcd(g, x)
    report["gcd"] = g
    report["frobenius"] = sg.frobenius() if g == 1 else None
    if member is not None:
        report["member"] = {"n": member, "contained": sg.contains(member)}
    return report


def case_report(overrides):
    report = case_study_2334(*overrides).to_json_dict()
    report["schema_version"] = SCHEMA_VERSION
    return report


def table_report():
    return {
        "schema_version": SCHEMA_VERSION,
        "table1": table1_rows(),
        "table2": [case_study_2334(*v).to_json_dict() for v in TABLE2_VECTORS],
        "max_type": max_type_2334().to_json_dict(),
    }


def _table1_tsv():
    lines = ["type\tpg\tmult\temb"]
    for row in table1_rows():
        lines.append("%s\t%d\t%d\t%d" % (row["type"], row["pg"], row["mult"],
                                         row["emb"]))
    return lines


def _table2_tsv():
    lines = ["h3\th4\th5\th7\tpg\tmult\temb\tgorenstein\tgenerator_degrees"
             "\tvalue_semigroup"]
    for vec in TABLE2_VECTORS:
        row = case_study_2334(*vec)
        lines.append("\t".join([
            "%d\t%d\t%d\t%d" % vec,
            str(row.pg), str(row.multiplicity), str(row.embedding_dimension),
            "yes" if row.gorenstein else "no",
            ",".join(str(d) for d in row.generator_degrees),
            "<%s>" % ",".join(str(d) for d in row.value_semigroup_generators),
        ]))
    return lines


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _build_parser():
    parser = _Parser(prog="brieskorn",
                     description="Exact invariants of Brieskorn complete "
                                 "intersection surface singularities.")
    sub = parser.add_subparsers(dest="subcommand", metavar="subcommand")

    def add(name, help_text, exponents=True, formats=("json", "text")):
        p = sub.add_parser(name, help=help_text)
        if exponents:
            p.add_argument("exponents", nargs="*", metavar="a_i",
                           help="exponent tuple, e.g. 2 3 3 4")
            p.add_argument("--batch", metavar="FILE",
                           help="newline-delimited exponent tuples")
        p.add_argument("--format", choices=formats, default=None,
                       help="output format (default: %s)" % formats[0])
        return p

    add("bci", "full invariant report for an exponent tuple")
    p = add("graph", "resolution graph of an exponent tuple",
            formats=("json", "text", "dot"))
    p = add("cycles", "fundamental, maximal ideal and canonical cycles")
    p.add_argument("--order", type=int, default=None, metavar="N",
                   help="also list the minimal cycles L_1..L_N")
    add("pg", "geometric genus (two independent routes)",
        formats=("text", "json"))
    add("pgmax", "maximal geometric genus over the graph",
        formats=("text", "json"))
    p = add("series", "Hilbert series of the graded coordinate ring")
    p.add_argument("--order", type=int, default=None, metavar="N",
                   help="expansion order (default min(2*ell, 64))")

    p = sub.add_parser("semigroup", help="numerical semigroup of the given "
                                         "generators")
    p.add_argument("generators", nargs="+", metavar="g_i")
    p.add_argument("--member", type=int, default=None, metavar="N",
                   help="test membership of N")
    p.add_argument("--format", choices=("text", "json"), default=None)

    p = sub.add_parser("case2334", help="classify an analytic structure on "
                                        "the (2,3,3,4) graph")
    p.add_argument("--overrides", required=True, metavar="h3,h4,h5,h7",
                   help="section counts at degrees 3,4,5,7")
    p.add_argument("--format", choices=("json", "text"), default=None)

    p = sub.add_parser("table", help="summary tables for the (2,3,3,4) graph")
    p.add_argument("which", nargs="?", choices=("1", "2", "all"), default="all")
    p.add_argument("--format", choices=("tsv", "json"), default=None)
    return parser


def _need_exponents(args):
    if getattr(args, "batch", None):
        if args.exponents:
            raise InputError("give either positional exponents or --batch, not both")
        return None
    if not args.exponents:
        raise InputError("an exponent tuple is required (or --batch FILE)")
    return _parse_exponents(args.exponents)


def _render(args, report, text_fn, default="json"):
    fmt = args.format or default
    if fmt == "json":
        return _dumps(report) + "\n"
    return text_fn(report)


def _run_single(args):
    sub = args.subcommand
    if sub == "bci":
        report = bci_report(_need_exponents(args))
        return _render(args, report,
                       lambda r: _text_lines(r, _BCI_TEXT_KEYS))
    if sub == "graph":
        report, graph = graph_report(_need_exponents(args))
        if (args.format or "json") == "dot":
            return graph.to_dot() + "\n"
        return _render(args, report,
                       lambda r: _text_lines(r, ("exponents", "graph", "seifert",
                                                 "negative_definite",
                                                 "numerically_gorenstein")))
    if sub == "cycles":
        report = cycles_report(_need_exponents(args), order=args.order)
        keys = [k for k in ("exponents", "fundamental_cycle",
                            "maximal_ideal_cycle", "canonical_cycle",
                            "numerically_gorenstein", "minimal_cycles")
                if k in report]
        return _render(args, report, lambda r: _text_lines(r, keys))
    if sub == "pg":
        report = pg_report(_need_exponents(args))
        return _render(args, report, lambda r: "%d\n" % r["pg"], default="text")
    if sub == "pgmax":
        report = pgmax_report(_need_exponents(args))
        return _render(args, report, lambda r: "%d\n" % r["value"], default="text")
    if sub == "series":
        if args.order is not None and args.order < 0:
            raise InputError("--order must be >= 0")
        report = series_report(_need_exponents(args), order=args.order)
        return _render(args, report,
                       lambda r: "%s\ncoefficients: %s\n"
                                 % (r["series"], " ".join(map(str, r["coefficients"]))))
    if sub == "semigroup":
        gens = _parse_exponents(args.generators)
        report = semigroup_report(gens, member=args.member)
        if (args.format or "text") == "json":
            return _dumps(report) + "\n"
        if args.member is not None:
            return ("true" if report["member"]["contained"] else "false") + "\n"
        frob = report["frobenius"]
        return ("minimal_generators: %s\ngcd: %d\nfrobenius: %s\n"
                % (",".join(map(str, report["minimal_generators"])),
                   report["gcd"], "-" if frob is None else str(frob)))
    if sub == "case2334":
        parts = args.overrides.replace(",", " ").split()
        if len(parts) != 4:
            raise InputError("--overrides needs exactly four values h3,h4,h5,h7")
        overrides = _parse_exponents(parts)
        report = case_report(overrides)
        keys = ("overrides", "pg", "multiplicity", "embedding_dimension",
                "gorenstein", "generator_degrees", "value_semigroup_generators",
                "series", "z0", "m0", "hypotheses")
        return _render(args, report, lambda r: _text_lines(r, keys))
    if sub == "table":
        fmt = args.format or "tsv"
        if fmt == "json":
            report = table_report()
            if args.which == "1":
                report.pop("table2")
            elif args.which == "2":
                report.pop("table1")
            return _dumps(report) + "\n"
        blocks = []
        if args.which in ("1", "all"):
            blocks.append("\n".join(_table1_tsv()))
        if args.which in ("2", "all"):
            blocks.append("\n".join(_table2_tsv()))
        return "\n\n".join(blocks) + "\n"
    raise InputError("missing subcommand; see --help")


def _run_batch(args):
    if getattr(args, "exponents", None):
        raise InputError("give either positional exponents or --batch, not both")
    sub = args.subcommand
    fmt = args.format or "json"
    if fmt not in ("json", "text"):
        raise InputError("batch mode supports --format json or text")
    builders = {
        "bci": lambda t: bci_report(t),
        "graph": lambda t: graph_report(t)[0],
        "cycles": lambda t: cycles_report(t, order=getattr(args, "order", None)),
        "pg": lambda t: pg_report(t),
        "pgmax": lambda t: pgmax_report(t),
        "series": lambda t: series_report(t, order=getattr(args, "order", None)),
    }
    build = builders[sub]
    scalar = {"pg": "pg", "pgmax": "value"}
    lines = []
    for lineno, tup in _batch_tuples(args.batch):
        try:
            report = build(tup)
        except (InputError, ModelInconsistencyError) as exc:
            raise type(exc)("batch line %d (%s): %s"
                            % (lineno, ",".join(map(str, tup)), exc))
        if fmt == "json":
            lines.append(_dumps(report))
        elif sub in scalar:
            lines.append("%s\t%d" % (",".join(map(str, tup)),
                                     report[scalar[sub]]))
        else:
            raise InputError("batch --format text is only available for "
                             "pg and pgmax; use json")
    return "\n".join(lines) + "\n"


def run(argv=None):
    """Parse argv and write the result to stdout; returns the exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "batch", None):
        out = _run_batch(args)
    else:
        out = _run_single(args)
    sys.stdout.write(out)
    return 0


def main(argv=None):
    try:
        return run(argv)
    except InputError as exc:
        return _fail(2, "input", exc)
    except ModelInconsistencyError as exc:
        return _fail(3, "model", exc)
    except InternalInvariantError as exc:
        return _fail(4, "internal", exc)
    except BrokenPipeError:
        return 0


def _fail(code, kind, exc):
    envelope = {"error": {"code": code, "kind": kind, "message": str(exc)}}
    sys.stderr.write(_dumps(envelope) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
