"""Command-line front end.

Exit codes: 0 success, 1 definite negative (verification failed,
inconsistent prefix), 2 usage error, 3 not enough data to decide
(series too short, nothing found at the given bounds).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import analytic, dichotomy, mahler, regular, structure
from .algebra import RationalFn, TruncatedSeries
from .algebra.poly import format_poly
from .dsl import format_equation, parse_equation
from .errors import (
    AmbiguousPrefix,
    EquationSyntaxError,
    InconsistentPrefix,
    InconsistentRadix,
    InsufficientData,
    MahlerError,
    MissingEndpointTerm,
    NotAutomatic,
)
from .serialize import (
    SERIES_SCHEMA,
    fraction_str,
    parse_fraction,
    poly_to_list,
    read_series,
    series_to_document,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INSUFFICIENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Outcome:
    """Payload plus exit code; ``text``/``csv``/``dot`` renderers are optional."""

    def __init__(self, payload: Any, code: int = EXIT_OK, text: str | None = None,
                 csv_text: str | None = None, dot: str | None = None):
        self.payload = payload
        self.code = code
        self.text = text
        self.csv_text = csv_text
        self.dot = dot


# -- input helpers ---------------------------------------------------------


def _equation(args) -> mahler.MahlerEquation:
    if args.eq_file:
        text = Path(args.eq_file).read_text(encoding="utf-8").strip()
    elif args.eq:
        text = args.eq
    else:
        raise UsageError("an equation is required (--eq or --eq-file)")
    return parse_equation(text, k=args.k)


def _has_equation(args) -> bool:
    return bool(args.eq or args.eq_file)


def _prefix(args) -> list[Fraction] | None:
    if args.prefix is None:
        return None
    try:
        return [parse_fraction(x) for x in args.prefix.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --prefix: {exc}") from exc


def _require_order(args) -> int:
    if args.order is None:
        raise UsageError("--order is required")
    if args.order < 1:
        raise UsageError("--order must be positive")
    return args.order


def _series(args, eq: mahler.MahlerEquation | None = None) -> tuple[TruncatedSeries, int | None]:
    """Series from --series, or the solution of the equation selected by --prefix."""
    if args.series:
        f, k = read_series(args.series) if args.series != "-" else _read_stdin_series()
        if args.order is not None and args.order < f.order:
            f = f.truncate(args.order)
        return f, args.k or k
    if eq is None:
        if not _has_equation(args):
            raise UsageError("a series is required (--series, or --eq with --order)")
        eq = _equation(args)
    order = _require_order(args)
    prefix = _prefix(args)
    if prefix is not None:
        return mahler.expand(eq, prefix, order), eq.k
    f = mahler.principal_solution(eq, order)
    if f is None:
        f = TruncatedSeries.zero(order)
    return f, eq.k


def _read_stdin_series():
    from .serialize import loads_series
    return loads_series(sys.stdin.read())


def _sequence(args) -> regular.SequencePrefix:
    eq = _equation(args) if (_has_equation(args) and not args.series) else None
    f, k = _series(args, eq)
    return regular.SequencePrefix(f.coeffs, args.k or k or 2)


def _bounds(args) -> dichotomy.Bounds:
    return dichotomy.Bounds(args.deg_bound, args.ode_order, args.ode_deg)


def _ratfn_doc(r: RationalFn) -> dict[str, Any]:
    return {"num": poly_to_list(r.num), "den": poly_to_list(r.den), "text": str(r)}


def _equation_doc(eq: mahler.MahlerEquation) -> dict[str, Any]:
    return {"text": format_equation(eq), "k": eq.k, "d": eq.d, "coeffs": [poly_to_list(p) for p in eq.a]}


def _ode_doc(ode: dichotomy.OdeCandidate) -> dict[str, Any]:
    return {"order": ode.order, "coeffs": [poly_to_list(p) for p in ode.coeffs],
            "verified_order": ode.verified_order}


def _profile_csv(rows: list[analytic.ProfileRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["theta", "r", "abs_value", "tail_bound", "flagged"])
    for row in rows:
        w.writerow([repr(row.theta), repr(row.r), repr(row.abs_value), repr(row.tail_bound),
                    "true" if row.flagged else "false"])
    return buf.getvalue()


def _profile_rows_doc(rows):
    return [{"theta": r.theta, "r": r.r, "abs_value": r.abs_value, "tail_bound": r.tail_bound,
             "flagged": r.flagged} for r in rows]


def _orbit_doc(orbit) -> dict[str, Any]:
    if isinstance(orbit, analytic.SingularOrbit):
        return {"k": orbit.k, "d": orbit.d, "angles": list(orbit.angles), "j_choices": list(orbit.j_choices)}
    return {"k": orbit.k, "d": orbit.d, "truncated": orbit.truncated,
            "levels": [[{"angle": n.angle, "parent": n.parent, "j": n.j} for n in level]
                       for level in orbit.levels]}


# -- subcommands -----------------------------------------------------------


def cmd_expand(args) -> Outcome:
    eq = _equation(args)
    order = _require_order(args)
    prefix = _prefix(args)
    if prefix is None:
        raise UsageError("--prefix is required")
    f = mahler.expand(eq, prefix, order)
    doc = series_to_document(f, eq.k)
    return Outcome(doc, text=" ".join(doc["coeffs"]))


def cmd_space(args) -> Outcome:
    eq = _equation(args)
    order = _require_order(args)
    basis = mahler.solution_space(eq, order)
    doc = {"equation": format_equation(eq), "order": order, "dimension": len(basis),
           "basis": [series_to_document(f, eq.k) for f in basis]}
    lines = [f"dimension {len(basis)}"] + [" ".join(b["coeffs"]) for b in doc["basis"]]
    return Outcome(doc, text="\n".join(lines))


def cmd_verify(args) -> Outcome:
    eq = _equation(args)
    if not args.series:
        raise UsageError("--series is required")
    f, _ = _series(args, eq)
    res = mahler.verify(eq, f)
    doc = {"ok": res.ok, "first_failure": res.first_failure, "order": f.order}
    text = "pass" if res.ok else f"fail at index {res.first_failure}"
    return Outcome(doc, EXIT_OK if res.ok else EXIT_NEGATIVE, text=text)


def cmd_guess_eq(args) -> Outcome:
    f, k = _series(args)
    k = args.k or k or 2
    found = mahler.guess_equation(f, k, args.max_order, args.deg_bound)
    if found is None:
        doc = {"found": False, "equation": None}
        return Outcome(doc, EXIT_INSUFFICIENT, text="no equation at these bounds")
    return Outcome({"found": True, "equation": _equation_doc(found)}, text=format_equation(found))


def cmd_minimize(args) -> Outcome:
    eq = _equation(args)
    order = _require_order(args)
    result = mahler.minimize(eq, order)
    doc = {"input_d": eq.d, "equation": _equation_doc(result)}
    return Outcome(doc, text=format_equation(result))


def cmd_rationalize(args) -> Outcome:
    eq = _equation(args)
    f, _ = _series(args, eq)
    cert = dichotomy.rational_reconstruct(eq, f, args.deg_bound)
    if cert is None:
        return Outcome({"found": False, "deg_bound": args.deg_bound}, EXIT_INSUFFICIENT,
                       text=f"no rational solution with degree <= {args.deg_bound}")
    doc = {"found": True, "deg_bound": args.deg_bound, "candidate": _ratfn_doc(cert.candidate),
           "identity_degree": cert.identity_degree}
    return Outcome(doc, text=f"rational: {cert.candidate} (identity checked to degree {cert.identity_degree})")


def cmd_dfinite(args) -> Outcome:
    f, _ = _series(args)
    ode = dichotomy.dfinite_guess(f, args.ode_order, args.ode_deg)
    if ode is None:
        return Outcome({"found": False}, EXIT_INSUFFICIENT, text="no ODE at these bounds")
    terms = " + ".join(f"({format_poly(p)})*f^({i})" for i, p in enumerate(ode.coeffs))
    return Outcome({"found": True, "ode": _ode_doc(ode)}, text=f"{terms} = 0")


def _classification_doc(c: dichotomy.Classification) -> dict[str, Any]:
    if isinstance(c, dichotomy.Rational):
        return {"verdict": "rational", "certificate": {
            "candidate": _ratfn_doc(c.certificate.candidate),
            "identity_degree": c.certificate.identity_degree}}
    b = c.bounds
    bounds = {"rational_deg": b.rational_deg, "ode_order": b.ode_order, "ode_deg": b.ode_deg}
    if isinstance(c, dichotomy.DichotomyViolation):
        return {"verdict": "dichotomy-violation", "bounds": bounds, "ode": _ode_doc(c.ode),
                "details": c.details}
    return {"verdict": "no-rational-at-bounds", "bounds": bounds}


def cmd_classify(args) -> Outcome:
    eq = _equation(args)
    f, _ = _series(args, eq)
    c = dichotomy.classify(eq, f, _bounds(args))
    doc = _classification_doc(c)
    code = EXIT_OK if isinstance(c, dichotomy.Rational) else EXIT_INSUFFICIENT
    text = doc["verdict"]
    if isinstance(c, dichotomy.Rational):
        text += f": {c.certificate.candidate}"
    return Outcome(doc, code, text=text)


def cmd_kernel(args) -> Outcome:
    s = _sequence(args)
    elements = regular.kernel_elements(s, args.depth)
    closure = regular.is_automatic_prefix(s, args.depth)
    doc = {"k": s.k, "depth": args.depth, "count": len(elements),
           "closed": isinstance(closure, regular.Closed),
           "elements": [{"label": e.label, "level": e.level, "residue": e.residue,
                         "head": [fraction_str(x) for x in e.values[:8]]} for e in elements]}
    lines = [f"{len(elements)} distinct kernel elements"] + [
        f"{e['label']}: {' '.join(e['head'])} ..." for e in doc["elements"]]
    return Outcome(doc, text="\n".join(lines))


def cmd_rank(args) -> Outcome:
    s = _sequence(args)
    cmp_len = args.cmp_len or len(s) // s.k ** args.depth
    r = regular.regular_rank(s, args.depth, cmp_len)
    return Outcome({"k": s.k, "depth": args.depth, "cmp_len": cmp_len, "rank": r}, text=str(r))


def cmd_represent(args) -> Outcome:
    s = _sequence(args)
    cmp_len = args.cmp_len or len(s) // s.k ** args.depth
    rep = regular.linear_representation(s, args.depth, cmp_len)
    m = rep.rank
    mats = [[[fraction_str(a.entries[i * m + j]) for j in range(m)] for i in range(m)] for a in rep.matrices]
    doc = {"k": rep.k, "rank": m, "digit_order": "lsd", "matrices": mats,
           "u": [fraction_str(x) for x in rep.u], "v": [fraction_str(x) for x in rep.v],
           "basis": [f"l{l}r{r}" for l, r in rep.basis]}
    lines = [f"rank {m}"] + [f"A{d} = {mat}" for d, mat in enumerate(mats)] + [f"u = {doc['u']}", f"v = {doc['v']}"]
    return Outcome(doc, text="\n".join(lines))


def cmd_automaton(args) -> Outcome:
    s = _sequence(args)
    aut = regular.build_automaton(s, args.depth)
    doc = {"k": aut.k, "digit_order": "msd",
           "states": [{"label": aut.label(i), "output": fraction_str(aut.outputs[i])} for i in range(aut.size)],
           "transitions": [list(row) for row in aut.transitions]}
    return Outcome(doc, dot=regular.automaton_to_dot(aut))


def cmd_decompose(args) -> Outcome:
    eq = _equation(args)
    f, _ = _series(args, eq)
    dec = structure.decompose(eq, f)
    g = dec.gamma_data
    doc = {"rho": fraction_str(g.rho), "delta0": g.delta0, "gamma": poly_to_list(g.gamma),
           "product": series_to_document(dec.product, eq.k), "h": series_to_document(dec.h, eq.k),
           "rank_evidence": dec.h_rank_evidence, "rank_depth": dec.rank_depth}
    text = (f"rho = {doc['rho']}, delta0 = {g.delta0}, Gamma = {format_poly(g.gamma)}\n"
            f"H rank evidence {dec.h_rank_evidence} at depth {dec.rank_depth}")
    return Outcome(doc, text=text)


def cmd_radius(args) -> Outcome:
    eq = _equation(args)
    rb = mahler.convergence_radius_bound(eq)
    w = rb.witness_root
    doc = {"radius": rb.radius, "witness_root": None if w is None else [w.real, w.imag],
           "polynomial": poly_to_list(rb.polynomial), "description": rb.describe()}
    return Outcome(doc, text=rb.describe())


def cmd_orbit(args) -> Outcome:
    if _has_equation(args):
        eq = _equation(args)
        k, d = eq.k, eq.d
    else:
        k, d = args.k or 2, 1
    theta = args.theta if args.theta is not None else 2 * math.pi
    j = None if args.j is None or args.j < 0 else args.j
    orbit = analytic.singular_orbit(theta, k, d, args.steps, j=j)
    return Outcome(_orbit_doc(orbit))


def _radii(args) -> list[float]:
    if args.radii is None:
        return analytic.default_radii()
    try:
        return [float(x) for x in args.radii.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --radii: {exc}") from exc


def cmd_profile(args) -> Outcome:
    f, _ = _series(args)
    theta = args.theta if args.theta is not None else 0.0
    rows = analytic.radial_profile(f, theta, _radii(args))
    return Outcome({"rows": _profile_rows_doc(rows)}, csv_text=_profile_csv(rows))


def cmd_report(args) -> Outcome:
    eq = _equation(args)
    f, _ = _series(args, eq)
    bounds = _bounds(args) if f.order >= dichotomy.dfinite_order_needed(args.ode_order, args.ode_deg) else None
    rep = analytic.boundary_report(eq, f, args.grid_m, bounds=bounds, radii=_radii(args) if args.radii else None)
    doc = {"verdict": rep.verdict,
           "poles": [{"re": p.value.real, "im": p.value.imag,
                      "exact": None if p.exact is None else fraction_str(p.exact)} for p in rep.poles],
           "profiles": [_profile_rows_doc(rows) for rows in rep.profiles],
           "orbits": [_orbit_doc(o) for o in rep.orbits]}
    csv_text = "".join(_profile_csv(rows) if i == 0 else _profile_csv(rows).split("\n", 1)[1]
                       for i, rows in enumerate(rep.profiles)) if rep.profiles else None
    return Outcome(doc, csv_text=csv_text)


def cmd_thue_morse(args) -> Outcome:
    values = regular.thue_morse_prefix(args.count)
    return Outcome({"count": args.count, "values": values}, text=" ".join(str(v) for v in values))


COMMANDS: dict[str, tuple[Callable[[argparse.Namespace], Outcome], str, str]] = {
    "expand": (cmd_expand, "expand the solution with a given prefix", "json"),
    "space": (cmd_space, "basis of truncated solutions", "json"),
    "verify": (cmd_verify, "check a series against an equation", "json"),
    "guess-eq": (cmd_guess_eq, "guess a Mahler equation for a series", "json"),
    "minimize": (cmd_minimize, "search an equation of smaller order", "json"),
    "rationalize": (cmd_rationalize, "certify a rational solution", "json"),
    "dfinite": (cmd_dfinite, "guess a linear ODE for a series", "json"),
    "classify": (cmd_classify, "rational / no rational at bounds / diagnostic", "json"),
    "kernel": (cmd_kernel, "distinct k-kernel elements", "json"),
    "rank": (cmd_rank, "Q-rank of the k-kernel", "json"),
    "represent": (cmd_represent, "linear representation", "json"),
    "automaton": (cmd_automaton, "automaton in DOT format", "dot"),
    "decompose": (cmd_decompose, "structure decomposition F = H / prod Gamma(z^(k^j))", "json"),
    "radius": (cmd_radius, "lower bound on the radius of convergence", "json"),
    "orbit": (cmd_orbit, "predicted singularity orbit angles", "json"),
    "profile": (cmd_profile, "radial profile", "csv"),
    "report": (cmd_report, "boundary report", "json"),
    "thue-morse": (cmd_thue_morse, "Thue-Morse values", "text"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eq", help='equation text, e.g. "F(z) - (1-z)*F(z^2) = 0"')
    common.add_argument("--eq-file", help="file holding the equation text")
    common.add_argument("--series", help="SeriesDocument JSON file ('-' for stdin)")
    common.add_argument("--order", type=int, help="truncation order")
    common.add_argument("--prefix", help="comma-separated initial coefficients")
    common.add_argument("--k", type=int, help="radix (overrides inference)")
    common.add_argument("--deg-bound", type=int, default=4, help="polynomial degree bound")
    common.add_argument("--max-order", type=int, default=2, help="largest equation order for guess-eq")
    common.add_argument("--ode-order", type=int, default=2)
    common.add_argument("--ode-deg", type=int, default=4)
    common.add_argument("--depth", type=int, default=3, help="kernel depth")
    common.add_argument("--cmp-len", type=int, help="comparison length (default: prefix length / k^depth)")
    common.add_argument("--theta", type=float, help="angle in radians")
    common.add_argument("--radii", help="comma-separated radii")
    common.add_argument("--grid-m", type=int, default=3, help="angle grid 2*pi*p/k^m")
    common.add_argument("--steps", type=int, default=8, help="orbit steps")
    common.add_argument("--j", type=int, help="fixed orbit branch; omit for the tree of all branches")
    common.add_argument("--count", type=int, default=16)
    common.add_argument("--seed", type=int, help="accepted for scripting; no subcommand draws random numbers")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--format", choices=["json", "text", "csv", "dot"])

    parser = argparse.ArgumentParser(prog="mahlerkit", description="Exact tools for Mahler functional equations.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text, _) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def render(outcome: Outcome, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(outcome.payload, indent=2) + "\n"
    if fmt == "text":
        if outcome.text is not None:
            return outcome.text + "\n"
        return json.dumps(outcome.payload, indent=2) + "\n"
    if fmt == "csv":
        if outcome.csv_text is None:
            raise UsageError("csv output is not available for this command")
        return outcome.csv_text
    if outcome.dot is None:
        raise UsageError("dot output is only available for the automaton command")
    return outcome.dot


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    func, _, default_fmt = COMMANDS[args.command]
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("note: %(message)s"))
    logger = logging.getLogger("mahlerkit")
    logger.addHandler(handler)
    try:
        return _dispatch(func, args, default_fmt, stdout, stderr)
    finally:
        logger.removeHandler(handler)


def _dispatch(func, args, default_fmt, stdout, stderr) -> int:
    try:
        outcome = func(args)
        out = render(outcome, args.format or default_fmt)
    except (UsageError, EquationSyntaxError, InconsistentRadix, MissingEndpointTerm, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except InconsistentPrefix as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_NEGATIVE
    except (InsufficientData, NotAutomatic, AmbiguousPrefix) as exc:
        print(f"insufficient data: {exc}", file=stderr)
        return EXIT_INSUFFICIENT
    except MahlerError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        stdout.write(out)
    return outcome.code


def main() -> None:
    sys.exit(run())


OUTPUT_SCHEMAS: dict[str, dict[str, Any]] = {}


def _schemas() -> None:
    strs = {"type": "array", "items": {"type": "string"}}
    poly = strs
    equation = {"type": "object", "required": ["text", "k", "d", "coeffs"],
                "properties": {"text": {"type": "string"}, "k": {"type": "integer"},
                               "d": {"type": "integer"}, "coeffs": {"type": "array", "items": poly}}}
    ratfn = {"type": "object", "required": ["num", "den", "text"],
             "properties": {"num": poly, "den": poly, "text": {"type": "string"}}}
    ode = {"type": "object", "required": ["order", "coeffs", "verified_order"],
           "properties": {"order": {"type": "integer"}, "coeffs": {"type": "array", "items": poly},
                          "verified_order": {"type": "integer"}}}
    row = {"type": "object", "required": ["theta", "r", "abs_value", "tail_bound", "flagged"],
           "properties": {"theta": {"type": "number"}, "r": {"type": "number"},
                          "abs_value": {"type": "number"}, "tail_bound": {"type": "number"},
                          "flagged": {"type": "boolean"}}}
    node = {"type": "object", "required": ["angle", "parent", "j"],
            "properties": {"angle": {"type": "number"}, "parent": {"type": ["integer", "null"]},
                           "j": {"type": ["integer", "null"]}}}
    orbit = {"type": "object", "required": ["k", "d"],
             "properties": {"k": {"type": "integer"}, "d": {"type": "integer"},
                            "angles": {"type": "array", "items": {"type": "number"}},
                            "levels": {"type": "array", "items": {"type": "array", "items": node}}}}
    bounds = {"type": "object", "required": ["rational_deg", "ode_order", "ode_deg"]}

    def obj(required, **props):
        return {"type": "object", "required": list(required), "properties": props}

    OUTPUT_SCHEMAS.update({
        "expand": SERIES_SCHEMA,
        "space": obj(["equation", "order", "dimension", "basis"], equation={"type": "string"},
                     order={"type": "integer"}, dimension={"type": "integer"},
                     basis={"type": "array", "items": SERIES_SCHEMA}),
        "verify": obj(["ok", "first_failure", "order"], ok={"type": "boolean"},
                      first_failure={"type": ["integer", "null"]}, order={"type": "integer"}),
        "guess-eq": obj(["found", "equation"], found={"type": "boolean"},
                        equation={"oneOf": [equation, {"type": "null"}]}),
        "minimize": obj(["input_d", "equation"], input_d={"type": "integer"}, equation=equation),
        "rationalize": obj(["found", "deg_bound"], found={"type": "boolean"}, deg_bound={"type": "integer"},
                           candidate=ratfn, identity_degree={"type": "integer"}),
        "dfinite": obj(["found"], found={"type": "boolean"}, ode=ode),
        "classify": obj(["verdict"], verdict={"enum": ["rational", "no-rational-at-bounds", "dichotomy-violation"]},
                        bounds=bounds, ode=ode,
                        certificate=obj(["candidate", "identity_degree"], candidate=ratfn,
                                        identity_degree={"type": "integer"})),
        "kernel": obj(["k", "depth", "count", "closed", "elements"], k={"type": "integer"},
                      depth={"type": "integer"}, count={"type": "integer"}, closed={"type": "boolean"},
                      elements={"type": "array", "items": obj(["label", "level", "residue", "head"],
                                                              label={"type": "string"}, head=strs)}),
        "rank": obj(["k", "depth", "cmp_len", "rank"], rank={"type": "integer", "minimum": 0}),
        "represent": obj(["k", "rank", "digit_order", "matrices", "u", "v", "basis"],
                         matrices={"type": "array", "items": {"type": "array", "items": strs}}, u=strs, v=strs,
                         basis=strs),
        "automaton": obj(["k", "digit_order", "states", "transitions"],
                         states={"type": "array", "items": obj(["label", "output"])},
                         transitions={"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}),
        "decompose": obj(["rho", "delta0", "gamma", "product", "h", "rank_evidence", "rank_depth"],
                         rho={"type": "string"}, delta0={"type": "integer"}, gamma=poly,
                         product=SERIES_SCHEMA, h=SERIES_SCHEMA, rank_evidence={"type": "integer"}),
        "radius": obj(["radius", "witness_root", "polynomial", "description"],
                      radius={"type": "number", "exclusiveMinimum": 0, "maximum": 1},
                      witness_root={"oneOf": [{"type": "null"},
                                              {"type": "array", "items": {"type": "number"},
                                               "minItems": 2, "maxItems": 2}]}),
        "orbit": orbit,
        "profile": obj(["rows"], rows={"type": "array", "items": row}),
        "report": obj(["verdict", "poles", "profiles", "orbits"], verdict={"type": "string"},
                      poles={"type": "array", "items": obj(["re", "im", "exact"])},
                      profiles={"type": "array", "items": {"type": "array", "items": row}},
                      orbits={"type": "array", "items": orbit}),
        "thue-morse": obj(["count", "values"], count={"type": "integer"},
                          values={"type": "array", "items": {"enum": [1, -1]}}),
    })


_schemas()


if __name__ == "__main__":
    main()
