"""graphcurve command line: validate, embed, ideal, betti, secant, survey.

Exit status: 0 success, 1 computation failure (or golden mismatch),
2 invalid input, 3 certificate FAIL.  Errors are also written to stderr
as one JSON object.
"""

import argparse
import json
import sys
from pathlib import Path

from .golden import compare_betti, compare_certificate, compare_ideal
from .graph import GraphFormatError, generate_family, parse_graph, validate_assumptions
from .homology import ResolutionIncomplete, betti_diagram, default_limits, summarize
from .idealgen import certify_generation, curve_ring, generator_polynomials, intersection_ideal
from .labeling import LabelingError, ingest_labeling, label_edges, line_ideals
from .polyalg.field import field_for, DEFAULT_PRIME
from .polyalg.groebner import GroebnerAborted
from .polyalg.hilbert import hilbert_series
from .polyalg.poly import format_ideal_text
from .secant import secant_ideal
from .survey import run_survey

EXIT_OK, EXIT_COMPUTE, EXIT_INPUT, EXIT_CERT = 0, 1, 2, 3


class InputError(Exception):
    pass


class ComputeError(Exception):
    pass


def _emit(args, text, obj):
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load(args):
    if not args.graph:
        raise InputError("--graph is required")
    g = parse_graph(_read(args.graph))
    if getattr(args, "labeling", None):
        lab = ingest_labeling(g, _read(args.labeling), allow_assumption_violations=args.allow_violations)
    else:
        lab = label_edges(g, allow_assumption_violations=args.allow_violations)
    return g, lab


def _ring(args, lab):
    order = {"grevlex": "grevlex", "elim": "lex"}[args.order]
    return curve_ring(lab, field_for(args.field), order)


def _max_basis():
    return default_limits()["max_basis"]


def _golden(args, diff):
    """Print the comparison and turn a mismatch into exit status 1."""
    if diff is None:
        return EXIT_OK
    print(json.dumps({"golden": diff.to_json()}, sort_keys=True), file=sys.stderr)
    return EXIT_OK if diff.match else EXIT_COMPUTE


def _betti(I):
    if not I.ring.field.p:
        raise InputError("Betti numbers are computed over GF(p); pass --field with a prime")
    return betti_diagram(I, max_basis=_max_basis())


def _summary_json(I, B, k=None):
    hs = hilbert_series(I)
    S = summarize(B, I.ring.nvars, hs.projective_dim, k=k)
    out = {"betti": B.to_json(), "regularity": B.regularity, "pd": B.projective_dimension,
           "acm": S.is_acm, "codim": S.codimension, "ideal_regularity": S.ideal_regularity,
           "degree": hs.degree, "dim": hs.projective_dim}
    if k is not None:
        out["nkp"] = S.to_json()["nkp"]
    return out


# ---------------------------------------------------------------------------

def cmd_validate(args):
    g = parse_graph(_read(args.graph))
    rep = validate_assumptions(g)
    _emit(args, json.dumps(rep.to_json(), indent=2, sort_keys=True), rep.to_json())
    if not rep.ok and not args.allow_violations:
        return EXIT_INPUT
    return EXIT_OK


def cmd_embed(args):
    g, lab = _load(args)
    lines = {str(v): li.to_text() for v, li in enumerate(line_ideals(lab))}
    obj = {"labeling": lab.to_json(), "ambient_dim": lab.ambient_dim, "line_ideals": lines}
    text = [f"# P^{lab.ambient_dim}, {lab.nvars} variables"]
    for e, l_ in lab.labels.items():
        text.append(f"edge {'loop ' + str(e[0]) if e[0] == e[1] else f'{e[0]}-{e[1]}'}: {l_}")
    for v, s in lines.items():
        text.append(f"L{v}: {s}")
    _emit(args, "\n".join(text), obj)
    return EXIT_OK


def cmd_ideal(args):
    g, lab = _load(args)
    ring = _ring(args, lab)
    out, text = {}, []
    gens = generator_polynomials(lab, ring)
    if args.source in ("combinatorial", "both"):
        out["combinatorial"] = [str(f) for f in gens]
        text.append(format_ideal_text(gens, [f"{len(gens)} products of label forms"]))
    if args.source in ("intersection", "both"):
        I = intersection_ideal(lab, ring, max_basis=_max_basis())
        basis = I.groebner_basis()
        out["intersection"] = [str(f) for f in basis]
        text.append(format_ideal_text(basis, [f"reduced Groebner basis of the intersection ({len(basis)})"]))
    cert = certify_generation(lab, ring.field, max_basis=_max_basis())
    out["certificate"] = cert.to_json()
    text.append("# certificate\n" + cert.dumps())
    _emit(args, "\n".join(text), out)
    rc = EXIT_OK
    if args.golden:
        gtext = _read(args.golden)
        if gtext.lstrip().startswith("["):
            rc = _golden(args, compare_certificate(cert.to_json(), gtext))
        else:
            rc = _golden(args, compare_ideal(gens, gtext, ring))
    if not cert.passed:
        return EXIT_CERT
    return rc


def cmd_betti(args):
    g, lab = _load(args)
    ring = _ring(args, lab).with_order("grevlex")
    if args.target == "secant":
        S = secant_ideal(lab, args.k, ring, max_basis=_max_basis())
        if S.status != "ok":
            raise InputError(f"secant level {args.k}: {S.status}")
        I, k = S.ideal, 2 * args.k + 1
    else:
        I, k = intersection_ideal(lab, ring, max_basis=_max_basis()), 2
    B = _betti(I)
    summ = _summary_json(I, B, k=k)
    _emit(args, B.to_text() + json.dumps(summ, sort_keys=True), summ)
    if args.golden:
        return _golden(args, compare_betti(B, _read(args.golden)))
    return EXIT_OK


def cmd_secant(args):
    g, lab = _load(args)
    ring = _ring(args, lab).with_order("grevlex")
    S = secant_ideal(lab, args.k, ring, max_basis=_max_basis())
    out = {"k": args.k, "status": S.status, "candidates": S.candidates, "components": S.component_report()}
    if S.status != "ok":
        _emit(args, json.dumps(out, sort_keys=True), out)
        return EXIT_OK
    basis = S.ideal.minimal_generators()
    B = _betti(S.ideal)
    out["ideal"] = [str(f) for f in basis]
    out.update(_summary_json(S.ideal, B, k=2 * args.k + 1))
    text = [json.dumps(S.component_report(), sort_keys=True),
            format_ideal_text(basis, [f"secant level {args.k}: {len(basis)} minimal generators"]),
            B.to_text()]
    _emit(args, "\n".join(text), out)
    if args.golden:
        gtext = _read(args.golden)
        if "total:" in gtext:
            return _golden(args, compare_betti(B, gtext))
        return _golden(args, compare_ideal(basis, gtext, ring))
    return EXIT_OK


def cmd_survey(args):
    if args.family == "random_valid":
        if args.d is None or args.g is None:
            raise InputError("random_valid needs --d and --g")
        spec = {"family": "random_valid", "d": args.d, "g": args.g, "seed": args.seed, "count": args.count}
    elif args.family:
        spec = args.family if "(" in args.family else f"{args.family}({args.d if args.d is not None else ''})"
    elif args.graph:
        spec = None
    else:
        raise InputError("survey needs --family or --graph")
    try:
        graphs = generate_family(spec) if spec else [parse_graph(_read(args.graph))]
    except (ValueError, RuntimeError) as exc:
        raise InputError(str(exc)) from exc
    failed = False
    for rep in run_survey(graphs, jobs=args.jobs, allow_violations=args.allow_violations,
                          field=field_for(args.field), secant=not args.no_secant,
                          max_basis=_max_basis()):
        print(rep.dumps(with_timings=args.timings), flush=True)
        failed |= rep.record["certificate"]["status"] != "PASS"
    return EXIT_CERT if failed else EXIT_OK


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="graphcurve", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="graph JSON file")
    common.add_argument("--labeling", help="labeling JSON file (default: automatic labeling)")
    common.add_argument("--allow-violations", action="store_true",
                        help="proceed even if the admissibility assumptions fail")
    common.add_argument("--field", type=int, default=DEFAULT_PRIME, help="prime p, or 0 for rationals")
    common.add_argument("--order", choices=["grevlex", "elim"], default="grevlex",
                        help="monomial order for printed Groebner bases (elim = lex)")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--golden", help="golden file to compare against")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--k", type=int, default=1, help="secant level")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check the admissibility assumptions")
    sub.add_parser("embed", parents=[common], help="label edges and print line ideals")
    s = sub.add_parser("ideal", parents=[common], help="curve ideal generators and certificate")
    s.add_argument("--source", choices=["combinatorial", "intersection", "both"], default="combinatorial")
    s = sub.add_parser("betti", parents=[common], help="Betti diagram of the curve or a secant variety")
    s.add_argument("--target", choices=["curve", "secant"], default="curve")
    sub.add_parser("secant", parents=[common], help="secant variety components, ideal and Betti diagram")
    s = sub.add_parser("survey", parents=[common], help="run the pipeline over a graph family")
    s.add_argument("--family", help="cycle, path, subdivided_K4, random_valid, or a descriptor like cycle(7)")
    s.add_argument("--d", type=int)
    s.add_argument("--g", type=int)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--timings", action="store_true", help="include wall-clock timings (not reproducible)")
    s.add_argument("--no-secant", action="store_true")
    return p


COMMANDS = {"validate": cmd_validate, "embed": cmd_embed, "ideal": cmd_ideal,
            "betti": cmd_betti, "secant": cmd_secant, "survey": cmd_survey}


def _error(kind, exc, code):
    print(json.dumps({"error": kind, "message": str(exc), "exit": code}, sort_keys=True), file=sys.stderr)
    return code


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (InputError, GraphFormatError, LabelingError) as exc:
        return _error("invalid_input", exc, EXIT_INPUT)
    except (ResolutionIncomplete, GroebnerAborted, ComputeError, RuntimeError) as exc:
        return _error("computation_failed", exc, EXIT_COMPUTE)
    except ValueError as exc:
        return _error("invalid_input", exc, EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())
