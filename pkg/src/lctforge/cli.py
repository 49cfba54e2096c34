"""Command-line front end.

Exit status: 0 on success, 2 on unparsable or invalid input, 3 when the
mathematics fails on valid input (the certificate is printed).
"""

import argparse
import json
import sys
from fractions import Fraction

from . import blowup, morse, newton, sublevel, zariski
from .errors import InputError, MathematicalError
from .exact import parse_rational, render_rational

SCHEMA = 1


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _parse_json_literal(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: column {exc.colno}: {exc.msg}") from exc


def _ideal(args):
    if args.input:
        return newton.MonomialIdeal.from_json(_load_json(args.input))
    if args.ideal is None:
        raise InputError("give --ideal (with --dim) or --input")
    return newton.MonomialIdeal.parse(args.ideal, args.dim)


def _surface(args):
    if not args.surface:
        raise InputError("--surface is required")
    return zariski.SurfaceData.from_json(_load_json(args.surface))


def _class(data, literal):
    doc = _parse_json_literal(literal, "--class")
    if not isinstance(doc, dict):
        raise InputError("--class expects a JSON object such as '{\"H\":\"1\",\"E\":\"2\"}'")
    return data.cls(doc)


# ---------------------------------------------------------------------------

def cmd_lct(args):
    ideal = _ideal(args)
    report = newton.lct(ideal)
    doc = report.to_json()
    lines = [f"ideal        {ideal.render()}  (dim {ideal.dim})"]
    if report.is_infinite:
        lines.append("lct          +inf (unit ideal)")
    else:
        lines.append(f"diagonal m   {render_rational(report.diagonal_parameter)}")
        lines.append(f"lct (engine) {render_rational(report.lct)}")
    nf = newton.as_normal_form(ideal)
    if nf is not None:
        h, k = nf
        asserted = newton.sum_reading_normal_form_lct(h, k)
        doc["normal_form"] = {
            "h": h, "k": k,
            "engine_lct": render_rational(report.lct),
            "sum_reading_lct": None if asserted is None else render_rational(asserted),
            "engine_exceeds_one": report.lct > 1,
            "sum_reading_exceeds_one": None if asserted is None else asserted > 1,
        }
        if asserted is None:
            lines.append("sum reading  (h+k)/(hk)+1 undefined since hk = 0")
        else:
            lines.append(f"sum reading  {render_rational(asserted)}  [(h+k)/(hk)+1, reading x^h y^k as (x^h, y^k)]")
        lines.append(f"both > 1     {report.lct > 1 and (asserted is None or asserted > 1)}")
    for g, w in report.witness:
        lines.append(f"  witness    {render_rational(w)} * {g}")
    return doc, lines


def cmd_mult_ideal(args):
    ideal = _ideal(args)
    r = parse_rational(args.r)
    found = newton.multiplier_ideal_monomials(ideal, r, args.bound)
    minimal = newton.MonomialIdeal(ideal.dim, tuple(found)) if found else None
    doc = {
        "ideal": ideal.to_json(),
        "r": render_rational(r),
        "degree_bound": args.bound,
        "monomials": [list(e) for e in found],
        "generators": minimal.to_json()["generators"] if minimal else [],
    }
    lines = [f"J({render_rational(r)} . ({ideal.render()})) up to degree {args.bound}:",
             "  generated by " + (minimal.render() if minimal else "(nothing in range)"),
             f"  {len(found)} monomials in range"]
    return doc, lines


def cmd_blowup(args):
    if args.paths is not None:
        records = blowup.enumerate_paths(args.paths)
        doc = {"s": args.paths, "paths": [records[p].to_json() for p in sorted(records)]}
        lines = [f"{'path':<{max(4, args.paths)}}  normal form        lct    (h+k)/(hk)+1"]
        for p in sorted(records):
            rec = records[p]
            alt = rec.normal_form.sum_reading_lct()
            lines.append(f"{p:<{max(4, args.paths)}}  {rec.normal_form.render():<17}  "
                         f"{render_rational(rec.lct):<6} {'-' if alt is None else render_rational(alt)}")
        return doc, lines
    if args.input:
        seq = blowup.BlowupSequence.from_json(_load_json(args.input))
    elif args.sequence:
        seq = blowup.BlowupSequence.parse(args.sequence)
    else:
        raise InputError("give --paths, --sequence or --input")
    verdict = blowup.pushforward_lelong_verdict(seq)
    doc = verdict.to_json()
    lines = [f"{e.action:<8} center #{e.position} ({e.case}): {e.reason}" for e in verdict.log]
    lines.append(f"retained blow-ups: {len(verdict.pruned)}")
    if verdict.verdict == "trivial_by_remark":
        lines.append("verdict: trivial (the curve is not inside the first center)")
    else:
        lines.append(f"verdict: generic Lelong number vanishes; min lct = "
                     f"{render_rational(verdict.min_lct)} > 1 on path {verdict.witness_path} "
                     f"{verdict.witness_normal_form.render()}")
    return doc, lines


def cmd_zariski(args):
    data = _surface(args)
    if len(args.cls) != 1:
        raise InputError("zariski takes exactly one --class")
    D = _class(data, args.cls[0])
    dec = zariski.zariski_decompose(D, data)
    doc = dec.to_json(data)
    doc["class"] = D.to_mapping()
    doc["nef"] = not dec.N
    lines = [f"D = {D.render()}",
             f"P = {dec.P.render()}",
             "N = " + (" + ".join(f"{render_rational(a)}*{data.candidate_names[i]}" for i, a in dec.N) or "0"),
             f"P.C over candidates: {[render_rational(v) for v in dec.nef_check]}",
             f"support Gram negative definite: {dec.gram_negdef}"]
    return doc, lines


def cmd_product(args):
    data = _surface(args)
    if len(args.cls) != 2:
        raise InputError("product takes exactly two --class options")
    a, b = (_class(data, c) for c in args.cls)
    value = zariski.positive_product(a, b, data)
    ordinary = data.dot(a, b)
    doc = {"alpha": a.to_mapping(), "beta": b.to_mapping(),
           "positive_product": render_rational(value), "ordinary_product": render_rational(ordinary)}
    lines = [f"<({a.render()}).({b.render()})> = {render_rational(value)}",
             f"ordinary product             = {render_rational(ordinary)}"]
    return doc, lines


def cmd_morse(args):
    if not args.input:
        raise InputError("morse needs --input")
    raw = _load_json(args.input)
    if args.kind in ("strong", "second"):
        data = morse.MorseInput.from_json(raw)
        fn = morse.strong_morse_bound if args.kind == "strong" else morse.second_formulation_bound
        report = fn(data)
    elif args.kind == "nef":
        try:
            report = morse.nef_case_bound(int(raw["n"]), int(raw["s"]), raw["table"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"nef input needs n, s, table: {exc}") from exc
    elif args.kind == "trapani":
        try:
            divisors = [morse.TrapaniDivisor(d["nu"], tuple(d["table"])) for d in raw.get("divisors", [])]
            report = morse.trapani_s1_bound(int(raw["n"]), raw["L_n"], raw["L_n1_F"], divisors)
        except (KeyError, TypeError) as exc:
            raise InputError(f"trapani input needs n, L_n, L_n1_F, divisors: {exc}") from exc
    else:  # surface
        try:
            surf = raw["surface"]
            if isinstance(surf, str):
                surf = _load_json(surf)
            data = zariski.SurfaceData.from_json(surf)
            L, F, u = (data.cls(raw[key]) for key in ("L", "F", "u"))
        except (KeyError, TypeError) as exc:
            raise InputError(f"surface Morse input needs surface, L, F, u: {exc}") from exc
        report = morse.surface_morse(L, F, data, u)
    doc = report.to_json()
    lines = [f"{report.formula_id} bound: coefficient of k^n/n! = {render_rational(report.coefficient)}"]
    lines += [f"  {label:<20} {render_rational(v)}" for label, v in report.parts]
    lines += [f"  note: {n}" for n in report.notes]
    return doc, lines


def cmd_oracle_volume(args):
    ideal = _ideal(args)
    radii = None
    if args.radii:
        radii = [parse_rational(r) for r in args.radii.split(",")]
    fit = sublevel.sublevel_volume_oracle(ideal, radii, args.points)
    engine = newton.lct(ideal)
    doc = {
        "ideal": ideal.to_json(),
        "points_per_axis": args.points,
        "samples": [{"r": render_rational(r), "volume": v} for r, v in zip(fit.radii, fit.volumes)],
        "slope": fit.slope,
        "threshold_estimate": fit.threshold_estimate,
        "engine_lct": render_rational(engine.lct),
    }
    lines = [f"{'r':>8}  volume"]
    lines += [f"{render_rational(r):>8}  {v:.6e}" for r, v in zip(fit.radii, fit.volumes)]
    lines.append(f"fitted slope {fit.slope:.4f}  => c ~ {fit.threshold_estimate:.4f} "
                 f"(engine {render_rational(engine.lct)}; log corrections lower the slope)")
    nf = newton.as_normal_form(ideal)
    if nf is not None:
        asserted = newton.sum_reading_normal_form_lct(*nf)
        doc["sum_reading_lct"] = None if asserted is None else render_rational(asserted)
        if asserted is not None:
            lines.append(f"sum-reading value {render_rational(asserted)} would give slope {2 * float(asserted):.1f}")
    return doc, lines


COMMANDS = {
    "lct": cmd_lct,
    "mult-ideal": cmd_mult_ideal,
    "blowup": cmd_blowup,
    "zariski": cmd_zariski,
    "product": cmd_product,
    "morse": cmd_morse,
    "oracle-volume": cmd_oracle_volume,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="lctforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ideal=False):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("-i", "--input", help="input JSON file")
        if ideal:
            p.add_argument("--ideal", help='monomial literal, e.g. "x1^2*x2, x3"')
            p.add_argument("--dim", type=int, help="ambient dimension")
        return p

    common(sub.add_parser("lct", help="log-canonical threshold of a monomial ideal"), ideal=True)
    p = common(sub.add_parser("mult-ideal", help="multiplier ideal monomials (Howald)"), ideal=True)
    p.add_argument("--r", default="1", help="coefficient r (rational)")
    p.add_argument("--bound", type=int, default=4, help="total degree bound")
    p = common(sub.add_parser("blowup", help="chart paths or Lelong verdict of a blow-up sequence"))
    p.add_argument("--paths", type=int, help="enumerate all 2^s chart paths")
    p.add_argument("--sequence", help='short form such as "e2,a,e2"')
    for name, help_ in (("zariski", "Zariski decomposition on a surface"),
                        ("product", "positive product of two classes on a surface")):
        p = common(sub.add_parser(name, help=help_))
        p.add_argument("--surface", help="surface JSON file")
        p.add_argument("--class", dest="cls", action="append", default=[],
                       help='class as JSON, e.g. \'{"H":"1","E":"2"}\'')
    p = common(sub.add_parser("morse", help="algebraic Morse inequality bounds"))
    p.add_argument("kind", choices=["strong", "second", "nef", "trapani", "surface"])
    p = common(sub.add_parser("oracle-volume", help="sublevel-volume slope fit"), ideal=True)
    p.add_argument("--radii", help="comma-separated rationals in (0,1)")
    p.add_argument("--points", type=int, default=sublevel.DEFAULT_POINTS, help="quadrature points per axis")
    return parser


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc, lines = COMMANDS[args.command](args)
    except InputError as exc:
        _emit_error(args, stdout, stderr, "input", str(exc), {})
        return 2
    except MathematicalError as exc:
        _emit_error(args, stdout, stderr, "mathematical", str(exc), exc.certificate)
        return 3
    if args.json:
        out = {"schema": SCHEMA, "command": args.command}
        out.update(doc)
        json.dump(out, stdout, indent=2, sort_keys=True, default=_json_default)
        stdout.write("\n")
    else:
        stdout.write("\n".join(lines) + "\n")
    return 0


def _json_default(obj):
    if isinstance(obj, Fraction):
        return render_rational(obj)
    raise TypeError(f"not JSON serialisable: {type(obj).__name__}")


def _emit_error(args, stdout, stderr, kind, message, certificate):
    if getattr(args, "json", False):
        json.dump({"schema": SCHEMA, "command": args.command, "error": kind,
                   "message": message, "certificate": certificate},
                  stdout, indent=2, sort_keys=True, default=_json_default)
        stdout.write("\n")
    else:
        stderr.write(f"lctforge {args.command}: {kind} error: {message}\n")
        for key, value in certificate.items():
            stderr.write(f"  {key}: {value}\n")


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
