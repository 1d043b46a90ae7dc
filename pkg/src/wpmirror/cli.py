"""Command-line surface: compute either side, verify, and run bisection
experiments, with JSON/CSV output and optional SVG rendering of the curves.

Exit codes: 0 all checks pass, 1 a check failed (output still written),
2 invalid input.
"""

import argparse
import json
import sys
from fractions import Fraction

from .aside import (build_curves, critical_data, h_poly_roots, hom_space,
                    intersections, monodromy_data)
from .aside.potential import CriticalDatum
from .bside import (dual_ext, ext_pushforward, generation_certificate,
                    resolution_summands)
from .bisection import (bisection_from_config, coherence_weight, load_config,
                        reparameterized_weight, track_splitting,
                        validate_bisection)
from .verify import TOOL_VERSION, hms_certificate, sweep
from .weights import Weights


def _encode(obj):
    """Recursive JSON encoding: rationals as {num, den} strings, complex as
    {re, im} doubles, everything else structural."""
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(x) for x in obj]
    return obj


def _emit(payload, fmt="json", stream=None):
    stream = stream or sys.stdout
    if fmt == "csv":
        stream.write(payload if isinstance(payload, str) else _to_csv(payload))
    else:
        json.dump(_encode(payload), stream, indent=2, sort_keys=True)
        stream.write("\n")


def _to_csv(payload):
    """Flatten a {key: {col: val}} table into CSV."""
    rows = []
    cols = set()
    for key, val in sorted(payload.items()):
        if isinstance(val, dict):
            cols |= set(val)
    cols = sorted(cols, key=str)
    rows.append("key," + ",".join(str(c) for c in cols))
    for key, val in sorted(payload.items()):
        if isinstance(val, dict):
            rows.append(str(key).replace(",", "|") + ","
                        + ",".join(str(val.get(c, "")) for c in cols))
        else:
            rows.append(f"{str(key).replace(',', '|')},{val}")
    return "\n".join(rows) + "\n"


def _parse_weights(text, need_two=False):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise SystemExit(_invalid(f"weights must be comma-separated integers, got {text!r}"))
    if any(p < 1 for p in parts) or not parts:
        raise SystemExit(_invalid(f"weights must be positive, got {text!r}"))
    if need_two and len(parts) != 2:
        raise SystemExit(_invalid("this command needs exactly two weights"))
    return Weights(parts)


def _invalid(msg):
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _cmd_bside(args):
    w = _parse_weights(args.weights)
    if args.action == "ext":
        table = {}
        for j in range(w.l - 1):
            for k in range(w.l - 1):
                dims = ext_pushforward(w, j, k).dims_by_degree
                table[f"{j},{k}"] = {str(d): v for d, v in sorted(dims.items())}
        _emit(table, args.format)
        return 0
    if args.action == "dual":
        table = {}
        for k in range(w.l - 1):
            for i in range(w.l - 1):
                dims = dual_ext(w, k, i).dims_by_degree
                table[f"{k},{i}"] = {str(d): v for d, v in sorted(dims.items())}
        _emit(table, args.format)
        return 0
    if args.action == "resolve":
        out = {}
        for k in range(w.l - 1):
            out[str(k)] = [
                {"position": s.homological_position,
                 "projective": s.projective_index,
                 "shift": s.internal_shift,
                 "subset": list(s.witness_subset)}
                for s in resolution_summands(w, k)
            ]
        _emit(out, args.format)
        return 0
    report = generation_certificate(w)
    _emit({"passed": report.passed, "violations": report.violations},
          args.format)
    return 0 if report.passed else 1


def _svg_curves(w, path):
    """Write the strip curves over one period as an SVG drawing."""
    curves = build_curves(w)
    scale = 40
    height = 4 * (w.l - 1)
    pad = 2

    def pt(x, y):
        return (pad * scale + float(x) * scale * 4,
                (height + pad - float(y)) * scale / 2)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" '
             f'width="{8 * scale}" height="{(2 * height) * scale}">']
    for c in curves:
        for a, b in ((c.p_plus, c.q_plus), (c.p_minus, c.q_minus)):
            (x1, y1), (x2, y2) = pt(*a), pt(*b)
            parts.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" '
                         f'y2="{y2:.1f}" stroke="black" stroke-width="1.5"/>')
        (sx, sy), (ex, ey) = pt(*c.p_plus), pt(*c.p_minus)
        r = c.arc_radius * scale / 2
        parts.append(f'<path d="M {sx:.1f} {sy:.1f} A {r:.1f} {r:.1f} 0 0 0 '
                     f'{ex:.1f} {ey:.1f}" fill="none" stroke="black" '
                     f'stroke-width="1.5"/>')
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts))


def _cmd_aside(args):
    w = _parse_weights(args.weights, need_two=True)
    if w.a[0] > w.a[1]:
        raise SystemExit(_invalid("strip model expects a0 <= a1"))
    if args.svg:
        _svg_curves(w, args.svg)
    if args.action == "homs":
        table = {}
        for j in range(w.l - 1):
            for k in range(j, w.l - 1):
                hom = hom_space(w, j, k)
                table[f"{j},{k}"] = {str(d): v
                                     for d, v in sorted(hom.dims_by_degree.items())}
        _emit(table, args.format)
        return 0
    if args.action == "points":
        out = {}
        for j in range(w.l - 1):
            for k in range(j + 1, w.l - 1):
                out[f"{j},{k}"] = [
                    {"kind": p.kind.value, "x": p.x, "shift": p.d,
                     "degree": p.degree, "label": list(p.label.subset)}
                    for p in intersections(w, j, k)
                ]
        _emit(out, args.format)
        return 0
    if args.action == "critical":
        out = {
            "critical_values": [
                {"index": c.index, "modulus": c.modulus, "angle_pi": c.angle,
                 "value": c.value}
                for c in critical_data(w)
            ],
            "monodromy": monodromy_data(w),
        }
        _emit(out, args.format)
        return 0
    # hq: root report at the critical parameters, or a custom q
    if args.q is not None:
        try:
            re, im = (float(x) for x in args.q.split(","))
        except ValueError:
            raise SystemExit(_invalid(f"--q expects RE,IM, got {args.q!r}"))
        qs = [complex(re, im)]
    else:
        qs = [c.value for c in critical_data(w)]
    out = []
    for q in qs:
        rep = h_poly_roots(w, q)
        out.append({"q": rep.q, "roots": list(rep.roots),
                    "min_separation": rep.min_separation,
                    "near_double_root": rep.near_double_root})
    _emit({"reports": out}, args.format)
    return 0


def _cmd_verify(args):
    if (args.weights is None) == (args.sweep_l is None):
        raise SystemExit(_invalid("give exactly one of --weights or --sweep-l"))
    if args.sweep_l is not None:
        summary = sweep(args.sweep_l)
        if args.format == "csv":
            _emit(summary.to_csv(), "csv")
        else:
            _emit({"l_max": summary.l_max,
                   "results": [{"weights": list(ws), "l": l, "passed": p}
                               for ws, l, p in summary.results],
                   "all_passed": summary.all_passed}, "json")
        return 0 if summary.all_passed else 1
    w = _parse_weights(args.weights, need_two=True)
    if w.a[0] > w.a[1]:
        raise SystemExit(_invalid("verification needs a0 <= a1"))
    cert = hms_certificate(w)
    sys.stdout.write(cert.to_json() + "\n")
    return 0 if cert.passed else 1


def _cmd_bisect(args):
    try:
        cfg = load_config(args.config)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        raise SystemExit(_invalid(f"bad config: {exc}"))
    b, parent = bisection_from_config(cfg)
    if args.action == "validate":
        report = validate_bisection(b, parent)
        _emit({"passed": report.passed, "violations": report.violations},
              args.format)
        return 0 if report.passed else 1
    if args.action == "weights":
        eta = coherence_weight(b)
        tau = reparameterized_weight(b)
        _emit({"eta": {str(p[0]): v for p, v in eta.values},
               "tau": {str(p[0]): v for p, v in tau.values}}, args.format)
        return 0
    rep = track_splitting(
        b,
        coeffs=cfg.get("coefficients"),
        t_schedule=cfg["t_schedule"],
        seed=cfg["seed"],
        tolerance=cfg["tolerance"],
    )
    _emit({
        "ok": rep.ok,
        "m": rep.m,
        "r": rep.r,
        "seed": cfg["seed"],
        "targets_cell0": rep.targets_cell0,
        "targets_cell1": rep.targets_cell1,
        "steps": [{"t": s["t"], "values": s["values"],
                   "values_rebased": s["values_rebased"],
                   "err_cell0": s["err_cell0"], "err_cell1": s["err_cell1"]}
                  for s in rep.steps],
        "violations": rep.violations,
    }, args.format)
    return 0 if rep.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wpmirror",
        description="Mirror-symmetry verification for weighted blowups",
    )
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bside", help="derived-category side computations")
    p.add_argument("action", choices=["ext", "dual", "resolve", "certify-generation"])
    p.add_argument("--weights", required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_bside)

    p = sub.add_parser("aside", help="Fukaya-side computations")
    p.add_argument("action", choices=["homs", "points", "critical", "hq"])
    p.add_argument("--weights", required=True)
    p.add_argument("--svg", default=None, help="write the curves as SVG")
    p.add_argument("--q", default=None, help="RE,IM parameter for hq")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_aside)

    p = sub.add_parser("verify", help="cross-check both sides")
    p.add_argument("--weights", default=None)
    p.add_argument("--sweep-l", type=int, default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bisect", help="bisection experiments")
    p.add_argument("action", choices=["validate", "weights", "track"])
    p.add_argument("--config", required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_bisect)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
