"""Command-line front end.

Subcommands: `epsilon` (single-class constant), `curves` (submaximal
listing), `cross-section` (piecewise-linear export), `table` (reproduce the
built-in example tables as CSV), `check` (randomized cross-validation
against the brute-force oracle).

Exit codes: 0 success, 2 domain error (non-ample input, parameter out of
range), 3 oracle mismatch, 64 usage error.  Rationals are always printed as
"num/den"; floats never appear in any output.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import cm, nocm, oracle
from .cross_section import CrossSection, cross_section
from .kernels import backend_name
from .lattice import (
    NSClass,
    Surface,
    ample_violations,
    is_ample,
    ns_class,
    self_intersection,
    surface_from_name,
)
from .sampling import random_ample_classes

USAGE_ERROR = 64
DOMAIN_ERROR = 2
ORACLE_MISMATCH = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse defaults to exit 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


class DomainError(Exception):
    pass


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_coeffs(text: str, surface: Surface) -> NSClass:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise SystemExit(USAGE_ERROR)
    if len(values) != surface.rank:
        sys.stderr.write(
            f"expected {surface.rank} coefficients for {surface.value}, "
            f"got {len(values)}\n"
        )
        raise SystemExit(USAGE_ERROR)
    return ns_class(surface, values)


def _require_ample(L: NSClass) -> None:
    if not is_ample(L):
        raise DomainError(
            "class is not ample: " + "; ".join(ample_violations(L))
        )


def _cm_generator_labels(surface: Surface) -> dict[tuple, str]:
    return {
        cm.degree_vector(t, surface): name
        for name, t in cm.GENERATOR_TUPLES.items()
    }


def _cm_witness_labels(surface: Surface, witnesses) -> list[str]:
    generators = _cm_generator_labels(surface)
    order = {"F1": 0, "F2": 1, "Delta": 2, "Sigma": 3}
    labelled = []
    for w in witnesses:
        name = generators.get(w.degrees)
        if name is not None:
            labelled.append((0, order[name], (), name))
        else:
            labelled.append((1, 0, w.representative, "N_{%d,%d,%d,%d}" % w.representative))
    return [entry[3] for entry in sorted(labelled)]


def _nocm_labels(pairs) -> list[str]:
    return [nocm.pair_label(p) for p in sorted(pairs, key=nocm.pair_sort_key)]


def _epsilon_record(L: NSClass, check_oracle: bool) -> dict:
    _require_ample(L)
    record: dict = {
        "surface": L.surface.value,
        "coeffs": list(L.coeffs),
        "l_squared": self_intersection(L),
    }
    if L.surface is Surface.NO_CM:
        result = nocm.seshadri_constant(L)
        record["epsilon"] = result.value
        record["witnesses"] = _nocm_labels(result.witnesses)
        record["weak_submaximal"] = _nocm_labels(nocm.submaximal_curves(L, weak=True))
        reference = oracle.nocm_seshadri(L) if check_oracle else None
    else:
        result = cm.seshadri_constant(L)
        record["epsilon"] = result.value
        record["witnesses"] = _cm_witness_labels(L.surface, result.witnesses)
        reference = oracle.cm_seshadri(L) if check_oracle else None
    if check_oracle and reference != record["epsilon"]:
        sys.stderr.write(
            f"oracle mismatch on {L.surface.value} {L.coeffs}: "
            f"closed form {record['epsilon']}, oracle {reference}\n"
        )
        raise SystemExit(ORACLE_MISMATCH)
    return record


def _cmd_epsilon(args) -> int:
    surface = surface_from_name(args.surface)
    L = _parse_coeffs(args.coeffs, surface)
    record = _epsilon_record(L, args.check_oracle)
    print(json.dumps(record))
    return 0


def _cmd_curves(args) -> int:
    surface = surface_from_name(args.surface)
    if surface is not Surface.NO_CM:
        raise DomainError("submaximal listing is only available for surface 'nocm'")
    L = _parse_coeffs(args.coeffs, surface)
    _require_ample(L)
    pairs = nocm.submaximal_curves(L, weak=args.weak)
    print(
        json.dumps(
            {
                "surface": surface.value,
                "coeffs": list(L.coeffs),
                "l_squared": self_intersection(L),
                "weak": args.weak,
                "curves": _nocm_labels(pairs),
            }
        )
    )
    return 0


def _parse_ratio(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise SystemExit(USAGE_ERROR)


def _section_rows(section: CrossSection):
    edges = ["-inf"] + [_fmt(b) for b in section.breakpoints] + [_fmt(section.mu_max)]
    for i, seg in enumerate(section.segments):
        yield edges[i], edges[i + 1], seg


def _cmd_cross_section(args) -> int:
    lam = _parse_ratio(args.slope_ratio)
    if not 0 < lam <= 1:
        raise DomainError(f"lambda must lie in (0, 1], got {lam}")
    section = cross_section(lam)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "lambda": _fmt(lam),
                    "mu_max": _fmt(section.mu_max),
                    "breakpoints": [_fmt(b) for b in section.breakpoints],
                    "segments": [
                        {
                            "slope": _fmt(seg.slope),
                            "intercept": _fmt(seg.intercept),
                            "witness": nocm.pair_label(seg.witness),
                        }
                        for seg in section.segments
                    ],
                }
            )
        )
        return 0
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["mu_from", "mu_to", "slope", "intercept", "witness"])
    for lo, hi, seg in _section_rows(section):
        writer.writerow([lo, hi, _fmt(seg.slope), _fmt(seg.intercept), nocm.pair_label(seg.witness)])
    if args.samples > 0:
        writer.writerow([])
        writer.writerow(["mu", "value"])
        first = section.breakpoints[0] if section.breakpoints else section.mu_max - 1
        lo = min(first, Fraction(-1)) - 1
        span = section.mu_max - lo
        steps = max(args.samples - 1, 1)
        for i in range(args.samples):
            mu = lo + span * i / steps
            writer.writerow([_fmt(mu), _fmt(section.value_at(mu))])
    sys.stdout.write(out.getvalue())
    return 0


#: Example classes shipped with the package, reproduced by `table`.
TABLE1_CLASSES = (
    (3, 2, -1), (3, 3, -1), (4, 3, -1), (5, 3, -1), (5, 4, -2), (7, 4, -2),
    (7, 6, -3), (10, 7, -4), (12, 9, -5), (17, 10, -6), (20, 11, -7),
    (32, 9, -7), (33, 9, -7), (34, 9, -7), (26, 14, -9), (73, 13, -11),
    (54, 14, -11), (45, 15, -11), (36, 16, -11), (32, 17, -11), (52, 30, -19),
)

TABLE2_CLASSES = (
    (1, 1, 1, 1), (1, 1, 0, 0), (2, 1, 0, 0), (0, 0, 1, 1), (1, 0, 1, 1),
    (1, 1, 1, 0), (2, 2, 1, -1), (-1, 1, 2, 2), (-1, 2, 1, 2),
    (4, 4, -1, -1), (4, 2, 3, -2), (8, 5, -1, -2),
)


def render_table(which: int) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if which == 1:
        writer.writerow(
            ["a1", "a2", "a3", "l_squared", "epsilon", "computing", "weak_submaximal"]
        )
        for coeffs in TABLE1_CLASSES:
            L = ns_class(Surface.NO_CM, coeffs)
            result = nocm.seshadri_constant(L)
            weak = nocm.submaximal_curves(L, weak=True)
            writer.writerow(
                [
                    *coeffs,
                    self_intersection(L),
                    result.value,
                    ",".join(_nocm_labels(result.witnesses)),
                    ",".join(_nocm_labels(weak)),
                ]
            )
    else:
        writer.writerow(["a1", "a2", "a3", "a4", "l_squared", "epsilon", "computing"])
        for coeffs in TABLE2_CLASSES:
            L = ns_class(Surface.CM_GAUSSIAN, coeffs)
            result = cm.seshadri_constant(L)
            writer.writerow(
                [
                    *coeffs,
                    self_intersection(L),
                    result.value,
                    ",".join(_cm_witness_labels(L.surface, result.witnesses)),
                ]
            )
    return out.getvalue()


def _cmd_table(args) -> int:
    sys.stdout.write(render_table(args.which))
    return 0


def _cmd_check(args) -> int:
    surface = surface_from_name(args.surface)
    bound = args.bound if args.bound else (50 if surface is Surface.NO_CM else 8)
    classes = random_ample_classes(surface, args.count, bound, args.seed)
    for L in classes:
        if surface is Surface.NO_CM:
            got = nocm.seshadri_constant(L).value
            want = oracle.nocm_seshadri(L)
        else:
            got = cm.seshadri_constant(L).value
            want = oracle.cm_seshadri(L)
        if got != want:
            sys.stderr.write(
                f"oracle mismatch on {surface.value} {L.coeffs}: "
                f"closed form {got}, oracle {want}\n"
            )
            return ORACLE_MISMATCH
    print(
        json.dumps(
            {
                "surface": surface.value,
                "count": args.count,
                "seed": args.seed,
                "coeff_bound": bound,
                "all_match": True,
                "backend": backend_name(),
            }
        )
    )
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="seshadri", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    surfaces = [s.value for s in Surface]

    p = sub.add_parser("epsilon", help="Seshadri constant of one ample class")
    p.add_argument("--surface", required=True, choices=surfaces)
    p.add_argument("--coeffs", required=True, help="comma-separated integers")
    p.add_argument("--check-oracle", action="store_true")
    p.set_defaults(func=_cmd_epsilon)

    p = sub.add_parser("curves", help="submaximal curves of one ample class")
    p.add_argument("--surface", required=True, choices=surfaces)
    p.add_argument("--coeffs", required=True, help="comma-separated integers")
    p.add_argument("--weak", action="store_true", help="allow equality with sqrt(L^2)")
    p.set_defaults(func=_cmd_curves)

    p = sub.add_parser("cross-section", help="piecewise-linear profile on a nef ray")
    p.add_argument("--lambda", dest="slope_ratio", required=True, metavar="P/Q")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--samples", type=int, default=0, help="grid samples (csv only)")
    p.set_defaults(func=_cmd_cross_section)

    p = sub.add_parser("table", help="reproduce a built-in example table as CSV")
    p.add_argument("--which", type=int, required=True, choices=[1, 2])
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("check", help="randomized cross-validation against the oracle")
    p.add_argument("--surface", required=True, choices=surfaces)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=0, help="coefficient bound")
    p.set_defaults(func=_cmd_check)
    return parser


def _normalize_argv(argv: list[str]) -> list[str]:
    """Join `--coeffs -1,2,...` into `--coeffs=-1,2,...`.

    argparse would otherwise read a leading-minus value as an option name,
    making classes with a negative first coefficient unpassable.
    """
    out = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg == "--coeffs" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--coeffs={argv[i + 1]}")
            i += 2
        else:
            out.append(arg)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(_normalize_argv(list(argv)))
    try:
        return args.func(args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
