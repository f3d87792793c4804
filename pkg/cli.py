"""Command-line front end for frobnil.

Subcommands classify hypersurfaces, sweep primes, write profile files and
run the construction calculators over them. Every command builds a Report;
execute() prints it and turns it into an exit status.
"""

import argparse
import sys
from dataclasses import asdict
from functools import partial
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import orjson
import sympy

from construction_calculus import (
    INF,
    BoundKind,
    BoundReport,
    DiagonalSpec,
    NatInterval,
    RingProfile,
    Verdict,
    diagonal_conditions_from_profiles,
    diagonal_fdepth,
    diagonal_profile,
    glue_fdepth,
    glue_hsl_fte,
    glue_wfn_check,
    maddox_e1,
    maddox_fte_bound,
    polynomial_ring_profile,
    quy_fte_bound,
    segre_fdepth_bounds,
    segre_fte_bound,
    segre_gfdepth,
    segre_gwfn_fte_bound,
    segre_length_deg0,
    segre_profile,
    veronese_fnilpotence_equivalence,
    veronese_fte_bound,
    veronese_profile,
)
from errors import FrobnilError
from fmodule_calculus import HslValue
from hypersurface_cech import (
    HypersurfaceRing,
    Polynomial,
    VerdictStatus,
    classify_ring,
    default_window_lo,
    degree0_matrix,
    degree_verdict,
    parse_terms,
)
from logging_config import get_logger
from parallel_runner import run_blocking_parallel
from profile_store import read_profile, write_profile
from report import EXIT_ERROR, Report
from utils.validators import ConfigError

logger = get_logger(__name__)

FTE_MODES = ("quy", "maddox", "segre", "veronese", "glue")


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"Error: {message}", file=sys.stderr)
        sys.exit(EXIT_ERROR)


# -- argument helpers --------------------------------------------------------


def parse_p_range(text: str) -> Tuple[int, int]:
    """Parse "LO..HI" into an inclusive pair.

    Raises:
        ValueError: If the text is malformed or LO > HI
    """
    lo_text, sep, hi_text = text.partition("..")
    if not sep:
        raise ValueError(f"prime range must look like LO..HI, got '{text}'")
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise ValueError(f"prime range must look like LO..HI, got '{text}'")
    if lo > hi:
        raise ValueError(f"empty prime range {text}: {lo} > {hi}")
    return lo, hi


def parse_hsl(text: str) -> HslValue:
    """"3" is exact, "<=3" an upper bound, "unknown" (or "?") unknown."""
    text = text.strip()
    if text in ("unknown", "?"):
        return HslValue.unknown()
    try:
        if text.startswith("<="):
            return HslValue.upper(int(text[2:]))
        return HslValue.exact(int(text))
    except ValueError:
        raise ValueError(f"HSL value must be an integer, '<=N' or 'unknown', got '{text}'")


def parse_hsl_list(values: Optional[Sequence[str]], what: str, allow_upper: bool) -> List[HslValue]:
    """HSL list from the command line.

    Raises:
        ValueError: If the list is missing, or has unknown or upper-bound
            entries without --allow-upper-bounds
    """
    if not values:
        raise ValueError(f"{what} is required")
    parsed = [parse_hsl(v) for v in values]
    if not allow_upper and not all(v.is_exact for v in parsed):
        raise ValueError(f"{what} has unknown or upper-bound entries; pass --allow-upper-bounds")
    return parsed


def _ring_from_args(args: argparse.Namespace) -> HypersurfaceRing:
    if args.g_terms:
        terms = parse_terms(args.g_terms, args.n)
        return HypersurfaceRing(p=args.p, n=args.n, deg_f=args.d, g_terms=terms)
    return HypersurfaceRing.fermat(args.p, args.n, args.d)


def _engine_settings(args: argparse.Namespace, config: Dict[str, Any]) -> Dict[str, Any]:
    """Engine and worker settings with CLI flags overriding the config."""
    engine, sweep = config["engine"], config["sweep"]
    return {
        "max_e": args.max_e if getattr(args, "max_e", None) is not None else engine["max_e"],
        "max_terms": engine["max_terms"],
        "window_factor": engine["window_factor"],
        "workers": args.workers if getattr(args, "workers", None) is not None else sweep["workers"],
        "use_processes": sweep["use_processes"],
    }


def _require_exact_inputs(report: BoundReport, allow_upper: bool) -> BoundReport:
    if not allow_upper and not report.inputs.get("exact_inputs", True):
        raise ValueError(
            f"{report.quantity}: profile HSL values are unknown or upper bounds; "
            "pass --allow-upper-bounds"
        )
    return report


# -- commands ----------------------------------------------------------------


def cmd_hypersurface(args: argparse.Namespace, config: Dict[str, Any]) -> Report:
    """Classify a diagonal hypersurface and optionally write its profile."""
    ring = _ring_from_args(args)
    settings = _engine_settings(args, config)
    window_lo = args.window_lo
    if window_lo is None:
        window_lo = default_window_lo(ring, settings["window_factor"])

    profile, verdicts = classify_ring(
        ring,
        max_e=settings["max_e"],
        window_lo=window_lo,
        max_terms=settings["max_terms"],
        workers=settings["workers"],
        use_processes=settings["use_processes"],
    )
    report = Report(
        command="hypersurface",
        inputs={
            "p": ring.p,
            "n": ring.n,
            "d": ring.deg_f,
            "g": ring.g_string(),
            "max_e": settings["max_e"],
            "window": [window_lo, max((v.degree for v in verdicts), default=window_lo)],
        },
        verdicts=verdicts,
        profiles=[profile],
        strict=args.strict,
    )
    report.add(
        BoundReport(
            quantity=f"{ring.label} F-nilpotent",
            value=profile.f_nilpotent,
            kind=BoundKind.VERDICT,
            justification=(
                "R is F-nilpotent iff R is weakly F-nilpotent and b(R) = inf, "
                "given an F-rational or F-nilpotent punctured spectrum"
            ),
            inputs={"b(R)": profile.b_ring, "wfn": profile.wfn, "flags": asdict(profile.flags)},
            verdict=profile.f_nilpotent,
        )
    )
    n = ring.n
    report.lines.append(f"b_{n} = {profile.b_j(n)}, F-nilpotent: {profile.f_nilpotent.value}")

    if args.dump_matrix:
        layer = degree0_matrix(ring)
        report.lines.append(f"degree-0 basis: {', '.join(str(c) for c in layer.source_basis) or '(empty)'}")
        report.lines.append("degree-0 Frobenius matrix (row-major):")
        report.lines.extend(" ".join(str(x) for x in row) for row in layer.matrix.to_rows())
    if args.out:
        write_profile(profile, args.out)
    return report


def cmd_degree(args: argparse.Namespace, config: Dict[str, Any]) -> Report:
    """Verdict for one graded piece, optionally for the twisted action u*F."""
    ring = _ring_from_args(args)
    settings = _engine_settings(args, config)
    multiplier = None
    if args.twist:
        width = ring.n + 1
        multiplier = Polynomial(p=ring.p, terms=parse_terms(args.twist, width), nvars=width)
    verdict = degree_verdict(
        ring,
        args.t,
        max_e=settings["max_e"],
        multiplier=multiplier,
        max_terms=settings["max_terms"],
    )
    report = Report(
        command="degree",
        inputs={"p": ring.p, "n": ring.n, "d": ring.deg_f, "t": args.t, "twist": args.twist},
        verdicts=[verdict],
        strict=args.strict,
    )
    report.lines.append(f"t={verdict.degree}: {verdict.describe()}")
    return report


def cmd_polynomial(args: argparse.Namespace, config: Dict[str, Any]) -> Report:
    """Profile of a polynomial ring, for use as a Segre factor."""
    profile = polynomial_ring_profile(args.p, args.dim)
    if args.out:
        write_profile(profile, args.out)
    return Report(
        command="polynomial",
        inputs={"p": args.p, "dim": args.dim},
        profiles=[profile],
        strict=args.strict,
    )


def sweep_row(n: int, d: int, max_e: int, max_terms: int, p: int) -> Dict[str, Any]:
    """One sweep row for the Fermat hypersurface at prime p.

    Only degrees >= 0 are scanned: they decide the degree-0 verdict, b_n
    and the F-depth of the Segre product with a polynomial ring in two
    variables.
    """
    ring = HypersurfaceRing.fermat(p, n, d)
    profile, verdicts = classify_ring(ring, max_e=max_e, window_lo=0, max_terms=max_terms)
    degree0 = next(v for v in verdicts if v.degree == 0)

    fdepth_t: Optional[NatInterval] = None
    t_wfn: Optional[Verdict] = None
    if n >= 2:
        T, _ = segre_profile(profile, polynomial_ring_profile(p, 2))
        fdepth_t, t_wfn = T.fdepth, T.wfn

    decided = degree0.decided and (fdepth_t is None or fdepth_t.exact)
    row = {
        "p": p,
        "p mod d": p % d,
        "degree 0": degree0.status.value,
        "zero matrix": degree0.status == VerdictStatus.NILPOTENT and degree0.exponent == 1,
        f"b_{n}": str(profile.b_j(n)),
        "F-nilpotent": profile.f_nilpotent.value,
        "F-depth T": None if fdepth_t is None else str(fdepth_t),
        "T wfn": None if t_wfn is None else t_wfn.value,
        "status": "ok" if decided else "unknown",
    }
    logger.debug(f"[SWEEP_ROW] d={d} n={n} p={p}: {row['degree 0']}, F-depth T {row['F-depth T']}")
    return row


def cmd_sweep(args: argparse.Namespace, config: Dict[str, Any]) -> Report:
    """Tabulate Fermat hypersurfaces over a range of primes."""
    lo, hi = parse_p_range(args.p_range)
    primes = list(sympy.primerange(lo, hi + 1))
    if not primes:
        raise ValueError(f"no primes in {args.p_range}")
    settings = _engine_settings(args, config)

    job = partial(sweep_row, args.n, args.d, settings["max_e"], settings["max_terms"])
    results = run_blocking_parallel(job, primes, settings["workers"], settings["use_processes"])
    rows = []
    for p, result in zip(primes, results):
        if not result.ok:
            raise FrobnilError(f"sweep failed at p={p}: {result.error}")
        rows.append(result.result)
    logger.info(f"[SWEEP] d={args.d} n={args.n}: {len(rows)} primes in [{lo}, {hi}]")

    report = Report(
        command="sweep",
        inputs={"n": args.n, "d": args.d, "p_range": [lo, hi]},
        table=rows,
        strict=args.strict,
    )
    if args.out:
        Path(args.out).write_bytes(orjson.dumps(report.to_dict(), option=orjson.OPT_INDENT_2) + b"\n")
    return report


def cmd_segre(args: argparse.Namespace, config: Dict[str, Any]) -> Report:
    """Segre product T = R # S of two profiles."""
    R, S = read_profile(args.r_profile), read_profile(args.s_profile)
    T, summands = segre_profile(R, S)
    report = Report(
        command="segre",
        inputs={"R": R.name, "S": S.name},
        kunneth=summands,
        profiles=[T],
        strict=args.strict,
    )
    report.add(segre_fdepth_bounds(R, S, T), segre_gfdepth(R, S, T))
    for j in args.length or []:
        report.add(segre_length_deg0(R, S, j))
    b_text = "inf" if T.b_ring.lo == INF else str(T.b_ring)
    report.lines.append(f"weakly F-nilpotent: {T.wfn.value}, b(T)={b_text}")
    if args.out:
        write_profile(T, args.out)
    return report


def cmd_veronese(args: argparse.Namespace, config: Dict[str, Any]) -> Report:
    """Veronese subrings R^(v) for the requested v."""
    if args.out and len(args.v) != 1:
        raise ValueError("--out needs exactly one --v")
    R = read_profile(args.profile)
    subrings = [veronese_profile(R, v) for v in args.v]
    report = Report(
        command="veronese",
        inputs={"R": R.name, "v": list(args.v)},
        profiles=subrings,
        strict=args.strict,
    )
    report.add(veronese_fnilpotence_equivalence(R, args.v))
    if args.out:
        write_profile(subrings[0], args.out)
    return report


def cmd_glue(args: argparse.Namespace, config: Dict[str, Any]) -> Report:
    """Glue R/a_1 and R/a_2 along R/b = R/(a_1 + a_2)."""
    pieces = [read_profile(path) for path in (args.a1_profile, args.a2_profile, args.b_profile)]
    if args.generalized:
        depths = [piece.gfdepth for piece in pieces]
        verdicts = [piece.gwfn for piece in pieces]
    else:
        depths = [piece.fdepth for piece in pieces]
        verdicts = [piece.wfn for piece in pieces]
    report = Report(
        command="glue",
        inputs={"dims": list(args.dims), "pieces": [piece.name for piece in pieces]},
        strict=args.strict,
    )
    report.add(
        glue_fdepth(*depths, generalized=args.generalized),
        glue_wfn_check(tuple(args.dims), verdicts, equidim=args.equidim, generalized=args.generalized),
    )
    return report


def cmd_diagonal(args: argparse.Namespace, config: Dict[str, Any]) -> Report:
    """Diagonal subalgebra T_Delta and, with --f-bidegree, its hypersurface quotient."""
    R, S = read_profile(args.r_profile), read_profile(args.s_profile)
    d1, d2 = args.f_bidegree or (0, 0)
    spec = DiagonalSpec(g=args.g, h=args.h, d1=d1, d2=d2)
    T = diagonal_profile(R, S, spec)
    report = Report(
        command="diagonal",
        inputs={"R": R.name, "S": S.name, "Delta": str(spec), "f_bidegree": [d1, d2]},
        profiles=[T],
        strict=args.strict,
    )
    if args.f_bidegree is None:
        report.add(diagonal_fdepth(R, S, spec))
    else:
        conditions, fdepth, quotient = diagonal_conditions_from_profiles(
            R, S, spec, dims_match=not args.dims_mismatch
        )
        report.add(conditions, fdepth, quotient)
        if conditions.verdict == Verdict.TRUE:
            report.lines.append("conditions hold")
        if quotient.verdict == Verdict.TRUE:
            report.lines.append("(T/fT)_Δ weakly F-nilpotent")
    if args.out:
        write_profile(T, args.out)
    return report


def _fte_from_hsl(quantity: str, total: HslValue, justification: str, inputs: Dict[str, Any]) -> BoundReport:
    return BoundReport(
        quantity=quantity,
        value=total.value,
        kind=BoundKind.UPPER if total.is_known else BoundKind.UNKNOWN,
        justification=justification,
        inputs=inputs,
    )


def _profiles_for(args: argparse.Namespace, count: int) -> List[RingProfile]:
    paths = args.profiles or []
    if len(paths) != count:
        raise ValueError(f"fte {args.mode} needs {count} profile path(s), got {len(paths)}")
    return [read_profile(path) for path in paths]


def cmd_fte(args: argparse.Namespace, config: Dict[str, Any]) -> Report:
    """Frobenius test exponent bounds."""
    allow = args.allow_upper_bounds
    report = Report(command="fte", inputs={"mode": args.mode}, strict=args.strict)

    if args.mode in ("quy", "maddox"):
        if args.d is None:
            raise ValueError(f"fte {args.mode} needs --d")
        h = parse_hsl_list(args.h, "--h", allow)
        hsl_inputs = {"d": args.d, "HSL": [str(x) for x in h]}
        if args.mode == "quy":
            bound = _fte_from_hsl(
                "Fte R", quy_fte_bound(h, args.d), "Fte R <= sum C(d, j) HSL H^j(R)", hsl_inputs
            )
        else:
            if args.N is None or args.p is None:
                raise ValueError("fte maddox needs --N and --p")
            e1 = maddox_e1(args.d, args.N, args.p)
            bound = _fte_from_hsl(
                "Fte R",
                maddox_fte_bound(h, args.d, args.N, args.p),
                "Fte R <= e_1 + sum C(d, j) HSL H^j(R), p^{e_1} >= 2^{d-1} N",
                {**hsl_inputs, "N": args.N, "p": args.p, "e_1": e1},
            )
    elif args.mode == "segre":
        R, S = _profiles_for(args, 2)
        if args.generalized:
            bound = segre_gwfn_fte_bound(R, S, args.N)
        else:
            bound = segre_fte_bound(R, S)
        bound = _require_exact_inputs(bound, allow)
    elif args.mode == "veronese":
        (R,) = _profiles_for(args, 1)
        bound = _require_exact_inputs(veronese_fte_bound(R, args.generalized, args.N), allow)
    else:
        if args.d is None:
            raise ValueError("fte glue needs --d")
        h_b = parse_hsl_list(args.h_b, "--h-b", allow)
        h_max = parse_hsl_list(args.h_max, "--h-max", allow)
        hsl_top = None
        if args.hsl_top is not None:
            hsl_top = parse_hsl_list([args.hsl_top], "--hsl-top", allow)[0]
        bound = glue_hsl_fte(h_b, h_max, args.d, case=args.case, hsl_top=hsl_top)

    report.add(bound)
    return report


# -- parser ------------------------------------------------------------------


def _add_hypersurface_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True, help="Characteristic (prime)")
    parser.add_argument("--n", type=int, default=2, help="Variables of g; dim R (default: 2)")
    parser.add_argument("--d", type=int, required=True, help="Degree of the defining form")
    parser.add_argument(
        "--g-terms",
        help='g as "e0,e1:c;..." over x_0..x_{n-1} (default: Fermat x_0^d + ... + x_{n-1}^d)',
    )
    parser.add_argument("--max-e", type=int, help="Step budget for negative degrees")


def build_parser() -> argparse.ArgumentParser:
    common = CliParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit the report as JSON")
    common.add_argument(
        "--strict",
        action="store_true",
        help="Exit 2 also on unknown profile verdicts and unmet hypotheses",
    )
    common.add_argument("--config", help="Path to frobnil.json")

    parser = CliParser(
        prog="frobnil",
        description="Frobenius nilpotence of graded rings and their constructions",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  frobnil hypersurface --p 7 --n 2 --d 4 --out quartic_p7.json
  frobnil polynomial --p 7 --dim 2 --out poly2_p7.json
  frobnil segre quartic_p7.json poly2_p7.json
  frobnil sweep --n 2 --d 4 --p-range 3..30
  frobnil fte quy --d 3 --h 0 0 1 2
        """,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_hyp = subparsers.add_parser(
        "hypersurface", parents=[common], help="Classify x_n^d - g over F_p"
    )
    _add_hypersurface_args(p_hyp)
    p_hyp.add_argument("--window-lo", type=int, help="Lowest scanned degree (default: -d * window_factor)")
    p_hyp.add_argument("--workers", type=int, help="Worker count for the window scan")
    p_hyp.add_argument("--dump-matrix", action="store_true", help="Print the degree-0 Frobenius matrix")
    p_hyp.add_argument("--out", help="Write the profile to this path")
    p_hyp.set_defaults(func=cmd_hypersurface)

    p_deg = subparsers.add_parser("degree", parents=[common], help="Verdict for one graded piece")
    _add_hypersurface_args(p_deg)
    p_deg.add_argument("--t", type=int, required=True, help="Degree of the piece")
    p_deg.add_argument("--twist", help='Multiplier u over x_0..x_n, "e0,...,en:c;..."')
    p_deg.set_defaults(func=cmd_degree)

    p_poly = subparsers.add_parser("polynomial", parents=[common], help="Polynomial ring profile")
    p_poly.add_argument("--p", type=int, required=True, help="Characteristic (prime)")
    p_poly.add_argument("--dim", type=int, required=True, help="Number of variables")
    p_poly.add_argument("--out", help="Write the profile to this path")
    p_poly.set_defaults(func=cmd_polynomial)

    p_sweep = subparsers.add_parser("sweep", parents=[common], help="Fermat hypersurfaces over a prime range")
    p_sweep.add_argument("--n", type=int, default=2, help="Variables of g (default: 2)")
    p_sweep.add_argument("--d", type=int, required=True, help="Degree of the defining form")
    p_sweep.add_argument("--p-range", required=True, help="Inclusive range LO..HI")
    p_sweep.add_argument("--max-e", type=int, help="Step budget for negative degrees")
    p_sweep.add_argument("--workers", type=int, help="Parallel primes")
    p_sweep.add_argument("--out", help="Also write the JSON report to this path")
    p_sweep.set_defaults(func=cmd_sweep)

    p_segre = subparsers.add_parser("segre", parents=[common], help="Segre product of two profiles")
    p_segre.add_argument("r_profile", help="Profile of R")
    p_segre.add_argument("s_profile", help="Profile of S")
    p_segre.add_argument(
        "--length", type=int, nargs="+", metavar="J", help="Report the length of H^J_T/0^F"
    )
    p_segre.add_argument("--out", help="Write the profile of T to this path")
    p_segre.set_defaults(func=cmd_segre)

    p_ver = subparsers.add_parser("veronese", parents=[common], help="Veronese subrings of a profile")
    p_ver.add_argument("profile", help="Profile of R")
    p_ver.add_argument("--v", type=int, nargs="+", required=True, help="Veronese degrees")
    p_ver.add_argument("--out", help="Write the profile of R^(v) (single v) to this path")
    p_ver.set_defaults(func=cmd_veronese)

    p_glue = subparsers.add_parser("glue", parents=[common], help="Glue two pieces along their intersection")
    p_glue.add_argument(
        "--dims",
        type=int,
        nargs=4,
        required=True,
        metavar=("D", "D1", "D2", "DB"),
        help="dim R, dim R/a_1, dim R/a_2, dim R/b",
    )
    p_glue.add_argument("a1_profile", help="Profile of R/a_1")
    p_glue.add_argument("a2_profile", help="Profile of R/a_2")
    p_glue.add_argument("b_profile", help="Profile of R/(a_1 + a_2)")
    p_glue.add_argument("--generalized", action="store_true", help="Use gF-depth and generalized weak F-nilpotence")
    p_glue.add_argument("--equidim", action="store_true", help="R is equidimensional")
    p_glue.set_defaults(func=cmd_glue)

    p_diag = subparsers.add_parser("diagonal", parents=[common], help="Diagonal subalgebra of R # S")
    p_diag.add_argument("r_profile", help="Profile of R")
    p_diag.add_argument("s_profile", help="Profile of S")
    p_diag.add_argument("--g", type=int, required=True, help="First entry of Delta")
    p_diag.add_argument("--h", type=int, required=True, help="Second entry of Delta")
    p_diag.add_argument(
        "--f-bidegree", type=int, nargs=2, metavar=("D1", "D2"), help="Bidegree of f for (T/fT)_Delta"
    )
    p_diag.add_argument(
        "--dims-mismatch",
        action="store_true",
        help="dim (T/fT)_Delta is not dim T_Delta - 1",
    )
    p_diag.add_argument("--out", help="Write the profile of T_Delta to this path")
    p_diag.set_defaults(func=cmd_diagonal)

    p_fte = subparsers.add_parser("fte", parents=[common], help="Frobenius test exponent bounds")
    p_fte.add_argument("mode", choices=FTE_MODES, help="Which bound to compute")
    p_fte.add_argument("profiles", nargs="*", help="Profiles for segre (2) and veronese (1)")
    p_fte.add_argument("--d", type=int, help="Dimension")
    p_fte.add_argument("--h", nargs="+", help="HSL H^j(R) for j = 0..d")
    p_fte.add_argument("--N", type=int, help="Exponent N with m^N H^j nilpotent for j < d")
    p_fte.add_argument("--p", type=int, help="Characteristic (maddox)")
    p_fte.add_argument("--generalized", action="store_true", help="Generalized weakly F-nilpotent variant")
    p_fte.add_argument("--h-b", nargs="+", help="HSL H^j(R/b) for j = 0..")
    p_fte.add_argument("--h-max", nargs="+", help="max HSL H^j(R/a_i) for j = 0..d")
    p_fte.add_argument("--case", choices=("d", "d-1"), default="d", help="dim R/b is d or d - 1")
    p_fte.add_argument("--hsl-top", help="HSL H^d(R), needed when dim R/b = d - 1")
    p_fte.add_argument(
        "--allow-upper-bounds",
        action="store_true",
        help="Accept unknown or upper-bound HSL inputs",
    )
    p_fte.set_defaults(func=cmd_fte)

    return parser


def execute(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    """Run the selected command, print its report and return the exit status."""
    try:
        report = args.func(args, config)
    except (FrobnilError, ConfigError, ValueError) as e:
        logger.debug(f"[COMMAND_FAILED] {args.command}: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR
    print(report.render(as_json=args.json))
    if report.undetermined:
        logger.info(f"[UNDETERMINED] {args.command}: {', '.join(report.undetermined)}")
    return report.exit_status
