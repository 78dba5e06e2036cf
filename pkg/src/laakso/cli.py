"""Command-line front end.

Subcommands: spectrum, compare, dims, heat, zeta, poles.  Every run echoes
its resolved configuration in the output so results are reproducible from
the artifact alone; identical configurations produce byte-identical files.

Exit codes: 0 success, 1 validation error, 2 numerical failure,
3 reference mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import refdata
from .compare import compare_spectra
from .errors import (
    DivergenceError,
    PoleError,
    TailToleranceError,
    ValidationError,
)
from .heatzeta import (
    estimate_spectral_dimension,
    heat_trace_asymptote,
    heat_trace_grid,
    oscillation_log_period,
    poles,
    spectral_zeta_closed,
    spectral_zeta_direct,
)
from .sequences import dimensions, parse_sequence
from .spectrum import first_distinct, full_spectrum, level_spectrum


class ReferenceMismatch(Exception):
    def __init__(self, report: str):
        super().__init__(report)
        self.report = report


def _parse_t_grid(spec: str) -> np.ndarray:
    """"a:b:Nlog" -> N log-spaced points in [a, b]; a bare number -> [a]."""
    parts = spec.split(":")
    if len(parts) == 1:
        return np.array([float(parts[0])])
    if len(parts) == 3 and parts[2].endswith("log"):
        n = int(parts[2][:-3])
        if n < 1:
            raise ValidationError(f"t grid needs at least one point: {spec!r}")
        return np.geomspace(float(parts[0]), float(parts[1]), n)
    raise ValidationError(f"bad t grid {spec!r}; use a:b:Nlog or a single value")


def _parse_m_range(spec: str) -> tuple[int, int]:
    lo, _, hi = spec.partition(":")
    if not _:
        raise ValidationError(f"bad m range {spec!r}; use lo:hi")
    return int(lo), int(hi)


def _emit(args, payload: dict, csv_rows: list[list] | None, csv_header: list[str]):
    """Render payload as json or csv (config echoed either way)."""
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        for key, value in payload["config"].items():
            buf.write(f"# {key}={value}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(csv_header)
        for row in csv_rows or []:
            writer.writerow(row)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args, **extra) -> dict:
    cfg = {"command": args.command, "sequence": args.sequence, "format": args.format}
    cfg.update(extra)
    return cfg


def cmd_spectrum(args) -> int:
    seq = parse_sequence(args.sequence)
    if args.count is None and args.lambda_max is None:
        raise ValidationError("spectrum needs --count or --lambda-max")
    if args.count is not None:
        table = first_distinct(seq, args.count)
        if args.level_max is not None:
            raise ValidationError("--count and --level-max are mutually exclusive")
    elif args.level_max is not None:
        table = level_spectrum(seq, args.level_max, args.lambda_max)
    else:
        table = full_spectrum(seq, args.lambda_max)

    mismatches = []
    if args.expect == "table1":
        for i, (ref_lam, ref_mult) in enumerate(refdata.TABLE1):
            if i >= len(table.entries):
                mismatches.append(f"row {i}: missing (expected {ref_lam}, {ref_mult})")
                continue
            e = table.entries[i]
            if abs(e.value - ref_lam) > 0.005:
                mismatches.append(
                    f"row {i}: lambda {e.value:.4f} != reference {ref_lam}"
                )
            if e.multiplicity != ref_mult:
                mismatches.append(
                    f"row {i}: multiplicity {e.multiplicity} != reference {ref_mult}"
                )

    payload = {
        "config": _config(
            args,
            lambda_max=table.lambda_max,
            count=args.count,
            level_max=args.level_max,
            expect=args.expect,
        ),
        "levels_included": "all" if table.level_cap is None else table.level_cap,
        "entries": json.loads(table.to_json())["entries"],
    }
    if args.expect:
        payload["reference_diffs"] = mismatches
    rows = [[repr(e.value), e.multiplicity] for e in table.entries]
    _emit(args, payload, rows, ["lambda", "multiplicity"])
    if mismatches:
        raise ReferenceMismatch("\n".join(mismatches))
    return 0


def cmd_compare(args) -> int:
    seq = parse_sequence(args.sequence)
    report = compare_spectra(
        seq,
        args.level,
        args.mesh,
        args.k,
        rel_gap=args.rel_gap,
        seed=args.seed,
    )
    payload = {
        "config": _config(
            args,
            level=args.level,
            mesh=args.mesh,
            k=args.k,
            rel_gap=args.rel_gap,
            seed=args.seed,
        ),
        "matrix_dimension": report.matrix_dimension,
        "trust_cutoff": report.trust_cutoff,
        "k_converged": report.k_converged,
        "clusters": [{"value": v, "multiplicity": m} for v, m in report.clusters],
        "rows": [
            {
                "analytic": r.analytic_value,
                "analytic_multiplicity": r.analytic_multiplicity,
                "numeric": r.numeric_value,
                "numeric_multiplicity": r.numeric_multiplicity,
                "relative_error": r.relative_error,
                "residual": r.residual,
                "multiplicity_match": r.multiplicity_match,
            }
            for r in report.rows
        ],
        "all_multiplicities_match": report.all_multiplicities_match,
        "max_relative_error": report.max_relative_error,
    }
    rows = [
        [
            repr(r.analytic_value),
            r.analytic_multiplicity,
            repr(r.numeric_value),
            r.numeric_multiplicity,
            repr(r.relative_error),
            repr(r.residual),
        ]
        for r in report.rows
    ]
    _emit(
        args,
        payload,
        rows,
        [
            "analytic",
            "analytic_mult",
            "numeric",
            "numeric_mult",
            "rel_error",
            "residual",
        ],
    )
    if report.k_converged < min(args.k, report.matrix_dimension - 1):
        print(
            f"eigensolver converged {report.k_converged}/{args.k} pairs",
            file=sys.stderr,
        )
    if not report.compared_converged:
        return 2
    if not report.all_multiplicities_match:
        raise ReferenceMismatch("multiplicity mismatch below the trust cutoff")
    return 0


def cmd_dims(args) -> int:
    seq = parse_sequence(args.sequence)
    rep = dimensions(seq, assume_periodic=args.assume_periodic)
    payload = {
        "config": _config(args, assume_periodic=args.assume_periodic),
        "r": rep.r,
        "hausdorff": rep.hausdorff,
        "spectral": rep.spectral,
        "walk": rep.walk,
    }
    rows = [[repr(rep.r), repr(rep.hausdorff), repr(rep.spectral), repr(rep.walk)]]
    _emit(args, payload, rows, ["r", "hausdorff", "spectral", "walk"])
    return 0


def cmd_heat(args) -> int:
    seq = parse_sequence(args.sequence)
    ts = _parse_t_grid(args.t)
    samples = heat_trace_grid(seq, ts, args.tol, level_cap=args.level_cap)
    payload = {
        "config": _config(
            args,
            t=args.t,
            tol=args.tol,
            level_cap=args.level_cap,
            fit_ds=args.fit_ds,
            asymptotic=args.asymptotic,
            m_terms=args.m_terms,
        ),
        "samples": [
            {"t": s.t, "z": s.z, "tail_bound": s.tail_bound} for s in samples
        ],
    }
    csv_header = ["t", "z", "tail_bound"]
    rows = [[repr(s.t), repr(s.z), repr(s.tail_bound)] for s in samples]
    if args.asymptotic:
        asym = [heat_trace_asymptote(seq, s.t, args.m_terms) for s in samples]
        payload["asymptote"] = asym
        payload["asymptote_relative_gap"] = [
            abs(a - s.z) / s.z for a, s in zip(asym, samples)
        ]
        csv_header.append("asymptote")
        for row, a in zip(rows, asym):
            row.append(repr(a))
    if args.fit_ds:
        log_period = oscillation_log_period(seq)
        fitted = estimate_spectral_dimension(samples, log_period)
        rep = dimensions(seq)
        payload["fit"] = {
            "log_period": log_period,
            "spectral_dimension": fitted,
            "expected": rep.spectral,
        }
        payload["dimensions"] = {
            "r": rep.r,
            "hausdorff": rep.hausdorff,
            "spectral": rep.spectral,
            "walk": rep.walk,
        }
        lattice = poles(seq)
        payload["poles"] = {
            "real_part": lattice.real_part,
            "spacing": lattice.spacing,
        }
    _emit(args, payload, rows, csv_header)
    return 0


def cmd_zeta(args) -> int:
    seq = parse_sequence(args.sequence)
    values = []
    for s_text in args.s:
        s = complex(s_text)
        row = {"s": s_text}
        if args.mode in ("closed", "both"):
            z = spectral_zeta_closed(seq, s)
            row["closed"] = [z.real, z.imag]
        if args.mode in ("direct", "both"):
            z = spectral_zeta_direct(seq, s)
            row["direct"] = [z.real, z.imag]
        if args.mode == "both":
            diff = complex(*row["closed"]) - complex(*row["direct"])
            row["abs_difference"] = abs(diff)
        values.append(row)
    payload = {"config": _config(args, s=args.s, mode=args.mode), "values": values}
    rows = []
    for row in values:
        flat = [row["s"]]
        for key in ("closed", "direct"):
            if key in row:
                flat.extend([repr(row[key][0]), repr(row[key][1])])
        if "abs_difference" in row:
            flat.append(repr(row["abs_difference"]))
        rows.append(flat)
    header = ["s"]
    if args.mode in ("closed", "both"):
        header += ["closed_re", "closed_im"]
    if args.mode in ("direct", "both"):
        header += ["direct_re", "direct_im"]
    if args.mode == "both":
        header.append("abs_difference")
    _emit(args, payload, rows, header)
    return 0


def cmd_poles(args) -> int:
    seq = parse_sequence(args.sequence)
    lo, hi = _parse_m_range(args.m)
    lattice = poles(seq, (lo, hi))
    payload = {
        "config": _config(args, m=args.m),
        "real_part": lattice.real_part,
        "spacing": lattice.spacing,
        "members": [
            {"m": m, "re": p.real, "im": p.imag}
            for m, p in zip(range(lo, hi + 1), lattice.members)
        ],
    }
    rows = [
        [m, repr(p.real), repr(p.imag)]
        for m, p in zip(range(lo, hi + 1), lattice.members)
    ]
    _emit(args, payload, rows, ["m", "re", "im"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laakso",
        description="Exact and numerical Laplacian spectra of Laakso spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("-j", "--sequence", required=True, help="sequence spec: k | a,b,... | seq:a,b,...")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=None, help="eigensolver start-vector seed")

    p = sub.add_parser("spectrum", help="exact spectrum table")
    common(p)
    p.add_argument("--lambda-max", type=float, default=None)
    p.add_argument("--count", type=int, default=None, help="number of distinct eigenvalues")
    p.add_argument("--level-max", type=int, default=None)
    p.add_argument("--expect", choices=("table1",), default=None)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("compare", help="mesh eigensolver vs analytic table")
    common(p)
    p.add_argument("-n", "--level", type=int, required=True)
    p.add_argument("-m", "--mesh", type=int, required=True, help="interior points per edge")
    p.add_argument("-k", type=int, required=True, help="eigenvalue count")
    p.add_argument("--rel-gap", type=float, default=0.01)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("dims", help="dimension report")
    common(p)
    p.add_argument("--assume-periodic", action="store_true")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("heat", help="heat-kernel trace over a t grid")
    common(p)
    p.add_argument("--t", required=True, help="grid a:b:Nlog or a single t")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--level-cap", type=int, default=None)
    p.add_argument("--fit-ds", action="store_true")
    p.add_argument("--asymptotic", action="store_true")
    p.add_argument("--m-terms", type=int, default=5)
    p.set_defaults(func=cmd_heat)

    p = sub.add_parser("zeta", help="spectral zeta values")
    common(p)
    p.add_argument("--s", action="append", required=True, help="complex s, e.g. 2 or 1.5+2j (repeatable)")
    p.add_argument("--mode", choices=("closed", "direct", "both"), default="both")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("poles", help="pole lattice")
    common(p)
    p.add_argument("-m", default="-3:3", help="integer range lo:hi")
    p.set_defaults(func=cmd_poles)

    return parser


def _merge_m_range(argv: list[str]) -> list[str]:
    """Let `-m -3:3` parse: argparse reads a leading dash as a new option."""
    import re

    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (
            tok == "-m"
            and i + 1 < len(argv)
            and re.fullmatch(r"-?\d+:-?\d+", argv[i + 1])
        ):
            out.append(f"-m={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_m_range(list(argv)))
    try:
        return args.func(args)
    except ReferenceMismatch as err:
        print(f"reference mismatch:\n{err.report}", file=sys.stderr)
        return 3
    except ValidationError as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return 1
    except (TailToleranceError, PoleError, DivergenceError) as err:
        print(f"numerical failure: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
