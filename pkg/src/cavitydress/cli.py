"""Command-line front end.

Subcommands: eig, closed, sweep, fig, verify, dump.  Every run is a pure
function of its argument vector; stdout is the default sink so the plotting
front end can pipe.  Exit status: 0 success, 1 usage error, 2 numerical
failure.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from pathlib import Path
from typing import IO, List, Optional, Tuple

from . import dressed, sweep
from .eigensolve import ConvergenceError, eigh
from .hamiltonian import PAIR_CONVENTIONS, ModelParams, build
from .hilbert import FULL, SYMMETRIC

_EPILOG = (
    "g is the unit of energy: corr (Omega_c), eigenvalues and steps are "
    "all reported in units of g."
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract wants 1.
    def error(self, message):
        raise UsageError(message)


def _formatter(prog):
    return argparse.HelpFormatter(prog, width=96)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--out", metavar="PATH", default=None, help="output file (default: stdout)"
    )
    parser.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    parser.add_argument(
        "--quiet", action="store_true", help="suppress informational notes on stderr"
    )


def _add_model_flags(parser, atoms=False, block=False, photons=False, space=False):
    if atoms:
        parser.add_argument(
            "-N", "--atoms", type=int, required=True, help="number of atoms N"
        )
    if block:
        parser.add_argument(
            "-M", "--block", type=int, required=True,
            help="total-excitation block label M",
        )
    if photons:
        parser.add_argument(
            "-n", "--photons", type=int, required=True, help="cavity photon number n"
        )
    parser.add_argument(
        "-g", "--coupling", type=float, default=1.0,
        help="atom-field coupling g (default 1, the energy unit)",
    )
    parser.add_argument(
        "-c", "--corr", type=float, default=0.0,
        help="pair-correlation strength Omega_c in units of g (default 0)",
    )
    if space:
        parser.add_argument(
            "--space", choices=(FULL, SYMMETRIC), default=FULL,
            help="product space or permutation-symmetric subspace",
        )
        parser.add_argument(
            "--pair-convention", choices=PAIR_CONVENTIONS, default="ordered",
            help="pair-sum convention for the correlation term",
        )


def _add_range_flags(parser) -> None:
    parser.add_argument(
        "--n-from", type=int, required=True, metavar="A", help="first atom number N"
    )
    parser.add_argument(
        "--n-to", type=int, required=True, metavar="B", help="last atom number N"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cavitydress",
        description=(
            "Collective dressed-state spectra of N two-level atoms coupled to "
            "a cavity mode with a photon-assisted pair-correlation term."
        ),
        epilog=_EPILOG,
        formatter_class=_formatter,
    )
    subs = parser.add_subparsers(dest="command", metavar="COMMAND")
    subs.required = True

    p = subs.add_parser(
        "eig", help="diagonalize one block exactly", epilog=_EPILOG,
        formatter_class=_formatter,
    )
    _add_model_flags(p, atoms=True, block=True, space=True)
    p.add_argument("--vectors", action="store_true", help="include eigenvectors")
    _add_common(p)

    p = subs.add_parser(
        "closed",
        help="closed-form branch pair, asymptotics, stair steps, per-atom frequency",
        epilog=_EPILOG, formatter_class=_formatter,
    )
    _add_model_flags(p, atoms=True, photons=True)
    _add_common(p)

    p = subs.add_parser(
        "sweep", help="staircase series over a range of atom numbers",
        epilog=_EPILOG, formatter_class=_formatter,
    )
    _add_model_flags(p, photons=True)
    _add_range_flags(p)
    p.add_argument(
        "--method", choices=("closed", "full", "symmetric"), default="closed",
        help="closed form or exact diagonalization (full/symmetric space)",
    )
    p.add_argument(
        "--workers", type=int, default=1,
        help="parallel row evaluation (output is identical for any setting)",
    )
    _add_common(p)

    p = subs.add_parser(
        "fig", help="emit the dataset(s) behind one of the six figures",
        epilog=_EPILOG, formatter_class=_formatter,
    )
    p.add_argument("fig_id", type=int, choices=sweep.FIGURE_IDS, metavar="FIG",
                   help="figure number 1..6")
    p.add_argument("-n", "--photons", type=int, default=1,
                   help="cavity photon number n (default 1)")
    p.add_argument("-g", "--coupling", type=float, default=1.0,
                   help="atom-field coupling g (default 1)")
    p.add_argument("-c", "--corr", type=float, default=0.1,
                   help="correlation magnitude for the +- series (default 0.1)")
    _add_range_flags_optional(p)
    p.add_argument(
        "--method", choices=("closed", "full", "symmetric"), default="closed",
        help="evaluation method for every series",
    )
    p.add_argument("--workers", type=int, default=1,
                   help="parallel row evaluation (output is identical for any setting)")
    _add_common(p)

    p = subs.add_parser(
        "verify",
        help="gap report: closed form vs symmetric-space exact diagonalization",
        epilog=_EPILOG, formatter_class=_formatter,
    )
    _add_model_flags(p, photons=True)
    _add_range_flags(p)
    _add_common(p)

    p = subs.add_parser(
        "dump", help="matrix triplets (row, col, value) of one block",
        epilog=_EPILOG, formatter_class=_formatter,
    )
    _add_model_flags(p, atoms=True, block=True, space=True)
    _add_common(p)

    return parser


def _add_range_flags_optional(parser) -> None:
    parser.add_argument("--n-from", type=int, default=1, metavar="A",
                        help="first atom number N (default 1)")
    parser.add_argument("--n-to", type=int, default=40, metavar="B",
                        help="last atom number N (default 40)")


def _float_cell(value: Optional[float]) -> str:
    return "" if value is None else repr(float(value))


def _json_dump(payload, sink: IO[str]) -> None:
    import json

    json.dump(payload, sink, indent=2)
    sink.write("\n")


def _cmd_eig(args, docs: List[Tuple[Optional[str], callable]]) -> None:
    params = ModelParams(
        n_atoms=args.atoms, g=args.coupling, omega_c=args.corr,
        block=args.block, pair_convention=args.pair_convention,
    )
    spectrum = eigh(build(params, args.space), want_vectors=args.vectors)

    def write(sink: IO[str], fmt: str) -> None:
        values = [float(v) for v in spectrum.eigenvalues]
        if fmt == "json":
            payload = {
                "atoms": args.atoms, "block": args.block, "space": args.space,
                "coupling": args.coupling, "corr": args.corr,
                "eigenvalues": values,
                "max_residual": spectrum.max_residual,
            }
            if spectrum.eigenvectors is not None:
                payload["eigenvectors"] = [
                    [float(c) for c in spectrum.eigenvectors[:, k]]
                    for k in range(spectrum.dim)
                ]
            _json_dump(payload, sink)
            return
        if spectrum.eigenvectors is None:
            sink.write("index,eigenvalue\n")
            for k, value in enumerate(values):
                sink.write(f"{k},{value!r}\n")
        else:
            comps = ",".join(f"v{i}" for i in range(spectrum.dim))
            sink.write(f"index,eigenvalue,{comps}\n")
            for k, value in enumerate(values):
                column = ",".join(
                    repr(float(c)) for c in spectrum.eigenvectors[:, k]
                )
                sink.write(f"{k},{value!r},{column}\n")

    docs.append((None, write))


def _cmd_closed(args, docs) -> None:
    pair = dressed.closed_form_pair(args.atoms, args.photons, args.coupling, args.corr)
    per_atom = dressed.per_atom_frequency(
        args.atoms, args.photons, args.coupling, args.corr
    )
    asym_upper = None
    if args.corr > 0.0 and args.atoms >= 2 and args.photons >= 1:
        asym_upper = dressed.asymptotic_upper(args.atoms, args.photons, args.corr)
    asym_lower = None
    if args.corr != 0.0:
        asym_lower = dressed.asymptotic_lower(args.coupling, args.corr)
    step_up, step_up_asym = dressed.stair_step(
        "upper", args.atoms, args.photons, args.coupling, args.corr
    )
    step_lo, step_lo_asym = dressed.stair_step(
        "lower", args.atoms, args.photons, args.coupling, args.corr
    )
    columns = (
        "e_plus", "e_minus", "per_atom", "asym_upper", "asym_lower",
        "step_upper_exact", "step_upper_asym", "step_lower_exact",
        "step_lower_asym",
    )
    values = (
        pair.e_plus, pair.e_minus, per_atom, asym_upper, asym_lower,
        step_up, step_up_asym, step_lo, step_lo_asym,
    )

    def write(sink: IO[str], fmt: str) -> None:
        if fmt == "json":
            _json_dump(dict(zip(columns, values)), sink)
        else:
            sink.write(",".join(columns) + "\n")
            sink.write(",".join(_float_cell(v) for v in values) + "\n")

    docs.append((None, write))


def _cmd_sweep(args, docs) -> None:
    series = sweep.staircase(
        args.photons, args.coupling, args.corr,
        range(args.n_from, args.n_to + 1),
        method=args.method, workers=args.workers,
    )
    docs.append((None, lambda sink, fmt: sweep.write_series(series, sink, fmt)))


def _cmd_fig(args, docs) -> None:
    series_list = sweep.figure_dataset(
        args.fig_id, photons=args.photons, g=args.coupling, corr=args.corr,
        n_from=args.n_from, n_to=args.n_to, method=args.method,
        workers=args.workers,
    )
    for series in series_list:
        label = series.label if len(series_list) > 1 else None
        docs.append(
            (label, lambda sink, fmt, s=series: sweep.write_series(s, sink, fmt))
        )


def _cmd_verify(args, docs) -> None:
    report = sweep.verify(
        args.photons, args.coupling, args.corr,
        range(args.n_from, args.n_to + 1),
    )
    docs.append((None, lambda sink, fmt: sweep.write_series(report, sink, fmt)))


def _cmd_dump(args, docs) -> None:
    params = ModelParams(
        n_atoms=args.atoms, g=args.coupling, omega_c=args.corr,
        block=args.block, pair_convention=args.pair_convention,
    )
    matrix = build(params, args.space)
    triplets = list(matrix.triplets())

    def write(sink: IO[str], fmt: str) -> None:
        if fmt == "json":
            payload = {
                "atoms": args.atoms, "block": args.block, "space": args.space,
                "dim": matrix.dim,
                "triplets": [[r, c, v] for r, c, v in triplets],
            }
            _json_dump(payload, sink)
        else:
            sink.write("row,col,value\n")
            for r, c, v in triplets:
                sink.write(f"{r},{c},{v!r}\n")

    docs.append((None, write))


_COMMANDS = {
    "eig": _cmd_eig,
    "closed": _cmd_closed,
    "sweep": _cmd_sweep,
    "fig": _cmd_fig,
    "verify": _cmd_verify,
    "dump": _cmd_dump,
}


def _emit(docs, args) -> None:
    """Write each document to stdout or to per-document files.

    Multi-document commands (fig 3..6) with --out write one file per series,
    suffixing the label: fig3.csv -> fig3_poscorr.csv, fig3_nocorr.csv.
    """
    fmt = args.format
    if args.out is None:
        first = True
        for label, write in docs:
            if not first:
                sys.stdout.write("\n")
            write(sys.stdout, fmt)
            first = False
        return
    base = Path(args.out)
    for label, write in docs:
        path = base if label is None else base.with_name(
            f"{base.stem}_{label}{base.suffix}"
        )
        try:
            with open(path, "w", encoding="utf-8", newline="") as sink:
                write(sink, fmt)
        except OSError as exc:
            raise UsageError(f"cannot write {path}: {exc}") from exc
        if not args.quiet:
            print(f"wrote {path}", file=sys.stderr)


def run(argv: Optional[List[str]] = None,
        stdout: Optional[IO[str]] = None,
        stderr: Optional[IO[str]] = None) -> int:
    """Parse argv and execute; returns the exit status without exiting."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        except SystemExit as exc:  # --help
            return int(exc.code or 0)
        docs: List[Tuple[Optional[str], callable]] = []
        try:
            _COMMANDS[args.command](args, docs)
            _emit(docs, args)
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        except (ValueError, OverflowError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        except ConvergenceError as exc:
            print(f"numerical failure: {exc}", file=sys.stderr)
            return 2
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
