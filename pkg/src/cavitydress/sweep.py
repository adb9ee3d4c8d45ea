"""Eigenvalue-versus-N datasets: the staircase spectra behind every figure.

A StaircaseSeries holds one (n, g, omega_c) curve evaluated over a range of
atom numbers, either from the closed form or from exact diagonalization of
the block with M = n total excitations (the identification of that block
with the closed form is an interpretation; the verify() report measures the
gap between the two instead of asserting it).

Serialized contract, consumed by the plotting front end:

* CSV: header ``N,e_plus,e_minus,per_atom,step_upper,step_lower``, rows in
  N order, shortest round-trip decimals, comma separator, LF line ends,
  final newline.
* JSON: one object with ``params``, ``method`` and ``points`` (numeric rows
  in the same column order).
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable, List, Tuple

from .dressed import closed_form_pair
from .eigensolve import ConvergenceError, eigh
from .hamiltonian import ModelParams, build_full, build_symmetric
from .hilbert import SYMMETRIC, block_dimension

CLOSED_FORM = "ClosedForm"
FULL_ED = "FullED"
SYMMETRIC_ED = "SymmetricED"
METHODS = (CLOSED_FORM, FULL_ED, SYMMETRIC_ED)

_METHOD_ALIASES = {
    "closed": CLOSED_FORM,
    "full": FULL_ED,
    "symmetric": SYMMETRIC_ED,
    CLOSED_FORM: CLOSED_FORM,
    FULL_ED: FULL_ED,
    SYMMETRIC_ED: SYMMETRIC_ED,
}

SERIES_HEADER = "N,e_plus,e_minus,per_atom,step_upper,step_lower"
REPORT_HEADER = (
    "N,dim,e_plus_closed,e_minus_closed,ed_upper,ed_lower,"
    "gap_upper,gap_lower,rel_upper,rel_lower"
)

FIGURE_IDS = (1, 2, 3, 4, 5, 6)


def normalize_method(name: str) -> str:
    try:
        return _METHOD_ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown method {name!r}") from None


@dataclass(frozen=True)
class StaircaseSeries:
    """points rows: (N, e_plus, e_minus, per_atom, step_upper, step_lower)."""

    photons: int
    g: float
    omega_c: float
    method: str
    points: Tuple[Tuple[int, float, float, float, float, float], ...]

    @property
    def label(self) -> str:
        """Sign-of-correlation tag, used for file naming and legends."""
        if self.omega_c == 0.0:
            return "nocorr"
        return "poscorr" if self.omega_c > 0.0 else "negcorr"

    def column(self, name: str) -> List[float]:
        idx = SERIES_HEADER.split(",").index(name)
        return [row[idx] for row in self.points]


@dataclass(frozen=True)
class VerifyReport:
    """Measured gaps between the closed-form pair and the nearest symmetric-
    space eigenvalues, per N.  Rows: (N, dim, e_plus_closed, e_minus_closed,
    ed_upper, ed_lower, gap_upper, gap_lower, rel_upper, rel_lower).  The
    report records the gaps; it never judges them."""

    photons: int
    g: float
    omega_c: float
    rows: Tuple[Tuple, ...]


def _pair_at(n_atoms: int, photons: int, g: float, omega_c: float, method: str):
    if method == CLOSED_FORM:
        pair = closed_form_pair(n_atoms, photons, g, omega_c)
        return pair.e_plus, pair.e_minus
    params = ModelParams(n_atoms=n_atoms, g=g, omega_c=omega_c, block=photons)
    build = build_symmetric if method == SYMMETRIC_ED else build_full
    try:
        spectrum = eigh(build(params))
    except ConvergenceError as exc:
        raise ConvergenceError(f"at N={n_atoms}: {exc}") from exc
    return float(spectrum.eigenvalues[-1]), float(spectrum.eigenvalues[0])


def staircase(
    photons: int,
    g: float,
    omega_c: float,
    n_range: Iterable[int],
    method: str = CLOSED_FORM,
    workers: int = 1,
) -> StaircaseSeries:
    """One row per N in n_range (strictly ascending, non-empty).

    The step columns difference each branch against N+1, evaluating one
    point past the end of the range so every row stays rectangular.  Rows
    are independent and may be evaluated in parallel; the output order is
    ascending N regardless.
    """
    method = normalize_method(method)
    ns = [int(n) for n in n_range]
    if not ns:
        raise ValueError("n_range must be non-empty")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("n_range must be strictly ascending")
    if ns[0] < 1:
        raise ValueError(f"atom numbers must be >= 1, got {ns[0]}")
    # pairs at every requested N plus each N+1 needed for the steps
    wanted = sorted(set(ns) | {n + 1 for n in ns})

    def job(n_atoms: int):
        return _pair_at(n_atoms, photons, g, omega_c, method)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pairs = dict(zip(wanted, pool.map(job, wanted)))
    else:
        pairs = {n: job(n) for n in wanted}
    points = []
    for n_atoms in ns:
        ep, em = pairs[n_atoms]
        ep_next, em_next = pairs[n_atoms + 1]
        points.append(
            (
                n_atoms,
                ep,
                em,
                (ep - em) / n_atoms,
                ep_next - ep,
                em_next - em,
            )
        )
    return StaircaseSeries(photons, g, omega_c, method, tuple(points))


def figure_dataset(
    fig_id: int,
    photons: int = 1,
    g: float = 1.0,
    corr: float = 0.1,
    n_from: int = 1,
    n_to: int = 40,
    method: str = CLOSED_FORM,
    workers: int = 1,
) -> List[StaircaseSeries]:
    """The series overlay each figure shows.

    fig1: no correlation.  fig2: positive correlation.  fig3/fig4: positive/
    negative correlation against the uncorrelated staircase.  fig5: positive
    against negative.  fig6: all three, for the per-atom frequency panel.
    ``corr`` is the correlation magnitude used for the +- series.
    """
    if fig_id not in FIGURE_IDS:
        raise ValueError(f"figure id must be in {FIGURE_IDS}, got {fig_id}")
    if corr <= 0.0:
        raise ValueError(f"correlation magnitude must be positive, got {corr}")

    def series(omega_c: float) -> StaircaseSeries:
        return staircase(
            photons, g, omega_c, range(n_from, n_to + 1), method, workers
        )

    if fig_id == 1:
        return [series(0.0)]
    if fig_id == 2:
        return [series(corr)]
    if fig_id == 3:
        return [series(corr), series(0.0)]
    if fig_id == 4:
        return [series(-corr), series(0.0)]
    if fig_id == 5:
        return [series(corr), series(-corr)]
    return [series(corr), series(-corr), series(0.0)]


def verify(
    photons: int,
    g: float,
    omega_c: float,
    n_range: Iterable[int],
) -> VerifyReport:
    """Measure, per N, how far the closed-form pair sits from the nearest
    eigenvalues of the symmetric-space block with M = n."""
    rows = []
    for n_atoms in n_range:
        pair = closed_form_pair(n_atoms, photons, g, omega_c)
        params = ModelParams(n_atoms=n_atoms, g=g, omega_c=omega_c, block=photons)
        try:
            spectrum = eigh(build_symmetric(params))
        except ConvergenceError as exc:
            raise ConvergenceError(f"at N={n_atoms}: {exc}") from exc
        values = spectrum.eigenvalues
        ed_upper = float(min(values, key=lambda v: abs(v - pair.e_plus)))
        ed_lower = float(min(values, key=lambda v: abs(v - pair.e_minus)))
        gap_upper = abs(ed_upper - pair.e_plus)
        gap_lower = abs(ed_lower - pair.e_minus)
        scale = max(abs(pair.e_plus), abs(pair.e_minus), 1e-300)
        rows.append(
            (
                n_atoms,
                block_dimension(SYMMETRIC, n_atoms, photons),
                pair.e_plus,
                pair.e_minus,
                ed_upper,
                ed_lower,
                gap_upper,
                gap_lower,
                gap_upper / scale,
                gap_lower / scale,
            )
        )
    return VerifyReport(photons, g, omega_c, tuple(rows))


def _format_cell(value) -> str:
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _series_json_object(series: StaircaseSeries) -> dict:
    return {
        "params": {
            "photons": series.photons,
            "coupling": series.g,
            "corr": series.omega_c,
        },
        "method": series.method,
        "points": [list(row) for row in series.points],
    }


def _report_json_object(report: VerifyReport) -> dict:
    return {
        "params": {
            "photons": report.photons,
            "coupling": report.g,
            "corr": report.omega_c,
        },
        "columns": REPORT_HEADER.split(","),
        "rows": [list(row) for row in report.rows],
    }


def write_series(obj, sink: IO[str], fmt: str = "csv") -> None:
    """Serialize a StaircaseSeries or VerifyReport to an open text sink."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be csv or json, got {fmt!r}")
    if isinstance(obj, StaircaseSeries):
        header, rows, payload = SERIES_HEADER, obj.points, _series_json_object(obj)
    elif isinstance(obj, VerifyReport):
        header, rows, payload = REPORT_HEADER, obj.rows, _report_json_object(obj)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    if fmt == "csv":
        sink.write(header + "\n")
        for row in rows:
            sink.write(",".join(_format_cell(cell) for cell in row) + "\n")
    else:
        json.dump(payload, sink, indent=2)
        sink.write("\n")


def read_series_json(text: str) -> StaircaseSeries:
    """Inverse of write_series for the JSON format."""
    payload = json.loads(text)
    points = tuple(
        (int(r[0]), float(r[1]), float(r[2]), float(r[3]), float(r[4]), float(r[5]))
        for r in payload["points"]
    )
    return StaircaseSeries(
        photons=int(payload["params"]["photons"]),
        g=float(payload["params"]["coupling"]),
        omega_c=float(payload["params"]["corr"]),
        method=payload["method"],
        points=points,
    )


def read_points_csv(text: str) -> Tuple[Tuple[int, float, float, float, float, float], ...]:
    """Parse the CSV numeric content (header is validated exactly)."""
    lines = text.split("\n")
    if not lines or lines[0] != SERIES_HEADER:
        raise ValueError(f"bad CSV header: {lines[0] if lines else ''!r}")
    rows = []
    for line in lines[1:]:
        if not line:
            continue
        cells = line.split(",")
        rows.append(
            (
                int(cells[0]),
                float(cells[1]),
                float(cells[2]),
                float(cells[3]),
                float(cells[4]),
                float(cells[5]),
            )
        )
    return tuple(rows)
