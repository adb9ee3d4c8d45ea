"""Closed-form dressed-state energies and their large-N behavior.

The two-branch eigenvalue formula implemented here is

    E_pm = (N/2) * [ Omega_c (N-1) n  +-  sqrt(4 n g^2 + Omega_c^2 n^2 (N-1)^2) ],

with N atoms, n photons, coupling g and pair-correlation strength Omega_c
(all energies in units of g).  Limits: N = 1 gives the Autler-Townes pair
+-g sqrt(n) independent of Omega_c; n = 0 gives no splitting at all;
Omega_c = 0 collapses to +-N g sqrt(n).

Branch naming follows the +- sign, not the sign of the value: for
Omega_c < 0 the "upper" branch is the one approaching +g^2/|Omega_c|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

BRANCHES = ("upper", "lower")


@dataclass(frozen=True)
class DressedPair:
    """The +- branch pair at one (N, n); e_plus >= e_minus always."""

    e_plus: float
    e_minus: float

    def per_atom_frequency(self, n_atoms: int) -> float:
        return (self.e_plus - self.e_minus) / n_atoms


def _check_inputs(n_atoms: int, photons, g: float, omega_c: float) -> None:
    if n_atoms < 1:
        raise ValueError(f"need at least one atom, got {n_atoms}")
    if photons < 0:
        raise ValueError(f"photon number must be >= 0, got {photons}")
    for name, value in (("g", g), ("omega_c", omega_c)):
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


def _pair(n_atoms: int, photons: float, g: float, omega_c: float) -> DressedPair:
    N = float(n_atoms)
    s = omega_c * photons * (N - 1.0)
    if s == 0.0:
        # Omega_c = 0, n = 0 or N = 1: exact collapse to +-N g sqrt(n).
        mag = N * abs(g) * math.sqrt(photons)
        return DressedPair(mag, -mag)
    d = math.hypot(s, 2.0 * g * math.sqrt(photons))
    # The branch opposite in sign to s cancels catastrophically when
    # |s| >> 2 g sqrt(n); recover it from e_plus * e_minus = -N^2 n g^2.
    product = -(N * N) * photons * (g * g)
    if s > 0.0:
        e_plus = 0.5 * N * (s + d)
        e_minus = product / e_plus if e_plus != 0.0 else 0.5 * N * (s - d)
        return DressedPair(e_plus, e_minus)
    e_minus = 0.5 * N * (s - d)
    e_plus = product / e_minus if e_minus != 0.0 else 0.5 * N * (s + d)
    return DressedPair(e_plus, e_minus)


def closed_form_pair(n_atoms: int, photons: int, g: float, omega_c: float) -> DressedPair:
    """Both branches of the closed-form eigenvalue pair at integer photon number."""
    _check_inputs(n_atoms, photons, g, omega_c)
    if photons != int(photons):
        raise ValueError(f"photon number must be an integer, got {photons!r}")
    return _pair(n_atoms, int(photons), g, omega_c)


def closed_form_pair_smooth(
    n_atoms: int, photons: float, g: float, omega_c: float
) -> DressedPair:
    """Same formula at real-valued photon number.

    Only for plotting smooth curves; non-integer n is an extrapolation of
    the model, not part of it.
    """
    _check_inputs(n_atoms, photons, g, omega_c)
    return _pair(n_atoms, float(photons), g, omega_c)


def asymptotic_upper(n_atoms: int, photons: int, omega_c: float) -> float:
    """Large-N asymptote of the upper branch, Omega_c n N^2 (Omega_c > 0).

    For Omega_c <= 0 the N^2 growth belongs to the lower branch instead
    (inversion symmetry); callers should swap branches, so this rejects it.
    """
    if omega_c <= 0.0:
        raise ValueError(
            f"upper-branch N^2 asymptote needs omega_c > 0, got {omega_c}"
        )
    if n_atoms < 2:
        raise ValueError(f"asymptote needs N >= 2, got {n_atoms}")
    if photons < 1:
        raise ValueError(f"asymptote needs n >= 1, got {photons}")
    return omega_c * photons * n_atoms * n_atoms


def asymptotic_lower(g: float, omega_c: float) -> float:
    """Large-N plateau of the lower branch, -g^2/Omega_c.

    Negative for Omega_c > 0; for Omega_c < 0 this is the positive plateau
    +g^2/|Omega_c| that the upper branch approaches.  Omega_c = 0 has no
    finite plateau (the spectrum walks off linearly) and is rejected.
    """
    if omega_c == 0.0:
        raise ValueError("no finite plateau at omega_c = 0")
    return -(g * g) / omega_c


def stair_step(
    branch: str, n_atoms: int, photons: int, g: float, omega_c: float
) -> Tuple[float, Optional[float]]:
    """Stair step E(N+1) - E(N) of one branch: (exact, asymptotic) pair.

    The exact step comes from differencing the closed form.  The asymptotic
    prediction is 2 Omega_c n N for the N^2-growing branch and
    (g^2/Omega_c)/N^2 for the plateau branch; which branch is which follows
    the sign of Omega_c.  At Omega_c = 0 the exact step is still defined
    (the upper step is g sqrt(n) for every N) but there is no asymptotic
    prediction, so that slot is None.
    """
    if branch not in BRANCHES:
        raise ValueError(f"branch must be one of {BRANCHES}, got {branch!r}")
    here = closed_form_pair(n_atoms, photons, g, omega_c)
    there = closed_form_pair(n_atoms + 1, photons, g, omega_c)
    if branch == "upper":
        exact = there.e_plus - here.e_plus
    else:
        exact = there.e_minus - here.e_minus
    if omega_c == 0.0:
        return exact, None
    growing = 2.0 * omega_c * photons * n_atoms
    plateau = (g * g / omega_c) / (n_atoms * n_atoms)
    if branch == "upper":
        asym = growing if omega_c > 0.0 else plateau
    else:
        asym = plateau if omega_c > 0.0 else growing
    return exact, asym


def per_atom_frequency(n_atoms: int, photons: int, g: float, omega_c: float) -> float:
    """Branch splitting per atom, (e_plus - e_minus)/N.

    Equals sqrt(4 n g^2 + Omega_c^2 n^2 (N-1)^2): constant 2 g sqrt(n) when
    Omega_c = 0, asymptotically linear in N (slope |Omega_c| n) otherwise,
    and even in Omega_c.
    """
    _check_inputs(n_atoms, photons, g, omega_c)
    s = omega_c * photons * (n_atoms - 1.0)
    return math.hypot(s, 2.0 * g * math.sqrt(photons))
