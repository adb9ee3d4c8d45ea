import math

import numpy as np
import pytest

from cavitydress.dressed import (
    asymptotic_lower,
    asymptotic_upper,
    closed_form_pair,
    closed_form_pair_smooth,
    per_atom_frequency,
    stair_step,
)

# High-precision reference for (N=2, n=1, g=1, Omega_c=0.5): 0.5 +- sqrt(4.25)
PAIR_2_1 = (2.5615528128088303, -1.5615528128088303)


def ulps(a, b):
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) / np.spacing(scale)


def test_autler_townes_limit():
    pair = closed_form_pair(1, 4, 1.0, 0.9)
    assert pair.e_plus == 2.0 and pair.e_minus == -2.0
    for n in range(1, 10):
        pair = closed_form_pair(1, n, 1.0, 0.9)
        assert pair.e_plus == math.sqrt(n)  # no Omega_c dependence at N=1
        assert pair.e_minus == -math.sqrt(n)


def test_empty_cavity_no_splitting():
    for n_atoms in (1, 2, 17, 50):
        pair = closed_form_pair(n_atoms, 0, 1.0, 0.37)
        assert pair.e_plus == 0.0 and pair.e_minus == 0.0


def test_direct_substitution_example():
    pair = closed_form_pair(2, 1, 1.0, 0.5)
    assert ulps(pair.e_plus, PAIR_2_1[0]) <= 2
    assert ulps(pair.e_minus, PAIR_2_1[1]) <= 2


def test_no_correlation_collapse():
    pair = closed_form_pair(5, 1, 1.0, 0.0)
    assert pair.e_plus == 5.0 and pair.e_minus == -5.0
    for n_atoms in (1, 3, 10):
        for n in (1, 2, 3, 7):
            pair = closed_form_pair(n_atoms, n, 1.0, 0.0)
            assert pair.e_plus == n_atoms * 1.0 * math.sqrt(n)
            assert pair.e_minus == -pair.e_plus


def test_inversion_symmetry_random_suite():
    rng = np.random.default_rng(2026)
    for _ in range(1000):
        n_atoms = int(rng.integers(1, 201))
        n = int(rng.integers(0, 6))
        g = float(rng.uniform(0.1, 3.0))
        omega_c = float(rng.uniform(-2.0, 2.0))
        pair = closed_form_pair(n_atoms, n, g, omega_c)
        mirror = closed_form_pair(n_atoms, n, g, -omega_c)
        assert ulps(mirror.e_plus, -pair.e_minus) <= 4
        assert ulps(mirror.e_minus, -pair.e_plus) <= 4


def test_branch_product_identity_random_suite():
    rng = np.random.default_rng(2027)
    for _ in range(1000):
        n_atoms = int(rng.integers(1, 201))
        n = int(rng.integers(0, 6))
        g = float(rng.uniform(0.1, 3.0))
        omega_c = float(rng.uniform(-2.0, 2.0))
        pair = closed_form_pair(n_atoms, n, g, omega_c)
        target = -(n_atoms**2) * n * g * g
        assert ulps(pair.e_plus * pair.e_minus, target) <= 8


def test_branch_sum_identity():
    # e_plus + e_minus = N Omega_c (N-1) n, measured at the scale of the
    # larger branch (the difference of two near-cancelling branches cannot
    # beat that scale)
    rng = np.random.default_rng(2028)
    for _ in range(500):
        n_atoms = int(rng.integers(1, 201))
        n = int(rng.integers(0, 6))
        g = float(rng.uniform(0.1, 3.0))
        omega_c = float(rng.uniform(-2.0, 2.0))
        pair = closed_form_pair(n_atoms, n, g, omega_c)
        target = n_atoms * omega_c * (n_atoms - 1) * n
        scale = max(abs(pair.e_plus), abs(pair.e_minus), 1e-300)
        assert abs((pair.e_plus + pair.e_minus) - target) <= 4 * np.spacing(scale)


def test_ordering_invariant():
    rng = np.random.default_rng(2029)
    for _ in range(300):
        pair = closed_form_pair(
            int(rng.integers(1, 500)),
            int(rng.integers(0, 9)),
            float(rng.uniform(-3, 3)),
            float(rng.uniform(-3, 3)),
        )
        assert pair.e_plus >= pair.e_minus


def test_asymptotic_upper_examples():
    assert asymptotic_upper(100, 1, 0.1) == 1000.0
    pair = closed_form_pair(100, 1, 1.0, 0.1)
    assert abs(pair.e_plus / 1000.0 - 1.0) < 5e-3
    assert asymptotic_upper(1000, 2, 0.05) == 100000.0
    pair = closed_form_pair(1000, 2, 1.0, 0.05)
    assert abs(pair.e_minus) < abs(pair.e_plus)
    # relative gap is (-1/N + C/N^2) with C = g^2/(Omega_c^2 n) = 200,
    # i.e. 7.9984e-4 here
    assert abs(pair.e_plus / 100000.0 - 1.0) == pytest.approx(7.99840e-4, rel=1e-4)
    assert asymptotic_upper(2, 1, 1.0) == 4.0
    with pytest.raises(ValueError):
        asymptotic_upper(100, 1, -0.1)
    with pytest.raises(ValueError):
        asymptotic_upper(100, 1, 0.0)


def test_asymptotic_lower_examples():
    assert asymptotic_lower(1.0, 0.1) == -10.0
    pair = closed_form_pair(200, 1, 1.0, 0.1)
    assert abs(pair.e_minus - (-10.0)) <= 0.1  # within 1%
    assert asymptotic_lower(1.0, -0.1) == 10.0
    pair = closed_form_pair(200, 1, 1.0, -0.1)
    assert abs(pair.e_plus - 10.0) <= 0.1  # positive plateau g^2/|Omega_c|
    assert asymptotic_lower(2.0, 0.5) == -8.0
    with pytest.raises(ValueError):
        asymptotic_lower(1.0, 0.0)


def test_upper_convergence_rate():
    # |e_plus/(Omega_c n N^2) - 1| decays like 1/N; the clean decade sits
    # past the crossover scale g^2/(Omega_c^2 n) = 100
    ns = np.unique(np.geomspace(1000, 5000, 12).astype(int))
    errs = [
        abs(closed_form_pair(int(N), 1, 1.0, 0.1).e_plus / (0.1 * N * N) - 1.0)
        for N in ns
    ]
    slope = np.polyfit(np.log(ns), np.log(errs), 1)[0]
    assert -1.1 <= slope <= -0.9


def test_lower_convergence_rate():
    ns = np.unique(np.geomspace(1000, 5000, 12).astype(int))
    errs = [
        abs(closed_form_pair(int(N), 1, 1.0, 0.1).e_minus + 10.0) for N in ns
    ]
    slope = np.polyfit(np.log(ns), np.log(errs), 1)[0]
    assert -1.1 <= slope <= -0.9


def test_stair_step_examples():
    exact, asym = stair_step("upper", 100, 1, 1.0, 0.1)
    assert asym == 2.0 * 0.1 * 1 * 100
    assert abs(exact / asym - 1.0) < 1e-3
    exact, asym = stair_step("lower", 100, 1, 1.0, 0.1)
    assert asym == 0.001
    # N = 100 sits below the crossover N ~ 2 g^2/(Omega_c^2 n) = 200: the
    # exact lower step is still negative there, its magnitude already on
    # the (g^2/Omega_c)/N^2 curve to ~3%
    assert exact < 0.0
    assert abs(abs(exact) * 100**2 * 0.1 - 1.0) <= 5e-2
    for n_atoms in (1, 2, 10, 57):
        exact, asym = stair_step("upper", n_atoms, 1, 1.0, 0.0)
        assert exact == 1.0  # constant step g sqrt(n)
        assert asym is None


def test_stair_step_remainder_orders():
    # remainders of the asymptotic step formulas: O(1/N^2) for the growing
    # branch, O(1/N^3) for the plateau branch
    ns = np.unique(np.geomspace(2000, 20000, 10).astype(int))
    rem_upper = []
    rem_lower = []
    for N in ns:
        exact_u, asym_u = stair_step("upper", int(N), 1, 1.0, 0.1)
        exact_l, asym_l = stair_step("lower", int(N), 1, 1.0, 0.1)
        rem_upper.append(abs(exact_u - asym_u))
        rem_lower.append(abs(exact_l - asym_l))
    slope_u = np.polyfit(np.log(ns), np.log(rem_upper), 1)[0]
    slope_l = np.polyfit(np.log(ns), np.log(rem_lower), 1)[0]
    assert -2.35 <= slope_u <= -1.65
    assert -3.35 <= slope_l <= -2.65


def test_stair_step_sign_covariance():
    up_pos = stair_step("upper", 50, 1, 1.0, 0.2)
    lo_neg = stair_step("lower", 50, 1, 1.0, -0.2)
    assert up_pos[0] == pytest.approx(-lo_neg[0], abs=1e-12)
    assert up_pos[1] == -lo_neg[1]


def test_stair_step_validation():
    with pytest.raises(ValueError):
        stair_step("middle", 10, 1, 1.0, 0.1)


def test_monotone_staircase_upper():
    for omega_c in (0.3, 0.5, 1.0, 2.0):
        values = [closed_form_pair(N, 1, 1.0, omega_c).e_plus for N in range(1, 400)]
        assert all(b > a for a, b in zip(values, values[1:]))


def test_monotone_staircase_lower_past_crossover():
    # e_minus dips below the plateau and turns around at N ~ 1 + 2C with
    # C = g^2/(Omega_c^2 n); past that it increases, and past ~1 + 3C (the
    # inflection of the step size) the increments shrink as well
    for omega_c in (0.3, 0.5, 1.0):
        c = 1.0 / (omega_c * omega_c)
        start = int(math.ceil(1 + 2 * c)) + 2
        values = [
            closed_form_pair(N, 1, 1.0, omega_c).e_minus
            for N in range(start, start + 300)
        ]
        increments = [b - a for a, b in zip(values, values[1:])]
        assert all(d > 0 for d in increments)
        tail = int(math.ceil(1 + 3 * c)) + 2 - start
        shrinking = increments[tail:]
        assert all(b < a for a, b in zip(shrinking, shrinking[1:]))


def test_lower_branch_overshoot_is_real():
    # the approach to -g^2/Omega_c is not monotone from above: the branch
    # crosses the plateau and attains its minimum near N = 1 + 2C
    values = {N: closed_form_pair(N, 1, 1.0, 0.1).e_minus for N in range(2, 400)}
    minimum_at = min(values, key=values.get)
    assert minimum_at == 201
    assert values[100] == -10.0  # crosses the plateau exactly here
    assert values[minimum_at] < -10.0


def test_per_atom_frequency():
    for n_atoms in (1, 2, 10, 100):
        assert per_atom_frequency(n_atoms, 1, 1.0, 0.0) == 2.0
    # slope tends to Omega_c n per added atom
    big, bigger = 20000, 20001
    slope = per_atom_frequency(bigger, 1, 1.0, 0.1) - per_atom_frequency(big, 1, 1.0, 0.1)
    assert abs(slope - 0.1) < 1e-4
    for n_atoms in (1, 5, 33):
        assert per_atom_frequency(n_atoms, 1, 1.0, 0.1) == per_atom_frequency(
            n_atoms, 1, 1.0, -0.1
        )
    pair = closed_form_pair(7, 3, 1.2, 0.4)
    assert pair.per_atom_frequency(7) == pytest.approx(
        per_atom_frequency(7, 3, 1.2, 0.4), rel=1e-14
    )


def test_smooth_entry_point():
    # real-valued n is an extrapolation for plotting; it must agree with the
    # integer entry point on integers and reject it nowhere in between
    a = closed_form_pair(9, 2, 1.0, 0.3)
    b = closed_form_pair_smooth(9, 2.0, 1.0, 0.3)
    assert a == b
    mid = closed_form_pair_smooth(9, 2.5, 1.0, 0.3)
    assert a.e_plus < mid.e_plus < closed_form_pair(9, 3, 1.0, 0.3).e_plus
    with pytest.raises(ValueError):
        closed_form_pair(9, 2.5, 1.0, 0.3)


def test_input_validation():
    with pytest.raises(ValueError):
        closed_form_pair(0, 1, 1.0, 0.1)
    with pytest.raises(ValueError):
        closed_form_pair(3, -1, 1.0, 0.1)
    with pytest.raises(ValueError):
        closed_form_pair(3, 1, float("nan"), 0.1)
    with pytest.raises(ValueError):
        closed_form_pair(3, 1, 1.0, float("inf"))
