"""Acceptance gate: one test per numbered criterion, at the stated tolerances.

Each test prints a single summary line so a -s run reads as a checklist; the
pass/fail status itself is the pytest outcome.
"""
import math
import time

import numpy as np
import pytest

from aqsearch import (
    AdiabaticCriterion,
    QState,
    Schedule,
    SearchProblem,
    action_integral,
    adiabatic_t_min,
    concurrence,
    entanglement_trace,
    entropy_of_entanglement,
    ground_state_trace,
    grover_search,
    hamiltonian_at,
    hermitian_eig,
    local_schedule,
    min_gap,
    optimal_iterations,
    partial_trace,
    propagate,
    reduced_eigenvalues,
    spectrum_trace,
)
from aqsearch.refine import refine_maximum, refine_minimum
from oracles import (
    ENTROPY_MAX_N2,
    block_quantities,
    grover_probability,
    ground_vector_n2,
    random_state,
    random_unitary,
)

EPSILON = 0.1


@pytest.fixture(scope="module")
def scaling_data():
    """T_min (linear), local schedule, and action ratio for n = 2..10, computed once."""
    crit = AdiabaticCriterion(epsilon=EPSILON, grid_points=97)
    rows = {}
    start = time.perf_counter()
    for n in range(2, 11):
        problem = SearchProblem(n=n)
        t_linear = adiabatic_t_min(problem, Schedule.linear(), crit)
        local = local_schedule(problem, crit)
        action = action_integral(local, local.total_time)
        ratio = action / (math.sqrt(2**n) / 4.0)
        rows[n] = (t_linear, local, ratio)
    return rows, time.perf_counter() - start


def _report(line):
    print(f"\n[acceptance] {line}")


def test_criterion_1_closed_form_ground_state():
    # n=2, uniform start, linear path: ground state matches the closed-form
    # vector within 1e-10 per component on a 1001-point grid, in under 1 s
    start = time.perf_counter()
    problem = SearchProblem(n=2)
    trace = ground_state_trace(problem, Schedule.linear(), 1001)
    worst = 0.0
    for sample in trace.samples:
        want = ground_vector_n2(sample.s)
        worst = max(worst, float(np.max(np.abs(sample.state.amplitudes - want))))
    elapsed = time.perf_counter() - start
    _report(f"criterion 1: worst component error {worst:.3e} in {elapsed:.2f}s")
    assert worst <= 1e-10
    assert elapsed < 1.0


def test_criterion_2_gap_against_block_oracle():
    # g_min = 0.5 at s = 0.5 for n=2 (1e-10); dense-eig gap equals the
    # independent two-level reduction within 1e-10 at every node; under 30 s
    start = time.perf_counter()
    problem = SearchProblem(n=2)
    sch = Schedule.linear()
    trace = spectrum_trace(problem, sch, 65)

    def gap_at(s):
        return block_quantities(4, s)[2]

    s_star, g_min = min_gap(trace, gap_fn=gap_at)
    assert abs(g_min - 0.5) <= 1e-10
    assert abs(s_star - 0.5) <= 1e-10

    worst = 0.0
    grids = {9: 33, 10: 17}
    for n in range(2, 11):
        grid = grids.get(n, 65)
        dense = spectrum_trace(SearchProblem(n=n), sch, grid)
        for point in dense:
            gap = block_quantities(2**n, point.s)[2]
            worst = max(worst, abs(point.gap - gap))
    elapsed = time.perf_counter() - start
    _report(f"criterion 2: g_min {g_min:.12f} at {s_star:.12f}, "
            f"worst gap error {worst:.3e} in {elapsed:.1f}s")
    assert worst <= 1e-10
    assert elapsed < 30.0


def test_criterion_3_entropy_endpoints_and_peak():
    # uniform start: endpoint entropies <= 1e-10, interior max at 0.5 +- 1e-6
    # matching the frozen closed-form value to 1e-9; Bell start: 1 -> 0
    problem = SearchProblem(n=2)
    sch = Schedule.linear()
    trace = ground_state_trace(problem, sch, 1001)
    points = entanglement_trace(trace)
    entropies = np.array([p.entropy for p in points])
    assert entropies[0] <= 1e-10
    assert entropies[-1] <= 1e-10

    def entropy_at(s):
        dec = hermitian_eig(hamiltonian_at(problem, sch, s))
        return entropy_of_entanglement(QState(2, dec.eigenvectors[:, 0]), [0])

    k = int(np.argmax(entropies))
    svals = np.array([p.s for p in points])
    s_max, peak = refine_maximum(entropy_at, float(svals[k - 1]), float(svals[k + 1]))
    if entropies[k] > peak:
        s_max, peak = float(svals[k]), float(entropies[k])
    assert abs(s_max - 0.5) <= 1e-6
    assert abs(peak - ENTROPY_MAX_N2) <= 1e-9

    bell = SearchProblem(n=2, initial=QState.bell())
    bell_points = entanglement_trace(ground_state_trace(bell, sch, 1001))
    assert abs(bell_points[0].entropy - 1.0) <= 1e-10
    assert bell_points[-1].entropy <= 1e-10
    _report(f"criterion 3: peak {peak:.12f} at s = {s_max:.9f}, "
            f"bell endpoints ({bell_points[0].entropy:.12f}, {bell_points[-1].entropy:.2e})")


def test_criterion_4_runtime_scaling(scaling_data):
    # log-log slopes 1.0 +- 0.1 (linear) and 0.5 +- 0.1 (local) over n=2..10;
    # halving epsilon doubles T_min to 1e-12 relative; under 2 min
    rows, setup_time = scaling_data
    start = time.perf_counter()
    sizes = np.array([2.0**n for n in rows])
    t_lin = np.array([rows[n][0] for n in rows])
    t_loc = np.array([rows[n][1].total_time for n in rows])
    slope_lin = float(np.polyfit(np.log(sizes), np.log(t_lin), 1)[0])
    slope_loc = float(np.polyfit(np.log(sizes), np.log(t_loc), 1)[0])
    assert abs(slope_lin - 1.0) <= 0.1
    assert abs(slope_loc - 0.5) <= 0.1

    problem = SearchProblem(n=3)
    crit_full = AdiabaticCriterion(epsilon=EPSILON, grid_points=129)
    crit_half = AdiabaticCriterion(epsilon=EPSILON / 2, grid_points=129)
    t_full = adiabatic_t_min(problem, Schedule.linear(), crit_full)
    t_half = adiabatic_t_min(problem, Schedule.linear(), crit_half)
    assert abs(t_half - 2.0 * t_full) <= 1e-12 * t_half
    loc_full = local_schedule(problem, crit_full)
    loc_half = local_schedule(problem, crit_half)
    assert abs(loc_half.total_time - 2.0 * loc_full.total_time) <= 1e-12 * loc_half.total_time

    elapsed = setup_time + (time.perf_counter() - start)
    _report(f"criterion 4: slopes {slope_lin:.4f} (linear), {slope_loc:.4f} (local) "
            f"in {elapsed:.1f}s")
    assert elapsed < 120.0


def test_criterion_5_discrete_iteration_cross_check():
    # N=4 exact after one iteration; P(k0) >= 1 - 1/N; sin^2 law to 1e-9; under 5 s
    start = time.perf_counter()
    exact = grover_search(SearchProblem(n=2), k_max=1)
    assert abs(exact.iterations[1][1] - 1.0) <= 1e-12

    worst = 0.0
    for n in range(2, 11):
        N = 2**n
        k0 = optimal_iterations(N)
        run = grover_search(SearchProblem(n=n), k_max=k0)
        assert run.iterations[k0][1] >= 1.0 - 1.0 / N
        for k, prob in run.iterations:
            worst = max(worst, abs(prob - grover_probability(N, k)))
    elapsed = time.perf_counter() - start
    _report(f"criterion 5: worst law deviation {worst:.3e} in {elapsed:.2f}s")
    assert worst <= 1e-9
    assert elapsed < 5.0


def test_criterion_6_adiabatic_theorem_validation():
    # T = 10 T_min: final marked fidelity >= 0.99 for n=2..6, norm drift <= 1e-9,
    # step-doubling moves the final state by <= 1e-6; under 2 min
    start = time.perf_counter()
    crit = AdiabaticCriterion(epsilon=EPSILON, grid_points=129)
    sch = Schedule.linear()
    report = []
    for n in range(2, 7):
        problem = SearchProblem(n=n)
        T = 10.0 * adiabatic_t_min(problem, sch, crit)
        steps = None if n <= 4 else 32768
        trace = propagate(problem, sch, T, steps=steps)
        final = trace.samples[-1]
        drift = max(sample.norm_drift for sample in trace.samples)
        assert final.fidelity_marked >= 0.99
        assert drift <= 1e-9

        base_steps = steps if steps is not None else len(trace.samples) - 1
        doubled = propagate(problem, sch, T, steps=2 * base_steps,
                            record_every=2 * base_steps)
        diff = float(np.linalg.norm(
            doubled.samples[-1].state.amplitudes - final.state.amplitudes))
        assert diff <= 1e-6
        report.append(f"n={n}: fid {final.fidelity_marked:.6f} diff {diff:.1e}")
    elapsed = time.perf_counter() - start
    _report(f"criterion 6: {'; '.join(report)} in {elapsed:.1f}s")
    assert elapsed < 120.0


def test_criterion_7_action_ratio_bounded(scaling_data):
    # the oracle-term action at T = T_min(local), divided by sqrt(N)/4, stays
    # positive with max/min < 2 across n = 2..10
    rows, _ = scaling_data
    ratios = np.array([rows[n][2] for n in rows])
    assert np.all(ratios > 0)
    spread = float(ratios.max() / ratios.min())
    _report(f"criterion 7: ratios in [{ratios.min():.4f}, {ratios.max():.4f}], "
            f"spread {spread:.4f}")
    assert spread < 2.0


def test_criterion_8_reduced_spectrum_properties():
    # over 10^4 random pure two-qubit states: S_A = S_B and the closed-form
    # reduced eigenvalues match the partial trace, both to 1e-10; concurrence
    # is invariant under 10^3 random local unitaries to 1e-10
    rng = np.random.default_rng(2024)
    worst_sym = 0.0
    worst_mu = 0.0
    for _ in range(10_000):
        psi = random_state(rng, 2)
        state = QState(2, psi)
        rho = np.outer(psi, psi.conj())
        s_a = entropy_of_entanglement(state, [0])
        s_b = entropy_of_entanglement(state, [1])
        worst_sym = max(worst_sym, abs(s_a - s_b))
        mu_plus, mu_minus = reduced_eigenvalues(state)
        lam = np.linalg.eigvalsh(partial_trace(rho, 2, [0]).entries)
        worst_mu = max(worst_mu, abs(mu_minus - lam[0]), abs(mu_plus - lam[1]))
    assert worst_sym <= 1e-10
    assert worst_mu <= 1e-10

    worst_inv = 0.0
    psi = random_state(rng, 2)
    for _ in range(1_000):
        u = np.kron(random_unitary(rng, 2), random_unitary(rng, 2))
        before = concurrence(QState(2, psi))
        after = concurrence(QState(2, u @ psi))
        worst_inv = max(worst_inv, abs(before - after))
        psi = random_state(rng, 2)
    assert worst_inv <= 1e-10
    _report(f"criterion 8: S_A-S_B {worst_sym:.2e}, mu(pm) {worst_mu:.2e}, "
            f"unitary invariance {worst_inv:.2e}")
