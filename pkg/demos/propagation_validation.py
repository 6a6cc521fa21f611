"""Integrating the full dynamics and checking the adiabatic theorem.

Propagates the n=3 problem at several multiples of the required runtime: far
below it the state barely moves (sudden limit), at and above it the final
marked-state fidelity approaches one. Also demonstrates the numerical
contracts: per-step unitarity keeps the norm drift at rounding level, and
doubling the step count leaves the final state unchanged to high precision.
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from aqsearch import (
    AdiabaticCriterion,
    Schedule,
    SearchProblem,
    adiabatic_t_min,
    propagate,
)

problem = SearchProblem(n=3)
sch = Schedule.linear()
crit = AdiabaticCriterion(epsilon=0.1, grid_points=256)
t_min = adiabatic_t_min(problem, sch, crit)
print(f"n = 3: T_min = {t_min:.3f} at epsilon = {crit.epsilon}")

print(f"\n{'T/T_min':>8} {'final P(marked)':>16} {'max norm drift':>15}")
fig, ax = plt.subplots(figsize=(6, 4))
for factor in (0.01, 0.3, 1.0, 3.0, 10.0):
    T = factor * t_min
    trace = propagate(problem, sch, T)
    s = [x.s for x in trace.samples]
    fid = [x.fidelity_marked for x in trace.samples]
    drift = max(x.norm_drift for x in trace.samples)
    ax.plot(s, fid, label=f"T = {factor:g} T_min")
    print(f"{factor:>8g} {fid[-1]:>16.6f} {drift:>15.2e}")

print(f"\nsudden limit keeps P(marked) near 1/N = {1/8:.4f}; "
      "T = 10 T_min exceeds the 0.99 adiabatic target")

# step-doubling convergence of the integrator at fixed T
T = 3.0 * t_min
finals = {}
for steps in (1024, 2048, 4096):
    trace = propagate(problem, sch, T, steps=steps, record_every=steps)
    finals[steps] = trace.samples[-1].state.amplitudes
err_coarse = np.linalg.norm(finals[1024] - finals[4096])
err_fine = np.linalg.norm(finals[2048] - finals[4096])
print(f"step doubling at T = {T:.1f}: |psi_1024 - psi_4096| = {err_coarse:.2e}, "
      f"|psi_2048 - psi_4096| = {err_fine:.2e} (4th-order stepping)")

ax.set_xlabel("s = t / T")
ax.set_ylabel("P(marked)")
ax.legend()
fig.tight_layout()
fig.savefig("propagation_validation.png", dpi=150)
print("wrote propagation_validation.png")
