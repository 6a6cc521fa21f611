"""How the required runtime grows with the search-space size.

The naive linear sweep needs T ~ N (no quantum advantage); reallocating the
schedule so the evolution slows down only inside the gap bottleneck recovers
T ~ sqrt(N). The oracle-term action (integral of g over the run) stays within
a constant factor of sqrt(N)/4 in both regimes, as the lower bound demands.
"""
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from aqsearch import (
    AdiabaticCriterion,
    Schedule,
    SearchProblem,
    action_integral,
    adiabatic_t_min,
    local_schedule,
)

crit = AdiabaticCriterion(epsilon=0.1, grid_points=97)
ns = range(2, 10)

sizes, t_lin, t_loc, ratios = [], [], [], []
print(f"{'n':>3} {'N':>5} {'T_min linear':>14} {'T_min local':>13} {'action ratio':>13}")
for n in ns:
    problem = SearchProblem(n=n)
    t_linear = adiabatic_t_min(problem, Schedule.linear(), crit)
    local = local_schedule(problem, crit)
    action = action_integral(local, local.total_time)
    ratio = action / (math.sqrt(2**n) / 4.0)
    sizes.append(2**n)
    t_lin.append(t_linear)
    t_loc.append(local.total_time)
    ratios.append(ratio)
    print(f"{n:>3} {2**n:>5} {t_linear:>14.3f} {local.total_time:>13.3f} {ratio:>13.4f}")

slope_lin = np.polyfit(np.log(sizes), np.log(t_lin), 1)[0]
slope_loc = np.polyfit(np.log(sizes), np.log(t_loc), 1)[0]
print(f"\nfitted exponents: linear {slope_lin:.4f} (~1), local {slope_loc:.4f} (~1/2)")
print(f"action ratio spread: {max(ratios)/min(ratios):.4f} (bounded, O(1))")

fig, ax = plt.subplots(figsize=(5.5, 4))
ax.loglog(sizes, t_lin, "o-", label=f"linear, slope {slope_lin:.2f}")
ax.loglog(sizes, t_loc, "s-", label=f"local, slope {slope_loc:.2f}")
ax.set_xlabel("N")
ax.set_ylabel("minimum runtime")
ax.legend()
fig.tight_layout()
fig.savefig("runtime_scaling.png", dpi=150)
print("wrote runtime_scaling.png")
