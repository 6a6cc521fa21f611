"""Discrete amplitude amplification as a cross-check on the runtime scaling.

The discrete iteration rotates the state toward the marked item by a fixed
angle per step; its success probability follows sin^2((2k+1) theta) with
sin(theta) = 1/sqrt(N). The optimal iteration count grows like (pi/4) sqrt(N),
the same sqrt(N) scaling the locally adapted continuous schedule achieves.
"""
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from aqsearch import SearchProblem, grover_search, optimal_iterations

fig, ax = plt.subplots(figsize=(6, 4))

print(f"{'n':>3} {'N':>5} {'k0':>4} {'P(k0)':>10} {'1 - 1/N':>10}")
for n in (2, 4, 6, 8):
    N = 2**n
    k0 = optimal_iterations(N)
    run = grover_search(SearchProblem(n=n), k_max=2 * k0 + 1)
    ks = [k for k, _ in run.iterations]
    ps = [p for _, p in run.iterations]
    ax.plot(ks, ps, "o-", ms=3, label=f"N = {N}")
    print(f"{n:>3} {N:>5} {k0:>4} {ps[k0]:>10.6f} {1 - 1/N:>10.6f}")

# N = 4 is the textbook special case: one iteration succeeds exactly
run = grover_search(SearchProblem(n=2), k_max=1)
print(f"\nN = 4 after one iteration: P = {run.iterations[1][1]:.15f} (exactly 1)")

theta = math.asin(1 / math.sqrt(256))
print(f"N = 256 law check: sin^2(5 theta) = {math.sin(5 * theta)**2:.12f}, "
      f"measured P(2) = {grover_search(SearchProblem(n=8), 2).iterations[2][1]:.12f}")

ax.set_xlabel("iterations k")
ax.set_ylabel("success probability")
ax.legend()
fig.tight_layout()
fig.savefig("grover_cross_check.png", dpi=150)
print("wrote grover_cross_check.png")
