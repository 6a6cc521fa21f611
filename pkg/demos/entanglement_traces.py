"""Entanglement carried by the instantaneous ground state during the search.

Three two-qubit runs that differ only in the initial state: the uniform
superposition (entanglement rises to a peak and falls back), the maximally
entangled Bell state (starts at one bit and decays), and a partially
entangled start. The marked state is a product state, so every trace ends
at zero.
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from aqsearch import (
    QState,
    Schedule,
    SearchProblem,
    entanglement_trace,
    ground_state_trace,
)

sch = Schedule.linear()
grid = 501

# partially entangled: cos(pi/8)|00> + sin(pi/8)|11>
theta = np.pi / 8
partial = QState(2, np.array([np.cos(theta), 0.0, 0.0, np.sin(theta)], dtype=complex))

starts = [
    ("uniform", None),
    ("bell", QState.bell()),
    ("partial", partial),
]

fig, (ax_s, ax_c) = plt.subplots(1, 2, figsize=(10, 4))

for label, initial in starts:
    problem = SearchProblem(n=2, initial=initial)
    points = entanglement_trace(ground_state_trace(problem, sch, grid))
    s = [p.s for p in points]
    entropy = [p.entropy for p in points]
    conc = [p.concurrence for p in points]
    ax_s.plot(s, entropy, label=label)
    ax_c.plot(s, conc, label=label)

    peak = max(points, key=lambda p: p.entropy)
    print(f"{label:8s} entropy: start {points[0].entropy:.6f}, "
          f"peak {peak.entropy:.6f} at s = {peak.s:.3f}, end {points[-1].entropy:.2e}")

ax_s.set_xlabel("s")
ax_s.set_ylabel("entropy of entanglement (bits)")
ax_s.legend()
ax_c.set_xlabel("s")
ax_c.set_ylabel("concurrence")
ax_c.legend()
fig.tight_layout()
fig.savefig("entanglement_traces.png", dpi=150)
print("wrote entanglement_traces.png")
