"""Build every qubit cloning component for N=1 -> M=3 and measure it.

For qubits the covariant components are labelled by spins (alpha, beta)
coupling to the input spin gamma = N/2. Each label gives a concrete
channel; measuring omega on the constructed channel reproduces the
exact spin formula, and the best label reproduces the optimal cloner.
"""
from fractions import Fraction

import numpy as np

from cloneopt import (
    ClonerSpec,
    SU2Labels,
    choi,
    omega_measure,
    omega_su2,
    optimal_cloner,
    su2_component_cloner,
)

N, M = 1, 3
gamma = Fraction(N, 2)
print(f"qubit components for N={N} -> M={M} (gamma = {gamma}):\n")

two_alpha = M % 2
while two_alpha <= M:
    alpha = Fraction(two_alpha, 2)
    beta = abs(alpha - gamma)
    while beta <= alpha + gamma:
        channel = su2_component_cloner(SU2Labels(alpha, beta, gamma), N, M)
        measured = omega_measure(channel)
        exact = omega_su2(alpha, beta, gamma)
        print(f"  alpha={alpha}, beta={beta}:  omega measured {measured:.10f}"
              f"  exact {exact}")
        beta += 1
    two_alpha += 2

best = SU2Labels(Fraction(M, 2), Fraction(M - N, 2), gamma)
component = su2_component_cloner(best, N, M)
reference = optimal_cloner(ClonerSpec(2, N, M)).to_full_output()
dist = np.max(np.abs(np.linalg.eigvalsh(choi(component) - choi(reference))))
print(f"\nbest label alpha={best.alpha}, beta={best.beta} vs optimal cloner:")
print("Choi distance =", float(dist))
