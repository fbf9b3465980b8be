"""Clone one qubit into two and look at what each copy keeps.

The optimal 1 -> 2 cloner cannot copy perfectly: each output qubit is the
input shrunk toward the maximally mixed state by the factor 2/3, giving
the well-known copy fidelity 5/6.
"""
import numpy as np

from cloneopt import (
    ClonerSpec,
    PureState,
    all_clone_overlap,
    delta_one_closed_form,
    shrinking_factor,
    single_clone_marginal,
)

spec = ClonerSpec(d=2, n_in=1, m_out=2)
print("shrinking factor gamma =", shrinking_factor(spec))
print("single-clone error bound =", delta_one_closed_form(spec))

psi = PureState(np.array([1.0, 0.0]))
marginal = single_clone_marginal(spec, psi)
print("\none copy of |0>:")
print(np.round(marginal.real, 6))
print("copy fidelity <0|rho|0> =", marginal[0, 0].real)

# a tilted input state gives the same fidelity: the cloner is universal
theta = 0.7
psi = PureState(np.array([np.cos(theta), np.sin(theta)]))
marginal = single_clone_marginal(spec, psi)
fid = float(np.real(psi.amplitudes.conj() @ marginal @ psi.amplitudes))
print("\ntilted input, copy fidelity =", fid)
print("both-copies overlap with psi x psi =", all_clone_overlap(spec, psi))
