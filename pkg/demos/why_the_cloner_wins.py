"""Re-derive the optimal cloner from pure bookkeeping.

Every covariant, permutation-symmetric way of cloning N d-level systems
into M is labelled by a pair of weight vectors (m, mu). Its quality is a
single exact rational omega, and maximizing omega over all labels picks
out one point: the channel that symmetrizes the input with fresh blank
systems. No channel matrices are needed for the argument; this script
enumerates the label domain and watches the maximum appear.
"""
from fractions import Fraction

from cloneopt import enumerate_W1, maximize_brute, omega_of_point

d, N, M = 3, 2, 4
points = enumerate_W1(d, N, M)
print(f"d={d}, N={N}, M={M}: {len(points)} feasible labels\n")

ranked = sorted(points, key=lambda p: omega_of_point(p, d, N, M), reverse=True)
for p in ranked[:6]:
    print(f"  m={p.m}  mu={p.mu}  omega={omega_of_point(p, d, N, M)}")
print("  ...")

report = maximize_brute(d, N, M)
assert report.omega_max == Fraction(M + d, N + d)
print("\nmaximum omega =", report.omega_max, "= (M+d)/(N+d)")
print("unique maximizer:", report.maximizers[0])
print("implied shrinking factor gamma =", report.gamma)
print("implied single-clone error =", report.delta_one)
