"""The optimal universal cloning channel and its closed-form constants.

The optimal cloner maps a state rho on the N-fold symmetric input space
to (d[N]/d[M]) S_M (rho x 1) S_M on the M-fold output space.  It is
constructed here directly in the occupation bases (fast path); the dense
full-tensor construction is kept as an oracle.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .tensor_core import (
    FULL_BASIS,
    SYMMETRIC_BASIS,
    DensityOperator,
    PureState,
    check_dense_guard,
    haar_state,
    occupation_basis,
    occupation_index,
    product_power,
    single_site_marginal,
    sym_dimension,
    sym_embed,
    symmetrizer,
)
from .tolerances import STRUCTURAL_TOL

__all__ = [
    "ClonerSpec",
    "Channel",
    "optimal_cloner",
    "dense_cloner_output",
    "shrinking_factor",
    "delta_one_closed_form",
    "single_clone_marginal",
    "all_clone_overlap",
    "delta_all_numeric",
    "refine_supremum",
]


@dataclass(frozen=True)
class ClonerSpec:
    """Problem sizes: d-level systems, N inputs, M >= N outputs."""

    d: int
    n_in: int
    m_out: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be >= 2")
        if self.n_in < 1:
            raise ValueError("N must be >= 1")
        if self.m_out < self.n_in:
            raise ValueError("M must be >= N")


@dataclass
class Channel:
    """Completely positive trace-preserving map in Kraus form.

    Each Kraus operator is out_dim x in_dim.  Basis tags name the input
    and output bases (symmetric-occupation or full-tensor); dims carry
    (d, N, M).
    """

    kraus: list[np.ndarray]
    d: int
    n_in: int
    m_out: int
    basis_in: str = SYMMETRIC_BASIS
    basis_out: str = SYMMETRIC_BASIS
    _superop: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def in_dim(self) -> int:
        return self.kraus[0].shape[1]

    @property
    def out_dim(self) -> int:
        return self.kraus[0].shape[0]

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """State map: sum_r K_r rho K_r^*."""
        rho = np.asarray(rho, dtype=complex)
        out = np.zeros((self.out_dim, self.out_dim), dtype=complex)
        for K in self.kraus:
            out += K @ rho @ K.conj().T
        return out

    def apply_observable(self, A: np.ndarray) -> np.ndarray:
        """Heisenberg-picture map on observables: sum_r K_r^* A K_r."""
        A = np.asarray(A, dtype=complex)
        out = np.zeros((self.in_dim, self.in_dim), dtype=complex)
        for K in self.kraus:
            out += K.conj().T @ A @ K
        return out

    def superoperator(self) -> np.ndarray:
        """Dense matrix of the state map acting on vec(rho) (cached)."""
        if self._superop is None:
            S = np.zeros((self.out_dim**2, self.in_dim**2), dtype=complex)
            for K in self.kraus:
                S += np.kron(K, K.conj())
            self._superop = S
        return self._superop

    def apply_fast(self, rho: np.ndarray) -> np.ndarray:
        S = self.superoperator()
        return (S @ np.asarray(rho, dtype=complex).reshape(-1)).reshape(
            self.out_dim, self.out_dim
        )

    def completeness_defect(self) -> float:
        """Operator-norm distance of sum K^*K from the identity."""
        acc = np.zeros((self.in_dim, self.in_dim), dtype=complex)
        for K in self.kraus:
            acc += K.conj().T @ K
        return float(
            np.max(np.abs(np.linalg.eigvalsh(acc - np.eye(self.in_dim))))
        )

    def to_full_output(self, guard: int | None = None) -> "Channel":
        """Expand a symmetric-occupation output basis to the full tensor basis."""
        if self.basis_out == FULL_BASIS:
            return self
        E = sym_embed(self.d, self.m_out, guard)
        return Channel(
            kraus=[E @ K for K in self.kraus],
            d=self.d,
            n_in=self.n_in,
            m_out=self.m_out,
            basis_in=self.basis_in,
            basis_out=FULL_BASIS,
        )


def optimal_cloner(spec: ClonerSpec) -> Channel:
    """The optimal N -> M cloner in occupation bases (fast path).

    Kraus index J runs over the full product basis of the M-N appended
    sites; duplicate and zero operators are kept for oracle comparability.
    """
    d, N, M = spec.d, spec.n_in, spec.m_out
    basis_n = occupation_basis(d, N)
    index_m = occupation_index(d, M)
    dim_m = len(index_m)
    scale = math.sqrt(sym_dimension(d, N) / sym_dimension(d, M))
    fact_ratio = math.factorial(N) / math.factorial(M)

    def prod_fact(v):
        return math.prod(math.factorial(x) for x in v)

    kraus = []
    for word in itertools.product(range(d), repeat=M - N):
        counts = [0] * d
        for s in word:
            counts[s] += 1
        K = np.zeros((dim_m, len(basis_n)), dtype=complex)
        for col, n in enumerate(basis_n):
            m = tuple(n[i] + counts[i] for i in range(d))
            K[index_m[m], col] = scale * math.sqrt(
                fact_ratio * prod_fact(m) / prod_fact(n)
            )
        kraus.append(K)
    return Channel(kraus=kraus, d=d, n_in=N, m_out=M)


def dense_cloner_output(
    spec: ClonerSpec, rho_sym: np.ndarray, guard: int | None = None
) -> np.ndarray:
    """Oracle: (d[N]/d[M]) S_M (rho x 1) S_M, compressed back to the
    occupation basis of the output.  Requires d**M within the guard."""
    d, N, M = spec.d, spec.n_in, spec.m_out
    check_dense_guard(d, M, guard)
    E_n = sym_embed(d, N, guard)
    E_m = sym_embed(d, M, guard)
    S_m = symmetrizer(d, M, guard)
    rho_full = E_n @ np.asarray(rho_sym, dtype=complex) @ E_n.conj().T
    big = np.kron(rho_full, np.eye(d ** (M - N)))
    out_full = (sym_dimension(d, N) / sym_dimension(d, M)) * (S_m @ big @ S_m)
    return E_m.conj().T @ out_full @ E_m


def shrinking_factor(spec: ClonerSpec) -> Fraction:
    """Exact shrinking factor N/(N+d) * (M+d)/M of the optimal cloner."""
    d, N, M = spec.d, spec.n_in, spec.m_out
    if M == 0:
        raise ValueError("M must be positive")
    return Fraction(N, N + d) * Fraction(M + d, M)


def delta_one_closed_form(spec: ClonerSpec) -> Fraction:
    """Exact single-clone error (d-1)/d * |1 - shrinking factor|."""
    gamma = shrinking_factor(spec)
    return Fraction(spec.d - 1, spec.d) * abs(1 - gamma)


def single_clone_marginal(spec: ClonerSpec, psi: PureState) -> np.ndarray:
    """One-site output marginal of the optimal cloner on psi^{x N}.

    Equals gamma |psi><psi| + (1 - gamma)/d within structural tolerance.
    """
    channel = optimal_cloner(spec)
    v = product_power(psi, spec.n_in)
    rho_out = channel.apply(np.outer(v, v.conj()))
    dens = DensityOperator(rho_out, SYMMETRIC_BASIS, spec.d, spec.m_out)
    return single_site_marginal(dens)


def all_clone_overlap(spec: ClonerSpec, psi: PureState) -> float:
    """tr(sigma^{x M} T(sigma^{x N})): equals d[N]/d[M] for every psi."""
    channel = optimal_cloner(spec)
    v_in = product_power(psi, spec.n_in)
    v_out = product_power(psi, spec.m_out)
    rho_out = channel.apply(np.outer(v_in, v_in.conj()))
    return float(np.real(v_out.conj() @ rho_out @ v_out))


def refine_supremum(value_fn, psi0: np.ndarray, seed: int, iters: int = 20) -> float:
    """Gradient-free local refinement: random perturbations with a
    shrinking step, keeping the best value seen."""
    rng = np.random.default_rng(seed)
    best_psi = np.asarray(psi0, dtype=complex)
    best = value_fn(best_psi)
    step = 0.3
    for _ in range(iters):
        z = rng.normal(size=best_psi.shape[0]) + 1j * rng.normal(size=best_psi.shape[0])
        cand = best_psi + step * z
        cand /= np.linalg.norm(cand)
        val = value_fn(cand)
        if val > best:
            best, best_psi = val, cand
        else:
            step *= 0.7
    return best


def delta_all_numeric(
    spec: ClonerSpec, samples: int = 500, seed: int = 0
) -> float:
    """Sampled supremum of || T(sigma^N) - sigma^M ||_1 over pure sigma.

    Covariance of the optimal cloner makes the objective state
    independent, so sampling is confirmation rather than search; the top
    candidates are still refined locally.
    """
    channel = optimal_cloner(spec)

    def value(amps: np.ndarray) -> float:
        v_in = product_power(amps, spec.n_in)
        v_out = product_power(amps, spec.m_out)
        diff = channel.apply_fast(np.outer(v_in, v_in.conj()))
        diff -= np.outer(v_out, v_out.conj())
        return float(np.sum(np.abs(np.linalg.eigvalsh(diff))))

    best = 0.0
    top: list[tuple[float, np.ndarray]] = []
    for i in range(samples):
        psi = haar_state(spec.d, seed=hash((seed, i)) & 0xFFFFFFFF)
        val = value(psi.amplitudes)
        top.append((val, psi.amplitudes))
        top.sort(key=lambda t: -t[0])
        del top[5:]
        best = max(best, val)
    for rank, (_, amps) in enumerate(top):
        best = max(best, refine_supremum(value, amps, seed=seed + 1000 + rank))
    return best
