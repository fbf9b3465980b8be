"""Symmetric-subspace linear algebra.

Occupation-number bases for the Bose subspace of (C^d)^{x N}, the
symmetrizer projection, the isometric embedding of the occupation basis
into the full tensor space, tensor powers of pure states, single-site
marginals, and seeded Haar-random state sampling.

All functions are pure; randomized ones take an explicit seed.  The
occupation basis is ordered reverse-lexicographically everywhere.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BasisError, DimensionGuardError
from .tolerances import DEFAULT_DENSE_GUARD, STATE_TOL

SYMMETRIC_BASIS = "symmetric-occupation"
FULL_BASIS = "full-tensor"

__all__ = [
    "SYMMETRIC_BASIS",
    "FULL_BASIS",
    "PureState",
    "DensityOperator",
    "sym_dimension",
    "occupation_basis",
    "occupation_index",
    "check_dense_guard",
    "symmetrizer",
    "sym_embed",
    "product_power",
    "single_site_marginal",
    "one_body_operator",
    "haar_state",
]


def sym_dimension(d: int, N: int) -> int:
    """Dimension binom(d+N-1, N) of the symmetric subspace of (C^d)^{x N}."""
    if d < 2 or N < 0:
        raise ValueError(f"need d >= 2 and N >= 0, got d={d}, N={N}")
    return math.comb(d + N - 1, N)


def occupation_basis(d: int, N: int) -> list[tuple[int, ...]]:
    """All occupation vectors (n_1,...,n_d) with sum N, reverse-lexicographic."""
    if d < 2 or N < 0:
        raise ValueError(f"need d >= 2 and N >= 0, got d={d}, N={N}")

    def _gen(slots: int, total: int):
        if slots == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in _gen(slots - 1, total - first):
                yield (first,) + rest

    return list(_gen(d, N))


def occupation_index(d: int, N: int) -> dict[tuple[int, ...], int]:
    """Map occupation vector -> position in occupation_basis(d, N)."""
    return {n: j for j, n in enumerate(occupation_basis(d, N))}


def check_dense_guard(d: int, M: int, guard: int | None = None) -> None:
    """Raise DimensionGuardError if d**M exceeds the dense guard."""
    limit = DEFAULT_DENSE_GUARD if guard is None else guard
    if d**M > limit:
        raise DimensionGuardError(
            f"dense construction of size d^M = {d}^{M} exceeds guard {limit}; "
            "use the symmetric-basis fast path instead"
        )


@dataclass(frozen=True)
class PureState:
    """Normalized vector in C^d."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", amps)
        if amps.ndim != 1:
            raise ValueError("pure state must be a 1-d amplitude vector")
        if abs(np.linalg.norm(amps) - 1.0) > STATE_TOL:
            raise ValueError("pure state amplitudes are not normalized")

    @property
    def d(self) -> int:
        return self.amplitudes.shape[0]

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())


@dataclass(frozen=True)
class DensityOperator:
    """Density matrix with an explicit basis tag.

    basis is SYMMETRIC_BASIS (matrix of size sym_dimension(d, sites)) or
    FULL_BASIS (size d**sites).
    """

    matrix: np.ndarray
    basis: str
    d: int
    sites: int

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", mat)
        if self.basis == SYMMETRIC_BASIS:
            dim = sym_dimension(self.d, self.sites)
        elif self.basis == FULL_BASIS:
            dim = self.d**self.sites
        else:
            raise BasisError(f"unknown basis tag {self.basis!r}")
        if mat.shape != (dim, dim):
            raise ValueError(
                f"matrix shape {mat.shape} does not match basis dimension {dim}"
            )


def _word_index(word: tuple[int, ...], d: int) -> int:
    idx = 0
    for s in word:
        idx = idx * d + s
    return idx


def _counts(word, d: int) -> tuple[int, ...]:
    c = [0] * d
    for s in word:
        c[s] += 1
    return tuple(c)


def sym_embed(d: int, N: int, guard: int | None = None) -> np.ndarray:
    """Isometry E from the occupation basis into (C^d)^{x N}.

    E*E = 1 and E E* = symmetrizer(d, N).  The column for occupation n
    puts amplitude sqrt(prod n_i! / N!) on each distinct ordering.
    """
    check_dense_guard(d, N, guard)
    index = occupation_index(d, N)
    E = np.zeros((d**N, len(index)), dtype=complex)
    fact_N = math.factorial(N)
    for word in itertools.product(range(d), repeat=N):
        n = _counts(word, d)
        amp = math.sqrt(math.prod(math.factorial(k) for k in n) / fact_N)
        E[_word_index(word, d), index[n]] = amp
    return E


def symmetrizer(d: int, M: int, guard: int | None = None) -> np.ndarray:
    """Orthogonal projection of (C^d)^{x M} onto its symmetric subspace."""
    E = sym_embed(d, M, guard)
    return E @ E.conj().T


def product_power(psi: PureState | np.ndarray, N: int) -> np.ndarray:
    """Coordinates of psi^{x N} in the symmetric occupation basis.

    c_n = sqrt(N! / prod n_i!) * prod psi_i^{n_i}; the result has unit norm.
    """
    amps = psi.amplitudes if isinstance(psi, PureState) else np.asarray(psi, dtype=complex)
    d = amps.shape[0]
    basis = occupation_basis(d, N)
    fact_N = math.factorial(N)
    out = np.empty(len(basis), dtype=complex)
    for j, n in enumerate(basis):
        coeff = math.sqrt(fact_N / math.prod(math.factorial(k) for k in n))
        out[j] = coeff * math.prod(amps[i] ** n[i] for i in range(d) if n[i])
        if all(k == 0 for k in n):
            out[j] = coeff
    return out


def one_body_operator(a: np.ndarray, d: int, sites: int, basis: str) -> np.ndarray:
    """Matrix of sum_k a_(k) (a acting on site k, identity elsewhere).

    In the occupation basis this is the second-quantized operator
    sum_ij a_ij b_i^dag b_j restricted to total occupation `sites`.
    """
    a = np.asarray(a, dtype=complex)
    if basis == FULL_BASIS:
        dim = d**sites
        op = np.zeros((dim, dim), dtype=complex)
        eye = np.eye(d)
        for k in range(sites):
            factors = [eye] * sites
            factors[k] = a
            term = factors[0]
            for f in factors[1:]:
                term = np.kron(term, f)
            op += term
        return op
    if basis != SYMMETRIC_BASIS:
        raise BasisError(f"unknown basis tag {basis!r}")
    occ = occupation_basis(d, sites)
    index = {n: col for col, n in enumerate(occ)}
    dim = len(occ)
    op = np.zeros((dim, dim), dtype=complex)
    for col, n in enumerate(occ):
        for j in range(d):
            if n[j] == 0:
                continue
            lowered = list(n)
            lowered[j] -= 1
            for i in range(d):
                if a[i, j] == 0:
                    continue
                raised = list(lowered)
                raised[i] += 1
                row = index[tuple(raised)]
                op[row, col] += a[i, j] * math.sqrt(n[j] * (lowered[i] + 1))
    return op


def _marginal_symmetric(rho: DensityOperator) -> np.ndarray:
    d, N = rho.d, rho.sites
    occ = occupation_basis(d, N)
    index = {n: j for j, n in enumerate(occ)}
    marg = np.zeros((d, d), dtype=complex)
    # marg[i, j] = (1/N) tr(rho b_j^dag b_i): annihilate mode i, create mode j
    for col, n in enumerate(occ):
        for i in range(d):
            if n[i] == 0:
                continue
            lowered = list(n)
            lowered[i] -= 1
            for j in range(d):
                raised = list(lowered)
                raised[j] += 1
                row = index[tuple(raised)]
                marg[i, j] += rho.matrix[col, row] * math.sqrt(n[i] * (lowered[j] + 1))
    return marg / N


def _marginal_full(rho: DensityOperator, site: int) -> np.ndarray:
    d, N = rho.d, rho.sites
    if not 0 <= site < N:
        raise ValueError(f"site index {site} out of range for {N} sites")
    t = rho.matrix.reshape((d,) * (2 * N))
    # trace out every site but `site`
    left = t
    # move the kept site to the front on both row and column groups
    row_order = [site] + [k for k in range(N) if k != site]
    col_order = [N + site] + [N + k for k in range(N) if k != site]
    left = np.transpose(left, axes=row_order + col_order)
    left = left.reshape(d, d ** (N - 1), d, d ** (N - 1))
    return np.einsum("iaja->ij", left)


def single_site_marginal(rho: DensityOperator, site: int = 0) -> np.ndarray:
    """d x d reduced density matrix of one output site.

    For SYMMETRIC_BASIS input the result is site-independent; for
    FULL_BASIS input the site index selects which tensor factor to keep.
    """
    if rho.basis == SYMMETRIC_BASIS:
        return _marginal_symmetric(rho)
    if rho.basis == FULL_BASIS:
        return _marginal_full(rho, site)
    raise BasisError(f"unknown basis tag {rho.basis!r}")


def haar_state(d: int, seed: int) -> PureState:
    """Haar-distributed pure state in C^d, deterministic for a fixed seed."""
    rng = np.random.default_rng(seed)
    z = rng.normal(size=d) + 1j * rng.normal(size=d)
    return PureState(z / np.linalg.norm(z))
