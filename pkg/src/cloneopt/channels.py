"""Generic completely positive map machinery.

Choi matrices, CP/TP checks, seeded Haar twirling, Stinespring dilation,
covariance defects, direct measurement of the omega functional and of
the single-clone error for arbitrary cloning channels, and explicit
qubit component cloners built from angular-momentum coupling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cloner import Channel, refine_supremum
from .errors import ChannelPropertyError
from .tensor_core import (
    FULL_BASIS,
    SYMMETRIC_BASIS,
    DensityOperator,
    haar_state,
    one_body_operator,
    product_power,
    single_site_marginal,
    sym_embed,
)
from .tolerances import OMEGA_RESIDUAL_TOL, STRUCTURAL_TOL

__all__ = [
    "TwirlConfig",
    "SU2Labels",
    "haar_unitary",
    "symmetric_rep",
    "kron_power",
    "conjugate_channel",
    "choi",
    "choi_to_kraus",
    "choi_trace_out_output",
    "min_choi_eigenvalue",
    "twirl",
    "stinespring",
    "dilation_trace",
    "covariance_defect",
    "omega_measure",
    "delta_one_numeric",
    "traceless_hermitian_basis",
    "su2_component_cloner",
    "su2_coupling_isometry",
    "spin_embedding",
    "constant_output_channel",
]


@dataclass(frozen=True)
class TwirlConfig:
    """Monte-Carlo twirl parameters."""

    sample_count: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.sample_count < 1:
            raise ValueError("sample_count must be >= 1")


@dataclass(frozen=True)
class SU2Labels:
    """Spin labels (alpha, beta, gamma) of a qubit component cloner;
    gamma = N/2 is fixed by the input count."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            spin = Fraction(getattr(self, name))
            object.__setattr__(self, name, spin)
            if spin < 0 or (2 * spin).denominator != 1:
                raise ValueError(f"{name} = {spin} is not a non-negative half-integer")


def haar_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary: QR of a complex Gaussian matrix with the
    diagonal phases of R fixed."""
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases


def kron_power(u: np.ndarray, n: int) -> np.ndarray:
    out = np.eye(1, dtype=complex)
    for _ in range(n):
        out = np.kron(out, u)
    return out


def symmetric_rep(u: np.ndarray, N: int, guard: int | None = None) -> np.ndarray:
    """The unitary u^{x N} compressed to the symmetric occupation basis."""
    d = u.shape[0]
    E = sym_embed(d, N, guard)
    return E.conj().T @ kron_power(u, N) @ E


def _output_rep(channel: Channel, u: np.ndarray, guard: int | None = None) -> np.ndarray:
    if channel.basis_out == SYMMETRIC_BASIS:
        return symmetric_rep(u, channel.m_out, guard)
    return kron_power(u, channel.m_out)


def _input_rep(channel: Channel, u: np.ndarray, guard: int | None = None) -> np.ndarray:
    if channel.basis_in != SYMMETRIC_BASIS:
        raise ChannelPropertyError("cloner-shaped channels need a symmetric input basis")
    return symmetric_rep(u, channel.n_in, guard)


def conjugate_channel(channel: Channel, u: np.ndarray) -> Channel:
    """The rotated channel tau_u(T): rho -> U_M^* T(U_N rho U_N^*) U_M."""
    u_in = _input_rep(channel, u)
    u_out = _output_rep(channel, u)
    return Channel(
        kraus=[u_out.conj().T @ K @ u_in for K in channel.kraus],
        d=channel.d,
        n_in=channel.n_in,
        m_out=channel.m_out,
        basis_in=channel.basis_in,
        basis_out=channel.basis_out,
    )


def choi(channel: Channel) -> np.ndarray:
    """Choi matrix of the state map, indexed (input, output) x (input, output).

    Convention: C = sum_ij |i><j| (x) T(|i><j|), i.e. the image of the
    unnormalized maximally entangled operator; for the identity channel
    on C^d this is d times the maximally entangled projector.
    """
    dim = channel.in_dim * channel.out_dim
    C = np.zeros((dim, dim), dtype=complex)
    for K in channel.kraus:
        v = K.T.reshape(-1)
        C += np.outer(v, v.conj())
    return C


def min_choi_eigenvalue(channel: Channel) -> float:
    return float(np.min(np.linalg.eigvalsh(choi(channel))))


def choi_trace_out_output(channel: Channel) -> np.ndarray:
    """Partial trace of the Choi matrix over the output; equals the
    identity iff the state map preserves trace."""
    C = choi(channel).reshape(
        channel.in_dim, channel.out_dim, channel.in_dim, channel.out_dim
    )
    return np.einsum("ixjx->ij", C)


def choi_to_kraus(
    C: np.ndarray, in_dim: int, out_dim: int, cutoff: float = 1e-12
) -> list[np.ndarray]:
    """Kraus operators from a (nearly) PSD Choi matrix; eigenvalues below
    the cutoff are dropped."""
    vals, vecs = np.linalg.eigh(C)
    kraus = []
    for val, vec in zip(vals, vecs.T):
        if val > cutoff:
            kraus.append(math.sqrt(val) * vec.reshape(in_dim, out_dim).T)
    return kraus


def twirl(channel: Channel, cfg: TwirlConfig = TwirlConfig()) -> Channel:
    """Monte-Carlo Haar average of tau_u(T) over seeded unitaries.

    The Choi matrices of the rotated channels are averaged and converted
    back to Kraus form; the result is CP and TP to statistical tolerance.
    """
    rng = np.random.default_rng(cfg.seed)
    acc = np.zeros(
        (channel.in_dim * channel.out_dim,) * 2, dtype=complex
    )
    for _ in range(cfg.sample_count):
        u = haar_unitary(channel.d, rng)
        acc += choi(conjugate_channel(channel, u))
    acc /= cfg.sample_count
    return Channel(
        kraus=choi_to_kraus(acc, channel.in_dim, channel.out_dim),
        d=channel.d,
        n_in=channel.n_in,
        m_out=channel.m_out,
        basis_in=channel.basis_in,
        basis_out=channel.basis_out,
    )


def stinespring(channel: Channel, tol: float = STRUCTURAL_TOL) -> np.ndarray:
    """Dilation isometry V = sum_r K_r (x) |r> with V*V = 1 and
    tr_K(V rho V*) equal to the state map."""
    defect = channel.completeness_defect()
    if defect > tol:
        raise ChannelPropertyError(
            f"channel is not trace preserving (defect {defect:.2e})"
        )
    stacked = np.stack(channel.kraus)  # (R, out, in)
    R, out_dim, in_dim = stacked.shape
    return stacked.transpose(1, 0, 2).reshape(out_dim * R, in_dim)


def dilation_trace(V: np.ndarray, rho: np.ndarray, out_dim: int) -> np.ndarray:
    """tr_K(V rho V*) for a dilation isometry with rows ordered (out, K)."""
    X = V @ np.asarray(rho, dtype=complex) @ V.conj().T
    R = V.shape[0] // out_dim
    return np.einsum("xryr->xy", X.reshape(out_dim, R, out_dim, R))


def covariance_defect(channel: Channel, samples: int = 50, seed: int = 0) -> float:
    """Max operator-norm Choi distance between tau_u(T) and T over seeded
    Haar unitaries; zero (to tolerance) iff T is covariant."""
    rng = np.random.default_rng(seed)
    C0 = choi(channel)
    worst = 0.0
    for _ in range(samples):
        u = haar_unitary(channel.d, rng)
        diff = choi(conjugate_channel(channel, u)) - C0
        worst = max(worst, float(np.max(np.abs(np.linalg.eigvalsh(diff)))))
    return worst


def traceless_hermitian_basis(d: int) -> list[np.ndarray]:
    """Generalized Gell-Mann set: d^2 - 1 traceless Hermitian matrices."""
    basis = []
    for i in range(d):
        for j in range(i + 1, d):
            sym = np.zeros((d, d), dtype=complex)
            sym[i, j] = sym[j, i] = 1.0
            basis.append(sym)
            anti = np.zeros((d, d), dtype=complex)
            anti[i, j] = -1j
            anti[j, i] = 1j
            basis.append(anti)
    for k in range(1, d):
        diag = np.zeros((d, d), dtype=complex)
        for i in range(k):
            diag[i, i] = 1.0
        diag[k, k] = -k
        basis.append(diag)
    return basis


def omega_measure(
    channel: Channel, residual_tol: float = OMEGA_RESIDUAL_TOL
) -> float:
    """Proportionality constant between T(sum_k a_(k)) and the input-side
    generator sum_{l<=N} a_(l), fitted over a traceless Hermitian basis.

    Raises ChannelPropertyError when the least-squares residual exceeds
    the tolerance (the channel is then not covariant enough to define a
    single omega)."""
    d = channel.d
    num = 0.0
    den = 0.0
    pairs = []
    for a in traceless_hermitian_basis(d):
        A = one_body_operator(a, d, channel.m_out, channel.basis_out)
        L = channel.apply_observable(A)
        R = one_body_operator(a, d, channel.n_in, SYMMETRIC_BASIS)
        num += float(np.real(np.vdot(R, L)))
        den += float(np.real(np.vdot(R, R)))
        pairs.append((L, R))
    omega = num / den
    residual = max(
        float(np.linalg.norm(L - omega * R) / np.linalg.norm(R)) for L, R in pairs
    )
    if residual > residual_tol:
        raise ChannelPropertyError(
            "channel is not covariant/permutation-invariant enough to define "
            f"omega (relative residual {residual:.2e})"
        )
    return omega


def delta_one_numeric(channel: Channel, samples: int = 2000, seed: int = 0) -> float:
    """Sampled supremum over pure inputs (and output sites) of the
    single-clone probability deviation.

    The inner supremum over effects 0 <= a <= 1 is evaluated analytically
    as the sum of positive eigenvalues of (marginal - |psi><psi|); the
    outer supremum is sampled with local refinement of the best states.
    """
    d, N, M = channel.d, channel.n_in, channel.m_out
    sites = [0] if channel.basis_out == SYMMETRIC_BASIS else list(range(M))

    def value(amps: np.ndarray) -> float:
        v = product_power(amps, N)
        rho_out = channel.apply_fast(np.outer(v, v.conj()))
        dens = DensityOperator(rho_out, channel.basis_out, d, M)
        proj = np.outer(amps, amps.conj())
        best_site = 0.0
        for k in sites:
            diff = single_site_marginal(dens, site=k) - proj
            vals = np.linalg.eigvalsh(diff)
            best_site = max(best_site, float(np.sum(vals[vals > 0])))
        return best_site

    best = 0.0
    top: list[tuple[float, np.ndarray]] = []
    for i in range(samples):
        psi = haar_state(d, seed=hash((seed, i)) & 0xFFFFFFFF)
        val = value(psi.amplitudes)
        top.append((val, psi.amplitudes))
        top.sort(key=lambda t: -t[0])
        del top[5:]
        best = max(best, val)
    for rank, (_, amps) in enumerate(top):
        best = max(best, refine_supremum(value, amps, seed=seed + 2000 + rank))
    return best


# ---------------------------------------------------------------------------
# Qubit component cloners from angular-momentum coupling
# ---------------------------------------------------------------------------


def _spin_lowering(j: Fraction) -> np.ndarray:
    """J_- in the basis |j, j>, |j, j-1>, ..., |j, -j>."""
    dim = int(2 * j) + 1
    op = np.zeros((dim, dim), dtype=complex)
    for k in range(dim - 1):
        m = j - k
        op[k + 1, k] = math.sqrt(float((j + m) * (j - m + 1)))
    return op


def spin_embedding(alpha: Fraction, M: int) -> np.ndarray:
    """Isometry from spin alpha into the M-fold qubit tensor product.

    Representative copy: the first 2*alpha sites carry the symmetric
    (highest-spin) block, the remaining sites are paired into singlets;
    the basis vectors are generated from the highest-weight vector by
    total lowering.  Requires M - 2*alpha even and non-negative.
    """
    alpha = Fraction(alpha)
    two_alpha = int(2 * alpha)
    if two_alpha > M or (M - two_alpha) % 2 != 0:
        raise ValueError(
            f"spin {alpha} does not embed into {M} qubits (parity/size mismatch)"
        )
    pairs = (M - two_alpha) // 2
    hw = np.array([1.0], dtype=complex)
    for _ in range(two_alpha):
        hw = np.kron(hw, np.array([1.0, 0.0], dtype=complex))
    singlet = np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / math.sqrt(2.0)
    for _ in range(pairs):
        hw = np.kron(hw, singlet)

    # total J_- acting on 2^M amplitudes: flip one up-spin to down per term
    def lower(vec: np.ndarray) -> np.ndarray:
        out = np.zeros_like(vec)
        dim = vec.shape[0]
        for x in range(dim):
            if vec[x] == 0:
                continue
            for k in range(M):
                bit = 1 << (M - 1 - k)
                if not x & bit:  # site k is |0> = spin up
                    out[x | bit] += vec[x]
        return out

    cols = [hw]
    m = alpha
    while m > -alpha:
        nxt = lower(cols[-1]) / math.sqrt(float((alpha + m) * (alpha - m + 1)))
        cols.append(nxt)
        m -= 1
    return np.stack(cols, axis=1)


def su2_coupling_isometry(
    alpha: Fraction, beta: Fraction, gamma: Fraction
) -> np.ndarray:
    """Intertwining isometry V from spin gamma into spin alpha (x) spin beta.

    The top vector is the (unique, by the triangle condition) null vector
    of the total raising operator in the magnetization-gamma sector; the
    rest of the column space follows by total lowering.  The global phase
    is fixed by making the largest component real positive.
    """
    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    if not (abs(alpha - beta) <= gamma <= alpha + beta):
        raise ValueError(f"triangle condition violated for ({alpha}, {beta}, {gamma})")
    da, db, dg = int(2 * alpha) + 1, int(2 * beta) + 1, int(2 * gamma) + 1
    lower_a, lower_b = _spin_lowering(alpha), _spin_lowering(beta)
    lower_tot = np.kron(lower_a, np.eye(db)) + np.kron(np.eye(da), lower_b)
    raise_tot = lower_tot.conj().T

    def mag(ia: int, ib: int) -> Fraction:
        return (alpha - ia) + (beta - ib)

    sector = [ia * db + ib for ia in range(da) for ib in range(db) if mag(ia, ib) == gamma]
    upper = [ia * db + ib for ia in range(da) for ib in range(db) if mag(ia, ib) == gamma + 1]
    block = raise_tot[np.ix_(upper, sector)] if upper else np.zeros((0, len(sector)))
    _, svals, vh = np.linalg.svd(block) if upper else (None, np.array([]), np.eye(len(sector)))
    null_dim = len(sector) - int(np.sum(svals > 1e-10))
    assert null_dim == 1, f"expected a unique top vector, got null dimension {null_dim}"
    top_local = vh[-1].conj()
    top = np.zeros(da * db, dtype=complex)
    top[sector] = top_local
    pivot = top[np.argmax(np.abs(top))]
    top *= abs(pivot) / pivot

    cols = [top]
    m = gamma
    while m > -gamma:
        nxt = lower_tot @ cols[-1] / math.sqrt(float((gamma + m) * (gamma - m + 1)))
        cols.append(nxt)
        m -= 1
    return np.stack(cols, axis=1)


def su2_component_cloner(labels: SU2Labels, N: int, M: int) -> Channel:
    """Extremal covariant qubit cloner for spins (alpha, beta, gamma=N/2).

    State map: embed the input spin-gamma state through the coupling
    isometry into spin-alpha (x) spin-beta, push spin alpha into the
    M-qubit output through a representative embedding, and trace out the
    beta factor.  Unital and completely positive by construction.
    """
    alpha, beta, gamma = labels.alpha, labels.beta, labels.gamma
    if gamma != Fraction(N, 2):
        raise ValueError(f"gamma must equal N/2 = {Fraction(N, 2)}, got {gamma}")
    if 2 * alpha > M:
        raise ValueError(f"alpha = {alpha} exceeds M/2 = {Fraction(M, 2)}")
    if not (abs(alpha - beta) <= gamma <= alpha + beta):
        raise ValueError(f"triangle condition violated for ({alpha}, {beta}, {gamma})")
    W = spin_embedding(alpha, M)
    V = su2_coupling_isometry(alpha, beta, gamma)
    da, db, dg = int(2 * alpha) + 1, int(2 * beta) + 1, int(2 * gamma) + 1
    V3 = V.reshape(da, db, dg)
    kraus = [W @ V3[:, b, :] for b in range(db)]
    return Channel(
        kraus=kraus,
        d=2,
        n_in=N,
        m_out=M,
        basis_in=SYMMETRIC_BASIS,
        basis_out=FULL_BASIS,
    )


def constant_output_channel(d: int, N: int, M: int) -> Channel:
    """Channel mapping every input to the first occupation basis state of
    the output; a deliberately non-covariant test subject."""
    from .tensor_core import sym_dimension

    in_dim = sym_dimension(d, N)
    out_dim = sym_dimension(d, M)
    kraus = []
    for r in range(in_dim):
        K = np.zeros((out_dim, in_dim), dtype=complex)
        K[0, r] = 1.0
        kraus.append(K)
    return Channel(kraus=kraus, d=d, n_in=N, m_out=M)
