"""Maximization of the Casimir-ratio functional over weight pairs.

Every covariant, permutation-invariant cloning component is labelled by
a pair (m, mu): m a partition of M into at most d parts, mu a vector of
N boxes respecting the branching constraints.  The integer objective

    F2(m, mu) = sum_k mu_k (2 m_k - 2k - mu_k)

determines the component's omega value exactly; its unique maximum at
m = (M,0,...,0), mu = (N,0,...,0) (for N <= M) identifies the optimal
cloner.  All values are exact rationals.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .rep_theory import casimirs, check_dominant, conjugate_weight, is_dominant

__all__ = [
    "CandidatePoint",
    "OmegaReport",
    "f2",
    "omega_of_point",
    "gamma_from_omega",
    "delta_one_from_gamma",
    "enumerate_W1",
    "maximize_brute",
    "maximize_greedy",
    "random_feasible_point",
    "omega_su2",
    "DEFAULT_M_GUARD",
    "DEFAULT_D_GUARD",
]

DEFAULT_M_GUARD = 30
DEFAULT_D_GUARD = 8


@dataclass(frozen=True)
class CandidatePoint:
    """A feasible pair (m, mu): m dominant with m_d >= 0 and sum M,
    mu with sum N, 0 <= mu_k <= m_k - m_{k+1} for k < d, mu_d >= 0."""

    m: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        object.__setattr__(self, "mu", tuple(int(x) for x in self.mu))
        if len(self.m) != len(self.mu):
            raise ValueError("m and mu must have equal length")

    @property
    def d(self) -> int:
        return len(self.m)

    def conj_partner(self) -> tuple[int, ...]:
        """Highest weight n of the auxiliary representation: the
        conjugate of m - mu."""
        tilde = tuple(self.m[k] - self.mu[k] for k in range(self.d))
        return conjugate_weight(tilde)

    def validate(self, d: int, N: int, M: int) -> None:
        if self.d != d:
            raise ValueError(f"point has {self.d} slots, expected {d}")
        check_dominant(self.m)
        if self.m[-1] < 0:
            raise ValueError("m_d must be non-negative")
        if sum(self.m) != M:
            raise ValueError(f"sum(m) = {sum(self.m)} != M = {M}")
        if sum(self.mu) != N:
            raise ValueError(f"sum(mu) = {sum(self.mu)} != N = {N}")
        for k in range(d - 1):
            if not 0 <= self.mu[k] <= self.m[k] - self.m[k + 1]:
                raise ValueError(f"mu[{k}] = {self.mu[k]} violates its box bound")
        if self.mu[-1] < 0:
            raise ValueError("mu_d must be non-negative")


@dataclass(frozen=True)
class OmegaReport:
    """Result of maximizing omega over the feasible domain."""

    d: int
    n_in: int
    m_out: int
    omega_max: Fraction
    gamma: Fraction
    delta_one: Fraction
    maximizers: tuple[CandidatePoint, ...]
    count_enumerated: int

    @property
    def unique(self) -> bool:
        return len(self.maximizers) == 1


def f2(point: CandidatePoint) -> int:
    """sum_k mu_k (2 m_k - 2k - mu_k) with 1-based slot index k."""
    return sum(
        mu * (2 * m - 2 * (k + 1) - mu)
        for k, (m, mu) in enumerate(zip(point.m, point.mu))
    )


def _sym_c2su(d: int, N: int) -> Fraction:
    # traceless Casimir of the N-fold symmetric power: (d-1) N (N+d) / d
    return Fraction((d - 1) * N * (N + d), d)


def omega_of_point(point: CandidatePoint, d: int, N: int, M: int) -> Fraction:
    """Exact omega of the component labelled by (m, mu).

    omega = 1/2 + F / (2 C2su) with
    F = F2 + (d+1) N - (2MN - N^2)/d and C2su the traceless quadratic
    Casimir of the input representation.
    """
    point.validate(d, N, M)
    if N == 0:
        raise ValueError("omega is undefined for N = 0 (trivial input)")
    F = Fraction(f2(point)) + (d + 1) * N - Fraction(2 * M * N - N * N, d)
    return Fraction(1, 2) + F / (2 * _sym_c2su(d, N))


def gamma_from_omega(omega: Fraction, N: int, M: int) -> Fraction:
    return Fraction(N, M) * omega


def delta_one_from_gamma(gamma: Fraction, d: int) -> Fraction:
    return Fraction(d - 1, d) * abs(1 - gamma)


def _partitions(M: int, d: int):
    """Dominant tuples of d non-negative integers summing to M."""

    def _gen(slots, total, cap):
        if slots == 1:
            if total <= cap:
                yield (total,)
            return
        lo = -(-total // slots)  # ceil: keep dominance feasible
        for first in range(min(total, cap), lo - 1, -1):
            for rest in _gen(slots - 1, total - first, first):
                yield (first,) + rest

    yield from _gen(d, M, M)


def enumerate_W1(
    d: int,
    N: int,
    M: int,
    m_guard: int = DEFAULT_M_GUARD,
    d_guard: int = DEFAULT_D_GUARD,
) -> list[CandidatePoint]:
    """Exhaustive, duplicate-free enumeration of the feasible domain."""
    if d < 2 or N < 0 or M < 0:
        raise ValueError("need d >= 2, N >= 0, M >= 0")
    if M > m_guard or d > d_guard:
        raise ValueError(
            f"enumeration guard exceeded (M <= {m_guard}, d <= {d_guard})"
        )
    points = []
    for m in _partitions(M, d):
        boxes = [m[k] - m[k + 1] for k in range(d - 1)]
        for mu_head in itertools.product(*(range(b + 1) for b in boxes)):
            mu_last = N - sum(mu_head)
            if mu_last < 0:
                continue
            points.append(CandidatePoint(m, mu_head + (mu_last,)))
    return points


def _report(d, N, M, best, maximizers, count) -> OmegaReport:
    omega = omega_of_point(maximizers[0], d, N, M)
    gamma = gamma_from_omega(omega, N, M)
    return OmegaReport(
        d=d,
        n_in=N,
        m_out=M,
        omega_max=omega,
        gamma=gamma,
        delta_one=delta_one_from_gamma(gamma, d),
        maximizers=tuple(maximizers),
        count_enumerated=count,
    )


def maximize_brute(
    d: int,
    N: int,
    M: int,
    m_guard: int = DEFAULT_M_GUARD,
    d_guard: int = DEFAULT_D_GUARD,
) -> OmegaReport:
    """Global maximum of F2 over the full enumeration, with all maximizers."""
    if N < 1:
        raise ValueError("maximization needs N >= 1")
    points = enumerate_W1(d, N, M, m_guard, d_guard)
    best = None
    maximizers: list[CandidatePoint] = []
    for p in points:
        val = f2(p)
        if best is None or val > best:
            best, maximizers = val, [p]
        elif val == best:
            maximizers.append(p)
    return _report(d, N, M, best, maximizers, len(points))


# ---------------------------------------------------------------------------
# Greedy ascent via the case moves of the exchange argument
# ---------------------------------------------------------------------------


def _mu_gain(m: tuple[int, ...], mu: list[int], k: int) -> int:
    # change of F2 when incrementing mu_k by one
    return 2 * m[k] - 2 * (k + 1) - 2 * mu[k] - 1


def _best_mu(d: int, N: int, m: tuple[int, ...]) -> list[int]:
    """Exact maximizer of F2 over mu for fixed m: greedy marginal
    allocation (the slot objective is concave, so this is optimal)."""
    mu = [0] * d
    caps = [m[k] - m[k + 1] for k in range(d - 1)] + [N]
    for _ in range(N):
        best_k, best_g = None, None
        for k in range(d):
            if mu[k] >= caps[k]:
                continue
            g = _mu_gain(m, mu, k)
            if best_g is None or g > best_g:
                best_k, best_g = k, g
        mu[best_k] += 1
    return mu


def _improve_mu(point: CandidatePoint) -> CandidatePoint:
    """Exchange moves on mu (slot-to-slot transfers), each strictly
    increasing F2, until no improving exchange remains.

    The classical Case A move (drain the last slot into an unsaturated
    earlier slot) is the special case donor = d; general donors are
    needed to escape plateaus that the literal case list leaves behind.
    """
    d = point.d
    m = point.m
    mu = list(point.mu)
    caps = [m[k] - m[k + 1] for k in range(d - 1)] + [sum(mu)]
    current = f2(CandidatePoint(m, tuple(mu)))
    while True:
        best = None  # (gain, donor, recipient)
        for j in range(d):
            if mu[j] == 0:
                continue
            for i in range(d):
                if i == j or mu[i] >= caps[i]:
                    continue
                mu[j] -= 1
                gain = _mu_gain(m, mu, i) - _mu_gain(m, mu, j)
                mu[j] += 1
                if gain > 0 and (best is None or gain > best[0]):
                    best = (gain, j, i)
        if best is None:
            return CandidatePoint(m, tuple(mu))
        _, j, i = best
        mu[j] -= 1
        mu[i] += 1
        new = f2(CandidatePoint(m, tuple(mu)))
        assert new > current, "exchange move failed to increase F2"
        current = new


def maximize_greedy(
    d: int, N: int, M: int, start: CandidatePoint | None = None
) -> CandidatePoint:
    """Ascend to the F2 maximizer by strictly increasing local moves.

    Inner moves re-shuffle mu at fixed m (exchange moves); outer moves
    transfer one box of m downward-to-upward (m_j + 1, m_k - 1 with
    j < k, dominance preserved) with mu re-optimized exactly.  Every
    applied move strictly increases F2, so the ascent terminates; grid
    tests pin agreement with the brute-force maximizer.
    """
    if N < 1:
        raise ValueError("maximization needs N >= 1")
    if start is None:
        base, extra = divmod(M, d)
        m0 = tuple(base + 1 if k < extra else base for k in range(d))
        start = CandidatePoint(m0, tuple(_best_mu(d, N, m0)))
    start.validate(d, N, M)

    point = _improve_mu(start)
    current = f2(point)
    while True:
        best = None  # (value, point)
        m = list(point.m)
        for k in range(1, d):
            for j in range(k):
                cand = m.copy()
                cand[j] += 1
                cand[k] -= 1
                if cand[-1] < 0 or not is_dominant(tuple(cand)):
                    continue
                cm = tuple(cand)
                cand_point = CandidatePoint(cm, tuple(_best_mu(d, N, cm)))
                val = f2(cand_point)
                if val > current and (best is None or val > best[0]):
                    best = (val, cand_point)
        if best is None:
            return point
        assert best[0] > current, "box-transfer move failed to increase F2"
        current, point = best


def random_feasible_point(d: int, N: int, M: int, seed: int) -> CandidatePoint:
    """A uniformly sampled feasible pair (m, mu), for greedy-start tests."""
    rng = np.random.default_rng(seed)
    points = enumerate_W1(d, N, M)
    return points[int(rng.integers(len(points)))]


def omega_su2(alpha: Fraction, beta: Fraction, gamma: Fraction) -> Fraction:
    """Exact omega for a qubit component with spins (alpha, beta) and
    fixed input spin gamma = N/2:

        omega = 1/2 + (alpha(alpha+1) - beta(beta+1)) / (2 gamma(gamma+1))

    Requires the triangle condition |alpha - beta| <= gamma <= alpha + beta
    and consistent half-integers (alpha + beta + gamma integral).
    """
    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    for spin in (alpha, beta, gamma):
        if spin < 0 or (2 * spin).denominator != 1:
            raise ValueError(f"spin {spin} is not a non-negative half-integer")
    if (alpha + beta + gamma).denominator != 1:
        raise ValueError("alpha + beta + gamma must be an integer")
    if not (abs(alpha - beta) <= gamma <= alpha + beta):
        raise ValueError(
            f"triangle condition violated for ({alpha}, {beta}, {gamma})"
        )
    if gamma == 0:
        if alpha != beta:
            raise ValueError("gamma = 0 requires alpha = beta")
        return Fraction(1, 2)
    return Fraction(1, 2) + (alpha * (alpha + 1) - beta * (beta + 1)) / (
        2 * gamma * (gamma + 1)
    )
