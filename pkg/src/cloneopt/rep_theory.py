"""Highest-weight arithmetic for U(d) / SU(d).

Weights are plain tuples of d integers, non-increasing (dominant), and
may be negative.  All arithmetic is exact (Python integers / Fraction).
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "is_dominant",
    "check_dominant",
    "conjugate_weight",
    "normalized_conjugate",
    "casimirs",
    "weyl_dimension",
    "pieri_branch",
    "contains_sym",
    "fund_power_multiplicity",
    "adjoint_multiplicity",
    "parse_weight",
    "normalize_weight",
]


def is_dominant(m: tuple[int, ...]) -> bool:
    return all(m[k] >= m[k + 1] for k in range(len(m) - 1))


def check_dominant(m: tuple[int, ...]) -> tuple[int, ...]:
    m = tuple(int(x) for x in m)
    if len(m) < 2:
        raise ValueError("a highest weight needs at least two components")
    if not is_dominant(m):
        raise ValueError(f"weight {m} is not non-increasing")
    return m


def conjugate_weight(m: tuple[int, ...]) -> tuple[int, ...]:
    """Highest weight (-m_d, ..., -m_1) of the conjugate representation."""
    m = check_dominant(m)
    return tuple(-x for x in reversed(m))


def normalize_weight(m: tuple[int, ...]) -> tuple[int, ...]:
    """Shift so that the last component is zero (SU(d) normalization)."""
    m = check_dominant(m)
    return tuple(x - m[-1] for x in m)


def normalized_conjugate(m: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugate weight shifted to the m_d = 0 normalization."""
    return normalize_weight(conjugate_weight(m))


def casimirs(m: tuple[int, ...]) -> tuple[int, int, Fraction]:
    """(C1, C2, C2_su) for the irrep with highest weight m.

    C1 = sum m_j, C2 = sum m_j^2 + sum_{j<k} (m_j - m_k), and the
    traceless quadratic Casimir C2_su = C2 - C1^2 / d, which is
    invariant under uniform shifts of the weight.
    """
    m = check_dominant(m)
    d = len(m)
    c1 = sum(m)
    c2 = sum(x * x for x in m) + sum(
        m[j] - m[k] for j in range(d) for k in range(j + 1, d)
    )
    c2_su = Fraction(c2) - Fraction(c1 * c1, d)
    return c1, c2, c2_su


def weyl_dimension(m: tuple[int, ...]) -> int:
    """Dimension prod_{j<k} (m_j - m_k + k - j) / (k - j), exact."""
    m = check_dominant(m)
    d = len(m)
    num = 1
    den = 1
    for j in range(d):
        for k in range(j + 1, d):
            num *= m[j] - m[k] + k - j
            den *= k - j
    dim, rem = divmod(num, den)
    assert rem == 0
    return dim


def pieri_branch(N: int, m: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Irreducible summands of (N-fold symmetric power) x pi_m.

    Returns all m + mu with sum(mu) = N, mu_k >= 0, and
    mu_{k+1} <= m_k - m_{k+1} for k < d (mu_1 bounded only by the sum).
    Each summand appears exactly once and is dominant.
    """
    m = check_dominant(m)
    if N < 0:
        raise ValueError("N must be non-negative")
    d = len(m)

    out: list[tuple[int, ...]] = []

    def _extend(k: int, remaining: int, mu: tuple[int, ...]):
        if k == d:
            if remaining == 0:
                out.append(tuple(m[i] + mu[i] for i in range(d)))
            return
        if k == 0:
            lo, hi = 0, remaining
        else:
            lo, hi = 0, min(remaining, m[k - 1] - m[k])
        for x in range(hi, lo - 1, -1):
            _extend(k + 1, remaining - x, mu + (x,))

    _extend(0, N, ())
    return out


def contains_sym(m: tuple[int, ...], n: tuple[int, ...], N: int) -> bool:
    """Whether the N-fold symmetric power is contained in pi_m x pi_n.

    Decided via the equivalence with pi_m contained in
    (symmetric power) x conj(pi_n), checked by Pieri branching.
    """
    m = check_dominant(m)
    n = check_dominant(n)
    if len(m) != len(n):
        raise ValueError("weights must have equal length")
    return m in pieri_branch(N, conjugate_weight(n))


@lru_cache(maxsize=None)
def _fund_multiplicity(m: tuple[int, ...]) -> int:
    if any(x < 0 for x in m) or not is_dominant(m):
        return 0
    if all(x == 0 for x in m):
        return 1
    total = 0
    for j in range(len(m)):
        lowered = m[:j] + (m[j] - 1,) + m[j + 1 :]
        total += _fund_multiplicity(lowered)
    return total


def fund_power_multiplicity(m: tuple[int, ...], M: int) -> int:
    """Multiplicity of pi_m in the M-fold tensor power of the defining rep.

    Computed by the box-removal recurrence with multiplicity zero on
    non-dominant tuples; zero when sum(m) != M or m_d < 0.
    """
    m = tuple(int(x) for x in m)
    if sum(m) != M:
        return 0
    return _fund_multiplicity(m)


def adjoint_multiplicity(d: int, N: int) -> int:
    """Multiplicity of the adjoint weight (2,1,...,1,0) (up to uniform
    shift) in (N-fold symmetric power) x its conjugate.

    Equals 1 for all d >= 2, N >= 1: the non-degeneracy witness.
    """
    if d < 2 or N < 1:
        raise ValueError(f"need d >= 2 and N >= 1, got d={d}, N={N}")
    conj = (N,) * (d - 1) + (0,)  # shifted conjugate of (N,0,...,0)
    # adjoint weight shifted to match total charge d*N
    target = (N + 1,) + (N,) * (d - 2) + (N - 1,)
    return sum(1 for w in pieri_branch(N, conj) if w == target)


def parse_weight(text: str) -> tuple[int, ...]:
    """Parse a comma-separated weight string such as "2,1,0"."""
    try:
        m = tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse weight {text!r}") from exc
    return check_dominant(m)
