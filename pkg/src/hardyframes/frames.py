"""Frame sums, Gram matrices, and finite sections of the frame operator.

All bounds computed here are finite-section estimates carrying their
(N, K) provenance; nothing claims to be a bound for the infinite system.
The lower estimate is clamped at zero, and values below 1e-12 * B are
reported as numerically zero (the span-deficiency signal).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .series import TruncatedSeries, inner_product
from .orbits import Orbit, orbit as make_orbit

TIGHT_REL_TOL = 1e-8
NUMERICALLY_ZERO_REL = 1e-12


class EigensolverError(RuntimeError):
    """Raised when the Hermitian eigensolver fails; carries diagnostics."""

    def __init__(self, message: str, size: int, frobenius: float):
        super().__init__(f"{message} (size={size}, frobenius_norm={frobenius:.6g})")
        self.size = size
        self.frobenius = frobenius


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """entries[m, n] = <phi^n f, phi^m f>."""

    entries: np.ndarray
    orbit_len: int


@dataclass(frozen=True, eq=False)
class FrameSection:
    """Frame operator compressed to span{z^0..z^N}: S = sum_n v_n v_n*."""

    matrix: np.ndarray
    orbit_len: int
    order: int


@dataclass(frozen=True)
class FrameBounds:
    A_est: float
    B_est: float
    N: int
    K: int
    tight: bool
    numerically_zero_lower: bool


def partial_frame_sums(g: TruncatedSeries, orb: Orbit) -> np.ndarray:
    """Cumulative sums of |<g, phi^n f>|^2 in n; monotone nondecreasing."""
    vals = np.array([inner_product(g, e) for e in orb.elements])
    return np.cumsum(vals.real**2 + vals.imag**2)


def frame_sum(g: TruncatedSeries, orb: Orbit) -> float:
    """sum_{n=0..K} |<g, phi^n f>|^2 (the finite partial frame sum)."""
    return float(partial_frame_sums(g, orb)[-1])


def gram(orb: Orbit) -> GramMatrix:
    """Hermitian Gram matrix of the orbit elements.

    Assembled entrywise with the same ascending-order inner product used
    everywhere else, mirrored by conjugation, so the result is exactly
    Hermitian and reproducible.
    """
    k = orb.length
    g = np.zeros((k, k), dtype=complex)
    for m in range(k):
        for n in range(m, k):
            val = inner_product(orb.elements[n], orb.elements[m])
            g[m, n] = val
            if n != m:
                g[n, m] = np.conj(val)
    return GramMatrix(entries=g, orbit_len=k)


def frame_section(orb: Orbit) -> FrameSection:
    """Accumulate S = sum_n v_n v_n* over the orbit, in ascending n."""
    n1 = orb.order + 1
    s = np.zeros((n1, n1), dtype=complex)
    for e in orb.elements:
        v = e.coeffs
        s += np.outer(v, np.conj(v))
    return FrameSection(matrix=s, orbit_len=orb.length, order=orb.order)


def _hermitian_eigenvalues(matrix: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(matrix)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(
            f"Hermitian eigensolver failed: {exc}",
            size=matrix.shape[0],
            frobenius=float(np.linalg.norm(matrix)),
        ) from exc


def frame_bounds_estimate(sec: FrameSection) -> FrameBounds:
    """Extremal eigenvalues of the compressed frame operator.

    A_est is clamped at 0; a lower estimate below 1e-12 * B_est is flagged
    numerically zero rather than trusted as a genuine frame bound.
    """
    w = _hermitian_eigenvalues(sec.matrix)
    a = max(float(w[0]), 0.0)
    b = max(float(w[-1]), 0.0)
    tight = b > 0.0 and (b - a) < TIGHT_REL_TOL * b
    return FrameBounds(
        A_est=a,
        B_est=b,
        N=sec.order,
        K=sec.orbit_len - 1,
        tight=tight,
        numerically_zero_lower=a < NUMERICALLY_ZERO_REL * b,
    )


def apply_frame_operator(g: TruncatedSeries, orb: Orbit) -> TruncatedSeries:
    """S g = sum_n <g, phi^n f> phi^n f over the finite orbit."""
    out = np.zeros(orb.order + 1, dtype=complex)
    for e in orb.elements:
        out += inner_product(g, e) * e.coeffs
    return TruncatedSeries(out)


def bounds_vs_truncation(spec, seed_coeffs, orders, orbit_lengths) -> list[FrameBounds]:
    """FrameBounds for every (N, K) pair of the two ascending lists.

    The symbol spec is re-expanded at each order (a truncated expansion is
    only meaningful relative to its own N).
    """
    from .symbols import realize

    orders = list(orders)
    orbit_lengths = list(orbit_lengths)
    if not orders or not orbit_lengths:
        raise ValueError("orders and orbit_lengths must be nonempty")
    if sorted(orders) != orders or sorted(orbit_lengths) != orbit_lengths:
        raise ValueError("orders and orbit_lengths must be ascending")

    results = []
    for n in orders:
        sym = realize(spec, n)
        seed = _padded_seed(seed_coeffs, n)
        for k in orbit_lengths:
            orb = make_orbit(sym, seed, k, n)
            results.append(frame_bounds_estimate(frame_section(orb)))
    return results


def _padded_seed(seed_coeffs, order: int) -> TruncatedSeries:
    arr = np.asarray(seed_coeffs, dtype=complex)
    out = np.zeros(order + 1, dtype=complex)
    m = min(arr.size, order + 1)
    out[:m] = arr[:m]
    return TruncatedSeries(out)
