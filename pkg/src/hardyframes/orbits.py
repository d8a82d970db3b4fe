"""Orbits of the multiplication operator and its finite matrix sections.

An orbit is the finite family {phi^n f : 0 <= n <= K}, every element
truncated to a common order N.  Iterated multiplication can push the true
degree of phi^n f past N; each element therefore carries a `truncated`
flag, and decay diagnostics restrict themselves to the flag-free prefix
so that coefficient loss is never mistaken for genuine norm decay.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .series import TruncatedSeries, mul, norm
from .symbols import SymbolRealization

DECAY_SLOPE_DEADBAND = 1e-3
MIN_ORBIT_FOR_DECAY = 8


@dataclass(frozen=True, eq=False)
class Orbit:
    symbol: SymbolRealization
    seed: TruncatedSeries
    elements: tuple
    norms: np.ndarray
    truncated: np.ndarray
    order: int

    @property
    def length(self) -> int:
        return len(self.elements)

    def coefficient_matrix(self) -> np.ndarray:
        """(K+1) x (N+1) array; row n holds the coefficients of phi^n f."""
        return np.vstack([e.coeffs for e in self.elements])

    def exact_prefix_length(self) -> int:
        """Number of leading elements free of any truncation loss."""
        flagged = np.nonzero(self.truncated)[0]
        return int(flagged[0]) if flagged.size else self.length


@dataclass(frozen=True, eq=False)
class OperatorSection:
    """(N+1) x (N+1) lower-triangular Toeplitz section of T_phi."""

    matrix: np.ndarray
    order: int


@dataclass(frozen=True)
class DecayReport:
    classification: str  # decays_to_zero | bounded_non_decaying | grows
    rate_estimate: float
    n_used: int
    used_truncated_tail: bool


def apply(sym: SymbolRealization, f: TruncatedSeries, order: int) -> TruncatedSeries:
    """One application of the multiplication operator, truncated to order."""
    return mul(sym.series, f, order)


def orbit(sym: SymbolRealization, f: TruncatedSeries, count: int, order: int) -> Orbit:
    """Iterate T_phi from the seed: elements phi^n f for n = 0..count."""
    if count < 0:
        raise ValueError("orbit length must be >= 0")
    seed = f if f.order == order else (
        f.padded(order) if f.order < order else TruncatedSeries(f.coeffs[: order + 1])
    )

    seed_degree = f.exact_degree()
    sym_degree = sym.degree if sym.series_exact else None
    symbol_is_zero = sym.series_exact and sym.degree is None

    elements = [seed]
    for _ in range(count):
        elements.append(mul(sym.series, elements[-1], order))

    truncated = np.zeros(count + 1, dtype=bool)
    truncated[0] = seed_degree is not None and seed_degree > order
    for n in range(1, count + 1):
        if seed_degree is None or symbol_is_zero:
            break  # all elements identically zero: nothing is lost
        if not sym.series_exact:
            truncated[n:] = True
            break
        if truncated[n - 1] or seed_degree + n * sym_degree > order:
            truncated[n:] = True
            break

    norms = np.array([norm(e) for e in elements])
    return Orbit(
        symbol=sym,
        seed=seed,
        elements=tuple(elements),
        norms=norms,
        truncated=truncated,
        order=order,
    )


def matrix_section(sym: SymbolRealization, order: int) -> OperatorSection:
    """T_phi compressed to span{z^0..z^N} in the monomial basis."""
    if order < 0:
        raise ValueError("order must be >= 0")
    phi = np.zeros(order + 1, dtype=complex)
    m = min(sym.series.coeffs.size, order + 1)
    phi[:m] = sym.series.coeffs[:m]
    idx = np.subtract.outer(np.arange(order + 1), np.arange(order + 1))
    mat = np.where(idx >= 0, phi[np.clip(idx, 0, order)], 0.0 + 0.0j)
    return OperatorSection(matrix=mat, order=order)


def decay_profile(orb: Orbit) -> DecayReport:
    """Classify the norm profile by the log-norm slope over the tail half.

    Fits only the truncation-free prefix when it is long enough, so that
    coefficients falling off the end of the representation cannot fake
    decay for an isometric symbol.
    """
    if orb.length < MIN_ORBIT_FOR_DECAY:
        raise ValueError(f"need at least {MIN_ORBIT_FOR_DECAY} orbit elements")

    prefix = orb.exact_prefix_length()
    if prefix >= MIN_ORBIT_FOR_DECAY:
        norms = orb.norms[:prefix]
        used_truncated = False
    else:
        norms = orb.norms
        used_truncated = bool(orb.truncated.any())
    n_used = norms.size

    if np.any(norms == 0.0):
        return DecayReport(
            classification="decays_to_zero",
            rate_estimate=0.0,
            n_used=n_used,
            used_truncated_tail=used_truncated,
        )

    start = n_used // 2
    idx = np.arange(start, n_used, dtype=float)
    logs = np.log(norms[start:])
    design = np.vstack([idx, np.ones_like(idx)]).T
    slope = float(np.linalg.lstsq(design, logs, rcond=None)[0][0])

    if slope < -DECAY_SLOPE_DEADBAND:
        classification = "decays_to_zero"
    elif slope > DECAY_SLOPE_DEADBAND:
        classification = "grows"
    else:
        classification = "bounded_non_decaying"
    return DecayReport(
        classification=classification,
        rate_estimate=float(np.exp(slope)),
        n_used=n_used,
        used_truncated_tail=used_truncated,
    )
