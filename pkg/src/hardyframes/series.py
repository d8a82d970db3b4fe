"""Truncated power-series arithmetic for functions on the unit disk.

A holomorphic function with square-summable Taylor coefficients is
represented by its first N+1 coefficients.  All operations are exact on
the retained coefficients; anything above the stated order is discarded,
never approximated.  Reductions (norms, inner products) accumulate in
ascending index order so serial results are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

# Direct convolution is exact and cheap while either operand is short;
# the FFT path takes over only when both operands exceed this length.
FFT_MIN_OPERAND_LEN = 64


def _ascending_sum(values: np.ndarray) -> complex:
    """Sum in strictly ascending index order (serial, reproducible)."""
    if values.size == 0:
        return 0j
    return complex(np.cumsum(values)[-1])


def _ascending_sum_real(values: np.ndarray) -> float:
    if values.size == 0:
        return 0.0
    return float(np.cumsum(values)[-1])


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Degree-N surrogate for a disk function: coefficients a_0..a_N."""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficient vector must be 1-d and nonempty")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def exact_degree(self) -> int | None:
        """Index of the last exactly-nonzero coefficient, None if all zero."""
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) if nz.size else None

    def padded(self, order: int) -> "TruncatedSeries":
        """Same coefficients at a (weakly) larger order."""
        if order < self.order:
            raise ValueError("padded() cannot reduce the order")
        out = np.zeros(order + 1, dtype=complex)
        out[: self.coeffs.size] = self.coeffs
        return TruncatedSeries(out)


@dataclass(frozen=True)
class BoundaryGrid:
    """M equispaced sample points on the unit circle."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("grid size must be >= 1")

    @cached_property
    def points(self) -> np.ndarray:
        pts = np.exp(2j * np.pi * np.arange(self.size) / self.size)
        pts.flags.writeable = False
        return pts


@dataclass(frozen=True, eq=False)
class BoundarySamples:
    """Values of a series on a boundary grid, tagged with the source order."""

    grid: BoundaryGrid
    values: np.ndarray
    source_order: int

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex)
        if vals.size != self.grid.size:
            raise ValueError("values length must equal grid size")
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @property
    def alias_safe(self) -> bool:
        """True when the grid resolves the series without aliasing (M > 2N)."""
        return self.grid.size > 2 * self.source_order


def series_from_coeffs(coeffs) -> TruncatedSeries:
    """Build a series from a_0..a_N; order is len(coeffs) - 1."""
    return TruncatedSeries(np.asarray(coeffs, dtype=complex))


def zero_series(order: int) -> TruncatedSeries:
    return TruncatedSeries(np.zeros(order + 1, dtype=complex))


def monomial(k: int, order: int | None = None) -> TruncatedSeries:
    """The basis element z^k, optionally padded to a larger order."""
    if k < 0:
        raise ValueError("monomial degree must be >= 0")
    n = k if order is None else order
    if n < k:
        raise ValueError("order must be >= monomial degree")
    out = np.zeros(n + 1, dtype=complex)
    out[k] = 1.0
    return TruncatedSeries(out)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise sum; the shorter operand is zero-padded."""
    n = max(a.coeffs.size, b.coeffs.size)
    out = np.zeros(n, dtype=complex)
    out[: a.coeffs.size] = a.coeffs
    out[: b.coeffs.size] += b.coeffs
    return TruncatedSeries(out)


def scale(a: TruncatedSeries, factor: complex) -> TruncatedSeries:
    return TruncatedSeries(a.coeffs * complex(factor))


def _convolve_fft(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    n = x.size + y.size - 1
    size = 1 << (n - 1).bit_length()
    fx = np.fft.fft(x, size)
    fy = np.fft.fft(y, size)
    return np.fft.ifft(fx * fy)[:n]


def _trim_trailing_zeros(x: np.ndarray) -> np.ndarray:
    nz = np.nonzero(x)[0]
    return x[: nz[-1] + 1] if nz.size else x[:0]


def mul(a: TruncatedSeries, b: TruncatedSeries, target_order: int) -> TruncatedSeries:
    """Cauchy product truncated to target_order.

    Retained coefficients c_k = sum_{i+j=k} a_i b_j are computed by direct
    convolution (exact) unless both operands are long, in which case an
    FFT convolution is used; both paths agree to 1e-12 and are tested
    against each other.  Trailing exact zeros are stripped first, so a
    sparse operand (a shift, a constant) always takes the exact path
    regardless of its padded order.
    """
    if target_order < 0:
        raise ValueError("target_order must be >= 0")
    out = np.zeros(target_order + 1, dtype=complex)
    # The product only needs coefficients up to target_order.
    xa = _trim_trailing_zeros(a.coeffs[: target_order + 1])
    xb = _trim_trailing_zeros(b.coeffs[: target_order + 1])
    if xa.size == 0 or xb.size == 0:
        return TruncatedSeries(out)
    if min(xa.size, xb.size) <= FFT_MIN_OPERAND_LEN:
        full = np.convolve(xa, xb)
    else:
        full = _convolve_fft(xa, xb)
    m = min(full.size, target_order + 1)
    out[:m] = full[:m]
    return TruncatedSeries(out)


def inner_product(f: TruncatedSeries, g: TruncatedSeries) -> complex:
    """<f, g> = sum_n a_n conj(b_n) over the common coefficient range.

    Real and imaginary parts are accumulated from commutative scalar
    products, so inner(f, g) == conj(inner(g, f)) holds bitwise (the
    fused complex-multiply kernels do not guarantee that).
    """
    n = min(f.coeffs.size, g.coeffs.size)
    fr, fi = f.coeffs.real[:n], f.coeffs.imag[:n]
    gr, gi = g.coeffs.real[:n], g.coeffs.imag[:n]
    re = _ascending_sum_real(fr * gr + fi * gi)
    im = _ascending_sum_real(fi * gr - fr * gi)
    return complex(re, im)


def norm_sq(f: TruncatedSeries) -> float:
    """Squared norm sum |a_n|^2, accumulated in ascending order."""
    c = f.coeffs
    return _ascending_sum_real(c.real**2 + c.imag**2)


def norm(f: TruncatedSeries) -> float:
    return float(np.sqrt(norm_sq(f)))


def boundary_samples(f: TruncatedSeries, grid: BoundaryGrid) -> BoundarySamples:
    """Evaluate the polynomial on the grid: values_j = sum_n a_n e^{2ipi jn/M}.

    Coefficients with indices differing by M alias onto the same grid
    values, so they are folded mod M before the transform; the result is
    the exact evaluation either way.
    """
    m = grid.size
    folded = np.zeros(m, dtype=complex)
    for start in range(0, f.coeffs.size, m):
        chunk = f.coeffs[start : start + m]
        folded[: chunk.size] += chunk
    values = np.fft.ifft(folded) * m
    return BoundarySamples(grid=grid, values=values, source_order=f.order)


def norm_via_boundary(samples: BoundarySamples) -> float:
    """Quadrature norm sqrt((1/M) sum |v_j|^2).

    Equals the coefficient norm exactly (up to rounding) when the grid
    satisfies M > 2N; check `samples.alias_safe` before relying on that.
    """
    v = samples.values
    total = _ascending_sum_real(v.real**2 + v.imag**2)
    return float(np.sqrt(total / samples.grid.size))


def eval_at(f: TruncatedSeries, z: complex) -> complex:
    """Horner evaluation at a point of the closed disk."""
    z = complex(z)
    if abs(z) > 1.0 + 1e-12:
        raise ValueError(f"evaluation point |z|={abs(z)} outside the closed disk")
    acc = 0j
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return acc
