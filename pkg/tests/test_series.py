import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from hardyframes.series import (
    BoundaryGrid,
    add,
    boundary_samples,
    eval_at,
    inner_product,
    monomial,
    mul,
    norm,
    norm_sq,
    norm_via_boundary,
    scale,
    series_from_coeffs,
    zero_series,
)

finite_complex = st.builds(
    complex,
    st.floats(-10, 10, allow_nan=False, allow_infinity=False),
    st.floats(-10, 10, allow_nan=False, allow_infinity=False),
)
coeff_lists = st.lists(finite_complex, min_size=1, max_size=12)

# Gaussian-integer coefficients make float arithmetic exact, so identities
# that hold coefficientwise can be asserted bitwise.
int_complex = st.builds(complex, st.integers(-8, 8), st.integers(-8, 8))
int_coeff_lists = st.lists(int_complex, min_size=1, max_size=8)


def brute_force_product(a, b, target_order):
    """Independent convolution oracle: nested loops, no numpy convolve."""
    out = [0j] * (target_order + 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            if i + j <= target_order:
                out[i + j] += ai * bj
    return np.array(out)


# -- construction -------------------------------------------------------------


def test_from_coeffs_order():
    assert series_from_coeffs([1]).order == 0
    assert series_from_coeffs([1, -1]).order == 1
    s = series_from_coeffs([0, 0, 1])
    assert s.order == 2 and s.coeffs[2] == 1


def test_from_coeffs_rejects_bad_input():
    with pytest.raises(ValueError):
        series_from_coeffs([])
    with pytest.raises(ValueError):
        series_from_coeffs([np.nan])
    with pytest.raises(ValueError):
        series_from_coeffs([1.0, np.inf])


def test_coeffs_are_immutable():
    s = series_from_coeffs([1, 2])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5.0


def test_exact_degree():
    assert series_from_coeffs([1, -1, 0]).exact_degree() == 1
    assert zero_series(4).exact_degree() is None


# -- add ----------------------------------------------------------------------


def test_add_inverse_and_padding():
    zero = add(series_from_coeffs([1]), series_from_coeffs([-1]))
    assert np.all(zero.coeffs == 0)
    s = add(series_from_coeffs([1]), monomial(1))
    assert np.array_equal(s.coeffs, [1, 1])
    t = add(series_from_coeffs([1, -1]), monomial(1))
    assert np.array_equal(t.coeffs, [1, 0])


# -- mul ----------------------------------------------------------------------


def test_mul_monomials():
    z = monomial(1)
    z2 = mul(z, z, 2)
    assert np.array_equal(z2.coeffs, [0, 0, 1])


@pytest.mark.parametrize("n", [1, 5, 17])
def test_mul_telescoping(n):
    # (1 - z) * (1 + z + ... + z^n) truncated at n collapses to 1
    ones = series_from_coeffs(np.ones(n + 1))
    factor = series_from_coeffs([1, -1])
    prod = mul(factor, ones, n)
    expected = brute_force_product(factor.coeffs, ones.coeffs, n)
    assert np.array_equal(prod.coeffs, expected)
    assert np.array_equal(prod.coeffs, monomial(0, n).coeffs)


def test_mul_constant_is_scaling():
    f = series_from_coeffs([1, 2, 3])
    c = series_from_coeffs([0.5j])
    assert np.array_equal(mul(c, f, 2).coeffs, scale(f, 0.5j).coeffs)


@given(int_coeff_lists, int_coeff_lists)
def test_mul_commutative(a, b):
    fa, fb = series_from_coeffs(a), series_from_coeffs(b)
    t = len(a) + len(b) - 2
    assert np.array_equal(mul(fa, fb, t).coeffs, mul(fb, fa, t).coeffs)


@given(int_coeff_lists, int_coeff_lists, int_coeff_lists)
def test_mul_associative_up_to_target(a, b, c):
    fa, fb, fc = map(series_from_coeffs, (a, b, c))
    t = len(a) + len(b) + len(c)
    left = mul(mul(fa, fb, t), fc, t)
    right = mul(fa, mul(fb, fc, t), t)
    assert np.array_equal(left.coeffs, right.coeffs)


@given(st.integers(70, 100), st.integers(0, 2**32 - 1))
def test_mul_fft_matches_direct(size, seed):
    # both operands above the FFT threshold: cross-check against the
    # direct path via numpy convolve
    rng = np.random.default_rng(seed)
    a = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    b = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    t = 2 * size - 2
    got = mul(series_from_coeffs(a), series_from_coeffs(b), t).coeffs
    want = np.convolve(a, b)[: t + 1]
    scale_ref = max(1.0, float(np.max(np.abs(want))))
    assert np.max(np.abs(got - want)) < 1e-12 * scale_ref


# -- inner product and norms ---------------------------------------------------


def test_inner_monomials_orthonormal():
    for k in range(4):
        for n in range(4):
            val = inner_product(monomial(k, 5), monomial(n, 5))
            assert val == (1.0 if k == n else 0.0)


def test_inner_picks_constant_coefficient():
    assert inner_product(series_from_coeffs([1, -1]), monomial(0, 1)) == 1.0


@given(coeff_lists, st.integers(0, 10))
def test_inner_against_difference_vector(h_coeffs, n):
    h = series_from_coeffs(h_coeffs)
    order = max(h.order, n + 1)
    probe = add(monomial(n, order), scale(monomial(n + 1, order), -1.0))
    got = inner_product(h, probe)
    a_n = h.coeffs[n] if n <= h.order else 0.0
    a_n1 = h.coeffs[n + 1] if n + 1 <= h.order else 0.0
    assert abs(got - (a_n - a_n1)) < 1e-12


@given(coeff_lists, coeff_lists)
def test_inner_conjugate_symmetry(a, b):
    f, g = series_from_coeffs(a), series_from_coeffs(b)
    assert inner_product(f, g) == np.conj(inner_product(g, f))


@given(coeff_lists, coeff_lists, coeff_lists, finite_complex, finite_complex)
def test_inner_sesquilinear(a, b, c, alpha, beta):
    f, g, h = map(series_from_coeffs, (a, b, c))
    lhs = inner_product(add(scale(f, alpha), scale(g, beta)), h)
    rhs = alpha * inner_product(f, h) + beta * inner_product(g, h)
    bound = 1e-10 * max(1.0, abs(lhs), abs(rhs))
    assert abs(lhs - rhs) < bound


def test_norm_examples():
    assert norm(monomial(3, 6)) == 1.0
    assert abs(norm(series_from_coeffs([1, -1])) - np.sqrt(2)) < 1e-15
    assert norm(zero_series(5)) == 0.0
    assert norm_sq(series_from_coeffs(np.ones(7))) == 7.0


@given(coeff_lists)
def test_parseval(coeffs):
    g = series_from_coeffs(coeffs)
    total = sum(
        abs(inner_product(g, monomial(n, g.order))) ** 2 for n in range(g.order + 1)
    )
    assert abs(total - norm_sq(g)) <= 1e-12 * max(1.0, norm_sq(g))


# -- boundary sampling ----------------------------------------------------------


def test_boundary_constant():
    samples = boundary_samples(monomial(0, 0), BoundaryGrid(8))
    assert np.allclose(samples.values, 1.0, atol=1e-15)


def test_boundary_shift_fourth_roots():
    samples = boundary_samples(monomial(1), BoundaryGrid(4))
    assert np.allclose(samples.values, [1, 1j, -1, -1j], atol=1e-15)


def test_boundary_one_minus_z_vanishes_at_one():
    samples = boundary_samples(series_from_coeffs([1, -1]), BoundaryGrid(8))
    assert abs(samples.values[0]) < 1e-15


def test_norm_via_boundary_matches():
    f = series_from_coeffs([1, -1])
    val = norm_via_boundary(boundary_samples(f, BoundaryGrid(8)))
    assert abs(val - np.sqrt(2)) < 1e-10


def test_norm_via_boundary_aliasing_flagged():
    samples = boundary_samples(monomial(2), BoundaryGrid(2))
    assert not samples.alias_safe  # M = 2 <= 2N = 4
    assert abs(norm_via_boundary(samples) - 1.0) < 1e-12  # aliased but finite


@given(coeff_lists)
def test_discrete_parseval(coeffs):
    f = series_from_coeffs(coeffs)
    grid = BoundaryGrid(32)  # > 2 * max order 11
    samples = boundary_samples(f, grid)
    assert samples.alias_safe
    assert abs(norm_via_boundary(samples) - norm(f)) <= 1e-10 * max(1.0, norm(f))


# -- pointwise evaluation --------------------------------------------------------


def test_eval_examples():
    assert eval_at(series_from_coeffs([1, -1]), 0.5) == 0.5
    assert eval_at(monomial(3), 0.0) == 0.0


def test_eval_kernel_truncation_geometric():
    z0 = 0.4 + 0.3j
    n = 12
    kernel = series_from_coeffs(np.conj(z0) ** np.arange(n + 1))
    got = eval_at(kernel, z0)
    want = sum(abs(z0) ** (2 * k) for k in range(n + 1))
    assert abs(got - want) < 1e-13


def test_eval_outside_disk_rejected():
    with pytest.raises(ValueError):
        eval_at(monomial(1), 1.2)
