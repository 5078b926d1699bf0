"""
Tests for Gauss-Legendre rules, discretized contours and nested contour families.
"""

import math
import sys
from pathlib import Path

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from errors import ContourOrderingError, NonFiniteIntegrandError
from quadrature import (
    build_contour,
    build_family,
    circle,
    gauss_legendre,
    integrate,
    integrate_with_estimate,
    is_right_of,
    panels_for,
    ray_pair,
    reverse,
    validate_ordering,
    vertical_line,
)
from quadrature.contours import ContourKind, ContourSpec
from utils import RunConfig

coefficient = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)


@settings(max_examples=50, deadline=None)
@given(st.lists(coefficient, min_size=6, max_size=6), st.integers(min_value=1, max_value=4))
def test_gauss_legendre_polynomial_exactness(coeffs, segments):
    """Three nodes per panel integrate every quintic exactly."""
    nodes, weights = gauss_legendre(-1.0, 2.0, 3, segments)
    poly = np.polynomial.Polynomial(coeffs)
    exact = poly.integ()(2.0) - poly.integ()(-1.0)
    assert abs(np.dot(weights, poly(nodes)) - exact) < 1e-10 * (1 + abs(exact))


def test_gauss_legendre_rejects_bad_input():
    print("Testing gauss_legendre validation...")

    for args in ((1.0, 1.0, 4), (0.0, 1.0, 0), (0.0, 1.0, 4, 0)):
        try:
            gauss_legendre(*args)
            assert False, f"Should have raised ValueError for {args}"
        except ValueError:
            pass

    nodes, weights = gauss_legendre(0.0, 3.0, 5, 3)
    assert len(nodes) == 15
    assert np.all(np.diff(nodes) > 0), "Nodes must increase"
    assert abs(weights.sum() - 3.0) < 1e-13
    assert panels_for(8.0, 0.5) == 16
    assert panels_for(0.1, 0.5) == 1

    print("✓ gauss_legendre validation test passed")


def test_circle_residues():
    """Normalized circle weights give the residue of 1/z and kill z^k."""
    print("Testing circle residues...")

    qc = build_contour(circle(0.0, 0.5, 32))
    assert abs(integrate(qc, lambda z: 1.0 / z) - 1.0) < 1e-14
    for k in range(0, 5):
        assert abs(integrate(qc, lambda z: z ** k)) < 1e-14

    # reversing the orientation flips the sign
    assert abs(integrate(reverse(qc), lambda z: 1.0 / z) + 1.0) < 1e-14

    print("✓ Circle residue test passed")


def test_vertical_line_gaussian():
    """int_{iR} e^{w^2} dw / (2 pi i) = 1 / (2 sqrt(pi))."""
    print("Testing vertical line Gaussian...")

    qc = build_contour(vertical_line(0.0, 8.0, 32, segments=4))
    value = integrate(qc, lambda w: np.exp(w ** 2))
    assert abs(value - 1.0 / (2.0 * math.sqrt(math.pi))) < 1e-12, f"Got {value}"

    print("✓ Vertical line test passed")


def test_ray_pair_airy_at_zero():
    """The Airy integral over a left ray pair at x = 0."""
    print("Testing ray pair quadrature...")

    spec = ray_pair(-1.0, 2 * math.pi / 3, 8.0, 24, segments=4)
    value, error = integrate_with_estimate(spec, lambda u: np.exp(-u ** 3 / 3.0))
    assert abs(value.real - 0.355028053887817) < 1e-12, f"Got {value}"
    assert abs(value.imag) < 1e-12
    assert error < 1e-10

    qc = build_contour(spec)
    assert len(qc) == 2 * 24 * 4
    # conjugate-symmetric node set
    assert np.allclose(np.sort_complex(qc.points), np.sort_complex(np.conj(qc.points)))

    print("✓ Ray pair test passed")


def test_contour_spec_validation():
    print("Testing ContourSpec validation...")

    bad = [
        dict(kind=ContourKind.RAY_PAIR, vertex=0, angle=math.pi / 2),
        dict(kind=ContourKind.RAY_PAIR, vertex=0, angle=1.0, truncation=-1.0),
        dict(kind=ContourKind.RAY_PAIR, vertex=0, angle=1.0, nodes_per_segment=1),
        dict(kind=ContourKind.CIRCLE, vertex=0, truncation=0.5),
    ]
    for kwargs in bad:
        try:
            ContourSpec(**kwargs)
            assert False, f"Should have raised ValueError for {kwargs}"
        except ValueError:
            pass

    spec = ray_pair(-1.0, 2 * math.pi / 3, 8.0, 4)
    assert spec.is_left and not spec.is_right
    inside = is_right_of([0.0, -2.0, -3.0 + 1j, -1.0 + 3j], spec)
    assert list(inside) == [True, False, False, True]

    try:
        is_right_of([0.0], circle(0.0, 1.0, 8))
        assert False, "Side tests on a circle should raise"
    except ValueError:
        pass

    print("✓ ContourSpec validation test passed")


def test_non_finite_integrand():
    print("Testing non-finite integrand detection...")

    qc = build_contour(circle(0.0, 1.0, 8))
    try:
        integrate(qc, lambda z: np.where(z.real > 0.9, np.nan, 1.0))
        assert False, "Should have raised NonFiniteIntegrandError"
    except NonFiniteIntegrandError as e:
        assert abs(e.node - 1.0) < 1e-14

    print("✓ Non-finite integrand test passed")


def test_family_ordering():
    print("Testing contour family ordering...")

    config = RunConfig(panel_nodes=4, truncation=4.0)
    family = build_family(3, config)
    assert family.left(1).spec.vertex == -1.0
    assert family.left(3, "in").spec.vertex.real < family.left(2, "in").spec.vertex.real < -1.0
    assert -1.0 < family.left(2, "out").spec.vertex.real < family.left(3, "out").spec.vertex.real < 0.0
    assert family.right(3, "in").spec.vertex.real > family.right(2, "in").spec.vertex.real > 1.0
    assert 0.0 < family.right(3, "out").spec.vertex.real < family.right(2, "out").spec.vertex.real < 1.0
    assert abs(family.right_main.spec.angle - math.pi / 5) < 1e-15

    # out_4 on the left would cross the imaginary axis
    try:
        validate_ordering(4)
        assert False, "Should have raised ContourOrderingError"
    except ContourOrderingError:
        pass
    validate_ordering(6, kernel_only=True)

    kernel = build_family(5, config, right_angle=math.pi / 3, kernel_only=True)
    assert kernel.left_out == {} and kernel.right_in == {}
    assert len(kernel.left_in) == 4

    print("✓ Contour family test passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 80)
    print("Running quadrature tests")
    print("=" * 80)

    try:
        test_gauss_legendre_polynomial_exactness()
        test_gauss_legendre_rejects_bad_input()
        test_circle_residues()
        test_vertical_line_gaussian()
        test_ray_pair_airy_at_zero()
        test_contour_spec_validation()
        test_non_finite_integrand()
        test_family_ordering()

        print("\n" + "=" * 80)
        print("✓ All tests passed!")
        print("=" * 80)
        return True

    except AssertionError as e:
        print(f"\n✗ Test failed: {e}")
        return False
    except Exception as e:
        print(f"\n✗ Error running tests: {e}")
        import traceback
        traceback.print_exc()
        return False


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
