"""
Tests for the Airy function paths and the GUE Tracy-Widom distribution.
"""

import math
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from quadrature import build_contour, ray_pair
from special import airy_ai, airy_ai_expansion, airy_ai_prime, airy_ai_via_contour, airy_kernel, airy_value_via_contour
from special.airy import AI_0, AIP_0, _asymptotic, _maclaurin
from special.tracy_widom import f_gue
from utils import RunConfig


def test_airy_at_zero():
    print("Testing Ai(0) and Ai'(0)...")

    assert abs(airy_ai(0.0) - AI_0) < 1e-15
    assert abs(airy_ai_prime(0.0) - AIP_0) < 1e-15
    assert airy_ai_expansion(0.0).method == "series"
    assert abs(airy_ai_expansion(0.0).ai - AI_0) < 1e-16

    values = airy_ai(np.array([0.0, 1.0]))
    assert values.shape == (2,)
    assert abs(values[1] - 0.1352924163128814) < 1e-14
    assert 0.0 < airy_ai(10.0) < 1.2e-10

    print("✓ Airy at zero test passed")


def test_airy_equation_residual():
    """Ai'' = x Ai by a central second difference."""
    h = 1e-3
    x = np.linspace(-8.0, 8.0, 161)
    second = (airy_ai(x + h) - 2.0 * airy_ai(x) + airy_ai(x - h)) / h ** 2
    residual = np.abs(second - x * airy_ai(x)) / (1.0 + x ** 2)
    assert np.max(residual) <= 1e-6, f"Airy equation residual {np.max(residual)}"


def test_airy_expansion_against_scipy():
    """Series and asymptotic branches, including the 3.5 <= |x| <= 5.5 overlap band."""
    print("Testing Airy expansions...")

    for x in np.linspace(-12.0, 12.0, 97):
        value = airy_ai_expansion(x)
        error = abs(value.ai - airy_ai(x))
        if abs(x) <= 3 or abs(x) >= 9:
            assert error < 1e-12, f"Ai({x}) off by {error}"
        elif abs(x) <= 5.5:
            assert error < 1e-10, f"Ai({x}) off by {error} in the overlap band"
        else:
            assert error < 1e-6, f"Ai({x}) off by {error}"
        assert value.method == ("series" if abs(x) <= 5.5 else "asymptotic")

    # both branches meet at the top of the band
    assert abs(_asymptotic(5.5) - _maclaurin(5.5)) < 1e-10

    try:
        airy_ai_expansion(float('inf'))
        assert False, "Should have raised ValueError"
    except ValueError:
        pass

    print("✓ Airy expansion test passed")


def test_airy_contour_integral():
    print("Testing Airy contour integral...")

    for x in np.linspace(-5.0, 5.0, 21):
        value = airy_ai_via_contour(x)
        assert abs(value.imag) <= 1e-11, f"Imaginary residue {value.imag} at {x}"
        assert abs(value.real - airy_ai(x)) < 1e-10, f"Ai({x}) off by {abs(value.real - airy_ai(x))}"

    assert airy_value_via_contour(1.0).method == "contour"

    right = build_contour(ray_pair(1.0, math.pi / 5, 8.0, 16))
    try:
        airy_ai_via_contour(0.0, right)
        assert False, "A right ray pair should be rejected"
    except ValueError:
        pass

    print("✓ Airy contour test passed")


def test_airy_kernel_diagonal():
    """The diagonal limit joins the off-diagonal formula continuously."""
    print("Testing Airy kernel diagonal...")

    x = np.array([-2.0, 0.0, 1.5])
    diagonal = np.diag(airy_kernel(x, x))
    nearby = np.diag(airy_kernel(x, x + 1e-6))
    assert np.max(np.abs(diagonal - nearby)) < 1e-5
    assert abs(diagonal[1] - AIP_0 ** 2) < 1e-15

    K = airy_kernel(x, x)
    assert np.allclose(K, K.T, atol=1e-14)

    print("✓ Airy kernel test passed")


def test_tracy_widom_values():
    print("Testing F_GUE...")

    config = RunConfig()
    assert abs(f_gue(-2.0, config).real - 0.413224142505) < 1e-6
    assert abs(f_gue(8.0, config).real - 1.0) < 1e-10
    assert f_gue(-8.0, config).real < 1e-6

    values = [f_gue(s, config).real for s in (-4.0, -3.0, -2.0, -1.0, 0.0, 1.0)]
    assert all(a < b for a, b in zip(values, values[1:])), f"Not monotone: {values}"

    result = f_gue(-1.0, config)
    assert len(result.history) == 2
    assert result.error_estimate < config.tol

    try:
        f_gue(float('nan'))
        assert False, "Should have raised ValueError"
    except ValueError:
        pass

    print("✓ F_GUE test passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 80)
    print("Running special function tests")
    print("=" * 80)

    try:
        test_airy_at_zero()
        test_airy_equation_residual()
        test_airy_expansion_against_scipy()
        test_airy_contour_integral()
        test_airy_kernel_diagonal()
        test_tracy_widom_values()

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
