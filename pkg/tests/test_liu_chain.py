"""
Tests for Cauchy determinants, multi-indices, the Leibniz integration engine
and the chain of forms of hat_D_n.
"""

import dataclasses
import itertools
import sys
from pathlib import Path

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from errors import CostGuardError
from fredholm.series import series_terms
from kernels import PointConfig
from liu_chain import (
    DeterminantFactor,
    MultiIndex,
    Stage,
    Variable,
    airy_cdf_via_sum,
    cauchy_det,
    cauchy_det_direct,
    conjoin,
    enumerate_indices,
    eval_D_n,
    eval_D_n_core,
    hat_D_direct,
    hat_D_stage,
    leibniz_integral,
    grouped_term_check,
)
from liu_chain.leibniz import permutation_sign
from special.tracy_widom import f_gue
from utils import RunConfig

ORIGIN = PointConfig((0.0,), (0.0,))
CHAIN_POINTS = PointConfig((0.0, 1.0), (0.0, 0.0))

entry = st.complex_numbers(max_magnitude=3.0, allow_nan=False, allow_infinity=False)


def test_cauchy_det_examples():
    print("Testing Cauchy determinant examples...")

    assert cauchy_det((2,), (1,)) == 1.0
    assert abs(cauchy_det((0, 1), (2, 3)) + 1.0 / 12.0) < 1e-15
    assert abs(cauchy_det_direct((0, 1), (2, 3)) + 1.0 / 12.0) < 1e-15
    assert cauchy_det((), ()) == 1.0
    assert conjoin((1, 2), (), (3,)) == (1 + 0j, 2 + 0j, 3 + 0j)

    for W, Wt in (((1, 2), (3,)), ((1, 2), (2, 5))):
        try:
            cauchy_det(W, Wt)
            assert False, f"Should have raised ValueError for {W}, {Wt}"
        except ValueError:
            pass

    print("✓ Cauchy determinant example test passed")


def test_cauchy_product_form_matches_lu():
    print("Testing Cauchy product form against LU...")

    rng = np.random.default_rng(11)
    for _ in range(50):
        W = rng.normal(size=4) + 1j * rng.normal(size=4)
        Wt = rng.normal(size=4) + 1j * rng.normal(size=4) + 3.0
        closed = cauchy_det(W, Wt)
        direct = cauchy_det_direct(W, Wt)
        assert abs(closed - direct) < 1e-10 * abs(direct)

    print("✓ Cauchy product form test passed")


@settings(max_examples=40, deadline=None)
@given(st.lists(entry, min_size=1, max_size=5))
def test_cauchy_row_swap_flips_sign(W):
    """Swapping two w entries negates C(W; W~)."""
    Wt = [w + 10.0 for w in W]
    if len(set(W)) < len(W):
        return
    swapped = list(W)
    swapped[0], swapped[-1] = swapped[-1], swapped[0]
    expected = -1.0 if len(W) > 1 else 1.0
    value = cauchy_det(W, Wt)
    assert abs(cauchy_det(swapped, Wt) - expected * value) <= 1e-9 * abs(value)


def test_multi_index():
    print("Testing MultiIndex...")

    n = MultiIndex((2, 1))
    assert n.m == 2 and n.total == 3
    assert n.k == (1, 1)
    assert n.admissible
    assert n.factorial_weight == 4.0
    assert str(n) == "(2,1)"
    assert not MultiIndex((0, 1)).admissible
    assert MultiIndex((1, 2)).k == (-1, 2)

    for bad in ((), (1, -1)):
        try:
            MultiIndex(bad)
            assert False, f"Should have raised ValueError for {bad}"
        except ValueError:
            pass
    try:
        MultiIndex((3, 2))
        assert False, "Should have raised CostGuardError"
    except CostGuardError:
        pass

    indices = list(enumerate_indices(2, 2))
    assert [x.n for x in indices] == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    try:
        list(enumerate_indices(2, 5))
        assert False, "Should have raised CostGuardError"
    except CostGuardError:
        pass

    print("✓ MultiIndex test passed")


def test_leibniz_engine():
    """Two variables linked by C(v; u) C(u; v) against an explicit double sum."""
    print("Testing the Leibniz engine...")

    a = np.array([-1.0, -2.0 + 1j, -1.5 - 0.5j])
    b = np.array([1.0, 2.0 - 1j])
    wa = np.array([0.5, 0.25j, 1.0])
    wb = np.array([2.0, -1.0])
    u = Variable("u", "left", a, wa)
    v = Variable("v", "right", b, wb)

    value = leibniz_integral([DeterminantFactor([v], [u]), DeterminantFactor([u], [v])])
    expected = sum(wa[i] * wb[j] / ((b[j] - a[i]) * (a[i] - b[j])) for i in range(3) for j in range(2))
    assert abs(value - expected) < 1e-14

    assert leibniz_integral([]) == 1.0
    assert leibniz_integral([DeterminantFactor([], [])]) == 1.0
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((1, 2, 0)) == 1

    for factors in ([DeterminantFactor([v], [u])],
                    [DeterminantFactor([u], [u]), DeterminantFactor([u], [v])]):
        try:
            leibniz_integral(factors)
            assert False, "Unbalanced variables should be rejected"
        except ValueError:
            pass
    try:
        DeterminantFactor([u, v], [u])
        assert False, "Non-square factor should be rejected"
    except ValueError:
        pass
    try:
        leibniz_integral([DeterminantFactor([v], [u], kernel="h9"), DeterminantFactor([u], [v])])
        assert False, "Unknown kernel should be rejected"
    except ValueError:
        pass

    print("✓ Leibniz engine test passed")


def test_D_n_basics():
    print("Testing D_n...")

    config = RunConfig()
    assert eval_D_n(CHAIN_POINTS, MultiIndex((0, 0)), [0.5], config) == 1.0
    assert hat_D_direct(CHAIN_POINTS, MultiIndex((0, 0)), config) == 1.0

    # no i = 2 variables: the core does not see z
    n = MultiIndex((1, 0))
    core = eval_D_n_core(CHAIN_POINTS, n, [0.3], config)
    assert abs(core - eval_D_n_core(CHAIN_POINTS, n, [0.5j], config)) < 1e-10

    for z in ([0.0], [1.0], [0.5, 0.5], []):
        try:
            eval_D_n(CHAIN_POINTS, n, z, config)
            assert False, f"Should have raised ValueError for z={z}"
        except ValueError:
            pass
    try:
        hat_D_direct(ORIGIN, n, config)
        assert False, "Mismatched m should be rejected"
    except ValueError:
        pass

    print("✓ D_n test passed")


def test_one_point_term_matches_series():
    print("Testing m=1 hat_D against the series term...")

    config = RunConfig()
    value = hat_D_direct(ORIGIN, MultiIndex((1,)), config)
    term = series_terms(ORIGIN, config, 1)[1]
    assert abs(value - term) < 1e-7, f"hat_D(1) = {value}, series term {term}"

    print("✓ m=1 series term test passed")


def test_chain_stages_agree():
    print("Testing the chain of hat_D forms...")

    config = RunConfig()
    for n in ((1, 0), (1, 1), (2, 1)):
        index = MultiIndex(n)
        values = [hat_D_direct(CHAIN_POINTS, index, config)]
        values += [hat_D_stage(CHAIN_POINTS, index, config, stage) for stage in Stage]
        for x, y in itertools.combinations(values, 2):
            assert abs(x - y) < 1e-5, f"hat_D{index} forms disagree: {values}"

    assert hat_D_stage(CHAIN_POINTS, MultiIndex((1, 1)), config, "lemma22ii") == \
        hat_D_stage(CHAIN_POINTS, MultiIndex((1, 1)), config, Stage.LEMMA22II)

    print("✓ Chain agreement test passed")


def test_non_admissible_terms_vanish():
    print("Testing vanishing off the admissible set...")

    config = RunConfig()
    for n in ((0, 1), (1, 2)):
        index = MultiIndex(n)
        assert abs(hat_D_direct(CHAIN_POINTS, index, config)) < 1e-6, f"hat_D{index} does not vanish"
        assert hat_D_stage(CHAIN_POINTS, index, config, Stage.LEMMA22II) == 0.0
        assert hat_D_stage(CHAIN_POINTS, index, config, Stage.LEMMA23) == 0.0

    print("✓ Vanishing test passed")


def test_circle_radius_independence():
    print("Testing z-circle radius independence...")

    config = RunConfig(circle_nodes=128)
    n = MultiIndex((1, 1))
    inner = hat_D_direct(CHAIN_POINTS, n, dataclasses.replace(config, z_radius=0.4))
    outer = hat_D_direct(CHAIN_POINTS, n, dataclasses.replace(config, z_radius=0.6))
    assert abs(inner - outer) < 1e-8, f"Radius dependence {abs(inner - outer)}"

    print("✓ Radius independence test passed")


def test_grouped_term():
    print("Testing hat_D against the grouped series term...")

    comparison = grouped_term_check(CHAIN_POINTS, MultiIndex((1, 1)), RunConfig())
    assert comparison.deviation < 1e-5, f"Deviation {comparison.deviation}"

    try:
        grouped_term_check(CHAIN_POINTS, MultiIndex((0, 1)), RunConfig())
        assert False, "Non-admissible index should be rejected"
    except ValueError:
        pass

    print("✓ Grouped term test passed")


def test_airy_cdf_via_sum():
    print("Testing the truncated sum...")

    config = RunConfig()
    assert airy_cdf_via_sum(CHAIN_POINTS, 0, config).value == 1.0

    result = airy_cdf_via_sum(ORIGIN, 3, config)
    assert [order for order, _ in result.history] == [0, 1, 2, 3]
    assert abs(result.real - f_gue(0.0, config).real) < 5e-3

    for cutoff, error in ((4, CostGuardError), (-1, ValueError)):
        try:
            airy_cdf_via_sum(ORIGIN, cutoff, config)
            assert False, f"Should have raised {error.__name__} for cutoff {cutoff}"
        except error:
            pass

    print("✓ Truncated sum test passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 80)
    print("Running chain expansion tests")
    print("=" * 80)

    try:
        test_cauchy_det_examples()
        test_cauchy_product_form_matches_lu()
        test_cauchy_row_swap_flips_sign()
        test_multi_index()
        test_leibniz_engine()
        test_D_n_basics()
        test_one_point_term_matches_series()
        test_chain_stages_agree()
        test_non_admissible_terms_vanish()
        test_circle_radius_independence()
        test_grouped_term()
        test_airy_cdf_via_sum()

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
