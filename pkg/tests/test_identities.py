"""
Tests for the block Andreief identity, antisymmetric integration and the
Gaussian-Airy integral.
"""

import math
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from errors import CostGuardError
from identities import (
    BlockPartition,
    DiscreteMeasure,
    andreief_pair,
    andreief_sweep,
    antisymmetry_check,
    closed_form,
    exact_det,
    gaussian_airy_integral,
    left_limit,
    okounkov_pair,
    polynomial,
    random_instance,
)

ONE = polynomial([1])
X = polynomial([0, 1])


def test_measure_and_partition_validation():
    print("Testing measure and partition validation...")

    for atoms, weights in (((), ()), ((0, 1), (1,)), ((0,), (0,))):
        try:
            DiscreteMeasure(atoms, weights)
            assert False, f"Should have raised ValueError for {atoms}, {weights}"
        except ValueError:
            pass

    for blocks in (((0,), (0, 1)), ((0,), ()), ((1, 2),)):
        try:
            BlockPartition(blocks)
            assert False, f"Should have raised ValueError for {blocks}"
        except ValueError:
            pass

    partition = BlockPartition(((0, 2), (1,)))
    assert partition.n == 3
    assert partition.phi(0, 2) == 1 and partition.phi(0, 1) == 0
    assert partition.symmetry_order == 2

    print("✓ Validation test passed")


def test_exact_det():
    assert exact_det([]) == 1
    assert exact_det([[Fraction(1, 2), 1], [3, 4]]) == Fraction(-1)
    assert exact_det([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30


def test_andreief_examples():
    print("Testing Andreief examples...")

    mu = DiscreteMeasure((0, 1, 3), (1, 2, Fraction(1, 2)))
    f = polynomial([1, 2])
    g = polynomial([-1, 0, 1])
    pair = andreief_pair(BlockPartition(((0,),)), [f], [g], mu, exact=True)
    expected = sum(f(x) * g(x) * w for x, w in zip(mu.atoms, mu.weights))
    assert pair.lhs == pair.rhs == pair.rhs_indicator == expected

    unit = DiscreteMeasure((0, 1), (1, 1))
    separate = andreief_pair(BlockPartition(((0,), (1,))), [ONE, X], [ONE, X], unit, exact=True)
    assert separate.lhs == 1 and separate.rhs == 1 and separate.agrees()

    classical = andreief_pair(BlockPartition(((0, 1),)), [ONE, X], [ONE, X], unit, exact=True)
    assert classical.lhs == 1 and classical.rhs == 1 and classical.agrees()

    floating = andreief_pair(BlockPartition(((0,), (1,))), [ONE, X], [ONE, X],
                             DiscreteMeasure((0.0, 1.0), (1.0, 1.0)))
    assert abs(floating.lhs - 1.0) < 1e-12 and floating.agrees(1e-12)

    try:
        andreief_pair(BlockPartition(((0,), (1,))), [ONE], [ONE, X], unit)
        assert False, "Should have raised ValueError"
    except ValueError:
        pass

    big = BlockPartition((tuple(range(8)),))
    try:
        andreief_pair(big, [ONE] * 8, [ONE] * 8, unit)
        assert False, "Should have raised CostGuardError"
    except CostGuardError:
        pass

    print("✓ Andreief example test passed")


def test_andreief_sweep():
    """200 seeded random instances agree exactly."""
    print("Testing the Andreief sweep...")

    results = andreief_sweep(200, seed=0, exact=True)
    assert len(results) == 200
    failures = [instance.seed for instance, pair in results if not pair.agrees()]
    assert not failures, f"Disagreement for seeds {failures}"

    instance = random_instance(5)
    assert instance.partition.n == len(instance.A) == len(instance.B)
    assert len(instance.partition.blocks) <= 3
    assert len(instance.mu) <= 4
    assert random_instance(5).mu == instance.mu

    print("✓ Andreief sweep test passed")


def test_antisymmetry():
    print("Testing antisymmetric integration...")

    mu = DiscreteMeasure((-1, 0, 2), (1, 1, 1))
    for seed in range(5):
        report = antisymmetry_check(3, 2, mu, seed)
        assert report.expansion_holds, f"Expansion fails for seed {seed}"
        assert report.antisymmetric, f"Contraction not antisymmetric for seed {seed}"
        assert len(report.swapped) == 1

    trivial = antisymmetry_check(1, 1, mu, 0)
    assert trivial.passed and trivial.swapped == ()

    for n, k in ((3, 4), (0, 0)):
        try:
            antisymmetry_check(n, k, mu)
            assert False, f"Should have raised ValueError for n={n}, k={k}"
        except ValueError:
            pass
    try:
        antisymmetry_check(6, 2, mu)
        assert False, "Should have raised CostGuardError"
    except CostGuardError:
        pass

    print("✓ Antisymmetry test passed")


def test_gaussian_airy():
    print("Testing the Gaussian-Airy integral...")

    assert abs(closed_form(1.0, 0.0, 0.0) - math.exp(1.0 / 12.0) / (2.0 * math.sqrt(math.pi))) < 1e-15
    assert abs(closed_form(2.0, 1.0, -1.0) - math.exp(1.0 / 6.0) / (2.0 * math.sqrt(2.0 * math.pi))) < 1e-15
    assert abs(closed_form(1.0, 0.0, 0.0) - 0.30661) < 1e-4

    for x in (0.5, 1.0, 2.0):
        for a in (-1.0, 0.0, 1.0):
            for b in (-1.0, 0.0, 1.0):
                pair = okounkov_pair(x, a, b)
                assert pair.deviation <= 1e-10, f"Deviation {pair.deviation} at x={x}, a={a}, b={b}"

    full = gaussian_airy_integral(0.5, 0.0, 0.0)
    halved = gaussian_airy_integral(0.5, 0.0, 0.0, left=left_limit(0.5, 0.0, 0.0) / 2)
    assert abs(full - halved) < 1e-8

    for x in (0.0, -1.0):
        try:
            okounkov_pair(x, 0.0, 0.0)
            assert False, f"Should have raised ValueError for x={x}"
        except ValueError:
            pass

    print("✓ Gaussian-Airy test passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 80)
    print("Running identity tests")
    print("=" * 80)

    try:
        test_measure_and_partition_validation()
        test_exact_det()
        test_andreief_examples()
        test_andreief_sweep()
        test_antisymmetry()
        test_gaussian_airy()

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
