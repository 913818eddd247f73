import os.path
import sys

sys.path.append(os.path.dirname(os.path.abspath(__file__)) + (os.path.sep + "..") * 2)

import unittest
import itertools
import tempfile

import numpy as np

import pyequipart.config
from pyequipart.common.errors import UnbalancedCycleError
from pyequipart.common.set_path import clean_pyequipart, set_cache_folder
from pyequipart.graycode import (
    SUBGROUPS,
    GrayCycle,
    SymmetryGroupSpec,
    canonical_balanced_cycle,
    canonical_form,
    check_balanced,
    classify_balanced,
    count_cycles,
    enumerate_cycles,
    equivalent,
    is_balanced,
    reflected_gray_code,
    reversal_swap_check,
)


def independent_count(n):
    # plain recursive count of directed Hamiltonian cycles from 0
    N = 2 ** n
    seen = [False] * N
    seen[0] = True

    def extend(c, depth):
        if depth == N:
            return int(bin(c).count("1") == 1)
        total = 0
        for i in range(n):
            d = c ^ (1 << i)
            if not seen[d]:
                seen[d] = True
                total += extend(d, depth + 1)
                seen[d] = False
        return total

    return extend(0, 1)


class GrayCycleUnitTestCase(unittest.TestCase):
    ############################################################
    def test_gray_cycle(self):
        ############################################################
        c = GrayCycle.from_strings(["00", "10", "11", "01"])
        self.assertEqual(c.transitions(), (0, 1, 0, 1))
        self.assertEqual(GrayCycle.from_transitions(c.transitions(), 2), c)
        self.assertEqual(c.to_dict(), {"n": 2, "codewords": ["00", "10", "11", "01"], "transitions": [1, 2, 1, 2]})
        self.assertRaises(ValueError, GrayCycle.from_strings, ["00", "11", "10", "01"])
        self.assertRaises(ValueError, GrayCycle, [0, 1, 3], 2)
        self.assertRaises(ValueError, GrayCycle.from_transitions, (0, 1, 0, 0), 2)

    ############################################################
    def test_transforms(self):
        ############################################################
        c = reflected_gray_code(3)
        self.assertEqual(c.rotated(3).rotated(5), c)
        self.assertEqual(c.reversed().reversed(), c)
        self.assertEqual(c.reversed().codewords[0], c.codewords[0])
        self.assertEqual(c.permuted((1, 2, 0)).permuted((2, 0, 1)), c)
        self.assertEqual(c.complemented(5).complemented(5), c)
        self.assertEqual(sorted(c.track_counts()), [2, 2, 4])

    ############################################################
    def test_enumeration_counts(self):
        ############################################################
        for n, undirected in ((2, 1), (3, 6), (4, 1344)):
            with self.subTest(n=n):
                cycles = enumerate_cycles(n)
                self.assertEqual(count_cycles(n), (2 * undirected, undirected))
                self.assertEqual(len(set(cycles)), len(cycles))
                self.assertTrue(all(c.codewords[0] == 0 for c in cycles))
                self.assertEqual(cycles, sorted(cycles))
        self.assertEqual(independent_count(3), 12)
        self.assertRaises(ValueError, enumerate_cycles, 5)

    ############################################################
    def test_cache(self):
        ############################################################
        old = (pyequipart.config.cache_folder, pyequipart.config.use_cache)
        try:
            with tempfile.TemporaryDirectory() as folder:
                pyequipart.config.use_cache = True
                set_cache_folder(folder)
                first = enumerate_cycles(3)
                self.assertTrue(os.path.isfile(os.path.join(folder, "graycycles-3.json")))
                self.assertEqual(enumerate_cycles(3), first)
                clean_pyequipart(folder)
                self.assertFalse(os.path.isfile(os.path.join(folder, "graycycles-3.json")))
        finally:
            pyequipart.config.cache_folder, pyequipart.config.use_cache = old

    ############################################################
    def test_enumeration_against_independent_count(self):
        ############################################################
        self.assertEqual(len(enumerate_cycles(4)), independent_count(4))

    ############################################################
    def test_balanced(self):
        ############################################################
        self.assertEqual(is_balanced(reflected_gray_code(4)), (False, (8, 4, 2, 2)))
        self.assertRaises(UnbalancedCycleError, check_balanced, reflected_gray_code(4))
        self.assertFalse(is_balanced(reflected_gray_code(3))[0])
        self.assertTrue(is_balanced(reflected_gray_code(2))[0])
        c = canonical_balanced_cycle(4)
        self.assertEqual(is_balanced(c), (True, (4, 4, 4, 4)))


class SymmetryUnitTestCase(unittest.TestCase):
    rng = np.random.default_rng(0)

    ############################################################
    def test_canonical_form_invariance(self):
        ############################################################
        full = SymmetryGroupSpec.full()
        cycles = enumerate_cycles(4)
        for k in range(20):
            c = cycles[self.rng.integers(len(cycles))]
            perm = tuple(self.rng.permutation(4))
            image = c.permuted(perm).complemented(int(self.rng.integers(16))).rotated(int(self.rng.integers(16)))
            if k % 2:
                image = image.reversed()
            with self.subTest(cycle=repr(c)):
                self.assertEqual(canonical_form(image, full), canonical_form(c, full))
                self.assertTrue(equivalent(c, image, full))
                self.assertEqual(canonical_form(c, full).codewords[0], 0)

    ############################################################
    def test_subgroups(self):
        ############################################################
        c = reflected_gray_code(3)
        rotation = SymmetryGroupSpec(rotation=True)
        self.assertEqual(canonical_form(c.rotated(3), rotation), canonical_form(c, rotation))
        permutation = SymmetryGroupSpec(permutation=True)
        self.assertEqual(canonical_form(c.permuted((2, 0, 1)), permutation), canonical_form(c, permutation))
        self.assertRaises(ValueError, SymmetryGroupSpec)
        self.assertEqual(SymmetryGroupSpec.full().name, "rotation+reversal+permutation+complement")

    ############################################################
    def test_classify_balanced(self):
        ############################################################
        result = classify_balanced(4)
        self.assertEqual(result["undirected_cycles"], 1344)
        self.assertEqual(len(result["classes"]), 1)
        counts = result["subgroup_classes"]
        self.assertEqual(list(counts), [g.name for g in SUBGROUPS])
        self.assertEqual(counts[SymmetryGroupSpec.full().name], 1)
        # a larger group never has more classes
        names = [g.name for g in SUBGROUPS]
        for small, large in itertools.combinations(range(len(SUBGROUPS)), 2):
            a, b = SUBGROUPS[small], SUBGROUPS[large]
            contained = all(
                getattr(b, k) or not getattr(a, k) for k in ("rotation", "reversal", "permutation", "complement")
            )
            if contained:
                self.assertGreaterEqual(counts[names[small]], counts[names[large]])
        self.assertLessEqual(counts[names[0]], result["balanced"])
        self.assertEqual(classify_balanced(3)["balanced"], 0)

    ############################################################
    def test_reversal_swap(self):
        ############################################################
        c = canonical_balanced_cycle(4)
        check = reversal_swap_check(c)
        self.assertTrue(check.holds)
        self.assertTrue(len(check.pairs) >= 1)
        for (i, j), r in zip(check.pairs, check.shifts):
            swap = [i if t == j else j if t == i else t for t in c.transitions()]
            self.assertEqual(swap[r:] + swap[:r], list(c.transitions())[::-1])
        # relabeling the tracks conjugates the working transpositions
        perm = (1, 2, 3, 0)
        relabeled = reversal_swap_check(c.permuted(perm))
        self.assertEqual(
            sorted(tuple(sorted((perm[i], perm[j]))) for (i, j) in check.pairs), sorted(relabeled.pairs)
        )
        self.assertRaises(UnbalancedCycleError, reversal_swap_check, reflected_gray_code(4))
        self.assertRaises(ValueError, reversal_swap_check, reflected_gray_code(3))


if __name__ == "__main__":
    """
    run tests
    """
    unittest.main()
