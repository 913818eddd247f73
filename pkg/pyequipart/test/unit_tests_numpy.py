import os.path
import sys

sys.path.append(os.path.dirname(os.path.abspath(__file__)) + (os.path.sep + "..") * 2)

import unittest

import numpy as np

from pyequipart.common.operations import cell_orthant_masses, side_fractions
from pyequipart.common.utils import get_tools


class NumpyUnitTestCase(unittest.TestCase):
    tools = get_tools("numpy")
    square = np.array([[1.0, 1.0], [-1.0, 1.0], [1.0, -1.0], [-1.0, -1.0]])

    ############################################################
    def test_tools(self):
        ############################################################
        x = np.array([[1.0, -2.0], [-3.0, 4.0]])
        self.assertTrue(np.array_equal(self.tools.arraysum(x, 0), [-2.0, 2.0]))
        self.assertTrue(np.array_equal(self.tools.abs(x), [[1.0, 2.0], [3.0, 4.0]]))
        self.assertTrue(np.array_equal(self.tools.where(x > 0, x, 0.0), [[1.0, 0.0], [0.0, 4.0]]))
        self.assertTrue(np.array_equal(self.tools.clip(x, -1.0, 1.0), [[1.0, -1.0], [-1.0, 1.0]]))
        self.assertTrue(np.array_equal(self.tools.nonnegative(x), [[1.0, 0.0], [0.0, 1.0]]))
        self.assertEqual(self.tools.concat([x, x], axis=1).shape, (2, 4))
        self.assertTrue(np.array_equal(self.tools.matmul(x, self.tools.transpose(x)), x @ x.T))

    ############################################################
    def test_side_fractions(self):
        ############################################################
        # the square [-1, 1]^2 has a quarter of its area in x >= 0.5
        F = side_fractions(self.tools, np.zeros((1, 2)), np.ones((1, 2)), np.array([[1.0, 0.0]]), np.array([-0.5]))
        self.assertTrue(np.allclose(F, 0.25))
        F = side_fractions(self.tools, self.square, None, np.array([[1.0, 0.0]]), np.array([0.0]))
        self.assertTrue(np.array_equal(F[:, 0], [1.0, 0.0, 1.0, 0.0]))

    ############################################################
    def test_square(self):
        ############################################################
        U = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
        b = cell_orthant_masses(self.square, np.array([1.0, 2.0, 3.0, 4.0]), None, U, backend="numpy")
        self.assertTrue(np.array_equal(b, [1.0, 2.0, 3.0, 4.0]))
        b = cell_orthant_masses(self.square, np.ones(4), np.full((1, 2), 0.5), U, backend="numpy")
        self.assertTrue(np.allclose(b, 1.0))


if __name__ == "__main__":
    """
    run tests
    """
    unittest.main()
