import numpy as np
import pytest

from gramls import (
    DimensionError,
    augmented_gram,
    dense_matrix,
    dense_vector,
    dot,
    gram,
    prepend_ones,
)


class TestDot:
    def test_examples(self):
        assert dot([1, 1, 1], [1, 2, 3]) == 6.0
        assert dot([0, 0], [5, 7]) == 0.0
        assert dot([1, 2], [3, 4]) == 11.0

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            dot([1.0, 2.0], [1.0, 2.0, 3.0])

    def test_commutative_bitwise(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            n = int(rng.integers(1, 200))
            u = rng.standard_normal(n) * 10.0 ** rng.integers(-8, 8)
            v = rng.standard_normal(n) * 10.0 ** rng.integers(-8, 8)
            assert dot(u, v) == dot(v, u)


class TestGram:
    def test_identity(self):
        np.testing.assert_array_equal(gram(np.eye(2)), np.eye(2))

    def test_ones_column_counts_rows(self):
        np.testing.assert_array_equal(gram(np.ones((3, 1))), [[3.0]])

    def test_hand_inner_products(self):
        X = np.array([[1.0, 1.0], [1.0, 2.0], [1.0, 3.0]])
        np.testing.assert_array_equal(gram(X), [[3.0, 6.0], [6.0, 14.0]])

    def test_bitwise_symmetric_nonnegative_diagonal(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            X = rng.standard_normal((int(rng.integers(2, 40)), int(rng.integers(1, 10))))
            G = gram(X)
            np.testing.assert_array_equal(G, G.T)
            assert np.all(np.diag(G) >= 0)


class TestAugmentedGram:
    def test_identity(self):
        out = augmented_gram(np.eye(2), np.array([3.0, 4.0]))
        np.testing.assert_array_equal(out, [[1, 0, 3], [0, 1, 4]])

    def test_single_column_sums(self):
        out = augmented_gram(np.ones((2, 1)), np.array([2.0, 4.0]))
        np.testing.assert_array_equal(out, [[2.0, 6.0]])

    def test_hand_inner_products(self):
        X = np.array([[1.0, 1.0], [1.0, 2.0], [1.0, 3.0]])
        out = augmented_gram(X, np.array([1.0, 2.0, 3.0]))
        np.testing.assert_array_equal(out, [[3, 6, 6], [6, 14, 14]])

    def test_left_block_is_gram_bitwise(self):
        rng = np.random.default_rng(5)
        X = rng.standard_normal((25, 6))
        y = rng.standard_normal(25)
        np.testing.assert_array_equal(augmented_gram(X, y)[:, :6], gram(X))

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            augmented_gram(np.eye(3), np.array([1.0, 2.0]))


class TestPrependOnes:
    def test_two_rows(self):
        np.testing.assert_array_equal(
            prepend_ones([[2.0], [3.0]]), [[1.0, 2.0], [1.0, 3.0]]
        )

    def test_single_cell(self):
        np.testing.assert_array_equal(prepend_ones([[5.0]]), [[1.0, 5.0]])

    def test_shape(self):
        rng = np.random.default_rng(3)
        X = rng.standard_normal((3, 2))
        out = prepend_ones(X)
        assert out.shape == (3, 3)
        np.testing.assert_array_equal(out[:, 0], np.ones(3))
        np.testing.assert_array_equal(out[:, 1:], X)


class TestConstructors:
    def test_matrix_rejects_nan_with_coordinates(self):
        bad = [[1.0, 2.0], [3.0, np.nan]]
        with pytest.raises(ValueError, match=r"row 2, column 2"):
            dense_matrix(bad)

    def test_matrix_rejects_inf(self):
        with pytest.raises(ValueError, match=r"row 1, column 1"):
            dense_matrix([[np.inf]])

    def test_matrix_rejects_empty(self):
        with pytest.raises(DimensionError):
            dense_matrix(np.empty((0, 3)))

    def test_matrix_is_column_major(self):
        m = dense_matrix([[1.0, 2.0], [3.0, 4.0]])
        assert m.flags.f_contiguous

    def test_vector_rejects_nan(self):
        with pytest.raises(ValueError, match="position 2"):
            dense_vector([1.0, np.nan])

    def test_vector_rejects_matrix(self):
        with pytest.raises(DimensionError):
            dense_vector([[1.0], [2.0]])
