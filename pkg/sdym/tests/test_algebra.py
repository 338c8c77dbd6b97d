from django.test import SimpleTestCase

from sdym.algebra import (
    ConstMatrix, LieBasis, ONE, ZERO, commutator, const_inverse, format_gaussian, gaussian, parse_gaussian,
    rational, structure_constants, trace,
)
from sdym.exceptions import (
    DimensionMismatchError, LinearlyDependentError, NotClosedError, NotTracelessError, SingularMatrixError,
)


class ScalarTest(SimpleTestCase):
    """Exact Gaussian rational formatting."""

    def test_format_gaussian(self):
        """Real, imaginary and mixed values print exactly."""
        self.assertEqual(format_gaussian(rational(3, 4)), "3/4")
        self.assertEqual(format_gaussian(gaussian(0, -2)), "-2i")
        self.assertEqual(format_gaussian(gaussian(1, 1)), "1+1i")

    def test_parse_gaussian(self):
        """Parsing accepts the printed forms."""
        self.assertEqual(parse_gaussian("-5/6"), rational(-5, 6))
        self.assertEqual(parse_gaussian("2-3i"), gaussian(2, -3))
        self.assertEqual(parse_gaussian("i"), gaussian(0, 1))

    def test_parse_gaussian_rejects_garbage(self):
        """Malformed input raises ValueError."""
        with self.assertRaises(ValueError):
            parse_gaussian("1/2x")


class ConstMatrixTest(SimpleTestCase):
    """Constant matrix arithmetic."""

    def setUp(self):
        self.a = ConstMatrix.of([[1, 2], [3, 4]])
        self.b = ConstMatrix.of([[0, 1], [1, 0]])

    def test_product_and_commutator(self):
        """ab and [a, b] are computed exactly."""
        self.assertEqual(self.a * self.b, ConstMatrix.of([[2, 1], [4, 3]]))
        self.assertEqual(commutator(self.a, self.b), ConstMatrix.of([[-1, -3], [3, 1]]))

    def test_inverse(self):
        """a a^-1 = I."""
        self.assertEqual(self.a * const_inverse(self.a), ConstMatrix.identity(2))

    def test_singular_inverse(self):
        """A singular matrix has no inverse."""
        with self.assertRaises(SingularMatrixError):
            const_inverse(ConstMatrix.of([[1, 2], [2, 4]]))

    def test_dimension_mismatch(self):
        """Sizes must agree."""
        with self.assertRaises(DimensionMismatchError):
            self.a + ConstMatrix.identity(3)


class LieBasisTest(SimpleTestCase):
    """The sl(n) basis and its structure constants."""

    def setUp(self):
        self.basis = LieBasis.sl(2)

    def test_sl2_basis(self):
        """tau1 = E12, tau2 = E21, tau3 = diag(1, -1)."""
        self.assertEqual(self.basis.tau(1), ConstMatrix.of([[0, 1], [0, 0]]))
        self.assertEqual(self.basis.tau(2), ConstMatrix.of([[0, 0], [1, 0]]))
        self.assertEqual(self.basis.tau(3), ConstMatrix.of([[1, 0], [0, -1]]))

    def test_sl2_structure_constants(self):
        """[tau1, tau2] = tau3, [tau3, tau1] = 2 tau1, [tau3, tau2] = -2 tau2."""
        self.assertEqual(self.basis.constant(1, 2, 3), ONE)
        self.assertEqual(self.basis.constant(1, 2, 1), ZERO)
        self.assertEqual(self.basis.constant(3, 1, 1), rational(2))
        self.assertEqual(self.basis.constant(3, 2, 2), rational(-2))
        self.assertEqual(self.basis.constant(2, 1, 3), rational(-1))

    def test_sl3_dimension(self):
        """sl(3) has eight traceless basis elements."""
        basis = LieBasis.sl(3)
        self.assertEqual(basis.dimension, 8)
        self.assertFalse(any(trace(tau) for tau in basis.taus))

    def test_expand_and_combine(self):
        """A matrix is recovered from its coordinates over {I, tau_k}."""
        matrix = ConstMatrix.of([[2, 5], [-1, 4]])
        identity_part, parts = self.basis.expand(matrix)
        self.assertEqual(identity_part, rational(3))
        self.assertEqual(self.basis.combine(identity_part, parts), matrix)

    def test_dependent_basis(self):
        """A repeated element is rejected."""
        tau = self.basis.tau(1)
        with self.assertRaises(LinearlyDependentError):
            structure_constants([tau, tau, self.basis.tau(3)])

    def test_traceful_basis(self):
        """A traceful element is rejected as such, not as an open span."""
        with self.assertRaises(NotTracelessError):
            structure_constants([ConstMatrix.identity(2)])

    def test_open_basis(self):
        """[E_12, E_21] = H leaves span{E_12, E_21}."""
        with self.assertRaises(NotClosedError):
            structure_constants([self.basis.tau(1), self.basis.tau(2)])
