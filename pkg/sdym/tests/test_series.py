from django.test import SimpleTestCase

from sdym.algebra import LieBasis
from sdym.exceptions import SdymError, SingularSeriesError
from sdym.frechet import psdym_residual
from sdym.jetexpr import fresh_context, normalize, parse, random_corpus
from sdym.recursion import materialize
from sdym.series import (
    ORIGIN, FixtureOracle, SeriesEvaluator, TruncatedSeries, abelian_closed_form_check, abelian_fixture,
    check_fixture, exponents, random_fixture, residual_max, scalar_series, series_inverse, symmetry_binding,
    yang_residual,
)

Y, Z, YB, ZB = range(4)


class TruncatedSeriesTest(SimpleTestCase):
    """Arithmetic on exact truncated series."""

    def setUp(self):
        self.basis = LieBasis.sl(2)

    def test_exponent_count(self):
        """Four variables up to degree 2 give 15 monomials."""
        self.assertEqual(len(exponents(1)), 5)
        self.assertEqual(len(exponents(2)), 15)
        self.assertEqual(exponents(2)[0], ORIGIN)

    def test_product(self):
        """y * z is the monomial y z."""
        product = scalar_series((1, 0, 0, 0), 2, 3) * scalar_series((0, 1, 0, 0), 2, 3)
        self.assertEqual(product, scalar_series((1, 1, 0, 0), 2, 3))

    def test_derivative_costs_validity(self):
        """Each derivative lowers the valid degree by one."""
        series = TruncatedSeries.monomial((1, 0, 0, 0), self.basis.tau(3), 3)
        derived = series.derivative(Y)
        self.assertEqual(derived.valid, 2)
        self.assertEqual(derived.coefficient(ORIGIN), self.basis.tau(3))

    def test_antiderivative_restores_validity(self):
        series = TruncatedSeries.monomial((0, 0, 0, 1), self.basis.tau(1), 3)
        self.assertEqual(series.derivative(ZB).antiderivative(ZB), series)

    def test_inverse(self):
        """(I + y tau1)^-1 = I - y tau1 since tau1 is nilpotent."""
        series = TruncatedSeries.identity(2, 3) + TruncatedSeries.monomial((1, 0, 0, 0), self.basis.tau(1), 3)
        inverse = series_inverse(series)
        expected = TruncatedSeries.identity(2, 3) - TruncatedSeries.monomial((1, 0, 0, 0), self.basis.tau(1), 3)
        self.assertEqual(inverse, expected)
        self.assertEqual(series * inverse, TruncatedSeries.identity(2, 3))

    def test_singular_inverse(self):
        """A series without constant term has no inverse."""
        with self.assertRaises(SingularSeriesError):
            series_inverse(scalar_series((1, 0, 0, 0), 2, 2))

    def test_first_nonzero(self):
        self.assertIsNone(TruncatedSeries.zero(2, 3).first_nonzero())
        found = scalar_series((0, 1, 0, 0), 2, 3).first_nonzero()
        self.assertEqual(found[0], (0, 1, 0, 0))


class FixtureTest(SimpleTestCase):
    """Exact solutions of PSDYM and the Backlund pair."""

    def test_abelian_fixture(self):
        """The abelian solution satisfies every invariant."""
        report = check_fixture(abelian_fixture(4))
        self.assertEqual(report, {name: None for name in report})

    def test_abelian_closed_form(self):
        """Solving for J reproduces exp(-y z H)."""
        self.assertIsNone(abelian_closed_form_check(4))

    def test_random_fixture(self):
        """A random fixture satisfies every invariant and is not abelian."""
        fixture = random_fixture(42, 4)
        report = check_fixture(fixture)
        self.assertEqual(report, {name: None for name in report})
        bracket = fixture.X.derivative(YB).commutator(fixture.X.derivative(ZB))
        self.assertFalse(bracket.is_zero())

    def test_random_fixture_is_deterministic(self):
        self.assertEqual(random_fixture(7, 3).X, random_fixture(7, 3).X)

    def test_random_fixture_needs_degree_two(self):
        with self.assertRaises(SdymError):
            random_fixture(42, 1)

    def test_yang_residual(self):
        """J solves Yang's equation."""
        self.assertTrue(yang_residual(random_fixture(5, 4).J).is_zero())


class EvaluatorTest(SimpleTestCase):
    """Expressions evaluated on a fixture agree with their normal forms."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.fixture = random_fixture(42, 4)

    def setUp(self):
        self.context = fresh_context(2)
        self.evaluator = SeriesEvaluator(self.fixture, self.context)

    def test_x(self):
        self.assertEqual(self.evaluator.evaluate(parse("X", self.context)), self.fixture.X)

    def test_j_times_inverse(self):
        value = self.evaluator.evaluate(parse("J*Jinv", self.context))
        self.assertTrue((value - TruncatedSeries.identity(2, 4)).is_zero())

    def test_normal_form_preserves_value(self):
        """Rewriting never changes the value on a solution."""
        for expr in random_corpus(11, 12, context=self.context):
            with self.subTest(expr=expr):
                raw = self.evaluator.evaluate(expr)
                canonical = self.evaluator.evaluate(normalize(expr, self.context))
                self.assertTrue((raw - canonical).is_zero())

    def test_m_value(self):
        """M evaluates to the basis' generic traceless matrix."""
        value = self.evaluator.evaluate(parse("M", self.context))
        self.assertEqual(value.coefficient(ORIGIN), self.context.basis.default_m())


class OracleTest(SimpleTestCase):
    """Fixture oracle verdicts and witnesses."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.fixtures = [random_fixture(42, 4), random_fixture(43, 4)]

    def setUp(self):
        self.context = fresh_context(2)

    def test_psdym_holds(self):
        """The unreduced PSDYM equation vanishes on every fixture."""
        oracle = FixtureOracle(self.fixtures, self.context)
        self.assertTrue(oracle(parse("X_yyb + X_zzb - comm(X_yb, X_zb)", self.context)))

    def test_failure_has_witness(self):
        """X X is not zero; the verdict names a fixture and a monomial."""
        verdict = FixtureOracle(self.fixtures, self.context)(parse("X*X", self.context))
        self.assertFalse(verdict)
        self.assertIn("random:42", verdict.witness)
        self.assertIn("nonzero at", verdict.witness)

    def test_unknown_comparison(self):
        with self.assertRaises(ValueError):
            FixtureOracle(self.fixtures, self.context, compare="partial")

    def test_zbar_comparison(self):
        """zb-independent terms are invisible to the zbar comparison."""
        oracle = FixtureOracle(self.fixtures, self.context, compare="zbar")
        self.assertTrue(oracle(parse("y*z*tau1", self.context)))
        self.assertFalse(oracle(parse("zb*tau1", self.context)))

    def test_symmetric_binding(self):
        """[X, tau1] bound to Phi satisfies the linearized equation."""
        oracle = FixtureOracle(
            self.fixtures, self.context.derive(symmetric={"Phi"}),
            bindings=lambda fixture: {"Phi": symmetry_binding(fixture, 1, self.context)},
        )
        linearized = "Phi_yyb + Phi_zzb + comm(X_zb, Phi_yb) - comm(X_yb, Phi_zb)"
        self.assertTrue(oracle(parse(linearized, self.context)))
        self.assertFalse(oracle(parse("Phi_y", self.context)))

    def test_unbound_symbol(self):
        """A generic symbol without a binding fails with a message."""
        verdict = FixtureOracle(self.fixtures, self.context)(parse("Q", self.context))
        self.assertFalse(verdict)
        self.assertIn("No value for Q", verdict.witness)

    def test_nonlocal_conflict(self):
        """A potential of a non-symmetry cannot be rebuilt consistently."""
        w = materialize(parse("X*X", self.context), 1, self.context)
        oracle = FixtureOracle([abelian_fixture(4)], self.context)
        verdict = oracle(parse(w.name, self.context))
        self.assertFalse(verdict)
        self.assertIn("conflicts", verdict.witness)

    def test_residual_max(self):
        """A symmetry residual is exactly zero; a non-symmetry names its first monomial."""
        fixture = self.fixtures[0]
        held = residual_max(parse("X_yyb + X_zzb - comm(X_yb, X_zb)", self.context), fixture, self.context)
        self.assertTrue(held.zero)
        self.assertIsNone(held.witness)
        failed = residual_max(psdym_residual(parse("X*X", self.context), self.context), fixture, self.context)
        self.assertFalse(failed.zero)
        self.assertEqual(len(failed.witness), 4)
        self.assertTrue(failed.magnitude > 0)
