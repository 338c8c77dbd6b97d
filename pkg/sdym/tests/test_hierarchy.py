from django.test import SimpleTestCase

from sdym.algebra import ONE, ZERO
from sdym.exceptions import LevelCapExceededError, LevelOutOfRangeError, SeedNotSymmetryError
from sdym.frechet import cov_Ay, cov_Az
from sdym.hierarchy import (
    HierarchyCatalog, SymmetryOperator, apply_L, base_structure_table, catalogue, generate_hierarchy,
    hierarchy_coherence, i_catalogue,
    local_in_j, local_in_x, sdym_bracket_residual, verify_kac_moody, verify_sdym_kac_moody, verify_virasoro,
)
from sdym.jetexpr import Coordinate, fresh_context, normalize, parse, total_derivative
from sdym.series import FixtureOracle, random_fixture


class SymmetryOperatorTest(SimpleTestCase):

    def setUp(self):
        self.context = fresh_context(2)

    def test_parse_labels(self):
        self.assertEqual(SymmetryOperator.parse("tau2"), SymmetryOperator("internal", 2))
        self.assertEqual(SymmetryOperator.parse("M").label, "M")
        self.assertEqual(SymmetryOperator.parse("L7").label, "L7")
        with self.assertRaises(ValueError):
            SymmetryOperator.parse("L10")

    def test_catalogue(self):
        """tau_1..tau_3, M and L1..L9 for sl(2)."""
        labels = [operator.label for operator in catalogue(self.context)]
        self.assertEqual(labels, ["tau1", "tau2", "tau3", "M"] + [f"L{k}" for k in range(1, 10)])
        self.assertEqual(len(i_catalogue(self.context)), 6)

    def test_seeds(self):
        """L1 X = X_y and L6 X = X + y X_y + z X_z."""
        self.assertEqual(SymmetryOperator("L", 1).seed(self.context), normalize(parse("X_y", self.context), self.context))
        self.assertEqual(SymmetryOperator("L", 6).seed(self.context),
                         normalize(parse("X + y*X_y + z*X_z", self.context), self.context))

    def test_unknown_operator(self):
        with self.assertRaises(LevelOutOfRangeError):
            apply_L(10, parse("X", self.context), self.context)


class StructureTableTest(SimpleTestCase):
    """Commutators of L1..L5."""

    def setUp(self):
        self.table = base_structure_table(fresh_context(2))

    def test_lie_algebra(self):
        self.assertTrue(self.table.is_antisymmetric())
        self.assertTrue(self.table.satisfies_jacobi())

    def test_known_constants(self):
        """[L1, L2] = 0, [L2, L3] = L1 and [L3, L4] = -L5, with [L_i, L_j] = -f_ij^k L_k."""
        self.assertTrue(all(not self.table.constant(1, 2, k) for k in range(1, 6)))
        self.assertEqual(self.table.constant(2, 3, 1), -ONE)
        self.assertEqual(self.table.constant(3, 4, 5), ONE)
        self.assertEqual(self.table.constant(3, 4, 1), ZERO)


class GeneratorTest(SimpleTestCase):
    """Hierarchies R^n Phi^(0)."""

    def setUp(self):
        self.context = fresh_context(2)
        self.catalog = HierarchyCatalog(self.context)

    def test_levels(self):
        entries = self.catalog.hierarchy(SymmetryOperator("internal", 1), 2)
        self.assertEqual([entry.level for entry in entries], [0, 1, 2])
        self.assertEqual(entries[0].phi, SymmetryOperator("internal", 1).seed(self.context))
        self.assertTrue(entries[0].phi_local_in_x)

    def test_defining_relations(self):
        """Each level satisfies D_zb Phi^(n+1) = A_y Phi^(n) and D_yb Phi^(n+1) = -A_z Phi^(n)."""
        for operator in (SymmetryOperator("internal", 1), SymmetryOperator("L", 2)):
            previous, current = self.catalog.hierarchy(operator, 1)
            with self.subTest(operator=operator.label):
                self.assertEqual(total_derivative(current.phi, Coordinate.ZB, self.context),
                                 cov_Ay(previous.phi, self.context))
                self.assertEqual(total_derivative(current.phi, Coordinate.YB, self.context),
                                 -cov_Az(previous.phi, self.context))

    def test_catalog_reuses_levels(self):
        """Asking twice registers no new nonlocal atoms."""
        self.catalog.hierarchy(SymmetryOperator("L", 1), 1)
        registered = len(self.context.registry)
        again = self.catalog.hierarchy(SymmetryOperator("L", 1), 1)
        self.assertEqual(len(self.context.registry), registered)
        self.assertEqual(len(again), 2)

    def test_sdym_side(self):
        """Q^(n+1) = J Phi^(n) alongside the PSDYM levels."""
        entries = self.catalog.hierarchy(SymmetryOperator("internal", 2), 1)
        self.assertEqual(entries[0].q, normalize(parse("J*tau2", self.context), self.context))
        self.assertEqual(entries[1].q, normalize(parse("J*comm(X, tau2)", self.context), self.context))
        self.assertTrue(entries[1].q_local_in_j is not None)

    def test_seed_must_be_symmetry(self):
        with self.assertRaises(SeedNotSymmetryError):
            generate_hierarchy(parse("X*X", self.context), 1, context=self.context)

    def test_negative_depth(self):
        with self.assertRaises(LevelOutOfRangeError):
            generate_hierarchy(parse("X_y", self.context), -1, context=self.context)

    def test_locality(self):
        """X-jets with a barred derivative are local in J, X itself is not."""
        self.assertTrue(local_in_x(normalize(parse("X*X_y", self.context), self.context), self.context))
        self.assertTrue(local_in_j(normalize(parse("X_yb*X_zb", self.context), self.context), self.context))
        self.assertFalse(local_in_j(normalize(parse("X_y", self.context), self.context), self.context))


class BracketTest(SimpleTestCase):
    """Kac-Moody and Virasoro relations at the symbolic levels."""

    def setUp(self):
        self.context = fresh_context(2)
        self.catalog = HierarchyCatalog(self.context)

    def test_internal_kac_moody(self):
        """[Delta_i, Delta_j] X = C_ij^k Delta_k X at level zero."""
        for i, j in ((1, 2), (3, 1), (2, 3)):
            with self.subTest(i=i, j=j):
                outcome = verify_kac_moody("internal", i, j, 0, 0, catalog=self.catalog, context=self.context)
                self.assertTrue(outcome.passed, outcome.witness)

    def test_base_kac_moody(self):
        """Level-zero brackets of L1..L5 follow the structure table."""
        for i, j in ((1, 2), (2, 3), (3, 4)):
            with self.subTest(i=i, j=j):
                outcome = verify_kac_moody("base", i, j, 0, 0, catalog=self.catalog, context=self.context)
                self.assertTrue(outcome.passed, outcome.witness)

    def test_virasoro_level_zero(self):
        for which in (6, 7):
            with self.subTest(which=which):
                self.assertTrue(verify_virasoro(which, 0, 0, catalog=self.catalog, context=self.context).passed)

    def test_sdym_kac_moody(self):
        """[Delta_i, Delta_j] J = C_ij^k J tau_k."""
        self.assertTrue(sdym_bracket_residual(1, 2, self.context).is_zero())
        self.assertTrue(verify_sdym_kac_moody(1, 3, context=self.context).passed)

    def test_level_caps(self):
        with self.assertRaises(LevelCapExceededError):
            verify_kac_moody("internal", 1, 2, 2, 1, catalog=self.catalog, context=self.context)
        with self.assertRaises(LevelOutOfRangeError):
            verify_kac_moody("internal", 1, 4, 0, 0, catalog=self.catalog, context=self.context)
        with self.assertRaises(LevelOutOfRangeError):
            verify_virasoro(5, 0, 0, catalog=self.catalog, context=self.context)

    def test_oracle_mode_needs_oracle(self):
        with self.assertRaises(ValueError):
            verify_kac_moody("internal", 1, 2, 0, 1, mode="oracle", catalog=self.catalog, context=self.context)

    def test_seed_coherence(self):
        """I maps every catalogued SDYM seed onto its PSDYM seed."""
        for label in ("tau1", "tau3", "M", "L1", "L2"):
            with self.subTest(label=label):
                outcome = hierarchy_coherence(SymmetryOperator.parse(label), 0, self.catalog)
                self.assertTrue(outcome.passed, outcome.witness)

    def test_coherence_needs_sdym_seed(self):
        with self.assertRaises(ValueError):
            hierarchy_coherence(SymmetryOperator.parse("L5"), 0, self.catalog)


class BracketOracleTest(SimpleTestCase):
    """Brackets above level zero, decided in the covering on degree-4 fixtures."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.fixtures = [random_fixture(42, 4), random_fixture(43, 4)]

    def setUp(self):
        self.context = fresh_context(2)
        self.catalog = HierarchyCatalog(self.context)
        self.oracle = FixtureOracle(self.fixtures, self.context, compare="covering")

    def test_internal_kac_moody(self):
        for m, n in ((1, 0), (0, 1), (1, 1)):
            with self.subTest(levels=(m, n)):
                outcome = verify_kac_moody("internal", 1, 2, m, n, mode="oracle", catalog=self.catalog,
                                           oracle=self.oracle, context=self.context)
                self.assertTrue(outcome.passed, outcome.witness)
                self.assertEqual(outcome.mode, "oracle")

    def test_virasoro(self):
        for which, m, n in ((6, 0, 1), (7, 1, 0)):
            with self.subTest(which=which, levels=(m, n)):
                outcome = verify_virasoro(which, m, n, mode="oracle", catalog=self.catalog, oracle=self.oracle,
                                          context=self.context)
                self.assertTrue(outcome.passed, outcome.witness)
