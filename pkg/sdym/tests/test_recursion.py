from django.test import SimpleTestCase

from sdym.frechet import Characteristic, cov_Ay, cov_Az
from sdym.hierarchy import SymmetryOperator
from sdym.jetexpr import Coordinate, JetAtom, Polynomial, fresh_context, normalize, parse, total_derivative
from sdym.recursion import (
    commutation_sides, consistency_residual, equal_in_covering, i_equivalence_check, isomorphism_check, iso_I,
    lemma22_check, lift_J, materialize, nonlocal_names, preserves_trace_psdym, preserves_trace_sdym,
    psdym_recursion_residual, sdym_recursion_residual, r_hat, t_hat, unlift_J, vanishes_in_covering,
)
from sdym.series import FixtureOracle, random_fixture


class RecursionOperatorTest(SimpleTestCase):
    """R, T and the map I."""

    def setUp(self):
        self.context = fresh_context(2)

    def poly(self, text, context=None):
        context = context or self.context
        return normalize(parse(text, context), context)

    def test_translation_example(self):
        """I{J_z} = X_z and T J_z = J X_z."""
        self.assertEqual(iso_I(self.poly("J_z"), self.context), self.poly("X_z"))
        self.assertEqual(t_hat(self.poly("J_z"), self.context), self.poly("J*X_z"))

    def test_internal_example(self):
        """I{J tau_k} = [X, tau_k]."""
        for k in (1, 2, 3):
            with self.subTest(k=k):
                self.assertEqual(iso_I(self.poly(f"J*tau{k}"), self.context), self.poly(f"comm(X, tau{k})"))

    def test_chain(self):
        """I{T J_z} = R X_z."""
        left = iso_I(t_hat(self.poly("J_z"), self.context), self.context)
        self.assertTrue(equal_in_covering(left, r_hat(self.poly("X_z"), self.context), self.context))

    def test_r_hat_defining_relation(self):
        """D_zb R phi = A_y phi."""
        phi = self.poly("X_z")
        self.assertEqual(total_derivative(r_hat(phi, self.context), Coordinate.ZB, self.context),
                         cov_Ay(phi, self.context))

    def test_lift_and_unlift(self):
        """J^-1 (J phi) = phi."""
        phi = self.poly("X_yb*X")
        self.assertEqual(unlift_J(lift_J(phi, self.context), self.context), phi)

    def test_i_equivalence(self):
        """R I{Q} = I{T Q} on the catalogued SDYM characteristics."""
        sample = [self.poly("J*tau1"), self.poly("J_z"), self.poly("J_y")]
        self.assertTrue(i_equivalence_check(
            lambda q: t_hat(q, self.context), lambda e: r_hat(e, self.context), sample, self.context,
        ))


class NonlocalTest(SimpleTestCase):
    """Nonlocal potentials of the covering."""

    def setUp(self):
        self.context = fresh_context(2)

    def test_registration(self):
        """Atoms are numbered W1, W2 in registration order."""
        first = materialize(normalize(parse("X_z", self.context), self.context), 1, self.context)
        second = materialize(normalize(parse("X_y", self.context), self.context), 1, self.context)
        self.assertEqual((first.name, second.name), ("W1", "W2"))
        self.assertEqual(nonlocal_names(Polynomial.of_atom(second), self.context), {"W2"})

    def test_relations_of_symmetry_are_consistent(self):
        """The two defining relations agree when the source is a symmetry."""
        atom = materialize(normalize(parse("X_z", self.context), self.context), 1, self.context)
        self.assertTrue(consistency_residual(self.context.registry.get(atom.name), self.context).is_zero())

    def test_relations_of_non_symmetry_conflict(self):
        atom = materialize(normalize(parse("X*X", self.context), self.context), 1, self.context)
        self.assertFalse(consistency_residual(self.context.registry.get(atom.name), self.context).is_zero())

    def test_derivatives_reduce(self):
        """D_zb W = A_y phi and D_yb W = -A_z phi."""
        phi = normalize(parse("X_z", self.context), self.context)
        atom = materialize(phi, 1, self.context)
        w = Polynomial.of_atom(atom)
        self.assertEqual(total_derivative(w, Coordinate.ZB, self.context), cov_Ay(phi, self.context))
        self.assertEqual(total_derivative(w, Coordinate.YB, self.context), -cov_Az(phi, self.context))

    def test_vanishes_in_covering(self):
        """zb X vanishes at the origin but not identically."""
        self.assertTrue(vanishes_in_covering(Polynomial(), self.context))
        self.assertFalse(vanishes_in_covering(parse("zb*X", self.context), self.context))
        self.assertFalse(vanishes_in_covering(parse("X", self.context), self.context))


class RecursionSymmetryTest(SimpleTestCase):
    """R and T map symmetries to symmetries."""

    def setUp(self):
        self.context = fresh_context(2, symmetric=frozenset({"Phi"}))
        self.phi = normalize(parse("Phi", self.context), self.context)

    def test_r_hat_preserves_symmetries(self):
        residual = psdym_recursion_residual(self.phi, self.context)
        self.assertTrue(residual.is_zero() or vanishes_in_covering(residual, self.context))

    def test_t_hat_preserves_symmetries(self):
        residual = sdym_recursion_residual(lift_J(self.phi, self.context), self.context)
        self.assertTrue(residual.is_zero() or vanishes_in_covering(residual, self.context))

    def test_trace_preserved(self):
        """Traceless characteristics stay traceless."""
        seed = SymmetryOperator("internal", 1).seed(self.context)
        self.assertTrue(preserves_trace_psdym(seed, self.context))
        self.assertTrue(preserves_trace_sdym(normalize(parse("J*tau2", self.context), self.context), self.context))

    def test_commutator_of_recursion(self):
        """[Delta, R] e = D_zb^-1 [Phi_zb, e] for Phi = [X, tau1]."""
        characteristic = Characteristic(phi=SymmetryOperator("internal", 1).seed(self.context), name="tau1")
        for text in ("X_z", "X*X_yb"):
            with self.subTest(expr=text):
                self.assertTrue(lemma22_check(parse(text, self.context), characteristic, self.context))

    def test_commutator_of_recursion_on_fixtures(self):
        """Both sides agree coefficient by coefficient, integration constants included."""
        characteristic = Characteristic(phi=SymmetryOperator("internal", 1).seed(self.context), name="tau1")
        oracle = FixtureOracle([random_fixture(42, 4)], self.context, compare="full")
        for text in ("X_z", "X*X_yb"):
            with self.subTest(expr=text):
                verdict = oracle(commutation_sides(parse(text, self.context), characteristic, self.context).difference)
                self.assertTrue(verdict, verdict.witness)

    def test_isomorphism(self):
        """[Delta_1, Delta_2] X = I{[Delta_1, Delta_2] J} for internal symmetries."""
        pairs = [
            Characteristic(q=SymmetryOperator("internal", k).q_seed(self.context),
                           phi=SymmetryOperator("internal", k).seed(self.context), name=f"tau{k}")
            for k in (1, 2)
        ]
        self.assertTrue(isomorphism_check(pairs[0], pairs[1], self.context))

    def test_lifted_constant(self):
        """J tau_k lifted back is [X, tau_k] after I."""
        q = lift_J(Polynomial.of_atom(JetAtom.tau(3)), self.context)
        self.assertEqual(iso_I(q, self.context), normalize(parse("comm(X, tau3)", self.context), self.context))
