from django.test import SimpleTestCase

from sdym.algebra import rational
from sdym.exceptions import ParseError, UnknownIdentifierError
from sdym.jetexpr import (
    Coordinate, JetAtom, Polynomial, Sum, equals_mod_ideal, exact_antiderivative, fresh_context, inv_dzbar,
    normalize, parse, random_corpus, reduce_atom, to_latex, to_text, total_derivative, trace_expr, using_context,
)


class ParserTest(SimpleTestCase):
    """Parsing and error positions."""

    def setUp(self):
        self.context = fresh_context(2)

    def test_jet_suffix(self):
        """X_zzb carries one z and one zb derivative."""
        atom = JetAtom.x((0, 1, 0, 1))
        self.assertEqual(normalize(parse("X_zzb", self.context), self.context), Polynomial.of_atom(atom))

    def test_syntax_error_position(self):
        """A dangling operator reports where parsing stopped."""
        with self.assertRaises(ParseError) as raised:
            parse("X +", self.context)
        self.assertEqual(raised.exception.position, (3, 3))

    def test_unknown_identifier(self):
        """Names outside the grammar are rejected."""
        with self.assertRaises(UnknownIdentifierError):
            parse("Foo", self.context)

    def test_tau_outside_basis(self):
        """sl(2) has tau1..tau3 only."""
        with self.assertRaises(UnknownIdentifierError):
            parse("tau4", self.context)
        parse("tau8", fresh_context(3))

    def test_division_by_zero(self):
        with self.assertRaises(ParseError):
            parse("1/0", self.context)


class NormalFormTest(SimpleTestCase):
    """Reduction modulo the Backlund relations and the PSDYM equation."""

    def setUp(self):
        self.context = fresh_context(2)

    def canonical(self, text, context=None):
        context = context or self.context
        return normalize(parse(text, context), context)

    def test_backlund_reduction(self):
        """J_y = J X_zb and J_z = -J X_yb."""
        self.assertEqual(to_text(self.canonical("J_y")), "J*X_zb")
        self.assertEqual(to_text(self.canonical("J_z")), "-J*X_yb")

    def test_inverse_cancels(self):
        """J Jinv and Jinv J reduce to the identity."""
        self.assertEqual(to_text(self.canonical("J*Jinv")), "I")
        self.assertEqual(to_text(self.canonical("Jinv*J")), "I")

    def test_derivative_of_identity(self):
        """D_y(J Jinv) vanishes."""
        self.assertTrue(self.canonical("Dy(J*Jinv)").is_zero())
        self.assertTrue(self.canonical("Dzb(Jinv*J)").is_zero())

    def test_constant_product_folds(self):
        """tau1 tau2 = E11 = (I + tau3) / 2."""
        self.assertTrue(equals_mod_ideal(parse("tau1*tau2", self.context),
                                         parse("1/2 + 1/2*tau3", self.context), self.context))

    def test_psdym_reduction(self):
        """X_{y yb} is eliminated through the PSDYM equation."""
        self.assertEqual(self.canonical("X_yyb"), self.canonical("-X_zzb + X_yb*X_zb - X_zb*X_yb"))

    def test_psdym_reduction_off(self):
        """Without the PSDYM switch X_{y yb} stays a jet."""
        off_shell = fresh_context(2, psdym=False)
        self.assertEqual(self.canonical("X_yyb", off_shell), Polynomial.of_atom(JetAtom.x((1, 0, 1, 0))))

    def test_constants_are_constant(self):
        """Jets of tau_k and M vanish."""
        self.assertTrue(self.canonical("Dy(tau1) + M_zb").is_zero())

    def test_trace(self):
        """tr X = 0, tr I = n, tr tau_k = 0."""
        self.assertTrue(self.canonical("tr(X)").is_zero())
        self.assertTrue(self.canonical("tr(tau3)").is_zero())
        self.assertEqual(self.canonical("tr(I)"), Polynomial.identity(2))

    def test_trace_is_cyclic(self):
        """tr(A B) = tr(B A)."""
        self.assertTrue(self.canonical("tr(X_yb*X_zb) - tr(X_zb*X_yb)").is_zero())

    def test_commutator(self):
        """comm(a, b) = ab - ba."""
        self.assertEqual(self.canonical("comm(X_y, X_z)"), self.canonical("X_y*X_z - X_z*X_y"))

    def test_coordinates(self):
        """D_y(y X) = X + y X_y."""
        self.assertEqual(self.canonical("Dy(y*X)"), self.canonical("X + y*X_y"))

    def test_idempotent(self):
        """Normalizing a normal form is a no-op."""
        canonical = self.canonical("comm(J_y, Jinv) + tr(X_yb*X_zb)*X + 3*M*tau2")
        self.assertEqual(normalize(canonical, self.context), canonical)

    def test_trace_expr(self):
        self.assertTrue(trace_expr(parse("X", self.context), self.context).is_zero())
        self.assertEqual(trace_expr(parse("J*Jinv", self.context), self.context), Polynomial.identity(2))


class TotalDerivativeTest(SimpleTestCase):

    def setUp(self):
        self.context = fresh_context(2)

    def test_leibniz(self):
        """D_zb(X_y X) = X_yzb X + X_y X_zb."""
        product = normalize(parse("X_y*X", self.context), self.context)
        expected = normalize(parse("X_yzb*X + X_y*X_zb", self.context), self.context)
        self.assertEqual(total_derivative(product, Coordinate.ZB, self.context), expected)

    def test_jinv_derivative(self):
        """D_zb Jinv = -Jinv J_zb Jinv."""
        derived = reduce_atom(JetAtom.jinv((0, 0, 0, 1)), self.context)
        self.assertEqual(derived, normalize(parse("-Jinv*J_zb*Jinv", self.context), self.context))


class AntiderivativeTest(SimpleTestCase):
    """D_zb^-1 by exact search, falling back to opaque factors."""

    def setUp(self):
        self.context = fresh_context(2)

    def poly(self, text):
        return normalize(parse(text, self.context), self.context)

    def test_exact_jet(self):
        """D_zb^-1 X_zb = X."""
        self.assertEqual(inv_dzbar(self.poly("X_zb"), self.context), self.poly("X"))

    def test_exact_mixed_jet(self):
        """D_zb^-1 X_{y zb} = X_y."""
        self.assertEqual(inv_dzbar(self.poly("X_yzb"), self.context), self.poly("X_y"))

    def test_opaque_fallback(self):
        """X_y has no exact antiderivative; the opaque one still differentiates back."""
        integrand = self.poly("X_y")
        self.assertIsNone(exact_antiderivative(integrand, self.context))
        antiderivative = inv_dzbar(integrand, self.context)
        self.assertEqual(total_derivative(antiderivative, Coordinate.ZB, self.context), integrand)

    def test_inverse_of_derivative(self):
        """D_zb D_zb^-1 is the identity on normal forms."""
        integrand = self.poly("X_yb*X_zb + X_zb*X_yb")
        self.assertEqual(total_derivative(inv_dzbar(integrand, self.context), Coordinate.ZB, self.context), integrand)

    def test_exact_antiderivative_of_zero(self):
        self.assertTrue(exact_antiderivative(Polynomial(), self.context).is_zero())

    def test_exact_part_beside_opaque(self):
        """The exact part of a mixed integrand is integrated; only the rest stays opaque."""
        integrand = self.poly("Dzb(X_yb*P1) + X_y")
        expected = self.poly("X_yb*P1") + inv_dzbar(self.poly("X_y"), self.context)
        self.assertEqual(inv_dzbar(integrand, self.context), expected)
        self.assertTrue(equals_mod_ideal(parse("IDzb(Dzb(X_yb*P1) + X_y)", self.context),
                                         parse("X_yb*P1 + IDzb(X_y)", self.context), self.context))

    def test_exact_commutator_beside_opaque(self):
        """Cancelling candidate derivatives still count as exact."""
        self.assertTrue(equals_mod_ideal(parse("IDzb(Dzb(comm(X_z, X)) + X_y)", self.context),
                                         parse("comm(X_z, X) + IDzb(X_y)", self.context), self.context))
        self.assertTrue(equals_mod_ideal(parse("IDzb(Dzb(X_z*X) + X_y)", self.context),
                                         parse("X_z*X + IDzb(X_y)", self.context), self.context))


class PrinterTest(SimpleTestCase):

    def setUp(self):
        self.context = fresh_context(2)

    def test_text_reparses(self):
        """The text printer emits the parser's grammar."""
        for text in ("3/2*X_yb*X - tr(X_y*X_z)", "comm(J, tau1)*Jinv", "y*zb*M + i*X_zb"):
            canonical = normalize(parse(text, self.context), self.context)
            self.assertEqual(normalize(parse(to_text(canonical), self.context), self.context), canonical)

    def test_latex(self):
        """LaTeX uses tau subscripts and barred jets."""
        latex = to_latex(normalize(parse("tau1*X_zb", self.context), self.context))
        self.assertIn(r"\tau_{1}", latex)
        self.assertIn(r"\bar", latex)

    def test_zero(self):
        self.assertEqual(to_text(Polynomial()), "0")
        self.assertEqual(to_latex(Polynomial()), "0")


class ContextTest(SimpleTestCase):

    def test_fresh_registries(self):
        """Fresh contexts do not share nonlocal registries; derived ones do."""
        first, second = fresh_context(2), fresh_context(2)
        self.assertIsNot(first.registry, second.registry)
        self.assertIs(first.derive(bt=False).registry, first.registry)

    def test_using_context(self):
        """Parsing without a context uses the active one."""
        with using_context(fresh_context(3)):
            parse("tau8")

    def test_corpus_is_deterministic(self):
        """The same seed gives the same corpus."""
        context = fresh_context(2)
        first = [to_text(expr) for expr in random_corpus(7, 5, context=context)]
        second = [to_text(expr) for expr in random_corpus(7, 5, context=context)]
        self.assertEqual(first, second)
        self.assertEqual(len(first), 5)

    def test_corpus_x_only(self):
        """x_only corpora mention no J."""
        context = fresh_context(2)
        for expr in random_corpus(3, 10, x_only=True, context=context):
            atoms = normalize(expr, context).atoms()
            self.assertFalse(any(atom.name in ("J", "Jinv") for atom in atoms))


class NormalFormPropertyTest(SimpleTestCase):
    """Rewrite-system invariants over seeded random corpora."""

    def setUp(self):
        self.context = fresh_context(2)

    def test_idempotent(self):
        for expr in random_corpus(1, 1000, depth=4, context=self.context):
            canonical = normalize(expr, self.context)
            self.assertEqual(normalize(canonical, self.context), canonical, to_text(expr))

    def test_linear(self):
        """normalize(a + b) = normalize(normalize(a) + normalize(b))."""
        corpus = random_corpus(2, 1000, depth=4, context=self.context)
        for a, b in zip(corpus[::2], corpus[1::2]):
            left = normalize(Sum((a, b)), self.context)
            right = normalize(Sum((normalize(a, self.context), normalize(b, self.context))), self.context)
            self.assertEqual(left, right, f"{to_text(a)} + {to_text(b)}")

    def test_total_derivatives_commute(self):
        pairs = [(a, b) for a in Coordinate for b in Coordinate if a < b]
        for expr in random_corpus(3, 200, context=self.context):
            canonical = normalize(expr, self.context)
            for a, b in pairs:
                with self.subTest(expr=to_text(expr), pair=(a.name, b.name)):
                    ab = total_derivative(total_derivative(canonical, a, self.context), b, self.context)
                    ba = total_derivative(total_derivative(canonical, b, self.context), a, self.context)
                    self.assertTrue(equals_mod_ideal(ab, ba, self.context))


class AntiderivativePropertyTest(SimpleTestCase):
    """D_zb and D_zb^-1 invert each other on random corpora."""

    def setUp(self):
        self.context = fresh_context(2)

    def test_corpus_has_antiderivatives(self):
        corpus = random_corpus(4, 50, context=self.context, antiderivatives=True)
        self.assertTrue(any("IDzb(" in to_text(expr) for expr in corpus))
        plain = random_corpus(4, 50, context=self.context)
        self.assertFalse(any("IDzb(" in to_text(expr) for expr in plain))

    def test_derivative_of_antiderivative(self):
        """D_zb D_zb^-1 e = e, exact or opaque."""
        for expr in random_corpus(5, 200, context=self.context, antiderivatives=True):
            canonical = normalize(expr, self.context)
            integrated = inv_dzbar(canonical, self.context)
            self.assertEqual(total_derivative(integrated, Coordinate.ZB, self.context), canonical, to_text(expr))

    def test_antiderivative_of_derivative(self):
        """D_zb^-1 D_zb e = e up to its zb-independent part."""
        for expr in random_corpus(6, 200, context=self.context, antiderivatives=True):
            canonical = normalize(expr, self.context)
            recovered = inv_dzbar(total_derivative(canonical, Coordinate.ZB, self.context), self.context)
            self.assertTrue(total_derivative(recovered - canonical, Coordinate.ZB, self.context).is_zero(),
                            to_text(expr))

    def test_antiderivative_of_local_derivative(self):
        """On X-only local expressions only the constant part is lost."""
        constant = {Polynomial.identity().monomials()[0]}
        for expr in random_corpus(7, 200, x_only=True, context=self.context):
            canonical = normalize(expr, self.context)
            recovered = inv_dzbar(total_derivative(canonical, Coordinate.ZB, self.context), self.context)
            self.assertEqual(recovered, canonical - canonical.restrict(constant), to_text(expr))

    def test_linear_beside_opaque(self):
        """D_zb^-1(D_zb e + X_y) = e + D_zb^-1 X_y."""
        opaque = inv_dzbar(normalize(parse("X_y", self.context), self.context), self.context)
        for expr in random_corpus(8, 200, x_only=True, context=self.context):
            derivative = total_derivative(normalize(expr, self.context), Coordinate.ZB, self.context)
            mixed = derivative + normalize(parse("X_y", self.context), self.context)
            self.assertEqual(inv_dzbar(mixed, self.context), inv_dzbar(derivative, self.context) + opaque,
                             to_text(expr))
