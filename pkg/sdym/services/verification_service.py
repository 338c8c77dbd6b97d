import logging
from typing import Callable, Optional

from ..exceptions import NonlocalConflictError, SdymError
from ..frechet import (
    Characteristic, bt17_residuals, cov_Ay, curvature_residual, identity_15_residual, psdym_residual, sdym_residual,
    verify_eq12,
)
from ..hierarchy import (
    HierarchyCatalog, SymmetryOperator, base_structure_table, catalogue, hierarchy_coherence, i_catalogue,
    verify_kac_moody, verify_sdym_kac_moody, verify_virasoro,
)
from ..hierarchy import VerificationOutcome
from ..hierarchy.structure import BASE_SIZE
from ..jetexpr import (
    Coordinate, JetAtom, Polynomial, RewriteContext, Trace, as_poly, commutator, fresh_context, multiply,
    normalize, parse, random_corpus, reduce_atom, to_text, total_derivative,
)
from ..recursion import (
    equal_in_covering, i_equivalence_check, isomorphism_check, iso_I, commutation_sides, lift_J, materialize,
    preserves_trace_psdym, preserves_trace_sdym, psdym_recursion_residual, sdym_recursion_residual, r_hat, t_hat,
    vanishes_in_covering,
)
from ..series import FixtureOracle, SeriesEvaluator, SolutionFixture, format_exponent, symmetry_binding
from ..algebra import ONE
from ..utils import Result, engine_setting
from .fixture_service import FixtureService
from .report import CaseOutcome, Report, run_case

logger = logging.getLogger(__name__)

SUITE_ORDER = ["core", "propositions", "lemma22", "example", "kac-moody", "virasoro"]
FIXTURE_SAMPLE = 25
WITNESS_LIMIT = 240


def _witness(residual: Polynomial) -> str:
    text = to_text(residual)
    if len(text) > WITNESS_LIMIT:
        text = text[:WITNESS_LIMIT] + "..."
    return f"{len(residual)} terms: {text}"


def _zero(residual: Polynomial, context: RewriteContext) -> CaseOutcome:
    if residual.is_zero() or vanishes_in_covering(residual, context):
        return CaseOutcome(True)
    return CaseOutcome(False, witness=_witness(residual))


def _outcome(outcome: VerificationOutcome) -> CaseOutcome:
    return CaseOutcome(outcome.passed, outcome.mode, outcome.witness)


class VerificationService:
    """Verification suites; each check becomes one report."""

    def __init__(self, fixture_service: FixtureService):
        self.fixture_service = fixture_service

    def run(self, suite: str, levels: Optional[int], degree: int, seed: int) -> Result[list[Report]] | Result[str]:
        suites = SUITE_ORDER if suite == "all" else [suite]
        if any(name not in SUITE_ORDER for name in suites):
            return Result.error(f"Unknown suite: {suite}")

        n = engine_setting("MATRIX_DIMENSION")
        session = _Session(
            context=fresh_context(n),
            degree=degree,
            seed=seed,
            levels=levels,
            fixture_service=self.fixture_service,
        )
        reports: list[Report] = []
        for name in suites:
            logger.info(f"Running suite {name} (degree {degree}, seed {seed})")
            try:
                cases = getattr(session, f"suite_{name.replace('-', '_')}")()
            except SdymError as e:
                logger.error(f"Suite {name} could not be set up: {str(e)}")
                return Result.error(f"Suite {name} could not be set up: {str(e)}")
            for check, case in cases:
                if isinstance(case, Report):
                    reports.append(case)
                else:
                    reports.append(run_case(name, check, case, session.config))
        reports.sort(key=lambda report: report.case_id)
        failed = sum(1 for report in reports if not report.passed)
        logger.info(f"{len(reports) - failed}/{len(reports)} checks passed")
        return Result.success(reports)


class _Session:
    """State shared by the suites of one run: the context, the hierarchy catalogue and fixtures."""

    def __init__(self, context: RewriteContext, degree: int, seed: int, levels: Optional[int],
                 fixture_service: FixtureService):
        self.context = context
        self.symmetric = context.derive(symmetric=frozenset({"Phi"}))
        self.degree = degree
        self.seed = seed
        self.levels = levels
        self.fixture_service = fixture_service
        self.catalog = HierarchyCatalog(context)
        self.config = {"degree": degree, "seed": seed, "levels": levels, "n": context.basis.n}

    # helpers

    def fixtures(self, seeds: list[int], with_abelian: bool = True) -> list[SolutionFixture]:
        result = self.fixture_service.get_fixtures(seeds, self.degree, with_abelian)
        if not result.is_success:
            raise SdymError(result.get_error())
        return result.get_data()

    def oracle(self, fixtures: list[SolutionFixture], compare: str, context: Optional[RewriteContext] = None,
               bindings=None) -> FixtureOracle:
        return FixtureOracle(
            fixtures, context or self.context, bindings=bindings, compare=compare,
            m_value=engine_setting("M_VALUE"),
        )

    def poly(self, text: str, context: Optional[RewriteContext] = None) -> Polynomial:
        context = context or self.context
        return as_poly(parse(text, context), context)

    # suites

    def suite_core(self) -> list[tuple[str, Callable]]:
        ctx = self.context
        off_shell = ctx.derive(psdym=False)
        fixtures = self.fixtures([self.seed, self.seed + 1, self.seed + 2])
        level0_oracle = self.oracle(fixtures[:1], "full")
        cases = [
            ("zero_curvature", lambda: _zero(curvature_residual(self.poly("P0"), ctx), ctx)),
            ("zero_curvature_off_shell", lambda: self._curvature_off_shell(off_shell)),
            ("identity_15", lambda: _zero(identity_15_residual(self.poly("P0"), ctx), ctx)),
            ("identity_15_off_shell", lambda: _zero(identity_15_residual(self.poly("P0", off_shell), off_shell),
                                                    off_shell)),
            ("eq12", lambda: CaseOutcome(verify_eq12(Characteristic(q=self.poly("Q"), name="Q"), ctx))),
            ("structure_table", self._structure_table),
        ]
        for operator in catalogue(ctx):
            cases.append((f"level0:{operator.label}",
                          lambda operator=operator: self._level0(operator, level0_oracle)))
        for k in range(1, ctx.dimension + 1):
            q = multiply(reduce_atom(JetAtom.j(), ctx), reduce_atom(JetAtom.tau(k), ctx), ctx)
            cases.append((f"sdym_level0:tau{k}", lambda q=q: _zero(sdym_residual(q, ctx), ctx)))
        for index, (q, phi) in enumerate(i_catalogue(ctx)):
            cases.append((f"bt_pair:{index}", lambda q=q, phi=phi: self._bt_pair(q, phi)))

        for fixture in fixtures:
            cases += [(report.check, report) for report in self.fixture_service.invariant_reports(fixture, "core")]
            cases.append((f"coherence:{fixture.tag}", lambda fixture=fixture: self._coherence(fixture)))

        random_fixture = fixtures[0]
        cases.append(("negative:psdym_residual(X*X)", lambda: self._negative_residual(random_fixture)))
        cases.append(("negative:nonlocal_conflict", lambda: self._negative_nonlocal(random_fixture)))
        return cases

    def suite_propositions(self) -> list[tuple[str, Callable]]:
        ctx, sym = self.context, self.symmetric
        phi = self.poly("Phi", sym)
        cases = [
            ("psdym_recursion:Phi", lambda: _zero(psdym_recursion_residual(phi, sym), sym)),
            ("sdym_recursion:J*Phi", lambda: _zero(sdym_recursion_residual(lift_J(phi, sym), sym), sym)),
            ("sdym_lift:J*Phi", lambda: _zero(sdym_residual(lift_J(phi, sym), sym), sym)),
        ]

        pairs = i_catalogue(ctx)
        for a in range(len(pairs)):
            for b in range(a + 1, len(pairs)):
                first = Characteristic(q=pairs[a][0], phi=pairs[a][1], name=f"pair{a}")
                second = Characteristic(q=pairs[b][0], phi=pairs[b][1], name=f"pair{b}")
                cases.append((f"isomorphism:{a},{b}",
                              lambda first=first, second=second: CaseOutcome(isomorphism_check(first, second, ctx))))

        fixtures = self.fixtures([self.seed])
        oracle = self.oracle(fixtures, "full")
        for operator in catalogue(ctx):
            cases.append((f"trace:{operator.label}",
                          lambda operator=operator: self._trace_preserved(operator, oracle)))
        for index, (q, _) in enumerate(pairs):
            cases.append((f"trace_sdym:{index}", lambda q=q: CaseOutcome(preserves_trace_sdym(q, ctx))))
        return cases

    def suite_lemma22(self) -> list[tuple[str, Callable]]:
        ctx, sym = self.context, self.symmetric
        corpus = random_corpus(self.seed, engine_setting("CORPUS_SIZE"), engine_setting("CORPUS_DEPTH"),
                               x_only=True, context=ctx)
        characteristics = [("Phi", Characteristic(phi=self.poly("Phi", sym), name="Phi"), sym)]
        for k in range(1, ctx.dimension + 1):
            seed = SymmetryOperator("internal", k).seed(ctx)
            characteristics.append((f"[X,tau{k}]", Characteristic(phi=seed, name=f"tau{k}"), ctx))

        fixtures = self.fixtures([self.seed])
        cases = []
        for label, characteristic, context in characteristics:
            cases.append((f"symbolic:{label}",
                          lambda characteristic=characteristic, context=context:
                          self._lemma22_symbolic(corpus, characteristic, context)))
        # both sides carry the same zb integration constants
        for label, characteristic, context in characteristics[:2]:
            oracle = self.oracle(
                fixtures, "full", context,
                bindings=lambda fixture: {"Phi": symmetry_binding(fixture, 1, ctx)},
            )
            cases.append((f"fixtures:{label}",
                          lambda characteristic=characteristic, context=context, oracle=oracle:
                          self._lemma22_oracle(corpus[:FIXTURE_SAMPLE], characteristic, context, oracle)))
        return cases

    def suite_example(self) -> list[tuple[str, Callable]]:
        ctx = self.context
        j_z = reduce_atom(JetAtom.j((0, 1, 0, 0)), ctx)
        x_z = reduce_atom(JetAtom.x((0, 1, 0, 0)), ctx)
        fixtures = self.fixtures([self.seed])
        oracle = self.oracle(fixtures, "covering")
        sample = [multiply(reduce_atom(JetAtom.j(), ctx), reduce_atom(JetAtom.tau(k), ctx), ctx)
                  for k in range(1, ctx.dimension + 1)]
        sample += [reduce_atom(JetAtom.j((0, 1, 0, 0)), ctx), reduce_atom(JetAtom.j((1, 0, 0, 0)), ctx)]
        return [
            ("iso_I(J_z)=X_z", lambda: _zero(iso_I(j_z, ctx) - x_z, ctx)),
            ("t_hat(J_z)=J*X_z", lambda: _zero(t_hat(j_z, ctx) - lift_J(x_z, ctx), ctx)),
            ("iso_I(t_hat(J_z))=r_hat(X_z)", lambda: self._example_chain(j_z, x_z, oracle)),
            ("i_equivalence", lambda: CaseOutcome(
                i_equivalence_check(lambda q: t_hat(q, ctx), lambda e: r_hat(e, ctx), sample, ctx, oracle),
                "oracle")),
        ] + [
            (f"coherence:{operator.label}",
             lambda operator=operator: _outcome(hierarchy_coherence(operator, 0, self.catalog)))
            for operator in catalogue(ctx) if operator.q_seed(ctx) is not None
        ]

    def suite_kac_moody(self) -> list[tuple[str, Callable]]:
        ctx = self.context
        levels = 1 if self.levels is None else self.levels
        cap = engine_setting("ORACLE_LEVEL_CAP")
        fixtures = self.fixtures([self.seed, self.seed + 1])
        oracle = self.oracle(fixtures, "covering")
        pairs = [(m, n) for m in range(levels + 1) for n in range(levels + 1) if m + n <= cap]
        cases = []
        d = ctx.dimension
        for m, n in pairs:
            mode = "symbolic" if m + n == 0 else "oracle"
            for i in range(1, d + 1):
                for j in range(1, d + 1):
                    if i == j and m == n:
                        continue
                    cases.append((f"internal:({i},{j}):({m},{n})",
                                  lambda i=i, j=j, m=m, n=n, mode=mode: _outcome(verify_kac_moody(
                                      "internal", i, j, m, n, mode, self.catalog, oracle, context=ctx))))
        for m, n in pairs:
            if m + n > 1:
                continue
            mode = "symbolic" if m + n == 0 else "oracle"
            for i in range(1, BASE_SIZE + 1):
                for j in range(i + 1, BASE_SIZE + 1):
                    cases.append((f"base:({i},{j}):({m},{n})",
                                  lambda i=i, j=j, m=m, n=n, mode=mode: _outcome(verify_kac_moody(
                                      "base", i, j, m, n, mode, self.catalog, oracle, context=ctx))))
        for i in range(1, d + 1):
            for j in range(i + 1, d + 1):
                cases.append((f"sdym:({i},{j})", lambda i=i, j=j: _outcome(verify_sdym_kac_moody(i, j, context=ctx))))
        return cases

    def suite_virasoro(self) -> list[tuple[str, Callable]]:
        ctx = self.context
        levels = 1 if self.levels is None else self.levels
        cap = engine_setting("ORACLE_LEVEL_CAP")
        fixtures = self.fixtures([self.seed])
        oracle = self.oracle(fixtures, "covering")
        pairs = [(m, n) for m in range(levels + 1) for n in range(levels + 1) if m + n <= cap]
        cases = []
        for which in (6, 7):
            for m, n in pairs:
                mode = "symbolic" if m + n == 0 else "oracle"
                cases.append((f"L{which}:({m},{n})",
                              lambda which=which, m=m, n=n, mode=mode: _outcome(verify_virasoro(
                                  which, m, n, mode, self.catalog, oracle, context=ctx))))
        return cases

    # individual checks

    def _curvature_off_shell(self, off_shell: RewriteContext) -> CaseOutcome:
        """With the PSDYM reduction off the curvature is -[G, p], G the PSDYM left side."""
        operand = self.poly("P0", off_shell)
        residual = curvature_residual(operand, off_shell)
        g = self.poly("Dy(Dyb(X)) + Dz(Dzb(X)) - comm(Dyb(X), Dzb(X))", off_shell)
        if residual.is_zero():
            return CaseOutcome(False, witness="curvature vanishes without the PSDYM reduction")
        mismatch = residual + commutator(g, operand, off_shell)
        return CaseOutcome(True) if mismatch.is_zero() else CaseOutcome(False, witness=_witness(mismatch))

    def _structure_table(self) -> CaseOutcome:
        table = base_structure_table(self.context)
        if not table.is_antisymmetric():
            return CaseOutcome(False, witness="table is not antisymmetric")
        if not table.satisfies_jacobi():
            return CaseOutcome(False, witness="table violates the Jacobi identity")
        # f = -c with [L_i, L_j] = c_ij^k L_k
        if table.constant(2, 3, 1) + ONE:
            return CaseOutcome(False, witness="[L2, L3] != L1")
        if table.constant(3, 4, 5) - ONE:
            return CaseOutcome(False, witness="[L3, L4] != -L5")
        return CaseOutcome(True)

    def _level0(self, operator: SymmetryOperator, oracle: FixtureOracle) -> CaseOutcome:
        """Symbolic when the residual normalizes to zero, otherwise decided on a fixture."""
        residual = psdym_residual(operator.seed(self.context), self.context)
        if residual.is_zero():
            return CaseOutcome(True)
        verdict = oracle(residual)
        return CaseOutcome(verdict.passed, "oracle", verdict.witness)

    def _bt_pair(self, q: Polynomial, phi: Polynomial) -> CaseOutcome:
        first, second = bt17_residuals(Characteristic(q=q, phi=phi), self.context)
        if first.is_zero() and second.is_zero():
            return CaseOutcome(True)
        return CaseOutcome(False, witness=_witness(first if not first.is_zero() else second))

    def _coherence(self, fixture: SolutionFixture) -> CaseOutcome:
        """Evaluating an expression and its normal form gives the same series."""
        ctx = self.context
        corpus = random_corpus(self.seed, engine_setting("CORPUS_SIZE"), engine_setting("CORPUS_DEPTH"), context=ctx)
        evaluator = SeriesEvaluator(fixture, ctx, m_value=engine_setting("M_VALUE"))
        for index, expr in enumerate(corpus):
            difference = evaluator.evaluate(expr) - evaluator.evaluate(normalize(expr, ctx))
            found = difference.first_nonzero()
            if found is not None:
                return CaseOutcome(False, "oracle",
                                   f"corpus[{index}] = {to_text(expr)} differs at {format_exponent(found[0])}")
        return CaseOutcome(True, "oracle")

    def _negative_residual(self, fixture: SolutionFixture) -> CaseOutcome:
        ctx = self.context
        residual = psdym_residual(self.poly("X*X"), ctx)
        if residual.is_zero():
            return CaseOutcome(False, witness="X*X passed the symbolic symmetry test")
        if self.oracle([fixture], "full")(residual):
            return CaseOutcome(False, "oracle", "X*X passed the fixture symmetry test")
        return CaseOutcome(True, "oracle")

    def _negative_nonlocal(self, fixture: SolutionFixture) -> CaseOutcome:
        """A potential sourced from a non-symmetry has inconsistent defining relations."""
        scratch = fresh_context(self.context.basis.n)
        atom = materialize(self.poly("X*X", scratch), 1, scratch, origin="negative control")
        try:
            SeriesEvaluator(fixture, scratch).atom(atom)
        except NonlocalConflictError:
            return CaseOutcome(True, "oracle")
        return CaseOutcome(False, "oracle", f"{atom.name} reconstructed without conflict")

    def _trace_preserved(self, operator: SymmetryOperator, oracle: FixtureOracle) -> CaseOutcome:
        ctx = self.context
        seed = operator.seed(ctx)
        if not preserves_trace_psdym(seed, ctx):
            return CaseOutcome(False, witness=f"tr(R {operator.label}) does not normalize to zero")
        verdict = oracle(Trace(r_hat(seed, ctx)))
        return CaseOutcome(verdict.passed, "oracle", verdict.witness)

    def _lemma22_symbolic(self, corpus, characteristic: Characteristic, context: RewriteContext) -> CaseOutcome:
        for index, expr in enumerate(corpus):
            sides = commutation_sides(expr, characteristic, context)
            if not equal_in_covering(sides.commutator, sides.predicted, context):
                return CaseOutcome(False, witness=f"corpus[{index}] = {to_text(expr)}")
        return CaseOutcome(True)

    def _lemma22_oracle(self, corpus, characteristic: Characteristic, context: RewriteContext,
                        oracle: FixtureOracle) -> CaseOutcome:
        for index, expr in enumerate(corpus):
            verdict = oracle(commutation_sides(expr, characteristic, context).difference)
            if not verdict:
                return CaseOutcome(False, "oracle", f"corpus[{index}]: {verdict.witness}")
        return CaseOutcome(True, "oracle")

    def _example_chain(self, j_z: Polynomial, x_z: Polynomial, oracle: FixtureOracle) -> CaseOutcome:
        """I{T J_z} against R X_z, and R X_z against its defining relation D_zb(R X_z) = A_y X_z."""
        ctx = self.context
        left, right = iso_I(t_hat(j_z, ctx), ctx), r_hat(x_z, ctx)
        if not equal_in_covering(left, right, ctx):
            verdict = oracle(left - right)
            if not verdict:
                return CaseOutcome(False, "oracle", verdict.witness)
        relation = total_derivative(right, Coordinate.ZB, ctx) - cov_Ay(x_z, ctx)
        return _zero(relation, ctx)
