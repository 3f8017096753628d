import random
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from apps.core.exceptions import BudgetExceeded, LiteralSyntaxError
from apps.fpgroup.abelian import dim_hom_R
from apps.fpgroup.presentation import Presentation, parse_presentation
from apps.fpgroup.todd_coxeter import todd_coxeter
from apps.fpgroup.words import FreeWord
from apps.freeprod.literal import render_product_word
from apps.freeprod.product import Window, pw_reduce, pw_shift, pw_zip
from apps.laurent.rings import Rationals
from apps.laurent.series import LaurentSeries

from .bounds import BoundReport, critical_point_bounds, mu_dtc_bounds, rho_dtc_bounds
from .exceptions import UnresolvedGenerator
from .refutation import count_candidates, enumerate_candidates, single_generator_refutation_search
from .rho import RhoMatrix, build_rho_matrix, l_lambda_dim, level_zero_relations, rank_over_laurent_field
from .span import span_member_bounded
from .tasks import run_refutation_search
from .words import DtcGenerator, DtcWord, Factor, eval_dtc_word, parse_dtc_word, render_dtc_word

POINCARE = parse_presentation('gens: a b\nrel: a^5 b^-3\nrel: a^5 (a b)^-2\n')
Z2_PRES = parse_presentation('gens: a; rel: a^2')
Z2 = todd_coxeter(Z2_PRES)
Z3 = todd_coxeter(parse_presentation('gens: a; rel: a^3'))
KLEIN = todd_coxeter(parse_presentation('gens: a b; rel: a^2; rel: b^2; rel: a b a^-1 b^-1'))


def W(group, *pairs):
    return pw_reduce(group, pairs)


def letter(group, level=0, index=0):
    return W(group, (level, group.generator_images[index]))


class EvalTest(SimpleTestCase):

    def test_examples(self):
        g1 = DtcGenerator('g1', letter(Z2))
        self.assertEqual(eval_dtc_word(DtcWord((Factor(0, 'g1', 1),)), [g1], 0), letter(Z2))
        self.assertTrue(eval_dtc_word(DtcWord((Factor(-3, 'g1', 1),)), [g1], 0).is_identity)
        w = DtcWord((Factor(0, 'g1', 1), Factor(1, 'g1', 1)))
        a = Z2.generator_images[0]
        self.assertEqual(eval_dtc_word(w, [g1], 0), W(Z2, (0, a), (1, a)))

    def test_unresolved(self):
        g1 = DtcGenerator('g1', letter(Z2))
        with self.assertRaises(UnresolvedGenerator) as ctx:
            eval_dtc_word(DtcWord((Factor(0, 'g2', 1),)), [g1], 0)
        self.assertEqual(ctx.exception.gid, 'g2')

    def test_height_below_word_rejected(self):
        with self.assertRaises(ValueError):
            DtcGenerator('g1', letter(Z2, level=2), height=1)
        self.assertEqual(DtcGenerator('g1', letter(Z2, level=2), height=5).height, 5)

    def test_shift_equivariance(self):
        rng = random.Random(8)
        a, b = KLEIN.generator_images
        gens = [
            DtcGenerator('g1', W(KLEIN, (0, a), (1, b))),
            DtcGenerator('g2', W(KLEIN, (0, b))),
            DtcGenerator('g3', W(KLEIN, (1, a), (0, b), (1, a)), height=2),
        ]
        for _ in range(200):
            w = DtcWord(tuple(
                Factor(rng.randint(-2, 2), rng.choice(('g1', 'g2', 'g3')), rng.choice((-2, -1, 1, 3)))
                for _ in range(rng.randint(0, 5))
            ))
            h = rng.randint(-1, 2)
            self.assertEqual(eval_dtc_word(w.shifted(1), gens, h + 1), pw_shift(eval_dtc_word(w, gens, h), 1))

    def test_literal(self):
        w = parse_dtc_word('{0:g1^1}{-1:g1}{2:g2^-3}')
        self.assertEqual(w.factors, (Factor(0, 'g1', 1), Factor(-1, 'g1', 1), Factor(2, 'g2', -3)))
        self.assertEqual(render_dtc_word(w), '{0:g1^1}{-1:g1^1}{2:g2^-3}')
        self.assertEqual(parse_dtc_word(render_dtc_word(w)), w)
        self.assertEqual(parse_dtc_word('1'), DtcWord())
        for bad in ('{0:g1', '{x:g1}', '{0:g1^0}'):
            with self.subTest(bad=bad), self.assertRaises(LiteralSyntaxError):
                parse_dtc_word(bad)

    def test_compact(self):
        w = DtcWord((Factor(0, 'g1', 1), Factor(0, 'g1', 1), Factor(1, 'g1', 2), Factor(1, 'g1', -2)))
        self.assertEqual(w.compact(), DtcWord((Factor(0, 'g1', 2),)))


class SpanTest(SimpleTestCase):

    def test_single_letter_member(self):
        gens = [DtcGenerator('g1', letter(Z2))]
        result = span_member_bounded(letter(Z2), gens, 0, Window(0, 2), 3)
        self.assertTrue(result.is_member)
        self.assertEqual(result.witness, DtcWord((Factor(0, 'g1', 1),)))

    def test_square_in_z3(self):
        a = Z3.generator_images[0]
        target = W(Z3, (0, Z3.mul[a][a]))
        gens = [DtcGenerator('g1', letter(Z3))]
        result = span_member_bounded(target, gens, 0, Window(0, 1), 3)
        self.assertTrue(result.is_member)
        self.assertEqual(eval_dtc_word(result.witness, gens, 0), pw_zip(target, 0))

    def test_klein_other_generator_unknown(self):
        gens = [DtcGenerator('g1', letter(KLEIN, index=0))]
        result = span_member_bounded(letter(KLEIN, index=1), gens, 0, Window(0, 1), 4)
        self.assertFalse(result.is_member)
        self.assertEqual(result.to_dict()['status'], 'unknown')

    def test_target_below_level_is_trivially_member(self):
        gens = [DtcGenerator('g1', letter(Z2))]
        result = span_member_bounded(letter(Z2, level=-1), gens, 0, Window(0, 1), 1)
        self.assertTrue(result.is_member)
        self.assertEqual(len(result.witness), 0)

    def test_finite_window_exhaustion(self):
        gens = [DtcGenerator('g1', letter(Z2))]
        result = span_member_bounded(letter(Z2, level=1), gens, 1, Window(1, 1), 5)
        self.assertTrue(result.is_member)
        gens = [DtcGenerator('g1', letter(Z2, level=2))]
        result = span_member_bounded(letter(Z2, level=1), gens, 0, Window(0, 0), 5)
        self.assertFalse(result.is_member)
        self.assertTrue(result.exhausted)

    def test_state_budget(self):
        a, b = KLEIN.generator_images
        gens = [DtcGenerator('g1', W(KLEIN, (0, a), (1, b)))]
        result = span_member_bounded(letter(KLEIN, index=1), gens, 0, Window(0, 2), 6, max_states=10)
        self.assertFalse(result.is_member)
        self.assertFalse(result.exhausted)

    def test_invalid_arguments(self):
        gens = [DtcGenerator('g1', letter(Z2))]
        with self.assertRaises(ValueError):
            span_member_bounded(letter(Z2), gens, 5, Window(0, 1), 2)
        with self.assertRaises(ValueError):
            span_member_bounded(letter(Z2), gens, 0, Window(0, 1), 0)


class RhoTest(SimpleTestCase):

    def test_poincare_matrix(self):
        ids, relations = level_zero_relations(POINCARE)
        M = build_rho_matrix(ids, relations)
        self.assertEqual(M.polynomials(), [[{0: 5}, {0: -3}], [{0: 3}, {0: -2}]])
        self.assertEqual(rank_over_laurent_field(M), 2)
        self.assertEqual(l_lambda_dim(ids, relations), 0)

    def test_shifted_occurrences(self):
        M = build_rho_matrix(['g1'], [parse_dtc_word('{0:g1^1}{-1:g1^1}')])
        self.assertEqual(M.polynomial(0, 0), {0: 1, 1: 1})
        self.assertEqual(str(M), '[1 + t]')
        self.assertEqual(rank_over_laurent_field(M), 1)

    def test_entries_are_rational_series(self):
        M = build_rho_matrix(['g1'], [parse_dtc_word('{0:g1^1}{-1:g1^1}')])
        entry = M.series(0, 0)
        self.assertIsInstance(entry, LaurentSeries)
        self.assertEqual(entry.ring, Rationals())
        self.assertEqual(entry.truncation, 1)
        scaled = M.scale_row(0, {0: 1, 1: -1})
        self.assertEqual(scaled.polynomial(0, 0), {0: 1, 2: -1})
        self.assertEqual(str(scaled), '[1 - t^2]')
        self.assertEqual(M.scale_row(0, {-1: Fraction(1, 2)}).polynomial(0, 0), {-1: Fraction(1, 2), 0: Fraction(1, 2)})

    def test_proportional_rows(self):
        M = RhoMatrix.from_polynomials(['g1', 'g2'], [[{0: 1}, {1: 1}], [{-1: 1}, {0: 1}]])
        self.assertEqual(rank_over_laurent_field(M), 1)

    def test_empty_relations(self):
        M = build_rho_matrix(['g1', 'g2'], [])
        self.assertEqual(M.shape, (0, 2))
        self.assertEqual(rank_over_laurent_field(M), 0)
        self.assertEqual(l_lambda_dim(['g1'], []), 1)

    def test_l_dim_with_shift(self):
        self.assertEqual(l_lambda_dim(['g1'], [parse_dtc_word('{0:g1^1}{-1:g1^-1}')]), 0)

    def test_unresolved(self):
        with self.assertRaises(UnresolvedGenerator):
            build_rho_matrix(['g1'], [parse_dtc_word('{0:g2}')])

    def test_accepts_dtc_generators(self):
        gens = [DtcGenerator('g1', letter(Z2))]
        self.assertEqual(build_rho_matrix(gens, [parse_dtc_word('{0:g1^2}')]).polynomial(0, 0), {0: 2})

    def test_level_zero_agrees_with_dim_hom(self):
        rng = random.Random(13)
        names = ('a', 'b', 'c')
        for _ in range(100):
            ngens = rng.randint(1, 3)
            relators = []
            for _ in range(rng.randint(0, 3)):
                syllables = tuple((rng.randrange(ngens), rng.randint(-4, 4)) for _ in range(rng.randint(1, 4)))
                relators.append(FreeWord(syllables))
            p = Presentation(names[:ngens], tuple(relators))
            self.assertEqual(l_lambda_dim(*level_zero_relations(p)), dim_hom_R(p))

    def test_row_scaling_keeps_rank(self):
        rng = random.Random(21)

        def poly():
            return {rng.randint(-2, 2): Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(rng.randint(0, 2))}

        for _ in range(30):
            rows, cols = rng.randint(1, 3), rng.randint(1, 3)
            M = RhoMatrix.from_polynomials([f'g{j}' for j in range(cols)], [[poly() for _ in range(cols)] for _ in range(rows)])
            multiplier = {}
            while not any(multiplier.values()):
                multiplier = poly()
            i = rng.randrange(rows)
            self.assertEqual(rank_over_laurent_field(M.scale_row(i, multiplier)), rank_over_laurent_field(M))

    @hsettings(max_examples=30, deadline=None)
    @given(st.integers(-3, 3), st.lists(st.integers(-3, 3), min_size=1, max_size=3))
    def test_monomial_scaling(self, shift, coefficients):
        row = [{0: c} for c in coefficients]
        M = RhoMatrix.from_polynomials([f'g{j}' for j in range(len(row))], [row])
        self.assertEqual(rank_over_laurent_field(M.scale_row(0, {shift: 1})), rank_over_laurent_field(M))


class BoundsTest(SimpleTestCase):

    def test_poincare(self):
        g = todd_coxeter(POINCARE, 2000)
        mu = mu_dtc_bounds(g)
        rho = rho_dtc_bounds(POINCARE, g)
        self.assertEqual((mu.lower, mu.upper), (2, 2))
        self.assertEqual((rho.lower, rho.upper), (2, 2))
        self.assertEqual(str(mu), 'mu_DTC in [2, 2]')
        self.assertTrue(mu.certificates[0].startswith('Prop. noncyclic: lower 2'))
        self.assertTrue(mu.certificates[1].startswith('Prop. mu_DTC <= mu(G): upper 2'))
        self.assertEqual([c.split(':')[0] for c in rho.certificates], ['Prop. level-0 relators', 'Cor. deficiency'])
        self.assertTrue(mu.is_exact)
        self.assertEqual(critical_point_bounds(mu, rho), (2, 2))

    def test_trivial_and_cyclic(self):
        trivial = todd_coxeter(parse_presentation('gens: a; rel: a'))
        self.assertEqual((mu_dtc_bounds(trivial).lower, mu_dtc_bounds(trivial).upper), (0, 0))
        mu = mu_dtc_bounds(Z2)
        self.assertEqual((mu.lower, mu.upper), (1, 1))
        rho = rho_dtc_bounds(Z2_PRES)
        self.assertEqual((rho.lower, rho.upper), (1, 1))

    def test_free_group(self):
        rho = rho_dtc_bounds(parse_presentation('gens: a'))
        self.assertEqual((rho.lower, rho.upper), (0, 0))

    def test_unknown_upper(self):
        mu = mu_dtc_bounds(KLEIN, cap=1)
        self.assertEqual((mu.lower, mu.upper), (2, None))
        self.assertEqual(mu.interval(), 'mu_DTC in [2, ?]')
        self.assertFalse(mu.is_exact)
        self.assertIsNone(mu.to_dict()['upper'])

    def test_report_consistency(self):
        with self.assertRaises(ArithmeticError):
            BoundReport('mu_DTC', 3, 2)
        report = BoundReport('rho_DTC', 1, 1, ['x'])
        self.assertEqual(report.render(), 'rho_DTC in [1, 1]\n  - x')
        self.assertEqual(report.to_dict(), {'quantity': 'rho_DTC', 'lower': 1, 'upper': 1, 'certificates': ['x']})


class RefutationTest(SimpleTestCase):

    def test_klein_has_no_survivors(self):
        report = single_generator_refutation_search(KLEIN, Window(0, 1), 3)
        self.assertEqual(report.candidates, count_candidates(4, 2, 3))
        self.assertTrue(report.refuted)

    def test_cyclic_groups_survive(self):
        for group in (Z2, Z3):
            report = single_generator_refutation_search(group, Window(0, 1), 2)
            self.assertFalse(report.refuted)
            self.assertIn(render_product_word(letter(group)), report.to_dict()['survivors'])

    def test_candidate_enumeration(self):
        words = list(enumerate_candidates(Z2, Window(0, 1), 3))
        self.assertEqual(len(words), count_candidates(2, 2, 3))
        self.assertEqual(len(set(words)), len(words))
        self.assertTrue(all(not w.is_identity for w in words))

    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            single_generator_refutation_search(KLEIN, Window(0, 1), 3, max_candidates=5)

    def test_window_must_contain_zero(self):
        with self.assertRaises(ValueError):
            single_generator_refutation_search(Z2, Window(1, 2), 2)

    def test_task_runs_inline(self):
        result = run_refutation_search('gens: a; rel: a^2', '0:1', 1)
        self.assertFalse(result['refuted'])
        self.assertEqual(result['survivors'][0], '[0:a]')
