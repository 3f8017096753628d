import random
from itertools import combinations
from math import gcd

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings as hsettings, strategies as st

from apps.core.exceptions import BudgetExceeded

from .abelian import AbelianGroup, AbelianizationMap, abelianization, dim_hom_R
from .exceptions import CosetLimitExceeded, PresentationSyntaxError, UndeclaredGenerator
from .matrices import IntMatrix, rank_over_rationals, smith_normal_form
from .presentation import Presentation, parse_presentation, parse_word
from .tables import abelianization_map, is_cyclic, min_generators
from .todd_coxeter import fp_group, todd_coxeter
from .words import FreeWord, free_group_of_rank, free_reduce, from_free_element, to_free_element

POINCARE = 'gens: a b\nrel: a^5 b^-3\nrel: a^5 (a b)^-2\n'
Z2 = 'gens: a\nrel: a^2\n'
Z3 = 'gens: a\nrel: a^3\n'
Z6 = 'gens: a\nrel: a^6\n'
KLEIN = 'gens: a b\nrel: a^2\nrel: b^2\nrel: a b a^-1 b^-1\n'


def group(text, max_cosets=2000):
    return todd_coxeter(parse_presentation(text), max_cosets)


def determinantal_factors(rows):
    """Fatores invariantes pelo mdc dos menores k×k."""
    m, n = len(rows), len(rows[0])
    M = IntMatrix.from_rows(rows)
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for r in combinations(range(m), k):
            for c in combinations(range(n), k):
                minor = IntMatrix.from_rows([[M[i, j] for j in c] for i in r])
                g = gcd(g, minor.determinant())
        divisors.append(g)
    factors = []
    for k in range(1, len(divisors)):
        factors.append(divisors[k] // divisors[k - 1] if divisors[k - 1] else 0)
    return factors


class FreeReduceTest(SimpleTestCase):

    def test_examples(self):
        a = 0
        self.assertEqual(free_reduce(FreeWord(((a, 1), (1, 1), (1, -1), (a, 1)))), FreeWord(((a, 2),)))
        self.assertEqual(free_reduce(FreeWord(((a, 0),))), FreeWord())
        self.assertEqual(free_reduce(FreeWord(((a, 2), (a, -2)))), FreeWord())

    @given(st.lists(st.tuples(st.integers(0, 2), st.integers(-3, 3)), max_size=12))
    def test_idempotent_and_reduced(self, syllables):
        reduced = free_reduce(FreeWord(tuple(syllables)))
        self.assertEqual(free_reduce(reduced), reduced)
        for (g, e), (h, _) in zip(reduced.syllables, reduced.syllables[1:]):
            self.assertNotEqual(g, h)
            self.assertNotEqual(e, 0)

    def test_sympy_free_group_round_trip(self):
        F = free_group_of_rank(2)
        x0, x1 = F.generators
        element = to_free_element(FreeWord(((0, 2), (1, -1), (1, 1), (0, 1))), F)
        self.assertEqual(element, x0**3)
        self.assertEqual(from_free_element(x0 * x1**-2 * x0, F), FreeWord(((0, 1), (1, -2), (0, 1))))

    @given(st.lists(st.tuples(st.integers(0, 2), st.integers(-3, 3)), max_size=10))
    def test_word_times_inverse_is_empty(self, syllables):
        w = free_reduce(FreeWord(tuple(syllables)))
        self.assertTrue((w * w.inverse()).is_empty)


class PresentationTest(SimpleTestCase):

    def test_poincare(self):
        p = parse_presentation(POINCARE)
        self.assertEqual(p.generators, ('a', 'b'))
        a, b = 0, 1
        self.assertEqual(p.relators[0], FreeWord(((a, 5), (b, -3))))
        self.assertEqual(
            p.relators[1],
            FreeWord(((a, 5), (b, -1), (a, -1), (b, -1), (a, -1))),
        )

    def test_free_group(self):
        p = parse_presentation('gens: a\n')
        self.assertEqual(p.generators, ('a',))
        self.assertEqual(p.relators, ())

    def test_undeclared_generator(self):
        with self.assertRaises(UndeclaredGenerator) as ctx:
            parse_presentation('gens: a\nrel: b')
        self.assertEqual(ctx.exception.name, 'b')
        self.assertEqual((ctx.exception.line, ctx.exception.column), (2, 6))

    def test_comments_and_semicolons(self):
        p = parse_presentation('# Z/3\ngens: a ; rel: a^3  # cíclico\n')
        self.assertEqual(p.relators, (FreeWord(((0, 3),)),))

    def test_syntax_errors_carry_position(self):
        cases = {
            'gens: a\nrel: a^': (2, 8),
            'gens: a\nrel: (a': (2, 8),
            'rel: a': (1, 1),
            'gens: a\nfoo: a': (2, 1),
        }
        for text, position in cases.items():
            with self.subTest(text=text), self.assertRaises(PresentationSyntaxError) as ctx:
                parse_presentation(text)
            self.assertEqual((ctx.exception.line, ctx.exception.column), position)

    def test_word_grammar(self):
        gens = ('a', 'b')
        self.assertEqual(parse_word('a*b^2', gens), parse_word('a b b', gens))
        self.assertEqual(parse_word('(a b)^-1', gens), parse_word('b^-1 a^-1', gens))
        self.assertTrue(parse_word('1', gens).is_empty)
        self.assertTrue(parse_word('a a^-1', gens).is_empty)

    def test_render_reparses(self):
        p = parse_presentation(POINCARE)
        self.assertEqual(parse_presentation(p.render()), p)


class SmithNormalFormTest(SimpleTestCase):

    def check(self, rows):
        M = IntMatrix.from_rows(rows)
        result = smith_normal_form(M)
        self.assertEqual(result.U.matmul(M).matmul(result.V), IntMatrix.diagonal(M.rows, M.cols, result.d))
        self.assertIn(result.U.determinant(), (1, -1))
        self.assertIn(result.V.determinant(), (1, -1))
        for x, y in zip(result.d, result.d[1:]):
            self.assertTrue(y % x == 0 if x else y == 0)
        self.assertTrue(all(x >= 0 for x in result.d))
        return result

    def test_examples(self):
        self.assertEqual(self.check([[5, -3], [3, -2]]).d, (1, 1))
        self.assertEqual(self.check([[2]]).d, (2,))
        self.assertEqual(self.check([[0, 0], [0, 0]]).d, (0, 0))

    def test_divisibility_fix(self):
        self.assertEqual(self.check([[2, 0], [0, 3]]).d, (1, 6))
        self.assertEqual(self.check([[4, 0, 0], [0, 6, 0]]).d, (2, 12))

    def test_negative_factors_are_normalized(self):
        self.assertEqual(self.check([[-3]]).d, (3,))
        self.assertEqual(self.check([[0, -4], [6, 0]]).d, (2, 12))
        self.assertEqual(self.check([[-1, 0, 0], [0, 0, -5]]).d, (1, 5))

    def test_empty_shapes(self):
        self.assertEqual(smith_normal_form(IntMatrix.zeros(0, 3)).d, ())
        self.assertEqual(smith_normal_form(IntMatrix.zeros(2, 0)).d, ())

    def test_matches_determinantal_divisors(self):
        rng = random.Random(8)
        for _ in range(500):
            rows = [[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)]
            result = self.check(rows)
            self.assertEqual(list(result.d), determinantal_factors(rows))

    @given(st.integers(1, 4), st.integers(1, 4), st.data())
    @hsettings(max_examples=60, deadline=None)
    def test_rectangular_against_oracle(self, m, n, data):
        rows = data.draw(st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=m, max_size=m))
        self.assertEqual(list(self.check(rows).d), determinantal_factors(rows))

    def test_rank_over_rationals(self):
        self.assertEqual(rank_over_rationals(IntMatrix.from_rows([[1, 2], [2, 4]])), 1)
        self.assertEqual(rank_over_rationals(IntMatrix.zeros(0, 2)), 0)


class AbelianizationTest(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(abelianization(parse_presentation(POINCARE)), AbelianGroup(0, ()))
        self.assertEqual(
            abelianization(parse_presentation('gens: a b; rel: a b a^-1 b^-1')), AbelianGroup(2, ())
        )
        self.assertEqual(abelianization(parse_presentation(Z2)), AbelianGroup(0, (2,)))

    def test_text_forms(self):
        g = AbelianGroup(2, (2, 4))
        self.assertEqual(str(g), 'rank 2, torsion [2, 4]')
        self.assertEqual(AbelianGroup.parse(str(g)), g)
        self.assertEqual(str(AbelianGroup(0)), 'rank 0, torsion []')
        self.assertEqual(g.pretty(), 'Z^2 ⊕ Z/2 ⊕ Z/4')
        self.assertEqual(AbelianGroup(0).pretty(), '0')

    def test_invalid_torsion(self):
        with self.assertRaises(ValueError):
            AbelianGroup(0, (2, 3))
        with self.assertRaises(ValueError):
            AbelianGroup(0, (1,))

    def test_dim_hom(self):
        self.assertEqual(dim_hom_R(parse_presentation(POINCARE)), 0)
        self.assertEqual(dim_hom_R(parse_presentation('gens: a b')), 2)
        self.assertEqual(dim_hom_R(parse_presentation(Z2)), 0)

    def test_rank_equals_dim_hom(self):
        rng = random.Random(5)
        names = ('a', 'b', 'c')
        for _ in range(100):
            ngens = rng.randint(1, 3)
            relators = []
            for _ in range(rng.randint(0, 3)):
                syllables = tuple((rng.randrange(ngens), rng.randint(-4, 4)) for _ in range(rng.randint(1, 4)))
                relators.append(FreeWord(syllables))
            p = Presentation(names[:ngens], tuple(relators))
            self.assertEqual(abelianization(p).rank, dim_hom_R(p))

    def test_map_coordinates(self):
        p = parse_presentation('gens: a b; rel: a^2; rel: a b a^-1 b^-1')
        amap = AbelianizationMap.from_presentation(p)
        self.assertEqual(amap.group, AbelianGroup(1, (2,)))
        self.assertEqual(amap.of_word(p.word('a^2')), amap.zero())
        self.assertNotEqual(amap.of_word(p.word('a')), amap.zero())
        self.assertEqual(amap.of_word(p.word('a b a')), amap.of_word(p.word('b')))


class ToddCoxeterTest(SimpleTestCase):

    def test_poincare_group_has_order_120(self):
        g = group(POINCARE, max_cosets=1000)
        self.assertEqual(g.order, 120)
        self.assertEqual(g.check_axioms(), [])

    def test_cyclic_group(self):
        g = group(Z3)
        self.assertEqual(g.order, 3)
        a = g.generator_images[0]
        self.assertEqual(g.element_names, ('1', 'a', 'a^2'))
        self.assertEqual(g.multiply(a, a), g.element_by_name('a^2'))
        self.assertEqual(g.check_axioms(), [])

    def test_free_group_hits_limit(self):
        with self.assertRaises(CosetLimitExceeded):
            todd_coxeter(parse_presentation('gens: a\n'), 100)

    def test_limit_below_order(self):
        with self.assertRaises(CosetLimitExceeded) as ctx:
            todd_coxeter(parse_presentation('gens: a\nrel: a^7\n'), 5)
        self.assertEqual(ctx.exception.limit, 5)

    def test_order_matches_sympy_fp_group(self):
        for text in (Z6, KLEIN, POINCARE, 'gens: a b; rel: a^3; rel: b^2; rel: a b a b'):
            p = parse_presentation(text)
            self.assertEqual(group(text).order, fp_group(p).order())

    def test_deterministic(self):
        first, second = group(POINCARE), group(POINCARE)
        self.assertEqual(first.mul, second.mul)
        self.assertEqual(first.element_names, second.element_names)

    @override_settings(NOVK_MAX_COSETS=50)
    def test_default_limit_from_settings(self):
        with self.assertRaises(CosetLimitExceeded) as ctx:
            todd_coxeter(parse_presentation('gens: a b\n'))
        self.assertEqual(ctx.exception.limit, 50)

    def test_trivial_group(self):
        g = group('gens: a b; rel: a; rel: b')
        self.assertEqual(g.order, 1)

    def test_permutation_closure_oracle(self):
        g = group(POINCARE)
        # permutações à direita induzidas pelos geradores geram um grupo de 120 elementos
        perms = [tuple(g.mul[x][s] for x in range(g.order)) for s in g.generator_images]
        seen = {tuple(range(g.order))}
        frontier = list(seen)
        while frontier:
            nxt = []
            for p in frontier:
                for q in perms:
                    r = tuple(q[p[x]] for x in range(g.order))
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        self.assertEqual(len(seen), 120)


class TableQueriesTest(SimpleTestCase):

    def test_is_cyclic(self):
        self.assertTrue(is_cyclic(group(Z6)))
        self.assertFalse(is_cyclic(group(KLEIN)))
        self.assertFalse(is_cyclic(group(POINCARE)))

    def test_min_generators(self):
        self.assertEqual(min_generators(group(KLEIN), 3), 2)
        self.assertEqual(min_generators(group(Z6), 3), 1)
        self.assertEqual(min_generators(group(POINCARE), 3), 2)
        self.assertEqual(min_generators(group('gens: a; rel: a'), 3), 0)

    def test_min_generators_sentinel(self):
        self.assertEqual(min_generators(group(KLEIN), 1), 2)

    def test_is_cyclic_agrees_with_one_generator(self):
        for text in (Z2, Z3, Z6, KLEIN, POINCARE, 'gens: a b; rel: a^2; rel: b^3; rel: a b a^-1 b^-1'):
            g = group(text)
            self.assertEqual(is_cyclic(g), min_generators(g, 1) == 1)

    @override_settings(NOVK_MIN_GENERATORS_BUDGET=100)
    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            min_generators(group(POINCARE), 2)

    def test_evaluate_and_orders(self):
        g = group(POINCARE)
        p = g.presentation
        a, b = g.generator_images
        self.assertEqual(g.element_order(a), 10)
        self.assertEqual(g.element_order(b), 6)
        self.assertEqual(g.evaluate(p.word('a^5')), g.evaluate(p.word('b^3')))
        self.assertEqual(g.power(a, -1), g.inverse(a))

    def test_abelianization_map_is_homomorphism(self):
        g = group('gens: a b; rel: a^2; rel: b^2; rel: a b a^-1 b^-1')
        amap = abelianization_map(g)
        for x in range(g.order):
            for y in range(g.order):
                self.assertEqual(amap.of_element(g.multiply(x, y)), amap.add(amap.of_element(x), amap.of_element(y)))
