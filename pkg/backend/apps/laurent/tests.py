import math
import random
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from apps.core.exceptions import LiteralSyntaxError

from .exceptions import DivisionByZero, NonUnitLeadingTerm, RingMismatch, TruncationIncrease
from .literal import parse_series, render_series
from .rings import Integers, IntegersMod, Rationals, ring_from_label
from .series import LaurentSeries, lau_arith, lau_invert, lau_truncate, lau_valuation

ZZ = Integers()
QQ = Rationals()


def S(text, truncation, ring=ZZ):
    return parse_series(text, ring, truncation)


@st.composite
def series(draw, ring=ZZ, low=-5, high=5, nonzero=False):
    valuation = draw(st.integers(low, high))
    truncation = draw(st.integers(valuation, high))
    size = truncation - valuation + 1
    coefs = draw(st.lists(st.integers(-6, 6), min_size=1 if nonzero else 0, max_size=size))
    if nonzero:
        coefs[0] = coefs[0] or 1
    return LaurentSeries(ring, valuation, tuple(coefs), truncation)


rings = st.sampled_from([ZZ, QQ, IntegersMod(2), IntegersMod(6)])


class RingTest(SimpleTestCase):

    def test_integers_mod_requires_n_at_least_two(self):
        with self.assertRaises(ValueError):
            IntegersMod(1)

    def test_ring_labels(self):
        self.assertEqual(ring_from_label('Z'), ZZ)
        self.assertEqual(ring_from_label('q'), QQ)
        self.assertEqual(ring_from_label('Z/2'), IntegersMod(2))
        with self.assertRaises(ValueError):
            ring_from_label('R')

    def test_units(self):
        self.assertTrue(ZZ.is_unit(-1))
        self.assertFalse(ZZ.is_unit(2))
        self.assertTrue(QQ.is_unit(Fraction(2, 3)))
        self.assertTrue(IntegersMod(6).is_unit(5))
        self.assertFalse(IntegersMod(6).is_unit(3))


class TruncateTest(SimpleTestCase):

    def test_drops_high_terms(self):
        self.assertEqual(lau_truncate(S('1 + t + t^2', 2), 1), S('1 + t', 1))

    def test_negative_valuation(self):
        self.assertEqual(lau_truncate(S('t^-1 + 2*t^3', 3), 0), S('t^-1', 0))

    def test_zero(self):
        result = lau_truncate(LaurentSeries.zero(ZZ, 5), -3)
        self.assertTrue(result.is_zero)
        self.assertEqual(result.truncation, -3)

    def test_cannot_increase(self):
        with self.assertRaises(TruncationIncrease):
            lau_truncate(S('1 + t', 2), 3)

    def test_canonical_form_strips_zeros(self):
        x = LaurentSeries(ZZ, -2, (0, 0, 4, 0, 0), 5)
        self.assertEqual(x.valuation, 0)
        self.assertEqual(x.coefficients, (4,))

    @given(series(), st.data())
    def test_truncation_is_functorial(self, x, data):
        middle = data.draw(st.integers(-8, x.truncation))
        final = data.draw(st.integers(-10, middle))
        self.assertEqual(lau_truncate(lau_truncate(x, middle), final), lau_truncate(x, final))


class ArithTest(SimpleTestCase):

    def test_telescoping_product(self):
        product = lau_arith('mul', S('1 - t', 4), S('1 + t + t^2 + t^3 + t^4', 4))
        self.assertEqual(product, LaurentSeries.one(ZZ, 4))

    def test_cancellation_renormalizes_valuation(self):
        total = lau_arith('add', S('t^-1', 2), S('-t^-1 + t', 2))
        self.assertEqual(total, S('t', 2))
        self.assertEqual(total.valuation, 1)

    def test_product_truncation_rule(self):
        product = lau_arith('mul', S('2*t', 3), S('3*t^2', 5))
        self.assertEqual(product.truncation, 5)
        self.assertEqual(product, S('6*t^3', 5))

    def test_sub_and_neg(self):
        self.assertEqual(lau_arith('sub', S('1 + t', 3), S('t', 2)), S('1', 2))
        self.assertEqual(lau_arith('neg', S('1 - t', 3)), S('-1 + t', 3))

    def test_ring_mismatch(self):
        with self.assertRaises(RingMismatch):
            lau_arith('add', S('1', 2), S('1', 2, QQ))

    def test_unknown_operation(self):
        with self.assertRaises(ValueError):
            lau_arith('div', S('1', 2), S('1', 2))

    def test_mod_two_coefficients(self):
        z2 = IntegersMod(2)
        self.assertEqual(S('1 + t', 3, z2) * S('1 + t', 3, z2), S('1 + t^2', 3, z2))

    @given(rings.flatmap(lambda r: st.tuples(series(r), series(r), series(r))))
    @hsettings(max_examples=150)
    def test_ring_laws_at_common_truncation(self, triple):
        x, y, z = triple
        self.assertEqual((x + y) + z, x + (y + z))

        def agree(a, b):
            d = min(a.truncation, b.truncation)
            self.assertEqual(lau_truncate(a, d), lau_truncate(b, d))

        agree((x * y) * z, x * (y * z))
        agree(x * (y + z), x * y + x * z)
        agree(x * y, y * x)

    @given(series(nonzero=True), series(nonzero=True), st.data())
    @hsettings(max_examples=150)
    def test_product_ignores_discarded_coefficients(self, x, y, data):
        product = x * y
        d = data.draw(st.integers(-12, product.truncation))
        x_known = d - lau_valuation(y)
        y_known = d - lau_valuation(x)

        def mutate(s, known):
            # acima da valuação, para não mudar ν(s) nem o truncamento do produto
            kept = min(max(known, lau_valuation(s)), s.truncation)
            terms = lau_truncate(s, kept).terms()
            for e in range(kept + 1, s.truncation + 1):
                terms[e] = data.draw(st.integers(-6, 6))
            return LaurentSeries.from_terms(s.ring, terms, s.truncation)

        mutated = mutate(x, x_known) * mutate(y, y_known)
        self.assertEqual(lau_truncate(mutated, d), lau_truncate(product, d))

    def test_product_truncation_follows_valuations(self):
        x, y = S('t^-1', 0), S('t^5', 5)
        self.assertEqual((x * y).truncation, 4)
        changed = S('t^-1 + 3', 0) * y
        self.assertEqual(changed.truncation, 4)
        self.assertEqual(lau_truncate(changed, -1), lau_truncate(x * y, -1))
        self.assertEqual(lau_truncate(changed, 4), lau_truncate(x * y, 4))


class InvertTest(SimpleTestCase):

    def test_geometric_series(self):
        self.assertEqual(lau_invert(S('1 - t', 3)), S('1 + t + t^2 + t^3', 3))

    def test_monomial(self):
        inverse = lau_invert(S('t', 3))
        self.assertEqual(render_series(inverse), 't^-1')
        self.assertEqual(inverse.valuation, -1)
        self.assertEqual(inverse.truncation, 1)

    def test_non_unit_over_integers(self):
        with self.assertRaises(NonUnitLeadingTerm):
            lau_invert(S('2 - t', 3))

    def test_same_series_invertible_over_rationals(self):
        inverse = lau_invert(S('2 - t', 3, QQ))
        self.assertEqual(inverse.coefficient(0), Fraction(1, 2))
        self.assertEqual(inverse.coefficient(1), Fraction(1, 4))

    def test_zero(self):
        with self.assertRaises(DivisionByZero):
            lau_invert(LaurentSeries.zero(QQ, 3))

    def test_random_unit_leading_series(self):
        rng = random.Random(20240611)
        for ring in (QQ, ZZ):
            for _ in range(200):
                valuation = rng.randint(-4, 4)
                truncation = rng.randint(valuation, valuation + 6)
                if ring == ZZ:
                    lead = rng.choice([1, -1])
                else:
                    lead = Fraction(rng.choice([-5, -3, -1, 1, 2, 7]), rng.randint(1, 4))
                tail = [rng.randint(-5, 5) for _ in range(truncation - valuation)]
                x = LaurentSeries(ring, valuation, (lead, *tail), truncation)

                inverse = lau_invert(x)
                self.assertEqual(inverse.valuation, -valuation)
                self.assertEqual(inverse.truncation, truncation - 2 * valuation)
                product = lau_arith('mul', x, inverse)
                self.assertEqual(product, LaurentSeries.one(ring, product.truncation))


class ValuationTest(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(lau_valuation(S('t^-2 + 5*t', 3)), -2)
        self.assertEqual(lau_valuation(S('7', 3)), 0)
        self.assertEqual(lau_valuation(LaurentSeries.zero(ZZ, 3)), math.inf)


class LiteralTest(SimpleTestCase):

    def test_parse_examples(self):
        x = S('1 - t + 3*t^2', 4)
        self.assertEqual(x.terms(), {0: 1, 1: -1, 2: 3})
        self.assertEqual(S(' t ^ -1  +  2 * t^3 ', 3).terms(), {-1: 1, 3: 2})
        self.assertEqual(S('3/2*t', 2, QQ).terms(), {1: Fraction(3, 2)})

    def test_render(self):
        self.assertEqual(render_series(S('1 - t + 3*t^2', 4)), '1 - t + 3*t^2')
        self.assertEqual(render_series(S('-t^-1', 4)), '-t^-1')
        self.assertEqual(render_series(LaurentSeries.zero(ZZ, 1)), '0')

    def test_syntax_errors(self):
        for bad in ('', '1 +', '3/2*t', 't^', 't t', 'x'):
            with self.subTest(bad=bad), self.assertRaises(LiteralSyntaxError):
                S(bad, 3)

    @given(rings.flatmap(series))
    def test_render_parse_roundtrip(self, x):
        self.assertEqual(parse_series(render_series(x), x.ring, x.truncation), x)
