import random

from django.test import SimpleTestCase

from apps.core.exceptions import LiteralSyntaxError
from apps.fpgroup.presentation import parse_presentation
from apps.fpgroup.todd_coxeter import todd_coxeter

from .exceptions import GroupMismatch
from .literal import parse_product_word, render_product_word
from .product import (
    BOTTOM,
    Letter,
    ProductWord,
    Window,
    pw_cyclic_reduce,
    pw_height,
    pw_inv,
    pw_is_single_letter,
    pw_mul,
    pw_power,
    pw_reduce,
    pw_shift,
    pw_zip,
)

Z2 = todd_coxeter(parse_presentation('gens: a; rel: a^2'))
Z3 = todd_coxeter(parse_presentation('gens: a; rel: a^3'))
KLEIN = todd_coxeter(parse_presentation('gens: a b; rel: a^2; rel: b^2; rel: a b a^-1 b^-1'))
LEVELS = (0, 1, 2)


def normal_forms(group, levels, max_len):
    """Todas as formas normais com níveis em `levels` e comprimento ≤ max_len."""
    elements = [g for g in range(group.order) if g != group.identity]
    words = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for k in levels:
                if w and w[-1].level == k:
                    continue
                for g in elements:
                    nxt.append(w + (Letter(k, g),))
        words.extend(nxt)
        frontier = nxt
    return [ProductWord(group, w) for w in words]


def random_raw(rng, group, length, levels=LEVELS):
    return [(rng.choice(levels), rng.randrange(group.order)) for _ in range(length)]


def reduce_right_to_left(group, raw):
    stack = []
    for level, element in reversed(raw):
        if element == group.identity:
            continue
        if stack and stack[-1][0] == level:
            merged = group.mul[element][stack[-1][1]]
            if merged == group.identity:
                stack.pop()
            else:
                stack[-1][1] = merged
        else:
            stack.append([level, element])
    return ProductWord(group, tuple(Letter(k, g) for k, g in reversed(stack)))


def reduce_random_order(group, raw, rng):
    letters = [list(x) for x in raw]
    while True:
        letters = [x for x in letters if x[1] != group.identity]
        pairs = [i for i in range(len(letters) - 1) if letters[i][0] == letters[i + 1][0]]
        if not pairs:
            return ProductWord(group, tuple(Letter(k, g) for k, g in letters))
        i = rng.choice(pairs)
        letters[i][1] = group.mul[letters[i][1]][letters[i + 1][1]]
        del letters[i + 1]


def W(group, *pairs):
    return pw_reduce(group, pairs)


class ReduceTest(SimpleTestCase):

    def test_examples(self):
        a = Z2.generator_images[0]
        self.assertTrue(W(Z2, (0, a), (0, a)).is_identity)
        self.assertTrue(W(Z2, (0, a), (1, a), (1, a), (0, a)).is_identity)
        self.assertEqual(W(Z2, (0, a), (2, a)).letters, ((0, a), (2, a)))

    def test_invalid_element(self):
        with self.assertRaises(IndexError):
            pw_reduce(Z2, [(0, 5)])

    def test_constructor_rejects_non_normal(self):
        a = Z2.generator_images[0]
        with self.assertRaises(ValueError):
            ProductWord(Z2, ((0, a), (0, a)))
        with self.assertRaises(ValueError):
            ProductWord(Z2, ((0, Z2.identity),))

    def test_confluence(self):
        rng = random.Random(11)
        for _ in range(1000):
            group = rng.choice([Z2, Z3, KLEIN])
            raw = random_raw(rng, group, rng.randint(0, 10))
            left = pw_reduce(group, raw)
            self.assertEqual(left, reduce_right_to_left(group, raw))
            self.assertEqual(left, reduce_random_order(group, raw, rng))


class GroupLawTest(SimpleTestCase):

    def test_same_level_merge(self):
        a = Z3.generator_images[0]
        self.assertEqual(pw_mul(W(Z3, (0, a)), W(Z3, (0, a))), W(Z3, (0, Z3.mul[a][a])))

    def test_inverse_reverses(self):
        a, b = KLEIN.generator_images
        self.assertEqual(pw_inv(W(KLEIN, (0, a), (1, b))).letters, ((1, KLEIN.inv[b]), (0, KLEIN.inv[a])))

    def test_times_inverse(self):
        rng = random.Random(3)
        for _ in range(500):
            group = rng.choice([Z2, Z3, KLEIN])
            x = pw_reduce(group, random_raw(rng, group, rng.randint(0, 8)))
            self.assertTrue(pw_mul(x, pw_inv(x)).is_identity)

    def test_group_mismatch(self):
        with self.assertRaises(GroupMismatch):
            pw_mul(W(Z2, (0, 1)), W(Z3, (0, 1)))
        self.assertNotEqual(W(Z2, (0, 1)), W(Z3, (0, 1)))

    def test_tables_from_separate_parses_agree(self):
        other = todd_coxeter(parse_presentation('gens: a\nrel: a^2\n'))
        self.assertIsNot(other, Z2)
        self.assertEqual(W(Z2, (0, 1), (1, 1)), W(other, (0, 1), (1, 1)))
        self.assertTrue(pw_mul(W(Z2, (0, 1)), W(other, (0, 1))).is_identity)


class ShiftZipTest(SimpleTestCase):

    def test_shift(self):
        a, b = KLEIN.generator_images
        x = W(KLEIN, (0, a), (1, b))
        self.assertEqual(pw_shift(x, 3), W(KLEIN, (3, a), (4, b)))
        self.assertEqual(pw_shift(x, 0), x)
        self.assertEqual(pw_shift(pw_shift(x, 2), -2), x)

    def test_zip_examples(self):
        a, b = KLEIN.generator_images
        self.assertEqual(pw_zip(W(KLEIN, (0, a), (1, b), (0, a)), 1), W(KLEIN, (1, b)))
        a = Z2.generator_images[0]
        self.assertTrue(pw_zip(W(Z2, (1, a), (0, a), (1, a)), 1).is_identity)
        x = W(Z2, (1, a), (2, a))
        self.assertEqual(pw_zip(x, 1), x)

    def test_zip_properties_exhaustive(self):
        for group in (Z2, Z3):
            xs = normal_forms(group, LEVELS, 4)
            ys = [y for y in xs if len(y) <= 2]
            for x in xs:
                for h in range(0, 4):
                    zx = pw_zip(x, h)
                    for y in ys:
                        self.assertEqual(pw_zip(pw_mul(x, y), h), pw_mul(zx, pw_zip(y, h)))
                    for h2 in range(h, 4):
                        self.assertEqual(pw_zip(zx, h2), pw_zip(x, h2))
                    self.assertEqual(pw_zip(pw_shift(x, 1), h + 1), pw_shift(zx, 1))


class HeightTest(SimpleTestCase):

    def test_examples(self):
        a, b = KLEIN.generator_images
        x = W(KLEIN, (0, a), (2, b))
        self.assertEqual(pw_height(x), 2)
        self.assertEqual(pw_height(ProductWord(KLEIN)), BOTTOM)
        self.assertEqual(pw_height(pw_shift(x, 5)), 7)

    def test_top_letters_cancelling_after_zip(self):
        a, b = KLEIN.generator_images
        x = W(KLEIN, (1, a), (0, b), (1, a))
        self.assertEqual(pw_height(x), 0)
        self.assertTrue(pw_zip(x, 1).is_identity)

    def test_membership_predicate_and_subadditivity(self):
        xs = normal_forms(Z2, LEVELS, 4)
        for x in xs:
            height = pw_height(x)
            for h in range(-1, 4):
                self.assertEqual(pw_zip(x, h).is_identity, h > height)
        rng = random.Random(2)
        for _ in range(300):
            x, y = rng.choice(xs), rng.choice(xs)
            self.assertLessEqual(pw_height(pw_mul(x, y)), max(pw_height(x), pw_height(y)))


class CyclicReduceTest(SimpleTestCase):

    def test_examples(self):
        a, b = KLEIN.generator_images
        conj, core = pw_cyclic_reduce(W(KLEIN, (0, a), (1, b), (0, KLEIN.inv[a])))
        self.assertEqual(conj, W(KLEIN, (0, a)))
        self.assertEqual(core, W(KLEIN, (1, b)))

        x = W(KLEIN, (0, a), (1, b))
        self.assertEqual(pw_cyclic_reduce(x), (ProductWord(KLEIN), x))

        c = Z3.generator_images[0]
        y = W(Z3, (0, c), (1, c), (0, c))
        self.assertEqual(pw_cyclic_reduce(y), (ProductWord(Z3), y))

    def test_core_nonempty(self):
        for x in normal_forms(KLEIN, LEVELS, 4):
            conj, core = pw_cyclic_reduce(x)
            self.assertEqual(core.is_identity, x.is_identity)
            self.assertEqual(pw_mul(pw_mul(conj, core), pw_inv(conj)), x)


class PowerTest(SimpleTestCase):

    def iterated(self, x, n):
        result = ProductWord(x.group)
        step = x if n >= 0 else pw_inv(x)
        for _ in range(abs(n)):
            result = pw_mul(result, step)
        return result

    def test_examples(self):
        a = Z2.generator_images[0]
        x = W(Z2, (0, a), (1, a))
        self.assertEqual(len(pw_power(x, 2)), 4)
        self.assertTrue(pw_power(x, 0).is_identity)
        self.assertTrue(pw_power(W(Z2, (0, a), (1, a), (0, a)), 2).is_identity)

    def test_torsion_counterexample(self):
        a = Z2.generator_images[0]
        x = W(Z2, (0, a), (1, a), (0, a))
        self.assertFalse(pw_is_single_letter(x))
        self.assertTrue(pw_is_single_letter(pw_power(x, 2)))
        self.assertTrue(pw_power(x, 2).is_identity)

    def test_power_lemma_and_end_letters(self):
        for group in (Z2, Z3, KLEIN):
            for x in normal_forms(group, LEVELS, 4):
                for n in [k for k in range(-6, 7) if k]:
                    power = pw_power(x, n)
                    self.assertEqual(power, self.iterated(x, n))
                    if len(power) == 1:
                        self.assertTrue(pw_is_single_letter(x), (x, n))
                    if not pw_is_single_letter(x) and not power.is_identity:
                        reference = x if n > 0 else pw_inv(x)
                        self.assertEqual(power.letters[0], reference.letters[0])
                        self.assertEqual(power.letters[-1], reference.letters[-1])

    def test_single_letter(self):
        a, b = KLEIN.generator_images
        self.assertTrue(pw_is_single_letter(ProductWord(KLEIN)))
        self.assertTrue(pw_is_single_letter(W(KLEIN, (3, b))))
        self.assertFalse(pw_is_single_letter(W(KLEIN, (0, a), (1, b))))


class WindowTest(SimpleTestCase):

    def test_parse(self):
        w = Window.parse('-1:2')
        self.assertEqual((w.lo, w.hi, len(w)), (-1, 2, 4))
        self.assertIn(0, w)
        self.assertEqual(str(w), '-1:2')
        with self.assertRaises(ValueError):
            Window.parse('3:1')
        with self.assertRaises(ValueError):
            Window.parse('0-3')


class LiteralTest(SimpleTestCase):

    def test_parse(self):
        a, b = KLEIN.generator_images
        self.assertEqual(parse_product_word('[0:a][1:b][0:a]', KLEIN), W(KLEIN, (0, a), (1, b), (0, a)))
        self.assertEqual(parse_product_word(' [0:a] [0:a^-1] ', KLEIN), ProductWord(KLEIN))
        self.assertEqual(parse_product_word('1', KLEIN), ProductWord(KLEIN))
        self.assertEqual(parse_product_word('[-2:a b]', KLEIN), W(KLEIN, (-2, KLEIN.mul[a][b])))

    def test_errors(self):
        for bad in ('[0:a', '0:a', '[x:a]', '[0:]'):
            with self.subTest(bad=bad), self.assertRaises(LiteralSyntaxError):
                parse_product_word(bad, KLEIN)

    def test_render_reparses(self):
        for x in normal_forms(KLEIN, LEVELS, 3):
            self.assertEqual(parse_product_word(render_product_word(x), KLEIN), x)
        self.assertEqual(render_product_word(ProductWord(KLEIN)), '1')
