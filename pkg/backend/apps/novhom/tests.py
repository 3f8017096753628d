import random

from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st
from sympy import factorint

from apps.fpgroup.abelian import AbelianGroup, abelianization
from apps.fpgroup.matrices import IntMatrix
from apps.fpgroup.presentation import parse_presentation
from apps.fpgroup.tables import abelianization_map
from apps.fpgroup.todd_coxeter import todd_coxeter
from apps.freeprod.product import ProductWord, Window, pw_inv, pw_mul, pw_reduce, pw_shift

from .complexes import ChainComplex, homology, homology_groups, presentation_complex
from .exceptions import (
    ChainComplexError,
    DegreeOutOfRange,
    HypothesisViolation,
    InvalidSystem,
    OutOfScope,
    WindowTooShort,
)
from .hurewicz import (
    AbelianSystemWindow,
    hurewicz_family_sum,
    hurewicz_map_word,
    ml_check,
    pro_abelian_groups,
    pro_abelianize,
    same_lattice,
)
from .novikov import NovikovModule, hn_connected_sum, novikov_inequality_bounds, tensor_novikov

RP4 = {'dims': [1, 1, 1, 1, 1], 'boundaries': [[[0]], [[2]], [[0]], [[2]]]}
POINCARE_TEXT = 'gens: a b\nrel: a^5 b^-3\nrel: a^5 (a b)^-2\n'
Z2 = todd_coxeter(parse_presentation('gens: a; rel: a^2'))
KLEIN = todd_coxeter(parse_presentation('gens: a b; rel: a^2; rel: b^2; rel: a b a^-1 b^-1'))
POINCARE = todd_coxeter(parse_presentation(POINCARE_TEXT), 2000)


def system(groups, maps, lo=0):
    return AbelianSystemWindow.from_dict({'lo': lo, 'groups': groups, 'maps': maps})


class RandomComplex:
    """
    Complexo com homologia conhecida: pares de base (fonte em C_k, alvo em
    C_{k-1}) com multiplicador d, embaralhados por mudanças de base unimodulares.
    """

    def __init__(self, rng, dims):
        self.dims = dims
        top = len(dims) - 1
        targets = [set() for _ in dims]
        sources = [set() for _ in dims]
        self.expected_torsion = [[] for _ in dims]
        diag = [[[0] * dims[k] for _ in range(dims[k - 1])] for k in range(1, top + 1)]
        for k in range(top, 0, -1):
            free_sources = [j for j in range(dims[k]) if j not in targets[k]]
            free_targets = list(range(dims[k - 1]))
            rng.shuffle(free_sources)
            rng.shuffle(free_targets)
            for s, t in zip(free_sources, free_targets):
                if rng.random() < 0.6:
                    d = rng.choice((1, 2, 3, 4, 6))
                    diag[k - 1][t][s] = d
                    sources[k].add(s)
                    targets[k - 1].add(t)
                    if d > 1:
                        self.expected_torsion[k - 1].append(d)
        self.expected_rank = [dims[k] - len(sources[k]) - len(targets[k]) for k in range(len(dims))]

        bases = [self.unimodular(rng, n) for n in dims]
        self.boundaries = []
        for k in range(1, top + 1):
            P, _ = bases[k - 1]
            _, Q_inv = bases[k]
            D = IntMatrix.from_rows(diag[k - 1], cols=dims[k]) if dims[k - 1] else IntMatrix.zeros(0, dims[k])
            self.boundaries.append(P @ D @ Q_inv)

    @staticmethod
    def unimodular(rng, n):
        M, M_inv = IntMatrix.identity(n), IntMatrix.identity(n)
        for _ in range(3 * n):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                continue
            k = rng.choice((-2, -1, 1, 2))
            E = [[int(r == c) for c in range(n)] for r in range(n)]
            E_inv = [row[:] for row in E]
            E[i][j], E_inv[i][j] = k, -k
            M = M @ IntMatrix.from_rows(E)
            M_inv = IntMatrix.from_rows(E_inv) @ M_inv
        return M, M_inv


def invariant_factors(orders):
    """Torção em ordem de divisibilidade a partir de uma soma de cíclicos."""
    primes = {}
    for n in orders:
        for p, e in factorint(n).items():
            primes.setdefault(p, []).append(p ** e)
    width = max((len(v) for v in primes.values()), default=0)
    factors = [1] * width
    for powers in primes.values():
        powers.sort(reverse=True)
        for i, q in enumerate(powers):
            factors[width - 1 - i] *= q
    return tuple(f for f in factors if f > 1)


class HomologyTest(SimpleTestCase):

    def test_rp4(self):
        c = ChainComplex.from_dict(RP4)
        self.assertEqual(homology(c, 0), AbelianGroup(1))
        self.assertEqual(homology(c, 1), AbelianGroup(0, (2,)))
        self.assertEqual(homology(c, 2), AbelianGroup(0))
        self.assertEqual(homology(c, 3), AbelianGroup(0, (2,)))
        self.assertEqual(homology(c, 4), AbelianGroup(0))

    def test_circle_and_point(self):
        circle = ChainComplex.from_dict({'dims': [1, 1], 'boundaries': [[[0]]]})
        self.assertEqual(homology_groups(circle), [AbelianGroup(1), AbelianGroup(1)])
        point = ChainComplex.from_dict({'dims': [1]})
        self.assertEqual(homology(point, 0), AbelianGroup(1))

    def test_degree_out_of_range(self):
        with self.assertRaises(DegreeOutOfRange):
            homology(ChainComplex.from_dict({'dims': [1]}), 1)

    def test_rejects_nonzero_square(self):
        with self.assertRaises(ChainComplexError) as ctx:
            ChainComplex.from_dict({'dims': [1, 1, 1], 'boundaries': [[[1]], [[1]]]})
        self.assertEqual(ctx.exception.degree, 2)

    def test_rejects_bad_shape(self):
        with self.assertRaises(ChainComplexError) as ctx:
            ChainComplex.from_dict({'dims': [1, 2], 'boundaries': [[[0]]]})
        self.assertEqual(ctx.exception.degree, 1)
        with self.assertRaises(ChainComplexError):
            ChainComplex.from_json('{"dims": [1, 1], "boundaries": [')

    def test_json_roundtrip(self):
        c = ChainComplex.from_dict(RP4)
        self.assertEqual(ChainComplex.from_dict(c.to_dict()), c)

    def test_presentation_complex(self):
        for text in (POINCARE_TEXT, 'gens: a; rel: a^2', 'gens: a b; rel: a b a^-1 b^-1', 'gens: a b'):
            p = parse_presentation(text)
            with self.subTest(text=text):
                self.assertEqual(homology(presentation_complex(p), 1), abelianization(p))

    def test_against_constructed_complexes(self):
        rng = random.Random(17)
        for _ in range(60):
            dims = [rng.randint(0, 3) for _ in range(rng.randint(1, 4))]
            if sum(dims) > 8:
                continue
            built = RandomComplex(rng, dims)
            c = ChainComplex(tuple(dims), tuple(built.boundaries))
            for i in range(len(dims)):
                expected = AbelianGroup(built.expected_rank[i], invariant_factors(built.expected_torsion[i]))
                self.assertEqual(homology(c, i), expected, (dims, c.to_dict(), i))


class NovikovTest(SimpleTestCase):

    def test_tensor(self):
        self.assertEqual(tensor_novikov(AbelianGroup(0, (2,))), NovikovModule(0, (2,)))
        self.assertEqual(str(NovikovModule(0, (2,))), 'Z/2((t))')
        self.assertEqual(str(tensor_novikov(AbelianGroup(3))), 'Z((t))^3')
        self.assertTrue(tensor_novikov(AbelianGroup(0)).is_zero)
        self.assertEqual(str(NovikovModule()), '0')
        self.assertEqual(str(NovikovModule(1, (2, 4))), 'Z((t)) ⊕ Z/2((t)) ⊕ Z/4((t))')

    def test_rp4_connected_sum(self):
        c = ChainComplex.from_dict(RP4)
        self.assertEqual(hn_connected_sum(c, 1, 4), NovikovModule(0, (2,)))
        self.assertTrue(hn_connected_sum(c, 2, 4).is_zero)
        self.assertTrue(hn_connected_sum(c, 0, 4).is_zero)

    def test_perfect_fundamental_group(self):
        p = parse_presentation(POINCARE_TEXT)
        c = presentation_complex(p)
        self.assertTrue(hn_connected_sum(c, 1, 6).is_zero)
        self.assertTrue(hn_connected_sum(c, 2, 6).is_zero)

    def test_degrees_above_the_complex_vanish(self):
        circle = ChainComplex.from_dict({'dims': [1, 1], 'boundaries': [[[0]]]})
        self.assertEqual(hn_connected_sum(circle, 1, 4), NovikovModule(1))
        self.assertTrue(hn_connected_sum(circle, 2, 4).is_zero)
        point = ChainComplex.from_dict({'dims': [1], 'boundaries': []})
        self.assertTrue(hn_connected_sum(point, 1, 4).is_zero)
        self.assertTrue(hn_connected_sum(point, 2, 5).is_zero)

    def test_hypotheses(self):
        c = ChainComplex.from_dict(RP4)
        with self.assertRaises(HypothesisViolation):
            hn_connected_sum(c, 1, 3)
        with self.assertRaises(OutOfScope):
            hn_connected_sum(c, 3, 5)

    def test_inequality_bounds(self):
        rp4 = [NovikovModule(), NovikovModule(0, (2,)), NovikovModule()]
        self.assertEqual(novikov_inequality_bounds(rp4), [0, 1, 1])
        self.assertEqual(novikov_inequality_bounds([NovikovModule()] * 3), [0, 0, 0])
        self.assertEqual(novikov_inequality_bounds([NovikovModule(2), NovikovModule(1, (3,))]), [2, 2])


class HurewiczTest(SimpleTestCase):

    def setUp(self):
        self.amap_z2 = abelianization_map(Z2)
        self.amap_klein = abelianization_map(KLEIN)

    def test_z2_example(self):
        a = Z2.generator_images[0]
        x = pw_reduce(Z2, [(0, a), (1, a), (0, a)])
        family = hurewicz_map_word(x, self.amap_z2, Window(0, 2))
        self.assertEqual(family.at(0), (0,))
        self.assertEqual(family.at(1), (1,))
        self.assertEqual(family.at(2), (0,))

    def test_empty_and_perfect(self):
        self.assertTrue(hurewicz_map_word(ProductWord(Z2), self.amap_z2, Window(0, 3)).is_zero)
        amap = abelianization_map(POINCARE)
        x = pw_reduce(POINCARE, [(0, 1), (1, 2), (0, 3)])
        self.assertTrue(hurewicz_map_word(x, amap, Window(0, 1)).is_zero)

    def test_letters_below_window_dropped(self):
        a = Z2.generator_images[0]
        family = hurewicz_map_word(pw_reduce(Z2, [(-1, a), (0, a)]), self.amap_z2, Window(0, 0))
        self.assertEqual(family.at(0), (1,))
        with self.assertRaises(ValueError):
            hurewicz_map_word(pw_reduce(Z2, [(5, a)]), self.amap_z2, Window(0, 1))

    def random_word(self, rng, group):
        return pw_reduce(group, [(rng.randint(0, 2), rng.randrange(group.order)) for _ in range(rng.randint(0, 6))])

    def test_homomorphism_and_commutators(self):
        rng = random.Random(23)
        window = Window(0, 2)
        amap = self.amap_klein
        for _ in range(500):
            x, y = self.random_word(rng, KLEIN), self.random_word(rng, KLEIN)
            expected = hurewicz_family_sum(
                [hurewicz_map_word(x, amap, window), hurewicz_map_word(y, amap, window)], amap
            )
            self.assertEqual(hurewicz_map_word(pw_mul(x, y), amap, window), expected)
        for _ in range(200):
            x, y = self.random_word(rng, KLEIN), self.random_word(rng, KLEIN)
            commutator = pw_mul(pw_mul(x, y), pw_mul(pw_inv(x), pw_inv(y)))
            self.assertTrue(hurewicz_map_word(commutator, amap, window).is_zero)

    def test_shift_naturality(self):
        rng = random.Random(29)
        for _ in range(100):
            x = self.random_word(rng, KLEIN)
            family = hurewicz_map_word(x, self.amap_klein, Window(0, 2))
            shifted = hurewicz_map_word(pw_shift(x, 1), self.amap_klein, Window(1, 3))
            self.assertEqual(shifted, family.shifted(1))


class ProAbelianizationTest(SimpleTestCase):

    def test_z2_window(self):
        sys = pro_abelianize(Z2, Window(0, 2))
        self.assertEqual(
            pro_abelian_groups(sys),
            [AbelianGroup(0, (2, 2, 2)), AbelianGroup(0, (2, 2)), AbelianGroup(0, (2,))],
        )
        self.assertTrue(ml_check(sys, 1).stable)

    def test_perfect_group(self):
        sys = pro_abelianize(POINCARE, Window(0, 3))
        self.assertTrue(all(g.is_trivial for g in pro_abelian_groups(sys)))

    def test_single_level(self):
        sys = pro_abelianize(KLEIN, Window(4, 4))
        self.assertEqual(pro_abelian_groups(sys), [AbelianGroup(0, (2, 2))])
        with self.assertRaises(WindowTooShort):
            ml_check(sys, 1)

    def test_matches_novikov_coefficients(self):
        rp4 = ChainComplex.from_dict(RP4)
        module = hn_connected_sum(rp4, 1, 4)
        sys = pro_abelianize(Z2, Window(0, 3))
        for j, group in enumerate(pro_abelian_groups(sys)):
            self.assertEqual(group, AbelianGroup(0, module.torsion * (len(sys) - j)))

        poincare = presentation_complex(parse_presentation(POINCARE_TEXT))
        self.assertTrue(hn_connected_sum(poincare, 1, 6).is_zero)
        self.assertTrue(all(g.is_trivial for g in pro_abelian_groups(pro_abelianize(POINCARE, Window(0, 2)))))

    def test_json_roundtrip(self):
        sys = pro_abelianize(KLEIN, Window(0, 2))
        self.assertEqual(AbelianSystemWindow.from_dict(sys.to_dict()), sys)


class MittagLefflerTest(SimpleTestCase):

    def test_identity_system(self):
        sys = system([{'gens': 1}] * 3, [[[1]], [[1]]])
        self.assertTrue(ml_check(sys, 1).stable)

    def test_doubling_system(self):
        sys = system([{'gens': 1}] * 4, [[[2]]] * 3)
        verdict = ml_check(sys, 1)
        self.assertFalse(verdict.stable)
        self.assertEqual(verdict.levels[-1].unstable_sources, (0, 1))
        self.assertIn('window-relative', verdict.render())
        self.assertTrue(verdict.to_dict()['window_relative'])

    def test_finite_system_stabilizes(self):
        # Z/4 → Z/4 por multiplicação por 2: imagens 2Z/4 e depois 0
        sys = system([[[4]]] * 4, [[[2]]] * 3)
        self.assertFalse(ml_check(sys, 1).stable)
        self.assertTrue(ml_check(sys, 2).stable)

    def test_invalid_systems(self):
        with self.assertRaises(InvalidSystem):
            system([[[2]], {'gens': 1}], [[[1]]])
        with self.assertRaises(InvalidSystem):
            system([{'gens': 1}, {'gens': 2}], [[[1]]])
        with self.assertRaises(WindowTooShort):
            ml_check(system([{'gens': 1}] * 2, [[[1]]]), 2)

    @hsettings(max_examples=40, deadline=None)
    @given(st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=2), min_size=0, max_size=3))
    def test_lattice_equality_under_row_operations(self, rows):
        A = IntMatrix.from_rows(rows, cols=2)
        moved = [r[:] for r in rows]
        if len(moved) >= 2:
            moved[0] = [a + 3 * b for a, b in zip(moved[0], moved[1])]
            moved.reverse()
        self.assertTrue(same_lattice(A, IntMatrix.from_rows(moved, cols=2)))
