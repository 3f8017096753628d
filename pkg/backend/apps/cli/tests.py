import json
import random
from pathlib import Path

from django.test import SimpleTestCase, TestCase, override_settings

from apps.fpgroup.abelian import AbelianGroup, abelianization
from apps.fpgroup.presentation import parse_presentation
from apps.fpgroup.todd_coxeter import todd_coxeter
from apps.freeprod.literal import parse_product_word, render_product_word
from apps.freeprod.product import pw_mul, pw_reduce
from apps.laurent import Integers, lau_arith, parse_series
from apps.dtc.words import parse_dtc_word

from .dispatch import cmd_dispatch
from .models import CommandRun
from .report import build_report

EXEMPLOS = Path(__file__).resolve().parent / 'exemplos'
POINCARE = str(EXEMPLOS / 'poincare.pres')
Z2 = str(EXEMPLOS / 'z2.pres')
KLEIN = str(EXEMPLOS / 'klein.pres')
RP4 = str(EXEMPLOS / 'rp4.json')
POINCARE_X = str(EXEMPLOS / 'poincare_x.json')


def run(*argv):
    return cmd_dispatch(list(argv))


def shape(value):
    if isinstance(value, dict):
        return {k: shape(v) for k, v in value.items()}
    if isinstance(value, list):
        return 'list'
    return type(value).__name__


class CliExamplesTest(SimpleTestCase):

    def test_abelianize_poincare(self):
        result = run('group', 'abelianize', '-f', POINCARE)
        self.assertEqual(result.status, 0, result.stderr)
        self.assertEqual(result.stdout.strip(), 'rank 0, torsion []')

    def test_mu_bounds_poincare(self):
        result = run('dtc', 'mu-bounds', '-f', POINCARE)
        self.assertEqual(result.status, 0, result.stderr)
        lines = result.stdout.strip().splitlines()
        self.assertEqual(lines[0], 'mu_DTC in [2, 2]')
        self.assertIn('not cyclic', result.stdout)
        self.assertIn('Prop. noncyclic', lines[1])

    def test_zip(self):
        result = run('word', 'zip', '--at', '1', '[0:a][1:b][0:a]', '-f', KLEIN)
        self.assertEqual(result.status, 0, result.stderr)
        self.assertEqual(result.stdout.strip(), '[1:b]')

    def test_group_queries(self):
        self.assertEqual(run('group', 'enumerate', '-f', POINCARE).stdout.strip(), 'order 120')
        self.assertEqual(run('group', 'is-cyclic', '-f', POINCARE).stdout.strip(), 'not cyclic')
        self.assertEqual(run('group', 'is-cyclic', '-f', Z2).stdout.strip(), 'cyclic')
        self.assertEqual(run('group', 'dim-hom', '-f', POINCARE).stdout.strip(), '0')
        self.assertEqual(run('group', 'min-gens', '-f', KLEIN).stdout.strip(), '2')
        self.assertEqual(run('group', 'min-gens', '-f', KLEIN, '--cap', '1').stdout.strip(), '> 1')

    def test_word_operations(self):
        self.assertEqual(run('word', 'height', '[0:a][2:b]', '-f', KLEIN).stdout.strip(), '2')
        self.assertEqual(run('word', 'height', '1', '-f', KLEIN).stdout.strip(), 'bottom')
        self.assertEqual(run('word', 'shift', '[0:a][1:b]', '--by', '2', '-f', KLEIN).stdout.strip(), '[2:a][3:b]')
        self.assertEqual(run('word', 'inv', '[0:a][1:b]', '-f', KLEIN).stdout.strip(), '[1:b][0:a]')
        self.assertEqual(run('word', 'power', '[0:a]', '--exp', '2', '-f', Z2).stdout.strip(), '1')
        self.assertEqual(run('word', 'mul', '[0:a]', '[0:a][1:a]', '-f', Z2).stdout.strip(), '[1:a]')
        result = run('word', 'cyclic-reduce', '[1:a][0:a][1:a]', '-f', Z2)
        self.assertEqual(result.stdout.strip().splitlines(), ['conjugator [1:a]', 'core [0:a]'])

    def test_rho_bounds_and_matrix(self):
        self.assertEqual(run('dtc', 'rho-bounds', '-f', POINCARE).stdout.splitlines()[0], 'rho_DTC in [2, 2]')
        result = run('dtc', 'rho-matrix', '-f', POINCARE)
        self.assertEqual(result.status, 0, result.stderr)
        self.assertEqual(result.stdout.strip().splitlines()[-1], 'rank 2')
        self.assertEqual(run('dtc', 'l-dim', '-f', POINCARE).stdout.strip(), '0')
        self.assertEqual(run('dtc', 'l-dim', '--rel', '{0:g^1}{1:g^-1}').stdout.strip(), '0')
        self.assertEqual(run('dtc', 'l-dim', '--rel', '{0:g^1}{0:h^-1}').stdout.strip(), '1')

    def test_dtc_eval_and_span(self):
        result = run('dtc', 'eval', '{0:g^1}{1:g^1}', '--gen', 'g=[0:a]', '-f', Z2)
        self.assertEqual(result.stdout.strip(), '[0:a][1:a]')
        result = run('dtc', 'span-member', '[0:a][1:a]', '--gen', 'g=[0:a]', '-f', Z2,
                     '--window', '0:2', '--max-len', '2')
        self.assertEqual(result.status, 0, result.stderr)
        self.assertTrue(result.stdout.startswith('member, witness '))

    def test_refute_single(self):
        result = run('dtc', 'refute-single', '-f', KLEIN, '--window', '0:1', '--max-len', '3')
        self.assertEqual(result.status, 0, result.stderr)
        self.assertIn('no survivors', result.stdout)
        queued = run('dtc', 'refute-single', '-f', Z2, '--window', '0:1', '--max-len', '2', '--queue', '--json')
        self.assertEqual(queued.status, 0, queued.stderr)
        self.assertIn('[0:a]', json.loads(queued.stdout)['survivors'])

    def test_novikov(self):
        result = run('novikov', 'homology', '--complex', RP4)
        self.assertEqual(result.stdout.strip().splitlines()[:3], [
            'H_0 = rank 1, torsion []',
            'H_1 = rank 0, torsion [2]',
            'H_2 = rank 0, torsion []',
        ])
        self.assertEqual(
            run('novikov', 'homology', '-f', POINCARE, '--degree', '1').stdout.strip(),
            'H_1 = rank 0, torsion []',
        )
        self.assertEqual(
            run('novikov', 'hn-sum', '--complex', RP4, '--degree', '1', '--n', '4').stdout.strip(),
            'HN_1 = Z/2((t))',
        )
        self.assertEqual(
            run('novikov', 'hn-sum', '--complex', POINCARE_X, '--degree', '2', '--n', '6').stdout.strip(),
            'HN_2 = 0',
        )

    def test_laurent(self):
        result = run('novikov', 'laurent', 'invert', '1 - t', '--ring', 'Z', '--trunc', '3')
        self.assertEqual(result.stdout.strip().splitlines(), ['1 + t + t^2 + t^3', 'truncation 3'])
        result = run('novikov', 'laurent', 'truncate', '1 + t + t^2', '--to', '1')
        self.assertEqual(result.stdout.strip().splitlines()[0], '1 + t')

    def test_hurewicz(self):
        result = run('hurewicz', 'map', '[0:a][1:a][0:a]', '-f', Z2, '--window', '0:1')
        self.assertEqual(result.stdout.strip(), '0: (0) | 1: (1)')
        result = run('hurewicz', 'pro-abelianize', '-f', Z2, '--window', '0:1')
        self.assertEqual(result.stdout.strip().splitlines(), [
            'level 0: rank 0, torsion [2, 2]',
            'level 1: rank 0, torsion [2]',
        ])
        result = run('hurewicz', 'ml-check', '--system', str(EXEMPLOS / 'z4_system.json'), '--K', '1')
        self.assertEqual(result.status, 0, result.stderr)
        self.assertIn('not stable', result.stdout.splitlines()[0])
        result = run('hurewicz', 'ml-check', '-f', Z2, '--window', '0:3', '--K', '1', '--json')
        self.assertTrue(json.loads(result.stdout)['stable'])


class ExitCodeTest(SimpleTestCase):

    def test_unknown_subcommand(self):
        result = run('frobnicate')
        self.assertEqual(result.status, 2)
        self.assertIn('usage', result.stderr)

    def test_usage_errors(self):
        self.assertEqual(run().status, 2)
        self.assertEqual(run('group', 'abelianize').status, 2)
        self.assertEqual(run('hurewicz', 'map', '[0:a]', '-f', Z2, '--window', '3:1').status, 2)
        self.assertEqual(run('dtc', 'refute-single', '-f', Z2, '--max-len', '0').status, 2)

    def test_domain_errors(self):
        cases = [
            ('group', 'abelianize', '-f', str(EXEMPLOS / 'nao-existe.pres')),
            ('word', 'reduce', '[0:z]', '-f', Z2),
            ('novikov', 'laurent', 'invert', '2 - t', '--ring', 'Z'),
            ('novikov', 'hn-sum', '--complex', RP4, '--degree', '1', '--n', '3'),
            ('novikov', 'hn-sum', '--complex', RP4, '--degree', '3', '--n', '4'),
            ('hurewicz', 'ml-check', '-f', Z2, '--window', '0:0', '--K', '1'),
            ('dtc', 'eval', '{0:h^1}', '--gen', 'g=[0:a]', '-f', Z2),
            ('dtc', 'refute-single', '-f', Z2, '--window', '1:2'),
        ]
        for argv in cases:
            with self.subTest(argv=argv):
                result = run(*argv)
                self.assertEqual(result.status, 1)
                self.assertIn('CommandError', result.stderr)
                self.assertEqual(result.stdout, '')


class RoundTripTest(SimpleTestCase):

    def test_words_reparse(self):
        g = todd_coxeter(parse_presentation((EXEMPLOS / 'klein.pres').read_text()))
        rng = random.Random(21)
        for _ in range(25):
            x = pw_reduce(g, [(rng.randint(0, 2), rng.randrange(g.order)) for _ in range(rng.randint(0, 4))])
            y = pw_reduce(g, [(rng.randint(0, 2), rng.randrange(g.order)) for _ in range(rng.randint(0, 4))])
            result = run('word', 'mul', render_product_word(x), render_product_word(y), '-f', KLEIN)
            self.assertEqual(result.status, 0, result.stderr)
            self.assertEqual(parse_product_word(result.stdout.strip(), g), pw_mul(x, y))

    def test_group_reparses(self):
        result = run('group', 'abelianize', '-f', KLEIN)
        p = parse_presentation((EXEMPLOS / 'klein.pres').read_text())
        self.assertEqual(AbelianGroup.parse(result.stdout.strip()), abelianization(p))

    def test_series_reparse(self):
        result = run('novikov', 'laurent', 'mul', '1 - 2*t', 't^-1 + 3', '--trunc', '4')
        text, trunc = result.stdout.strip().splitlines()
        d = int(trunc.split()[1])
        expected = lau_arith('mul', parse_series('1 - 2*t', Integers(), 4), parse_series('t^-1 + 3', Integers(), 4))
        self.assertEqual(d, expected.truncation)
        self.assertEqual(parse_series(text, Integers(), d), expected)

    def test_witness_reparses(self):
        result = run('dtc', 'span-member', '[0:a][1:a]', '--gen', 'g=[0:a]', '-f', Z2,
                     '--window', '0:2', '--json')
        witness = json.loads(result.stdout)['witness']
        again = run('dtc', 'eval', witness, '--gen', 'g=[0:a]', '-f', Z2)
        self.assertEqual(again.stdout.strip(), '[0:a][1:a]')
        self.assertEqual(len(parse_dtc_word(witness)), 2)


class ReportTest(SimpleTestCase):

    def test_poincare(self):
        result = run('report', 'poincare')
        self.assertEqual(result.status, 0, result.stderr)
        self.assertIn(
            'every Morse 1-form in u has >= 2 index-1 and >= 2 index-2 critical points; HN_1 = HN_2 = 0',
            result.stdout,
        )

    def test_rp4(self):
        result = run('report', 'rp4')
        self.assertEqual(result.status, 0, result.stderr)
        self.assertIn('mu_DTC = 1, rho_DTC = 1; HN_1 = Z/2((t)), HN_2 = 0', result.stdout)

    def test_pipeline_numbers(self):
        poincare = build_report('poincare').to_dict()
        self.assertEqual(poincare['group']['order'], 120)
        self.assertEqual(poincare['group']['abelianization'], 'rank 0, torsion []')
        self.assertFalse(poincare['group']['cyclic'])
        self.assertEqual((poincare['mu_dtc']['lower'], poincare['mu_dtc']['upper']), (2, 2))
        self.assertEqual((poincare['rho_dtc']['lower'], poincare['rho_dtc']['upper']), (2, 2))
        self.assertEqual(poincare['novikov_inequalities'], [0, 0, 0])
        self.assertTrue(poincare['hurewicz']['mittag_leffler']['stable'])

        rp4 = build_report('rp4').to_dict()
        self.assertEqual(rp4['novikov']['HN_1']['text'], 'Z/2((t))')
        self.assertEqual(rp4['novikov']['HN_2']['text'], '0')
        self.assertEqual(rp4['critical_points'], {'index_1': 1, 'index_2': 1})
        self.assertEqual(rp4['novikov_inequalities'], [0, 1, 1])
        self.assertTrue(rp4['hurewicz']['top_level_matches_abelianization'])
        self.assertTrue(rp4['hurewicz']['hn1_matches_abelianization'])

    def test_json_schema_is_stable(self):
        golden = json.loads((EXEMPLOS / 'report_schema.json').read_text(encoding='utf-8'))
        for case in ('poincare', 'rp4'):
            with self.subTest(case=case):
                result = run('report', case, '--json')
                self.assertEqual(result.status, 0, result.stderr)
                self.assertEqual(shape(json.loads(result.stdout)), golden)

    def test_deterministic(self):
        first = run('report', 'poincare', '--json')
        second = run('report', 'poincare', '--json')
        self.assertEqual(first.stdout, second.stdout)

    def test_queue_matches_inline(self):
        queued = run('report', 'rp4', '--queue', '--json')
        inline = run('report', 'rp4', '--json')
        self.assertEqual(queued.status, 0, queued.stderr)
        self.assertEqual(json.loads(queued.stdout), json.loads(inline.stdout))


@override_settings(NOVK_RECORD_RUNS=True)
class CommandRunTest(TestCase):

    def test_success_is_recorded(self):
        run('group', 'abelianize', '-f', Z2)
        execucao = CommandRun.objects.get()
        self.assertEqual(execucao.subcomando, 'group abelianize')
        self.assertEqual(execucao.status, 'sucesso')
        self.assertEqual(execucao.codigo_saida, 0)
        self.assertEqual(execucao.resultado['torsion'], [2])
        self.assertIsNotNone(execucao.duracao_segundos)

    def test_error_is_recorded(self):
        run('novikov', 'hn-sum', '--complex', RP4, '--degree', '1', '--n', '2')
        execucao = CommandRun.objects.get()
        self.assertEqual(execucao.subcomando, 'novikov hn-sum')
        self.assertEqual(execucao.status, 'erro')
        self.assertEqual(execucao.codigo_saida, 1)
        self.assertIn('n ≥ 4', execucao.mensagem)

    def test_usage_errors_are_not_recorded(self):
        run('group', 'abelianize')
        self.assertFalse(CommandRun.objects.exists())

    def test_model_imports_under_installed_label(self):
        self.assertEqual(__name__, 'apps.cli.tests')
        self.assertEqual(CommandRun.__module__, 'apps.cli.models')
        self.assertEqual(CommandRun._meta.app_label, 'cli')
