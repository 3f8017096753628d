"""
Linha de comando da bancada.

Uso:
    python manage.py novk group abelianize -f exemplos/poincare.pres
    python manage.py novk dtc mu-bounds -f exemplos/poincare.pres --json
    python manage.py novk word zip --at 1 "[0:a][1:b][0:a]" -f g.pres
    python manage.py novk report poincare

Códigos de saída: 0 sucesso, 1 erro de domínio, 2 erro de uso.
"""
import argparse
import json
import logging
from pathlib import Path
from typing import List, Optional, Tuple

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from apps.core.exceptions import NovkError
from apps.fpgroup.abelian import abelianization, dim_hom_R
from apps.fpgroup.presentation import Presentation, parse_presentation
from apps.fpgroup.tables import FiniteGroupTable, abelianization_map, is_cyclic, min_generators
from apps.fpgroup.todd_coxeter import todd_coxeter
from apps.freeprod.literal import parse_product_word, render_product_word
from apps.freeprod.product import (
    BOTTOM,
    ProductWord,
    Window,
    pw_cyclic_reduce,
    pw_height,
    pw_inv,
    pw_mul,
    pw_power,
    pw_shift,
    pw_zip,
)
from apps.laurent import lau_arith, lau_invert, lau_truncate, parse_series, render_series, ring_from_label
from apps.dtc.bounds import mu_dtc_bounds, rho_dtc_bounds
from apps.dtc.refutation import single_generator_refutation_search
from apps.dtc.rho import build_rho_matrix, l_lambda_dim, level_zero_relations, rank_over_laurent_field
from apps.dtc.span import span_member_bounded
from apps.dtc.tasks import run_refutation_search
from apps.dtc.words import DtcGenerator, DtcWord, eval_dtc_word, parse_dtc_word, render_dtc_word
from apps.novhom.complexes import ChainComplex, homology, presentation_complex
from apps.novhom.hurewicz import AbelianSystemWindow, hurewicz_map_word, ml_check, pro_abelianize
from apps.novhom.novikov import hn_connected_sum
from apps.cli.models import CommandRun
from apps.cli.report import CASES, build_report
from apps.cli.tasks import build_example_report

logger = logging.getLogger(__name__)

# Opções que o BaseCommand injeta e que não descrevem a execução
_BASE_OPTIONS = {'verbosity', 'settings', 'pythonpath', 'traceback', 'no_color', 'force_color', 'skip_checks'}

Output = Tuple[str, object]


def _window(text: str) -> Window:
    try:
        return Window.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'inteiro esperado: {text!r}')
    if value < 1:
        raise argparse.ArgumentTypeError(f'inteiro positivo esperado: {value}')
    return value


def _height_text(h) -> str:
    return 'bottom' if h == BOTTOM else str(h)


class Command(BaseCommand):
    help = 'Bancada de grupos, produtos livres, cotas DTC e homologia de Novikov'

    requires_system_checks = []

    def add_arguments(self, parser):
        areas = parser.add_subparsers(dest='area', required=True, metavar='<área>')

        # group
        group = self._area(areas, 'group', 'Grupos finitamente apresentados')
        for name, helptext in [
            ('enumerate', 'Todd-Coxeter: ordem e elementos'),
            ('abelianize', 'G^ab via forma normal de Smith'),
            ('is-cyclic', 'Testa se G é cíclico'),
            ('dim-hom', 'dim Hom(G, R)'),
            ('min-gens', 'Número mínimo de geradores'),
        ]:
            leaf = self._leaf(group, name, helptext)
            self._presentation(leaf)
            if name == 'enumerate':
                leaf.add_argument('--elements', action='store_true', help='Lista os elementos')
            if name == 'min-gens':
                leaf.add_argument('--cap', type=_positive, default=None)

        # word
        word = self._area(areas, 'word', 'Palavras do produto livre ∗_k G_k')
        for name, operands, helptext in [
            ('reduce', 1, 'Forma normal'),
            ('mul', 2, 'Produto x·y'),
            ('inv', 1, 'Inverso'),
            ('shift', 1, 'Translação de níveis'),
            ('zip', 1, 'Truncamento Π → Π_h'),
            ('height', 1, 'Maior nível com zip não trivial'),
            ('power', 1, 'Potência x^n'),
            ('cyclic-reduce', 1, 'Conjugador e núcleo ciclicamente reduzido'),
        ]:
            leaf = self._leaf(word, name, helptext)
            self._presentation(leaf)
            leaf.add_argument('x', help='Palavra [k:w][k:w]...')
            if operands == 2:
                leaf.add_argument('y', help='Segunda palavra')
            if name == 'shift':
                leaf.add_argument('--by', type=int, required=True)
            if name == 'zip':
                leaf.add_argument('--at', type=int, required=True)
            if name == 'power':
                leaf.add_argument('--exp', type=int, required=True)

        # dtc
        dtc = self._area(areas, 'dtc', 'Geradores e relações a menos de DTC')
        leaf = self._leaf(dtc, 'eval', 'Avalia uma palavra DTC em Π_h')
        self._presentation(leaf)
        leaf.add_argument('w', help='Palavra {k:gid^e}...')
        self._generators(leaf)
        leaf.add_argument('--at', type=int, default=0, help='Nível h')

        leaf = self._leaf(dtc, 'span-member', 'Pertinência limitada ao span DTC')
        self._presentation(leaf)
        leaf.add_argument('target', help='Palavra [k:w]... alvo')
        self._generators(leaf)
        leaf.add_argument('--at', type=int, default=0, help='Nível h')
        self._window_option(leaf)
        leaf.add_argument('--max-len', type=_positive, default=4)
        leaf.add_argument('--max-states', type=_positive, default=None)

        for name, helptext in [('mu-bounds', 'Cotas de μ_DTC'), ('rho-bounds', 'Cotas de ρ_DTC')]:
            leaf = self._leaf(dtc, name, helptext)
            self._presentation(leaf)
            if name == 'mu-bounds':
                leaf.add_argument('--cap', type=_positive, default=None)

        for name, helptext in [('rho-matrix', 'Matriz ρ sobre Λ'), ('l-dim', 'dim de L_Λ sobre Q((t))')]:
            leaf = self._leaf(dtc, name, helptext)
            leaf.add_argument('-f', '--presentation', type=Path, help='Relações de nível 0 da apresentação')
            leaf.add_argument('--rel', action='append', default=[], help='Relação DTC {k:gid^e}... (repetível)')

        leaf = self._leaf(dtc, 'refute-single', 'Busca de refutação com um gerador')
        self._presentation(leaf)
        self._window_option(leaf, default='0:1')
        leaf.add_argument('--max-len', type=_positive, default=3)
        leaf.add_argument('--max-candidates', type=_positive, default=None)
        leaf.add_argument('--queue', action='store_true', help='Submete como task Celery')

        # novikov
        novikov = self._area(areas, 'novikov', 'Homologia e homologia de Novikov')
        leaf = self._leaf(novikov, 'homology', 'H_i de um complexo celular')
        self._complex(leaf, required=False)
        leaf.add_argument('-f', '--from-presentation', dest='presentation', type=Path,
                          help='Usa o 2-complexo da apresentação')
        leaf.add_argument('--degree', type=int, default=None)

        leaf = self._leaf(novikov, 'hn-sum', 'HN_i(T^n ♯ X, u)')
        self._complex(leaf, required=True)
        leaf.add_argument('--degree', type=int, required=True)
        leaf.add_argument('--n', type=int, default=None, help='Dimensão do toro')

        laurent = novikov.add_parser('laurent', help='Séries de Laurent truncadas')
        ops = laurent.add_subparsers(dest='op', required=True, metavar='<op>')
        for name, operands, helptext in [
            ('mul', 2, 'Produto'),
            ('invert', 1, 'Inverso'),
            ('truncate', 1, 'Truncamento'),
        ]:
            leaf = self._leaf(ops, name, helptext)
            leaf.add_argument('x', help='Literal c*t^e + ...')
            if operands == 2:
                leaf.add_argument('y')
            leaf.add_argument('--ring', default='Z', help='Z, Q ou Z/n')
            leaf.add_argument('--trunc', type=int, default=None)
            if name == 'truncate':
                leaf.add_argument('--to', type=int, required=True)

        # hurewicz
        hurewicz = self._area(areas, 'hurewicz', 'Hurewicz em janelas e Mittag-Leffler')
        leaf = self._leaf(hurewicz, 'map', 'Imagem de uma palavra em ⊕ G^ab por nível')
        self._presentation(leaf)
        leaf.add_argument('x', help='Palavra [k:w]...')
        self._window_option(leaf)

        leaf = self._leaf(hurewicz, 'pro-abelianize', 'Abelianizações de Π_h na janela')
        self._presentation(leaf)
        self._window_option(leaf)

        leaf = self._leaf(hurewicz, 'ml-check', 'Teste de Mittag-Leffler relativo à janela')
        leaf.add_argument('--system', type=Path, help='Sistema em JSON')
        leaf.add_argument('-f', '--presentation', type=Path, help='Pro-abelianização da apresentação')
        self._window_option(leaf)
        leaf.add_argument('--K', dest='K', type=_positive, default=1)

        # report
        report = self._area(areas, 'report', 'Relatórios dos exemplos embarcados')
        for name in CASES:
            leaf = self._leaf(report, name, f'Relatório {name}')
            leaf.add_argument('--queue', action='store_true', help='Submete como task Celery')

    # Construção do parser

    def _area(self, areas, name: str, helptext: str):
        parser = areas.add_parser(name, help=helptext)
        return parser.add_subparsers(dest='action', required=True, metavar='<ação>')

    def _leaf(self, actions, name: str, helptext: str):
        parser = actions.add_parser(name, help=helptext)
        parser.add_argument('--json', action='store_true', help='Saída JSON')
        return parser

    def _presentation(self, parser):
        parser.add_argument('-f', '--presentation', type=Path, required=True, help='Arquivo .pres')
        parser.add_argument('--max-cosets', type=_positive, default=None)

    def _complex(self, parser, required: bool):
        parser.add_argument('--complex', type=Path, required=required, help='Complexo celular em JSON')

    def _generators(self, parser):
        parser.add_argument(
            '--gen', action='append', default=[], metavar='ID=PALAVRA[@h]',
            help='Gerador DTC, ex: g1=[0:a][1:b]@1 (repetível)',
        )

    def _window_option(self, parser, default: Optional[str] = None):
        default = default or getattr(settings, 'NOVK_DEFAULT_WINDOW', '0:3')
        parser.add_argument('--window', type=_window, default=_window(default), help='Janela lo:hi')

    # Execução

    def handle(self, *args, **options):
        """Processa comando."""
        path = [options['area'], options['action']]
        if options.get('op'):
            path.append(options['op'])
        subcomando = ' '.join(path)

        run = None
        if getattr(settings, 'NOVK_RECORD_RUNS', False):
            run = CommandRun.objects.create(subcomando=subcomando, argumentos=self._arguments(options))

        method = getattr(self, '_' + '_'.join(path).replace('-', '_'))
        try:
            text, payload = method(options)
        except (NovkError, ValueError, OSError) as e:
            logger.info(f'{subcomando} falhou: {e}')
            if run is not None:
                run.finalizar(1, mensagem=str(e))
            raise CommandError(str(e), returncode=1)

        if run is not None:
            run.finalizar(0, resultado=payload if isinstance(payload, dict) else {'value': payload})

        if options['json']:
            self.stdout.write(json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2))
        else:
            self.stdout.write(text)

    def _arguments(self, options) -> dict:
        def plain(v):
            if isinstance(v, (str, int, bool, type(None))):
                return v
            if isinstance(v, list):
                return [plain(i) for i in v]
            return str(v)
        return {k: plain(v) for k, v in options.items() if k not in _BASE_OPTIONS}

    # Leitura de entradas

    def _load_presentation(self, options) -> Presentation:
        return parse_presentation(Path(options['presentation']).read_text(encoding='utf-8'))

    def _load_group(self, options) -> Tuple[Presentation, FiniteGroupTable]:
        p = self._load_presentation(options)
        return p, todd_coxeter(p, options.get('max_cosets'))

    def _word(self, text: str, g: FiniteGroupTable) -> ProductWord:
        return parse_product_word(text, g)

    def _dtc_generators(self, options, g: FiniteGroupTable) -> List[DtcGenerator]:
        gens = []
        for spec in options['gen']:
            gid, sep, rest = spec.partition('=')
            if not sep or not gid.strip():
                raise ValueError(f'gerador DTC inválido {spec!r} (use ID=PALAVRA[@h])')
            literal, at, height = rest.partition('@')
            gens.append(DtcGenerator(
                gid.strip(),
                parse_product_word(literal, g),
                int(height) if at else None,
            ))
        return gens

    def _relations(self, options) -> Tuple[List[str], List[DtcWord]]:
        if options['presentation'] is not None:
            if options['rel']:
                raise ValueError('use -f ou --rel, não ambos')
            return level_zero_relations(self._load_presentation(options))
        relations = [parse_dtc_word(text) for text in options['rel']]
        ids = sorted({gid for r in relations for gid in r.generator_ids()})
        return ids, relations

    # group

    def _group_enumerate(self, options) -> Output:
        _, g = self._load_group(options)
        names = [g.name(a) for a in range(g.order)]
        lines = [f'order {g.order}']
        if options['elements']:
            lines.extend(f'  {a}: {name}' for a, name in enumerate(names))
        payload = {
            'order': g.order,
            'elements': names,
            'generator_images': [g.name(a) for a in g.generator_images],
        }
        return '\n'.join(lines), payload

    def _group_abelianize(self, options) -> Output:
        ab = abelianization(self._load_presentation(options))
        return str(ab), {**ab.to_dict(), 'text': str(ab)}

    def _group_is_cyclic(self, options) -> Output:
        _, g = self._load_group(options)
        cyclic = is_cyclic(g)
        return ('cyclic' if cyclic else 'not cyclic'), {'order': g.order, 'cyclic': cyclic}

    def _group_dim_hom(self, options) -> Output:
        d = dim_hom_R(self._load_presentation(options))
        return str(d), {'dim_hom_R': d}

    def _group_min_gens(self, options) -> Output:
        _, g = self._load_group(options)
        cap = options['cap'] or getattr(settings, 'NOVK_MIN_GENERATORS_CAP', 3)
        k = min_generators(g, cap)
        if k > cap:
            return f'> {cap}', {'min_generators': None, 'cap': cap}
        return str(k), {'min_generators': k, 'cap': cap}

    # word

    def _word_result(self, x: ProductWord) -> Output:
        text = render_product_word(x)
        return text, {'word': text, 'length': len(x)}

    def _word_reduce(self, options) -> Output:
        _, g = self._load_group(options)
        return self._word_result(self._word(options['x'], g))

    def _word_mul(self, options) -> Output:
        _, g = self._load_group(options)
        return self._word_result(pw_mul(self._word(options['x'], g), self._word(options['y'], g)))

    def _word_inv(self, options) -> Output:
        _, g = self._load_group(options)
        return self._word_result(pw_inv(self._word(options['x'], g)))

    def _word_shift(self, options) -> Output:
        _, g = self._load_group(options)
        return self._word_result(pw_shift(self._word(options['x'], g), options['by']))

    def _word_zip(self, options) -> Output:
        _, g = self._load_group(options)
        return self._word_result(pw_zip(self._word(options['x'], g), options['at']))

    def _word_height(self, options) -> Output:
        _, g = self._load_group(options)
        h = pw_height(self._word(options['x'], g))
        return _height_text(h), {'height': None if h == BOTTOM else h}

    def _word_power(self, options) -> Output:
        _, g = self._load_group(options)
        return self._word_result(pw_power(self._word(options['x'], g), options['exp']))

    def _word_cyclic_reduce(self, options) -> Output:
        _, g = self._load_group(options)
        conjugator, core = pw_cyclic_reduce(self._word(options['x'], g))
        payload = {'conjugator': render_product_word(conjugator), 'core': render_product_word(core)}
        return f'conjugator {payload["conjugator"]}\ncore {payload["core"]}', payload

    # dtc

    def _dtc_eval(self, options) -> Output:
        _, g = self._load_group(options)
        w = parse_dtc_word(options['w'])
        return self._word_result(eval_dtc_word(w, self._dtc_generators(options, g), options['at']))

    def _dtc_span_member(self, options) -> Output:
        _, g = self._load_group(options)
        result = span_member_bounded(
            self._word(options['target'], g),
            self._dtc_generators(options, g),
            options['at'],
            options['window'],
            options['max_len'],
            options['max_states'],
        )
        if result.is_member:
            text = f'member, witness {render_dtc_word(result.witness)}'
        elif result.exhausted:
            text = 'not a member (every state in the window was explored)'
        else:
            text = f'unknown within max_len {options["max_len"]} ({result.explored} states explored)'
        return text, result.to_dict()

    def _dtc_mu_bounds(self, options) -> Output:
        _, g = self._load_group(options)
        report = mu_dtc_bounds(g, options['cap'])
        return report.render(), report.to_dict()

    def _dtc_rho_bounds(self, options) -> Output:
        p, g = self._load_group(options)
        report = rho_dtc_bounds(p, g)
        return report.render(), report.to_dict()

    def _dtc_rho_matrix(self, options) -> Output:
        ids, relations = self._relations(options)
        matrix = build_rho_matrix(ids, relations)
        rank = rank_over_laurent_field(matrix)
        payload = {**matrix.to_dict(), 'rank': rank}
        return f'{matrix}\nrank {rank}', payload

    def _dtc_l_dim(self, options) -> Output:
        ids, relations = self._relations(options)
        d = l_lambda_dim(ids, relations)
        return str(d), {'l_lambda_dim': d, 'generators': ids}

    def _dtc_refute_single(self, options) -> Output:
        if options['queue']:
            text = Path(options['presentation']).read_text(encoding='utf-8')
            result = run_refutation_search.delay(text, str(options['window']), options['max_len'])
            payload = result.get()
            return json.dumps(payload, ensure_ascii=False, sort_keys=True), payload
        _, g = self._load_group(options)
        report = single_generator_refutation_search(
            g, options['window'], options['max_len'], options['max_candidates']
        )
        return report.render(), report.to_dict()

    # novikov

    def _novikov_homology(self, options) -> Output:
        if options['complex'] is not None:
            cx = ChainComplex.load(options['complex'])
        elif options['presentation'] is not None:
            cx = presentation_complex(self._load_presentation(options))
        else:
            raise ValueError('informe --complex ou -f')
        degrees = range(cx.top + 1) if options['degree'] is None else [options['degree']]
        groups = {i: homology(cx, i) for i in degrees}
        text = '\n'.join(f'H_{i} = {h}' for i, h in groups.items())
        return text, {f'H_{i}': {**h.to_dict(), 'text': str(h)} for i, h in groups.items()}

    def _novikov_hn_sum(self, options) -> Output:
        cx = ChainComplex.load(options['complex'])
        n = options['n'] or getattr(settings, 'NOVK_DEFAULT_DIMENSION', 4)
        module = hn_connected_sum(cx, options['degree'], n)
        i = options['degree']
        return f'HN_{i} = {module}', {'degree': i, 'n': n, **module.to_dict()}

    def _series(self, options, text: str):
        ring = ring_from_label(options['ring'])
        trunc = options['trunc'] if options['trunc'] is not None else getattr(settings, 'NOVK_DEFAULT_TRUNC', 8)
        return parse_series(text, ring, trunc)

    def _series_result(self, x) -> Output:
        text = render_series(x)
        return f'{text}\ntruncation {x.truncation}', {
            'series': text, 'ring': x.ring.label, 'truncation': x.truncation,
        }

    def _novikov_laurent_mul(self, options) -> Output:
        return self._series_result(
            lau_arith('mul', self._series(options, options['x']), self._series(options, options['y']))
        )

    def _novikov_laurent_invert(self, options) -> Output:
        return self._series_result(lau_invert(self._series(options, options['x'])))

    def _novikov_laurent_truncate(self, options) -> Output:
        return self._series_result(lau_truncate(self._series(options, options['x']), options['to']))

    # hurewicz

    def _hurewicz_map(self, options) -> Output:
        _, g = self._load_group(options)
        family = hurewicz_map_word(self._word(options['x'], g), abelianization_map(g), options['window'])
        return family.render(), {'window': str(family.window), 'levels': family.to_dict()}

    def _hurewicz_pro_abelianize(self, options) -> Output:
        _, g = self._load_group(options)
        system = pro_abelianize(g, options['window'])
        levels = [
            {'level': system.lo + j, 'group': str(system.group(j))}
            for j in range(len(system))
        ]
        text = '\n'.join(f'level {item["level"]}: {item["group"]}' for item in levels)
        return text, {'window': str(system.window), 'levels': levels, 'system': system.to_dict()}

    def _hurewicz_ml_check(self, options) -> Output:
        if options['system'] is not None:
            system = AbelianSystemWindow.load(options['system'])
        elif options['presentation'] is not None:
            p = self._load_presentation(options)
            system = pro_abelianize(todd_coxeter(p), options['window'])
        else:
            raise ValueError('informe --system ou -f')
        verdict = ml_check(system, options['K'])
        return verdict.render(), verdict.to_dict()

    # report

    def _report(self, case: str, options) -> Output:
        if options['queue']:
            payload = build_example_report.delay(case).get()
            return '\n'.join(f'Conclusion: {c}' for c in payload['conclusions']), payload
        report = build_report(case)
        return report.render(), report.to_dict()

    def _report_poincare(self, options) -> Output:
        return self._report('poincare', options)

    def _report_rp4(self, options) -> Output:
        return self._report('rp4', options)
