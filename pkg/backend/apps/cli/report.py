"""
Relatórios de ponta a ponta para os dois exemplos embarcados.

poincare: π1 = grupo binário icosaédrico, X = S × S³, n = 6.
rp4: π1 = Z/2, X = RP⁴, n = 4.

Cada número do relatório sai de uma operação dos apps de álgebra.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List

from django.conf import settings

from apps.fpgroup.abelian import abelianization, dim_hom_R
from apps.fpgroup.presentation import Presentation, parse_presentation
from apps.fpgroup.tables import is_cyclic
from apps.fpgroup.todd_coxeter import todd_coxeter
from apps.freeprod.product import Window
from apps.dtc.bounds import BoundReport, critical_point_bounds, mu_dtc_bounds, rho_dtc_bounds
from apps.novhom.complexes import ChainComplex, homology
from apps.novhom.hurewicz import ml_check, pro_abelian_groups, pro_abelianize
from apps.novhom.novikov import NovikovModule, hn_connected_sum, novikov_inequality_bounds, tensor_novikov

logger = logging.getLogger(__name__)

EXEMPLOS_DIR = Path(__file__).resolve().parent / 'exemplos'


@dataclass(frozen=True)
class ExampleCase:
    name: str
    title: str
    presentation_file: str
    complex_file: str
    dimension: int


CASES: Dict[str, ExampleCase] = {
    'poincare': ExampleCase(
        'poincare', 'T^6 # (S x S^3), S the Poincare homology sphere', 'poincare.pres', 'poincare_x.json', 6,
    ),
    'rp4': ExampleCase('rp4', 'T^4 # RP^4', 'z2.pres', 'rp4.json', 4),
}


def _value(report: BoundReport) -> str:
    if report.is_exact:
        return f'{report.quantity} = {report.lower}'
    return report.interval()


def _hn_text(hn1: NovikovModule, hn2: NovikovModule) -> str:
    if hn1.is_zero and hn2.is_zero:
        return 'HN_1 = HN_2 = 0'
    return f'HN_1 = {hn1}, HN_2 = {hn2}'


@dataclass(frozen=True)
class ExampleReport:
    case: ExampleCase
    presentation: Presentation
    group: dict
    mu: BoundReport
    rho: BoundReport
    homology: dict
    novikov: List[NovikovModule]
    novikov_bounds: List[int]
    hurewicz: dict

    @property
    def critical_points(self):
        return critical_point_bounds(self.mu, self.rho)

    def conclusions(self) -> List[str]:
        crit1, crit2 = self.critical_points
        hn = _hn_text(self.novikov[1], self.novikov[2])
        return [
            f'every Morse 1-form in u has >= {crit1} index-1 and >= {crit2} index-2 '
            f'critical points; {hn}',
            f'{_value(self.mu)}, {_value(self.rho)}; {hn}; the Novikov inequalities alone give '
            f'>= {self.novikov_bounds[1]} and >= {self.novikov_bounds[2]}',
        ]

    def render(self) -> str:
        crit1, crit2 = self.critical_points
        g = self.group
        lines = [
            f'Report: {self.case.title}, u = projection to the torus',
            '',
            f'pi_1(X) = < {" ".join(self.presentation.generators)} | {len(self.presentation.relators)} relator(s) >',
            f'  order {g["order"]}; abelianization {g["abelianization"]}; '
            f'cyclic {"yes" if g["cyclic"] else "no"}; dim Hom(G, R) = {g["dim_hom_R"]}',
            '',
            self.mu.render(),
            self.rho.render(),
            f'critical points: index 1 >= {crit1}, index 2 >= {crit2}',
            '',
            f'H_1(X) = {self.homology["H_1"]}; H_2(X) = {self.homology["H_2"]}',
        ]
        lines.extend(f'HN_{i}(T^{self.case.dimension} # X, u) = {m}' for i, m in enumerate(self.novikov))
        lines.append(
            'Novikov inequalities: ' + ', '.join(
                f'index {i} >= {b}' for i, b in enumerate(self.novikov_bounds)
            )
        )
        lines.append('')
        h = self.hurewicz
        lines.append(f'Hurewicz window {h["window"]}: ' + '; '.join(
            f'level {item["level"]}: {item["group"]}' for item in h['levels']
        ))
        lines.append(
            f'  top level matches G^ab: {"yes" if h["top_level_matches_abelianization"] else "no"}; '
            f'HN_1 matches G^ab (x) Lambda: {"yes" if h["hn1_matches_abelianization"] else "no"}'
        )
        lines.append(f'  {"stable" if h["mittag_leffler"]["stable"] else "not stable"} '
                     f'(Mittag-Leffler, window-relative, K={h["mittag_leffler"]["K"]})')
        lines.append('')
        lines.extend(f'Conclusion: {c}' for c in self.conclusions())
        return '\n'.join(lines)

    def to_dict(self) -> dict:
        crit1, crit2 = self.critical_points
        return {
            'case': self.case.name,
            'title': self.case.title,
            'dimension': self.case.dimension,
            'presentation': self.presentation.render(),
            'group': dict(self.group),
            'mu_dtc': self.mu.to_dict(),
            'rho_dtc': self.rho.to_dict(),
            'critical_points': {'index_1': crit1, 'index_2': crit2},
            'homology': dict(self.homology),
            'novikov': {f'HN_{i}': m.to_dict() for i, m in enumerate(self.novikov)},
            'novikov_inequalities': list(self.novikov_bounds),
            'hurewicz': self.hurewicz,
            'conclusions': self.conclusions(),
        }


def build_report(name: str) -> ExampleReport:
    """
    Roda o pipeline completo de um exemplo embarcado.

    Raises:
        KeyError: caso desconhecido
    """
    case = CASES[name]
    logger.info(f'Relatório {name}: iniciando pipeline')

    p = parse_presentation((EXEMPLOS_DIR / case.presentation_file).read_text(encoding='utf-8'))
    g = todd_coxeter(p)
    ab = abelianization(p)
    group = {
        'order': g.order,
        'abelianization': str(ab),
        'cyclic': is_cyclic(g),
        'dim_hom_R': dim_hom_R(p),
    }
    mu = mu_dtc_bounds(g)
    rho = rho_dtc_bounds(p, g)

    cx = ChainComplex.load(EXEMPLOS_DIR / case.complex_file)
    h1, h2 = homology(cx, 1), homology(cx, 2)
    novikov = [hn_connected_sum(cx, i, case.dimension) for i in (0, 1, 2)]

    window = Window.parse(getattr(settings, 'NOVK_DEFAULT_WINDOW', '0:3'))
    system = pro_abelianize(g, window)
    groups = pro_abelian_groups(system)
    verdict = ml_check(system, 1)
    hurewicz = {
        'window': str(window),
        'levels': [{'level': level, 'group': str(grp)} for level, grp in zip(window.levels(), groups)],
        'top_level_matches_abelianization': groups[-1] == ab,
        'hn1_matches_abelianization': tensor_novikov(ab) == novikov[1],
        'mittag_leffler': verdict.to_dict(),
    }

    report = ExampleReport(
        case, p, group, mu, rho,
        {'H_1': str(h1), 'H_2': str(h2)},
        novikov, novikov_inequality_bounds(novikov), hurewicz,
    )
    logger.info(f'Relatório {name} concluído: {report.conclusions()[0]}')
    return report
