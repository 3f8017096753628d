"""
Cotas para μ_DTC e ρ_DTC, com certificados legíveis.

Nenhum relatório afirma igualdade a menos que lower == upper.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from django.conf import settings

from apps.fpgroup.abelian import dim_hom_R
from apps.fpgroup.presentation import Presentation
from apps.fpgroup.tables import FiniteGroupTable, is_cyclic, min_generators
from apps.fpgroup.todd_coxeter import todd_coxeter

logger = logging.getLogger(__name__)

# Resultados citados nos certificados
PROP_NONCYCLIC = 'Prop. noncyclic'
PROP_TRIVIAL = 'Prop. trivial'
PROP_GENERATORS = 'Prop. mu_DTC <= mu(G)'
PROP_LEVEL_ZERO = 'Prop. level-0 relators'
COR_DEFICIENCY = 'Cor. deficiency'


def cite(result: str, text: str) -> str:
    return f'{result}: {text}'


@dataclass(frozen=True)
class BoundReport:
    """Par de cotas [lower, upper] para `quantity`; upper None quando desconhecida."""

    quantity: str
    lower: int
    upper: Optional[int] = None
    certificates: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'certificates', tuple(self.certificates))
        if self.lower < 0:
            raise ValueError(f'cota inferior negativa para {self.quantity}: {self.lower}')
        if self.upper is not None and self.lower > self.upper:
            raise ArithmeticError(f'{self.quantity}: cota inferior {self.lower} > superior {self.upper}')

    @property
    def is_exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    def interval(self) -> str:
        upper = '?' if self.upper is None else self.upper
        return f'{self.quantity} in [{self.lower}, {upper}]'

    def render(self) -> str:
        return '\n'.join([self.interval()] + [f'  - {line}' for line in self.certificates])

    def to_dict(self) -> dict:
        return {
            'quantity': self.quantity,
            'lower': self.lower,
            'upper': self.upper,
            'certificates': list(self.certificates),
        }

    def __str__(self):
        return self.interval()


def _mu_lower(g: FiniteGroupTable) -> Tuple[int, str]:
    if g.order == 1:
        return 0, cite(PROP_TRIVIAL, 'lower 0: G is trivial, so the free product is trivial')
    if is_cyclic(g):
        return 1, cite(PROP_TRIVIAL, f'lower 1: G is nontrivial (order {g.order}), so at least one generator is needed')
    return 2, cite(PROP_NONCYCLIC, (
        f'lower 2: G (order {g.order}) is not cyclic, and a single letter cannot generate '
        'the free product up to deck transformations and completion'
    ))


def mu_dtc_bounds(g: FiniteGroupTable, cap: Optional[int] = None) -> BoundReport:
    """
    Cota inferior pela ciclicidade de G, superior pelo número mínimo de
    geradores de G (um gerador de G no nível 0 gera Π a menos de DTC).

    Raises:
        BudgetExceeded: propagado de min_generators
    """
    lower, certificate = _mu_lower(g)
    certificates: List[str] = [certificate]
    if cap is None:
        cap = getattr(settings, 'NOVK_MIN_GENERATORS_CAP', 3)
    generators = min_generators(g, cap)
    upper = generators if generators <= cap else None

    if upper is None:
        certificates.append(cite(PROP_GENERATORS, f'upper unknown: no generating tuple of size <= {cap} was found'))
    else:
        certificates.append(cite(PROP_GENERATORS, (
            f'upper {upper}: G is generated by {upper} element(s), and mu_DTC is at most the '
            'minimal number of generators of the fundamental group'
        )))
    report = BoundReport('mu_DTC', lower, upper, certificates)
    logger.info(f'Cotas μ_DTC para grupo de ordem {g.order}: {report.interval()}')
    return report


def rho_dtc_bounds(p: Presentation, g: Optional[FiniteGroupTable] = None) -> BoundReport:
    """
    Superior: número de relatores de p (suas cópias no nível 0 apresentam
    Π a menos de DTC). Inferior: r ≥ m − dim Hom(G, R) com m ≥ cota inferior
    de μ_DTC.

    Sem `g`, a tabela é realizada por Todd–Coxeter; uma apresentação sem
    relatores dispensa a realização, pois a cota superior já é 0.
    """
    upper = len(p.relators)
    if upper == 0:
        return BoundReport('rho_DTC', 0, 0, (
            cite(PROP_LEVEL_ZERO, 'upper 0: the presentation has no relators'),
            cite(COR_DEFICIENCY, 'lower 0: relation counts are nonnegative'),
        ))

    if g is None:
        g = todd_coxeter(p)
    mu_lower, _ = _mu_lower(g)
    dim_hom = dim_hom_R(p)
    lower = max(0, mu_lower - dim_hom)
    certificates = (
        cite(PROP_LEVEL_ZERO, (
            f'upper {upper}: the {upper} relator(s) of the presentation, placed at level 0, '
            'present the free product up to deck transformations and completion'
        )),
        cite(COR_DEFICIENCY, (
            f'lower {lower}: any such presentation with m generators has r >= m - dim Hom(G, R); '
            f'here m >= {mu_lower} (mu_DTC lower bound) and dim Hom(G, R) = {dim_hom}'
        )),
    )
    report = BoundReport('rho_DTC', lower, upper, certificates)
    logger.info(f'Cotas ρ_DTC: {report.interval()}')
    return report


def critical_point_bounds(mu: BoundReport, rho: BoundReport) -> Tuple[int, int]:
    """(#Crit_1 mínimo, #Crit_2 mínimo) a partir das cotas inferiores de μ_DTC e ρ_DTC."""
    return mu.lower, rho.lower
