"""
Matriz ρ das relações DTC e a dimensão de L_Λ.

A entrada (i, j) soma α·t^(-k) sobre os fatores (k, j, α) da relação i.
As entradas são LaurentSeries sobre Q conhecidas até o maior expoente
(polinômios de Laurent exatos); o posto é calculado sobre Q(t), o que
coincide com o posto sobre R((t)).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from sympy import QQ, Rational, Symbol
from sympy.polys.matrices import DomainMatrix

from apps.fpgroup.presentation import Presentation
from apps.laurent.literal import render_series
from apps.laurent.rings import Rationals
from apps.laurent.series import LaurentSeries, lau_arith

from .exceptions import UnresolvedGenerator
from .words import DtcGenerator, DtcWord, Factor

logger = logging.getLogger(__name__)

LaurentPolynomial = Dict[int, Fraction]

RATIONALS = Rationals()

_T = Symbol('t')


def laurent_polynomial(terms: Dict[int, object]) -> LaurentSeries:
    """Polinômio de Laurent exato como série sobre Q, truncada no maior expoente."""
    nonzero = {e: Fraction(c) for e, c in terms.items() if Fraction(c) != 0}
    return LaurentSeries.from_terms(RATIONALS, nonzero, max(nonzero, default=0))


def _lift(x: LaurentSeries, truncation: int) -> LaurentSeries:
    return LaurentSeries.from_terms(x.ring, x.terms(), truncation)


def exact_arith(op: str, x: LaurentSeries, y: LaurentSeries) -> LaurentSeries:
    """
    add/mul de polinômios exatos por lau_arith, com os operandos estendidos
    até um truncamento que preserva todos os termos do resultado.
    """
    if op == 'mul':
        if x.is_zero or y.is_zero:
            return laurent_polynomial({})
        # o truncamento do produto é T + min(ν(x), ν(y)) = grau(x) + grau(y)
        truncation = x.degree + y.degree - min(x.valuation, y.valuation)
    else:
        truncation = max(x.truncation, y.truncation)
    result = lau_arith(op, _lift(x, truncation), _lift(y, truncation))
    return laurent_polynomial(result.terms())


def polynomial_terms(x: LaurentSeries) -> LaurentPolynomial:
    return {e: Fraction(c) for e, c in x.terms().items()}


@dataclass(frozen=True)
class RhoMatrix:
    """
    Matriz relações × geradores com entradas polinômios de Laurent sobre Q.

    `columns` guarda os ids dos geradores na ordem das colunas.
    """

    columns: Tuple[str, ...]
    entries: Tuple[Tuple[LaurentSeries, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'columns', tuple(self.columns))
        rows = []
        for row in self.entries:
            if len(row) != len(self.columns):
                raise ValueError(f'linha com {len(row)} entradas para {len(self.columns)} colunas')
            rows.append(tuple(laurent_polynomial(entry.terms()) for entry in row))
        object.__setattr__(self, 'entries', tuple(rows))

    @classmethod
    def from_polynomials(cls, columns: Sequence[str], rows: Sequence[Sequence[Dict[int, object]]]) -> 'RhoMatrix':
        return cls(tuple(columns), tuple(tuple(laurent_polynomial(p) for p in row) for row in rows))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.columns)

    def series(self, i: int, j: int) -> LaurentSeries:
        return self.entries[i][j]

    def polynomial(self, i: int, j: int) -> LaurentPolynomial:
        return polynomial_terms(self.entries[i][j])

    def polynomials(self) -> List[List[LaurentPolynomial]]:
        return [[polynomial_terms(entry) for entry in row] for row in self.entries]

    def scale_row(self, i: int, multiplier: Dict[int, object]) -> 'RhoMatrix':
        factor = laurent_polynomial(multiplier)
        if factor.is_zero:
            raise ValueError('multiplicador nulo')
        rows = [list(row) for row in self.entries]
        rows[i] = [exact_arith('mul', entry, factor) for entry in rows[i]]
        return RhoMatrix(self.columns, tuple(tuple(row) for row in rows))

    def to_rows(self) -> List[List[str]]:
        return [[render_series(self.series(i, j)) for j in range(len(self.columns))] for i in range(len(self.entries))]

    def to_dict(self) -> dict:
        return {'columns': list(self.columns), 'rows': self.to_rows()}

    def __str__(self):
        if not self.entries:
            return f'0×{len(self.columns)}'
        return '\n'.join('[' + ', '.join(row) + ']' for row in self.to_rows())


def _generator_ids(gens: Sequence[Union[DtcGenerator, str]]) -> List[str]:
    ids = [g.id if isinstance(g, DtcGenerator) else str(g) for g in gens]
    if len(set(ids)) != len(ids):
        raise ValueError(f'gerador DTC repetido em {ids}')
    return ids


def build_rho_matrix(gens: Sequence[Union[DtcGenerator, str]], relations: Sequence[DtcWord]) -> RhoMatrix:
    """
    Raises:
        UnresolvedGenerator: relação cita gerador fora de `gens`
    """
    ids = _generator_ids(gens)
    position = {gid: j for j, gid in enumerate(ids)}
    rows = []
    for relation in relations:
        row = [laurent_polynomial({}) for _ in ids]
        for f in relation.factors:
            if f.gid not in position:
                raise UnresolvedGenerator(f.gid)
            j = position[f.gid]
            row[j] = exact_arith('add', row[j], laurent_polynomial({-f.shift: f.exp}))
        rows.append(tuple(row))
    return RhoMatrix(tuple(ids), tuple(rows))


def _to_sympy(poly: LaurentPolynomial, offset: int):
    return sum(
        (Rational(c.numerator, c.denominator) * _T ** (e - offset) for e, c in poly.items()),
        Rational(0),
    )


def rank_over_laurent_field(matrix: RhoMatrix) -> int:
    """
    Posto sobre Q(t). Cada linha é multiplicada pela potência de t que
    deixa todos os expoentes ≥ 0; isso não altera o posto.
    """
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return 0
    ring = QQ[_T]
    rows = []
    for row in matrix.polynomials():
        exponents = [e for p in row for e in p]
        offset = min(exponents, default=0)
        rows.append([ring.from_sympy(_to_sympy(p, offset)) for p in row])
    rank = DomainMatrix(rows, (nrows, ncols), ring).to_field().rank()
    logger.debug(f'Posto de ρ ({nrows}×{ncols}) sobre Q(t): {rank}')
    return rank


def l_lambda_dim(gens: Sequence[Union[DtcGenerator, str]], relations: Sequence[DtcWord]) -> int:
    """dim L_Λ = #geradores − posto de ρ."""
    return len(_generator_ids(gens)) - rank_over_laurent_field(build_rho_matrix(gens, relations))


def level_zero_relations(p: Presentation) -> Tuple[List[str], List[DtcWord]]:
    """Geradores e relatores da apresentação como relações DTC no nível 0."""
    relations = [
        DtcWord(tuple(Factor(0, p.generators[g], e) for g, e in relator.syllables))
        for relator in p.relators
    ]
    return list(p.generators), relations
