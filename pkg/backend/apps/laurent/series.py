"""
Séries de Laurent truncadas e as operações do anel Λ_d.

Uma série guarda os coeficientes conhecidos de t^valuation até no máximo
t^truncation; tudo acima de truncation é desconhecido (não é zero).
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from .exceptions import DivisionByZero, NonUnitLeadingTerm, RingMismatch, TruncationIncrease
from .rings import CoefficientRing

logger = logging.getLogger(__name__)

ARITH_OPS = ('add', 'sub', 'mul', 'neg')


@dataclass(frozen=True)
class LaurentSeries:
    """
    Elemento de Λ_d = Laurent polinômios de grau no máximo d.

    A forma canônica remove zeros nas duas pontas; a série nula guarda
    valuation = 0 e coefficients vazio, e lau_valuation devolve +inf.
    """

    ring: CoefficientRing
    valuation: int
    coefficients: Tuple[Any, ...]
    truncation: int
    _terms: Dict[int, Any] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        coefs = [self.ring.normalize(c) for c in self.coefficients]
        val = int(self.valuation)

        # Termos acima do truncamento são descartados na construção
        keep = self.truncation - val + 1
        if keep < len(coefs):
            coefs = coefs[:max(keep, 0)]

        start = 0
        while start < len(coefs) and coefs[start] == 0:
            start += 1
        coefs = coefs[start:]
        val += start
        while coefs and coefs[-1] == 0:
            coefs.pop()
        if not coefs:
            val = 0

        object.__setattr__(self, 'valuation', val)
        object.__setattr__(self, 'coefficients', tuple(coefs))
        object.__setattr__(self, 'truncation', int(self.truncation))

    # Construtores

    @classmethod
    def from_terms(cls, ring: CoefficientRing, terms: Dict[int, Any], truncation: int) -> 'LaurentSeries':
        """Monta a série a partir de {expoente: coeficiente}; expoentes > truncation são ignorados."""
        terms = {e: c for e, c in terms.items() if e <= truncation}
        nonzero = [e for e, c in terms.items() if ring.normalize(c) != 0]
        if not nonzero:
            return cls.zero(ring, truncation)
        low, high = min(nonzero), max(nonzero)
        coefs = [terms.get(e, 0) for e in range(low, high + 1)]
        return cls(ring, low, tuple(coefs), truncation)

    @classmethod
    def zero(cls, ring: CoefficientRing, truncation: int) -> 'LaurentSeries':
        return cls(ring, 0, (), truncation)

    @classmethod
    def one(cls, ring: CoefficientRing, truncation: int) -> 'LaurentSeries':
        return cls.monomial(ring, 1, 0, truncation)

    @classmethod
    def monomial(cls, ring: CoefficientRing, coefficient: Any, exponent: int, truncation: int) -> 'LaurentSeries':
        return cls(ring, exponent, (coefficient,), truncation)

    # Consultas

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> float:
        """Maior expoente com coeficiente conhecido não nulo; -inf para a série nula."""
        if self.is_zero:
            return -math.inf
        return self.valuation + len(self.coefficients) - 1

    def coefficient(self, exponent: int) -> Any:
        if exponent > self.truncation:
            raise TruncationIncrease(
                f'coeficiente de t^{exponent} desconhecido (truncamento {self.truncation})'
            )
        index = exponent - self.valuation
        if self.is_zero or index < 0 or index >= len(self.coefficients):
            return self.ring.zero()
        return self.coefficients[index]

    def terms(self) -> Dict[int, Any]:
        """Dicionário {expoente: coeficiente} só com os termos não nulos."""
        if self._terms is None:
            terms = {
                self.valuation + i: c
                for i, c in enumerate(self.coefficients)
                if c != 0
            }
            object.__setattr__(self, '_terms', terms)
        return dict(self._terms)

    def effective_valuation(self) -> int:
        """
        Valuação usada na regra de truncamento do produto.

        Para a série nula conhecida até d, o primeiro termo possivelmente
        não nulo é t^(d+1).
        """
        if self.is_zero:
            return self.truncation + 1
        return self.valuation

    # Operadores

    def __add__(self, other: 'LaurentSeries') -> 'LaurentSeries':
        return lau_arith('add', self, other)

    def __sub__(self, other: 'LaurentSeries') -> 'LaurentSeries':
        return lau_arith('sub', self, other)

    def __mul__(self, other: 'LaurentSeries') -> 'LaurentSeries':
        return lau_arith('mul', self, other)

    def __neg__(self) -> 'LaurentSeries':
        return lau_arith('neg', self)

    def __str__(self):
        from .literal import render_series
        return f'{render_series(self)} (trunc {self.truncation})'


def lau_truncate(x: LaurentSeries, d: int) -> LaurentSeries:
    """
    Aplica o mapa [·]_d : Λ_{x.truncation} → Λ_d.

    Raises:
        TruncationIncrease se d > x.truncation (informação não pode ser inventada)
    """
    if d > x.truncation:
        raise TruncationIncrease(
            f'não é possível truncar em {d}: série conhecida só até {x.truncation}'
        )
    return LaurentSeries(x.ring, x.valuation, x.coefficients, d)


def lau_valuation(x: LaurentSeries) -> float:
    """Valuação em t; +inf para a série nula."""
    if x.is_zero:
        return math.inf
    return x.valuation


def _combine(x: LaurentSeries, y: LaurentSeries, sign: int) -> LaurentSeries:
    truncation = min(x.truncation, y.truncation)
    terms = x.terms()
    for e, c in y.terms().items():
        terms[e] = terms.get(e, 0) + sign * c
    return LaurentSeries.from_terms(x.ring, terms, truncation)


def _multiply(x: LaurentSeries, y: LaurentSeries) -> LaurentSeries:
    truncation = min(
        x.truncation + y.effective_valuation(),
        y.truncation + x.effective_valuation(),
    )
    terms: Dict[int, Any] = {}
    ring = x.ring
    for ex, cx in x.terms().items():
        for ey, cy in y.terms().items():
            e = ex + ey
            if e <= truncation:
                terms[e] = ring.normalize(terms.get(e, 0) + cx * cy)
    return LaurentSeries.from_terms(ring, terms, truncation)


def lau_arith(op: str, x: LaurentSeries, y: Optional[LaurentSeries] = None) -> LaurentSeries:
    """
    Operações de anel com propagação de truncamento.

    add/sub: truncamento min(dx, dy); neg: dx; mul: min(dx + ν(y), dy + ν(x)),
    ou seja, só os termos do produto determinados pelos termos conhecidos.

    Raises:
        RingMismatch se x e y estiverem sobre anéis diferentes
        ValueError para operação desconhecida ou operando ausente
    """
    if op not in ARITH_OPS:
        raise ValueError(f'Operação desconhecida: {op!r}. Disponíveis: {", ".join(ARITH_OPS)}')

    if op == 'neg':
        return LaurentSeries(x.ring, x.valuation, tuple(-c for c in x.coefficients), x.truncation)

    if y is None:
        raise ValueError(f'Operação {op!r} exige dois operandos')
    if x.ring != y.ring:
        raise RingMismatch(f'anéis diferentes: {x.ring} e {y.ring}')

    if op == 'add':
        return _combine(x, y, 1)
    if op == 'sub':
        return _combine(x, y, -1)
    return _multiply(x, y)


def lau_invert(x: LaurentSeries) -> LaurentSeries:
    """
    Inverso em Λ: x = t^v · u com u(0) unidade; devolve t^(-v) · u^(-1).

    O resultado tem valuação -v e truncamento x.truncation - 2v (todos os
    termos calculáveis a partir dos coeficientes conhecidos).

    Raises:
        DivisionByZero para a série nula
        NonUnitLeadingTerm se o coeficiente mais baixo não for unidade
    """
    if x.is_zero:
        raise DivisionByZero('a série nula não é inversível')

    ring = x.ring
    lead = x.coefficients[0]
    if not ring.is_unit(lead):
        raise NonUnitLeadingTerm(
            f'coeficiente mais baixo {ring.render_coefficient(lead)} não é unidade em {ring}'
        )

    v = x.valuation
    truncation = x.truncation - 2 * v
    count = truncation + v + 1  # número de coeficientes de u^(-1) necessários

    lead_inv = ring.inverse(lead)
    u = x.coefficients
    inverse = [lead_inv]
    for k in range(1, count):
        acc = 0
        for i in range(1, min(k, len(u) - 1) + 1):
            acc += u[i] * inverse[k - i]
        inverse.append(ring.normalize(-lead_inv * acc))

    logger.debug('Inverso calculado: valuação %s, %s coeficientes', -v, count)
    return LaurentSeries(ring, -v, tuple(inverse), truncation)

