"""
Anéis de coeficientes das séries de Laurent.

Q substitui R de forma exata: posto e dimensão de núcleo sobre R((t))
coincidem com os de Q((t)) para matrizes de entradas racionais.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any


class CoefficientRing(ABC):
    """
    Classe base abstrata para os anéis Z, Q e Z/n.

    Os elementos são valores Python imutáveis (int ou Fraction); o anel
    só sabe normalizá-los, testar unidades e convertê-los de/para texto.
    """

    @property
    @abstractmethod
    def label(self) -> str:
        """Rótulo curto usado na CLI e nos registros JSON."""

    @abstractmethod
    def normalize(self, value: Any) -> Any:
        """Converte um valor para a representação canônica do anel."""

    @abstractmethod
    def is_unit(self, value: Any) -> bool:
        pass

    @abstractmethod
    def inverse(self, value: Any) -> Any:
        pass

    def zero(self) -> Any:
        return self.normalize(0)

    def one(self) -> Any:
        return self.normalize(1)

    def parse_coefficient(self, text: str) -> Any:
        return self.normalize(int(text))

    def render_coefficient(self, value: Any) -> str:
        return str(value)

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Integers(CoefficientRing):

    @property
    def label(self) -> str:
        return 'Z'

    def normalize(self, value: Any) -> int:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f'{value} não é inteiro')
            return value.numerator
        return int(value)

    def is_unit(self, value: int) -> bool:
        return value in (1, -1)

    def inverse(self, value: int) -> int:
        if not self.is_unit(value):
            raise ValueError(f'{value} não é unidade em Z')
        return value


@dataclass(frozen=True)
class Rationals(CoefficientRing):

    @property
    def label(self) -> str:
        return 'Q'

    def normalize(self, value: Any) -> Fraction:
        return Fraction(value)

    def is_unit(self, value: Fraction) -> bool:
        return value != 0

    def inverse(self, value: Fraction) -> Fraction:
        return 1 / Fraction(value)

    def parse_coefficient(self, text: str) -> Fraction:
        return Fraction(text)


@dataclass(frozen=True)
class IntegersMod(CoefficientRing):
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f'Z/n exige n >= 2 (recebido {self.n})')

    @property
    def label(self) -> str:
        return f'Z/{self.n}'

    def normalize(self, value: Any) -> int:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                return value.numerator * pow(value.denominator, -1, self.n) % self.n
            value = value.numerator
        return int(value) % self.n

    def is_unit(self, value: int) -> bool:
        return gcd(value, self.n) == 1

    def inverse(self, value: int) -> int:
        return pow(value, -1, self.n)


def ring_from_label(label: str) -> CoefficientRing:
    """
    Interpreta 'Z', 'Q' ou 'Z/n' (também 'ZZ', 'QQ', 'Zn').

    Raises:
        ValueError se o rótulo não for reconhecido
    """
    texto = label.strip().upper()
    if texto in ('Z', 'ZZ'):
        return Integers()
    if texto in ('Q', 'QQ'):
        return Rationals()
    if texto.startswith('Z/'):
        return IntegersMod(int(texto[2:]))
    if texto.startswith('Z') and texto[1:].isdigit():
        return IntegersMod(int(texto[1:]))
    raise ValueError(f'Anel desconhecido: {label!r}. Use Z, Q ou Z/n')
