"""
Matrizes inteiras densas e a forma normal de Smith.

As entradas são int do Python (precisão arbitrária). Posto, determinante e
forma de Smith são delegados ao sympy sobre ZZ.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    """Matriz inteira rows × cols em ordem de linhas."""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple(int(x) for x in self.entries))
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f'dimensões negativas: {self.rows}×{self.cols}')
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f'{len(self.entries)} entradas para uma matriz {self.rows}×{self.cols}'
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> 'IntMatrix':
        """Monta a partir de listas de linhas; `cols` fixa a largura quando não há linhas."""
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else (cols or 0)
        if cols is not None and rows and width != cols:
            raise ValueError(f'linhas com {width} colunas, esperado {cols}')
        for r in rows:
            if len(r) != width:
                raise ValueError('linhas de tamanhos diferentes')
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'IntMatrix':
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> 'IntMatrix':
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, rows: int, cols: int, values: Sequence[int]) -> 'IntMatrix':
        entries = [0] * (rows * cols)
        for i, v in enumerate(values):
            entries[i * cols + i] = v
        return cls(rows, cols, tuple(entries))

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def column(self, j: int) -> List[int]:
        return [self[i, j] for i in range(self.rows)]

    def transpose(self) -> 'IntMatrix':
        return IntMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def matmul(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.cols != other.rows:
            raise ValueError(f'formas incompatíveis: {self.shape} · {other.shape}')
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(out, cols=other.cols) if out else IntMatrix.zeros(0, other.cols)

    __matmul__ = matmul

    def hstack(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.rows != other.rows:
            raise ValueError(f'número de linhas diferente: {self.rows} e {other.rows}')
        a, b = self.to_rows(), other.to_rows()
        return IntMatrix(self.rows, self.cols + other.cols, tuple(x for i in range(self.rows) for x in a[i] + b[i]))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise ValueError('determinante de matriz não quadrada')
        if self.rows == 0:
            return 1
        return int(DomainMatrix([[ZZ(x) for x in row] for row in self.to_rows()], self.shape, ZZ).det())


@dataclass(frozen=True)
class SNFResult:
    """
    U · M · V = diag(d), com U e V unimodulares.

    d tem min(linhas, colunas) entradas não negativas, cada uma dividindo a
    seguinte (zeros no fim).
    """

    d: Tuple[int, ...]
    U: IntMatrix
    V: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x)

    @property
    def torsion(self) -> List[int]:
        return [x for x in self.d if x > 1]


def _to_domain(matrix: IntMatrix) -> DomainMatrix:
    return DomainMatrix([[ZZ(x) for x in row] for row in matrix.to_rows()], matrix.shape, ZZ)


def _from_domain(dm: DomainMatrix, cols: int) -> IntMatrix:
    return IntMatrix.from_rows([[int(x) for x in row] for row in dm.to_list()], cols=cols)


def _check_invariant_factors(d: Sequence[int]):
    if any(x < 0 for x in d):
        raise ArithmeticError(f'fator invariante negativo: {list(d)}')
    for a, b in zip(d, d[1:]):
        if (a == 0 and b != 0) or (a and b % a):
            raise ArithmeticError(f'fatores fora da cadeia de divisibilidade: {list(d)}')


def smith_normal_form(matrix: IntMatrix) -> SNFResult:
    """
    Forma normal de Smith com as matrizes de transformação.

    A decomposição vem de sympy (smith_normal_decomp sobre ZZ); o sinal de
    cada fator é normalizado em U e o resultado é conferido por
    multiplicação antes de ser devolvido.
    """
    m, n = matrix.shape
    if m == 0 or n == 0:
        return SNFResult((), IntMatrix.identity(m), IntMatrix.identity(n))

    smf, s, t = smith_normal_decomp(_to_domain(matrix))
    D = _from_domain(smf, n)
    U = _from_domain(s, m).to_rows()
    V = _from_domain(t, n)

    d = [D[i, i] for i in range(min(m, n))]
    for i, x in enumerate(d):
        if x < 0:
            d[i] = -x
            U[i] = [-y for y in U[i]]
    U = IntMatrix.from_rows(U, cols=m)
    d = tuple(d)

    _check_invariant_factors(d)
    if U.matmul(matrix).matmul(V) != IntMatrix.diagonal(m, n, d):
        raise ArithmeticError('forma de Smith inconsistente: U·M·V ≠ diag(d)')
    logger.debug(f'SNF {m}×{n}: d = {list(d)}')
    return SNFResult(d, U, V)


def rank_over_rationals(matrix: IntMatrix) -> int:
    """Posto sobre Q, calculado pelo sympy em aritmética exata."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return DomainMatrix(
        [[ZZ(x) for x in row] for row in matrix.to_rows()], matrix.shape, ZZ
    ).to_field().rank()
