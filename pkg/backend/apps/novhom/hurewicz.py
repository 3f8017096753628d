"""
Hurewicz em janelas finitas, pro-abelianização de Π e o teste de
Mittag-Leffler para sistemas finitos de grupos abelianos.

Grupos são apresentados por matrizes de relações em linhas (Z^n / linhas)
e os mapas agem em vetores linha: x ↦ x · M.
"""
import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from apps.fpgroup.abelian import AbelianGroup, AbelianizationMap
from apps.fpgroup.matrices import IntMatrix, smith_normal_form
from apps.fpgroup.tables import FiniteGroupTable, abelianization_map
from apps.freeprod.product import ProductWord, Window

from .exceptions import InvalidSystem, WindowTooShort

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LevelFamily:
    """Um vetor de G^ab por nível da janela, a partir do nível `lo`."""

    lo: int
    vectors: Tuple[Tuple[int, ...], ...]

    @property
    def window(self) -> Window:
        return Window(self.lo, self.lo + len(self.vectors) - 1)

    def at(self, level: int) -> Tuple[int, ...]:
        return self.vectors[level - self.lo]

    @property
    def is_zero(self) -> bool:
        return not any(any(v) for v in self.vectors)

    def shifted(self, k: int) -> 'LevelFamily':
        return LevelFamily(self.lo + k, self.vectors)

    def to_dict(self) -> dict:
        return {str(self.lo + i): list(v) for i, v in enumerate(self.vectors)}

    def render(self) -> str:
        return ' | '.join(
            f'{self.lo + i}: ({", ".join(str(x) for x in v)})' for i, v in enumerate(self.vectors)
        )


def hurewicz_map_word(x: ProductWord, amap: AbelianizationMap, window: Window) -> LevelFamily:
    """
    Abelianiza x letra a letra em ⊕_{k ∈ janela} G^ab. Letras abaixo de
    window.lo são descartadas (semântica de zip).

    Raises:
        ValueError: letra acima de window.hi, ou mapa sem imagens de elementos
    """
    vectors = [amap.zero() for _ in window.levels()]
    for level, element in x.letters:
        if level < window.lo:
            continue
        if level > window.hi:
            raise ValueError(f'letra no nível {level} acima da janela {window}')
        index = level - window.lo
        vectors[index] = amap.add(vectors[index], amap.of_element(element))
    return LevelFamily(window.lo, tuple(vectors))


def _vstack(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return IntMatrix.from_rows(a.to_rows() + b.to_rows(), cols=a.cols)


def _lattice_invariants(rows: IntMatrix) -> Tuple[int, int]:
    """(posto, produto dos fatores invariantes não nulos) do reticulado gerado pelas linhas."""
    nonzero = [d for d in smith_normal_form(rows).d if d]
    return len(nonzero), math.prod(nonzero)


def lattice_contains(big: IntMatrix, small: IntMatrix) -> bool:
    return _lattice_invariants(big) == _lattice_invariants(_vstack(big, small))


def same_lattice(a: IntMatrix, b: IntMatrix) -> bool:
    union = _lattice_invariants(_vstack(a, b))
    return _lattice_invariants(a) == union == _lattice_invariants(b)


def _matrix(raw, rows: int, cols: int, what: str) -> IntMatrix:
    try:
        if not raw:
            return IntMatrix.zeros(rows, cols)
        return IntMatrix.from_rows(raw, cols=cols)
    except (TypeError, ValueError) as e:
        raise InvalidSystem(f'{what}: {e}') from e


@dataclass(frozen=True)
class AbelianSystemWindow:
    """
    Sistema G_lo → G_{lo+1} → ... sobre uma janela finita.

    relations[j] apresenta o grupo do nível lo + j; maps[j] vai do nível
    lo + j para lo + j + 1.
    """

    relations: Tuple[IntMatrix, ...]
    maps: Tuple[IntMatrix, ...] = ()
    lo: int = 0
    _groups: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, 'relations', tuple(self.relations))
        object.__setattr__(self, 'maps', tuple(self.maps))
        if not self.relations:
            raise InvalidSystem('sistema sem grupos')
        if len(self.maps) != len(self.relations) - 1:
            raise InvalidSystem(f'{len(self.maps)} mapas para {len(self.relations)} grupos')
        for j, M in enumerate(self.maps):
            expected = (self.relations[j].cols, self.relations[j + 1].cols)
            if M.shape != expected:
                raise InvalidSystem(f'mapa {j} tem forma {M.shape}, esperado {expected}')
            if not lattice_contains(self.relations[j + 1], self.relations[j] @ M):
                raise InvalidSystem(f'mapa {j} não leva relações em relações')

    def __len__(self):
        return len(self.relations)

    @property
    def window(self) -> Window:
        return Window(self.lo, self.lo + len(self) - 1)

    def ngens(self, j: int) -> int:
        return self.relations[j].cols

    def group(self, j: int) -> AbelianGroup:
        if j not in self._groups:
            snf = smith_normal_form(self.relations[j])
            self._groups[j] = AbelianGroup.from_invariant_factors(snf.d, self.ngens(j))
        return self._groups[j]

    def composite(self, source: int, target: int) -> IntMatrix:
        """Mapa composto do índice `source` até `target` (source ≤ target)."""
        result = IntMatrix.identity(self.ngens(source))
        for M in self.maps[source:target]:
            result = result @ M
        return result

    def image(self, source: int, target: int) -> IntMatrix:
        """Reticulado (imagem + relações do alvo) que representa a imagem em G_target."""
        return _vstack(self.composite(source, target), self.relations[target])

    @classmethod
    def from_dict(cls, data: dict) -> 'AbelianSystemWindow':
        """
        {"lo": 0, "groups": [...], "maps": [...]}; cada grupo é uma lista de
        linhas de relações ou {"gens": n, "relations": [...]} quando não há
        linhas para fixar a largura.
        """
        if not isinstance(data, dict) or not isinstance(data.get('groups'), list):
            raise InvalidSystem('objeto com a lista "groups" esperado')
        relations = []
        for j, spec in enumerate(data['groups']):
            if isinstance(spec, dict):
                rows = spec.get('relations', [])
                ngens = spec.get('gens', len(rows[0]) if rows else 0)
            else:
                rows = spec
                ngens = len(rows[0]) if rows else 0
            relations.append(_matrix(rows, 0, ngens, f'grupo {j}'))
        maps = [
            _matrix(raw, relations[j].cols, relations[j + 1].cols, f'mapa {j}')
            for j, raw in enumerate(data.get('maps', []))
            if j + 1 < len(relations)
        ]
        if len(data.get('maps', [])) != len(maps):
            raise InvalidSystem(f'{len(data.get("maps", []))} mapas para {len(relations)} grupos')
        return cls(tuple(relations), tuple(maps), int(data.get('lo', 0)))

    @classmethod
    def from_json(cls, text: str) -> 'AbelianSystemWindow':
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidSystem(f'JSON inválido: {e}') from e
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: Union[str, Path]) -> 'AbelianSystemWindow':
        return cls.from_json(Path(path).read_text(encoding='utf-8'))

    def to_dict(self) -> dict:
        return {
            'lo': self.lo,
            'groups': [{'gens': R.cols, 'relations': R.to_rows()} for R in self.relations],
            'maps': [M.to_rows() for M in self.maps],
        }


def pro_abelianize(g: FiniteGroupTable, window: Window) -> AbelianSystemWindow:
    """
    Abelianizações de Π_h para h na janela: ⊕_{k ∈ [h, hi]} G^ab, com as
    projeções que matam o somando de baixo. Coordenadas do nível h primeiro.
    """
    amap = abelianization_map(g)
    width = amap.width
    relations = []
    for h in window.levels():
        blocks = window.hi - h + 1
        n = width * blocks
        rows = []
        for b in range(blocks):
            for i, m in enumerate(amap.moduli):
                if m:
                    row = [0] * n
                    row[b * width + i] = m
                    rows.append(row)
        relations.append(IntMatrix.from_rows(rows, cols=n))
    maps = []
    for j in range(len(relations) - 1):
        n, m = relations[j].cols, relations[j + 1].cols
        maps.append(IntMatrix.from_rows(
            [[1 if r - width == c else 0 for c in range(m)] for r in range(n)], cols=m
        ))
    logger.debug(f'Pro-abelianização: G^ab = {amap.group.pretty()}, janela {window}')
    return AbelianSystemWindow(tuple(relations), tuple(maps), window.lo)


@dataclass(frozen=True)
class LevelVerdict:
    level: int
    stable: bool
    unstable_sources: Tuple[int, ...] = ()


@dataclass(frozen=True)
class MLVerdict:
    """Veredito relativo à janela: nada garante estabilidade fora dela."""

    stable: bool
    K: int
    window: Window
    levels: Tuple[LevelVerdict, ...]

    def render(self) -> str:
        head = f'Mittag-Leffler (window-relative, window {self.window}, K={self.K}): '
        head += 'stable' if self.stable else 'not stable'
        lines = [head]
        for v in self.levels:
            if v.stable:
                lines.append(f'  level {v.level}: images stable')
            else:
                sources = ', '.join(str(s) for s in v.unstable_sources)
                lines.append(f'  level {v.level}: image differs from sources {sources}')
        return '\n'.join(lines)

    def to_dict(self) -> dict:
        return {
            'stable': self.stable,
            'K': self.K,
            'window': str(self.window),
            'window_relative': True,
            'levels': [
                {'level': v.level, 'stable': v.stable, 'unstable_sources': list(v.unstable_sources)}
                for v in self.levels
            ],
        }


def ml_check(system: AbelianSystemWindow, K: int) -> MLVerdict:
    """
    Para cada nível h0 com pelo menos K níveis abaixo na janela, compara as
    imagens em G_h0 vindas de todos os níveis h ≤ h0 − K com a de h0 − K.

    Raises:
        WindowTooShort: janela com K níveis ou menos
    """
    if K < 1:
        raise ValueError(f'K deve ser positivo (recebido {K})')
    if len(system) <= K:
        raise WindowTooShort(len(system), K)

    verdicts: List[LevelVerdict] = []
    for target in range(K, len(system)):
        reference = system.image(target - K, target)
        unstable = tuple(
            system.lo + source
            for source in range(target - K)
            if not same_lattice(system.image(source, target), reference)
        )
        verdicts.append(LevelVerdict(system.lo + target, not unstable, unstable))

    verdict = MLVerdict(all(v.stable for v in verdicts), K, system.window, tuple(verdicts))
    logger.info(f'ML (janela {system.window}, K={K}): estável={verdict.stable}')
    return verdict


def pro_abelian_groups(system: AbelianSystemWindow) -> List[AbelianGroup]:
    return [system.group(j) for j in range(len(system))]


def hurewicz_family_sum(families: Sequence[LevelFamily], amap: AbelianizationMap) -> LevelFamily:
    """Soma nível a nível de famílias sobre a mesma janela."""
    lo = families[0].lo
    vectors = [amap.zero() for _ in families[0].vectors]
    for fam in families:
        if fam.lo != lo or len(fam.vectors) != len(vectors):
            raise ValueError('famílias sobre janelas diferentes')
        vectors = [amap.add(a, b) for a, b in zip(vectors, fam.vectors)]
    return LevelFamily(lo, tuple(vectors))
