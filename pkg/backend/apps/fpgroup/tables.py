"""
Grupos finitos realizados como tabelas de multiplicação.

Os elementos são índices 0..order-1, com a identidade em 0 e os demais
numerados por busca em largura sobre os geradores positivos da
apresentação. O nome de cada elemento é a palavra encontrada nessa busca.
"""
import logging
from collections import deque
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from django.conf import settings

from apps.core.exceptions import BudgetExceeded

from .abelian import AbelianizationMap
from .presentation import Presentation
from .words import FreeWord

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FiniteGroupTable:
    """Tabela de Cayley imutável, compartilhada por todas as cópias G_k."""

    order: int
    mul: Tuple[Tuple[int, ...], ...]
    inv: Tuple[int, ...]
    identity: int
    generator_images: Tuple[int, ...]
    element_names: Tuple[str, ...] = ()
    element_words: Tuple[FreeWord, ...] = field(default=(), repr=False)
    presentation: Optional[Presentation] = field(default=None, repr=False)

    @classmethod
    def from_generator_action(cls, action: Sequence[Sequence[int]], presentation: Presentation) -> 'FiniteGroupTable':
        """
        Monta a tabela a partir da ação à direita dos geradores sobre as
        classes laterais do subgrupo trivial (classe 0 = identidade).
        """
        n = len(action)
        ngens = presentation.ngens
        label = {0: 0}
        parent = [0]
        via = [-1]
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for i in range(ngens):
                t = action[c][i]
                if t not in label:
                    label[t] = len(parent)
                    parent.append(label[c])
                    via.append(i)
                    queue.append(t)
        if len(label) != n:
            raise ArithmeticError(f'geradores alcançam {len(label)} de {n} classes')

        act = [[0] * ngens for _ in range(n)]
        for c, row in enumerate(action):
            for i, t in enumerate(row):
                act[label[c]][i] = label[t]

        # mul[e][f] = e · w_f, seguindo a árvore de busca de f
        columns = [list(range(n))]
        for f in range(1, n):
            base = columns[parent[f]]
            columns.append([act[base[e]][via[f]] for e in range(n)])
        mul = tuple(tuple(columns[f][e] for f in range(n)) for e in range(n))
        inv = tuple(row.index(0) for row in mul)

        words = [FreeWord()]
        for f in range(1, n):
            words.append(words[parent[f]] * FreeWord(((via[f], 1),)))
        names = tuple(w.render(presentation.generators) for w in words)

        generator_images = tuple(act[0][i] for i in range(ngens))
        return cls(n, mul, inv, 0, generator_images, names, tuple(words), presentation)

    def same_group(self, other: 'FiniteGroupTable') -> bool:
        """Mesma tabela de Cayley e mesmas imagens dos geradores (nomes não contam)."""
        if self is other:
            return True
        return (
            self.order == other.order
            and self.identity == other.identity
            and self.generator_images == other.generator_images
            and self.mul == other.mul
        )

    # Aritmética

    def multiply(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def power(self, a: int, n: int) -> int:
        base = a if n >= 0 else self.inv[a]
        result = self.identity
        for _ in range(abs(n) % self.element_order(a)):
            result = self.mul[result][base]
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul[x][a]
            k += 1
        return k

    def evaluate(self, word: FreeWord) -> int:
        """Imagem de uma palavra nos geradores da apresentação."""
        result = self.identity
        for g, e in word.syllables:
            result = self.mul[result][self.power(self.generator_images[g], e)]
        return result

    def closure(self, generators: Iterable[int]) -> Set[int]:
        """Subgrupo gerado (em grupo finito o monoide gerado já é subgrupo)."""
        generators = list(generators)
        reached = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in generators:
                    y = self.mul[x][s]
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
        return reached

    def name(self, a: int) -> str:
        if self.element_names:
            return self.element_names[a]
        return str(a)

    def element_by_name(self, name: str) -> int:
        try:
            return self.element_names.index(name)
        except ValueError:
            raise KeyError(f'elemento desconhecido {name!r}') from None

    def check_axioms(self) -> List[str]:
        """
        Confere identidade e inversos exaustivamente, a associatividade pelo
        teste de Light (basta testar o elemento do meio nos geradores) e os
        relatores da apresentação. Devolve a lista de falhas.
        """
        problems = []
        n = self.order
        for a in range(n):
            if self.mul[a][self.identity] != a or self.mul[self.identity][a] != a:
                problems.append(f'identidade falha em {a}')
            if self.mul[a][self.inv[a]] != self.identity or self.mul[self.inv[a]][a] != self.identity:
                problems.append(f'inverso falha em {a}')
        for g in set(self.generator_images):
            for a in range(n):
                ag = self.mul[a][g]
                for c in range(n):
                    if self.mul[ag][c] != self.mul[a][self.mul[g][c]]:
                        problems.append(f'associatividade falha em ({a}, {g}, {c})')
                        break
        if len(self.closure(self.generator_images)) != n:
            problems.append('geradores não geram a tabela')
        if self.presentation is not None:
            for r in self.presentation.relators:
                if self.evaluate(r) != self.identity:
                    problems.append(f'relator {r.render(self.presentation.generators)} não é trivial')
        return problems


def is_cyclic(g: FiniteGroupTable) -> bool:
    """Verdadeiro se algum elemento tem ordem igual à do grupo."""
    return any(g.element_order(a) == g.order for a in range(g.order))


def min_generators(g: FiniteGroupTable, cap: Optional[int] = None) -> int:
    """
    Menor k ≤ cap tal que alguma k-upla gera g; cap + 1 se nenhuma gerar.

    Raises:
        BudgetExceeded: ordem acima de settings.NOVK_MIN_GENERATORS_BUDGET
    """
    if cap is None:
        cap = getattr(settings, 'NOVK_MIN_GENERATORS_CAP', 3)
    budget = getattr(settings, 'NOVK_MIN_GENERATORS_BUDGET', 512)
    if g.order > budget:
        raise BudgetExceeded('min_generators (ordem do grupo)', budget, g.order)
    if g.order == 1:
        return 0

    candidates = [a for a in range(g.order) if a != g.identity]
    for k in range(1, cap + 1):
        if k == 1:
            if is_cyclic(g):
                return 1
            continue
        for combo in combinations(candidates, k):
            if len(g.closure(combo)) == g.order:
                logger.debug(f'min_generators: {k} geradores, por exemplo {combo}')
                return k
    return cap + 1


def abelianization_map(table: FiniteGroupTable) -> AbelianizationMap:
    """Mapa elemento → coordenadas canônicas em G^ab, pela palavra de cada elemento."""
    if table.presentation is None:
        raise ValueError('tabela sem apresentação de origem')
    base = AbelianizationMap.from_presentation(table.presentation)
    images = tuple(base.of_word(w) for w in table.element_words)
    return replace(base, element_images=images)
