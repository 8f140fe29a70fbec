"""
Construção exata do conjunto fracamente homogêneo 𝔢 = K_∞ ∪ ⋃ Ẽ_{n,j} sobre o
conjunto de Cantor dos terços médios, da medida de Cantor e das verificações
de decaimento da transformada nesse exemplo.

Índices (n, j), 1 ≤ j ≤ 2ⁿ, seguem a ordem lexicográfica. O cronograma é
k(1,1) = semente, k(sucessor) = 3·k, m = k − n. O bloco Ẽ_{n,j} é a imagem
afim em K_{n,j} de E_m, os terços médios fechados das 2^{m−1} lacunas criadas
no estágio m da construção em [0, 1].

Todas as coordenadas são racionais com denominador potência de 3 e são
calculadas com fractions.Fraction. Como k triplica a cada índice, blocos
posteriores só existem implicitamente (CantorBlock); enumerações explícitas
respeitam max_intervalos e recursões exatas respeitam MAX_NIVEL_EXATO.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from src.config import RunConfig, Sign, resolver_config
from src.exceptions import InfeasibleError
from src.intervals import IntervalUnion
from src.level_sets import gamma
from src.measure_core import Measure, total_mass
from src.reports import CheckReport, ReportBuilder
from src.transform_eval import real_part_on_axis

# Maior k para o qual recursões em aritmética racional exata são executadas
MAX_NIVEL_EXATO = 2000

QUATRO_NONOS = Fraction(4, 9)
CINCO_NONOS = Fraction(5, 9)
UM_TERCO = Fraction(1, 3)
DOIS_TERCOS = Fraction(2, 3)
LN2 = math.log(2.0)
LN3 = math.log(3.0)


# ============================================================================
# ÍNDICES E CRONOGRAMA
# ============================================================================

@dataclass(frozen=True, order=True)
class CantorIndex:
    """Índice (n, j) de K_{n,j}; a ordem de comparação é a lexicográfica."""
    n: int
    j: int

    def __post_init__(self):
        if self.n < 1 or not 1 <= self.j <= 2 ** self.n:
            raise ValueError(f"Índice de Cantor inválido: ({self.n}, {self.j})")

    @property
    def ordinal(self) -> int:
        """Posição na ordem lexicográfica, começando em 0 para (1,1)."""
        return 2 ** self.n - 2 + self.j - 1

    @classmethod
    def from_ordinal(cls, ordinal: int) -> "CantorIndex":
        if ordinal < 0:
            raise ValueError(f"Ordinal negativo: {ordinal}")
        n = (ordinal + 2).bit_length() - 1
        return cls(n, ordinal - (2 ** n - 2) + 1)

    @classmethod
    def last(cls, n: int) -> "CantorIndex":
        return cls(n, 2 ** n)

    @classmethod
    def parse(cls, texto: str) -> "CantorIndex":
        """Interpreta "n,j" ou "(n,j)"."""
        partes = texto.strip().strip("()").split(",")
        if len(partes) != 2:
            raise ValueError(f"Índice de Cantor inválido: '{texto}'")
        return cls(int(partes[0]), int(partes[1]))

    def __str__(self) -> str:
        return f"({self.n},{self.j})"


def index_successor(i: CantorIndex) -> CantorIndex:
    if i.j < 2 ** i.n:
        return CantorIndex(i.n, i.j + 1)
    return CantorIndex(i.n + 1, 1)


def index_predecessor(i: CantorIndex) -> CantorIndex:
    """(n, j−1), ou (n−1, 2^{n−1}) quando j = 1."""
    if i.n == 1 and i.j == 1:
        raise ValueError("(1,1) não tem predecessor")
    if i.j > 1:
        return CantorIndex(i.n, i.j - 1)
    return CantorIndex.last(i.n - 1)


def indices_ate(ultimo: CantorIndex) -> List[CantorIndex]:
    """Índices de (1,1) até ultimo, inclusive, em ordem."""
    return [CantorIndex.from_ordinal(o) for o in range(ultimo.ordinal + 1)]


@dataclass(frozen=True)
class KSchedule:
    """
    Cronograma k(n, j) com k(1,1) = seed_k11 e k(sucessor) = 3·k.

    Attributes:
        seed_k11: k(1,1) (>= 2, então m(1,1) >= 1)
        values: k por índice até o índice final pedido
    """
    seed_k11: int
    values: Dict[CantorIndex, int] = field(default_factory=dict)

    def k(self, i: CantorIndex) -> int:
        valor = self.values.get(i)
        return valor if valor is not None else self.seed_k11 * 3 ** i.ordinal

    def m(self, i: CantorIndex) -> int:
        return self.k(i) - i.n

    def indices(self) -> List[CantorIndex]:
        return sorted(self.values)


def k_schedule(seed_k11: int, upto: CantorIndex) -> KSchedule:
    """
    Raises:
        ValueError: seed_k11 < 2
    """
    if seed_k11 < 2:
        raise ValueError(f"k(1,1) deve ser >= 2 (recebido {seed_k11})")
    valores = {}
    k = seed_k11
    for i in indices_ate(upto):
        valores[i] = k
        k *= 3
    return KSchedule(seed_k11, valores)


# ============================================================================
# INTERVALOS DE CANTOR
# ============================================================================

@dataclass(frozen=True)
class RationalInterval:
    left: Fraction
    right: Fraction

    def __post_init__(self):
        if not self.left < self.right:
            raise ValueError(f"Intervalo racional degenerado: [{self.left}, {self.right}]")

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    def as_pair(self) -> Tuple[Fraction, Fraction]:
        return self.left, self.right


def _numeradores_nivel(n: int) -> np.ndarray:
    """Numeradores (sobre 3ⁿ) das esquerdas dos 2ⁿ intervalos de K_n, em ordem."""
    if n > 39:
        raise InfeasibleError(f"Nível {n} excede a faixa inteira de 64 bits")
    numeradores = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        numeradores = (3 * numeradores[:, None] + np.array([0, 2], dtype=np.int64)).ravel()
    return numeradores


def interval_left(i: CantorIndex) -> Fraction:
    """Extremo esquerdo de K_{n,j}: dígitos ternários 2·b dos bits de j−1."""
    bits = i.j - 1
    numerador = 0
    for posicao in range(i.n - 1, -1, -1):
        numerador = 3 * numerador + 2 * ((bits >> posicao) & 1)
    return Fraction(numerador, 3 ** i.n)


def k_intervals(n: int, config: Optional[RunConfig] = None) -> List[RationalInterval]:
    """
    Os 2ⁿ intervalos K_{n,j}, cada um de comprimento 3⁻ⁿ, em ordem crescente.

    Raises:
        InfeasibleError: n acima de profundidade_maxima
    """
    config = resolver_config(config)
    if n < 0:
        raise ValueError(f"Nível negativo: {n}")
    if n > config.profundidade_maxima:
        raise InfeasibleError(f"Nível {n} acima do limite de profundidade {config.profundidade_maxima}")
    denominador = 3 ** n
    return [
        RationalInterval(Fraction(int(p), denominador), Fraction(int(p) + 1, denominador))
        for p in _numeradores_nivel(n)
    ]


def cantor_level_of(x: Fraction, n: int) -> CantorIndex:
    """
    Índice do intervalo de nível n que contém x.

    Raises:
        ValueError: x ∉ K_n
    """
    y = Fraction(x)
    if not 0 <= y <= 1:
        raise ValueError(f"{x} fora de [0, 1]")
    bits = 0
    for _ in range(n):
        if y <= UM_TERCO:
            bits, y = 2 * bits, 3 * y
        elif y >= DOIS_TERCOS:
            bits, y = 2 * bits + 1, 3 * y - 2
        else:
            raise ValueError(f"{x} não pertence a K_{n}")
    return CantorIndex(n, bits + 1)


def dist_to_cantor(x) -> Fraction:
    """
    Distância exata de um racional ao conjunto de Cantor K_∞.

    Em [0, 1/3] a distância é d(3x)/3 e em [2/3, 1] é d(3x − 2)/3; a órbita de
    um racional é finita, e revisitar um valor significa x ∈ K_∞.
    """
    x = Fraction(x)
    if x < 0:
        return -x
    if x > 1:
        return x - 1
    escala = Fraction(1)
    vistos = set()
    while x not in vistos:
        vistos.add(x)
        if x <= UM_TERCO:
            x = 3 * x
        elif x >= DOIS_TERCOS:
            x = 3 * x - 2
        else:
            return escala * min(x - UM_TERCO, DOIS_TERCOS - x)
        escala /= 3
    return Fraction(0)


def _janela_arvore(lo: Fraction, hi: Fraction, nivel: int, recorte: Tuple[Fraction, Fraction]) -> Fraction:
    """
    Σ |J ∩ (lo, hi)| sobre as sub-peças J = [p + r0·s, p + r1·s], s = 3^{−nivel},
    dos intervalos [p, p + s] de nível `nivel` da construção em [0, 1].

    Nós contidos na janela contribuem de uma vez; só os que cruzam uma borda
    da janela são subdivididos.
    """
    if hi <= 0 or lo >= 1:
        return Fraction(0)
    r0, r1 = recorte
    folha = Fraction(1, 3 ** nivel)
    total = Fraction(0)
    pilha = [(Fraction(0), 0, Fraction(1))]
    while pilha:
        p, nivel_no, tamanho = pilha.pop()
        if p + tamanho <= lo or p >= hi:
            continue
        if nivel_no == nivel:
            a, b = p + r0 * tamanho, p + r1 * tamanho
            sobreposicao = min(b, hi) - max(a, lo)
            if sobreposicao > 0:
                total += sobreposicao
        elif lo <= p and p + tamanho <= hi:
            total += 2 ** (nivel - nivel_no) * (r1 - r0) * folha
        else:
            filho = tamanho / 3
            pilha.append((p, nivel_no + 1, filho))
            pilha.append((p + 2 * filho, nivel_no + 1, filho))
    return total


# ============================================================================
# BLOCOS Ẽ
# ============================================================================

def e_block(i: CantorIndex, m: int, config: Optional[RunConfig] = None) -> List[RationalInterval]:
    """
    Peças de E_{n,j,m}: imagem afim de E_m em K_{n,j}, 2^{m−1} intervalos de
    comprimento 3^{−n−m−1}.

    Raises:
        InfeasibleError: 2^{m−1} acima de max_intervalos
    """
    config = resolver_config(config)
    if m < 1:
        raise ValueError(f"m deve ser >= 1 (recebido {m})")
    if 2 ** (m - 1) > config.max_intervalos:
        raise InfeasibleError(f"E_{{{i},{m}}} tem 2^{m - 1} peças (limite {config.max_intervalos})")
    denominador = 3 ** (i.n + m + 1)
    # Esquerda de K_{n,j} sobre 3^{n+m+1}
    base = interval_left(i) * denominador
    base = base.numerator
    return [
        RationalInterval(
            Fraction(base + 9 * int(p) + 4, denominador),
            Fraction(base + 9 * int(p) + 5, denominador),
        )
        for p in _numeradores_nivel(m - 1)
    ]


@dataclass(frozen=True)
class CantorBlock:
    """
    Bloco Ẽ_{n,j} = E_{n,j,m(n,j)} representado implicitamente.

    Attributes:
        index: (n, j)
        k: k(n, j) = n + m
    """
    index: CantorIndex
    k: int

    @property
    def m(self) -> int:
        return self.k - self.index.n

    @property
    def count(self) -> int:
        return 2 ** (self.m - 1)

    @property
    def offset(self) -> Fraction:
        return interval_left(self.index)

    @property
    def escala(self) -> Fraction:
        return Fraction(1, 3 ** self.index.n)

    @property
    def exact_feasible(self) -> bool:
        return self.k <= MAX_NIVEL_EXATO

    def length(self) -> Fraction:
        """2^{m−1}/3^{k+1} = (2/3)^k/(2^{n+1}·3)."""
        return Fraction(2 ** (self.m - 1), 3 ** (self.k + 1))

    def length_float(self) -> float:
        return math.exp((self.m - 1) * LN2 - (self.k + 1) * LN3)

    def hull(self) -> Tuple[Fraction, Fraction]:
        margem = Fraction(4, 3 ** (self.m + 1))
        return self.offset + self.escala * margem, self.offset + self.escala * (1 - margem)

    def hull_float(self) -> Tuple[float, float]:
        deslocamento = float(self.offset)
        escala = 3.0 ** -self.index.n
        margem = 4.0 * math.exp(-(self.m + 1) * LN3)
        return deslocamento + escala * margem, deslocamento + escala * (1.0 - margem)

    def distance_to_cantor(self) -> Fraction:
        return Fraction(1, 3 ** (self.k + 1))

    def distance_to_cantor_float(self) -> float:
        return math.exp(-(self.k + 1) * LN3)

    def pieces(self, config: Optional[RunConfig] = None) -> List[RationalInterval]:
        return e_block(self.index, self.m, config)

    def window_measure(self, x, a) -> Fraction:
        """|Ẽ ∩ (x−a, x+a)| exato."""
        if not self.exact_feasible:
            raise InfeasibleError(f"Bloco {self.index} com k={self.k} acima do nível exato {MAX_NIVEL_EXATO}")
        x, a = Fraction(x), Fraction(a)
        lo = (x - a - self.offset) / self.escala
        hi = (x + a - self.offset) / self.escala
        return self.escala * _janela_arvore(lo, hi, self.m - 1, (QUATRO_NONOS, CINCO_NONOS))

    def sample_points(self, rng: np.random.Generator, quantidade: int) -> List[Fraction]:
        """Pontos médios de peças sorteadas por caminhos aleatórios na árvore."""
        m = self.m
        denominador = 3 ** (m + 1)
        pontos = []
        for _ in range(quantidade):
            numerador = 0
            for bit in rng.integers(0, 2, size=m - 1).tolist():
                numerador = 3 * numerador + 2 * bit
            centro = Fraction(2 * (9 * numerador + 4) + 1, 2 * denominador)
            pontos.append(self.offset + self.escala * centro)
        return pontos


# ============================================================================
# TRUNCAMENTOS DE 𝔢
# ============================================================================

@dataclass(frozen=True)
class TruncatedSet:
    """
    Truncamento K_N ∪ ⋃_{(n,j) ≤ (N, 2^N)} Ẽ_{n,j} (ou só os blocos).

    Blocos com k > N estão contidos em K_N; blocos com k ≤ N são disjuntos dele.
    """
    N: int
    schedule: KSchedule
    incluir_k: bool = True

    @property
    def ultimo(self) -> CantorIndex:
        return CantorIndex.last(self.N)

    @property
    def blocks(self) -> List[CantorBlock]:
        return [CantorBlock(i, self.schedule.k(i)) for i in indices_ate(self.ultimo)]

    def _blocos_visiveis(self) -> List[CantorBlock]:
        if not self.incluir_k:
            return self.blocks
        return [b for b in self.blocks if b.k <= self.N]

    def window_measure(self, x, a) -> Fraction:
        x, a = Fraction(x), Fraction(a)
        total = Fraction(0)
        if self.incluir_k:
            total += _janela_arvore(x - a, x + a, self.N, (Fraction(0), Fraction(1)))
        for bloco in self._blocos_visiveis():
            total += bloco.window_measure(x, a)
        return total

    def blocks_window_measure(self, x, a) -> Fraction:
        """Medida de janela dos blocos exatamente viáveis (cota inferior para 𝔢)."""
        return sum(
            (b.window_measure(x, a) for b in self.blocks if b.exact_feasible), Fraction(0)
        )

    def measure(self) -> Fraction:
        total = Fraction(2 ** self.N, 3 ** self.N) if self.incluir_k else Fraction(0)
        for bloco in self._blocos_visiveis():
            if not bloco.exact_feasible:
                raise InfeasibleError(f"Comprimento exato do bloco {bloco.index} inviável")
            total += bloco.length()
        return total

    def to_interval_union(self, config: Optional[RunConfig] = None) -> IntervalUnion:
        """
        Raises:
            InfeasibleError: mais intervalos que max_intervalos
        """
        config = resolver_config(config)
        blocos = self._blocos_visiveis()
        quantidade = (2 ** self.N if self.incluir_k else 0) + sum(b.count for b in blocos)
        if quantidade > config.max_intervalos:
            raise InfeasibleError(
                f"Truncamento N={self.N} exige {quantidade} intervalos (limite {config.max_intervalos})"
            )
        pares = []
        if self.incluir_k:
            pares.extend(r.as_pair() for r in k_intervals(self.N, config))
        for bloco in blocos:
            pares.extend(r.as_pair() for r in bloco.pieces(config))
        return IntervalUnion.from_pairs(pares)


def _validar_truncamento(N: int, config: RunConfig):
    if N < 1:
        raise ValueError(f"Nível de truncamento deve ser >= 1 (recebido {N})")
    if N > config.profundidade_maxima:
        raise InfeasibleError(f"N={N} acima do limite de profundidade {config.profundidade_maxima}")


def truncated_set(
    N: int,
    seed: Optional[int] = None,
    somente_blocos: bool = False,
    config: Optional[RunConfig] = None,
) -> TruncatedSet:
    config = resolver_config(config)
    _validar_truncamento(N, config)
    semente = seed if seed is not None else config.seed_k
    return TruncatedSet(N, k_schedule(semente, CantorIndex.last(N)), not somente_blocos)


def build_set(
    N: int,
    seed: Optional[int] = None,
    somente_blocos: bool = False,
    config: Optional[RunConfig] = None,
) -> IntervalUnion:
    """
    Truncamento de 𝔢 como IntervalUnion com extremos racionais exatos.

    Com somente_blocos=True devolve apenas ⋃ Ẽ_{n,j}, que mostra os blocos
    contidos em K_N.
    """
    config = resolver_config(config)
    return truncated_set(N, seed, somente_blocos, config).to_interval_union(config)


def set_from_spec(documento: Mapping, config: Optional[RunConfig] = None) -> IntervalUnion:
    """
    Conjunto a partir de {"intervals": ...}/{"exact": ...} ou
    {"cantor": {"levels": N, "seed_k": k, "blocks_only": false}}.
    """
    if not isinstance(documento, Mapping):
        raise ValueError("Descrição de conjunto deve ser um objeto JSON")
    if "cantor" not in documento:
        return IntervalUnion.from_dict(documento)
    parametros = documento["cantor"]
    try:
        niveis = int(parametros["levels"])
        semente = int(parametros.get("seed_k", resolver_config(config).seed_k))
        somente_blocos = bool(parametros.get("blocks_only", False))
    except (KeyError, TypeError, ValueError) as erro:
        raise ValueError(f"Especificação de Cantor malformada: {erro}") from erro
    return build_set(niveis, semente, somente_blocos, config)


# ============================================================================
# MEDIDA DE CANTOR
# ============================================================================

def cantor_atoms(L: int, config: Optional[RunConfig] = None) -> Measure:
    """
    2^L átomos de peso 2^{−L} nos pontos médios de K_{L,j}.

    Para dist(x, K_L) ≥ d, |F_aprox(x) − F_μ(x)| ≤ 3^{−L}/d².
    """
    config = resolver_config(config)
    if L < 0:
        raise ValueError(f"Nível negativo: {L}")
    if L > config.profundidade_maxima:
        raise InfeasibleError(f"Nível {L} acima do limite de profundidade {config.profundidade_maxima}")
    posicoes = (_numeradores_nivel(L).astype(float) + 0.5) / 3.0 ** L
    return Measure(posicoes, np.full(posicoes.size, 2.0 ** -L))


def atom_error_bound(L: int, d: float, massa: float = 1.0) -> float:
    """Cota de transporte: massa·3^{−L}/d²."""
    if not d > 0:
        return math.inf
    return massa * 3.0 ** -L / d ** 2


def _fatia_atomos(i: CantorIndex, L: int) -> slice:
    tamanho = 2 ** (L - i.n)
    return slice((i.j - 1) * tamanho, i.j * tamanho)


def near_indices(i: CantorIndex) -> List[CantorIndex]:
    """K_{n,j} e o intervalo do predecessor ((1,1) fica só)."""
    if i.n == 1 and i.j == 1:
        return [i]
    return [i, index_predecessor(i)]


def split_at(i: CantorIndex, L: int, config: Optional[RunConfig] = None) -> Tuple[Measure, Measure]:
    """
    (próxima, distante): átomos de cantor_atoms(L) em K_{n,j} ∪ K_{predecessor} e o resto.

    Raises:
        ValueError: L < n
    """
    if L < i.n:
        raise ValueError(f"Nível L={L} menor que n={i.n}")
    atomos = cantor_atoms(L, config)
    perto = np.zeros(atomos.n_atoms, dtype=bool)
    for indice in near_indices(i):
        perto[_fatia_atomos(indice, L)] = True
    return (
        Measure(atomos.positions[perto], atomos.weights[perto]),
        Measure(atomos.positions[~perto], atomos.weights[~perto]),
    )


def _intervalos_distantes(i: CantorIndex) -> np.ndarray:
    """Esquerdas (float) dos intervalos de nível n fora da região próxima."""
    esquerdas = _numeradores_nivel(i.n).astype(float) / 3.0 ** i.n
    manter = np.ones(esquerdas.size, dtype=bool)
    for indice in near_indices(i):
        tamanho = 2 ** (i.n - indice.n)
        manter[(indice.j - 1) * tamanho:indice.j * tamanho] = False
    return esquerdas[manter]


def _distancia_a_intervalos(a: np.ndarray, b: np.ndarray, esquerdas: np.ndarray, largura: float) -> np.ndarray:
    """Distância de cada [a, b] à união dos intervalos [l, l + largura]."""
    a, b = np.atleast_1d(a), np.atleast_1d(b)
    if esquerdas.size == 0:
        return np.full(a.shape, np.inf)
    separacao = np.maximum(esquerdas[None, :] - b[:, None], a[:, None] - (esquerdas[None, :] + largura))
    return np.clip(separacao, 0.0, None).min(axis=1)


def _excede_viabilidade(k: int, config: RunConfig) -> bool:
    return k * math.log10(3.0) >= math.log10(config.limite_viabilidade)


# ============================================================================
# VERIFICAÇÕES
# ============================================================================

def _avaliar_cota_distante(
    i: CantorIndex,
    cronograma: KSchedule,
    cota: float,
    rng: np.random.Generator,
    amostras_por_bloco: int,
    config: RunConfig,
) -> Optional[Tuple[float, float, int]]:
    """
    (folga da cota 3^{k(anterior)}, folga da cota 3ⁿ em Ẽ_i, L usado), ou None
    se nenhum L até profundidade_avaliacao leva o erro a 1% das cotas.
    """
    blocos = [CantorBlock(b, cronograma.k(b)) for b in indices_ate(i)]
    xs, ks, proprio = [], [], []
    for bloco in blocos:
        for ponto in bloco.sample_points(rng, amostras_por_bloco):
            xs.append(float(ponto))
            ks.append(bloco.k)
            proprio.append(bloco.index == i)
    xs, ks, proprio = np.array(xs), np.array(ks), np.array(proprio)
    distantes = _intervalos_distantes(i)
    d_nivel = _distancia_a_intervalos(xs, xs, distantes, 3.0 ** -i.n)
    cota_propria = 3.0 ** i.n

    for L in range(i.n, config.profundidade_avaliacao + 1):
        _, distante = split_at(i, L, config)
        massa = total_mass(distante)
        if massa == 0:
            return 1.0, 1.0, L
        d_bloco = np.where(L >= ks, np.exp(-(ks + 1) * LN3), 0.0)
        d = np.maximum(d_nivel, d_bloco)
        if np.any(d <= 0):
            continue
        erro = massa * 3.0 ** -L / d ** 2
        if erro.max() > 0.01 * cota or erro[proprio].max() > 0.01 * cota_propria:
            continue
        valores = np.abs(real_part_on_axis(distante, xs)) + erro
        return (
            1.0 - float(valores.max()) / cota,
            1.0 - float(valores[proprio].max()) / cota_propria,
            L,
        )
    return None


def check_lemma42(
    N: int = 2,
    seed: Optional[int] = None,
    samples_per_block: int = 16,
    config: Optional[RunConfig] = None,
    minimo_viaveis: int = 2,
) -> CheckReport:
    """
    |F̃_{n,j}| ≤ 3^{k(predecessor)} nos blocos Ẽ_b, b ≤ (n, j), e |F̃_{n,j}| ≤ 3ⁿ em Ẽ_{n,j}.

    F̃ é a transformada da parte distante da medida de Cantor, aproximada por
    cantor_atoms(L) com a cota de transporte somada ao valor absoluto.
    Índices com 3^k acima de limite_viabilidade são pulados com nota; o
    relatório exige pelo menos minimo_viaveis índices avaliados.
    """
    config = resolver_config(config)
    semente = seed if seed is not None else config.seed_k
    rel = ReportBuilder(
        "lemma42", {"N": N, "seed_k": semente, "samples_per_block": samples_per_block}, config.tol_identidade
    )
    with rel.protegido():
        _validar_truncamento(N, config)
        ultimo = CantorIndex.last(N)
        cronograma = k_schedule(semente, ultimo)
        rng = np.random.default_rng(config.semente_aleatoria)
        viaveis = 0
        for i in indices_ate(ultimo):
            if i == CantorIndex(1, 1):
                rel.nota("(1,1): sem predecessor, pulado")
                continue
            k_anterior = cronograma.k(index_predecessor(i))
            if _excede_viabilidade(k_anterior, config):
                rel.nota(f"{i}: 3^{k_anterior} acima do limite de viabilidade, pulado")
                continue
            resultado = _avaliar_cota_distante(i, cronograma, 3.0 ** k_anterior, rng, samples_per_block, config)
            if resultado is None:
                rel.nota(f"{i}: erro de aproximação acima de 1% até L={config.profundidade_avaliacao}, pulado")
                continue
            folga, folga_propria, L = resultado
            viaveis += 1
            rel.afirmar(f"{i}: |F̃| ≤ 3^{k_anterior} (L={L})", folga)
            rel.afirmar(f"{i}: |F̃| ≤ 3^{i.n} no próprio bloco (L={L})", folga_propria)
        rel.nota(f"{viaveis} índices viáveis")
        rel.afirmar(f"≥ {minimo_viaveis} índices viáveis", float(viaveis - minimo_viaveis))
    return rel.build()


def window_index_for(t: float, cronograma: KSchedule, ultimo: CantorIndex) -> CantorIndex:
    """
    Índice (n, j) em [(1,2), ultimo] com 3^{k(predecessor)} < t ≤ 3^{k(n,j)}.

    Raises:
        InfeasibleError: t fora de todas as janelas
    """
    if not t > 0:
        raise ValueError(f"t deve ser positivo (recebido {t})")
    expoente = math.log(t) / LN3
    for i in indices_ate(ultimo)[1:]:
        if cronograma.k(index_predecessor(i)) < expoente <= cronograma.k(i):
            return i
    raise InfeasibleError(f"t={t} fora das janelas dos índices até {ultimo}")


def _comprimento_monotono(mu: Measure, l: float, r: float, limiar: float, erro: float) -> float:
    """
    Cota superior de |{x ∈ [l, r] : |F(x)| ≥ limiar}| para F crescente em [l, r]
    conhecida a menos de erro.
    """
    nivel = limiar - erro
    if nivel <= 0:
        return r - l

    def f(x: float) -> float:
        return float(real_part_on_axis(mu, [x])[0])

    fl, fr = f(l), f(r)
    total = 0.0
    if fr >= nivel:
        total += (r - l) if fl >= nivel else r - brentq(lambda x: f(x) - nivel, l, r, xtol=1e-300)
    if fl <= -nivel:
        total += (r - l) if fr <= -nivel else brentq(lambda x: f(x) + nivel, l, r, xtol=1e-300) - l
    return min(total, r - l)


def _cauda_truncamento(cronograma: KSchedule, ultimo: CantorIndex) -> float:
    """Σ_{b > ultimo} |Ẽ_b| ≤ (2/3)^{k(sucessor)}/2^{N+2}."""
    k_proximo = cronograma.k(index_successor(ultimo))
    return math.exp(k_proximo * math.log(2.0 / 3.0)) / 2.0 ** (ultimo.n + 2)


def _termo_distante(
    i: CantorIndex, t: float, cronograma: KSchedule, ultimo: CantorIndex, config: RunConfig, rel: ReportBuilder
) -> float:
    """Cota superior de 2t·|{x ∈ 𝔢 : |F̃_{n,j}(x)| ≥ t}|."""
    L = config.profundidade_avaliacao
    _, distante = split_at(i, L, config)
    massa = total_mass(distante)
    distantes = _intervalos_distantes(i)
    comprimento = 0.0
    for b in indices_ate(i):
        bloco = CantorBlock(b, cronograma.k(b))
        if massa == 0:
            continue
        l, r = bloco.hull_float()
        d_envoltoria = float(_distancia_a_intervalos(np.array([l]), np.array([r]), distantes, 3.0 ** -i.n)[0])
        if d_envoltoria > 0:
            comprimento += _comprimento_monotono(distante, l, r, t, atom_error_bound(L, d_envoltoria, massa))
        elif bloco.count <= config.max_intervalos and L >= bloco.k:
            erro = atom_error_bound(L, bloco.distance_to_cantor_float(), massa)
            for peca in bloco.pieces(config):
                comprimento += _comprimento_monotono(distante, float(peca.left), float(peca.right), t, erro)
        else:
            comprimento += bloco.length_float()
            rel.nota(f"{b}: bloco contado por inteiro no termo distante")
    for b in indices_ate(ultimo)[i.ordinal + 1:]:
        comprimento += CantorBlock(b, cronograma.k(b)).length_float()
    comprimento += _cauda_truncamento(cronograma, ultimo)
    return 2.0 * t * comprimento


def _nivel_direto(t: float, cronograma: KSchedule, ultimo: CantorIndex, config: RunConfig, rel: ReportBuilder) -> float:
    """Cota superior de 2t·|{x ∈ 𝔢 : |F(x)| ≥ t}| com a medida de Cantor inteira."""
    L = config.profundidade_avaliacao
    medida = cantor_atoms(L, config)
    comprimento = 0.0
    for b in indices_ate(ultimo):
        bloco = CantorBlock(b, cronograma.k(b))
        nivel_minimo = 2 * bloco.k + 2 + math.log(100.0 / t) / LN3
        if L >= bloco.k and L > nivel_minimo and bloco.count <= config.max_intervalos:
            erro = atom_error_bound(L, bloco.distance_to_cantor_float())
            for peca in bloco.pieces(config):
                comprimento += _comprimento_monotono(medida, float(peca.left), float(peca.right), t, erro)
        else:
            comprimento += bloco.length_float()
            rel.nota(f"{b}: bloco contado por inteiro na contagem direta")
    comprimento += _cauda_truncamento(cronograma, ultimo)
    return 2.0 * t * comprimento


def check_thm16_decay(
    N: int = 2,
    seed: Optional[int] = None,
    t: float = 50.0,
    config: Optional[RunConfig] = None,
) -> CheckReport:
    """
    2t·|{x ∈ 𝔢 : |F_μ(x)| ≥ t}| ≤ 13·2⁻ⁿ na janela 3^{k(predecessor)} < t ≤ 3^{k(n,j)}.

    A contagem direta nas peças dos blocos enumeráveis usa o nível t. A
    decomposição |F| ≥ 2t ⇒ |F_próxima| ≥ t ou |F̃| ≥ t limita o conjunto
    menor {|F| ≥ 2t}: termo próximo pela igualdade de Boole (≤ 12·2⁻ⁿ) e termo
    distante pela monotonia de F̃ nas envoltórias dos blocos (≤ 2⁻ⁿ).
    """
    config = resolver_config(config)
    semente = seed if seed is not None else config.seed_k
    rel = ReportBuilder("thm16", {"N": N, "seed_k": semente, "t": t}, config.tol_identidade)
    with rel.protegido():
        _validar_truncamento(N, config)
        ultimo = CantorIndex.last(N)
        cronograma = k_schedule(semente, ultimo)
        i = window_index_for(t, cronograma, ultimo)
        cota = 13.0 * 2.0 ** -i.n
        rel.nota(f"janela do índice {i}: 3^{cronograma.k(index_predecessor(i))} < t ≤ 3^{cronograma.k(i)}")

        proxima, _ = split_at(i, min(i.n + 6, config.profundidade_maxima), config)
        termo_proximo = 2.0 * t * float(gamma(proxima, t, Sign.ABS, config).length())
        rel.afirmar("termo próximo ≤ 12·2^-n", (12.0 * 2.0 ** -i.n - termo_proximo) / cota)

        termo_distante = _termo_distante(i, t, cronograma, ultimo, config, rel)
        rel.afirmar("termo distante ≤ 2^-n", (2.0 ** -i.n - termo_distante) / cota)
        rel.afirmar("soma ≤ 13·2^-n", (cota - termo_proximo - termo_distante) / cota)

        direto = _nivel_direto(t, cronograma, ultimo, config, rel)
        rel.afirmar("2t·|{|F| ≥ t}| ≤ 13·2^-n (contagem direta)", (cota - direto) / cota)
        rel.nota(f"termo próximo={termo_proximo:.6g}, distante={termo_distante:.6g}, 2t·|{{|F| ≥ t}}|={direto:.6g}")
    return rel.build()


def cantor_density_ratio(x0, n: int, conjunto: TruncatedSet) -> Optional[Fraction]:
    """
    |𝔢 ∩ (x0 − δ, x0 + δ)|/(2δ) com δ = (5/3)·3^{−k(n,j)}, (n, j) o intervalo de
    nível n que contém x0, medido só nos blocos viáveis (cota inferior).

    Returns:
        None se o bloco (n, j) não é exatamente viável
    """
    x0 = Fraction(x0)
    i = cantor_level_of(x0, n)
    k = conjunto.schedule.k(i)
    if k > MAX_NIVEL_EXATO:
        return None
    raio = Fraction(5, 3 ** (k + 1))
    return conjunto.blocks_window_measure(x0, raio) / (2 * raio)


def check_cantor_density(
    N: int = 3,
    seed: Optional[int] = None,
    pontos: Sequence = (0, 1, Fraction(1, 4), Fraction(3, 4)),
    config: Optional[RunConfig] = None,
) -> CheckReport:
    """Razão de densidade ≥ 1/10 em δ_n = (5/3)·3^{−k} para pontos racionais de K_∞."""
    config = resolver_config(config)
    semente = seed if seed is not None else config.seed_k
    rel = ReportBuilder(
        "cantor_density", {"N": N, "seed_k": semente, "points": [str(Fraction(p)) for p in pontos]}, 0.0
    )
    with rel.protegido():
        conjunto = truncated_set(N, semente, somente_blocos=True, config=config)
        decimo = Fraction(1, 10)
        for x0 in pontos:
            if dist_to_cantor(x0) != 0:
                rel.nota(f"x0={x0} fora de K_∞, pulado")
                continue
            for n in range(1, N + 1):
                razao = cantor_density_ratio(x0, n, conjunto)
                if razao is None:
                    rel.nota(f"x0={x0}, n={n}: bloco acima do nível exato, pulado")
                    continue
                rel.afirmar(f"x0={x0}, n={n}: razão ≥ 1/10", float(razao - decimo) if razao >= decimo else -1.0)
    return rel.build()


def _potencia_de_3(q: int) -> bool:
    while q % 3 == 0:
        q //= 3
    return q == 1


def _exata(igual: bool) -> float:
    return 0.0 if igual else -1.0


def check_cantor_identities(
    N: int = 2,
    seed: Optional[int] = None,
    config: Optional[RunConfig] = None,
) -> CheckReport:
    """
    Identidades combinatórias exatas, sem tolerância: comprimentos dos blocos
    E_{n,j,m} (n+m ≤ 12), |K_n| = (2/3)ⁿ, μ(K_{n,j}) = 2⁻ⁿ, distância dos blocos
    a K_∞, separação dos blocos dos intervalos distantes, comprimento dos
    blocos em função de k, série geométrica, cota (8/9)^k ≤ 1, monotonia do
    cronograma e a razão de densidade na origem.
    """
    config = resolver_config(config)
    semente = seed if seed is not None else config.seed_k
    rel = ReportBuilder("cantor_identities", {"N": N, "seed_k": semente}, 0.0)
    with rel.protegido():
        _validar_truncamento(N, config)

        for n in range(1, 12):
            for m in range(1, 13 - n):
                for j in sorted({1, 2 ** n}):
                    pecas = e_block(CantorIndex(n, j), m, config)
                    comprimento = sum((p.length for p in pecas), Fraction(0))
                    rel.afirmar(f"|E_({n},{j},{m})|", _exata(comprimento == Fraction(2 ** (m - 1), 3 ** (n + m + 1))))
                    rel.afirmar(
                        f"denominadores de E_({n},{j},{m})",
                        _exata(all(_potencia_de_3(p.left.denominator) and _potencia_de_3(p.right.denominator) for p in pecas)),
                    )

        for n in range(1, min(12, config.profundidade_maxima) + 1):
            intervalos = k_intervals(n, config)
            rel.afirmar(f"|K_{n}| = (2/3)^{n}", _exata(sum((r.length for r in intervalos), Fraction(0)) == Fraction(2, 3) ** n))

        L = min(12, config.profundidade_maxima)
        atomos = cantor_atoms(L, config)
        for n in range(1, min(6, L) + 1):
            for j in sorted({1, 2 ** (n - 1) + 1, 2 ** n}):
                massa = math.fsum(atomos.weights[_fatia_atomos(CantorIndex(n, j), L)].tolist())
                rel.afirmar(f"μ(K_({n},{j})) = 2^-{n}", _exata(massa == 2.0 ** -n))

        ultimo = CantorIndex.last(N)
        cronograma = k_schedule(semente, ultimo)
        for b in indices_ate(ultimo):
            bloco = CantorBlock(b, cronograma.k(b))
            if not bloco.exact_feasible:
                rel.nota(f"{b}: k={bloco.k} acima do nível exato, identidades do bloco puladas")
                continue
            esquerda, direita = bloco.hull()
            distancia = bloco.distance_to_cantor()
            rel.afirmar(
                f"{b}: dist(Ẽ, K_∞) = 3^-(k+1)",
                _exata(dist_to_cantor(esquerda) == distancia and dist_to_cantor(direita) == distancia),
            )
            k_nivel = [RationalInterval(Fraction(int(p), 3 ** b.n), Fraction(int(p) + 1, 3 ** b.n))
                       for p in _numeradores_nivel(b.n)]
            proprios = {indice for indice in near_indices(b)}
            separacao = min(
                (max(r.left - direita, esquerda - r.right) for posicao, r in enumerate(k_nivel)
                 if not any(_contem_indice(p, CantorIndex(b.n, posicao + 1)) for p in proprios)),
                default=None,
            )
            if separacao is not None:
                rel.afirmar(f"{b}: separação dos intervalos distantes ≥ 3^-n", _exata(separacao >= Fraction(1, 3 ** b.n)))
            rel.afirmar(
                f"{b}: |Ẽ| = (2/3)^k/(3·2^(n+1))",
                _exata(bloco.length() == Fraction(2, 3) ** bloco.k / (3 * 2 ** (b.n + 1))),
            )
            rel.afirmar(f"{b}: 3^k·(2/3)^(3k) ≤ 1", _exata(Fraction(8, 9) ** bloco.k <= 1))

        for inicio in range(1, 11):
            fim = inicio + 20
            soma = sum((DOIS_TERCOS ** ell for ell in range(inicio, fim + 1)), Fraction(0))
            rel.afirmar(
                f"série geométrica a partir de {inicio}",
                _exata(soma == 3 * (DOIS_TERCOS ** inicio - DOIS_TERCOS ** (fim + 1))),
            )

        indices = indices_ate(ultimo)
        for anterior, atual in zip(indices, indices[1:]):
            rel.afirmar(
                f"cronograma {anterior} → {atual}",
                _exata(cronograma.k(atual) == 3 * cronograma.k(anterior) and cronograma.m(atual) > cronograma.m(anterior)),
            )

        conjunto = TruncatedSet(N, cronograma, incluir_k=False)
        for n in range(1, N + 1):
            razao = cantor_density_ratio(Fraction(0), n, conjunto)
            if razao is None:
                rel.nota(f"razão de densidade na origem, n={n}: acima do nível exato, pulada")
                continue
            rel.afirmar(f"razão de densidade na origem, n={n} ≥ 1/10", _exata(razao >= Fraction(1, 10)))
    return rel.build()


def _contem_indice(externo: CantorIndex, interno: CantorIndex) -> bool:
    """K_interno ⊆ K_externo (níveis n_externo ≤ n_interno)."""
    if interno.n < externo.n:
        return False
    tamanho = 2 ** (interno.n - externo.n)
    return (externo.j - 1) * tamanho < interno.j <= externo.j * tamanho
