"""
Geometria de uniões finitas de intervalos: medida de janela, constante de
homogeneidade δ, perfis de densidade local e os subconjuntos 𝔢_n.

A razão w(x, a)/(2a), com w(x, a) = |E ∩ (x−a, x+a)|, é linear-fracionária em
cada célula poligonal delimitada pelas retas x ± a = e (e extremo de E). O
ínfimo é então atingido num vértice, e os vértices são enumeráveis:
extremos x com a alinhado a outro extremo, pontos médios de pares de extremos
e os limites a → 0⁺ e a → diam(E).
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.intervals import IntervalUnion, Numero

# Candidatos com razão até esta distância do mínimo são considerados empatados
TOL_EMPATE = 1e-12

# Folga numérica das restrições lineares de 𝔢_n
TOL_RESTRICAO = 1e-12

BLOCO_JANELA = 1 << 22

# Passo padrão do oráculo de grade: diam/PASSOS_GRADE
PASSOS_GRADE = 400.0


@dataclass(frozen=True)
class HomogeneityReport:
    """
    Constante de homogeneidade e testemunha (x, a) que a realiza.

    Attributes:
        delta: inf w(x,a)/(2a) sobre x ∈ E, 0 < a < diam(E)
        witness_x: Ponto de E onde o ínfimo é atingido
        witness_a: Raio da janela testemunha
        diam: Diâmetro de E
        error_bound: Cota absoluta do erro de arredondamento em delta
        grid_delta: Mínimo na grade de certificação (None sem certificação)
        grid_error_bound: Cota de Lipschitz para grid_delta − delta
        grid_rounding: Cota do erro de arredondamento nos nós da grade
    """
    delta: float
    witness_x: float
    witness_a: float
    diam: float
    error_bound: float = 0.0
    grid_delta: Optional[float] = None
    grid_error_bound: float = math.inf
    grid_rounding: float = 0.0

    @property
    def grid_gap(self) -> Optional[float]:
        return None if self.grid_delta is None else self.grid_delta - self.delta

    @property
    def certification_slack(self) -> float:
        """≥ 0 sse −ε ≤ grid_delta − delta ≤ grid_error_bound + ε, com ε = error_bound + grid_rounding."""
        if self.grid_delta is None or not math.isfinite(self.grid_error_bound):
            return -1.0
        lacuna = self.grid_gap
        arredondamento = self.error_bound + self.grid_rounding
        return min(lacuna + arredondamento, self.grid_error_bound + arredondamento - lacuna)

    @property
    def certified(self) -> bool:
        return self.certification_slack >= 0.0

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "witness_x": self.witness_x,
            "witness_a": self.witness_a,
            "diam": self.diam,
            "error_bound": self.error_bound,
            "grid_delta": self.grid_delta,
            "grid_error_bound": self.grid_error_bound if math.isfinite(self.grid_error_bound) else None,
            "grid_rounding": self.grid_rounding,
            "certified": self.certified,
        }


@dataclass(frozen=True)
class DensityProfile:
    """Razões de densidade simétrica em x0 ao longo de uma sequência de raios."""
    x0: Numero
    samples: Tuple[Tuple[Numero, Numero], ...]
    limsup_estimate: Numero
    liminf_estimate: Numero


# ============================================================================
# MEDIDA DE JANELA
# ============================================================================

def window_measure(E: IntervalUnion, x: Numero, a: Numero) -> Numero:
    """
    |E ∩ (x−a, x+a)|, exata na aritmética dos argumentos (Fraction ou float).
    """
    if not a > 0:
        raise ValueError(f"Raio da janela deve ser positivo (recebido {a})")
    esquerda, direita = x - a, x + a
    total = 0
    for l, r in E:
        if r <= esquerda:
            continue
        if l >= direita:
            break
        total += min(r, direita) - max(l, esquerda)
    return total


def window_measure_array(E: IntervalUnion, xs, raios) -> np.ndarray:
    """Versão vetorizada em float: w(xs[i], raios[i]) para arrays compatíveis por broadcast (saída achatada)."""
    xs, raios = np.broadcast_arrays(np.asarray(xs, dtype=float), np.asarray(raios, dtype=float))
    xs, raios = xs.ravel(), raios.ravel()
    resultado = np.zeros(xs.shape)
    if not E:
        return resultado
    esquerdas, direitas = E.lefts, E.rights
    passo = max(BLOCO_JANELA // len(E), 1)
    for inicio in range(0, xs.size, passo):
        x = xs[inicio:inicio + passo, None]
        a = raios[inicio:inicio + passo, None]
        sobreposicao = np.minimum(direitas[None, :], x + a) - np.maximum(esquerdas[None, :], x - a)
        resultado[inicio:inicio + passo] = np.clip(sobreposicao, 0.0, None).sum(axis=1)
    return resultado


# ============================================================================
# CONSTANTE DE HOMOGENEIDADE
# ============================================================================

def _candidatos_homogeneidade(E: IntervalUnion) -> Tuple[np.ndarray, np.ndarray]:
    extremos = np.array([float(e) for e in E.endpoints()])
    diam = float(E.diam())
    xs: List[np.ndarray] = []
    raios: List[np.ndarray] = []

    # Extremos: raios alinhados a outro extremo, o limite a → diam e o proxy de a → 0⁺
    distancias = np.abs(extremos[:, None] - extremos[None, :])
    for i, x in enumerate(extremos.tolist()):
        outros = distancias[i][distancias[i] > 0]
        alinhados = outros[outros < diam]
        a0 = 0.5 * float(outros.min()) if outros.size else 0.5 * diam
        raios_x = np.concatenate([alinhados, [diam, a0]])
        xs.append(np.full(raios_x.size, x))
        raios.append(raios_x)

    # Pontos médios de pares de extremos que caem em E
    i, k = np.triu_indices(extremos.size, k=1)
    medios = 0.5 * (extremos[i] + extremos[k])
    semi = 0.5 * (extremos[k] - extremos[i])
    validos = (semi > 0) & (semi <= diam) & E.contains_points(medios)
    xs.append(medios[validos])
    raios.append(semi[validos])
    return np.concatenate(xs), np.concatenate(raios)


def homogeneity_delta(
    E: IntervalUnion,
    certificar: bool = True,
    passo_grade: Optional[float] = None,
) -> HomogeneityReport:
    """
    Constante de homogeneidade de E por enumeração dos vértices críticos.

    Empates (até 1e-12) são resolvidos pelo menor a e depois pelo menor x.

    A certificação compara com o oráculo de grade de passo s. A razão
    r = w/(2a) satisfaz |∂r/∂x| ≤ 1/(2a) e |∂r/∂a| ≤ 1/a, e todo (x*, a*) fica a
    s/2 de um nó em cada coordenada, logo o mínimo da grade excede o ínfimo em
    no máximo 0.75·s/(a* − s/2).

    Args:
        E: União não vazia
        certificar: Avalia o oráculo de grade e a cota de Lipschitz
        passo_grade: Passo do oráculo (padrão diam/400)

    Raises:
        ValueError: E vazio
    """
    if not E:
        raise ValueError("Constante de homogeneidade de conjunto vazio")
    diam = float(E.diam())
    xs, raios = _candidatos_homogeneidade(E)
    razoes = window_measure_array(E, xs, raios) / (2.0 * raios)

    minimo = float(razoes.min())
    empatados = np.flatnonzero(razoes <= minimo + TOL_EMPATE)
    ordem = np.lexsort((xs[empatados], raios[empatados]))
    escolhido = empatados[ordem[0]]

    escala = max(abs(float(E.hull()[0])), abs(float(E.hull()[1])), diam)
    erro = 16 * np.finfo(float).eps * escala / max(float(raios[escolhido]), np.finfo(float).tiny)
    grade, cota_grade, arredondamento_grade = None, math.inf, 0.0
    if certificar:
        s = passo_grade if passo_grade is not None else diam / PASSOS_GRADE
        grade = homogeneity_delta_grid(E, s).delta
        raio_minimo = float(raios[escolhido]) - s / 2.0
        if raio_minimo > 0:
            cota_grade = 0.75 * s / raio_minimo
        arredondamento_grade = 16 * np.finfo(float).eps * escala / s
    return HomogeneityReport(
        delta=float(razoes[escolhido]),
        witness_x=float(xs[escolhido]),
        witness_a=float(raios[escolhido]),
        diam=diam,
        error_bound=float(erro),
        grid_delta=grade,
        grid_error_bound=cota_grade,
        grid_rounding=float(arredondamento_grade),
    )


def _pontos_em_E(E: IntervalUnion, passo: float) -> np.ndarray:
    pontos = []
    for l, r in E:
        l, r = float(l), float(r)
        quantidade = max(int(math.ceil((r - l) / passo)), 1)
        pontos.append(np.linspace(l, r, quantidade + 1))
    return np.concatenate(pontos)


def homogeneity_delta_grid(E: IntervalUnion, passo: Optional[float] = None) -> HomogeneityReport:
    """
    Oráculo de grade: mínimo de w(x,a)/(2a) com x numa grade de E e a = passo, 2·passo, …, diam.

    Todo ponto da grade é admissível, então o resultado é ≥ ao ínfimo verdadeiro.
    """
    if not E:
        raise ValueError("Constante de homogeneidade de conjunto vazio")
    diam = float(E.diam())
    passo = passo if passo is not None else diam / PASSOS_GRADE
    xs = _pontos_em_E(E, passo)
    quantidade = max(int(math.floor(diam / passo)), 1)
    raios = np.unique(np.concatenate([np.arange(1, quantidade + 1) * passo, [diam]]))
    raios = raios[raios <= diam]
    xx, aa = np.meshgrid(xs, raios, indexing="ij")
    razoes = window_measure_array(E, xx, aa) / (2.0 * aa.ravel())
    i = int(np.argmin(razoes))
    return HomogeneityReport(
        delta=float(razoes[i]),
        witness_x=float(xx.ravel()[i]),
        witness_a=float(aa.ravel()[i]),
        diam=diam,
        error_bound=2.0 * passo,
    )


# ============================================================================
# PERFIS DE DENSIDADE
# ============================================================================

def density_profile(E: IntervalUnion, x0: Numero, a_seq: Sequence[Numero]) -> DensityProfile:
    """
    Razões |E ∩ (x0−a, x0+a)|/(2a) ao longo de a_seq.

    Raises:
        ValueError: x0 ∉ E ou a_seq não positiva e estritamente decrescente
    """
    if not E.contains_point(x0):
        raise ValueError(f"x0={x0!r} não pertence ao conjunto")
    raios = list(a_seq)
    if not raios:
        raise ValueError("Sequência de raios vazia")
    if any(not a > 0 for a in raios) or any(b >= a for a, b in zip(raios, raios[1:])):
        raise ValueError("Sequência de raios deve ser positiva e estritamente decrescente")
    amostras = tuple((a, window_measure(E, x0, a) / (2 * a)) for a in raios)
    razoes = [r for _, r in amostras]
    return DensityProfile(x0, amostras, max(razoes), min(razoes))


def is_weakly_homogeneous_sample(
    E: IntervalUnion, pontos: Sequence[Numero], a_seq: Sequence[Numero], limiar: float
) -> bool:
    """Estimativa de limsup ≥ limiar em todos os pontos, ao longo de a_seq."""
    return all(density_profile(E, x0, a_seq).limsup_estimate >= limiar for x0 in pontos)


# ============================================================================
# SUBCONJUNTOS 𝔢_n
# ============================================================================

def _viavel_linear(l: float, r: float, vl: float, vr: float) -> Optional[Tuple[float, float]]:
    """Subintervalo de [l, r] onde a função linear com valores vl, vr é ≥ −tol."""
    ok_l, ok_r = vl >= -TOL_RESTRICAO, vr >= -TOL_RESTRICAO
    if ok_l and ok_r:
        return l, r
    if not ok_l and not ok_r:
        return None
    zero = l + (r - l) * vl / (vl - vr)
    return (l, zero) if ok_l else (zero, r)


def en_subset(E: IntervalUnion, n: int) -> IntervalUnion:
    """
    𝔢_n = {x ∈ E : w(x, a) ≥ 2a/n para todo 0 < a < 1/n}, fechado.

    Para x fixo, φ(a) = w(x,a) − 2a/n é linear por partes com quebras em
    a = |x − e|; a condição se reduz à inclinação em 0⁺, aos valores nas quebras
    dentro de (0, 1/n) e ao valor em 1/n. Em cada célula de x delimitada por
    extremos, e ± 1/n e pontos médios de pares próximos, cada restrição é linear.
    """
    if n < 1:
        raise ValueError(f"n deve ser inteiro positivo (recebido {n})")
    if not E:
        return IntervalUnion.empty()
    raio = 1.0 / n
    extremos = np.array([float(e) for e in E.endpoints()])

    i, k = np.triu_indices(extremos.size, k=1)
    proximos = (extremos[k] - extremos[i]) < 2 * raio
    cortes = np.unique(np.concatenate([
        extremos, extremos - raio, extremos + raio,
        0.5 * (extremos[i][proximos] + extremos[k][proximos]),
    ]))
    cortes = cortes[(cortes >= extremos[0]) & (cortes <= extremos[-1])]

    pares = []
    for l, r in zip(cortes[:-1].tolist(), cortes[1:].tolist()):
        meio = 0.5 * (l + r)
        if not E.contains_point(meio):
            continue
        ativos = extremos[np.abs(meio - extremos) < raio]
        # Restrições: φ(1/n) e φ(|x − e|) para cada extremo ativo
        raios_l = np.concatenate([[raio], np.abs(l - ativos)])
        raios_r = np.concatenate([[raio], np.abs(r - ativos)])
        valores_l = window_measure_array(E, np.full(raios_l.size, l), raios_l) - 2.0 * raios_l / n
        valores_r = window_measure_array(E, np.full(raios_r.size, r), raios_r) - 2.0 * raios_r / n
        intervalo: Optional[Tuple[float, float]] = (l, r)
        for vl, vr in zip(valores_l.tolist(), valores_r.tolist()):
            parcial = _viavel_linear(l, r, vl, vr)
            if parcial is None:
                intervalo = None
                break
            intervalo = (max(intervalo[0], parcial[0]), min(intervalo[1], parcial[1]))
            if intervalo[0] > intervalo[1]:
                intervalo = None
                break
        if intervalo is not None:
            pares.append(intervalo)

    return IntervalUnion.from_pairs(pares)


def en_subset_grid(E: IntervalUnion, n: int, passo: Optional[float] = None) -> IntervalUnion:
    """Oráculo de grade para 𝔢_n: x e a em grades de passo fixo."""
    if n < 1:
        raise ValueError(f"n deve ser inteiro positivo (recebido {n})")
    if not E:
        return IntervalUnion.empty()
    raio = 1.0 / n
    passo = passo if passo is not None else raio / 400.0
    xs = _pontos_em_E(E, passo)
    raios = np.arange(1, int(math.floor(raio / passo)) + 1) * passo
    raios = raios[raios < raio]
    raios = np.concatenate([raios, [raio]])
    xx, aa = np.meshgrid(xs, raios, indexing="ij")
    folga = window_measure_array(E, xx, aa).reshape(xx.shape) - 2.0 * aa / n
    viavel = np.all(folga >= -TOL_RESTRICAO, axis=1)
    # Pontos viáveis isolados viram intervalos de largura passo
    bordas = np.diff(np.concatenate([[0], viavel.astype(np.int8), [0]]))
    inicios = np.flatnonzero(bordas == 1)
    fins = np.flatnonzero(bordas == -1) - 1
    pares = [(xs[a] - 0.5 * passo, xs[b] + 0.5 * passo) for a, b in zip(inicios, fins)]
    return IntervalUnion.from_pairs(pares, approximate=True, error_bound=passo).intersection(
        IntervalUnion.from_pairs([(float(a), float(b)) for a, b in E])
    )
