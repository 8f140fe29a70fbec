"""
Conjuntos de nível Γ_t = {x : |Re F_μ(x+i0)| > t}, funções de distribuição,
varreduras de cauda fraca-L¹ e as medidas da fórmula de Poltoratski.

Caminho exato (medida atômica): em cada lacuna entre átomos F é estritamente
crescente de −∞ a +∞, então a componente positiva ligada ao átomo x_j é
(x_j − u_j, x_j) com F(x_j − u_j) = t, e a negativa é (x_j, x_j + v_j) com
F(x_j + v_j) = −t. A igualdade de Boole Σu_j = ‖μ‖/t limita cada u_j, o que
dá o colchete (0, min(lacuna, ‖μ‖/t)] para a bissecção em u.

Caminho misto (átomos + densidade): varredura de mudança de sinal por célula
entre pontos singulares, com refinamento por bissecção; o resultado é marcado
como aproximado.

Para medidas singulares Im F(x+i0) = 0 q.t.p., e o conjunto coincide com
{|F(x+i0)| > t} a menos de conjunto nulo.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from src.config import RunConfig, Sign, Transform, resolver_config
from src.exceptions import PreconditionError
from src.intervals import IntervalUnion
from src.measure_core import Measure, integrar_polinomio_intervalos, make_measure, total_mass
from src.transform_eval import real_part_on_axis

MAX_ITERACOES_BISSECCAO = 1200

# Frações geométricas usadas na varredura junto às pontas de cada célula
_FRACOES_GEOMETRICAS = 2.0 ** -np.arange(2, 61)


@dataclass(frozen=True)
class TailPoint:
    """Ponto de varredura: t, λ(t) e t·λ(t)."""
    t: float
    lam: float
    t_lambda: float

    def to_dict(self) -> dict:
        return {"t": self.t, "lambda": self.lam, "t_lambda": self.t_lambda}


@dataclass(frozen=True)
class LevelComponent:
    """Componente maximal de Γ_t ∖ {átomos}, ligada a um átomo e a um lado."""
    left: float
    right: float
    atom: float
    sign: Sign

    @property
    def center(self) -> float:
        return 0.5 * (self.left + self.right)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.right - self.left)

    @property
    def length(self) -> float:
        return self.right - self.left


def _validar_t(t: float):
    if not (t > 0 and math.isfinite(t)):
        raise ValueError(f"Limiar t deve ser positivo e finito (recebido {t})")


def _como_sinal(sign: Union[Sign, str]) -> Sign:
    return sign if isinstance(sign, Sign) else Sign(sign)


def _como_transformada(transform: Union[Transform, str]) -> Transform:
    return transform if isinstance(transform, Transform) else Transform(transform)


# ============================================================================
# CAMINHO EXATO (ATÔMICO)
# ============================================================================

def _avaliar_g(posicoes: np.ndarray, pesos: np.ndarray, indices: np.ndarray, u: np.ndarray) -> np.ndarray:
    """G_j(u) = F(x_j − u) = Σ_k w_k/(x_k − x_j + u), para as linhas j em indices."""
    n = posicoes.size
    passo = max((1 << 22) // max(n, 1), 1)
    saida = np.empty(indices.size)
    for inicio in range(0, indices.size, passo):
        linhas = indices[inicio:inicio + passo]
        d = posicoes[None, :] - posicoes[linhas, None]
        saida[inicio:inicio + passo] = (pesos[None, :] / (d + u[inicio:inicio + passo, None])).sum(axis=1)
    return saida


def _distancias_positivas(
    posicoes: np.ndarray, pesos: np.ndarray, t: float, tol: float
) -> Tuple[np.ndarray, float]:
    """
    u_j > 0 com F(x_j − u_j) = t para cada átomo.

    Returns:
        (u, maior largura relativa final de colchete)
    """
    massa = math.fsum(pesos.tolist())
    lacuna = np.concatenate([[np.inf], np.diff(posicoes)])
    hi = np.minimum(lacuna, massa / t)
    lo = np.zeros_like(hi)
    ativos = np.arange(posicoes.size)

    for _ in range(MAX_ITERACOES_BISSECCAO):
        if ativos.size == 0:
            break
        lo_ant, hi_ant = lo[ativos], hi[ativos]
        meio = 0.5 * (lo_ant + hi_ant)
        valores = _avaliar_g(posicoes, pesos, ativos, meio)
        acima = valores > t
        lo[ativos] = np.where(acima, meio, lo_ant)
        hi[ativos] = np.where(acima, hi_ant, meio)
        # meio sem ponto flutuante entre os extremos
        sem_progresso = (meio <= lo_ant) | (meio >= hi_ant)
        convergiu = (hi[ativos] - lo[ativos]) <= tol * hi[ativos]
        ativos = ativos[~(convergiu | sem_progresso)]

    u = 0.5 * (lo + hi)
    largura = float(np.max((hi - lo) / np.maximum(hi, np.finfo(float).tiny))) if u.size else 0.0
    return u, largura


def _distancias_exatas(mu: Measure, t: float, config: RunConfig) -> Tuple[np.ndarray, np.ndarray, float]:
    """(u, v, erro relativo): componentes positivas (x−u, x) e negativas (x, x+v)."""
    u, erro_u = _distancias_positivas(mu.positions, mu.weights, t, config.tol_raiz)
    # Reflexão x ↦ −x troca os lados: F_refletida(−y) = −F(y)
    v_refletido, erro_v = _distancias_positivas(-mu.positions[::-1], mu.weights[::-1], t, config.tol_raiz)
    return u, v_refletido[::-1], max(erro_u, erro_v)


def components(mu: Measure, t: float, config: Optional[RunConfig] = None) -> Tuple[LevelComponent, ...]:
    """
    Componentes maximais de Γ_t ∖ {átomos} de uma medida atômica, em ordem.

    Cada átomo contribui uma componente positiva à esquerda e uma negativa à direita.
    """
    config = resolver_config(config)
    _validar_t(t)
    if not mu.is_atomic:
        raise PreconditionError("Componentes exatas exigem medida puramente atômica")
    if mu.n_atoms == 0:
        return ()
    u, v, _ = _distancias_exatas(mu, t, config)
    resultado: List[LevelComponent] = []
    for x, uj, vj in zip(mu.positions.tolist(), u.tolist(), v.tolist()):
        resultado.append(LevelComponent(x - uj, x, x, Sign.POS))
        resultado.append(LevelComponent(x, x + vj, x, Sign.NEG))
    return tuple(resultado)


def _gamma_exato(mu: Measure, t: float, sign: Sign, config: RunConfig) -> IntervalUnion:
    u, v, erro = _distancias_exatas(mu, t, config)
    x = mu.positions
    pares = []
    if sign in (Sign.POS, Sign.ABS):
        pares.extend(zip((x - u).tolist(), x.tolist()))
    if sign in (Sign.NEG, Sign.ABS):
        pares.extend(zip(x.tolist(), (x + v).tolist()))
    escala = float(np.max(np.concatenate([u, v]))) if u.size else 0.0
    return IntervalUnion.from_pairs(pares, approximate=False, error_bound=erro * escala)


# ============================================================================
# CAMINHO MISTO (ÁTOMOS + DENSIDADE)
# ============================================================================

def _limite_lateral(mu: Measure, p: float, lado: int) -> float:
    """Limite de Re F em p pelo lado indicado (+1 direita, −1 esquerda)."""
    if mu.n_atoms and np.any(mu.positions == p):
        # w/(p − x): +∞ pela esquerda, −∞ pela direita
        return -math.inf if lado > 0 else math.inf
    salto = mu.edge_jump(p)
    if salto != 0:
        return math.copysign(math.inf, salto)
    return float(real_part_on_axis(mu, [p])[0])


def _gamma_misto(mu: Measure, t: float, sign: Sign, config: RunConfig) -> IntervalUnion:
    orientacao = 1.0 if sign == Sign.POS else -1.0
    massa = total_mass(mu)
    singulares = np.unique(np.concatenate([mu.positions, mu.edges()]))
    alcance = 2.0 * massa / t
    extremos = np.concatenate([[singulares[0] - alcance], singulares, [singulares[-1] + alcance]])
    singular = np.concatenate([[False], np.ones(singulares.size, dtype=bool), [False]])
    uniformes = np.arange(1, config.pontos_por_celula + 1) / (config.pontos_por_celula + 1)

    amostras_por_celula: List[np.ndarray] = []
    mascaras: List[np.ndarray] = []
    maior_espaco = 0.0
    for c in range(extremos.size - 1):
        l, r = float(extremos[c]), float(extremos[c + 1])
        largura = r - l
        interior = np.concatenate([l + largura * uniformes, l + largura * _FRACOES_GEOMETRICAS,
                                   r - largura * _FRACOES_GEOMETRICAS])
        interior = np.unique(interior[(interior > l) & (interior < r)])
        valores = orientacao * real_part_on_axis(mu, interior) - t
        lim_l = orientacao * (_limite_lateral(mu, l, 1) if singular[c] else float(real_part_on_axis(mu, [l])[0])) - t
        lim_r = orientacao * (_limite_lateral(mu, r, -1) if singular[c + 1] else float(real_part_on_axis(mu, [r])[0])) - t
        amostras = np.concatenate([[l], interior, [r]])
        amostras_por_celula.append(amostras)
        mascaras.append(np.concatenate([[lim_l], valores, [lim_r]]) > 0)
        maior_espaco = max(maior_espaco, float(np.max(np.diff(amostras))))

    # Cruzamentos de todas as células refinados juntos
    chaves: List[Tuple[int, int]] = []
    lo_lista, hi_lista, dentro_lista = [], [], []
    for c, (amostras, mascara) in enumerate(zip(amostras_por_celula, mascaras)):
        for i in np.flatnonzero(mascara[:-1] != mascara[1:]).tolist():
            chaves.append((c, i))
            lo_lista.append(amostras[i])
            hi_lista.append(amostras[i + 1])
            dentro_lista.append(mascara[i])
    cruzamentos: Dict[Tuple[int, int], float] = {}
    if chaves:
        lo, hi = np.array(lo_lista), np.array(hi_lista)
        dentro_lo = np.array(dentro_lista)
        ativos = np.arange(lo.size)
        for _ in range(MAX_ITERACOES_BISSECCAO):
            if ativos.size == 0:
                break
            lo_ant, hi_ant = lo[ativos], hi[ativos]
            meio = 0.5 * (lo_ant + hi_ant)
            dentro_meio = orientacao * real_part_on_axis(mu, meio) - t > 0
            mesmo_lado = dentro_meio == dentro_lo[ativos]
            lo[ativos] = np.where(mesmo_lado, meio, lo_ant)
            hi[ativos] = np.where(mesmo_lado, hi_ant, meio)
            escala = np.maximum(np.abs(lo[ativos]), np.abs(hi[ativos]))
            convergiu = (hi[ativos] - lo[ativos]) <= config.tol_raiz * escala
            sem_progresso = (meio <= lo_ant) | (meio >= hi_ant)
            ativos = ativos[~(convergiu | sem_progresso)]
        for chave, a, b in zip(chaves, lo.tolist(), hi.tolist()):
            cruzamentos[chave] = 0.5 * (a + b)

    pares = []
    for c, (amostras, mascara) in enumerate(zip(amostras_por_celula, mascaras)):
        ultimo = mascara.size - 1
        inicio = None
        for i in range(mascara.size):
            if mascara[i] and inicio is None:
                inicio = float(amostras[0]) if i == 0 else cruzamentos[(c, i - 1)]
            if inicio is not None and (i == ultimo or not mascara[i + 1]):
                fim = float(amostras[ultimo]) if i == ultimo else cruzamentos[(c, i)]
                pares.append((inicio, fim))
                inicio = None
    return IntervalUnion.from_pairs(pares, approximate=True, error_bound=maior_espaco)


# ============================================================================
# OPERAÇÕES
# ============================================================================

def gamma(
    mu: Measure,
    t: float,
    sign: Union[Sign, str] = Sign.ABS,
    config: Optional[RunConfig] = None,
) -> IntervalUnion:
    """
    Conjunto de nível de F.

    Args:
        mu: Medida (atômica: caminho exato; mista: varredura aproximada)
        t: Limiar de F (> 0)
        sign: abs = {|Re F| > t}, pos = {Re F > t}, neg = {Re F < −t}

    Returns:
        IntervalUnion (marcada approximate no caminho misto)
    """
    config = resolver_config(config)
    _validar_t(t)
    sign = _como_sinal(sign)
    if mu.is_zero:
        return IntervalUnion.empty()
    if mu.is_atomic:
        return _gamma_exato(mu, t, sign, config)
    if sign == Sign.ABS:
        return _gamma_misto(mu, t, Sign.POS, config).union(_gamma_misto(mu, t, Sign.NEG, config))
    return _gamma_misto(mu, t, sign, config)


def gamma_oracle(
    mu: Measure,
    t: float,
    sign: Union[Sign, str] = Sign.ABS,
    n: int = 1_000_000,
) -> IntervalUnion:
    """Oráculo de força bruta: varredura de sinal em n pontos centrais de células."""
    _validar_t(t)
    sign = _como_sinal(sign)
    if mu.is_zero:
        return IntervalUnion.empty()
    esquerda, direita = mu.support_hull()
    alcance = 2.0 * total_mass(mu) / t
    lo, hi = esquerda - alcance, direita + alcance
    passo = (hi - lo) / n
    xs = lo + (np.arange(n) + 0.5) * passo
    valores = real_part_on_axis(mu, xs)
    if sign == Sign.POS:
        mascara = valores > t
    elif sign == Sign.NEG:
        mascara = valores < -t
    else:
        mascara = np.abs(valores) > t
    bordas = np.diff(np.concatenate([[0], mascara.astype(np.int8), [0]]))
    inicios = np.flatnonzero(bordas == 1)
    fins = np.flatnonzero(bordas == -1)
    return IntervalUnion.from_arrays(lo + inicios * passo, lo + fins * passo,
                                     approximate=True, error_bound=passo)


def distribution(
    mu: Measure,
    t: float,
    S: Optional[IntervalUnion] = None,
    transform: Union[Transform, str] = Transform.H,
    sign: Union[Sign, str] = Sign.ABS,
    config: Optional[RunConfig] = None,
) -> float:
    """
    |{x ∈ S : |T_μ(x)| > t}| para T = F ou H ({|H| > t} = {|Re F| > πt}).
    """
    _validar_t(t)
    transform = _como_transformada(transform)
    limiar = math.pi * t if transform == Transform.H else t
    conjunto = gamma(mu, limiar, sign, config)
    if S is not None:
        conjunto = conjunto.intersection(S)
    return float(conjunto.length())


def validar_grade(t_grid: Sequence[float]) -> np.ndarray:
    grade = np.asarray(t_grid, dtype=float)
    if grade.ndim != 1 or grade.size == 0:
        raise ValueError("Grade de t vazia")
    if np.any(~np.isfinite(grade)) or np.any(grade <= 0):
        raise ValueError("Grade de t deve ser positiva e finita")
    if np.any(np.diff(grade) <= 0):
        raise ValueError("Grade de t deve ser estritamente crescente")
    return grade


def tail_sweep(
    mu: Measure,
    t_grid: Sequence[float],
    S: Optional[IntervalUnion] = None,
    transform: Union[Transform, str] = Transform.H,
    config: Optional[RunConfig] = None,
) -> List[TailPoint]:
    """TailPoint(t, λ, t·λ) para cada t da grade."""
    grade = validar_grade(t_grid)
    pontos = []
    for t in grade.tolist():
        lam = distribution(mu, t, S, transform, Sign.ABS, config)
        pontos.append(TailPoint(t, lam, t * lam))
    return pontos


def sweep_to_frame(pontos: Sequence[TailPoint]) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "t": [p.t for p in pontos],
            "lambda": [p.lam for p in pontos],
            "t_lambda": [p.t_lambda for p in pontos],
        },
        columns=["t", "lambda", "t_lambda"],
    )


def sweep_to_csv(pontos: Sequence[TailPoint], destino=None) -> Optional[str]:
    """CSV "t,lambda,t_lambda" com precisão dupla completa e ponto decimal."""
    return sweep_to_frame(pontos).to_csv(
        destino, index=False, float_format="%.17g", lineterminator="\n"
    )


# ============================================================================
# POLTORATSKI E DECAIMENTO DE INTERSEÇÕES
# ============================================================================

@dataclass(frozen=True)
class WeakLimit:
    """(πt/2)·χ_{|H|≥t} dx: suporte e altura constante."""
    support: IntervalUnion
    height: float

    def mass(self) -> float:
        return self.height * float(self.support.length())

    def as_measure(self) -> Measure:
        return make_measure(
            {"density": [{"a": float(a), "b": float(b), "h": self.height} for a, b in self.support]}
        )

    def moment(self, coeffs: Sequence[float]) -> float:
        """∫ g dμ^{(t)} para g polinomial."""
        if not self.support:
            return 0.0
        integrais = integrar_polinomio_intervalos(
            np.asarray(coeffs, dtype=float), self.support.lefts, self.support.rights
        )
        return self.height * math.fsum(integrais.tolist())


def weak_limit_measure(mu: Measure, t: float, config: Optional[RunConfig] = None) -> WeakLimit:
    """Suporte gamma(μ, πt, abs) e altura πt/2."""
    _validar_t(t)
    if not mu.is_atomic:
        raise PreconditionError("Medida de Poltoratski exata exige μ atômica")
    return WeakLimit(gamma(mu, math.pi * t, Sign.ABS, config), math.pi * t / 2.0)


def intersection_decay(
    mu: Measure,
    nu: Measure,
    c: float,
    t_grid: Sequence[float],
    config: Optional[RunConfig] = None,
) -> List[TailPoint]:
    """λ(t) = |{|H_μ| > t} ∩ {|H_ν| > ct}| em cada t."""
    if not (mu.is_atomic and nu.is_atomic):
        raise PreconditionError("Decaimento de interseção exige medidas atômicas")
    if not c > 0:
        raise ValueError(f"c deve ser positivo (recebido {c})")
    grade = validar_grade(t_grid)
    pontos = []
    for t in grade.tolist():
        a = gamma(mu, math.pi * t, Sign.ABS, config)
        b = gamma(nu, c * math.pi * t, Sign.ABS, config)
        lam = float(a.intersection(b).length())
        pontos.append(TailPoint(t, lam, t * lam))
    return pontos
