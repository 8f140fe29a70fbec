"""
Configuração global das verificações numéricas.

Reúne as tolerâncias, limites de profundidade e grades de t usados por todos os
módulos. Os valores padrão ficam em DEFAULT_CONFIG; a CLI cria cópias com
sobrescritas via RunConfig.com_sobrescritas().
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

import numpy as np


# ============================================================================
# ENUMERAÇÕES
# ============================================================================

class Transform(Enum):
    """Transformada cujo nível é medido: F (Stieltjes) ou H = Re F / π."""
    F = "F"
    H = "H"


class Sign(Enum):
    """
    Lado do conjunto de nível.

    - ABS: {|Re F| > t}
    - POS: {Re F > t} (componentes à esquerda dos átomos)
    - NEG: {Re F < -t} (componentes à direita dos átomos)
    """
    ABS = "abs"
    POS = "pos"
    NEG = "neg"


class GridScale(Enum):
    """Espaçamento da grade de limiares."""
    LOG = "log"
    LINEAR = "linear"


class CheckStatus(Enum):
    """Classe de resultado de uma verificação."""
    PASSED = "passed"
    FAILED = "failed"
    PRECONDITION = "precondition"
    OUT_OF_REGIME = "out_of_regime"


# ============================================================================
# GRADE DE LIMIARES
# ============================================================================

@dataclass(frozen=True)
class TGrid:
    """
    Grade de limiares t no formato da CLI "a:b:n:log".

    Attributes:
        start: Primeiro limiar (> 0)
        stop: Último limiar (> start)
        points: Número de pontos (>= 2)
        scale: Espaçamento log ou linear
    """
    start: float
    stop: float
    points: int
    scale: GridScale = GridScale.LOG

    def __post_init__(self):
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ValueError("Grade de t com extremos não finitos")
        if self.start <= 0:
            raise ValueError(f"Grade de t deve ser positiva (início={self.start})")
        if self.points < 2 or self.stop <= self.start:
            raise ValueError(
                f"Grade de t deve ser estritamente crescente ({self.start}:{self.stop}:{self.points})"
            )

    @classmethod
    def parse(cls, texto: str) -> "TGrid":
        """Interpreta "a:b:n" ou "a:b:n:log|linear"."""
        partes = texto.strip().split(":")
        if len(partes) not in (3, 4):
            raise ValueError(f"Grade de t inválida: '{texto}' (esperado a:b:n:log)")
        escala = GridScale(partes[3]) if len(partes) == 4 else GridScale.LOG
        return cls(float(partes[0]), float(partes[1]), int(partes[2]), escala)

    def values(self) -> np.ndarray:
        """Limiares em ordem estritamente crescente."""
        if self.scale == GridScale.LOG:
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)

    def to_text(self) -> str:
        return f"{self.start!r}:{self.stop!r}:{self.points}:{self.scale.value}"


# ============================================================================
# CONFIGURAÇÃO DE EXECUÇÃO
# ============================================================================

@dataclass(frozen=True)
class RunConfig:
    """
    Tolerâncias e limites de uma execução.

    Attributes:
        tol_raiz: Largura relativa final dos colchetes da bissecção
        tol_identidade: Tolerância relativa das identidades (Boole, massa)
        tol_extremos: Tolerância absoluta, após normalização de escala, na
                      comparação de extremos de intervalos
        tol_limite: Desvio relativo máximo no fim da grade (limites fracos)
        tol_limite_18: Desvio relativo máximo no limite de massa singular
        tol_diferenca_simetrica: Comprimento máximo da diferença simétrica entre
                                 os dois lados da identidade de Möbius
        pontos_por_celula: Pontos uniformes por célula na varredura mista
        profundidade_maxima: Nível máximo das construções de Cantor explícitas
        profundidade_avaliacao: Nível máximo das aproximações atômicas de Cantor
        max_intervalos: Máximo de intervalos numa união explícita
        limite_viabilidade: Limiar 3^k acima do qual índices são pulados
        seed_k: k(1,1) padrão do cronograma
        pontos_por_decada: Densidade da grade da cauda acima de T
        decadas: Número de décadas da grade da cauda
        semente_aleatoria: Semente dos corpora de fixtures
    """
    tol_raiz: float = 1e-14
    tol_identidade: float = 1e-9
    tol_extremos: float = 1e-9
    tol_limite: float = 0.01
    tol_limite_18: float = 0.05
    tol_diferenca_simetrica: float = 1e-8
    pontos_por_celula: int = 64
    profundidade_maxima: int = 20
    profundidade_avaliacao: int = 16
    max_intervalos: int = 200_000
    limite_viabilidade: float = 1e12
    seed_k: int = 2
    pontos_por_decada: int = 64
    decadas: int = 3
    semente_aleatoria: int = 20260101

    def __post_init__(self):
        positivos = {
            "tol_raiz": self.tol_raiz,
            "tol_identidade": self.tol_identidade,
            "tol_extremos": self.tol_extremos,
            "tol_limite": self.tol_limite,
            "tol_limite_18": self.tol_limite_18,
            "tol_diferenca_simetrica": self.tol_diferenca_simetrica,
            "pontos_por_celula": self.pontos_por_celula,
            "profundidade_maxima": self.profundidade_maxima,
            "profundidade_avaliacao": self.profundidade_avaliacao,
            "max_intervalos": self.max_intervalos,
            "limite_viabilidade": self.limite_viabilidade,
            "pontos_por_decada": self.pontos_por_decada,
            "decadas": self.decadas,
        }
        for nome, valor in positivos.items():
            if not valor > 0:
                raise ValueError(f"{nome} deve ser positivo (recebido {valor})")
        if self.seed_k < 2:
            raise ValueError(f"seed_k deve ser >= 2 (recebido {self.seed_k})")

    def com_sobrescritas(self, **kwargs) -> "RunConfig":
        """Cópia com os campos não nulos de kwargs substituídos."""
        validos = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **validos)

    def grade_cauda(self, limiar: float) -> np.ndarray:
        """Grade log com pontos_por_decada pontos por década, de limiar até limiar·10^decadas."""
        pontos = self.pontos_por_decada * self.decadas + 1
        return np.geomspace(limiar, limiar * 10.0 ** self.decadas, pontos)

    def get_description(self) -> str:
        """Retorna descrição legível da configuração."""
        return (
            f"raiz={self.tol_raiz:g}, identidade={self.tol_identidade:g}, "
            f"extremos={self.tol_extremos:g}, limite={self.tol_limite:g}, "
            f"seed_k={self.seed_k}, profundidade={self.profundidade_maxima}"
        )

    def to_dict(self) -> dict:
        return {
            "tol_raiz": self.tol_raiz,
            "tol_identidade": self.tol_identidade,
            "tol_extremos": self.tol_extremos,
            "tol_limite": self.tol_limite,
            "tol_limite_18": self.tol_limite_18,
            "tol_diferenca_simetrica": self.tol_diferenca_simetrica,
            "pontos_por_celula": self.pontos_por_celula,
            "profundidade_maxima": self.profundidade_maxima,
            "profundidade_avaliacao": self.profundidade_avaliacao,
            "max_intervalos": self.max_intervalos,
            "limite_viabilidade": self.limite_viabilidade,
            "seed_k": self.seed_k,
            "pontos_por_decada": self.pontos_por_decada,
            "decadas": self.decadas,
            "semente_aleatoria": self.semente_aleatoria,
        }


# ============================================================================
# CONFIGURAÇÃO GLOBAL - EDITE AQUI PARA MUDAR O COMPORTAMENTO
# ============================================================================

# Exemplos de uso:
#
# 1. Raízes mais frouxas para varreduras rápidas:
#    DEFAULT_CONFIG = RunConfig(tol_raiz=1e-12)
#
# 2. Construção de Cantor mais funda (cuidado: 2^N intervalos):
#    DEFAULT_CONFIG = RunConfig(profundidade_maxima=24)
#
# 3. Outro k(1,1) para o cronograma:
#    DEFAULT_CONFIG = RunConfig(seed_k=3)

DEFAULT_CONFIG = RunConfig()

# ============================================================================


def resolver_config(config: Optional[RunConfig]) -> RunConfig:
    """Retorna config ou DEFAULT_CONFIG."""
    return config if config is not None else DEFAULT_CONFIG
