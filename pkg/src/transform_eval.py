"""
Transformada de Stieltjes F_μ(z) = ∫ dμ(y)/(y − z), seus valores de fronteira,
a transformada de Hilbert H_μ = Re F_μ(x+i0)/π, a derivada F′ e a família de
Möbius F_{t0} = F/(1 + F/t0).

Peças de densidade usam a forma fechada h·log((b−z)/(a−z)) com o ramo principal
aplicado à razão, contínuo em ℂ₊. No eixo real o limite i0 é a fórmula analítica
de valor principal: Re = Σ w/(x_j − x) + Σ h·ln|(b−x)/(a−x)| e Im = π·f(x).
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from src.exceptions import DensityEdgeError, FamilyPoleError, PoleError, SupportError
from src.measure_core import Measure

# Tamanho máximo (átomos × pontos) de um bloco de avaliação vetorizada
BLOCO_AVALIACAO = 1 << 22

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class ComplexPoint:
    re: float
    im: float

    def as_complex(self) -> complex:
        return complex(self.re, self.im)


class BoundaryKind(Enum):
    REGULAR = "regular"
    POLE = "pole"
    DENSITY_EDGE = "density-edge"


@dataclass(frozen=True)
class BoundaryValue:
    """
    F(x+i0) num ponto real.

    Attributes:
        value: Re F(x+i0); ±inf numa borda de densidade; None num polo
        imag: Im F(x+i0) = π·f(x) (média lateral numa borda)
        kind: regular, pole ou density-edge
    """
    value: Optional[float]
    imag: float
    kind: BoundaryKind


PontoComplexo = Union[ComplexPoint, complex, float, int]


def _como_complexo(z: PontoComplexo) -> complex:
    if isinstance(z, ComplexPoint):
        return z.as_complex()
    return complex(z)


def _eh_atomo(mu: Measure, x: float) -> bool:
    return mu.n_atoms > 0 and bool(np.any(mu.positions == x))


def _eh_borda(mu: Measure, x: float) -> bool:
    return mu.n_pieces > 0 and bool(np.any(mu.lefts == x) or np.any(mu.rights == x))


# ============================================================================
# AVALIAÇÃO VETORIZADA NO EIXO REAL
# ============================================================================

def real_part_on_axis(mu: Measure, xs) -> np.ndarray:
    """
    Re F(x+i0) em vários pontos reais.

    Em átomos e bordas o resultado é ±inf (sem exceção); os chamadores que
    precisam distinguir esses casos usam boundary_value().
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    resultado = np.zeros(xs.shape, dtype=float)
    n = max(mu.n_atoms + mu.n_pieces, 1)
    passo = max(BLOCO_AVALIACAO // n, 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        for inicio in range(0, xs.size, passo):
            bloco = xs[inicio:inicio + passo]
            parcial = np.zeros(bloco.shape, dtype=float)
            if mu.n_atoms:
                parcial += (mu.weights[None, :] / (mu.positions[None, :] - bloco[:, None])).sum(axis=1)
            if mu.n_pieces:
                razao = np.abs(mu.rights[None, :] - bloco[:, None]) / np.abs(mu.lefts[None, :] - bloco[:, None])
                parcial += (mu.heights[None, :] * np.log(razao)).sum(axis=1)
            resultado[inicio:inicio + passo] = parcial
    return resultado


def density_on_axis(mu: Measure, xs) -> np.ndarray:
    """f(x) nos pontos (0 nas bordas e fora das peças)."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if mu.n_pieces == 0:
        return np.zeros(xs.shape)
    dentro = (mu.lefts[None, :] < xs[:, None]) & (xs[:, None] < mu.rights[None, :])
    return dentro.astype(float) @ mu.heights


# ============================================================================
# OPERAÇÕES PONTUAIS
# ============================================================================

def boundary_value(mu: Measure, x: float) -> BoundaryValue:
    """F(x+i0) classificado como regular, polo ou borda de densidade."""
    x = float(x)
    if _eh_atomo(mu, x):
        return BoundaryValue(None, math.nan, BoundaryKind.POLE)
    if _eh_borda(mu, x):
        salto = mu.edge_jump(x)
        imag = math.pi * 0.5 * (mu.density_at(x, 1) + mu.density_at(x, -1))
        return BoundaryValue(math.copysign(math.inf, salto), imag, BoundaryKind.DENSITY_EDGE)
    real = float(real_part_on_axis(mu, [x])[0])
    return BoundaryValue(real, math.pi * mu.density_at(x), BoundaryKind.REGULAR)


def stieltjes(mu: Measure, z: PontoComplexo) -> complex:
    """
    F_μ(z) para Im z > 0, ou o valor de fronteira para z real.

    Raises:
        ValueError: Im z < 0
        PoleError: z real sobre um átomo
    """
    z = _como_complexo(z)
    if z.imag < 0:
        raise ValueError(f"Ponto fora de ℂ₊ ∪ ℝ: {z}")
    if z.imag == 0:
        fronteira = boundary_value(mu, z.real)
        if fronteira.kind == BoundaryKind.POLE:
            raise PoleError(z.real)
        return complex(fronteira.value, fronteira.imag)

    total = 0j
    if mu.n_atoms:
        total += complex(np.sum(mu.weights / (mu.positions - z)))
    if mu.n_pieces:
        total += complex(np.sum(mu.heights * np.log((mu.rights - z) / (mu.lefts - z))))
    return total


def hilbert(mu: Measure, x: float) -> float:
    """H_μ(x) = Re F(x+i0)/π."""
    fronteira = boundary_value(mu, x)
    if fronteira.kind == BoundaryKind.POLE:
        raise PoleError(x)
    if fronteira.kind == BoundaryKind.DENSITY_EDGE:
        raise DensityEdgeError(x, 1 if fronteira.value > 0 else -1)
    return fronteira.value / math.pi


def stieltjes_deriv(mu: Measure, x: float) -> float:
    """F′(x) = ∫ dμ(y)/(y − x)², positiva fora do suporte."""
    x = float(x)
    if mu.in_support(x):
        raise SupportError(f"F' pedido no suporte: x={x!r}")
    total = 0.0
    if mu.n_atoms:
        total += float(np.sum(mu.weights / (mu.positions - x) ** 2))
    if mu.n_pieces:
        total += float(np.sum(mu.heights * (1.0 / (mu.lefts - x) - 1.0 / (mu.rights - x))))
    return total


def mobius(mu: Measure, t0: float, z: PontoComplexo) -> complex:
    """
    F_{t0}(z) = F(z)/(1 + F(z)/t0).

    Num átomo ou borda do eixo real F diverge e o valor é o limite t0.

    Raises:
        FamilyPoleError: 1 + F/t0 = 0 no eixo real
    """
    if not t0 > 0:
        raise ValueError(f"t0 deve ser positivo (recebido {t0})")
    z = _como_complexo(z)
    if z.imag == 0 and (_eh_atomo(mu, z.real) or _eh_borda(mu, z.real)):
        return complex(t0, 0.0)
    valor = stieltjes(mu, z)
    denominador = 1.0 + valor / t0
    if z.imag == 0 and abs(denominador) <= 4 * EPS:
        raise FamilyPoleError(f"1 + F/t0 = 0 em x={z.real!r}")
    return valor / denominador


def mobius_on_axis(mu: Measure, t0: float, xs) -> np.ndarray:
    """Re F_{t0}(x+i0) para medida atômica (F real fora dos átomos)."""
    valores = real_part_on_axis(mu, xs)
    with np.errstate(divide="ignore", invalid="ignore"):
        resultado = t0 * valores / (t0 + valores)
    return np.where(np.isinf(valores), t0, resultado)
