"""
Fixtures canônicas da suíte de verificação.

Os corpora aleatórios usam numpy.random.default_rng com a semente de RunConfig,
então a suíte é determinística.
"""

from typing import List, Optional, Tuple

import numpy as np

from src.config import RunConfig, resolver_config
from src.intervals import IntervalUnion
from src.measure_core import Measure, add_measures, atomic_measure, delta, uniform

# Conjunto de duas componentes com δ = 1/4 certificado
CONJUNTO_CHAVE = IntervalUnion.from_pairs([(0.0, 1.0), (2.0, 3.0)])
INTERVALO_UNITARIO = IntervalUnion.from_pairs([(0.0, 1.0)])


def _gerador(config: Optional[RunConfig], deslocamento: int) -> np.random.Generator:
    config = resolver_config(config)
    return np.random.default_rng(config.semente_aleatoria + deslocamento)


def random_atomic_measures(
    quantidade: int,
    max_atomos: int = 32,
    faixa: Tuple[float, float] = (-10.0, 10.0),
    config: Optional[RunConfig] = None,
) -> List[Measure]:
    """Medidas com até max_atomos átomos em faixa e pesos em (0, 1]."""
    rng = _gerador(config, 0)
    medidas = []
    for _ in range(quantidade):
        n = int(rng.integers(1, max_atomos + 1))
        posicoes = rng.uniform(faixa[0], faixa[1], size=n)
        pesos = 1.0 - rng.random(n)
        medidas.append(atomic_measure(posicoes, pesos))
    return medidas


def measures_in_set(
    E: IntervalUnion,
    quantidade: int,
    max_atomos: int = 8,
    config: Optional[RunConfig] = None,
) -> List[Measure]:
    """Medidas atômicas com todos os átomos no interior de E."""
    rng = _gerador(config, 1)
    esquerdas, direitas = E.lefts, E.rights
    comprimentos = direitas - esquerdas
    medidas = []
    for _ in range(quantidade):
        n = int(rng.integers(1, max_atomos + 1))
        componente = rng.choice(len(E), size=n, p=comprimentos / comprimentos.sum())
        frac = rng.uniform(0.05, 0.95, size=n)
        posicoes = esquerdas[componente] + frac * comprimentos[componente]
        medidas.append(atomic_measure(posicoes, 1.0 - rng.random(n)))
    return medidas


def interleaved_pair(pares: int = 5, espacamento: float = 0.5, peso: float = 0.5) -> Tuple[Measure, Measure]:
    """μ com átomos em 0, 1, …; ν com átomos deslocados de espacamento."""
    posicoes = np.arange(pares, dtype=float)
    pesos = np.full(pares, peso)
    return atomic_measure(posicoes, pesos), atomic_measure(posicoes + espacamento, pesos)


def canonical_measures() -> List[Tuple[str, Measure]]:
    return [
        ("delta0", delta(0.0)),
        ("uniforme01", uniform(0.0, 1.0)),
        ("delta0+uniforme01", add_measures(delta(0.0), uniform(0.0, 1.0))),
    ]
