"""
Modelo de dados de medidas positivas finitas na reta.

Uma Measure é uma lista de átomos mais uma densidade constante por partes. Os
arrays internos são somente-leitura; todas as operações devolvem novas medidas.

Formato JSON:
    {"atoms": [{"x": 0.0, "w": 1.0}], "density": [{"a": 0.0, "b": 1.0, "h": 1.0}]}
"""

import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Tuple

import numpy as np

from src.intervals import IntervalUnion

# Átomos a menos desta distância são fundidos
TOL_FUSAO_ATOMOS = 1e-14


@dataclass(frozen=True)
class Atom:
    position: float
    weight: float


@dataclass(frozen=True)
class DensityPiece:
    left: float
    right: float
    height: float

    @property
    def mass(self) -> float:
        return self.height * (self.right - self.left)


def _somente_leitura(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array, dtype=float)
    array.setflags(write=False)
    return array


class Measure:
    """
    Medida positiva finita: átomos + densidade constante por partes.

    Use make_measure() ou atomic_measure() para construir; o construtor assume
    arrays já normalizados (ordenados, sem colisões, peças disjuntas).
    """

    __slots__ = ("positions", "weights", "lefts", "rights", "heights")

    def __init__(self, positions, weights, lefts=(), rights=(), heights=()):
        self.positions = _somente_leitura(positions)
        self.weights = _somente_leitura(weights)
        self.lefts = _somente_leitura(lefts)
        self.rights = _somente_leitura(rights)
        self.heights = _somente_leitura(heights)

    @classmethod
    def zero(cls) -> "Measure":
        return cls(np.empty(0), np.empty(0))

    # ------------------------------------------------------------------
    # Acesso
    # ------------------------------------------------------------------

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        return tuple(Atom(x, w) for x, w in zip(self.positions.tolist(), self.weights.tolist()))

    @property
    def density(self) -> Tuple[DensityPiece, ...]:
        return tuple(
            DensityPiece(a, b, h)
            for a, b, h in zip(self.lefts.tolist(), self.rights.tolist(), self.heights.tolist())
        )

    @property
    def n_atoms(self) -> int:
        return int(self.positions.size)

    @property
    def n_pieces(self) -> int:
        return int(self.lefts.size)

    @property
    def is_atomic(self) -> bool:
        return self.n_pieces == 0

    @property
    def is_zero(self) -> bool:
        return self.n_atoms == 0 and self.n_pieces == 0

    def edges(self) -> np.ndarray:
        """Extremos das peças de densidade (bordas), ordenados e sem repetição."""
        if self.n_pieces == 0:
            return np.empty(0)
        return np.unique(np.concatenate([self.lefts, self.rights]))

    def edge_jump(self, x: float) -> float:
        """Salto h(x+) - h(x-) da densidade em x."""
        return self.density_at(x, lado=1) - self.density_at(x, lado=-1)

    def density_at(self, x: float, lado: int = 0) -> float:
        """
        Altura da densidade em x.

        Args:
            x: Ponto
            lado: 0 para o interior estrito, +1 para o limite à direita, -1 à esquerda
        """
        if self.n_pieces == 0:
            return 0.0
        if lado > 0:
            dentro = (self.lefts <= x) & (x < self.rights)
        elif lado < 0:
            dentro = (self.lefts < x) & (x <= self.rights)
        else:
            dentro = (self.lefts < x) & (x < self.rights)
        return float(self.heights[dentro].sum())

    def in_support(self, x: float) -> bool:
        """x é átomo ou pertence a uma peça fechada."""
        if self.n_atoms and np.any(self.positions == x):
            return True
        return bool(np.any((self.lefts <= x) & (x <= self.rights)))

    def support_hull(self) -> Tuple[float, float]:
        pontos = np.concatenate([self.positions, self.lefts, self.rights])
        if pontos.size == 0:
            raise ValueError("Medida nula não tem suporte")
        return float(pontos.min()), float(pontos.max())

    # ------------------------------------------------------------------
    # Igualdade e representação
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Measure):
            return NotImplemented
        return all(
            np.array_equal(getattr(self, nome), getattr(other, nome)) for nome in self.__slots__
        )

    __hash__ = None

    def __add__(self, other: "Measure") -> "Measure":
        return add_measures(self, other)

    def __repr__(self) -> str:
        return (
            f"Measure(atomos={self.n_atoms}, pecas={self.n_pieces}, "
            f"massa={total_mass(self):.6g})"
        )


# ============================================================================
# NORMALIZAÇÃO
# ============================================================================

def _validar_finitos(valores: np.ndarray, nome: str):
    if not np.all(np.isfinite(valores)):
        raise ValueError(f"{nome}: coordenadas NaN ou infinitas")


def _normalizar_atomos(posicoes: np.ndarray, pesos: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    _validar_finitos(posicoes, "átomos")
    _validar_finitos(pesos, "pesos")
    if np.any(pesos <= 0):
        raise ValueError("Peso de átomo não positivo")
    if posicoes.size == 0:
        return np.empty(0), np.empty(0)

    ordem = np.argsort(posicoes, kind="mergesort")
    posicoes, pesos = posicoes[ordem], pesos[ordem]
    # Um novo grupo começa onde a distância ao vizinho excede a tolerância
    inicio = np.concatenate([[True], np.diff(posicoes) > TOL_FUSAO_ATOMOS])
    indices = np.flatnonzero(inicio)
    return posicoes[indices], np.add.reduceat(pesos, indices)


def _normalizar_densidade(
    esquerdas: np.ndarray, direitas: np.ndarray, alturas: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    _validar_finitos(esquerdas, "densidade")
    _validar_finitos(direitas, "densidade")
    _validar_finitos(alturas, "alturas")
    if np.any(esquerdas >= direitas):
        raise ValueError("Peça de densidade invertida ou degenerada (a >= b)")
    if np.any(alturas < 0):
        raise ValueError("Altura de densidade negativa")

    manter = alturas > 0
    esquerdas, direitas, alturas = esquerdas[manter], direitas[manter], alturas[manter]
    if esquerdas.size == 0:
        return np.empty(0), np.empty(0), np.empty(0)

    # Segmentos elementares; sobreposições somam alturas
    quebras = np.unique(np.concatenate([esquerdas, direitas]))
    seg_esq, seg_dir = quebras[:-1], quebras[1:]
    cobertura = (esquerdas[None, :] <= seg_esq[:, None]) & (direitas[None, :] >= seg_dir[:, None])
    seg_alt = cobertura.astype(float) @ alturas

    resultado = []
    for a, b, h in zip(seg_esq.tolist(), seg_dir.tolist(), seg_alt.tolist()):
        if h <= 0:
            continue
        if resultado and resultado[-1][1] == a and resultado[-1][2] == h:
            resultado[-1][1] = b
        else:
            resultado.append([a, b, h])
    if not resultado:
        return np.empty(0), np.empty(0), np.empty(0)
    tabela = np.array(resultado, dtype=float)
    return tabela[:, 0], tabela[:, 1], tabela[:, 2]


def atomic_measure(positions: Iterable[float], weights: Iterable[float]) -> Measure:
    """Medida puramente atômica a partir de arrays de posições e pesos."""
    posicoes = np.array(list(positions), dtype=float)
    pesos = np.array(list(weights), dtype=float)
    if posicoes.shape != pesos.shape:
        raise ValueError("Posições e pesos com tamanhos diferentes")
    posicoes, pesos = _normalizar_atomos(posicoes.ravel(), pesos.ravel())
    return Measure(posicoes, pesos)


def make_measure(spec: Mapping) -> Measure:
    """
    Constrói uma Measure normalizada a partir da descrição JSON.

    Args:
        spec: {"atoms": [{"x", "w"}], "density": [{"a", "b", "h"}]} (chaves opcionais)

    Returns:
        Medida com átomos ordenados e fundidos e peças disjuntas e fundidas

    Raises:
        ValueError: peso não positivo, peça invertida, altura negativa, NaN/inf
    """
    if not isinstance(spec, Mapping):
        raise ValueError("Descrição de medida deve ser um objeto JSON")
    desconhecidas = set(spec) - {"atoms", "density"}
    if desconhecidas:
        raise ValueError(f"Chaves desconhecidas na medida: {sorted(desconhecidas)}")

    try:
        atomos = [(float(a["x"]), float(a["w"])) for a in spec.get("atoms", [])]
        pecas = [(float(p["a"]), float(p["b"]), float(p["h"])) for p in spec.get("density", [])]
    except (KeyError, TypeError) as erro:
        raise ValueError(f"Descrição de medida malformada: {erro}") from erro

    posicoes = np.array([a[0] for a in atomos], dtype=float)
    pesos = np.array([a[1] for a in atomos], dtype=float)
    posicoes, pesos = _normalizar_atomos(posicoes, pesos)

    tabela = np.array(pecas, dtype=float).reshape(-1, 3)
    esquerdas, direitas, alturas = _normalizar_densidade(tabela[:, 0], tabela[:, 1], tabela[:, 2])
    return Measure(posicoes, pesos, esquerdas, direitas, alturas)


# ============================================================================
# OPERAÇÕES
# ============================================================================

def total_mass(mu: Measure) -> float:
    """‖μ‖ = Σw + Σh·(b−a)."""
    return math.fsum(mu.weights.tolist()) + math.fsum((mu.heights * (mu.rights - mu.lefts)).tolist())


def atomic_mass(mu: Measure) -> float:
    return math.fsum(mu.weights.tolist())


def _recortar_pecas(mu: Measure, conjunto: IntervalUnion) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    esquerdas, direitas, alturas = [], [], []
    for a, b, h in zip(mu.lefts.tolist(), mu.rights.tolist(), mu.heights.tolist()):
        for c, d in conjunto.clip(a, b):
            esquerdas.append(float(c))
            direitas.append(float(d))
            alturas.append(h)
    return np.array(esquerdas), np.array(direitas), np.array(alturas)


def restrict(mu: Measure, S: IntervalUnion) -> Measure:
    """μ↾S com S fechado: átomos mantidos se x ∈ S, peças recortadas a S."""
    if mu.n_atoms:
        dentro = S.contains_points(mu.positions)
        posicoes, pesos = mu.positions[dentro], mu.weights[dentro]
    else:
        posicoes, pesos = np.empty(0), np.empty(0)
    esquerdas, direitas, alturas = _recortar_pecas(mu, S)
    esquerdas, direitas, alturas = _normalizar_densidade(esquerdas, direitas, alturas)
    return Measure(posicoes, pesos, esquerdas, direitas, alturas)


def restrict_complement(mu: Measure, S: IntervalUnion) -> Measure:
    """μ↾(ℝ∖S): átomos fora de S; peças recortadas ao fecho do complementar."""
    if mu.n_atoms:
        fora = ~S.contains_points(mu.positions)
        posicoes, pesos = mu.positions[fora], mu.weights[fora]
    else:
        posicoes, pesos = np.empty(0), np.empty(0)
    esquerdas, direitas, alturas = _recortar_pecas(mu, S.complement())
    esquerdas, direitas, alturas = _normalizar_densidade(esquerdas, direitas, alturas)
    return Measure(posicoes, pesos, esquerdas, direitas, alturas)


def decompose(mu: Measure) -> Tuple[Measure, Measure]:
    """Decomposição de Lebesgue: (parte a.c., parte singular atômica)."""
    ac = Measure(np.empty(0), np.empty(0), mu.lefts, mu.rights, mu.heights)
    singular = Measure(mu.positions, mu.weights)
    return ac, singular


def mutually_singular(mu: Measure, nu: Measure) -> bool:
    """Partes singulares com conjuntos de átomos disjuntos."""
    if mu.n_atoms == 0 or nu.n_atoms == 0:
        return True
    i = np.searchsorted(nu.positions, mu.positions)
    esquerda = np.abs(mu.positions - nu.positions[np.clip(i - 1, 0, nu.n_atoms - 1)])
    direita = np.abs(mu.positions - nu.positions[np.clip(i, 0, nu.n_atoms - 1)])
    return bool(np.all(np.minimum(esquerda, direita) > TOL_FUSAO_ATOMOS))


def add_measures(mu: Measure, nu: Measure) -> Measure:
    posicoes, pesos = _normalizar_atomos(
        np.concatenate([mu.positions, nu.positions]), np.concatenate([mu.weights, nu.weights])
    )
    esquerdas, direitas, alturas = _normalizar_densidade(
        np.concatenate([mu.lefts, nu.lefts]),
        np.concatenate([mu.rights, nu.rights]),
        np.concatenate([mu.heights, nu.heights]),
    )
    return Measure(posicoes, pesos, esquerdas, direitas, alturas)


def scale_measure(mu: Measure, c: float) -> Measure:
    if not (c > 0 and math.isfinite(c)):
        raise ValueError(f"Fator de escala deve ser positivo e finito (recebido {c})")
    return Measure(mu.positions, mu.weights * c, mu.lefts, mu.rights, mu.heights * c)


def translate_measure(mu: Measure, s: float) -> Measure:
    """μ(· − s): massa deslocada de s para a direita."""
    if not math.isfinite(s):
        raise ValueError("Deslocamento não finito")
    return Measure(mu.positions + s, mu.weights, mu.lefts + s, mu.rights + s, mu.heights)


def integrate_polynomial(mu: Measure, coeffs: Sequence[float]) -> float:
    """
    ∫ g dμ para g(x) = Σ coeffs[k]·x^k.

    A parte contínua é integrada em torno do ponto médio de cada peça, o que
    evita cancelamento em peças curtas longe da origem.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.size == 0:
        return 0.0
    atomica = np.dot(mu.weights, np.polynomial.polynomial.polyval(mu.positions, coeffs)) if mu.n_atoms else 0.0
    if mu.n_pieces == 0:
        return float(atomica)
    return float(atomica + np.dot(mu.heights, integrar_polinomio_intervalos(coeffs, mu.lefts, mu.rights)))


def integrar_polinomio_intervalos(coeffs: np.ndarray, esquerdas: np.ndarray, direitas: np.ndarray) -> np.ndarray:
    """∫_a^b g para cada (a, b), via expansão de Taylor no ponto médio."""
    meio = 0.5 * (esquerdas + direitas)
    raio = 0.5 * (direitas - esquerdas)
    total = np.zeros_like(meio)
    derivada = np.asarray(coeffs, dtype=float)
    fatorial = 1.0
    for k in range(coeffs.size):
        if k > 0:
            derivada = np.polynomial.polynomial.polyder(derivada)
            fatorial *= k
        if k % 2 == 0:
            valor = np.polynomial.polynomial.polyval(meio, derivada)
            total += valor / fatorial * 2.0 * raio ** (k + 1) / (k + 1)
    return total


# ============================================================================
# SERIALIZAÇÃO
# ============================================================================

def serialize(mu: Measure) -> dict:
    """Documento JSON com floats exatos (repr de ida e volta)."""
    documento = {}
    if mu.n_atoms:
        documento["atoms"] = [{"x": x, "w": w} for x, w in zip(mu.positions.tolist(), mu.weights.tolist())]
    if mu.n_pieces:
        documento["density"] = [
            {"a": a, "b": b, "h": h}
            for a, b, h in zip(mu.lefts.tolist(), mu.rights.tolist(), mu.heights.tolist())
        ]
    return documento


def dumps(mu: Measure) -> str:
    return json.dumps(serialize(mu), sort_keys=True, indent=2)


def loads(texto: str) -> Measure:
    try:
        documento = json.loads(texto)
    except json.JSONDecodeError as erro:
        raise ValueError(f"JSON de medida inválido: {erro}") from erro
    return make_measure(documento)


def delta(x: float = 0.0, w: float = 1.0) -> Measure:
    """Massa pontual w·δ_x."""
    return atomic_measure([x], [w])


def uniform(a: float = 0.0, b: float = 1.0, h: float = 1.0) -> Measure:
    """Densidade constante h em [a, b]."""
    return make_measure({"density": [{"a": a, "b": b, "h": h}]})
