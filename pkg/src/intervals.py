"""
Uniões finitas de intervalos fechados da reta.

IntervalUnion é a representação universal de conjuntos: conjuntos de nível,
conjuntos homogêneos e truncamentos de Cantor. Os extremos podem ser float ou
Fraction; as operações não misturam aritméticas além do que Python já faz.
"""

import bisect
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

Numero = Union[float, int, Fraction]
Par = Tuple[Numero, Numero]

INF = float("inf")


def _eh_exato(valor: Numero) -> bool:
    return isinstance(valor, (Fraction, int)) and not isinstance(valor, bool)


def fracao_para_texto(valor: Fraction) -> str:
    """Fraction -> "p/q" (inteiros como "p/1")."""
    valor = Fraction(valor)
    return f"{valor.numerator}/{valor.denominator}"


def texto_para_fracao(texto: str) -> Fraction:
    return Fraction(texto)


@dataclass(frozen=True)
class IntervalUnion:
    """
    União finita de intervalos fechados, normalizada.

    Invariantes após from_pairs: left < right em cada intervalo, intervalos
    ordenados e separados por lacunas de comprimento positivo.

    Attributes:
        intervals: Pares (left, right) ordenados
        approximate: True quando os extremos vêm de varredura aproximada
        error_bound: Cota do erro de resolução associada à aproximação
    """
    intervals: Tuple[Par, ...] = ()
    approximate: bool = field(default=False, compare=False)
    error_bound: float = field(default=0.0, compare=False)

    # ------------------------------------------------------------------
    # Construção
    # ------------------------------------------------------------------

    @classmethod
    def from_pairs(
        cls,
        pares: Iterable[Sequence[Numero]],
        approximate: bool = False,
        error_bound: float = 0.0,
    ) -> "IntervalUnion":
        """Normaliza pares: descarta degenerados, ordena e funde sobreposições e contatos."""
        limpos: List[Par] = []
        for par in pares:
            esquerda, direita = par[0], par[1]
            if esquerda != esquerda or direita != direita:
                raise ValueError("Extremo NaN em união de intervalos")
            if esquerda < direita:
                limpos.append((esquerda, direita))
        limpos.sort()

        fundidos: List[Par] = []
        for esquerda, direita in limpos:
            if fundidos and esquerda <= fundidos[-1][1]:
                if direita > fundidos[-1][1]:
                    fundidos[-1] = (fundidos[-1][0], direita)
            else:
                fundidos.append((esquerda, direita))
        return cls(tuple(fundidos), approximate, error_bound)

    @classmethod
    def empty(cls) -> "IntervalUnion":
        return cls(())

    @classmethod
    def from_arrays(cls, lefts: np.ndarray, rights: np.ndarray, **kwargs) -> "IntervalUnion":
        return cls.from_pairs(zip(np.asarray(lefts).tolist(), np.asarray(rights).tolist()), **kwargs)

    # ------------------------------------------------------------------
    # Consultas
    # ------------------------------------------------------------------

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    @property
    def is_exact(self) -> bool:
        return all(_eh_exato(a) and _eh_exato(b) for a, b in self.intervals)

    @property
    def lefts(self) -> np.ndarray:
        return np.array([float(a) for a, _ in self.intervals], dtype=float)

    @property
    def rights(self) -> np.ndarray:
        return np.array([float(b) for _, b in self.intervals], dtype=float)

    def length(self) -> Numero:
        """Medida de Lebesgue (exata para extremos racionais)."""
        if not self.intervals:
            return 0.0
        if self.is_exact:
            return sum((b - a for a, b in self.intervals), Fraction(0))
        return math.fsum(float(b) - float(a) for a, b in self.intervals)

    def hull(self) -> Par:
        if not self.intervals:
            raise ValueError("Envoltória de conjunto vazio")
        return self.intervals[0][0], self.intervals[-1][1]

    def diam(self) -> Numero:
        esquerda, direita = self.hull()
        return direita - esquerda

    def endpoints(self) -> List[Numero]:
        pontos: List[Numero] = []
        for a, b in self.intervals:
            pontos.extend((a, b))
        return pontos

    def contains_point(self, x: Numero) -> bool:
        """Pertinência ao fechado."""
        i = bisect.bisect_right(self.intervals, (x, INF)) - 1
        return i >= 0 and self.intervals[i][0] <= x <= self.intervals[i][1]

    def contains_points(self, xs: np.ndarray) -> np.ndarray:
        """Pertinência vetorizada (extremos convertidos para float)."""
        xs = np.asarray(xs, dtype=float)
        if not self.intervals:
            return np.zeros(xs.shape, dtype=bool)
        esquerdas, direitas = self.lefts, self.rights
        i = np.searchsorted(esquerdas, xs, side="right") - 1
        valido = i >= 0
        i = np.clip(i, 0, None)
        return valido & (xs <= direitas[i])

    # ------------------------------------------------------------------
    # Álgebra
    # ------------------------------------------------------------------

    def _meta(self, other: "IntervalUnion") -> dict:
        return {
            "approximate": self.approximate or other.approximate,
            "error_bound": self.error_bound + other.error_bound,
        }

    def union(self, other: "IntervalUnion") -> "IntervalUnion":
        return IntervalUnion.from_pairs(self.intervals + other.intervals, **self._meta(other))

    def intersection(self, other: "IntervalUnion") -> "IntervalUnion":
        pares: List[Par] = []
        i = j = 0
        a, b = self.intervals, other.intervals
        while i < len(a) and j < len(b):
            esquerda = max(a[i][0], b[j][0])
            direita = min(a[i][1], b[j][1])
            if esquerda < direita:
                pares.append((esquerda, direita))
            if a[i][1] < b[j][1]:
                i += 1
            else:
                j += 1
        return IntervalUnion.from_pairs(pares, **self._meta(other))

    def complement(self) -> "IntervalUnion":
        """Fecho do complementar (extremos infinitos nas pontas)."""
        pares: List[Par] = []
        anterior: Numero = -INF
        for a, b in self.intervals:
            pares.append((anterior, a))
            anterior = b
        pares.append((anterior, INF))
        return IntervalUnion.from_pairs(pares, self.approximate, self.error_bound)

    def difference(self, other: "IntervalUnion") -> "IntervalUnion":
        if not other.intervals:
            return self
        return self.intersection(other.complement())

    def symmetric_difference_length(self, other: "IntervalUnion") -> Numero:
        return self.difference(other).length() + other.difference(self).length()

    def issubset(self, other: "IntervalUnion", tol: float = 0.0) -> bool:
        """Contenção a menos de um conjunto de comprimento <= tol."""
        return self.difference(other).length() <= tol

    def clip(self, esquerda: Numero, direita: Numero) -> "IntervalUnion":
        return self.intersection(IntervalUnion.from_pairs([(esquerda, direita)]))

    # ------------------------------------------------------------------
    # Conversões
    # ------------------------------------------------------------------

    def to_float(self) -> Tuple["IntervalUnion", float]:
        """Extremos convertidos para float, com o maior erro de conversão por extremo."""
        erro = 0.0
        pares: List[Par] = []
        for a, b in self.intervals:
            fa, fb = float(a), float(b)
            if _eh_exato(a):
                erro = max(erro, float(abs(Fraction(fa) - a)))
            if _eh_exato(b):
                erro = max(erro, float(abs(Fraction(fb) - b)))
            pares.append((fa, fb))
        return IntervalUnion.from_pairs(pares, self.approximate, self.error_bound + erro), erro

    def to_dict(self) -> dict:
        """Forma JSON: {"intervals": [[a, b], ...]} mais "exact" com "p/q" quando racional."""
        flutuante, erro = self.to_float()
        documento = {"intervals": [[a, b] for a, b in flutuante.intervals]}
        if self.intervals and self.is_exact:
            documento["exact"] = [
                [fracao_para_texto(a), fracao_para_texto(b)] for a, b in self.intervals
            ]
            documento["float_error"] = erro
        if self.approximate:
            documento["approximate"] = True
            documento["error_bound"] = self.error_bound
        return documento

    @classmethod
    def from_dict(cls, documento: dict) -> "IntervalUnion":
        """Lê {"exact": ...} quando presente, senão {"intervals": ...}."""
        if "exact" in documento:
            pares = [(texto_para_fracao(a), texto_para_fracao(b)) for a, b in documento["exact"]]
        elif "intervals" in documento:
            pares = []
            for par in documento["intervals"]:
                if len(par) != 2:
                    raise ValueError(f"Intervalo malformado: {par!r}")
                a, b = float(par[0]), float(par[1])
                if not (math.isfinite(a) and math.isfinite(b)):
                    raise ValueError(f"Intervalo com extremo não finito: {par!r}")
                if a > b:
                    raise ValueError(f"Intervalo invertido: {par!r}")
                pares.append((a, b))
        else:
            raise ValueError("Documento de conjunto sem 'intervals' nem 'exact'")
        return cls.from_pairs(pares)

    def __repr__(self) -> str:
        corpo = " ∪ ".join(f"[{a}, {b}]" for a, b in self.intervals) or "∅"
        marca = " (aprox.)" if self.approximate else ""
        return f"IntervalUnion({corpo}){marca}"
