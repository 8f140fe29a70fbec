"""
Relatórios de verificação.

Cada verificação acumula asserções com folga (positiva = sobra) num
ReportBuilder e fecha um CheckReport. A margem do relatório é a menor folga;
ele passa se e somente se margem >= -tolerância. Um relatório sem asserções
falha: nenhuma verificação passa vazia.
"""

import json
import math
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.config import CheckStatus
from src.exceptions import InfeasibleError, PreconditionError

# Margem registrada em relatórios sem asserção (pré-condição, fora de regime)
MARGEM_SENTINELA = -1.0


@dataclass
class CheckReport:
    """
    Resultado de uma verificação.

    Attributes:
        check_id: Identificador da verificação
        passed: True se todas as asserções respeitam a tolerância
        margin: Menor folga entre as asserções
        inputs_echo: Entradas serializadas
        notes: Subcasos pulados, avisos e mensagens de erro
        status: passed, failed, precondition ou out_of_regime
        tolerance: Tolerância declarada da verificação
        n_assertions: Número de asserções avaliadas
    """
    check_id: str
    passed: bool
    margin: float
    inputs_echo: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    status: CheckStatus = CheckStatus.FAILED
    tolerance: float = 0.0
    n_assertions: int = 0

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "passed": self.passed,
            "margin": self.margin,
            "inputs_echo": self.inputs_echo,
            "notes": list(self.notes),
            "status": self.status.value,
            "tolerance": self.tolerance,
            "n_assertions": self.n_assertions,
        }

    @classmethod
    def from_dict(cls, documento: dict) -> "CheckReport":
        return cls(
            check_id=documento["check_id"],
            passed=bool(documento["passed"]),
            margin=float(documento["margin"]),
            inputs_echo=documento.get("inputs_echo", {}),
            notes=list(documento.get("notes", [])),
            status=CheckStatus(documento.get("status", CheckStatus.FAILED.value)),
            tolerance=float(documento.get("tolerance", 0.0)),
            n_assertions=int(documento.get("n_assertions", 0)),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, texto: str) -> "CheckReport":
        return cls.from_dict(json.loads(texto))


class ReportBuilder:
    """
    Acumulador de asserções de uma verificação.

    Uso:
        rel = ReportBuilder("boole", {"t": t}, tolerancia)
        with rel.protegido():
            rel.afirmar("lado positivo", folga)
        return rel.build()
    """

    def __init__(self, check_id: str, inputs_echo: Optional[Dict[str, Any]] = None, tolerancia: float = 0.0):
        self.check_id = check_id
        self.inputs_echo = inputs_echo or {}
        self.tolerancia = tolerancia
        self.folgas: List[float] = []
        self.notas: List[str] = []
        self.falhas: List[str] = []
        self._status_especial: Optional[CheckStatus] = None

    def afirmar(self, nome: str, folga: float) -> bool:
        """Registra uma asserção; folga NaN conta como falha."""
        folga = float(folga)
        if math.isnan(folga):
            folga = -math.inf
        self.folgas.append(folga)
        ok = folga >= -self.tolerancia
        if not ok:
            self.falhas.append(f"{nome}: folga {folga:.6g}")
        return ok

    def nota(self, texto: str):
        self.notas.append(texto)

    def precondicao(self, motivo: str):
        self._status_especial = CheckStatus.PRECONDITION
        self.notas.append(f"pré-condição violada: {motivo}")

    def fora_de_regime(self, motivo: str):
        self._status_especial = CheckStatus.OUT_OF_REGIME
        self.notas.append(f"fora de regime: {motivo}")

    @contextmanager
    def protegido(self):
        """Converte exceções do corpo da verificação em status do relatório."""
        try:
            yield self
        except PreconditionError as e:
            self.precondicao(str(e))
        except InfeasibleError as e:
            self.fora_de_regime(str(e))
        except Exception as e:
            self.falhas.append(f"Erro na verificação: {type(e).__name__}: {str(e)}")
            self.folgas.append(-math.inf)

    def build(self) -> CheckReport:
        notas = list(self.notas) + list(self.falhas)
        if self._status_especial is not None:
            return CheckReport(
                self.check_id, False, MARGEM_SENTINELA, self.inputs_echo, notas,
                self._status_especial, self.tolerancia, len(self.folgas),
            )
        if not self.folgas:
            notas.append("nenhuma asserção avaliada")
            return CheckReport(
                self.check_id, False, MARGEM_SENTINELA, self.inputs_echo, notas,
                CheckStatus.FAILED, self.tolerancia, 0,
            )
        margem = min(self.folgas)
        passou = margem >= -self.tolerancia
        # JSON não representa infinito
        margem_json = margem if math.isfinite(margem) else MARGEM_SENTINELA if margem < 0 else 1.0
        return CheckReport(
            self.check_id, passou, margem_json, self.inputs_echo, notas,
            CheckStatus.PASSED if passou else CheckStatus.FAILED, self.tolerancia, len(self.folgas),
        )
