"""
Módulo de métricas de desempenho das verificações.

Coleta, por verificação e para a suíte inteira:
- Tempo de execução
- Uso de memória (RSS) antes, depois e pico
- Amostras de CPU
- Resultado (status e margem) para o resumo

As métricas vão para um JSON separado (--metrics), nunca para o pacote de
relatórios, que precisa ser byte a byte determinístico.
"""

import os
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime
from typing import Dict, List, Optional

import pandas as pd
import psutil


def _memoria_atual_mb() -> float:
    return psutil.Process(os.getpid()).memory_info().rss / 1024 / 1024


@dataclass
class CheckMetrics:
    """Métricas de uma verificação."""

    check_id: str
    tempo_inicio: Optional[float] = None
    tempo_fim: Optional[float] = None
    tempo_total_segundos: float = 0.0

    memoria_antes_mb: float = 0.0
    memoria_depois_mb: float = 0.0
    memoria_pico_mb: float = 0.0

    cpu_percent_media: float = 0.0
    cpu_percent_pico: float = 0.0
    _amostras_cpu: List[float] = field(default_factory=list)

    status: str = ""
    margem: float = 0.0

    def iniciar(self):
        """Inicia o rastreamento."""
        processo = psutil.Process(os.getpid())
        self.tempo_inicio = time.time()
        self.memoria_antes_mb = _memoria_atual_mb()
        self.memoria_pico_mb = self.memoria_antes_mb
        # Primeira chamada de cpu_percent só estabelece a referência
        processo.cpu_percent(interval=None)

    def amostrar(self):
        """Coleta uma amostra de memória e CPU."""
        processo = psutil.Process(os.getpid())
        self.memoria_pico_mb = max(self.memoria_pico_mb, _memoria_atual_mb())
        cpu = processo.cpu_percent(interval=None)
        self._amostras_cpu.append(cpu)
        self.cpu_percent_pico = max(self.cpu_percent_pico, cpu)

    def finalizar(self, status: str = "", margem: float = 0.0):
        if self.tempo_inicio is None:
            return
        self.amostrar()
        self.tempo_fim = time.time()
        self.tempo_total_segundos = self.tempo_fim - self.tempo_inicio
        self.memoria_depois_mb = _memoria_atual_mb()
        if self._amostras_cpu:
            self.cpu_percent_media = sum(self._amostras_cpu) / len(self._amostras_cpu)
        self.status = status
        self.margem = margem

    def to_dict(self) -> Dict:
        return {
            "check_id": self.check_id,
            "tempo_total_segundos": round(self.tempo_total_segundos, 4),
            "memoria_antes_mb": round(self.memoria_antes_mb, 2),
            "memoria_depois_mb": round(self.memoria_depois_mb, 2),
            "memoria_pico_mb": round(self.memoria_pico_mb, 2),
            "memoria_delta_mb": round(self.memoria_depois_mb - self.memoria_antes_mb, 2),
            "cpu_percent_media": round(self.cpu_percent_media, 1),
            "cpu_percent_pico": round(self.cpu_percent_pico, 1),
            "status": self.status,
            "margem": self.margem,
        }


@dataclass
class SuiteMetrics:
    """Métricas agregadas de uma execução da suíte."""

    seletor: str
    data_execucao: str = field(default_factory=lambda: datetime.now().isoformat())
    verificacoes: List[CheckMetrics] = field(default_factory=list)
    tempo_total_segundos: float = 0.0
    info_sistema: Dict[str, str] = field(default_factory=dict)
    _inicio: Optional[float] = None

    def __post_init__(self):
        self.info_sistema = {
            "num_cpus": str(psutil.cpu_count()),
            "memoria_total_gb": f"{psutil.virtual_memory().total / (1024**3):.2f}",
        }

    def iniciar(self):
        self._inicio = time.time()

    @contextmanager
    def medir(self, check_id: str):
        """Mede o bloco; o chamador preenche status e margem no objeto devolvido."""
        metricas = CheckMetrics(check_id)
        metricas.iniciar()
        try:
            yield metricas
        finally:
            if metricas.tempo_fim is None:
                metricas.finalizar(metricas.status, metricas.margem)
            self.verificacoes.append(metricas)

    def finalizar(self):
        if self._inicio is not None:
            self.tempo_total_segundos = time.time() - self._inicio

    def como_tabela(self) -> pd.DataFrame:
        return pd.DataFrame([m.to_dict() for m in self.verificacoes])

    def obter_estatisticas_agregadas(self) -> Dict:
        """Média, desvio, mínimo e máximo de tempo e memória por verificação."""
        if not self.verificacoes:
            return {}
        tabela = self.como_tabela()
        estatisticas = {}
        for coluna in ("tempo_total_segundos", "memoria_pico_mb"):
            serie = tabela[coluna]
            estatisticas[coluna] = {
                "media": float(serie.mean()),
                "desvio": float(serie.std(ddof=0)),
                "minimo": float(serie.min()),
                "maximo": float(serie.max()),
            }
        estatisticas["verificacao_mais_lenta"] = str(tabela.loc[tabela["tempo_total_segundos"].idxmax(), "check_id"])
        estatisticas["por_status"] = {str(k): int(v) for k, v in tabela["status"].value_counts().sort_index().items()}
        return estatisticas

    def to_dict(self) -> Dict:
        return {
            "seletor": self.seletor,
            "data_execucao": self.data_execucao,
            "tempo_total_segundos": round(self.tempo_total_segundos, 4),
            "info_sistema": self.info_sistema,
            "estatisticas": self.obter_estatisticas_agregadas(),
            "verificacoes": [m.to_dict() for m in self.verificacoes],
        }

    def imprimir_resumo(self, arquivo=None):
        """Imprime resumo legível (em arquivo, por padrão stdout)."""
        def p(texto=""):
            print(texto, file=arquivo)

        p("\n" + "=" * 80)
        p(f"RESUMO DAS MÉTRICAS - Seletor: {self.seletor}")
        p("=" * 80)
        p(f"\n⏰ Tempo total: {self.tempo_total_segundos:.2f}s")
        p(f"📊 Verificações: {len(self.verificacoes)}")

        stats = self.obter_estatisticas_agregadas()
        if stats:
            p("\n" + "-" * 80)
            p("ESTATÍSTICAS AGREGADAS")
            p("-" * 80)
            p(f"⏱️  Tempo médio por verificação: {stats['tempo_total_segundos']['media']:.3f}s")
            p(f"💾 Memória pico média: {stats['memoria_pico_mb']['media']:.1f} MB")
            p(f"🐢 Verificação mais lenta: {stats['verificacao_mais_lenta']}")
            for status, quantidade in stats["por_status"].items():
                p(f"   {status}: {quantidade}")

        p("\n" + "=" * 80)
        p("FIM DO RESUMO")
        p("=" * 80)
