"""
Programa principal: transformadas de medidas, varreduras de cauda, construção
do conjunto de Cantor homogêneo e suíte de verificação.

Subcomandos:
- transform: tabela (x, H, Re F, Im F, status) em pontos dados
- sweep: CSV "t,lambda,t_lambda" sobre uma grade de t
- verify: pacote JSON de relatórios + código de saída
- build-set: truncamento do conjunto de Cantor com extremos racionais exatos

Códigos de saída: 0 tudo passou; 1 falha ou erro de entrada; 2 apenas
pré-condições violadas ou casos fora de regime.
"""

import argparse
import json
import math
import sys
from pathlib import Path
from typing import List, Optional

import pandas as pd

# Adicionar src ao path
sys.path.insert(0, str(Path(__file__).parent))

from src.cantor_lab import build_set, set_from_spec
from src.config import DEFAULT_CONFIG, RunConfig, TGrid, Transform
from src.exceptions import AnaliseError
from src.intervals import IntervalUnion
from src.level_sets import sweep_to_csv, tail_sweep
from src.measure_core import Measure, loads
from src.metrics import SuiteMetrics
from src.transform_eval import BoundaryKind, boundary_value
from src.verify_harness import SELETORES, run_suite, suite_exit_code, summarize

SAIDA_OK = 0
SAIDA_FALHA = 1


def _log(mensagem: str, args: argparse.Namespace):
    """Progresso vai para stderr quando o resultado vai para stdout."""
    print(mensagem, file=sys.stderr if args.out is None else sys.stdout)


def _emitir(texto: str, destino: Optional[str]):
    if destino is None:
        sys.stdout.write(texto)
    else:
        with open(destino, "w", encoding="utf-8", newline="\n") as arquivo:
            arquivo.write(texto)


def _carregar_medida(caminho: str) -> Measure:
    return loads(Path(caminho).read_text(encoding="utf-8"))


def _carregar_conjunto(caminho: str, config: RunConfig) -> IntervalUnion:
    try:
        documento = json.loads(Path(caminho).read_text(encoding="utf-8"))
    except json.JSONDecodeError as erro:
        raise ValueError(f"JSON de conjunto inválido: {erro}") from erro
    return set_from_spec(documento, config)


def _config_de_argumentos(args: argparse.Namespace) -> RunConfig:
    tol = getattr(args, "tol", None)
    return DEFAULT_CONFIG.com_sobrescritas(
        tol_identidade=tol,
        tol_extremos=tol,
        seed_k=getattr(args, "seed_k", None),
        profundidade_maxima=getattr(args, "depth", None),
    )


def _pontos(texto: str) -> List[float]:
    try:
        pontos = [float(p) for p in texto.split(",") if p.strip()]
    except ValueError as erro:
        raise ValueError(f"Lista de pontos inválida: '{texto}'") from erro
    if not pontos or not all(math.isfinite(p) for p in pontos):
        raise ValueError(f"Lista de pontos inválida: '{texto}'")
    return pontos


# ============================================================================
# SUBCOMANDOS
# ============================================================================

def cmd_transform(args: argparse.Namespace) -> int:
    mu = _carregar_medida(args.measure)
    linhas = []
    for x in _pontos(args.points):
        fronteira = boundary_value(mu, x)
        real = fronteira.value if fronteira.kind != BoundaryKind.POLE else math.nan
        hilbert = real / math.pi if fronteira.kind == BoundaryKind.REGULAR else math.nan
        linhas.append({"x": x, "H": hilbert, "re_F": real, "im_F": fronteira.imag, "status": fronteira.kind.value})
    tabela = pd.DataFrame(linhas, columns=["x", "H", "re_F", "im_F", "status"])
    _emitir(tabela.to_csv(index=False, float_format="%.17g", na_rep="", lineterminator="\n"), args.out)
    return SAIDA_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    config = _config_de_argumentos(args)
    mu = _carregar_medida(args.measure)
    conjunto = _carregar_conjunto(args.set, config) if args.set else None
    grade = TGrid.parse(args.t_grid).values()
    pontos = tail_sweep(mu, grade, conjunto, Transform(args.transform), config)
    _emitir(sweep_to_csv(pontos), args.out)
    return SAIDA_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = _config_de_argumentos(args)
    medida = _carregar_medida(args.measure) if args.measure else None
    conjunto = _carregar_conjunto(args.set, config) if args.set else None
    grade = TGrid.parse(args.t_grid).values().tolist() if args.t_grid else None

    metricas = SuiteMetrics(args.selector) if args.metrics else None
    if metricas is not None:
        metricas.iniciar()

    _log("=" * 80, args)
    _log(f"🔬 Verificação: {args.selector} ({config.get_description()})", args)
    _log("=" * 80, args)

    def progresso(grupo, relatorio):
        simbolo = {"passed": "✅", "failed": "❌"}.get(relatorio.status.value, "⚠️")
        _log(f"{simbolo} [{grupo}] {relatorio.check_id}: margem {relatorio.margin:.3g}", args)

    relatorios = run_suite(args.selector, config, metricas, medida, conjunto, grade, progresso)
    resumo = summarize(relatorios)
    pacote = {"reports": [r.to_dict() for r in relatorios], "summary": resumo}
    _emitir(json.dumps(pacote, sort_keys=True, indent=2, ensure_ascii=False) + "\n", args.out)

    if metricas is not None:
        metricas.finalizar()
        Path(args.metrics).write_text(
            json.dumps(metricas.to_dict(), indent=2, ensure_ascii=False), encoding="utf-8"
        )
        _log(f"\n💾 Métricas salvas em: {args.metrics}", args)
        metricas.imprimir_resumo(sys.stderr if args.out is None else sys.stdout)

    _log(f"\n📊 {resumo['total']} relatórios: {resumo['by_status']}", args)
    return suite_exit_code(relatorios)


def cmd_build_set(args: argparse.Namespace) -> int:
    config = _config_de_argumentos(args)
    semente = args.seed_k if args.seed_k is not None else config.seed_k
    conjunto = build_set(args.levels, semente, args.blocks_only, config)
    documento = conjunto.to_dict()
    documento["cantor"] = {"levels": args.levels, "seed_k": semente, "blocks_only": args.blocks_only}
    _emitir(json.dumps(documento, sort_keys=True, indent=2) + "\n", args.out)
    return SAIDA_OK


# ============================================================================
# ARGUMENTOS
# ============================================================================

def criar_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="main.py", description="Transformadas de Hilbert de medidas e conjuntos homogêneos"
    )
    sub = parser.add_subparsers(dest="comando", required=True)

    transform = sub.add_parser("transform", help="H, Re F e Im F em pontos do eixo real")
    transform.add_argument("--measure", required=True, help="JSON da medida")
    transform.add_argument("--points", required=True, help="pontos separados por vírgula")
    transform.add_argument("--out", help="arquivo CSV de saída (padrão stdout)")
    transform.set_defaults(func=cmd_transform)

    sweep = sub.add_parser("sweep", help="varredura t, λ(t), t·λ(t)")
    sweep.add_argument("--measure", required=True)
    sweep.add_argument("--set", help="JSON do conjunto S (intervalos ou cantor)")
    sweep.add_argument("--t-grid", default="0.1:100:31:log", help="a:b:n:log|linear")
    sweep.add_argument("--transform", choices=[t.value for t in Transform], default=Transform.H.value)
    sweep.add_argument("--depth", type=int)
    sweep.add_argument("--seed-k", type=int)
    sweep.add_argument("--out")
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify", help="suíte de verificação")
    verify.add_argument("selector", help=f"um de: {', '.join(SELETORES)}")
    verify.add_argument("--measure", help="medida extra do usuário")
    verify.add_argument("--set", help="conjunto extra do usuário")
    verify.add_argument("--t-grid", help="grade das verificações do usuário")
    verify.add_argument("--tol", type=float, help="tolerância de identidades e extremos")
    verify.add_argument("--seed-k", type=int)
    verify.add_argument("--depth", type=int)
    verify.add_argument("--metrics", help="JSON de métricas de desempenho")
    verify.add_argument("--out")
    verify.set_defaults(func=cmd_verify)

    build = sub.add_parser("build-set", help="truncamento do conjunto de Cantor homogêneo")
    build.add_argument("--levels", type=int, required=True)
    build.add_argument("--seed-k", type=int)
    build.add_argument("--depth", type=int)
    build.add_argument("--blocks-only", action="store_true", help="apenas os blocos, sem K_N")
    build.add_argument("--out")
    build.set_defaults(func=cmd_build_set)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Função principal; devolve o código de saída."""
    parser = criar_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, AnaliseError) as erro:
        print(f"❌ {type(erro).__name__}: {erro}", file=sys.stderr)
        return SAIDA_FALHA


if __name__ == "__main__":
    sys.exit(main())
