#!/usr/bin/env python3
"""
Script de exemplo para uso rápido das transformadas, conjuntos de nível e
construções de Cantor.

Este script demonstra diferentes formas de usar o sistema.
"""

import math
import sys
from pathlib import Path

# Adicionar diretório ao path
sys.path.insert(0, str(Path(__file__).parent))

from src.cantor_lab import build_set, check_thm16_decay
from src.config import TGrid, Transform
from src.fixtures import CONJUNTO_CHAVE
from src.level_sets import distribution, sweep_to_csv, tail_sweep
from src.measure_core import add_measures, delta, uniform
from src.set_geometry import homogeneity_delta
from src.transform_eval import hilbert
from src.verify_harness import check_boole


def exemplo_boole():
    """Exemplo: igualdade de Boole para δ₀."""
    print("\n" + "=" * 80)
    print("EXEMPLO 1: IGUALDADE DE BOOLE")
    print("=" * 80)

    mu = delta(0.0)
    print(f"H_δ₀(1) = {hilbert(mu, 1.0):.12f} (esperado {-1 / math.pi:.12f})")
    lam = distribution(mu, 1.0, transform=Transform.H)
    print(f"|{{|H| > 1}}| = {lam:.12f} (esperado {2 / math.pi:.12f})")
    relatorio = check_boole(mu, 1.0)
    print(f"{'✅' if relatorio.passed else '❌'} boole: margem {relatorio.margin:.3g}")
    return relatorio


def exemplo_varredura():
    """Exemplo: varredura de cauda para δ₀ + uniforme em [0, 1]."""
    print("\n" + "=" * 80)
    print("EXEMPLO 2: VARREDURA DE CAUDA")
    print("=" * 80)

    mu = add_measures(delta(0.0), uniform(0.0, 1.0))
    pontos = tail_sweep(mu, TGrid.parse("1:100:5:log").values())
    print(sweep_to_csv(pontos))
    return pontos


def exemplo_homogeneidade():
    """Exemplo: constante de homogeneidade de [0,1] ∪ [2,3]."""
    print("\n" + "=" * 80)
    print("EXEMPLO 3: CONSTANTE DE HOMOGENEIDADE")
    print("=" * 80)

    relatorio = homogeneity_delta(CONJUNTO_CHAVE)
    print(f"δ = {relatorio.delta:.12f} em x={relatorio.witness_x}, a={relatorio.witness_a}")
    print(f"{'✅' if relatorio.certified else '⚠️'} certificado pela grade: {relatorio.grid_delta:.6f} "
          f"(lacuna {relatorio.grid_gap:.2e} ≤ {relatorio.grid_error_bound:.2e})")
    return relatorio


def exemplo_cantor():
    """Exemplo: truncamento N=1 do conjunto de Cantor homogêneo e decaimento em t=50."""
    print("\n" + "=" * 80)
    print("EXEMPLO 4: CONJUNTO DE CANTOR HOMOGÊNEO")
    print("=" * 80)

    conjunto = build_set(1, seed=2)
    print(f"📊 {len(conjunto)} intervalos, medida {conjunto.length()}")
    relatorio = check_thm16_decay(N=2, seed=2, t=50.0)
    print(f"{'✅' if relatorio.passed else '❌'} decaimento: margem {relatorio.margin:.3g}")
    for nota in relatorio.notes:
        print(f"   {nota}")
    return relatorio


EXEMPLOS = {
    "1": exemplo_boole,
    "2": exemplo_varredura,
    "3": exemplo_homogeneidade,
    "4": exemplo_cantor,
}


def menu_interativo():
    """Menu interativo para escolher exemplo."""
    print("\n" + "=" * 80)
    print("TRANSFORMADAS DE MEDIDAS - EXEMPLOS")
    print("=" * 80)
    print("\nEscolha um exemplo para executar:")
    print("\n1. Igualdade de Boole")
    print("2. Varredura de cauda")
    print("3. Constante de homogeneidade")
    print("4. Conjunto de Cantor homogêneo")
    print("5. Executar todos os exemplos")
    print("0. Sair")

    escolha = input("\nDigite o número da opção desejada: ").strip()

    if escolha in EXEMPLOS:
        EXEMPLOS[escolha]()
    elif escolha == "5":
        print("\n🚀 Executando todos os exemplos...")
        for exemplo in EXEMPLOS.values():
            exemplo()
    elif escolha == "0":
        print("\n👋 Até logo!")
        sys.exit(0)
    else:
        print("\n❌ Opção inválida. Tente novamente.")
        menu_interativo()


if __name__ == "__main__":
    if len(sys.argv) == 1:
        menu_interativo()
    elif len(sys.argv) == 2 and sys.argv[1] in EXEMPLOS:
        EXEMPLOS[sys.argv[1]]()
    elif len(sys.argv) == 2 and sys.argv[1] == "all":
        for exemplo in EXEMPLOS.values():
            exemplo()
    else:
        print("❌ Uso: python exemplos.py [1|2|3|4|all]")
        sys.exit(1)
