"""
Testes das verificações numéricas e da suíte.

Cada caso usa entradas com resultado conhecido em forma fechada; a suíte
completa (seletor "all") roda em TestSuiteCompleta.
"""

import math
import sys
import time
import unittest
from pathlib import Path

import numpy as np

# Adicionar diretório pai ao path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import CheckStatus, RunConfig
from src.fixtures import CONJUNTO_CHAVE, INTERVALO_UNITARIO
from src.measure_core import add_measures, atomic_measure, delta, uniform
from src.metrics import SuiteMetrics
from src.reports import CheckReport
from src.verify_harness import (
    check_boole,
    check_en_lower_bound,
    check_key_ineq,
    check_lemma33,
    check_limit_18,
    check_loomis,
    check_oracle_equivalence,
    check_poltoratski,
    check_prop32,
    check_prop34,
    check_prop52,
    check_restriction,
    check_subadditivity,
    check_thm14,
    mobius_level_set,
    run_suite,
    suite_exit_code,
    summarize,
)


class TestVerifyHarness(unittest.TestCase):
    """Verificações individuais com entradas de resultado conhecido."""

    @classmethod
    def setUpClass(cls):
        print("\n" + "=" * 80)
        print("TESTES DAS VERIFICAÇÕES")
        print("=" * 80)
        cls.config = RunConfig()

    def assertPassou(self, relatorio: CheckReport):
        self.assertEqual(relatorio.status, CheckStatus.PASSED, relatorio.notes)
        self.assertTrue(relatorio.passed)

    def test_1_boole(self):
        self.assertPassou(check_boole(delta(0.0), 1.0, self.config))
        relatorio = check_boole(uniform(0.0, 1.0), 1.0, self.config)
        self.assertEqual(relatorio.status, CheckStatus.PRECONDITION)
        self.assertEqual(relatorio.margin, -1.0)
        print("\n✅ Boole OK")

    def test_2_loomis_e_limite(self):
        self.assertPassou(check_loomis(delta(0.0), [0.1, 1.0, 10.0], self.config))
        self.assertPassou(check_limit_18(delta(0.0), [10.0, 30.0, 100.0], self.config))
        relatorio = check_loomis(delta(0.0), [], self.config)
        self.assertEqual(relatorio.status, CheckStatus.FAILED)

    def test_3_prop32(self):
        """Menor |F| é 1/√2 na componente direita de Γ_1(δ₀)."""
        relatorio = check_prop32(delta(0.0), 1.0, self.config)
        self.assertPassou(relatorio)
        self.assertEqual(relatorio.n_assertions, 2)
        self.assertAlmostEqual(relatorio.margin, 8.0 * math.pi ** 2 / math.sqrt(2.0) - 1.0, places=9)

    def test_4_prop34(self):
        relatorio = check_prop34(delta(0.0), 100.0, 1.0, self.config)
        self.assertPassou(relatorio)
        self.assertEqual(
            check_prop34(delta(0.0), 100.0, 1.5, self.config).status, CheckStatus.PRECONDITION
        )

    def test_5_desigualdade_chave(self):
        mu = atomic_measure([0.5, 2.5], [0.5, 0.5])
        limiar = math.pi / 3.0
        self.assertPassou(check_key_ineq(mu, CONJUNTO_CHAVE, 10.0 * limiar, self.config))
        relatorio = check_key_ineq(mu, CONJUNTO_CHAVE, 0.5, self.config)
        self.assertEqual(relatorio.status, CheckStatus.OUT_OF_REGIME)
        self.assertEqual(
            check_key_ineq(delta(1.5), CONJUNTO_CHAVE, 100.0, self.config).status,
            CheckStatus.PRECONDITION,
        )
        print("\n✅ Desigualdade chave OK")

    def test_6_thm14_e_restricoes(self):
        grade = self.config.grade_cauda(math.pi).tolist()
        self.assertPassou(check_thm14(delta(0.5), INTERVALO_UNITARIO, grade, self.config))
        self.assertEqual(
            check_thm14(delta(0.5), INTERVALO_UNITARIO, [0.1, 1.0], self.config).status,
            CheckStatus.OUT_OF_REGIME,
        )
        self.assertPassou(
            check_restriction(delta(0.5), INTERVALO_UNITARIO, delta(3.0, 2.0), [10.0, 100.0, 1000.0], self.config)
        )
        self.assertPassou(check_en_lower_bound(delta(0.5), INTERVALO_UNITARIO, 4, 1000.0, self.config))

    def test_7_familia_de_mobius(self):
        """{F_1 > 1/2} para δ₀ é (−1, 1)."""
        conjunto = mobius_level_set(delta(0.0), 1.0, self.config)
        esquerda, direita = conjunto.hull()
        self.assertAlmostEqual(float(esquerda), -1.0, places=12)
        self.assertAlmostEqual(float(direita), 1.0, places=12)
        self.assertAlmostEqual(float(conjunto.length()), 2.0, places=12)
        self.assertPassou(check_lemma33(delta(0.0), 1.0, self.config))
        self.assertPassou(check_lemma33(atomic_measure([0.0, 1.0, 4.0], [1.0, 0.5, 2.0]), 3.0, self.config))

    def test_8_poltoratski(self):
        relatorio = check_poltoratski(delta(0.0), [0.0, 0.0, 1.0], [10.0, 100.0, 1000.0], self.config)
        self.assertPassou(relatorio)
        relatorio = check_poltoratski(delta(0.0), [1.0] * 8, [10.0, 100.0], self.config)
        self.assertEqual(relatorio.status, CheckStatus.PRECONDITION)

    def test_9_prop52(self):
        relatorio = check_prop52(delta(0.0), delta(0.0), 1.0, [1.0, 10.0], self.config)
        self.assertEqual(relatorio.status, CheckStatus.PRECONDITION)
        relatorio = check_prop52(delta(0.0), delta(1.0), 1.0, np.geomspace(1.0, 1e4, 9).tolist(), self.config)
        self.assertPassou(relatorio)
        self.assertIn(f"t*={2.0 / math.pi:.6g}", relatorio.notes)
        print("\n✅ Interseção de conjuntos de nível OK")

    def test_10_subaditividade(self):
        self.assertPassou(check_subadditivity(delta(0.0), delta(1.0), [0.1, 1.0, 10.0], self.config))

    def test_11_equivalencia_com_oraculo(self):
        """Γ_1(δ₀) = [−1, 1] cai em bordas de célula: diferença muito abaixo de 10 passos."""
        relatorio = check_oracle_equivalence(delta(0.0), 1.0, 100_000, self.config)
        self.assertPassou(relatorio)
        self.assertGreater(relatorio.margin, 0.5)
        mista = add_measures(delta(0.0), uniform(0.0, 1.0))
        self.assertPassou(check_oracle_equivalence(mista, 10.0, 1_000_000, self.config))
        vazia = atomic_measure([], [])
        self.assertEqual(check_oracle_equivalence(vazia, 1.0, 1000, self.config).status, CheckStatus.PRECONDITION)
        print("\n✅ Oráculo de 10⁶ pontos OK")


class TestSuite(unittest.TestCase):
    """run_suite, códigos de saída e resumo."""

    def test_1_seletor_prop52(self):
        relatorios = run_suite("prop52")
        self.assertEqual(len(relatorios), 2)
        self.assertTrue(all(r.status == CheckStatus.PASSED for r in relatorios))
        self.assertEqual(suite_exit_code(relatorios), 0)

    def test_2_metricas_e_progresso(self):
        metricas = SuiteMetrics("prop52")
        vistos = []
        run_suite("prop52", metricas=metricas, progresso=lambda grupo, r: vistos.append((grupo, r.check_id)))
        self.assertEqual(len(metricas.verificacoes), 2)
        self.assertEqual(vistos, [("prop52", "prop52"), ("prop52", "prop52")])
        self.assertEqual(metricas.verificacoes[0].status, "passed")

    def test_3_seletor_desconhecido(self):
        with self.assertRaises(ValueError):
            run_suite("nope")

    def test_4_codigos_de_saida(self):
        def relatorio(status):
            return CheckReport("x", status == CheckStatus.PASSED, 0.0, status=status)

        self.assertEqual(suite_exit_code([]), 0)
        self.assertEqual(suite_exit_code([relatorio(CheckStatus.PASSED)]), 0)
        self.assertEqual(
            suite_exit_code([relatorio(CheckStatus.PASSED), relatorio(CheckStatus.FAILED), relatorio(CheckStatus.PRECONDITION)]),
            1,
        )
        self.assertEqual(
            suite_exit_code([relatorio(CheckStatus.PASSED), relatorio(CheckStatus.OUT_OF_REGIME)]), 2
        )
        print("\n✅ Códigos de saída OK")

    def test_5_resumo(self):
        relatorios = run_suite("prop52")
        resumo = summarize(relatorios)
        self.assertEqual(resumo["total"], 2)
        self.assertEqual(resumo["by_status"], {"passed": 2})
        self.assertEqual(list(resumo["min_margin"]), ["prop52"])
        self.assertEqual(resumo["exit_code"], 0)


class TestSuiteCompleta(unittest.TestCase):
    """Seletores completos de ponta a ponta."""

    def test_1_seletor_all(self):
        """Todas as verificações passam e a suíte termina em menos de 2 minutos."""
        inicio = time.perf_counter()
        relatorios = run_suite("all")
        duracao = time.perf_counter() - inicio
        falhas = [(r.check_id, r.status.value, r.notes) for r in relatorios if r.status != CheckStatus.PASSED]
        self.assertEqual(falhas, [])
        self.assertEqual(suite_exit_code(relatorios), 0)
        self.assertLess(duracao, 120.0)
        print(f"\n✅ {len(relatorios)} verificações em {duracao:.1f}s")

    def test_2_corpus_global(self):
        """Boole sobre 100 medidas aleatórias, três valores de t cada, mais δ₀."""
        relatorios = run_suite("boole")
        self.assertEqual(len(relatorios), 1 + 100 * 3)
        self.assertEqual(suite_exit_code(relatorios), 0)

    def test_3_seletores_cantor_e_oracle(self):
        for seletor, ids in (("cantor", {"cantor_identities", "cantor_density", "lemma42", "thm16"}), ("oracle", {"oracle"})):
            with self.subTest(seletor=seletor):
                relatorios = run_suite(seletor)
                self.assertEqual({r.check_id for r in relatorios}, ids)
                self.assertTrue(all(r.status == CheckStatus.PASSED for r in relatorios), [r.notes for r in relatorios])
                self.assertEqual(suite_exit_code(relatorios), 0)


def run_all_tests():
    """Executa todos os testes das verificações."""
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    for caso in (TestVerifyHarness, TestSuite, TestSuiteCompleta):
        suite.addTests(loader.loadTestsFromTestCase(caso))
    runner = unittest.TextTestRunner(verbosity=2)
    return runner.run(suite)


if __name__ == "__main__":
    result = run_all_tests()
    sys.exit(0 if result.wasSuccessful() else 1)
