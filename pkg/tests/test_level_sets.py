"""
Testes de conjuntos de nível, funções de distribuição, varreduras de cauda e
das medidas de Poltoratski.
"""

import math
import sys
import unittest
from pathlib import Path

import numpy as np

# Adicionar diretório pai ao path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import Sign, TGrid, Transform
from src.exceptions import PreconditionError
from src.intervals import IntervalUnion
from src.level_sets import (
    components,
    distribution,
    gamma,
    gamma_oracle,
    intersection_decay,
    sweep_to_csv,
    tail_sweep,
    validar_grade,
    weak_limit_measure,
)
from src.measure_core import add_measures, atomic_measure, delta, total_mass, uniform
from src.transform_eval import real_part_on_axis


class TestLevelSets(unittest.TestCase):
    """Γ_t, λ(t) e limites fracos."""

    @classmethod
    def setUpClass(cls):
        print("\n" + "=" * 80)
        print("TESTES DE CONJUNTOS DE NÍVEL")
        print("=" * 80)

    def test_1_gamma_do_delta(self):
        """Γ_t(δ₀) = [−1/t, 1/t], componentes positiva à esquerda e negativa à direita."""
        for t in (0.5, 1.0, 40.0):
            with self.subTest(t=t):
                conjunto = gamma(delta(0.0), t)
                self.assertEqual(len(conjunto), 1)
                esquerda, direita = conjunto.hull()
                self.assertAlmostEqual(esquerda, -1.0 / t, delta=1e-13 / t)
                self.assertAlmostEqual(direita, 1.0 / t, delta=1e-13 / t)
                self.assertFalse(conjunto.approximate)

        comps = components(delta(0.0), 2.0)
        self.assertEqual([c.sign for c in comps], [Sign.POS, Sign.NEG])
        self.assertAlmostEqual(comps[0].left, -0.5)
        self.assertAlmostEqual(comps[1].right, 0.5)
        self.assertAlmostEqual(comps[1].half_width, 0.25)
        print("\n✅ Γ_t de δ₀ OK")

    def test_2_igualdade_de_boole(self):
        """|{Re F > t}| = |{Re F < −t}| = ‖μ‖/t para μ atômica."""
        mu = atomic_measure([0.0, 1.0, 3.0, 3.5], [1.0, 2.0, 0.5, 0.25])
        massa = total_mass(mu)
        for t in (0.1, 1.0, 25.0):
            for sinal in (Sign.POS, Sign.NEG):
                with self.subTest(t=t, sinal=sinal):
                    lam = distribution(mu, t, transform=Transform.F, sign=sinal)
                    self.assertAlmostEqual(lam * t / massa, 1.0, places=12)

    def test_3_distribuicao_de_h(self):
        """|{|H_δ₀| > 1}| = 2/π."""
        self.assertAlmostEqual(distribution(delta(0.0), 1.0), 2.0 / math.pi, places=13)
        self.assertAlmostEqual(distribution(delta(0.0), 1.0, sign=Sign.POS), 1.0 / math.pi, places=13)
        S = IntervalUnion.from_pairs([(0.0, 10.0)])
        self.assertAlmostEqual(distribution(delta(0.0), 1.0, S), 1.0 / math.pi, places=13)

    def test_4_caminho_misto(self):
        """Para a uniforme em [0, 1], |Γ_t| = 2/(1 + eᵗ) + 2/(eᵗ − 1)."""
        mu = uniform(0.0, 1.0)
        for t in (0.5, 1.0, 3.0):
            with self.subTest(t=t):
                conjunto = gamma(mu, t)
                self.assertTrue(conjunto.approximate)
                esperado = 2.0 / (1.0 + math.exp(t)) + 2.0 / (math.exp(t) - 1.0)
                self.assertAlmostEqual(float(conjunto.length()), esperado, places=9)
        print("\n✅ Caminho misto OK")

    def test_5_oraculo(self):
        """O oráculo de força bruta concorda com o caminho exato dentro da resolução."""
        mu = atomic_measure([0.0, 0.3, 2.0], [1.0, 0.5, 2.0])
        exato = gamma(mu, 1.5)
        oraculo = gamma_oracle(mu, 1.5, n=200_000)
        self.assertLess(exato.symmetric_difference_length(oraculo), 4 * len(exato) * oraculo.error_bound)

    def test_6_varredura(self):
        """t·λ(t) = 2/π para δ₀ em qualquer t, com CSV na ordem t,lambda,t_lambda."""
        grade = TGrid.parse("1:100:5:log").values()
        pontos = tail_sweep(delta(0.0), grade)
        self.assertEqual(len(pontos), 5)
        for p in pontos:
            self.assertAlmostEqual(p.t_lambda, 2.0 / math.pi, places=12)
        texto = sweep_to_csv(pontos)
        linhas = texto.strip().split("\n")
        self.assertEqual(linhas[0], "t,lambda,t_lambda")
        self.assertEqual(len(linhas), 6)
        self.assertEqual(float(linhas[1].split(",")[0]), 1.0)

    def test_7_grades_invalidas(self):
        for grade in ([], [1.0, 1.0], [2.0, 1.0], [-1.0, 1.0], [1.0, math.inf]):
            with self.subTest(grade=grade):
                with self.assertRaises(ValueError):
                    validar_grade(grade)
        with self.assertRaises(ValueError):
            TGrid.parse("1:10")
        with self.assertRaises(ValueError):
            gamma(delta(0.0), 0.0)

    def test_8_componentes_exigem_atomos(self):
        with self.assertRaises(PreconditionError):
            components(uniform(0.0, 1.0), 1.0)
        with self.assertRaises(PreconditionError):
            weak_limit_measure(uniform(0.0, 1.0), 1.0)

    def test_9_limite_fraco(self):
        """Massa de μ^(t) igual a ‖μ‖ e erro do momento x² igual a 1/(3π²t²) para δ₀."""
        for t in (1.0, 10.0, 100.0):
            with self.subTest(t=t):
                limite = weak_limit_measure(delta(0.0), t)
                self.assertAlmostEqual(limite.mass(), 1.0, places=12)
                self.assertAlmostEqual(limite.moment([0.0, 0.0, 1.0]), 1.0 / (3.0 * math.pi ** 2 * t ** 2), places=12)
                self.assertAlmostEqual(total_mass(limite.as_measure()), 1.0, places=12)
        print("\n✅ Limite fraco OK")

    def test_10_decaimento_de_intersecao(self):
        """Átomos disjuntos: a interseção some acima de t* = 2/π."""
        pontos = intersection_decay(delta(0.0), delta(1.0), 1.0, [0.1, 1.0, 10.0])
        self.assertGreater(pontos[0].lam, 0.0)
        self.assertEqual(pontos[1].lam, 0.0)
        self.assertEqual(pontos[2].t_lambda, 0.0)
        with self.assertRaises(ValueError):
            intersection_decay(delta(0.0), delta(1.0), 0.0, [1.0])

    def test_11_raiz_do_caminho_misto_no_nivel(self):
        """δ₀ + uniforme em nível alto: extremo de {Re F < −t} resolvido até Re F = −t."""
        mu = add_measures(delta(0.0), uniform(0.0, 1.0))
        t = math.pi * 100.0
        conjunto = gamma(mu, t, Sign.NEG)
        direita = float(conjunto.rights[0])
        self.assertGreater(direita, 0.0)
        self.assertAlmostEqual(real_part_on_axis(mu, [direita])[0] / -t, 1.0, places=9)
        oraculo = gamma_oracle(mu, t, Sign.NEG, n=200_000)
        self.assertLess(conjunto.symmetric_difference_length(oraculo), 4 * len(conjunto) * oraculo.error_bound)
        print("\n✅ Raiz do caminho misto OK")


def run_all_tests():
    """Executa todos os testes de conjuntos de nível."""
    loader = unittest.TestLoader()
    suite = loader.loadTestsFromTestCase(TestLevelSets)
    runner = unittest.TextTestRunner(verbosity=2)
    return runner.run(suite)


if __name__ == "__main__":
    result = run_all_tests()
    sys.exit(0 if result.wasSuccessful() else 1)
