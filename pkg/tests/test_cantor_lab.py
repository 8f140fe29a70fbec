"""
Testes da construção de Cantor: índices, cronograma k(n, j), intervalos
racionais, blocos Ẽ, truncamentos, medida de Cantor e verificações.
"""

import sys
import unittest
from fractions import Fraction
from pathlib import Path

import numpy as np

# Adicionar diretório pai ao path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cantor_lab import (
    CantorBlock,
    CantorIndex,
    atom_error_bound,
    build_set,
    cantor_atoms,
    cantor_density_ratio,
    cantor_level_of,
    check_cantor_density,
    check_cantor_identities,
    check_lemma42,
    check_thm16_decay,
    dist_to_cantor,
    e_block,
    index_predecessor,
    index_successor,
    interval_left,
    k_intervals,
    k_schedule,
    set_from_spec,
    split_at,
    truncated_set,
    window_index_for,
)
from src.config import CheckStatus, RunConfig
from src.exceptions import InfeasibleError
from src.measure_core import total_mass

F = Fraction


class TestCantorIndices(unittest.TestCase):
    """Ordem lexicográfica e cronograma."""

    def test_1_ordinais(self):
        self.assertEqual(CantorIndex(1, 1).ordinal, 0)
        self.assertEqual(CantorIndex(2, 3).ordinal, 4)
        self.assertEqual(CantorIndex.from_ordinal(4), CantorIndex(2, 3))
        self.assertEqual(CantorIndex.from_ordinal(6), CantorIndex(3, 1))
        self.assertEqual(index_successor(CantorIndex(1, 2)), CantorIndex(2, 1))
        self.assertEqual(index_predecessor(CantorIndex(2, 1)), CantorIndex(1, 2))
        self.assertEqual(CantorIndex.parse("(2,3)"), CantorIndex(2, 3))
        self.assertEqual(str(CantorIndex(3, 7)), "(3,7)")
        self.assertLess(CantorIndex(1, 2), CantorIndex(2, 1))
        with self.assertRaises(ValueError):
            index_predecessor(CantorIndex(1, 1))
        with self.assertRaises(ValueError):
            CantorIndex(2, 5)

    def test_2_cronograma_semente_2(self):
        """k = 2·3^ordinal: 2, 6, 18, 54, 162, 486, 1458."""
        cronograma = k_schedule(2, CantorIndex(3, 1))
        esperado = [2, 6, 18, 54, 162, 486, 1458]
        self.assertEqual([cronograma.k(i) for i in cronograma.indices()], esperado)
        self.assertEqual(cronograma.m(CantorIndex(2, 1)), 16)
        # Índices além do último pedido seguem a mesma lei
        self.assertEqual(cronograma.k(CantorIndex(3, 2)), 3 * 1458)
        with self.assertRaises(ValueError):
            k_schedule(1, CantorIndex(1, 1))
        print("\n✅ Cronograma OK")


class TestCantorIntervals(unittest.TestCase):
    """Intervalos K_{n,j}, distância a K_∞ e blocos."""

    def test_1_intervalos_de_nivel(self):
        self.assertEqual([r.as_pair() for r in k_intervals(1)], [(F(0), F(1, 3)), (F(2, 3), F(1))])
        self.assertEqual([r.left for r in k_intervals(2)], [F(0), F(2, 9), F(2, 3), F(8, 9)])
        self.assertEqual(interval_left(CantorIndex(2, 3)), F(2, 3))
        with self.assertRaises(InfeasibleError):
            k_intervals(5, RunConfig(profundidade_maxima=4))

    def test_2_nivel_e_distancia(self):
        self.assertEqual(cantor_level_of(F(1, 4), 2), CantorIndex(2, 2))
        self.assertEqual(cantor_level_of(F(1), 3), CantorIndex(3, 8))
        with self.assertRaises(ValueError):
            cantor_level_of(F(1, 2), 1)
        self.assertEqual(dist_to_cantor(F(1, 2)), F(1, 6))
        self.assertEqual(dist_to_cantor(F(1, 4)), 0)
        self.assertEqual(dist_to_cantor(0), 0)
        self.assertEqual(dist_to_cantor(F(4, 27)), F(1, 27))
        self.assertEqual(dist_to_cantor(-1), 1)
        self.assertEqual(dist_to_cantor(2), 1)
        print("\n✅ Distância a K_∞ OK")

    def test_3_blocos(self):
        self.assertEqual([r.as_pair() for r in e_block(CantorIndex(1, 1), 1)], [(F(4, 27), F(5, 27))])
        self.assertEqual(
            [r.as_pair() for r in e_block(CantorIndex(1, 2), 2)],
            [(F(58, 81), F(59, 81)), (F(76, 81), F(77, 81))],
        )
        with self.assertRaises(InfeasibleError):
            e_block(CantorIndex(1, 1), 30, RunConfig(max_intervalos=1000))

        bloco = CantorBlock(CantorIndex(1, 1), 2)
        self.assertEqual(bloco.m, 1)
        self.assertEqual(bloco.count, 1)
        self.assertEqual(bloco.length(), F(1, 27))
        self.assertEqual(bloco.hull(), (F(4, 27), F(5, 27)))
        self.assertEqual(bloco.distance_to_cantor(), F(1, 27))
        self.assertAlmostEqual(bloco.length_float(), 1 / 27)
        self.assertEqual(bloco.window_measure(F(1, 6), F(1, 54)), F(1, 27))
        self.assertEqual(bloco.window_measure(F(1, 6), F(1, 100)), F(1, 50))

    def test_4_blocos_grandes_implicitos(self):
        """k = 486 não é enumerável, mas comprimento e distância são exatos."""
        bloco = CantorBlock(CantorIndex(2, 4), 486)
        self.assertEqual(bloco.length(), F(2 ** 483, 3 ** 487))
        self.assertEqual(dist_to_cantor(bloco.hull()[0]), bloco.distance_to_cantor())
        rng = np.random.default_rng(0)
        for ponto in bloco.sample_points(rng, 3):
            self.assertEqual(bloco.window_measure(ponto, F(1, 2 * 3 ** 487)), F(1, 3 ** 487))


class TestCantorSets(unittest.TestCase):
    """Truncamentos e medida de Cantor."""

    def test_1_truncamento_nivel_1(self):
        """Sem blocos com k ≤ 1, o truncamento N=1 é K_1."""
        conjunto = build_set(1)
        self.assertEqual(conjunto.intervals, ((F(0), F(1, 3)), (F(2, 3), F(1))))
        self.assertEqual(set_from_spec({"cantor": {"levels": 1}}), conjunto)

    def test_2_truncamento_nivel_2(self):
        """K_2 ∪ Ẽ_{1,1}: o bloco [4/27, 5/27] fica numa lacuna de K_2."""
        conjunto = build_set(2, seed=2)
        self.assertEqual(len(conjunto), 5)
        self.assertEqual(conjunto.length(), F(13, 27))
        self.assertIn((F(4, 27), F(5, 27)), conjunto.intervals)
        truncamento = truncated_set(2)
        self.assertEqual(truncamento.measure(), F(13, 27))
        self.assertEqual(truncamento.window_measure(F(1, 2), F(1, 2)), F(13, 27))
        print("\n✅ Truncamentos OK")

    def test_3_truncamentos_inviaveis(self):
        with self.assertRaises(InfeasibleError):
            build_set(2, somente_blocos=True)
        with self.assertRaises(InfeasibleError):
            build_set(5, config=RunConfig(profundidade_maxima=4))
        with self.assertRaises(ValueError):
            build_set(0)
        with self.assertRaises(ValueError):
            set_from_spec({"cantor": {}})

    def test_4_conjunto_por_intervalos(self):
        conjunto = set_from_spec({"intervals": [[0, 1], [2, 3]]})
        self.assertEqual(conjunto.intervals, ((0.0, 1.0), (2.0, 3.0)))

    def test_5_atomos_de_cantor(self):
        mu = cantor_atoms(2)
        np.testing.assert_allclose(mu.positions, [1 / 18, 5 / 18, 13 / 18, 17 / 18])
        np.testing.assert_array_equal(mu.weights, [0.25] * 4)
        self.assertAlmostEqual(atom_error_bound(2, 0.5), 4 / 9)
        self.assertEqual(atom_error_bound(2, 0.0), float("inf"))

    def test_6_particao_proxima_distante(self):
        """Parte próxima: K_{n,j} mais o predecessor."""
        casos = {
            CantorIndex(1, 1): 0.5,
            CantorIndex(1, 2): 1.0,
            CantorIndex(2, 1): 0.75,
            CantorIndex(2, 2): 0.5,
            CantorIndex(3, 5): 0.25,
        }
        for indice, massa in casos.items():
            with self.subTest(indice=str(indice)):
                proxima, distante = split_at(indice, 6)
                self.assertEqual(total_mass(proxima), massa)
                self.assertEqual(total_mass(proxima) + total_mass(distante), 1.0)
        with self.assertRaises(ValueError):
            split_at(CantorIndex(3, 1), 2)

    def test_7_janelas_de_t(self):
        cronograma = k_schedule(2, CantorIndex(2, 4))
        self.assertEqual(window_index_for(50.0, cronograma, CantorIndex(2, 4)), CantorIndex(1, 2))
        self.assertEqual(window_index_for(3.0 ** 10, cronograma, CantorIndex(2, 4)), CantorIndex(2, 1))
        with self.assertRaises(InfeasibleError):
            window_index_for(1.0, cronograma, CantorIndex(2, 4))

    def test_8_razao_de_densidade(self):
        conjunto = truncated_set(3, somente_blocos=True)
        for x0 in (F(0), F(1), F(1, 4)):
            with self.subTest(x0=x0):
                razao = cantor_density_ratio(x0, 1, conjunto)
                self.assertGreaterEqual(razao, F(1, 10))
        self.assertEqual(cantor_density_ratio(F(0), 2, truncated_set(2, somente_blocos=True)), F(1, 10))
        # (3,8) tem k = 2·3^13, acima do nível exato
        self.assertIsNone(cantor_density_ratio(F(1), 3, conjunto))


class TestCantorChecks(unittest.TestCase):
    """Verificações do conjunto de Cantor."""

    @classmethod
    def setUpClass(cls):
        print("\n" + "=" * 80)
        print("VERIFICAÇÕES DO CONJUNTO DE CANTOR")
        print("=" * 80)

    def test_1_identidades(self):
        relatorio = check_cantor_identities(2)
        self.assertEqual(relatorio.status, CheckStatus.PASSED, relatorio.notes)
        self.assertEqual(relatorio.margin, 0.0)
        self.assertGreater(relatorio.n_assertions, 100)
        print(f"\n✅ {relatorio.n_assertions} identidades exatas")

    def test_2_densidade(self):
        relatorio = check_cantor_density(3)
        self.assertEqual(relatorio.status, CheckStatus.PASSED, relatorio.notes)
        self.assertTrue(any("pulado" in nota for nota in relatorio.notes))

    def test_3_cota_da_parte_distante(self):
        relatorio = check_lemma42(1, minimo_viaveis=1)
        self.assertEqual(relatorio.status, CheckStatus.PASSED, relatorio.notes)
        self.assertEqual(relatorio.n_assertions, 3)
        self.assertEqual(check_lemma42(1).status, CheckStatus.FAILED)

    def test_4_decaimento(self):
        relatorio = check_thm16_decay(2, t=50.0)
        self.assertEqual(relatorio.status, CheckStatus.PASSED, relatorio.notes)
        self.assertEqual(relatorio.n_assertions, 4)
        print("\n✅ Decaimento em t=50 OK")

    def test_5_fora_das_janelas(self):
        relatorio = check_thm16_decay(2, t=1.0)
        self.assertEqual(relatorio.status, CheckStatus.OUT_OF_REGIME)
        self.assertEqual(relatorio.margin, -1.0)

    def test_6_indices_viaveis_minimos(self):
        """N = 2: (1,2), (2,1) e (2,2) viáveis; com limite 100 só (1,2) sobra e o relatório falha."""
        relatorio = check_lemma42(2)
        self.assertEqual(relatorio.status, CheckStatus.PASSED, relatorio.notes)
        self.assertIn("3 índices viáveis", relatorio.notes)
        self.assertEqual(relatorio.n_assertions, 7)

        restrito = check_lemma42(2, config=RunConfig(limite_viabilidade=100.0))
        self.assertEqual(restrito.status, CheckStatus.FAILED)
        self.assertIn("1 índices viáveis", restrito.notes)
        self.assertTrue(any(nota.startswith("≥ 2 índices viáveis") for nota in restrito.notes))

    def test_7_contagem_direta_no_nivel_t(self):
        """A contagem direta mede {|F| ≥ t} e fica abaixo de 13·2⁻²."""
        relatorio = check_thm16_decay(2, t=50.0)
        resumo = [n for n in relatorio.notes if "2t·|{|F| ≥ t}|=" in n]
        self.assertEqual(len(resumo), 1)
        direto = float(resumo[0].rsplit("=", 1)[1])
        self.assertGreater(direto, 0.0)
        self.assertLessEqual(direto, 13.0 / 4.0)


def run_all_tests():
    """Executa todos os testes de Cantor."""
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    for caso in (TestCantorIndices, TestCantorIntervals, TestCantorSets, TestCantorChecks):
        suite.addTests(loader.loadTestsFromTestCase(caso))
    runner = unittest.TextTestRunner(verbosity=2)
    return runner.run(suite)


if __name__ == "__main__":
    result = run_all_tests()
    sys.exit(0 if result.wasSuccessful() else 1)
