"""
Testes de uniões finitas de intervalos.

Cobre normalização, álgebra de conjuntos, pertinência e o formato JSON com
extremos racionais.
"""

import math
import sys
import unittest
from fractions import Fraction
from pathlib import Path

import numpy as np

# Adicionar diretório pai ao path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.intervals import IntervalUnion


class TestIntervalUnion(unittest.TestCase):
    """Normalização e operações de IntervalUnion."""

    def test_1_normalizacao(self):
        """Pares fora de ordem, sobrepostos, encostados e degenerados."""
        conjunto = IntervalUnion.from_pairs([(2, 3), (0, 1), (0.5, 1.5), (1, 1), (3, 4)])
        self.assertEqual(conjunto.intervals, ((0, 1.5), (2, 4)))
        print("\n✅ Normalização OK")

    def test_2_nan_rejeitado(self):
        with self.assertRaises(ValueError):
            IntervalUnion.from_pairs([(0.0, math.nan)])

    def test_3_comprimento_exato(self):
        conjunto = IntervalUnion.from_pairs([(Fraction(0), Fraction(1, 3)), (Fraction(2, 3), Fraction(1))])
        self.assertTrue(conjunto.is_exact)
        self.assertEqual(conjunto.length(), Fraction(2, 3))
        self.assertEqual(conjunto.diam(), 1)
        self.assertEqual(IntervalUnion.empty().length(), 0.0)

    def test_4_algebra(self):
        """Interseção, diferença, complementar e diferença simétrica."""
        a = IntervalUnion.from_pairs([(0.0, 3.0)])
        b = IntervalUnion.from_pairs([(1.0, 2.0)])
        self.assertEqual(a.difference(b).intervals, ((0.0, 1.0), (2.0, 3.0)))
        self.assertEqual(a.intersection(b).intervals, ((1.0, 2.0),))
        self.assertEqual(b.complement().intervals, ((-math.inf, 1.0), (2.0, math.inf)))
        self.assertEqual(a.union(b), a)
        self.assertAlmostEqual(a.symmetric_difference_length(b), 2.0)
        self.assertTrue(b.issubset(a))
        self.assertFalse(a.issubset(b))
        self.assertEqual(a.clip(2.5, 10.0).intervals, ((2.5, 3.0),))
        print("\n✅ Álgebra de conjuntos OK")

    def test_5_metadados_de_aproximacao(self):
        a = IntervalUnion.from_pairs([(0.0, 1.0)], approximate=True, error_bound=1e-3)
        b = IntervalUnion.from_pairs([(0.5, 2.0)], error_bound=1e-4)
        uniao = a.union(b)
        self.assertTrue(uniao.approximate)
        self.assertAlmostEqual(uniao.error_bound, 1.1e-3)

    def test_6_pertinencia(self):
        conjunto = IntervalUnion.from_pairs([(0.0, 1.0), (2.0, 3.0)])
        self.assertTrue(conjunto.contains_point(1.0))
        self.assertTrue(conjunto.contains_point(2.0))
        self.assertFalse(conjunto.contains_point(1.5))
        self.assertFalse(conjunto.contains_point(-0.1))
        np.testing.assert_array_equal(
            conjunto.contains_points([-1.0, 0.5, 1.5, 2.0, 3.5]),
            [False, True, False, True, False],
        )

    def test_7_json_exato(self):
        """Extremos racionais saem como "p/q" e voltam idênticos."""
        conjunto = IntervalUnion.from_pairs([(Fraction(2, 3), Fraction(1))])
        documento = conjunto.to_dict()
        self.assertEqual(documento["exact"], [["2/3", "1/1"]])
        self.assertAlmostEqual(documento["intervals"][0][0], 2 / 3)
        self.assertEqual(IntervalUnion.from_dict(documento), conjunto)
        print("\n✅ JSON exato OK")

    def test_8_json_invalido(self):
        with self.assertRaises(ValueError):
            IntervalUnion.from_dict({"intervals": [[2.0, 1.0]]})
        with self.assertRaises(ValueError):
            IntervalUnion.from_dict({"intervals": [[0.0, math.inf]]})
        with self.assertRaises(ValueError):
            IntervalUnion.from_dict({"conjunto": []})

    def test_9_envoltoria_vazia(self):
        with self.assertRaises(ValueError):
            IntervalUnion.empty().hull()


def run_all_tests():
    """Executa todos os testes de intervalos."""
    loader = unittest.TestLoader()
    suite = loader.loadTestsFromTestCase(TestIntervalUnion)
    runner = unittest.TextTestRunner(verbosity=2)
    return runner.run(suite)


if __name__ == "__main__":
    result = run_all_tests()
    sys.exit(0 if result.wasSuccessful() else 1)
