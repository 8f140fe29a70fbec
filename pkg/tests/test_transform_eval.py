"""
Testes da transformada de Stieltjes, dos valores de fronteira, da transformada
de Hilbert, de F′ e da família de Möbius.
"""

import cmath
import math
import sys
import unittest
from pathlib import Path

import numpy as np

# Adicionar diretório pai ao path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.exceptions import DensityEdgeError, FamilyPoleError, PoleError, SupportError
from src.measure_core import add_measures, atomic_measure, delta, uniform
from src.transform_eval import (
    BoundaryKind,
    ComplexPoint,
    boundary_value,
    hilbert,
    mobius,
    mobius_on_axis,
    real_part_on_axis,
    stieltjes,
    stieltjes_deriv,
)


class TestTransformEval(unittest.TestCase):
    """Avaliação de F, H, F′ e F_{t0}."""

    def test_1_hilbert_do_delta(self):
        """H_δ₀(x) = −1/(πx)."""
        mu = delta(0.0)
        self.assertAlmostEqual(hilbert(mu, 1.0), -1.0 / math.pi, places=15)
        self.assertAlmostEqual(hilbert(mu, -2.0), 1.0 / (2.0 * math.pi), places=15)
        with self.assertRaises(PoleError):
            hilbert(mu, 0.0)
        print("\n✅ H de δ₀ OK")

    def test_2_stieltjes_no_semiplano(self):
        mu = delta(0.0)
        self.assertAlmostEqual(abs(stieltjes(mu, 1j) - 1j), 0.0, places=15)
        self.assertAlmostEqual(abs(stieltjes(mu, ComplexPoint(0.0, 2.0)) - 0.5j), 0.0, places=15)
        with self.assertRaises(ValueError):
            stieltjes(mu, 1 - 1j)

    def test_3_forma_fechada_da_densidade(self):
        """∫₀¹ dy/(y − 2i) = ½·ln(5/4) + i·atan(1/2)."""
        valor = stieltjes(uniform(0.0, 1.0), 2j)
        esperado = complex(0.5 * math.log(1.25), math.atan(0.5))
        self.assertAlmostEqual(abs(valor - esperado), 0.0, places=14)
        # Perto do eixo o ramo principal não salta
        acima = stieltjes(uniform(0.0, 1.0), complex(0.5, 1e-12))
        self.assertAlmostEqual(acima.imag, math.pi, places=9)

    def test_4_valores_de_fronteira(self):
        mu = uniform(0.0, 1.0)
        interior = boundary_value(mu, 0.5)
        self.assertEqual(interior.kind, BoundaryKind.REGULAR)
        self.assertAlmostEqual(interior.value, 0.0, places=15)
        self.assertAlmostEqual(interior.imag, math.pi)

        borda = boundary_value(mu, 0.0)
        self.assertEqual(borda.kind, BoundaryKind.DENSITY_EDGE)
        self.assertEqual(borda.value, math.inf)
        self.assertAlmostEqual(borda.imag, math.pi / 2)
        self.assertEqual(boundary_value(mu, 1.0).value, -math.inf)

        polo = boundary_value(add_measures(mu, delta(2.0)), 2.0)
        self.assertEqual(polo.kind, BoundaryKind.POLE)
        self.assertIsNone(polo.value)
        print("\n✅ Valores de fronteira OK")

    def test_5_hilbert_da_uniforme(self):
        """H(x) = ln|(1−x)/x|/π fora das bordas."""
        mu = uniform(0.0, 1.0)
        for x in (-1.0, 0.25, 2.0, 10.0):
            with self.subTest(x=x):
                esperado = math.log(abs((1.0 - x) / x)) / math.pi
                self.assertAlmostEqual(hilbert(mu, x), esperado, places=14)
        with self.assertRaises(DensityEdgeError):
            hilbert(mu, 1.0)

    def test_6_eixo_vetorizado(self):
        mu = atomic_measure([0.0, 1.0], [1.0, 2.0])
        xs = np.array([-1.0, 0.5, 3.0])
        esperado = [1.0 / 1.0 + 2.0 / 2.0, 1.0 / -0.5 + 2.0 / 0.5, 1.0 / -3.0 + 2.0 / -2.0]
        np.testing.assert_allclose(real_part_on_axis(mu, xs), esperado, rtol=1e-15)
        self.assertTrue(np.isinf(real_part_on_axis(mu, [0.0])[0]))

    def test_7_derivada(self):
        self.assertAlmostEqual(stieltjes_deriv(delta(0.0), 2.0), 0.25)
        # ∫₀¹ dy/(y − x)² = 1/(−x) − 1/(1 − x) em x = 2
        self.assertAlmostEqual(stieltjes_deriv(uniform(0.0, 1.0), 2.0), 0.5)
        with self.assertRaises(SupportError):
            stieltjes_deriv(delta(0.0), 0.0)
        with self.assertRaises(SupportError):
            stieltjes_deriv(uniform(0.0, 1.0), 0.5)

    def test_8_familia_de_mobius(self):
        """Para δ₀ e t0 = 1, F_{t0}(z) = 1/(1 − z)."""
        mu = delta(0.0)
        self.assertEqual(mobius(mu, 1.0, 0.0), complex(1.0, 0.0))
        z = complex(0.3, 0.7)
        self.assertAlmostEqual(abs(mobius(mu, 1.0, z) - 1.0 / (1.0 - z)), 0.0, places=14)
        self.assertGreater(mobius(mu, 1.0, z).imag, 0.0)
        with self.assertRaises(FamilyPoleError):
            mobius(mu, 1.0, 1.0)
        with self.assertRaises(ValueError):
            mobius(mu, 0.0, z)
        np.testing.assert_allclose(mobius_on_axis(mu, 1.0, [0.0, -1.0]), [1.0, 0.5])
        self.assertTrue(cmath.isfinite(mobius(mu, 2.0, 3.0)))
        print("\n✅ Família de Möbius OK")


def run_all_tests():
    """Executa todos os testes de transformadas."""
    loader = unittest.TestLoader()
    suite = loader.loadTestsFromTestCase(TestTransformEval)
    runner = unittest.TextTestRunner(verbosity=2)
    return runner.run(suite)


if __name__ == "__main__":
    result = run_all_tests()
    sys.exit(0 if result.wasSuccessful() else 1)
