"""
Testes da linha de comando (main.main) com arquivos temporários.
"""

import json
import math
import sys
import tempfile
import unittest
from pathlib import Path

import pandas as pd

# Adicionar diretório pai ao path
sys.path.insert(0, str(Path(__file__).parent.parent))

from main import main


class TestCli(unittest.TestCase):
    """Subcomandos transform, sweep, verify e build-set."""

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.pasta = Path(self._tmp.name)
        self.medida = self.pasta / "delta.json"
        self.medida.write_text(json.dumps({"atoms": [{"x": 0.0, "w": 1.0}]}), encoding="utf-8")

    def tearDown(self):
        self._tmp.cleanup()

    def test_1_transform(self):
        saida = self.pasta / "transform.csv"
        codigo = main(["transform", "--measure", str(self.medida), "--points", "1,0", "--out", str(saida)])
        self.assertEqual(codigo, 0)
        tabela = pd.read_csv(saida)
        self.assertEqual(list(tabela.columns), ["x", "H", "re_F", "im_F", "status"])
        self.assertAlmostEqual(tabela.loc[0, "H"], -1.0 / math.pi, places=15)
        self.assertEqual(tabela.loc[0, "status"], "regular")
        self.assertEqual(tabela.loc[1, "status"], "pole")
        self.assertTrue(math.isnan(tabela.loc[1, "H"]))
        print("\n✅ transform OK")

    def test_2_build_set(self):
        saida = self.pasta / "cantor.json"
        codigo = main(["build-set", "--levels", "1", "--out", str(saida)])
        self.assertEqual(codigo, 0)
        documento = json.loads(saida.read_text(encoding="utf-8"))
        self.assertEqual(documento["exact"], [["0/1", "1/3"], ["2/3", "1/1"]])
        self.assertEqual(documento["cantor"], {"levels": 1, "seed_k": 2, "blocks_only": False})
        self.assertEqual(main(["build-set", "--levels", "0", "--out", str(saida)]), 1)

    def test_3_sweep(self):
        saida = self.pasta / "sweep.csv"
        codigo = main(
            ["sweep", "--measure", str(self.medida), "--t-grid", "1:100:3:log", "--out", str(saida)]
        )
        self.assertEqual(codigo, 0)
        tabela = pd.read_csv(saida)
        self.assertEqual(list(tabela.columns), ["t", "lambda", "t_lambda"])
        self.assertEqual(len(tabela), 3)
        for valor in tabela["t_lambda"]:
            self.assertAlmostEqual(valor, 2.0 / math.pi, places=12)

    def test_4_verify(self):
        saida = self.pasta / "relatorios.json"
        metricas = self.pasta / "metricas.json"
        codigo = main(["verify", "prop52", "--out", str(saida), "--metrics", str(metricas)])
        self.assertEqual(codigo, 0)
        pacote = json.loads(saida.read_text(encoding="utf-8"))
        self.assertEqual(pacote["summary"]["total"], 2)
        self.assertEqual([r["check_id"] for r in pacote["reports"]], ["prop52", "prop52"])
        self.assertEqual(len(json.loads(metricas.read_text(encoding="utf-8"))["verificacoes"]), 2)
        print("\n✅ verify OK")

    def test_5_erros_de_entrada(self):
        saida = self.pasta / "x.json"
        self.assertEqual(main(["verify", "nope", "--out", str(saida)]), 1)
        invalida = self.pasta / "invalida.json"
        invalida.write_text("{nao é json", encoding="utf-8")
        self.assertEqual(main(["transform", "--measure", str(invalida), "--points", "1", "--out", str(saida)]), 1)
        ausente = self.pasta / "ausente.json"
        self.assertEqual(main(["transform", "--measure", str(ausente), "--points", "1", "--out", str(saida)]), 1)
        self.assertEqual(
            main(["transform", "--measure", str(self.medida), "--points", "a,b", "--out", str(saida)]), 1
        )


def run_all_tests():
    """Executa todos os testes da linha de comando."""
    loader = unittest.TestLoader()
    suite = loader.loadTestsFromTestCase(TestCli)
    runner = unittest.TextTestRunner(verbosity=2)
    return runner.run(suite)


if __name__ == "__main__":
    result = run_all_tests()
    sys.exit(0 if result.wasSuccessful() else 1)
