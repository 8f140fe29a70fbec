"""
Exceções do domínio.

Erros de validação de entrada (pesos não positivos, peças invertidas, NaN) usam
ValueError; as classes abaixo marcam situações matemáticas específicas.
"""


class AnaliseError(Exception):
    """Base das exceções do pacote."""


class PoleError(AnaliseError):
    """Avaliação no eixo real exatamente sobre um átomo."""

    def __init__(self, x: float):
        super().__init__(f"Polo: x={x!r} é posição de átomo")
        self.x = x


class DensityEdgeError(AnaliseError):
    """H pedido numa borda de densidade, onde Re F diverge logaritmicamente."""

    def __init__(self, x: float, sinal: int):
        super().__init__(f"Borda de densidade em x={x!r} (Re F -> {'+' if sinal > 0 else '-'}inf)")
        self.x = x
        self.sinal = sinal


class FamilyPoleError(AnaliseError):
    """Denominador 1 + F/t0 nulo no eixo real."""


class SupportError(AnaliseError):
    """F' pedido sobre o suporte da medida."""


class PreconditionError(AnaliseError):
    """Entradas violam as hipóteses do enunciado verificado."""


class InfeasibleError(AnaliseError):
    """Profundidade, precisão ou janela inviável na escala de trabalho."""
