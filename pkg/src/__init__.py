"""
Transformadas de Stieltjes e Hilbert de medidas, conjuntos de nível,
conjuntos homogêneos e a construção de Cantor com suíte de verificação.
"""

__version__ = "1.0.0"
__author__ = "Trabalho de Conclusão de Curso"
