"""
Inicialização do módulo de testes.
"""
