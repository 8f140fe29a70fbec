"""
Verificações numéricas dos enunciados sobre transformadas de medidas.

Cada check_* recebe entradas explícitas e devolve um CheckReport; nenhuma
exceção escapa (ver ReportBuilder.protegido). run_suite monta as tarefas de
cada seletor sobre as fixtures canônicas e, opcionalmente, sobre a medida e o
conjunto do usuário.

Convenção de folgas: cada asserção registra uma folga normalizada (positiva =
sobra) e o relatório passa quando a menor folga é >= -tolerância.
"""

import math
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from src import fixtures
from src.cantor_lab import check_cantor_density, check_cantor_identities, check_lemma42, check_thm16_decay
from src.config import CheckStatus, RunConfig, Sign, Transform, resolver_config
from src.exceptions import InfeasibleError, PreconditionError
from src.intervals import IntervalUnion
from src.level_sets import (
    components,
    distribution,
    gamma,
    gamma_oracle,
    intersection_decay,
    validar_grade,
    weak_limit_measure,
)
from src.measure_core import (
    Measure,
    add_measures,
    atomic_mass,
    atomic_measure,
    delta,
    integrate_polynomial,
    mutually_singular,
    serialize,
    total_mass,
    uniform,
)
from src.metrics import SuiteMetrics
from src.reports import CheckReport, ReportBuilder
from src.set_geometry import en_subset, homogeneity_delta
from src.transform_eval import mobius, mobius_on_axis, real_part_on_axis, stieltjes

__all__ = [
    "CheckReport",
    "check_boole",
    "check_loomis",
    "check_limit_18",
    "check_prop32",
    "check_prop34",
    "check_key_ineq",
    "check_thm14",
    "check_lemma33",
    "check_poltoratski",
    "check_prop52",
    "check_subadditivity",
    "check_ac_perturbation",
    "check_oracle_equivalence",
    "check_restriction",
    "check_en_lower_bound",
    "run_suite",
    "suite_exit_code",
    "SELETORES",
]

MINUSCULO = np.finfo(float).tiny

# Pontos finais da grade usados nas asserções de monotonia
PONTOS_CAUDA = 3

TAMANHO_CORPUS = 20

# Boole e Loomis rodam sobre um corpus maior
TAMANHO_CORPUS_GLOBAL = 100


# ============================================================================
# AUXILIARES
# ============================================================================

def _exigir_atomica(mu: Measure):
    if not mu.is_atomic or mu.is_zero:
        raise PreconditionError("μ deve ser puramente atômica e não nula")


def _exigir_atomos_em(mu: Measure, E: IntervalUnion):
    fora = ~E.contains_points(mu.positions)
    if np.any(fora):
        raise PreconditionError(f"átomos fora de E: {mu.positions[fora][:5].tolist()}")


def _distancia_ao_conjunto(xs: np.ndarray, E: IntervalUnion) -> np.ndarray:
    separacao = np.maximum(E.lefts[None, :] - xs[:, None], xs[:, None] - E.rights[None, :])
    return np.clip(separacao, 0.0, None).min(axis=1)


def _afirmar_cauda_monotona(rel: ReportBuilder, nome: str, valores: Sequence[float]):
    cauda = list(valores)[-PONTOS_CAUDA:]
    for anterior, seguinte in zip(cauda, cauda[1:]):
        rel.afirmar(f"{nome}: não cresce na cauda", anterior - seguinte)


def _afirmar_sanduiche(
    rel: ReportBuilder,
    mu_E: Measure,
    longe: Measure,
    E: IntervalUnion,
    grade: Sequence[float],
    config: RunConfig,
):
    """
    λ_E(μ_E, t+s) ≤ λ_E(μ_E + longe, t) ≤ λ_E(μ_E, t−s), s = ‖longe‖/(π·d),
    d = distância de longe a E, para t > 2s.
    """
    d = float(_distancia_ao_conjunto(longe.positions, E).min())
    if not d > 0:
        raise PreconditionError("massa distante toca E")
    s = total_mass(longe) / (math.pi * d)
    total = add_measures(mu_E, longe)
    usados = 0
    for t in grade:
        if t <= 2 * s:
            continue
        meio = distribution(total, t, E, config=config)
        inferior = distribution(mu_E, t + s, E, config=config)
        superior = distribution(mu_E, t - s, E, config=config)
        escala = max(superior, MINUSCULO)
        rel.afirmar(f"t={t:.6g}: sanduíche da massa distante", min(meio - inferior, superior - meio) / escala)
        usados += 1
    if usados == 0:
        rel.nota(f"sanduíche: nenhum t acima de 2s={2 * s:.6g}")


# ============================================================================
# IDENTIDADES GLOBAIS
# ============================================================================

def check_boole(mu: Measure, t: float, config: Optional[RunConfig] = None) -> CheckReport:
    """πt·|{±H_μ ≥ t}| = ‖μ‖ para μ atômica, cada sinal separadamente."""
    config = resolver_config(config)
    rel = ReportBuilder("boole", {"measure": serialize(mu), "t": t}, config.tol_identidade)
    with rel.protegido():
        _exigir_atomica(mu)
        massa = total_mass(mu)
        for sinal in (Sign.POS, Sign.NEG):
            lam = distribution(mu, t, transform=Transform.H, sign=sinal, config=config)
            rel.afirmar(f"{sinal.value}: πt·λ = ‖μ‖", -abs(math.pi * t * lam - massa) / massa)
    return rel.build()


def check_loomis(mu: Measure, t_grid: Sequence[float], config: Optional[RunConfig] = None) -> CheckReport:
    """t·|{|H_μ| ≥ t}| ≤ ‖μ‖ na grade; igualdade 2‖μ‖/π para μ atômica."""
    config = resolver_config(config)
    grade = list(map(float, t_grid))
    rel = ReportBuilder("loomis", {"measure": serialize(mu), "t_grid": grade}, config.tol_identidade)
    with rel.protegido():
        grade = validar_grade(grade).tolist()
        massa = total_mass(mu)
        if massa == 0:
            raise PreconditionError("medida nula")
        aproximado = False
        for t in grade:
            conjunto = gamma(mu, math.pi * t, Sign.ABS, config)
            aproximado = aproximado or conjunto.approximate
            t_lam = t * float(conjunto.length())
            rel.afirmar(f"t={t:.6g}: t·λ ≤ ‖μ‖", (massa - t_lam) / massa)
            if mu.is_atomic:
                rel.afirmar(f"t={t:.6g}: t·λ = 2‖μ‖/π", -abs(t_lam - 2.0 * massa / math.pi) / massa)
        if aproximado:
            rel.nota("conjuntos de nível aproximados (densidade presente)")
    return rel.build()


def check_limit_18(mu: Measure, t_grid: Sequence[float], config: Optional[RunConfig] = None) -> CheckReport:
    """
    πt·|{±H_μ ≥ t}| → ‖μ_s‖: desvio relativo não cresce no fim da grade e fica
    abaixo de tol_limite_18 no maior t.
    """
    config = resolver_config(config)
    grade = list(map(float, t_grid))
    rel = ReportBuilder("limit18", {"measure": serialize(mu), "t_grid": grade}, config.tol_limite_18)
    with rel.protegido():
        grade = validar_grade(grade).tolist()
        singular = atomic_mass(mu)
        escala = singular if singular > 0 else total_mass(mu)
        if escala == 0:
            raise PreconditionError("medida nula")
        for sinal in (Sign.POS, Sign.NEG):
            desvios = [
                abs(math.pi * t * distribution(mu, t, transform=Transform.H, sign=sinal, config=config) - singular) / escala
                for t in grade
            ]
            _afirmar_cauda_monotona(rel, f"{sinal.value}: desvio", desvios)
            rel.afirmar(f"{sinal.value}: desvio no maior t", -desvios[-1])
            rel.nota(f"{sinal.value}: desvio final {desvios[-1]:.3g}")
    return rel.build()


def check_subadditivity(
    mu: Measure, nu: Measure, t_grid: Sequence[float], config: Optional[RunConfig] = None
) -> CheckReport:
    """|{|H_{μ+ν}| > t}| ≤ |{|H_μ| > t/2}| + |{|H_ν| > t/2}|."""
    config = resolver_config(config)
    grade = list(map(float, t_grid))
    rel = ReportBuilder(
        "subadditivity", {"mu": serialize(mu), "nu": serialize(nu), "t_grid": grade}, config.tol_extremos
    )
    with rel.protegido():
        grade = validar_grade(grade).tolist()
        soma = add_measures(mu, nu)
        for t in grade:
            esquerda = distribution(soma, t, config=config)
            direita = distribution(mu, t / 2, config=config) + distribution(nu, t / 2, config=config)
            rel.afirmar(f"t={t:.6g}: subaditividade", (direita - esquerda) / max(direita, MINUSCULO))
    return rel.build()


def check_ac_perturbation(
    mu: Measure, ac: Measure, t_grid: Sequence[float], config: Optional[RunConfig] = None
) -> CheckReport:
    """Somar uma parte absolutamente contínua não muda o limite de πt·|{|H| ≥ t}|."""
    config = resolver_config(config)
    grade = list(map(float, t_grid))
    rel = ReportBuilder(
        "ac_perturbation", {"mu": serialize(mu), "ac": serialize(ac), "t_grid": grade}, config.tol_limite_18
    )
    with rel.protegido():
        _exigir_atomica(mu)
        if ac.n_atoms or ac.is_zero:
            raise PreconditionError("parte contínua deve ser densidade não nula sem átomos")
        grade = validar_grade(grade).tolist()
        total = add_measures(mu, ac)
        escala = 2.0 * total_mass(mu)
        desvios = [
            abs(distribution(total, t, config=config) - distribution(mu, t, config=config)) * math.pi * t / escala
            for t in grade
        ]
        _afirmar_cauda_monotona(rel, "desvio", desvios)
        rel.afirmar("desvio no maior t", -desvios[-1])
    return rel.build()


# ============================================================================
# EQUIVALÊNCIA COM O ORÁCULO
# ============================================================================

def check_oracle_equivalence(
    mu: Measure,
    t: float,
    n: int = 1_000_000,
    config: Optional[RunConfig] = None,
) -> CheckReport:
    """
    |Γ_t △ Γ_t^grade| < 10·passo, Γ_t^grade a varredura de sinal em n células.

    Cada borda do oráculo fica a no máximo meio passo do extremo verdadeiro;
    com mais de 10 componentes o limite passa a ser len(Γ_t)·passo.
    """
    config = resolver_config(config)
    rel = ReportBuilder(
        "oracle", {"measure": serialize(mu), "t": t, "n": n}, config.tol_diferenca_simetrica
    )
    with rel.protegido():
        if mu.is_zero:
            raise PreconditionError("medida nula")
        exato = gamma(mu, t, Sign.ABS, config)
        oraculo = gamma_oracle(mu, t, Sign.ABS, n)
        limite = max(10, len(exato)) * oraculo.error_bound
        diferenca = float(exato.symmetric_difference_length(oraculo))
        rel.afirmar(f"|Γ_t △ oráculo| < {limite:.3g}", (limite - diferenca) / limite)
        rel.nota(f"{len(exato)} componentes, passo {oraculo.error_bound:.3g}, diferença {diferenca:.3g}")
    return rel.build()


# ============================================================================
# COMPONENTES DE Γ_t
# ============================================================================

def check_prop32(mu: Measure, t: float, config: Optional[RunConfig] = None) -> CheckReport:
    """|F(c + a + 2ia)| ≥ t/(8π²) em cada componente [c−a, c+a] de Γ_t."""
    config = resolver_config(config)
    rel = ReportBuilder("prop32", {"measure": serialize(mu), "t": t}, config.tol_identidade)
    with rel.protegido():
        _exigir_atomica(mu)
        comps = components(mu, t, config)
        if not comps:
            raise PreconditionError("Γ_t vazio")
        for comp in comps:
            a = comp.half_width
            valor = abs(stieltjes(mu, complex(comp.right, 2.0 * a)))
            rel.afirmar(
                f"componente [{comp.left:.6g}, {comp.right:.6g}]",
                8.0 * math.pi ** 2 * valor / t - 1.0,
            )
    return rel.build()


def check_prop34(mu: Measure, t: float, delta_: float, config: Optional[RunConfig] = None) -> CheckReport:
    """
    |Ĩ ∖ Γ_{t0}| ≤ (δ/2)|I| para os dois intervalos vizinhos de mesmo tamanho de
    cada componente I de Γ_t, com t0 = δt/(128π²).
    """
    config = resolver_config(config)
    rel = ReportBuilder("prop34", {"measure": serialize(mu), "t": t, "delta": delta_}, config.tol_extremos)
    with rel.protegido():
        _exigir_atomica(mu)
        if not 0 < delta_ <= 1:
            raise PreconditionError(f"δ deve estar em (0, 1] (recebido {delta_})")
        comps = components(mu, t, config)
        if not comps:
            raise PreconditionError("Γ_t vazio")
        t0 = delta_ * t / (128.0 * math.pi ** 2)
        maior = gamma(mu, t0, Sign.ABS, config)
        atual = gamma(mu, t, Sign.ABS, config)
        rel.afirmar(
            "Γ_t ⊆ Γ_t0",
            -float(atual.difference(maior).length()) / max(float(atual.length()), MINUSCULO),
        )
        for comp in comps:
            c, a = comp.center, comp.half_width
            for lado, (l, r) in (("direito", (c + a, c + 3 * a)), ("esquerdo", (c - 3 * a, c - a))):
                fora = float(IntervalUnion.from_pairs([(l, r)]).difference(maior).length())
                rel.afirmar(
                    f"componente [{comp.left:.6g}, {comp.right:.6g}], vizinho {lado}",
                    (delta_ * a - fora) / (2 * a),
                )
    return rel.build()


# ============================================================================
# CONJUNTOS HOMOGÊNEOS
# ============================================================================

def check_key_ineq(mu: Measure, E: IntervalUnion, t: float, config: Optional[RunConfig] = None) -> CheckReport:
    """
    |{x ∈ E : |F| > t0}| ≥ (δ/24)|Γ_t| com t0 = δt/(128π²) e t > T = π‖μ‖/diam(E).

    Por componente I de Γ_t que encontra E e tem meia largura a ≤ diam(E):
    |Γ_{t0} ∩ E ∩ I♯| ≥ (δ/2)|I|, I♯ = [c − 3a, c + 3a].
    """
    config = resolver_config(config)
    rel = ReportBuilder(
        "key_ineq", {"measure": serialize(mu), "set": E.to_dict(), "t": t}, config.tol_extremos
    )
    with rel.protegido():
        _exigir_atomica(mu)
        _exigir_atomos_em(mu, E)
        homogeneidade = homogeneity_delta(E)
        rel.afirmar("δ(E) certificado pela grade", homogeneidade.certification_slack)
        d = homogeneidade.delta
        diam = float(E.diam())
        limiar = math.pi * total_mass(mu) / diam
        rel.nota(f"δ={d:.6g}, T={limiar:.6g}")
        if t <= limiar:
            raise InfeasibleError(f"t={t:.6g} ≤ T={limiar:.6g}")
        t0 = d * t / (128.0 * math.pi ** 2)
        atual = gamma(mu, t, Sign.ABS, config)
        vizinhanca = gamma(mu, t0, Sign.ABS, config).intersection(E)
        direita = d / 24.0 * float(atual.length())
        rel.afirmar("|{x ∈ E : |F| > t0}| ≥ (δ/24)|Γ_t|", float(vizinhanca.length()) / direita - 1.0)

        for l, r in atual:
            l, r = float(l), float(r)
            c, a = 0.5 * (l + r), 0.5 * (r - l)
            if a > diam or not E.clip(l, r):
                continue
            medida = float(vizinhanca.clip(c - 3 * a, c + 3 * a).length())
            rel.afirmar(f"componente [{l:.6g}, {r:.6g}]: |Γ_t0 ∩ E ∩ I♯| ≥ (δ/2)|I|", medida / (d * a) - 1.0)
    return rel.build()


def check_thm14(
    mu: Measure, E: IntervalUnion, t_grid: Sequence[float], config: Optional[RunConfig] = None
) -> CheckReport:
    """
    μ(E) ≤ C1·min_{t > T} t·|{x ∈ E : |H_μ| ≥ t}| com C1 = 1536π³/δ².

    Inclui o sanduíche para um átomo distante de massa ‖μ‖ a distância diam(E).
    """
    config = resolver_config(config)
    grade = list(map(float, t_grid))
    rel = ReportBuilder(
        "thm14", {"measure": serialize(mu), "set": E.to_dict(), "t_grid": grade}, config.tol_extremos
    )
    with rel.protegido():
        _exigir_atomica(mu)
        _exigir_atomos_em(mu, E)
        grade = validar_grade(grade)
        homogeneidade = homogeneity_delta(E)
        rel.afirmar("δ(E) certificado pela grade", homogeneidade.certification_slack)
        d = homogeneidade.delta
        constante = 1536.0 * math.pi ** 3 / d ** 2
        massa = total_mass(mu)
        diam = float(E.diam())
        limiar = math.pi * massa / diam
        cauda = grade[grade > limiar].tolist()
        if not cauda:
            raise InfeasibleError(f"grade inteira abaixo de T={limiar:.6g}")
        valores = [constante * t * distribution(mu, t, E, config=config) for t in cauda]
        rel.afirmar("C1·min t·λ_E ≥ μ(E)", (min(valores) - massa) / massa)
        rel.nota(f"δ={d:.6g}, C1={constante:.6g}, {len(cauda)} pontos acima de T")

        longe = delta(float(E.hull()[1]) + diam, massa)
        _afirmar_sanduiche(rel, mu, longe, E, cauda, config)
    return rel.build()


def check_restriction(
    mu: Measure,
    E: IntervalUnion,
    longe: Measure,
    t_grid: Sequence[float],
    config: Optional[RunConfig] = None,
) -> CheckReport:
    """Massa a distância positiva de E só desloca o limiar de t por ‖longe‖/(π·d)."""
    config = resolver_config(config)
    grade = list(map(float, t_grid))
    rel = ReportBuilder(
        "restriction",
        {"measure": serialize(mu), "far": serialize(longe), "set": E.to_dict(), "t_grid": grade},
        config.tol_extremos,
    )
    with rel.protegido():
        _exigir_atomica(mu)
        _exigir_atomica(longe)
        _exigir_atomos_em(mu, E)
        _afirmar_sanduiche(rel, mu, longe, E, validar_grade(grade).tolist(), config)
    return rel.build()


def check_en_lower_bound(
    mu: Measure, E: IntervalUnion, n: int, t: float, config: Optional[RunConfig] = None
) -> CheckReport:
    """Átomos em 𝔢_n: t·|{x ∈ E : |H_μ| ≥ t}| ≥ 2‖μ‖/(πn) a menos de tol_limite."""
    config = resolver_config(config)
    rel = ReportBuilder(
        "en_lower_bound", {"measure": serialize(mu), "set": E.to_dict(), "n": n, "t": t}, config.tol_limite
    )
    with rel.protegido():
        _exigir_atomica(mu)
        subconjunto = en_subset(E, n)
        if not subconjunto:
            raise PreconditionError(f"𝔢_{n} vazio")
        _exigir_atomos_em(mu, subconjunto)
        massa = total_mass(mu)
        if t <= n * massa / math.pi:
            raise InfeasibleError(f"t={t:.6g} não garante janelas menores que 1/n")
        alvo = 2.0 * massa / (math.pi * n)
        rel.afirmar("t·λ_E ≥ 2‖μ‖/(πn)", t * distribution(mu, t, E, config=config) / alvo - 1.0)
    return rel.build()


# ============================================================================
# FAMÍLIA DE MÖBIUS
# ============================================================================

def _aproximar(origem: float, destino: float, condicao: Callable[[float], bool]) -> float:
    """Primeiro x = origem + (destino − origem)·2^{−k}, k = 1, 2, …, com condicao(x)."""
    for k in range(1, 1075):
        x = origem + (destino - origem) * 2.0 ** -k
        if x == origem:
            break
        if condicao(x):
            return x
    raise InfeasibleError(f"sem ponto admissível entre {origem!r} e {destino!r}")


def mobius_level_set(mu: Measure, t0: float, config: Optional[RunConfig] = None) -> IntervalUnion:
    """
    {F_{t0} > t0/2} por busca de raízes lacuna a lacuna.

    Em cada lacuna F cresce de −∞ a +∞; F_{t0} passa de t0 a +∞ até o polo
    F = −t0 e depois de −∞ a t0. Os colchetes vêm da monotonia de F.
    """
    _exigir_atomica(mu)
    posicoes = mu.positions.tolist()
    alcance = 2.0 * total_mass(mu) / t0

    def f(x: float) -> float:
        return float(real_part_on_axis(mu, [x])[0])

    def g(x: float) -> float:
        return float(mobius_on_axis(mu, t0, [x])[0])

    def raiz(funcao, a, b) -> float:
        return brentq(funcao, a, b, xtol=1e-14)

    pares = []
    primeiro = posicoes[0]
    b = _aproximar(primeiro, primeiro - alcance, lambda x: f(x) > t0)
    pares.append((raiz(lambda x: g(x) - t0 / 2, primeiro - alcance, b), primeiro))

    for l, r in zip(posicoes[:-1], posicoes[1:]):
        a = _aproximar(l, r, lambda x: f(x) < -t0)
        b = _aproximar(r, l, lambda x: f(x) > t0)
        polo = raiz(lambda x: f(x) + t0, a, b)
        pares.append((l, polo))
        inicio = _aproximar(polo, b, lambda x: g(x) < t0 / 2)
        pares.append((raiz(lambda x: g(x) - t0 / 2, inicio, b), r))

    ultimo = posicoes[-1]
    a = _aproximar(ultimo, ultimo + alcance, lambda x: f(x) < -t0)
    pares.append((ultimo, raiz(lambda x: f(x) + t0, a, ultimo + alcance)))
    return IntervalUnion.from_pairs(pares)


def check_lemma33(mu: Measure, t0: float, config: Optional[RunConfig] = None) -> CheckReport:
    """{|F| > t0} = {F_{t0} > t0/2}, e Im F_{t0} > 0 em pontos de ℂ₊."""
    config = resolver_config(config)
    rel = ReportBuilder("lemma33", {"measure": serialize(mu), "t0": t0}, config.tol_diferenca_simetrica)
    with rel.protegido():
        _exigir_atomica(mu)
        esquerda = gamma(mu, t0, Sign.ABS, config)
        direita = mobius_level_set(mu, t0, config)
        rel.afirmar("|{|F| > t0} Δ {F_t0 > t0/2}|", -float(esquerda.symmetric_difference_length(direita)))

        rng = np.random.default_rng(config.semente_aleatoria)
        lo, hi = mu.support_hull()
        largura = max(hi - lo, 1.0)
        xs = rng.uniform(lo - largura, hi + largura, 100)
        ys = largura * 10.0 ** rng.uniform(-3.0, 1.0, 100)
        menor = min(mobius(mu, t0, complex(x, y)).imag for x, y in zip(xs.tolist(), ys.tolist()))
        rel.afirmar("Im F_t0 > 0 em ℂ₊", 0.0 if menor > 0 else -1.0)
    return rel.build()


# ============================================================================
# LIMITES FRACOS
# ============================================================================

def check_poltoratski(
    mu: Measure, g: Sequence[float], t_grid: Sequence[float], config: Optional[RunConfig] = None
) -> CheckReport:
    """
    (πt/2)·χ_{|H_μ| ≥ t} dx → μ fraco-*: massa exata em cada t e erro do
    momento ∫g decrescente, abaixo de tol_limite no maior t.
    """
    config = resolver_config(config)
    coeficientes = [float(c) for c in g]
    grade = list(map(float, t_grid))
    rel = ReportBuilder(
        "poltoratski", {"measure": serialize(mu), "g": coeficientes, "t_grid": grade}, config.tol_limite
    )
    with rel.protegido():
        _exigir_atomica(mu)
        if not coeficientes or len(coeficientes) - 1 > 6:
            raise PreconditionError(f"polinômio de grau {len(coeficientes) - 1} fora de 0..6")
        grade = validar_grade(grade).tolist()
        massa = total_mass(mu)
        alvo = integrate_polynomial(mu, coeficientes)
        escala = max(abs(alvo), massa)
        # Identidade de massa medida na tolerância de identidade
        fator = config.tol_limite / config.tol_identidade
        erros = []
        for t in grade:
            limite = weak_limit_measure(mu, t, config)
            rel.afirmar(f"t={t:.6g}: ‖μ^(t)‖ = ‖μ‖", -abs(limite.mass() - massa) / massa * fator)
            erros.append(abs(limite.moment(coeficientes) - alvo) / escala)
        _afirmar_cauda_monotona(rel, "erro do momento", erros)
        rel.afirmar("erro do momento no maior t", -erros[-1])
        rel.nota(f"erro final do momento {erros[-1]:.3g}")
    return rel.build()


def check_prop52(
    mu: Measure, nu: Measure, c: float, t_grid: Sequence[float], config: Optional[RunConfig] = None
) -> CheckReport:
    """
    t·|{|H_μ| > t} ∩ {|H_ν| > ct}| → 0 para μ ⊥ ν; vazio acima de
    t* = (‖μ‖ + ‖ν‖/c)/(π·D), D a menor distância entre átomos de μ e ν.
    """
    config = resolver_config(config)
    grade = list(map(float, t_grid))
    rel = ReportBuilder(
        "prop52", {"mu": serialize(mu), "nu": serialize(nu), "c": c, "t_grid": grade}, config.tol_limite
    )
    with rel.protegido():
        _exigir_atomica(mu)
        _exigir_atomica(nu)
        if not mutually_singular(mu, nu):
            raise PreconditionError("μ e ν não são mutuamente singulares")
        pontos = intersection_decay(mu, nu, c, grade, config)
        minimo = min(total_mass(mu), total_mass(nu))
        valores = [p.t_lambda / minimo for p in pontos]
        _afirmar_cauda_monotona(rel, "t·|interseção|", valores)
        rel.afirmar("t·|interseção| no maior t", -valores[-1])

        distancia = float(np.abs(np.subtract.outer(mu.positions, nu.positions)).min())
        limiar = (total_mass(mu) + total_mass(nu) / c) / (math.pi * distancia)
        rel.nota(f"t*={limiar:.6g}")
        for p in pontos:
            if p.t > limiar * (1.0 + 1e-9):
                rel.afirmar(f"t={p.t:.6g} > t*: interseção vazia", 0.0 if p.lam == 0 else -1.0)
    return rel.build()


# ============================================================================
# SUÍTE
# ============================================================================

Tarefa = Tuple[str, Callable[[], CheckReport]]


def _tarefas_boole(config: RunConfig) -> List[Tarefa]:
    tarefas = [("boole", partial(check_boole, delta(0.0), 1.0, config))]
    for mu in fixtures.random_atomic_measures(TAMANHO_CORPUS_GLOBAL, config=config):
        massa = total_mass(mu)
        tarefas.extend(("boole", partial(check_boole, mu, fator * massa, config)) for fator in (0.1, 1.0, 10.0))
    return tarefas


def _tarefas_loomis(config: RunConfig) -> List[Tarefa]:
    grade = np.geomspace(0.1, 100.0, 7).tolist()
    tarefas = [("loomis", partial(check_loomis, mu, grade, config)) for _, mu in fixtures.canonical_measures()]
    tarefas.extend(
        ("loomis", partial(check_loomis, mu, grade, config))
        for mu in fixtures.random_atomic_measures(TAMANHO_CORPUS_GLOBAL, config=config)
    )
    mista = add_measures(delta(0.0), uniform(0.0, 1.0))
    tarefas.append(("limit18", partial(check_limit_18, mista, [10.0, 30.0, 100.0], config)))
    tarefas.append(("limit18", partial(check_limit_18, delta(0.0), [10.0, 30.0, 100.0], config)))
    tarefas.append(("ac_perturbation", partial(check_ac_perturbation, delta(0.0), uniform(0.0, 1.0), [10.0, 100.0, 1000.0], config)))
    aleatorias = fixtures.random_atomic_measures(4, config=config)
    tarefas.extend(
        ("subadditivity", partial(check_subadditivity, a, b, [0.1, 1.0, 10.0], config))
        for a, b in zip(aleatorias[::2], aleatorias[1::2])
    )
    return tarefas


def _tarefas_prop32(config: RunConfig) -> List[Tarefa]:
    tarefas = [("prop32", partial(check_prop32, delta(0.0), t, config)) for t in (1.0, 10.0)]
    for mu in fixtures.random_atomic_measures(TAMANHO_CORPUS, config=config):
        tarefas.extend(("prop32", partial(check_prop32, mu, t, config)) for t in (1.0, 10.0, 100.0))
    return tarefas


def _tarefas_prop34(config: RunConfig) -> List[Tarefa]:
    tarefas = [("prop34", partial(check_prop34, delta(0.0), 100.0, 1.0, config))]
    for mu in fixtures.random_atomic_measures(TAMANHO_CORPUS, max_atomos=10, config=config):
        for t in (1.0, 10.0, 100.0):
            tarefas.extend(("prop34", partial(check_prop34, mu, t, d, config)) for d in (0.1, 0.5, 1.0))
    return tarefas


def _limiar_regime(mu: Measure, E: IntervalUnion) -> float:
    return math.pi * total_mass(mu) / float(E.diam())


def _medidas_chave(config: RunConfig) -> List[Measure]:
    fixa = atomic_measure([0.5, 2.5], [0.5, 0.5])
    return [fixa] + fixtures.measures_in_set(fixtures.CONJUNTO_CHAVE, 10, config=config)


def _tarefas_key(config: RunConfig) -> List[Tarefa]:
    tarefas = []
    E = fixtures.CONJUNTO_CHAVE
    for mu in _medidas_chave(config):
        grade = config.grade_cauda(_limiar_regime(mu, E))[1::16]
        tarefas.extend(("key_ineq", partial(check_key_ineq, mu, E, t, config)) for t in grade.tolist())
    return tarefas


def _tarefas_thm14(config: RunConfig) -> List[Tarefa]:
    tarefas = []
    E = fixtures.CONJUNTO_CHAVE
    for mu in _medidas_chave(config):
        grade = config.grade_cauda(_limiar_regime(mu, E)).tolist()
        tarefas.append(("thm14", partial(check_thm14, mu, E, grade, config)))
    unitario = fixtures.INTERVALO_UNITARIO
    grade = config.grade_cauda(_limiar_regime(delta(0.5), unitario)).tolist()
    tarefas.append(("thm14", partial(check_thm14, delta(0.5), unitario, grade, config)))
    tarefas.append(
        ("restriction", partial(check_restriction, delta(0.5), unitario, delta(3.0, 2.0), [10.0, 100.0, 1000.0], config))
    )
    tarefas.append(("en_lower_bound", partial(check_en_lower_bound, delta(0.5), unitario, 4, 1000.0, config)))
    return tarefas


def _tarefas_lemma33(config: RunConfig) -> List[Tarefa]:
    tarefas = [("lemma33", partial(check_lemma33, delta(0.0), 1.0, config))]
    for mu in fixtures.random_atomic_measures(TAMANHO_CORPUS, config=config):
        tarefas.extend(("lemma33", partial(check_lemma33, mu, t0, config)) for t0 in (1.0, 10.0))
    return tarefas


def _tarefas_poltoratski(config: RunConfig) -> List[Tarefa]:
    grade = [10.0, 100.0, 1000.0]
    dois = atomic_measure([0.0, 1.0], [0.5, 1.0])
    return [
        ("poltoratski", partial(check_poltoratski, delta(0.0), [1.0], grade, config)),
        ("poltoratski", partial(check_poltoratski, delta(0.0), [0.0, 0.0, 1.0], grade, config)),
        ("poltoratski", partial(check_poltoratski, dois, [0.0, -1.0, 0.0, 1.0], grade, config)),
    ]


def _tarefas_prop52(config: RunConfig) -> List[Tarefa]:
    mu, nu = fixtures.interleaved_pair()
    return [
        ("prop52", partial(check_prop52, delta(0.0), delta(1.0), 1.0, np.geomspace(1.0, 1e4, 9).tolist(), config)),
        ("prop52", partial(check_prop52, mu, nu, 2.0, [10.0, 100.0, 1000.0, 1e4], config)),
    ]


def _tarefas_cantor(config: RunConfig) -> List[Tarefa]:
    return [
        ("cantor_identities", partial(check_cantor_identities, 2, config.seed_k, config)),
        ("cantor_density", partial(check_cantor_density, 3, config.seed_k, config=config)),
        ("lemma42", partial(check_lemma42, 2, config.seed_k, 16, config)),
        ("thm16", partial(check_thm16_decay, 2, config.seed_k, 50.0, config)),
    ]


def _tarefas_oracle(config: RunConfig) -> List[Tarefa]:
    medidas = [mu for _, mu in fixtures.canonical_measures()]
    medidas.extend(fixtures.interleaved_pair())
    medidas.append(atomic_measure([0.5, 2.5], [0.5, 0.5]))
    medidas.extend(fixtures.random_atomic_measures(5, max_atomos=8, config=config))
    return [
        ("oracle", partial(check_oracle_equivalence, mu, t, 1_000_000, config))
        for mu in medidas
        for t in (1.0, 10.0)
    ]


_GRUPOS: Dict[str, Callable[[RunConfig], List[Tarefa]]] = {
    "boole": _tarefas_boole,
    "loomis": _tarefas_loomis,
    "prop32": _tarefas_prop32,
    "prop34": _tarefas_prop34,
    "key": _tarefas_key,
    "thm14": _tarefas_thm14,
    "lemma33": _tarefas_lemma33,
    "poltoratski": _tarefas_poltoratski,
    "prop52": _tarefas_prop52,
    "cantor": _tarefas_cantor,
    "oracle": _tarefas_oracle,
}

SELETORES = ("all",) + tuple(_GRUPOS)


def _tarefas_usuario(
    grupo: str,
    medida: Optional[Measure],
    conjunto: Optional[IntervalUnion],
    t_grid: Optional[Sequence[float]],
    config: RunConfig,
) -> List[Tarefa]:
    """Verificações extras sobre a medida/conjunto passados na linha de comando."""
    if medida is None or medida.is_zero:
        return []
    massa = total_mass(medida)
    grade = list(t_grid) if t_grid is not None else np.geomspace(0.1, 100.0, 7).tolist()
    if grupo == "boole":
        return [("boole", partial(check_boole, medida, massa, config))]
    if grupo == "loomis":
        return [("loomis", partial(check_loomis, medida, grade, config))]
    if grupo == "prop32":
        return [("prop32", partial(check_prop32, medida, massa, config))]
    if grupo == "prop34":
        return [("prop34", partial(check_prop34, medida, massa, 0.5, config))]
    if grupo == "lemma33":
        return [("lemma33", partial(check_lemma33, medida, massa, config))]
    if grupo == "poltoratski":
        return [("poltoratski", partial(check_poltoratski, medida, [0.0, 0.0, 1.0], grade, config))]
    if conjunto is not None and conjunto:
        limiar = _limiar_regime(medida, conjunto)
        if grupo == "key":
            return [("key_ineq", partial(check_key_ineq, medida, conjunto, 10.0 * limiar, config))]
        if grupo == "thm14":
            return [("thm14", partial(check_thm14, medida, conjunto, config.grade_cauda(limiar).tolist(), config))]
    return []


def run_suite(
    selector: str = "all",
    config: Optional[RunConfig] = None,
    metricas: Optional[SuiteMetrics] = None,
    medida: Optional[Measure] = None,
    conjunto: Optional[IntervalUnion] = None,
    t_grid: Optional[Sequence[float]] = None,
    progresso: Optional[Callable[[str, CheckReport], None]] = None,
) -> List[CheckReport]:
    """
    Executa as verificações do seletor em ordem determinística.

    Args:
        selector: Um de SELETORES
        metricas: Acumulador de tempo/memória por verificação (opcional)
        medida, conjunto, t_grid: Entradas do usuário somadas às fixtures
        progresso: Chamado após cada verificação (a biblioteca não imprime)

    Raises:
        ValueError: seletor desconhecido
    """
    config = resolver_config(config)
    if selector not in SELETORES:
        raise ValueError(f"Seletor desconhecido: '{selector}' (opções: {', '.join(SELETORES)})")
    grupos = list(_GRUPOS) if selector == "all" else [selector]
    relatorios: List[CheckReport] = []
    for grupo in grupos:
        tarefas = _GRUPOS[grupo](config) + _tarefas_usuario(grupo, medida, conjunto, t_grid, config)
        for nome, tarefa in tarefas:
            if metricas is None:
                relatorio = tarefa()
            else:
                with metricas.medir(nome) as medicao:
                    relatorio = tarefa()
                    medicao.finalizar(relatorio.status.value, relatorio.margin)
            relatorios.append(relatorio)
            if progresso is not None:
                progresso(grupo, relatorio)
    return relatorios


def suite_exit_code(relatorios: Sequence[CheckReport]) -> int:
    """0 se tudo passou; 1 com alguma falha; 2 se só há pré-condições/fora de regime."""
    status = {r.status for r in relatorios}
    if CheckStatus.FAILED in status:
        return 1
    if status & {CheckStatus.PRECONDITION, CheckStatus.OUT_OF_REGIME}:
        return 2
    return 0


def summarize(relatorios: Sequence[CheckReport]) -> dict:
    """Contagem por status e menor margem por check_id."""
    por_status: Dict[str, int] = {}
    margens: Dict[str, float] = {}
    for r in relatorios:
        por_status[r.status.value] = por_status.get(r.status.value, 0) + 1
        if r.status in (CheckStatus.PASSED, CheckStatus.FAILED):
            margens[r.check_id] = min(margens.get(r.check_id, math.inf), r.margin)
    return {
        "total": len(relatorios),
        "by_status": dict(sorted(por_status.items())),
        "min_margin": dict(sorted(margens.items())),
        "exit_code": suite_exit_code(relatorios),
    }
