"""
Función theta tropical, su divisor de esquinas y el pullback D_λ.

Θ(x) = max_n (nᵀx - ½nᵀGn) se resuelve como un problema de vector más
cercano: con y = G⁻¹x, los maximizadores son exactamente los minimizadores
de (n - y)ᵀG(n - y), que se enumeran por Fincke-Pohst sobre la
factorización LDLᵀ exacta de G.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from tropitheta import algebra
from tropitheta.config import obtener_configuracion
from tropitheta.errores import CurvaInvalida, InvarianteViolado, LimiteExcedido
from tropitheta.modelos.curva import MetricGraph, Point
from tropitheta.modelos.divisor import Divisor
from tropitheta.modelos.jacobiano import GramForm, JacPoint, KappaClass, ThetaValue
from tropitheta.servicios.curva import canonical_divisor
from tropitheta.servicios.divisores import AbelJacobi
from tropitheta.servicios.homologia import ArbolGenerador, forma_de
from tropitheta.servicios.orientacion import moderator

logger = logging.getLogger(__name__)

Entero = Tuple[int, ...]

RONDAS_MAXIMAS = 10_000


def _valor(n: Sequence[int], x: Sequence, forma: GramForm) -> Fraction:
    return algebra.producto_punto(n, x) - Fraction(1, 2) * algebra.producto_punto(n, forma.punto_reticulo(n))


def _distancia(n: Sequence[int], y: Sequence, forma: GramForm) -> Fraction:
    d = algebra.resta(n, y)
    return algebra.producto_punto(d, forma.punto_reticulo(d))


def _vectores_cercanos(y: Sequence[Fraction], forma: GramForm, tope: int) -> List[Entero]:
    """
    Todos los n ∈ Z^g que minimizan (n - y)ᵀG(n - y), empates incluidos.

    Se recorren los niveles k = g-1, ..., 0. Con G = L·D·Lᵀ la suma se separa
    en términos D_k·(n_k - c_k)² con centro c_k = y_k - Σ_{j>k} L_jk·(n_j - y_j);
    en cada nivel se barre desde round(c_k) hacia afuera mientras la suma
    parcial no supere la mejor cota conocida.
    """
    L, D = forma.factorizacion
    g = len(y)
    semilla = tuple(algebra.redondeo_mitad_abajo(c) for c in y)
    cota = _distancia(semilla, y, forma)
    mejores: List[Entero] = []
    n = [0] * g
    nodos = 0

    def registrar(total: Fraction) -> None:
        nonlocal cota, mejores
        if total < cota:
            cota = total
            mejores = [tuple(n)]
        else:
            mejores.append(tuple(n))

    def nivel(k: int, parcial: Fraction) -> None:
        nonlocal nodos
        centro = y[k] - sum((L[j][k] * (n[j] - y[j]) for j in range(k + 1, g)), Fraction(0))
        inicio = algebra.redondeo_mitad_abajo(centro)
        for paso, primero in ((1, inicio), (-1, inicio - 1)):
            m = primero
            while True:
                nodos += 1
                if nodos > tope:
                    raise LimiteExcedido(
                        f"La enumeración de Fincke-Pohst superó {tope} candidatos", requerido=nodos
                    )
                total = parcial + D[k] * (m - centro) ** 2
                if total > cota:
                    break
                n[k] = m
                if k == 0:
                    registrar(total)
                else:
                    nivel(k - 1, total)
                m += paso

    nivel(g - 1, Fraction(0))
    logger.debug("Fincke-Pohst: %d nodos, %d minimizadores", nodos, len(mejores))
    return sorted(set(mejores))


def theta_eval(x: Sequence, forma: GramForm, tope: Optional[int] = None) -> ThetaValue:
    """
    Valor exacto de Θ(x) con el conjunto completo de maximizadores.

    Args:
        x: vector racional de longitud g
        forma: base de ciclos y matriz de Gram
        tope: máximo de nodos de la enumeración (por defecto el configurado)

    Returns:
        ThetaValue: valor y argmax ordenado

    Raises:
        CurvaInvalida: si la dimensión de x no coincide con g
        LimiteExcedido: si la enumeración supera el tope
    """
    x = algebra.vector(x)
    if len(x) != forma.genero:
        raise CurvaInvalida(f"Vector de dimensión {len(x)}, se esperaba {forma.genero}")
    if forma.genero == 0:
        return ThetaValue(value=Fraction(0), argmax=((),))
    tope = obtener_configuracion().candidatos_maximos if tope is None else tope
    argmax = _vectores_cercanos(forma.coordenadas_reticulo(x), forma, tope)
    return ThetaValue(value=_valor(argmax[0], x, forma), argmax=tuple(argmax))


def on_theta_divisor(x: Sequence, forma: GramForm) -> bool:
    return theta_eval(x, forma).en_esquina


def _envolvente(
    lineas: Dict[Entero, Tuple[Fraction, Fraction]], longitud: Fraction
) -> List[Tuple[Fraction, Entero]]:
    """
    Envolvente superior exacta de rectas a + t·b en [0, longitud].

    Returns:
        lista de (inicio, n) con la recta activa desde `inicio`; empates a
        favor de la mayor pendiente y luego del menor n
    """
    def clave(n, t):
        a, b = lineas[n]
        return (a + t * b, b, tuple(-c for c in n))

    actual = max(lineas, key=lambda n: clave(n, Fraction(0)))
    tramos = [(Fraction(0), actual)]
    t = Fraction(0)
    while True:
        a0, b0 = lineas[actual]
        siguiente, corte = None, None
        for n, (a, b) in lineas.items():
            if b <= b0:
                continue
            tc = (a0 - a) / (b - b0)
            if tc <= t:
                continue
            if corte is None or tc < corte or (tc == corte and clave(n, tc) > clave(siguiente, tc)):
                siguiente, corte = n, tc
        if corte is None or corte >= longitud:
            return tramos
        tramos.append((corte, siguiente))
        actual, t = siguiente, corte


def _pendientes_extremas(argmax, direccion) -> Tuple[int, int]:
    pendientes = [int(algebra.producto_punto(n, direccion)) for n in argmax]
    return min(pendientes), max(pendientes)


def _esquinas_arista(
    inicio: Sequence[Fraction],
    direccion: Sequence[Fraction],
    longitud: Fraction,
    forma: GramForm,
) -> List[Tuple[Fraction, int]]:
    """
    Quiebres interiores de t ↦ Θ(inicio + t·direccion) en (0, longitud) con su
    salto de pendiente, por refinamiento certificado de la envolvente.
    """
    def x(t: Fraction):
        return algebra.suma(inicio, algebra.escalar(t, direccion))

    candidatos: Set[Entero] = set(theta_eval(x(Fraction(0)), forma).argmax)
    candidatos |= set(theta_eval(x(longitud), forma).argmax)
    for ronda in range(RONDAS_MAXIMAS):
        lineas = {
            n: (_valor(n, inicio, forma), algebra.producto_punto(n, direccion)) for n in candidatos
        }
        tramos = _envolvente(lineas, longitud)
        nuevos: Set[Entero] = set()
        esquinas = []
        for t, n in tramos[1:]:
            theta = theta_eval(x(t), forma)
            a, b = lineas[n]
            if theta.value > a + t * b:
                nuevos |= set(theta.argmax) - candidatos
                continue
            menor, mayor = _pendientes_extremas(theta.argmax, direccion)
            esquinas.append((t, mayor - menor))
        if not nuevos:
            logger.debug("Envolvente certificada en %d rondas con %d rectas", ronda + 1, len(candidatos))
            return esquinas
        candidatos |= nuevos
    raise InvarianteViolado(
        "envolvente_certificada", f"sin convergencia tras {RONDAS_MAXIMAS} rondas"
    )


def pullback_divisor(
    shift: JacPoint,
    grafo: MetricGraph,
    forma: Optional[GramForm] = None,
    arbol: Optional[ArbolGenerador] = None,
) -> Divisor:
    """
    Divisor de esquinas D_λ de p ↦ Θ(μ(p) - λ).

    A lo largo de cada arista μ es afín con dirección entera s_e; los quiebres
    interiores salen de la envolvente certificada. En cada vértice se usa un
    único levantamiento de μ para todas sus semiaristas y se suman las
    pendientes salientes máximas sobre el argmax del vértice.

    Args:
        shift: λ ∈ J(C)
        grafo: curva
        forma: base y matriz de Gram; por defecto la del árbol BFS
        arbol: árbol que fija los levantamientos de μ

    Returns:
        Divisor: efectivo de grado g
    """
    forma = forma or shift.form
    mu = AbelJacobi(grafo, forma, arbol)
    if forma.genero == 0:
        return Divisor()

    def levantamiento(p: Point):
        return algebra.resta(mu.punto(p), shift.coords)

    argmax_vertice = {
        v: theta_eval(levantamiento(grafo.punto_vertice(v)), forma).argmax for v in grafo.vertices
    }
    coeficientes: Dict[Point, int] = {}
    for v in grafo.vertices:
        total = 0
        for arista, extremo in grafo.incidencias(v):
            d = algebra.escalar(extremo, mu.direccion(arista.id))
            total += max(int(algebra.producto_punto(n, d)) for n in argmax_vertice[v])
        coeficientes[grafo.punto_vertice(v)] = total

    for arista in grafo.edges:
        direccion = mu.direccion(arista.id)
        if not any(direccion):
            continue
        inicio = levantamiento(grafo.punto_vertice(arista.tail))
        for t, salto in _esquinas_arista(inicio, direccion, arista.length, forma):
            if salto:
                coeficientes[grafo.punto_en_arista(arista.id, t)] = salto
    return Divisor(coeficientes)


def compute_kappa(
    grafo: MetricGraph,
    forma: Optional[GramForm] = None,
    arbol: Optional[ArbolGenerador] = None,
) -> KappaClass:
    """
    Constante de Riemann a partir del moderador del punto base.

    K_0 = μ(K⁻_{p0}) y κ = -K_0 (representante canónico); además se
    verifica 2·K_0 = μ(K).
    """
    forma = forma or forma_de(grafo)
    mu = AbelJacobi(grafo, forma, arbol)
    k0 = mu(moderator(grafo, [grafo.basepoint], "minus"))
    kappa = JacPoint((-k0).canonico, forma)
    doble = (k0 * 2) == mu(canonical_divisor(grafo))
    logger.debug("κ = %s (2·K_0 = μ(K): %s)", kappa.canonico, doble)
    return KappaClass(kappa=kappa, k0=k0, doble_k0_es_canonico=doble)


def jacobi_inversion_check(
    lam: JacPoint,
    grafo: MetricGraph,
    kappa: Optional[KappaClass] = None,
    arbol: Optional[ArbolGenerador] = None,
) -> bool:
    """μ(D_λ) + κ = λ en J(C)"""
    kappa = kappa or compute_kappa(grafo, lam.form, arbol)
    d = pullback_divisor(lam, grafo, lam.form, arbol)
    return AbelJacobi(grafo, lam.form, arbol)(d) + kappa.kappa == lam


def effective_class_test(clase: JacPoint, kappa: KappaClass) -> bool:
    """
    Una clase de grado g-1 es efectiva si y solo si clase + κ cae en el
    divisor theta. El grado lo controla quien llama.
    """
    return on_theta_divisor((clase + kappa.kappa).coords, clase.form)
