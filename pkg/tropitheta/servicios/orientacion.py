import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from tropitheta.errores import CurvaInvalida, InvarianteViolado
from tropitheta.modelos.curva import MetricGraph, Point
from tropitheta.modelos.divisor import Divisor, PLFunction
from tropitheta.modelos.jacobiano import Cycle
from tropitheta.modelos.orientacion import GammaClass, Orientation, Paso
from tropitheta.servicios.curva import subdivide_at
from tropitheta.servicios.divisores import principal_divisor

logger = logging.getLogger(__name__)

MENOS = "minus"
MAS = "plus"


def _distancias_vertices(
    grafo: MetricGraph, fuente: Sequence[Point], soporte: Sequence[str]
) -> Dict[str, Fraction]:
    red = grafo.grafo_networkx()
    origenes = set()
    for p in fuente:
        if p.es_vertice:
            origenes.add(p.vertex)
            continue
        arista = grafo.arista(p.edge)
        virtual = ("fuente", p.edge, p.offset)
        red.add_edge(virtual, arista.tail, length=p.offset)
        red.add_edge(virtual, arista.head, length=arista.length - p.offset)
        origenes.add(virtual)
    for edge_id in soporte:
        arista = grafo.arista(edge_id)
        origenes.update((arista.tail, arista.head))
    distancias = nx.multi_source_dijkstra_path_length(red, origenes, weight="length")
    return {v: Fraction(distancias[v]) for v in grafo.vertices}


def distance_function(
    grafo: MetricGraph,
    fuente: Iterable[Point] = (),
    aristas: Iterable[str] = (),
) -> PLFunction:
    """
    Función distancia exacta d(x) = dist(S, x) como función PL.

    Las distancias a los vértices salen de Dijkstra multi-fuente (las fuentes
    interiores entran como nodos virtuales). Sobre cada arista, entre anclas
    consecutivas (a, f_a) y (b, f_b) la función es min(f_a + (x-a), f_b + (b-x)),
    con cresta en (a + b + f_b - f_a)/2 cuando |f_b - f_a| < b - a.

    Args:
        grafo: curva
        fuente: puntos de S
        aristas: aristas de soporte, donde la distancia es 0 (variante d_γ)

    Returns:
        PLFunction: pendientes ±1 fuera del soporte

    Raises:
        CurvaInvalida: si no hay fuente
    """
    fuente = list(dict.fromkeys(grafo.validar_punto(p) for p in fuente))
    soporte = list(aristas)
    if not fuente and not soporte:
        raise CurvaInvalida("La función distancia necesita una fuente no vacía")
    d = _distancias_vertices(grafo, fuente, soporte)

    en_soporte = set(soporte)
    interiores: Dict[str, List[Fraction]] = {}
    for p in fuente:
        if not p.es_vertice:
            interiores.setdefault(p.edge, []).append(p.offset)

    tramos = {}
    for e in grafo.edges:
        if e.id in en_soporte:
            tramos[e.id] = [(Fraction(0), Fraction(0)), (e.length, Fraction(0))]
            continue
        anclas = sorted(
            [(Fraction(0), d[e.tail]), (e.length, d[e.head])]
            + [(o, Fraction(0)) for o in interiores.get(e.id, ())]
        )
        quiebres = [anclas[0]]
        for (a, fa), (b, fb) in zip(anclas, anclas[1:]):
            if abs(fb - fa) < b - a:
                cresta = (a + b + fb - fa) / 2
                quiebres.append((cresta, fa + cresta - a))
            quiebres.append((b, fb))
        tramos[e.id] = quiebres
    return PLFunction.desde_quiebres(grafo, tramos)


@dataclass(frozen=True)
class Moderador:
    """Los dos moderadores K± de una orientación y la función que la induce"""
    mas: Divisor
    menos: Divisor
    orientacion: Orientation
    distancia: PLFunction

    def signo(self, signo: str) -> Divisor:
        if signo == MAS:
            return self.mas
        if signo == MENOS:
            return self.menos
        raise ValueError(f"Signo desconocido: {signo!r} (use '{MAS}' o '{MENOS}')")


def gradient_orientation(
    grafo: MetricGraph,
    f: PLFunction,
    fijos: Optional[Mapping[str, int]] = None,
    puntos: Iterable[Point] = (),
) -> Orientation:
    """
    Orientación por gradiente creciente de f sobre el modelo refinado en
    todos sus quiebres interiores (y en `puntos`).

    Args:
        grafo: curva
        f: función PL con pendientes ±1 salvo en las aristas de `fijos`
        fijos: sentido impuesto (+1/-1 respecto de tail -> head) para aristas
            originales donde f es constante
        puntos: puntos adicionales a convertir en vértices

    Raises:
        InvarianteViolado: si una pieza sin sentido impuesto es horizontal
    """
    fijos = fijos or {}
    cortes = list(f.quiebres_interiores(grafo)) + [p for p in puntos if not p.es_vertice]
    refinado, refinamiento = subdivide_at(grafo, cortes)
    g = refinamiento.funcion(f)
    sentidos: Dict[str, int] = {}
    for pieza in refinado.edges:
        segmentos = g.segmentos(pieza.id)
        if len(segmentos) != 1:
            raise InvarianteViolado("refinamiento_completo", f"la pieza {pieza.id} conserva quiebres")
        pendiente = segmentos[0][2]
        original = refinamiento.origen[pieza.id][0]
        if original in fijos:
            sentidos[pieza.id] = fijos[original]
        elif pendiente == 0:
            raise InvarianteViolado("gradiente_definido", f"pieza horizontal {pieza.id}")
        else:
            sentidos[pieza.id] = 1 if pendiente > 0 else -1

    orientacion = Orientation(refinamiento=refinamiento, sentidos=sentidos, crestas=())
    crestas = tuple(
        v for v in refinado.vertices
        if orientacion.valencias(v)[0] == 0 and g.valor(refinado, refinado.punto_vertice(v)) > 0
    )
    return Orientation(refinamiento=refinamiento, sentidos=sentidos, crestas=crestas)


def divisores_valencia(orientacion: Orientation) -> Tuple[Divisor, Divisor]:
    """(K⁺, K⁻) = Σ (val_± - 1)·p sobre el refinado, devueltos en el modelo original"""
    mas, menos = {}, {}
    refinado = orientacion.grafo
    for v in refinado.vertices:
        salientes, entrantes = orientacion.valencias(v)
        p = refinado.punto_vertice(v)
        mas[p] = salientes - 1
        menos[p] = entrantes - 1
    refinamiento = orientacion.refinamiento
    return refinamiento.divisor_original(Divisor(mas)), refinamiento.divisor_original(Divisor(menos))


def es_aciclica(orientacion: Orientation) -> bool:
    dirigido = nx.MultiDiGraph()
    dirigido.add_nodes_from(orientacion.grafo.vertices)
    for pieza in orientacion.grafo.edges:
        origen, destino = orientacion.extremos(pieza.id)
        dirigido.add_edge(origen, destino, key=pieza.id)
    return nx.is_directed_acyclic_graph(dirigido)


def construir_moderador(grafo: MetricGraph, fuente: Iterable[Point]) -> Moderador:
    """
    Moderadores K±_S de la orientación por gradiente de d_S.

    Raises:
        InvarianteViolado: si la orientación resultante tiene ciclos dirigidos
    """
    fuente = list(dict.fromkeys(grafo.validar_punto(p) for p in fuente))
    d = distance_function(grafo, fuente)
    orientacion = gradient_orientation(grafo, d, puntos=fuente)
    if not es_aciclica(orientacion):
        raise InvarianteViolado("orientacion_aciclica", "el gradiente de d_S tiene un ciclo dirigido")
    mas, menos = divisores_valencia(orientacion)
    logger.debug("Moderador con %d fuentes: K⁻ de grado %d", len(fuente), menos.grado)
    return Moderador(mas=mas, menos=menos, orientacion=orientacion, distancia=d)


def moderator(grafo: MetricGraph, fuente: Iterable[Point], signo: str = MENOS) -> Divisor:
    """K^±_S = Σ (val_±(p) - 1)·p para el flujo de gradiente de d_S; grado g-1"""
    return construir_moderador(grafo, fuente).signo(signo)


def moderator_difference_check(grafo: MetricGraph, fuente: Iterable[Point], otra: Iterable[Point]) -> bool:
    """K⁻_{S'} - K⁻_S = ½((d_S) - (d_{S'})) como divisores"""
    a = construir_moderador(grafo, fuente)
    b = construir_moderador(grafo, otra)
    doble = principal_divisor(a.distancia - b.distancia, grafo)
    return (b.menos - a.menos) * 2 == doble


def gamma_support(bits: Sequence[int], basis: Sequence[Cycle], grafo: MetricGraph) -> GammaClass:
    """
    Soporte |γ| de Σ bits_i·λ_i (aristas de coeficiente impar) y su
    descomposición en circuitos: cada circuito arranca en la arista libre de
    menor índice, recorrida de tail a head, y sale siempre por la arista
    libre de menor índice.

    Raises:
        InvarianteViolado: si el soporte tiene un vértice de valencia impar
    """
    if len(bits) != len(basis):
        raise CurvaInvalida(f"Se esperaban {len(basis)} bits, se dieron {len(bits)}")
    bits = tuple(int(b) % 2 for b in bits)
    suma = [0] * len(grafo.edges)
    for b, ciclo in zip(bits, basis):
        if b:
            suma = [s + c for s, c in zip(suma, ciclo.coeficientes)]
    soporte = tuple(e.id for e, s in zip(grafo.edges, suma) if s % 2)

    valencia: Dict[str, int] = {}
    for edge_id in soporte:
        arista = grafo.arista(edge_id)
        valencia[arista.tail] = valencia.get(arista.tail, 0) + 1
        valencia[arista.head] = valencia.get(arista.head, 0) + 1
    impares = sorted(v for v, k in valencia.items() if k % 2)
    if impares:
        raise InvarianteViolado("soporte_par", f"vértices de valencia impar en |γ|: {impares}")

    return GammaClass(bits=bits, support=soporte, circuits=descomponer_circuitos(grafo, soporte))


def descomponer_circuitos(
    grafo: MetricGraph, soporte: Sequence[str], orden: Optional[Sequence[str]] = None
) -> Tuple[Tuple[Paso, ...], ...]:
    """
    Circuitos cerrados disjuntos en aristas que cubren `soporte`. `orden` fija
    la prioridad de las aristas (por defecto el orden de archivo).
    """
    prioridad = {edge_id: i for i, edge_id in enumerate(orden or sorted(soporte, key=grafo.indice_arista))}
    libres = set(soporte)
    circuitos = []
    while libres:
        primera = grafo.arista(min(libres, key=prioridad.get))
        libres.discard(primera.id)
        inicio, actual = primera.tail, primera.head
        circuito: List[Paso] = [(primera.id, 1)]
        while actual != inicio:
            arista, extremo = min(
                ((a, x) for a, x in grafo.incidencias(actual) if a.id in libres),
                key=lambda par: prioridad[par[0].id],
            )
            libres.discard(arista.id)
            circuito.append((arista.id, extremo))
            actual = arista.head if extremo == 1 else arista.tail
        circuitos.append(tuple(circuito))
    return tuple(circuitos)


def orientacion_caracteristica(gamma: GammaClass, grafo: MetricGraph) -> Moderador:
    """
    Orientación de K±_γ: los circuitos de γ sobre |γ| y el gradiente de d_γ fuera.

    Raises:
        CurvaInvalida: si γ es trivial
    """
    if gamma.es_trivial or not gamma.support:
        raise CurvaInvalida("La característica de ciclo necesita γ no trivial")
    d = distance_function(grafo, aristas=gamma.support)
    orientacion = gradient_orientation(grafo, d, fijos=gamma.sentidos())
    mas, menos = divisores_valencia(orientacion)
    return Moderador(mas=mas, menos=menos, orientacion=orientacion, distancia=d)


def char_divisor(gamma: GammaClass, grafo: MetricGraph, signo: str = MENOS) -> Divisor:
    """K^±_γ; el signo menos da un divisor efectivo de grado g-1"""
    return orientacion_caracteristica(gamma, grafo).signo(signo)


@dataclass(frozen=True)
class ContabilidadMedios:
    """
    S = vértices de |γ|, M = puntos medios de las aristas de |γ| y la
    diferencia K⁻_γ - K⁻_S
    """
    fuente: Tuple[Point, ...]
    medios: Tuple[Point, ...]
    diferencia: Divisor
    esperada: Divisor

    @property
    def cumple(self) -> bool:
        return self.diferencia == self.esperada


def midpoint_bookkeeping(gamma: GammaClass, grafo: MetricGraph) -> ContabilidadMedios:
    """
    Compara K⁻_γ - K⁻_S con Σ_{p∈S} ½val_γ(p)·p - M, donde val_γ es la
    valencia dentro de |γ|.
    """
    valencia: Dict[str, int] = {}
    for edge_id in gamma.support:
        arista = grafo.arista(edge_id)
        valencia[arista.tail] = valencia.get(arista.tail, 0) + 1
        valencia[arista.head] = valencia.get(arista.head, 0) + 1
    fuente = tuple(grafo.punto_vertice(v) for v in grafo.vertices if v in valencia)
    medios = tuple(
        grafo.punto_en_arista(edge_id, grafo.arista(edge_id).length / 2) for edge_id in gamma.support
    )
    diferencia = char_divisor(gamma, grafo) - moderator(grafo, fuente)
    esperada = Divisor((p, valencia[p.vertex] // 2) for p in fuente) - Divisor.desde_puntos(medios)
    return ContabilidadMedios(fuente=fuente, medios=medios, diferencia=diferencia, esperada=esperada)


def _dot_id(nombre: str) -> str:
    return '"' + nombre.replace("\\", "\\\\").replace('"', '\\"') + '"'


def orientacion_dot(orientacion: Orientation, nombre: str = "orientacion") -> str:
    """
    Digrafo DOT del modelo refinado: cada arista se escribe tail -> head con
    `dir=forward` o `dir=back` según su sentido; las crestas van en doble círculo.
    """
    refinado = orientacion.grafo
    crestas = set(orientacion.crestas)
    lineas = [f"digraph {_dot_id(nombre)} {{"]
    for v in refinado.vertices:
        forma = "doublecircle" if v in crestas else "circle"
        lineas.append(f"  {_dot_id(v)} [shape={forma}];")
    for pieza in refinado.edges:
        sentido = "forward" if orientacion.sentidos[pieza.id] == 1 else "back"
        lineas.append(
            f"  {_dot_id(pieza.tail)} -> {_dot_id(pieza.head)} "
            f"[label={_dot_id(f'{pieza.id} ({pieza.length})')}, dir={sentido}];"
        )
    lineas.append("}")
    return "\n".join(lineas) + "\n"
