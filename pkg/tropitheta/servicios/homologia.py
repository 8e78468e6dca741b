import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from tropitheta import algebra
from tropitheta.errores import CurvaInvalida
from tropitheta.modelos.curva import MetricGraph
from tropitheta.modelos.jacobiano import Cycle, GramForm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArbolGenerador:
    """
    Árbol generador con raíz. `padre[v]` es (arista, vértice padre) para
    todo v distinto de la raíz.
    """
    raiz: str
    aristas: Tuple[str, ...]
    padre: Mapping[str, Tuple[str, str]]


def arbol_generador(grafo: MetricGraph, aristas: Optional[Sequence[str]] = None) -> ArbolGenerador:
    """
    Árbol generador por BFS desde el vértice base.

    Sin `aristas`, los vecinos se recorren en orden de archivo. Con `aristas`
    se usa exactamente ese conjunto, que debe formar un árbol generador.

    Raises:
        CurvaInvalida: si las aristas dadas no forman un árbol generador
    """
    permitidas = None
    if aristas is not None:
        permitidas = set(aristas)
        for edge_id in permitidas:
            grafo.arista(edge_id)
        if len(permitidas) != len(grafo.vertices) - 1:
            raise CurvaInvalida(
                f"Un árbol generador necesita {len(grafo.vertices) - 1} aristas, se dieron {len(permitidas)}"
            )

    raiz = grafo.vertice_base
    padre: Dict[str, Tuple[str, str]] = {}
    visitados = {raiz}
    cola = deque([raiz])
    elegidas: List[str] = []
    while cola:
        v = cola.popleft()
        for arista, extremo in grafo.incidencias(v):
            if permitidas is not None and arista.id not in permitidas:
                continue
            w = arista.head if extremo == 1 else arista.tail
            if w in visitados:
                continue
            visitados.add(w)
            padre[w] = (arista.id, v)
            elegidas.append(arista.id)
            cola.append(w)

    if len(visitados) != len(grafo.vertices):
        raise CurvaInvalida("Las aristas dadas no generan todos los vértices")
    orden = {e.id: i for i, e in enumerate(grafo.edges)}
    return ArbolGenerador(raiz=raiz, aristas=tuple(sorted(elegidas, key=orden.get)), padre=padre)


def caminos_desde_raiz(grafo: MetricGraph, arbol: ArbolGenerador) -> Dict[str, Tuple[int, ...]]:
    """
    Para cada vértice, la cadena del camino en el árbol desde la raíz, en
    coordenadas de arista (+1 si el camino recorre la arista de tail a head)
    """
    indice = {e.id: i for i, e in enumerate(grafo.edges)}
    caminos: Dict[str, Tuple[int, ...]] = {arbol.raiz: tuple(0 for _ in grafo.edges)}

    def camino(v: str) -> Tuple[int, ...]:
        pendientes = []
        while v not in caminos:
            pendientes.append(v)
            v = arbol.padre[v][1]
        for w in reversed(pendientes):
            edge_id, p = arbol.padre[w]
            cadena = list(caminos[p])
            cadena[indice[edge_id]] += 1 if grafo.arista(edge_id).tail == p else -1
            caminos[w] = tuple(cadena)
        return caminos[v]

    for v in grafo.vertices:
        camino(v)
    return caminos


def cycle_basis(grafo: MetricGraph, arbol: Optional[ArbolGenerador] = None) -> List[Cycle]:
    """
    Base de ciclos fundamentales: un ciclo por arista fuera del árbol, en
    orden de archivo, con coeficiente +1 sobre esa arista.

    Args:
        grafo: curva conexa
        arbol: árbol generador; por defecto el BFS desde el vértice base

    Returns:
        list[Cycle]: g ciclos simples
    """
    arbol = arbol or arbol_generador(grafo)
    caminos = caminos_desde_raiz(grafo, arbol)
    en_arbol = set(arbol.aristas)
    base = []
    for i, e in enumerate(grafo.edges):
        if e.id in en_arbol:
            continue
        coeficientes = [a - b for a, b in zip(caminos[e.tail], caminos[e.head])]
        coeficientes[i] += 1
        base.append(Cycle(tuple(coeficientes)))
    logger.debug("Base de %d ciclos con árbol %s", len(base), arbol.aristas)
    return base


def frontera(grafo: MetricGraph, coeficientes: Sequence) -> Dict[str, Fraction]:
    """Borde de una cadena: Σ coef·(head - tail) por vértice"""
    borde: Dict[str, Fraction] = {v: Fraction(0) for v in grafo.vertices}
    for e, c in zip(grafo.edges, coeficientes):
        borde[e.head] += c
        borde[e.tail] -= c
    return borde


def es_ciclo(grafo: MetricGraph, coeficientes: Sequence) -> bool:
    return all(c == 0 for c in frontera(grafo, coeficientes).values())


def q_pair(a: Sequence, b: Sequence, grafo: MetricGraph) -> Fraction:
    """Forma bilineal Q(a, b) = Σ_e a(e)·b(e)·ℓ_e"""
    if len(a) != len(grafo.edges) or len(b) != len(grafo.edges):
        raise ValueError("Las cadenas deben tener un coeficiente por arista")
    return sum((Fraction(x) * y * e.length for x, y, e in zip(a, b, grafo.edges)), Fraction(0))


def gram_matrix(base: Sequence[Cycle], grafo: MetricGraph) -> GramForm:
    """
    Matriz de Gram G_ij = Q(λ_i, λ_j) de la base.

    Raises:
        CurvaInvalida: si la matriz resultante no es definida positiva
    """
    gram = tuple(
        tuple(q_pair(ci.coeficientes, cj.coeficientes, grafo) for cj in base) for ci in base
    )
    if not algebra.es_definida_positiva(gram):
        raise CurvaInvalida("La base dada no produce una forma definida positiva")
    return GramForm(basis=tuple(base), gram=gram)


def forma_de(grafo: MetricGraph, arbol: Optional[ArbolGenerador] = None) -> GramForm:
    """Base fundamental y su matriz de Gram en un solo paso"""
    return gram_matrix(cycle_basis(grafo, arbol), grafo)


def ciclos_simples(grafo: MetricGraph) -> List[Cycle]:
    """
    Todos los ciclos simples del grafo, uno por par de sentidos de recorrido.
    Enumeración exhaustiva: solo para grafos pequeños.
    """
    dirigido = nx.MultiDiGraph()
    dirigido.add_nodes_from(grafo.vertices)
    for e in grafo.edges:
        dirigido.add_edge(e.tail, e.head, key=(e.id, 1))
        if not e.es_lazo:
            dirigido.add_edge(e.head, e.tail, key=(e.id, -1))
    indice = {e.id: i for i, e in enumerate(grafo.edges)}
    vistos = set()
    resultado = []
    for ciclo in _ciclos_multiples(dirigido):
        coeficientes = [0] * len(grafo.edges)
        for edge_id, sentido in ciclo:
            coeficientes[indice[edge_id]] += sentido
        clave = frozenset((i, c) for i, c in enumerate(coeficientes) if c)
        opuesta = frozenset((i, -c) for i, c in enumerate(coeficientes) if c)
        if clave in vistos or opuesta in vistos or len(set(e for e, _ in ciclo)) != len(ciclo):
            continue
        vistos.add(clave)
        resultado.append(Cycle(tuple(coeficientes)))
    return resultado


def _ciclos_multiples(dirigido: nx.MultiDiGraph):
    """Circuitos simples dirigidos de un multigrafo como listas de (arista, sentido)"""
    for camino in nx.simple_cycles(nx.DiGraph(dirigido)):
        yield from _expandir(dirigido, camino + [camino[0]])


def _expandir(dirigido: nx.MultiDiGraph, vertices: List[str]):
    if len(vertices) == 1:
        yield []
        return
    for clave in dirigido[vertices[0]][vertices[1]]:
        for resto in _expandir(dirigido, vertices[1:]):
            yield [clave] + resto
