"""
Oráculo discreto de efectividad: modelo unitario y reducción de Dhar.

Independiente de la función theta; sirve para contrastar effective_class_test.
"""
import logging
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from tropitheta.config import obtener_configuracion
from tropitheta.errores import LimiteExcedido
from tropitheta.modelos.curva import MetricGraph, Point
from tropitheta.modelos.divisor import Divisor
from tropitheta.modelos.modelo_unitario import UnitModel

logger = logging.getLogger(__name__)

Fichas = Tuple[int, ...]


def escala_unitaria(grafo: MetricGraph, puntos: Sequence[Point] = ()) -> int:
    """MCM de los denominadores de las longitudes y de los offsets de `puntos`"""
    denominadores = [e.length.denominator for e in grafo.edges]
    denominadores += [Fraction(p.offset).denominator for p in puntos if not p.es_vertice]
    return math.lcm(*denominadores)


def to_unit_model(
    grafo: MetricGraph,
    d: Divisor,
    q: Optional[Point] = None,
    tope: Optional[int] = None,
) -> Tuple[UnitModel, Fichas]:
    """
    Escala la curva por el MCM de los denominadores y la subdivide en
    segmentos unitarios.

    Args:
        grafo: curva
        d: divisor a trasladar (y `q`, si es interior, entra en la escala)
        q: punto base de la reducción
        tope: máximo de aristas unitarias (por defecto el configurado)

    Returns:
        (UnitModel, fichas): el multigrafo y D como vector de fichas por vértice

    Raises:
        LimiteExcedido: si el modelo supera el tope; `requerido` es la escala
    """
    tope = obtener_configuracion().aristas_unitarias_maximas if tope is None else tope
    puntos = [p for p, _ in d.items()] + ([q] if q is not None else [])
    escala = escala_unitaria(grafo, puntos)
    total = sum(int(e.length * escala) for e in grafo.edges)
    if total > tope:
        raise LimiteExcedido(
            f"El modelo unitario necesita {total} aristas con escala {escala} (tope {tope})",
            requerido=escala,
        )

    etiquetas: List[str] = list(grafo.vertices)
    indices: Dict[Point, int] = {grafo.punto_vertice(v): i for i, v in enumerate(grafo.vertices)}
    aristas: List[Tuple[int, int]] = []
    for e in grafo.edges:
        pasos = int(e.length * escala)
        anterior = indices[grafo.punto_vertice(e.tail)]
        for k in range(1, pasos):
            etiquetas.append(f"{e.id}#{k}")
            actual = len(etiquetas) - 1
            indices[grafo.punto_en_arista(e.id, Fraction(k, escala))] = actual
            aristas.append((anterior, actual))
            anterior = actual
        aristas.append((anterior, indices[grafo.punto_vertice(e.head)]))

    modelo = UnitModel(etiquetas=tuple(etiquetas), aristas=tuple(aristas), escala=escala, puntos=indices)
    fichas = [0] * modelo.n
    for p, c in d.items():
        fichas[indices[p]] += c
    logger.debug("Modelo unitario: escala %d, %d vértices, %d aristas", escala, modelo.n, len(aristas))
    return modelo, tuple(fichas)


def _capas(modelo: UnitModel, q: int) -> List[int]:
    """Distancia combinatoria de cada vértice a q"""
    distancia = nx.single_source_shortest_path_length(modelo.grafo, q)
    return [distancia[v] for v in range(modelo.n)]


def disparar(modelo: UnitModel, fichas: List[int], conjunto: set, veces: int) -> None:
    """Cada vértice del conjunto manda `veces` fichas por cada arista que sale del conjunto"""
    for v in conjunto:
        for w in modelo.vecinos[v]:
            if w not in conjunto:
                fichas[v] -= veces
                fichas[w] += veces


def _quemar(modelo: UnitModel, fichas: Sequence[int], q: int) -> set:
    """Dhar: un vértice arde cuando sus aristas hacia el fuego superan sus fichas"""
    quemados = {q}
    expuestos = [0] * modelo.n
    cola = deque([q])
    while cola:
        v = cola.popleft()
        for w in modelo.vecinos[v]:
            if w in quemados:
                continue
            expuestos[w] += 1
            if expuestos[w] > fichas[w]:
                quemados.add(w)
                cola.append(w)
    return quemados


def dhar_reduce(modelo: UnitModel, fichas: Sequence[int], q: int) -> Fichas:
    """
    Representante q-reducido de D.

    Primero se vuelve D no negativo fuera de q disparando las bolas
    {dist < k} desde la capa más externa hacia adentro; luego se repite
    quemar desde q y disparar el conjunto no quemado tantas veces como lo
    permita su vértice más ajustado, hasta que todo arde.

    Args:
        modelo: multigrafo unitario
        fichas: divisor por vértice
        q: índice del vértice base

    Returns:
        tuple: divisor q-reducido
    """
    fichas = list(fichas)
    distancia = _capas(modelo, q)
    for k in range(max(distancia), 0, -1):
        bola = {v for v in range(modelo.n) if distancia[v] < k}
        veces = 0
        for v in range(modelo.n):
            if distancia[v] == k and fichas[v] < 0:
                entrantes = sum(1 for w in modelo.vecinos[v] if w in bola)
                veces = max(veces, -(fichas[v] // entrantes))
        if veces:
            disparar(modelo, fichas, bola, veces)

    rondas = 0
    while True:
        quemados = _quemar(modelo, fichas, q)
        if len(quemados) == modelo.n:
            break
        intactos = set(range(modelo.n)) - quemados
        salientes = {v: sum(1 for w in modelo.vecinos[v] if w not in intactos) for v in intactos}
        veces = min(fichas[v] // s for v, s in salientes.items() if s)
        disparar(modelo, fichas, intactos, veces)
        rondas += 1
    logger.debug("Reducción de Dhar en %d rondas", rondas)
    return tuple(fichas)


def cumple_dhar(modelo: UnitModel, fichas: Sequence[int], q: int) -> bool:
    """
    Criterio exhaustivo de q-reducción: no negativo fuera de q y todo conjunto
    no vacío sin q tiene un vértice con menos fichas que aristas salientes.
    Recorre los 2^(n-1) subconjuntos: solo para modelos pequeños.
    """
    resto = [v for v in range(modelo.n) if v != q]
    if any(fichas[v] < 0 for v in resto):
        return False
    for tamano in range(1, len(resto) + 1):
        for conjunto in combinations(resto, tamano):
            dentro = set(conjunto)
            if all(
                fichas[v] >= sum(1 for w in modelo.vecinos[v] if w not in dentro) for v in conjunto
            ):
                return False
    return True


def divisor_metrico(modelo: UnitModel, fichas: Sequence[int]) -> Divisor:
    """Vector de fichas -> divisor sobre los puntos de la curva original"""
    return Divisor((modelo.punto_de_indice[i], c) for i, c in enumerate(fichas) if c)


@dataclass(frozen=True)
class Reduccion:
    modelo: UnitModel
    base: int
    reducido: Fichas

    @property
    def efectiva(self) -> bool:
        return self.reducido[self.base] >= 0


def reducir(grafo: MetricGraph, d: Divisor, q: Point, tope: Optional[int] = None) -> Reduccion:
    grafo.validar_punto(q)
    modelo, fichas = to_unit_model(grafo, d, q, tope)
    base = modelo.puntos[q]
    return Reduccion(modelo=modelo, base=base, reducido=dhar_reduce(modelo, fichas, base))


def is_effective_oracle(grafo: MetricGraph, d: Divisor, q: Point, tope: Optional[int] = None) -> bool:
    """
    D es equivalente a un divisor efectivo si y solo si su forma q-reducida
    es no negativa en q. Grado negativo: falso sin construir el modelo.

    Raises:
        LimiteExcedido: si el modelo unitario supera el tope
    """
    if d.grado < 0:
        return False
    return reducir(grafo, d, q, tope).efectiva
