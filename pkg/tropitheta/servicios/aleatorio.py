"""
Generadores aleatorios reproducibles (siempre a partir de un random.Random
con semilla) para las verificaciones por propiedades.
"""
import math
import random
from fractions import Fraction
from typing import List, Optional, Tuple

from networkx.utils import UnionFind

from tropitheta.modelos.curva import MetricGraph, Point
from tropitheta.modelos.divisor import Divisor, PLFunction
from tropitheta.servicios.curva import construir_grafo
from tropitheta.servicios.homologia import ArbolGenerador, arbol_generador


def racional(rng: random.Random, limite: int = 3, denominador: int = 6) -> Fraction:
    return Fraction(rng.randint(-limite * denominador, limite * denominador), rng.randint(1, denominador))


def vector(rng: random.Random, g: int, limite: int = 3, denominador: int = 6) -> Tuple[Fraction, ...]:
    return tuple(racional(rng, limite, denominador) for _ in range(g))


def enteros(rng: random.Random, g: int, limite: int = 2) -> Tuple[int, ...]:
    return tuple(rng.randint(-limite, limite) for _ in range(g))


def punto(grafo: MetricGraph, rng: random.Random, partes: int = 6) -> Point:
    """Punto en la rejilla de 1/partes de la longitud de una arista al azar"""
    arista = rng.choice(grafo.edges)
    return grafo.punto_en_arista(arista.id, arista.length * Fraction(rng.randint(0, partes), partes))


def puntos(grafo: MetricGraph, rng: random.Random, maximo: int = 3) -> List[Point]:
    """Entre 1 y `maximo` puntos distintos"""
    return list(dict.fromkeys(punto(grafo, rng) for _ in range(rng.randint(1, maximo))))


def divisor(grafo: MetricGraph, rng: random.Random, terminos: int = 3, coeficiente: int = 2) -> Divisor:
    return Divisor(
        (punto(grafo, rng), rng.choice([c for c in range(-coeficiente, coeficiente + 1) if c]))
        for _ in range(terminos)
    )


def funcion_pl(grafo: MetricGraph, rng: random.Random) -> PLFunction:
    """
    Función PL con pendientes enteras: valores racionales al azar en los
    vértices y, en cada arista, dos tramos de pendientes s1 > r > s2 alrededor
    de la pendiente media r (o un solo tramo si r es entera).
    """
    valores = {v: racional(rng, 2, 4) for v in grafo.vertices}
    tramos = {}
    for e in grafo.edges:
        a, b = valores[e.tail], valores[e.head]
        r = (b - a) / e.length
        if r.denominator == 1 and rng.random() < 0.3:
            tramos[e.id] = [(0, a), (e.length, b)]
            continue
        alta = math.floor(r) + 1 + rng.randint(0, 1)
        baja = math.ceil(r) - 1 - rng.randint(0, 1)
        if rng.random() < 0.5:
            t = (r - baja) * e.length / (alta - baja)
            tramos[e.id] = [(0, a), (t, a + alta * t), (e.length, b)]
        else:
            t = (alta - r) * e.length / (alta - baja)
            tramos[e.id] = [(0, a), (t, a + baja * t), (e.length, b)]
    return PLFunction.desde_quiebres(grafo, tramos)


def arbol(grafo: MetricGraph, rng: random.Random) -> ArbolGenerador:
    """Árbol generador al azar (Kruskal sobre un orden barajado)"""
    aristas = list(grafo.edges)
    rng.shuffle(aristas)
    componentes = UnionFind(grafo.vertices)
    elegidas = []
    for e in aristas:
        if componentes[e.tail] != componentes[e.head]:
            componentes.union(e.tail, e.head)
            elegidas.append(e.id)
    return arbol_generador(grafo, elegidas)


def grafo(
    rng: random.Random,
    genero_maximo: int = 4,
    vertices_maximos: int = 5,
    denominador: int = 6,
    genero: Optional[int] = None,
) -> MetricGraph:
    """
    Curva conexa al azar: un árbol aleatorio más g aristas extra (lazos y
    paralelas permitidos), con longitudes k/d, d <= denominador.
    Con `genero` se fija g en lugar de sortearlo.
    """
    n = rng.randint(1, vertices_maximos)
    nombres = [f"v{i}" for i in range(n)]
    pares = [(nombres[rng.randrange(i)], nombres[i]) for i in range(1, n)]
    g = rng.randint(1 if n == 1 else 0, genero_maximo) if genero is None else genero
    pares += [(rng.choice(nombres), rng.choice(nombres)) for _ in range(g)]

    def longitud() -> Fraction:
        return Fraction(rng.randint(1, 2 * denominador), rng.randint(1, denominador))

    aristas = [(f"e{i}", a, b, longitud()) for i, (a, b) in enumerate(pares)]
    return construir_grafo(nombres, aristas, name=f"aleatoria-{n}-{g}")
