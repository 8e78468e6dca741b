import json
import random
from fractions import Fraction

import pytest

from tropitheta.modelos.curva import Point
from tropitheta.servicios import aleatorio
from tropitheta.servicios.curva import construir_grafo


def _curva(nombre, vertices, aristas):
    return construir_grafo(vertices, [(i, t, h, Fraction(l)) for i, t, h, l in aristas], name=nombre)


@pytest.fixture
def circulo():
    """Un lazo de longitud 2 en el vértice v; la antípoda es e@1"""
    return _curva("circulo", ["v"], [("e", "v", "v", 2)])


@pytest.fixture
def theta_unitaria():
    return _curva("theta", ["u", "v"], [("e1", "u", "v", 1), ("e2", "u", "v", 1), ("e3", "u", "v", 1)])


@pytest.fixture
def theta_longitudes():
    return _curva(
        "theta-longitudes",
        ["u", "v"],
        [("e1", "u", "v", 1), ("e2", "u", "v", Fraction(3, 2)), ("e3", "u", "v", Fraction(5, 3))],
    )


@pytest.fixture
def pesas():
    return _curva("pesas", ["a", "b"], [("la", "a", "a", 1), ("puente", "a", "b", 1), ("lb", "b", "b", 1)])


@pytest.fixture
def k4():
    vertices = ["a", "b", "c", "d"]
    aristas = [
        ("ab", "a", "b", 1), ("ac", "a", "c", 1), ("ad", "a", "d", 1),
        ("bc", "b", "c", 1), ("bd", "b", "d", 1), ("cd", "c", "d", 1),
    ]
    return _curva("k4", vertices, aristas)


@pytest.fixture
def arbol():
    return _curva("arbol", ["a", "b", "c"], [("ab", "a", "b", 1), ("bc", "b", "c", Fraction(1, 2))])


@pytest.fixture
def curvas(circulo, theta_unitaria, theta_longitudes, pesas, k4):
    return [circulo, theta_unitaria, theta_longitudes, pesas, k4]


@pytest.fixture
def aleatorias():
    rng = random.Random(7)
    return [aleatorio.grafo(rng, genero_maximo=3, vertices_maximos=4) for _ in range(5)]


@pytest.fixture
def antipoda(circulo):
    return circulo.punto_en_arista("e", 1)


@pytest.fixture
def punto_v():
    return Point(vertex="v")


def curva_json(grafo) -> str:
    """Serializa un MetricGraph al formato de archivo de curva"""
    return json.dumps(
        {
            "name": grafo.name,
            "vertices": [{"id": v} for v in grafo.vertices],
            "edges": [
                {"id": e.id, "tail": e.tail, "head": e.head, "length": str(e.length)} for e in grafo.edges
            ],
        }
    )


@pytest.fixture
def archivo_curva(tmp_path):
    def escribir(grafo, nombre="curva.json"):
        ruta = tmp_path / nombre
        ruta.write_text(curva_json(grafo), encoding="utf-8")
        return str(ruta)

    return escribir
