import json
import random
from fractions import Fraction

import pytest

from tropitheta.errores import CurvaInvalida
from tropitheta.modelos.curva import Point
from tropitheta.modelos.divisor import Divisor
from tropitheta.servicios.caracteristicas import theta_characteristics
from tropitheta.servicios.curva import (
    canonical_divisor,
    construir_grafo,
    genus,
    load_curve,
    load_divisor,
    subdivide_at,
)
from tropitheta.servicios.homologia import forma_de
from tropitheta.servicios.theta import pullback_divisor

THETA = {
    "name": "theta",
    "vertices": [{"id": "u"}, {"id": "v"}],
    "edges": [
        {"id": "e1", "tail": "u", "head": "v", "length": "1"},
        {"id": "e2", "tail": "u", "head": "v", "length": "3/2"},
        {"id": "e3", "tail": "u", "head": "v", "length": 2},
    ],
}


def _con_arista(**cambios):
    datos = json.loads(json.dumps(THETA))
    datos["edges"][0].update(cambios)
    return json.dumps(datos)


def test_load_curve_valida():
    grafo = load_curve(json.dumps(THETA))
    assert grafo.name == "theta"
    assert grafo.vertices == ("u", "v")
    assert [e.length for e in grafo.edges] == [1, Fraction(3, 2), 2]
    assert grafo.basepoint == Point(vertex="u")
    assert genus(grafo) == 2


def test_load_curve_acepta_bytes_y_punto_base_interior():
    datos = dict(THETA, basepoint={"edge": "e2", "offset": "1/2"})
    grafo = load_curve(json.dumps(datos).encode("utf-8"))
    assert grafo.basepoint == Point(edge="e2", offset=Fraction(1, 2))
    assert grafo.vertice_base == "u"


@pytest.mark.parametrize("longitud", ["0", "-1", 0, "-3/2"])
def test_longitud_no_positiva(longitud):
    with pytest.raises(CurvaInvalida, match="no positiva"):
        load_curve(_con_arista(length=longitud))


@pytest.mark.parametrize("longitud", ["inf", "infinity", "∞", None])
def test_longitud_infinita(longitud):
    with pytest.raises(CurvaInvalida, match="infinita"):
        load_curve(_con_arista(length=longitud))


def test_offset_infinito_es_error_de_punto(theta_unitaria):
    with pytest.raises(CurvaInvalida, match="offset infinito") as error:
        load_curve(json.dumps(dict(THETA, basepoint={"edge": "e1", "offset": "inf"})))
    assert "longitud" not in str(error.value)
    with pytest.raises(CurvaInvalida, match="offset infinito"):
        load_divisor(theta_unitaria, json.dumps({"divisor": [{"point": {"edge": "e1", "offset": "∞"}, "coeff": 1}]}))


@pytest.mark.parametrize(
    "datos",
    [
        "{no es json",
        json.dumps({"vertices": []}),
        _con_arista(id="e2"),
        _con_arista(head="w"),
        _con_arista(length="1/0"),
        json.dumps(dict(THETA, basepoint={"edge": "e1"})),
        json.dumps(dict(THETA, basepoint={"edge": "e1", "offset": "5"})),
    ],
)
def test_curvas_invalidas(datos):
    with pytest.raises(CurvaInvalida):
        load_curve(datos)


def test_grafo_desconectado():
    datos = dict(THETA, vertices=[{"id": "u"}, {"id": "v"}, {"id": "w"}])
    with pytest.raises(CurvaInvalida, match="conexo"):
        load_curve(json.dumps(datos))


def test_puntos_canonicos(theta_unitaria):
    assert theta_unitaria.punto_en_arista("e1", 0) == Point(vertex="u")
    assert theta_unitaria.punto_en_arista("e1", 1) == Point(vertex="v")
    assert theta_unitaria.punto_en_arista("e1", Fraction(1, 3)) == Point(edge="e1", offset=Fraction(1, 3))
    with pytest.raises(CurvaInvalida):
        theta_unitaria.punto_en_arista("e1", 2)
    with pytest.raises(CurvaInvalida):
        theta_unitaria.punto_vertice("x")
    with pytest.raises(CurvaInvalida):
        theta_unitaria.validar_punto(Point(edge="e1", offset=Fraction(0)))


def test_divisor_canonico(k4, theta_unitaria, circulo, arbol):
    assert canonical_divisor(k4) == Divisor((Point(vertex=v), 1) for v in "abcd")
    assert canonical_divisor(theta_unitaria) == Divisor([(Point(vertex="u"), 1), (Point(vertex="v"), 1)])
    assert not canonical_divisor(circulo)
    assert canonical_divisor(arbol).grado == -2
    for grafo in (k4, theta_unitaria, circulo, arbol):
        assert canonical_divisor(grafo).grado == 2 * genus(grafo) - 2


def test_load_divisor(theta_unitaria):
    datos = json.dumps(
        {
            "divisor": [
                {"point": {"vertex": "u"}, "coeff": 2},
                {"point": {"edge": "e2", "offset": "1/2"}, "coeff": -1},
                {"point": {"edge": "e3", "offset": "1"}, "coeff": 1},
            ]
        }
    )
    d = load_divisor(theta_unitaria, datos)
    assert d.grado == 2
    assert d.coeficiente(Point(vertex="v")) == 1
    assert d.coeficiente(Point(edge="e2", offset=Fraction(1, 2))) == -1


def test_load_divisor_punto_fuera(theta_unitaria):
    datos = json.dumps({"divisor": [{"point": {"edge": "e9", "offset": "1/2"}, "coeff": 1}]})
    with pytest.raises(CurvaInvalida):
        load_divisor(theta_unitaria, datos)


def test_subdivide_at(theta_unitaria):
    corte = theta_unitaria.punto_en_arista("e1", Fraction(1, 2))
    refinado, refinamiento = subdivide_at(theta_unitaria, [corte, Point(vertex="u")])
    assert len(refinado.vertices) == 3
    assert [e.id for e in refinado.edges] == ["e1.0", "e1.1", "e2", "e3"]
    assert genus(refinado) == genus(theta_unitaria)
    nuevo = refinamiento.punto(corte)
    assert nuevo == Point(vertex="e1@1/2")
    assert refinamiento.punto_original(nuevo) == corte
    interior = theta_unitaria.punto_en_arista("e1", Fraction(3, 4))
    assert refinamiento.punto(interior) == Point(edge="e1.1", offset=Fraction(1, 4))
    assert refinamiento.divisor(canonical_divisor(theta_unitaria)) == canonical_divisor(refinado)


def test_subdivide_sin_cortes_no_cambia(k4):
    refinado, _ = subdivide_at(k4, [Point(vertex="a")])
    assert refinado.edges == k4.edges


def _invertir(grafo, aristas):
    """Misma curva con las aristas dadas recorridas al revés"""
    invertido = construir_grafo(
        grafo.vertices,
        [(e.id, e.head, e.tail, e.length) if e.id in aristas else (e.id, e.tail, e.head, e.length) for e in grafo.edges],
        basepoint=grafo.basepoint,
        name=grafo.name,
    )

    def punto(p):
        if p.es_vertice or p.edge not in aristas:
            return p
        return invertido.punto_en_arista(p.edge, invertido.arista(p.edge).length - p.offset)

    def divisor(d):
        return Divisor((punto(p), c) for p, c in d.items())

    return invertido, divisor


def test_independiente_de_la_orientacion(curvas):
    rng = random.Random(29)
    for grafo in curvas:
        for _ in range(3):
            aristas = {e.id for e in grafo.edges if rng.random() < 0.5}
            invertido, traducir = _invertir(grafo, aristas)
            assert genus(invertido) == genus(grafo)
            assert traducir(canonical_divisor(grafo)) == canonical_divisor(invertido)
            forma, forma_invertida = forma_de(grafo), forma_de(invertido)
            assert traducir(pullback_divisor(forma.cero(), grafo, forma)) == pullback_divisor(
                forma_invertida.cero(), invertido, forma_invertida
            )
            original = theta_characteristics(grafo, forma)
            tabla = theta_characteristics(invertido, forma_invertida)
            for nueva, vieja in zip(tabla.filas, original.filas):
                assert nueva.bits == vieja.bits
                assert nueva.divisor == traducir(vieja.divisor)
                assert nueva.efectiva == vieja.efectiva
