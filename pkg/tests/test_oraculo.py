import random
from fractions import Fraction
from itertools import product

import pytest

from tropitheta.errores import LimiteExcedido
from tropitheta.modelos.curva import Point
from tropitheta.modelos.divisor import Divisor
from tropitheta.servicios.caracteristicas import theta_characteristics
from tropitheta.servicios.oraculo import (
    cumple_dhar,
    dhar_reduce,
    disparar,
    divisor_metrico,
    escala_unitaria,
    is_effective_oracle,
    reducir,
    to_unit_model,
)
from tropitheta.servicios.orientacion import moderator


def test_modelo_unitario_circulo(circulo, antipoda, punto_v):
    modelo, fichas = to_unit_model(circulo, Divisor([(antipoda, 1), (punto_v, -1)]), punto_v)
    assert modelo.escala == 1
    assert modelo.etiquetas == ("v", "e#1")
    assert modelo.aristas == ((0, 1), (1, 0))
    assert fichas == (-1, 1)
    assert modelo.punto_de_indice[1] == antipoda


def test_escala_con_denominadores(theta_longitudes):
    p = theta_longitudes.punto_en_arista("e1", Fraction(1, 4))
    assert escala_unitaria(theta_longitudes) == 6
    assert escala_unitaria(theta_longitudes, [p]) == 12
    modelo, _ = to_unit_model(theta_longitudes, Divisor([(p, 1)]))
    assert len(modelo.aristas) == 12 + 18 + 20


def test_modelo_unitario_tope(theta_longitudes):
    with pytest.raises(LimiteExcedido) as error:
        to_unit_model(theta_longitudes, Divisor(), tope=10)
    assert error.value.requerido == 6


def test_k0_del_circulo_no_es_efectivo(circulo, antipoda, punto_v):
    d = Divisor([(antipoda, 1), (punto_v, -1)])
    reduccion = reducir(circulo, d, punto_v)
    assert reduccion.reducido == (-1, 1)
    assert not reduccion.efectiva
    assert not is_effective_oracle(circulo, d, punto_v)
    assert is_effective_oracle(circulo, Divisor(), punto_v)
    assert not is_effective_oracle(circulo, Divisor([(punto_v, -1)]), punto_v)


def test_reduccion_mueve_fichas_a_la_base(theta_unitaria):
    u, v = Point(vertex="u"), Point(vertex="v")
    reduccion = reducir(theta_unitaria, Divisor([(v, 3), (u, -1)]), u)
    assert divisor_metrico(reduccion.modelo, reduccion.reducido) == Divisor([(u, 2)])
    assert reduccion.efectiva


def test_reduccion_idempotente_e_invariante(k4, theta_longitudes):
    rng = random.Random(37)
    for grafo in (k4, theta_longitudes):
        q = grafo.basepoint
        d = moderator(grafo, [grafo.basepoint])
        modelo, fichas = to_unit_model(grafo, d, q)
        base = modelo.puntos[q]
        reducido = dhar_reduce(modelo, fichas, base)
        assert reducido == fichas
        assert dhar_reduce(modelo, reducido, base) == reducido
        for _ in range(3):
            disparado = list(fichas)
            disparar(modelo, disparado, {i for i in range(modelo.n) if rng.random() < 0.5}, rng.randint(1, 3))
            assert sum(disparado) == sum(fichas)
            assert dhar_reduce(modelo, disparado, base) == reducido


def test_criterio_de_dhar(k4, circulo, punto_v):
    d = Divisor([(Point(vertex="b"), 2), (Point(vertex="c"), -1), (Point(vertex="d"), 1)])
    modelo, fichas = to_unit_model(k4, d, Point(vertex="a"))
    reducido = dhar_reduce(modelo, fichas, 0)
    assert cumple_dhar(modelo, reducido, 0)
    assert sum(reducido) == d.grado
    # con dos fichas, v puede disparar hacia la antípoda
    modelo, _ = to_unit_model(circulo, Divisor(), punto_v)
    assert not cumple_dhar(modelo, (2, 0), 1)
    assert cumple_dhar(modelo, (1, 0), 1)
    assert cumple_dhar(modelo, (0, 1), 0)


def test_oraculo_coincide_con_theta(curvas, aleatorias):
    for grafo in curvas + aleatorias:
        tabla = theta_characteristics(grafo)
        for fila in tabla.filas:
            assert is_effective_oracle(grafo, fila.divisor, grafo.basepoint) == fila.efectiva


def test_modelo_unitario_es_multigrafo(theta_unitaria, pesas):
    modelo, _ = to_unit_model(theta_unitaria, Divisor())
    assert modelo.grafo.number_of_edges(0, 1) == 3
    assert modelo.grado(0) == modelo.grado(1) == 3
    assert sorted(modelo.vecinos[0]) == [1, 1, 1]
    # los lazos de longitud 1 no entran en el multigrafo
    modelo, _ = to_unit_model(pesas, Divisor())
    assert modelo.n == 2
    assert modelo.grado(0) == 1


@pytest.mark.parametrize(
    "nombre, base, lejano",
    [("circulo", "v", ("e", 1)), ("theta_unitaria", "u", ("e1", 1)), ("k4", "a", ("cd", 1))],
)
def test_toda_secuencia_de_disparos_reduce_igual(nombre, base, lejano, request):
    grafo = request.getfixturevalue(nombre)
    q = Point(vertex=base)
    d = Divisor([(q, 2), (grafo.punto_en_arista(*lejano), -2)])
    modelo, fichas = to_unit_model(grafo, d, q)
    indice = modelo.puntos[q]
    esperado = dhar_reduce(modelo, fichas, indice)
    for profundidad in range(5):
        for secuencia in product(range(modelo.n), repeat=profundidad):
            disparado = list(fichas)
            for v in secuencia:
                disparar(modelo, disparado, {v}, 1)
            assert dhar_reduce(modelo, disparado, indice) == esperado
