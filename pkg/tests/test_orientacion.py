import random
from fractions import Fraction

import pytest

from tropitheta.errores import CurvaInvalida, InvarianteViolado
from tropitheta.modelos.curva import Point
from tropitheta.modelos.divisor import Divisor, PLFunction
from tropitheta.modelos.orientacion import GammaClass
from tropitheta.servicios import aleatorio
from tropitheta.servicios.curva import canonical_divisor
from tropitheta.servicios.divisores import AbelJacobi, lin_equiv, medio_gamma, principal_divisor
from tropitheta.servicios.homologia import arbol_generador, forma_de
from tropitheta.servicios.orientacion import (
    MAS,
    construir_moderador,
    char_divisor,
    descomponer_circuitos,
    distance_function,
    es_aciclica,
    gamma_support,
    gradient_orientation,
    midpoint_bookkeeping,
    moderator,
    moderator_difference_check,
    orientacion_caracteristica,
    orientacion_dot,
)
from tropitheta.servicios.theta import compute_kappa


def test_distancia_circulo(circulo, punto_v):
    d = distance_function(circulo, [punto_v])
    assert d.tramos["e"] == ((0, 0), (1, 1), (2, 0))


def test_distancia_fuente_interior(theta_unitaria):
    p = theta_unitaria.punto_en_arista("e1", Fraction(1, 4))
    d = distance_function(theta_unitaria, [p])
    assert d.valor(theta_unitaria, Point(vertex="u")) == Fraction(1, 4)
    assert d.valor(theta_unitaria, Point(vertex="v")) == Fraction(3, 4)
    assert d.valor_en("e1", Fraction(1, 4)) == 0
    # cresta de e2 donde se encuentran los frentes desde u y desde v
    assert d.valor_en("e2", Fraction(3, 4)) == 1


def test_fuente_repetida_es_un_conjunto(theta_unitaria, circulo, antipoda):
    p = theta_unitaria.punto_en_arista("e1", Fraction(1, 2))
    assert distance_function(theta_unitaria, [p, p]).tramos == distance_function(theta_unitaria, [p]).tramos
    assert moderator(theta_unitaria, [p, p]) == moderator(theta_unitaria, [p])
    assert moderator(circulo, [antipoda, antipoda, antipoda]) == moderator(circulo, [antipoda])
    assert moderator_difference_check(theta_unitaria, [p, p], [Point(vertex="u")])


def test_puntos_aleatorios_distintos(curvas):
    rng = random.Random(3)
    for grafo in curvas:
        for _ in range(20):
            puntos = aleatorio.puntos(grafo, rng, maximo=6)
            assert 1 <= len(puntos) <= 6
            assert len(set(puntos)) == len(puntos)


def test_distancia_sin_fuente(theta_unitaria):
    with pytest.raises(CurvaInvalida):
        distance_function(theta_unitaria)


def test_moderador_circulo(circulo, antipoda, punto_v):
    m = construir_moderador(circulo, [punto_v])
    assert m.menos == Divisor([(antipoda, 1), (punto_v, -1)])
    assert m.mas == Divisor([(antipoda, -1), (punto_v, 1)])
    assert moderator(circulo, [punto_v], MAS) == m.mas
    assert m.orientacion.crestas == ("e@1",)
    with pytest.raises(ValueError):
        m.signo("cero")


def test_moderador_theta(theta_unitaria):
    u, v = Point(vertex="u"), Point(vertex="v")
    assert moderator(theta_unitaria, [u]) == Divisor([(v, 2), (u, -1)])


def test_identidades_de_moderadores(curvas):
    rng = random.Random(13)
    for grafo in curvas:
        forma = forma_de(grafo)
        mu = AbelJacobi(grafo, forma)
        k0 = compute_kappa(grafo, forma).k0
        canonico = canonical_divisor(grafo)
        base = moderator(grafo, [grafo.basepoint])
        for _ in range(4):
            fuente = aleatorio.puntos(grafo, rng)
            m = construir_moderador(grafo, fuente)
            assert m.mas + m.menos == canonico
            assert m.mas - m.menos == principal_divisor(m.distancia, grafo)
            assert m.menos.grado == forma.genero - 1
            assert es_aciclica(m.orientacion)
            assert mu(m.menos) == k0
            assert lin_equiv(m.menos, base, grafo, forma)


def test_diferencia_de_moderadores(theta_longitudes, k4):
    rng = random.Random(29)
    for grafo in (theta_longitudes, k4):
        for _ in range(4):
            assert moderator_difference_check(grafo, aleatorio.puntos(grafo, rng), aleatorio.puntos(grafo, rng))


def test_gradiente_horizontal(theta_unitaria):
    with pytest.raises(InvarianteViolado):
        gradient_orientation(theta_unitaria, PLFunction.constante(theta_unitaria))


def test_soporte_gamma_theta(theta_unitaria):
    forma = forma_de(theta_unitaria, arbol_generador(theta_unitaria, ["e2"]))
    gamma = gamma_support((1, 0), forma.basis, theta_unitaria)
    assert gamma.support == ("e1", "e2")
    assert gamma.circuits == ((("e1", 1), ("e2", -1)),)
    assert gamma_support((1, 1), forma.basis, theta_unitaria).support == ("e1", "e3")
    with pytest.raises(CurvaInvalida):
        gamma_support((1,), forma.basis, theta_unitaria)


def test_caracteristica_theta(theta_unitaria):
    forma = forma_de(theta_unitaria, arbol_generador(theta_unitaria, ["e2"]))
    gamma = gamma_support((1, 0), forma.basis, theta_unitaria)
    medio = theta_unitaria.punto_en_arista("e3", Fraction(1, 2))
    assert char_divisor(gamma, theta_unitaria) == Divisor([(medio, 1)])
    m = orientacion_caracteristica(gamma, theta_unitaria)
    assert m.mas + m.menos == canonical_divisor(theta_unitaria)
    assert m.mas - m.menos == principal_divisor(m.distancia, theta_unitaria)


def test_caracteristica_gamma_trivial(theta_unitaria):
    with pytest.raises(CurvaInvalida):
        orientacion_caracteristica(GammaClass(bits=(0, 0), support=(), circuits=()), theta_unitaria)


def test_descomposicion_en_circuitos_no_cambia_el_divisor(k4):
    rng = random.Random(31)
    forma = forma_de(k4)
    for bits in [(1, 1, 0), (1, 1, 1), (0, 1, 1)]:
        gamma = gamma_support(bits, forma.basis, k4)
        esperado = char_divisor(gamma, k4)
        for _ in range(4):
            orden = list(gamma.support)
            rng.shuffle(orden)
            circuitos = descomponer_circuitos(k4, gamma.support, orden)
            circuitos = tuple(tuple((e, -s) for e, s in reversed(c)) for c in circuitos)
            otra = GammaClass(bits=bits, support=gamma.support, circuits=circuitos)
            assert char_divisor(otra, k4) == esperado


def test_contabilidad_de_medios(curvas):
    for grafo in curvas:
        forma = forma_de(grafo)
        mu = AbelJacobi(grafo, forma)
        for bits in [(1,) * forma.genero, (0,) * (forma.genero - 1) + (1,)]:
            gamma = gamma_support(bits, forma.basis, grafo)
            contabilidad = midpoint_bookkeeping(gamma, grafo)
            assert contabilidad.cumple
            assert len(contabilidad.medios) == len(gamma.support)
            assert mu(contabilidad.diferencia) == medio_gamma(bits, forma)


def test_dot(circulo, punto_v):
    dot = orientacion_dot(construir_moderador(circulo, [punto_v]).orientacion, "circulo")
    assert dot.startswith('digraph "circulo" {')
    assert '"e@1" [shape=doublecircle];' in dot
    assert '"v" -> "e@1" [label="e.0 (1)", dir=forward];' in dot
    assert '"e@1" -> "v" [label="e.1 (1)", dir=back];' in dot
