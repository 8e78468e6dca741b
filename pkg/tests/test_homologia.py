import random
from fractions import Fraction

import pytest
import sympy

from tropitheta import algebra
from tropitheta.errores import CurvaInvalida
from tropitheta.modelos.jacobiano import Cycle
from tropitheta.servicios.homologia import (
    arbol_generador,
    ciclos_simples,
    cycle_basis,
    es_ciclo,
    forma_de,
    gram_matrix,
    q_pair,
)


def test_gram_theta_unitaria(theta_unitaria):
    forma = forma_de(theta_unitaria)
    assert forma.basis == (Cycle((-1, 1, 0)), Cycle((-1, 0, 1)))
    assert forma.gram == ((2, 1), (1, 2))


def test_gram_theta_con_arbol_e2(theta_unitaria):
    forma = forma_de(theta_unitaria, arbol_generador(theta_unitaria, ["e2"]))
    assert forma.basis == (Cycle((1, -1, 0)), Cycle((0, -1, 1)))
    assert forma.gram == ((2, 1), (1, 2))


def test_gram_theta_longitudes(theta_longitudes):
    assert forma_de(theta_longitudes).gram == (
        (Fraction(5, 2), Fraction(1)),
        (Fraction(1), Fraction(8, 3)),
    )


def test_gram_circulo_y_pesas(circulo, pesas):
    assert forma_de(circulo).gram == ((2,),)
    assert forma_de(pesas).gram == ((1, 0), (0, 1))


def test_base_son_ciclos(curvas, aleatorias):
    for grafo in curvas + aleatorias:
        forma = forma_de(grafo)
        assert forma.genero == len(grafo.edges) - len(grafo.vertices) + 1
        assert all(es_ciclo(grafo, c.coeficientes) and c.es_simple for c in forma.basis)
        assert algebra.es_simetrica(forma.gram)
        assert algebra.es_definida_positiva(forma.gram)
        for i, c in enumerate(forma.basis):
            assert forma.gram[i][i] == c.longitud(grafo)


def test_arbol_sin_ciclos(arbol):
    assert cycle_basis(arbol) == []
    assert forma_de(arbol).genero == 0


def test_ciclos_simples_theta(theta_unitaria, k4):
    ciclos = ciclos_simples(theta_unitaria)
    assert len(ciclos) == 3
    assert all(c.longitud(theta_unitaria) == 2 for c in ciclos)
    # 4 triángulos y 3 cuadrados
    assert sorted(c.longitud(k4) for c in ciclos_simples(k4)) == [3] * 4 + [4] * 3
    for c in ciclos_simples(k4):
        assert q_pair(c.coeficientes, c.coeficientes, k4) == c.longitud(k4)


def test_ciclos_simples_con_lazos(pesas):
    assert sorted(c.coeficientes for c in ciclos_simples(pesas)) == [(0, 0, 1), (1, 0, 0)]


def test_arbol_generador_invalido(theta_unitaria, k4):
    with pytest.raises(CurvaInvalida):
        arbol_generador(theta_unitaria, ["e1", "e2"])
    with pytest.raises(CurvaInvalida):
        arbol_generador(theta_unitaria, ["e9"])
    with pytest.raises(CurvaInvalida):
        arbol_generador(k4, ["ab", "ab", "cd"])


def test_gram_matrix_base_degenerada(theta_unitaria):
    ciclo = Cycle((-1, 1, 0))
    with pytest.raises(CurvaInvalida):
        gram_matrix([ciclo, ciclo], theta_unitaria)


def test_q_pair_dimension(theta_unitaria):
    with pytest.raises(ValueError):
        q_pair((1, 0), (1, 0, 0), theta_unitaria)


def _unimodular(rng, g, pasos=12, cota=3):
    """Producto de operaciones elementales enteras con entradas en [-cota, cota]"""
    m = sympy.eye(g)
    for _ in range(pasos):
        e = sympy.eye(g)
        if g == 1:
            e[0, 0] = -1
        else:
            i, j = rng.sample(range(g), 2)
            e[i, j] = rng.choice((-1, 1))
        candidata = m * e
        if all(abs(x) <= cota for x in candidata):
            m = candidata
    return m


def test_gram_covariante_por_cambio_de_base(curvas, aleatorias):
    rng = random.Random(11)
    for grafo in curvas + aleatorias:
        forma = forma_de(grafo)
        g = forma.genero
        if g == 0:
            continue
        for _ in range(3):
            m = _unimodular(rng, g)
            assert abs(m.det()) == 1
            nueva = []
            for j in range(g):
                ciclo = Cycle((0,) * len(grafo.edges))
                for i, b in enumerate(forma.basis):
                    ciclo = ciclo + int(m[i, j]) * b
                nueva.append(ciclo)
            esperada = m.T * algebra.a_sympy(forma.gram) * m
            assert gram_matrix(nueva, grafo).gram == algebra.desde_sympy(esperada)
