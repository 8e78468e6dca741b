from fractions import Fraction

import pytest
import sympy

from tropitheta import algebra


def test_ldl_reconstruye():
    m = algebra.matriz([[Fraction(5, 2), 1, 0], [1, Fraction(8, 3), 1], [0, 1, 3]])
    L, D = algebra.ldl(m)
    assert all(isinstance(x, Fraction) for fila in L for x in fila)
    reconstruida = algebra.a_sympy(L) * sympy.diag(*algebra.a_sympy([D])) * algebra.a_sympy(L).T
    assert algebra.desde_sympy(reconstruida) == m
    assert all(L[i][i] == 1 for i in range(3))
    assert D[0] == Fraction(5, 2)


def test_ldl_rechaza_forma_indefinida():
    with pytest.raises(ValueError):
        algebra.ldl(((1, 2), (2, 1)))


def test_definida_positiva():
    assert algebra.es_definida_positiva(((2, 1), (1, 2)))
    assert not algebra.es_definida_positiva(((1, 2), (2, 1)))
    assert not algebra.es_definida_positiva(((1, 1), (1, 1)))
    assert not algebra.es_definida_positiva(((1, 0), (1, 1)))


def test_inversa():
    m = ((Fraction(2), Fraction(1)), (Fraction(1), Fraction(2)))
    inversa = algebra.inversa(m)
    assert inversa == ((Fraction(2, 3), Fraction(-1, 3)), (Fraction(-1, 3), Fraction(2, 3)))
    assert algebra.mat_vec(m, algebra.mat_vec(inversa, (1, 5))) == (1, 5)
    with pytest.raises(ValueError):
        algebra.inversa(((1, 1), (1, 1)))


def test_matriz_vacia():
    assert algebra.inversa(()) == ()
    assert algebra.ldl(()) == ((), ())
    assert algebra.es_definida_positiva(())


@pytest.mark.parametrize(
    "valor, esperado",
    [(Fraction(1, 2), 0), (Fraction(-1, 2), -1), (Fraction(3, 2), 1), (Fraction(7, 5), 1), (Fraction(-8, 5), -2)],
)
def test_redondeo_mitad_abajo(valor, esperado):
    assert algebra.redondeo_mitad_abajo(valor) == esperado
