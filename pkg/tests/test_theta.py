import random
from fractions import Fraction

import pytest

from tropitheta import algebra
from tropitheta.errores import CurvaInvalida, LimiteExcedido
from tropitheta.modelos.divisor import Divisor
from tropitheta.modelos.jacobiano import JacPoint
from tropitheta.servicios import aleatorio
from tropitheta.servicios.divisores import AbelJacobi, two_torsion
from tropitheta.servicios.homologia import forma_de
from tropitheta.servicios.theta import (
    compute_kappa,
    effective_class_test,
    jacobi_inversion_check,
    on_theta_divisor,
    pullback_divisor,
    theta_eval,
)


def test_theta_circulo(circulo):
    forma = forma_de(circulo)
    esquina = theta_eval([3], forma)
    assert esquina.value == 2
    assert esquina.argmax == ((1,), (2,))
    assert on_theta_divisor([1], forma)
    assert theta_eval([1], forma).value == 0
    liso = theta_eval([0], forma)
    assert liso.value == 0 and liso.argmax == ((0,),)
    assert theta_eval([Fraction(1, 2)], forma).value == 0


def test_theta_genero_cero(arbol):
    valor = theta_eval([], forma_de(arbol))
    assert valor.value == 0
    assert not valor.en_esquina


def test_theta_dimension_incorrecta(theta_unitaria):
    with pytest.raises(CurvaInvalida):
        theta_eval([1], forma_de(theta_unitaria))


def test_theta_tope_de_candidatos(k4):
    with pytest.raises(LimiteExcedido):
        theta_eval([Fraction(1, 3), 0, Fraction(2, 7)], forma_de(k4), tope=1)


def test_theta_par_cuasiperiodica_convexa(curvas):
    rng = random.Random(5)
    for grafo in curvas:
        forma = forma_de(grafo)
        g = forma.genero
        for _ in range(15):
            x = aleatorio.vector(rng, g)
            y = aleatorio.vector(rng, g)
            m = aleatorio.enteros(rng, g)
            valor = theta_eval(x, forma).value
            assert theta_eval(algebra.escalar(-1, x), forma).value == valor
            gm = forma.punto_reticulo(m)
            esperado = valor + algebra.producto_punto(m, x) + Fraction(1, 2) * algebra.producto_punto(m, gm)
            assert theta_eval(algebra.suma(x, gm), forma).value == esperado
            medio = algebra.escalar(Fraction(1, 2), algebra.suma(x, y))
            assert theta_eval(medio, forma).value <= (valor + theta_eval(y, forma).value) / 2


def test_dos_torsion_sobre_el_divisor(curvas):
    for grafo in curvas:
        forma = forma_de(grafo)
        for bits, x in two_torsion(grafo, forma):
            assert on_theta_divisor(x.coords, forma) == any(bits)


def test_kappa_circulo(circulo):
    kappa = compute_kappa(circulo)
    assert kappa.kappa.canonico == (1,)
    assert kappa.k0 == kappa.kappa
    assert kappa.doble_k0_es_canonico


def test_kappa_doble_es_canonico(curvas, aleatorias):
    for grafo in curvas + aleatorias:
        kappa = compute_kappa(grafo)
        assert kappa.doble_k0_es_canonico
        assert kappa.kappa == -kappa.k0


def test_pullback_en_cero_es_la_antipoda(circulo, antipoda):
    forma = forma_de(circulo)
    assert pullback_divisor(forma.cero(), circulo) == Divisor([(antipoda, 1)])


def test_inversion_de_jacobi(curvas):
    rng = random.Random(17)
    for grafo in curvas:
        forma = forma_de(grafo)
        kappa = compute_kappa(grafo, forma)
        mu = AbelJacobi(grafo, forma)
        for _ in range(6):
            lam = JacPoint(aleatorio.vector(rng, forma.genero), forma)
            d = pullback_divisor(lam, grafo, forma)
            assert d.grado == forma.genero
            assert d.es_efectivo
            assert mu(d) + kappa.kappa == lam
            assert jacobi_inversion_check(lam, grafo, kappa)


def test_pullback_invariante_por_reticulo(theta_longitudes):
    rng = random.Random(23)
    forma = forma_de(theta_longitudes)
    for _ in range(5):
        lam = JacPoint(aleatorio.vector(rng, 2), forma)
        trasladado = JacPoint(algebra.suma(lam.coords, forma.punto_reticulo(aleatorio.enteros(rng, 2))), forma)
        assert pullback_divisor(lam, theta_longitudes, forma) == pullback_divisor(trasladado, theta_longitudes, forma)


def test_test_de_efectividad(circulo, antipoda, punto_v):
    forma = forma_de(circulo)
    kappa = compute_kappa(circulo, forma)
    mu = AbelJacobi(circulo, forma)
    assert not effective_class_test(mu(Divisor([(antipoda, 1), (punto_v, -1)])), kappa)
    assert effective_class_test(mu(Divisor()), kappa)
