"""
Álgebra lineal racional exacta.

Las operaciones matriciales (LDLᵀ, inversa, definición positiva) se
delegan en sympy sobre racionales; el resto del paquete trabaja con tuplas
de Fraction, que es lo que recorren los bucles de enumeración.
"""
import math
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

import sympy

Vector = Tuple[Fraction, ...]
Matriz = Tuple[Vector, ...]


def vector(valores: Iterable) -> Vector:
    return tuple(Fraction(v) for v in valores)


def matriz(filas: Iterable[Iterable]) -> Matriz:
    return tuple(vector(fila) for fila in filas)


def a_sympy(m: Sequence[Sequence]) -> sympy.Matrix:
    """Matriz de sympy con entradas Rational exactas"""
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in fila] for fila in m])


def desde_sympy(m: sympy.Matrix) -> Matriz:
    return tuple(
        tuple(Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in m.row(i))
        for i in range(m.rows)
    )


def producto_punto(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"Dimensiones incompatibles: {len(a)} y {len(b)}")
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


def mat_vec(m: Matriz, v: Sequence) -> Vector:
    return tuple(producto_punto(fila, v) for fila in m)


def suma(a: Sequence, b: Sequence) -> Vector:
    return tuple(Fraction(x) + y for x, y in zip(a, b))


def resta(a: Sequence, b: Sequence) -> Vector:
    return tuple(Fraction(x) - y for x, y in zip(a, b))


def escalar(c, v: Sequence) -> Vector:
    return tuple(Fraction(c) * x for x in v)


def es_simetrica(m: Sequence[Sequence]) -> bool:
    return a_sympy(m).is_symmetric()


def es_definida_positiva(m: Sequence[Sequence]) -> bool:
    if not m:
        return True
    s = a_sympy(m)
    return bool(s.is_symmetric() and s.is_positive_definite)


def ldl(m: Sequence[Sequence]) -> Tuple[Matriz, Vector]:
    """
    Descomposición m = L·diag(D)·Lᵀ con L triangular inferior unitaria.

    Args:
        m: matriz simétrica definida positiva

    Returns:
        (L, D): factor triangular y pivotes

    Raises:
        ValueError: si la matriz no es simétrica definida positiva
    """
    if not m:
        return (), ()
    if not es_definida_positiva(m):
        raise ValueError("La forma no es simétrica definida positiva")
    L, D = a_sympy(m).LDLdecomposition()
    d = desde_sympy(D)
    return desde_sympy(L), tuple(d[i][i] for i in range(len(d)))


def inversa(m: Sequence[Sequence]) -> Matriz:
    """Inversa exacta; ValueError si la matriz es singular"""
    if not m:
        return ()
    s = a_sympy(m)
    if s.det() == 0:
        raise ValueError("Matriz singular")
    return desde_sympy(s.inv())


def redondeo_mitad_abajo(r: Fraction) -> int:
    """Entero más cercano; los empates x.5 van hacia abajo"""
    return math.ceil(Fraction(r) - Fraction(1, 2))


def es_entero(r: Fraction) -> bool:
    return Fraction(r).denominator == 1
