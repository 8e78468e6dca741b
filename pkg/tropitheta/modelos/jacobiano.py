from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Tuple

from tropitheta.modelos.curva import MetricGraph
from tropitheta import algebra
from tropitheta.algebra import Matriz, Vector


@dataclass(frozen=True)
class Cycle:
    """
    Ciclo entero en coordenadas de arista (orden de archivo del grafo).

    El signo de cada coeficiente es relativo a la orientación tail -> head.
    """
    coeficientes: Tuple[int, ...]

    @property
    def es_simple(self) -> bool:
        return all(c in (-1, 0, 1) for c in self.coeficientes)

    def soporte(self, grafo: MetricGraph) -> Tuple[str, ...]:
        return tuple(e.id for e, c in zip(grafo.edges, self.coeficientes) if c != 0)

    def longitud(self, grafo: MetricGraph) -> Fraction:
        return sum((abs(c) * e.length for e, c in zip(grafo.edges, self.coeficientes)), Fraction(0))

    def __add__(self, otro: "Cycle") -> "Cycle":
        return Cycle(tuple(a + b for a, b in zip(self.coeficientes, otro.coeficientes)))

    def __mul__(self, k: int) -> "Cycle":
        return Cycle(tuple(k * c for c in self.coeficientes))

    __rmul__ = __mul__


@dataclass(frozen=True)
class GramForm:
    """
    Base de ciclos y matriz de Gram G_ij = Q(λ_i, λ_j).

    El retículo Λ se identifica con G·Z^g dentro de las coordenadas del
    Jacobiano (pareo con las formas duales de la base).
    """
    basis: Tuple[Cycle, ...]
    gram: Matriz

    @property
    def genero(self) -> int:
        return len(self.basis)

    @cached_property
    def inversa(self) -> Matriz:
        return algebra.inversa(self.gram)

    @cached_property
    def factorizacion(self) -> Tuple[Matriz, Vector]:
        return algebra.ldl(self.gram)

    def punto_reticulo(self, n) -> Vector:
        return algebra.mat_vec(self.gram, n)

    def coordenadas_reticulo(self, x) -> Vector:
        """Resuelve G·y = x exactamente"""
        return algebra.mat_vec(self.inversa, x)

    def en_reticulo(self, x) -> bool:
        return all(algebra.es_entero(y) for y in self.coordenadas_reticulo(x))

    def cero(self) -> "JacPoint":
        return JacPoint(tuple(Fraction(0) for _ in self.basis), self)


@dataclass(frozen=True, eq=False)
class JacPoint:
    """
    Punto de J(C) = R^g / G·Z^g dado por un representante racional.

    La igualdad es la del cociente: dos puntos son iguales si su diferencia
    está en el retículo. `canonico` da el representante único usado para
    imprimir y para el hash.
    """
    coords: Vector
    form: GramForm

    def __post_init__(self):
        if len(self.coords) != self.form.genero:
            raise ValueError(
                f"Dimensión {len(self.coords)} incompatible con género {self.form.genero}"
            )

    @cached_property
    def canonico(self) -> Vector:
        y = self.form.coordenadas_reticulo(self.coords)
        n = tuple(algebra.redondeo_mitad_abajo(c) for c in y)
        return algebra.resta(self.coords, self.form.punto_reticulo(n))

    def __add__(self, otro: "JacPoint") -> "JacPoint":
        return JacPoint(algebra.suma(self.coords, otro.coords), self.form)

    def __sub__(self, otro: "JacPoint") -> "JacPoint":
        return JacPoint(algebra.resta(self.coords, otro.coords), self.form)

    def __neg__(self) -> "JacPoint":
        return JacPoint(algebra.escalar(-1, self.coords), self.form)

    def __mul__(self, k: int) -> "JacPoint":
        return JacPoint(algebra.escalar(k, self.coords), self.form)

    __rmul__ = __mul__

    def __eq__(self, otro) -> bool:
        if not isinstance(otro, JacPoint):
            return NotImplemented
        return self.form.en_reticulo(algebra.resta(self.coords, otro.coords))

    def __hash__(self) -> int:
        return hash(self.canonico)


@dataclass(frozen=True)
class ThetaValue:
    """Valor de Θ y el conjunto completo (ordenado) de vectores n que lo alcanzan"""
    value: Fraction
    argmax: Tuple[Tuple[int, ...], ...]

    @property
    def en_esquina(self) -> bool:
        return len(self.argmax) >= 2


@dataclass(frozen=True)
class KappaClass:
    """Constante de Riemann κ y K_0 = -κ, con el chequeo 2·K_0 = μ(K)"""
    kappa: JacPoint
    k0: JacPoint
    doble_k0_es_canonico: bool
