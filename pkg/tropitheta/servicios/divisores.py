import logging
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

from tropitheta import algebra
from tropitheta.algebra import Vector
from tropitheta.config import obtener_configuracion
from tropitheta.errores import LimiteExcedido
from tropitheta.modelos.curva import MetricGraph, Point
from tropitheta.modelos.divisor import Divisor, PLFunction
from tropitheta.modelos.jacobiano import GramForm, JacPoint
from tropitheta.servicios.homologia import (
    ArbolGenerador,
    arbol_generador,
    caminos_desde_raiz,
    forma_de,
)

logger = logging.getLogger(__name__)


def principal_divisor(f: PLFunction, grafo: MetricGraph) -> Divisor:
    """
    Divisor principal (f): en cada punto, la suma de las pendientes salientes.

    En un vértice se suma la pendiente del primer tramo por cada extremo tail
    y menos la del último tramo por cada extremo head; en un quiebre interior,
    la pendiente siguiente menos la anterior.

    Args:
        f: función PL validada sobre `grafo`
        grafo: curva

    Returns:
        Divisor: de grado 0, soportado en vértices y quiebres
    """
    coeficientes: Dict[Point, int] = {}
    for e in grafo.edges:
        segmentos = f.segmentos(e.id)
        tail, head = grafo.punto_vertice(e.tail), grafo.punto_vertice(e.head)
        coeficientes[tail] = coeficientes.get(tail, 0) + segmentos[0][2]
        coeficientes[head] = coeficientes.get(head, 0) - segmentos[-1][2]
        for (_, fin, antes), (_, _, despues) in zip(segmentos, segmentos[1:]):
            coeficientes[grafo.punto_en_arista(e.id, fin)] = despues - antes
    return Divisor(coeficientes)


class AbelJacobi:
    """
    Mapa de Abel-Jacobi μ con caminos fijados por un árbol generador.

    El camino a un punto interior es el camino del árbol hasta el tail de su
    arista más la fracción offset/longitud de la arista. `levantar` da las
    coordenadas del camino desde la raíz del árbol; μ resta las del punto base.
    """

    def __init__(
        self,
        grafo: MetricGraph,
        forma: Optional[GramForm] = None,
        arbol: Optional[ArbolGenerador] = None,
    ):
        self.grafo = grafo
        self.forma = forma or forma_de(grafo)
        self.arbol = arbol or arbol_generador(grafo)
        caminos = caminos_desde_raiz(grafo, self.arbol)
        self._vertices = {v: self._coordenadas(c) for v, c in caminos.items()}
        self._base = self.levantar(grafo.basepoint)

    def _coordenadas(self, cadena) -> Vector:
        longitudes = [e.length for e in self.grafo.edges]
        return tuple(
            sum(
                (Fraction(c) * l * ell for c, l, ell in zip(cadena, ciclo.coeficientes, longitudes)),
                Fraction(0),
            )
            for ciclo in self.forma.basis
        )

    def direccion(self, edge_id: str) -> Vector:
        """Derivada de μ a lo largo de la arista: s_e,i = λ_i(e)"""
        i = self.grafo.indice_arista(edge_id)
        return tuple(Fraction(ciclo.coeficientes[i]) for ciclo in self.forma.basis)

    def levantar(self, p: Point) -> Vector:
        if p.es_vertice:
            return self._vertices[self.grafo.punto_vertice(p.vertex).vertex]
        arista = self.grafo.arista(p.edge)
        return algebra.suma(
            self._vertices[arista.tail], algebra.escalar(p.offset, self.direccion(p.edge))
        )

    def punto(self, p: Point) -> Vector:
        """Coordenadas de μ(p) = ∫ desde p0 hasta p"""
        return algebra.resta(self.levantar(p), self._base)

    def __call__(self, d: Divisor) -> JacPoint:
        total = tuple(Fraction(0) for _ in self.forma.basis)
        for p, c in d.items():
            total = algebra.suma(total, algebra.escalar(c, self.punto(p)))
        return JacPoint(total, self.forma)


def abel_jacobi(
    d: Divisor,
    grafo: MetricGraph,
    forma: Optional[GramForm] = None,
    arbol: Optional[ArbolGenerador] = None,
) -> JacPoint:
    """μ(D) = Σ c·∫_{p0}^{p} en las coordenadas de la base de ciclos"""
    return AbelJacobi(grafo, forma, arbol)(d)


def jac_equal(x: JacPoint, y: JacPoint) -> bool:
    """Igualdad en J(C): G⁻¹(x - y) entero"""
    if x.form.gram != y.form.gram:
        raise ValueError("Los puntos pertenecen a Jacobianos distintos")
    return x == y


def lin_equiv(
    d1: Divisor,
    d2: Divisor,
    grafo: MetricGraph,
    forma: Optional[GramForm] = None,
) -> bool:
    """Equivalencia lineal por Abel-Jacobi: mismo grado e imagen nula de D1 - D2"""
    if d1.grado != d2.grado:
        return False
    forma = forma or forma_de(grafo)
    return abel_jacobi(d1 - d2, grafo, forma) == forma.cero()


def verificar_genero(g: int, tope: Optional[int] = None) -> None:
    """
    Raises:
        LimiteExcedido: si enumerar 2^g elementos supera el tope configurado
    """
    tope = obtener_configuracion().genero_maximo if tope is None else tope
    if g > tope:
        raise LimiteExcedido(f"Género {g} supera el tope de enumeración {tope}", requerido=g)


def two_torsion(
    grafo: MetricGraph,
    forma: Optional[GramForm] = None,
    tope: Optional[int] = None,
) -> List[Tuple[Tuple[int, ...], JacPoint]]:
    """
    Los 2^g puntos de dos-torsión ½G·n con n ∈ {0,1}^g, en orden lexicográfico de n.

    Raises:
        LimiteExcedido: si g supera el tope de enumeración
    """
    forma = forma or forma_de(grafo)
    verificar_genero(forma.genero, tope)
    return [
        (bits, medio_gamma(bits, forma))
        for bits in product((0, 1), repeat=forma.genero)
    ]


def medio_gamma(bits, forma: GramForm) -> JacPoint:
    return JacPoint(algebra.escalar(Fraction(1, 2), forma.punto_reticulo(bits)), forma)
