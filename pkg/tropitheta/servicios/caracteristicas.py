import logging
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Tuple

from tropitheta.errores import InvarianteViolado
from tropitheta.modelos.curva import MetricGraph
from tropitheta.modelos.divisor import Divisor
from tropitheta.modelos.jacobiano import GramForm, JacPoint, KappaClass
from tropitheta.modelos.orientacion import GammaClass, Orientation
from tropitheta.servicios.curva import canonical_divisor
from tropitheta.servicios.divisores import AbelJacobi, medio_gamma, verificar_genero
from tropitheta.servicios.homologia import ArbolGenerador, forma_de
from tropitheta.servicios.orientacion import (
    construir_moderador,
    gamma_support,
    orientacion_caracteristica,
)
from tropitheta.servicios.theta import compute_kappa, effective_class_test

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Caracteristica:
    """
    Fila de la tabla de características theta: K⁻_γ (o K⁻_{p0} para γ = 0),
    su clase μ(K⁻) y ½γ
    """
    bits: Tuple[int, ...]
    divisor: Divisor
    divisor_plus: Divisor
    clase: JacPoint
    medio_gamma: JacPoint
    efectiva: bool
    orientacion: Orientation
    gamma: Optional[GammaClass] = None


@dataclass(frozen=True)
class TablaCaracteristicas:
    filas: Tuple[Caracteristica, ...]
    kappa: KappaClass
    forma: GramForm

    @property
    def no_efectivas(self) -> List[Caracteristica]:
        return [f for f in self.filas if not f.efectiva]


def theta_characteristics(
    grafo: MetricGraph,
    forma: Optional[GramForm] = None,
    arbol: Optional[ArbolGenerador] = None,
    tope: Optional[int] = None,
) -> TablaCaracteristicas:
    """
    Enumera las 2^g características theta.

    La fila γ = 0 usa el moderador K⁻_{p0}; las demás K⁻_γ. Antes de
    devolver se comprueban: clase - clase_0 = ½γ, 2·clase = μ(K) y que la
    única fila no efectiva es γ = 0.

    Args:
        grafo: curva
        forma: base y matriz de Gram; por defecto la del árbol BFS
        arbol: árbol de los caminos de Abel-Jacobi
        tope: tope de género para la enumeración

    Returns:
        TablaCaracteristicas: filas en orden lexicográfico de bits, κ y la forma

    Raises:
        LimiteExcedido: si g supera el tope
        InvarianteViolado: si falla alguna de las comprobaciones
    """
    forma = forma or forma_de(grafo)
    verificar_genero(forma.genero, tope)
    mu = AbelJacobi(grafo, forma, arbol)
    kappa = compute_kappa(grafo, forma, arbol)
    mu_canonico = mu(canonical_divisor(grafo))

    filas = []
    for bits in product((0, 1), repeat=forma.genero):
        if any(bits):
            gamma = gamma_support(bits, forma.basis, grafo)
            moderador = orientacion_caracteristica(gamma, grafo)
        else:
            gamma = None
            moderador = construir_moderador(grafo, [grafo.basepoint])
        clase = mu(moderador.menos)
        filas.append(
            Caracteristica(
                bits=bits,
                divisor=moderador.menos,
                divisor_plus=moderador.mas,
                clase=clase,
                medio_gamma=medio_gamma(bits, forma),
                efectiva=effective_class_test(clase, kappa),
                orientacion=moderador.orientacion,
                gamma=gamma,
            )
        )

    cero = filas[0]
    for fila in filas:
        if fila.clase - cero.clase != fila.medio_gamma:
            raise InvarianteViolado("medio_gamma", f"K_γ - K_0 != ½γ para γ = {fila.bits}")
        if fila.clase * 2 != mu_canonico:
            raise InvarianteViolado("doble_es_canonico", f"2·K_γ != μ(K) para γ = {fila.bits}")
    no_efectivas = [f.bits for f in filas if not f.efectiva]
    if no_efectivas != [cero.bits]:
        raise InvarianteViolado("unica_no_efectiva", f"filas no efectivas: {no_efectivas}")

    logger.info("%d características theta, κ = %s", len(filas), kappa.kappa.canonico)
    return TablaCaracteristicas(filas=tuple(filas), kappa=kappa, forma=forma)
