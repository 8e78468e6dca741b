from dataclasses import dataclass
from typing import Mapping, Tuple

from tropitheta.modelos.curva import MetricGraph
from tropitheta.modelos.refinamiento import Refinamiento

# (id de arista, sentido): +1 recorre tail -> head, -1 al revés
Paso = Tuple[str, int]


@dataclass(frozen=True)
class Orientation:
    """
    Orientación de un modelo refinado: cada pieza tiene exactamente un sentido.

    El refinamiento contiene como vértices todos los puntos de cresta y los
    quiebres de la función distancia, así que val_± se cuenta combinatoriamente.
    """
    refinamiento: Refinamiento
    sentidos: Mapping[str, int]
    crestas: Tuple[str, ...]

    @property
    def grafo(self) -> MetricGraph:
        return self.refinamiento.refinado

    def extremos(self, edge_id: str) -> Tuple[str, str]:
        """(origen, destino) de la pieza según su sentido"""
        arista = self.grafo.arista(edge_id)
        if self.sentidos[edge_id] == 1:
            return arista.tail, arista.head
        return arista.head, arista.tail

    def valencias(self, vertex: str) -> Tuple[int, int]:
        """(salientes, entrantes) en el vértice; un lazo cuenta una vez en cada lado"""
        salientes = entrantes = 0
        for arista, extremo in self.grafo.incidencias(vertex):
            if extremo == self.sentidos[arista.id]:
                salientes += 1
            else:
                entrantes += 1
        return salientes, entrantes


@dataclass(frozen=True)
class GammaClass:
    """
    Elemento de H_1(C, Z/2Z) en la base de ciclos, con su soporte |γ| y una
    descomposición en circuitos orientados disjuntos en aristas.
    """
    bits: Tuple[int, ...]
    support: Tuple[str, ...]
    circuits: Tuple[Tuple[Paso, ...], ...]

    @property
    def es_trivial(self) -> bool:
        return not any(self.bits)

    def sentidos(self) -> Mapping[str, int]:
        return {edge_id: sentido for circuito in self.circuits for edge_id, sentido in circuito}
