from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Mapping, Tuple

import networkx as nx

from tropitheta.modelos.curva import Point


@dataclass(frozen=True)
class UnitModel:
    """
    Multigrafo combinatorio obtenido al escalar la curva por `escala` y
    subdividir cada arista en segmentos de longitud 1.

    Los vértices son índices 0..n-1; `etiquetas` guarda un nombre legible y
    `puntos` la correspondencia punto métrico (de la curva original) -> índice.
    """
    etiquetas: Tuple[str, ...]
    aristas: Tuple[Tuple[int, int], ...]
    escala: int
    puntos: Mapping[Point, int]

    @property
    def n(self) -> int:
        return len(self.etiquetas)

    @cached_property
    def grafo(self) -> nx.MultiGraph:
        """Multigrafo networkx sin lazos (no mueven fichas)"""
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from((a, b) for a, b in self.aristas if a != b)
        return g

    @cached_property
    def vecinos(self) -> Tuple[Tuple[int, ...], ...]:
        """Adyacencia con multiplicidad, una entrada por arista paralela"""
        return tuple(tuple(w for _, w in self.grafo.edges(v)) for v in range(self.n))

    @cached_property
    def punto_de_indice(self) -> Dict[int, Point]:
        return {i: p for p, i in self.puntos.items()}

    def grado(self, v: int) -> int:
        return self.grafo.degree(v)
