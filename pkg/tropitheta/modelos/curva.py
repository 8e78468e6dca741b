from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import networkx as nx

from tropitheta.errores import CurvaInvalida


@dataclass(frozen=True)
class Point:
    """
    Punto de la curva en forma canónica.

    Un punto en un vértice se guarda solo con `vertex`; un punto interior de
    una arista con `edge` y `offset` (0 < offset < longitud, medido de tail a head).
    Los constructores canónicos viven en MetricGraph: nunca construir un punto
    interior con offset 0 o igual a la longitud.
    """
    vertex: Optional[str] = None
    edge: Optional[str] = None
    offset: Optional[Fraction] = None

    @property
    def es_vertice(self) -> bool:
        return self.vertex is not None

    def __str__(self) -> str:
        if self.es_vertice:
            return self.vertex
        return f"{self.edge}@{self.offset}"


@dataclass(frozen=True)
class Edge:
    """Arista orientada tail -> head con longitud racional positiva"""
    id: str
    tail: str
    head: str
    length: Fraction

    @property
    def es_lazo(self) -> bool:
        return self.tail == self.head


# Extremo de arista visto desde un vértice: +1 si la arista sale (extremo tail),
# -1 si llega (extremo head). Un lazo aporta ambos extremos.
Incidencia = Tuple[Edge, int]


@dataclass(frozen=True)
class MetricGraph:
    """
    Modelo combinatorio de una curva tropical compacta.

    Vértices y aristas conservan el orden del archivo; todos los recorridos
    del paquete derivan de ese orden. La validación completa (conexidad,
    ids únicos, longitudes positivas) la hace `servicios.curva.construir_grafo`.
    """
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    basepoint: Point
    name: str = ""

    @cached_property
    def _aristas(self) -> Dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _indice_aristas(self) -> Dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def _indice_vertices(self) -> Dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _incidencias(self) -> Dict[str, Tuple[Incidencia, ...]]:
        tabla: Dict[str, List[Incidencia]] = {v: [] for v in self.vertices}
        for e in self.edges:
            tabla[e.tail].append((e, 1))
            tabla[e.head].append((e, -1))
        return {v: tuple(extremos) for v, extremos in tabla.items()}

    def arista(self, edge_id: str) -> Edge:
        try:
            return self._aristas[edge_id]
        except KeyError:
            raise CurvaInvalida(f"La arista '{edge_id}' no existe en la curva") from None

    def indice_arista(self, edge_id: str) -> int:
        self.arista(edge_id)
        return self._indice_aristas[edge_id]

    def indice_vertice(self, vertex: str) -> int:
        if vertex not in self._indice_vertices:
            raise CurvaInvalida(f"El vértice '{vertex}' no existe en la curva")
        return self._indice_vertices[vertex]

    def incidencias(self, vertex: str) -> Tuple[Incidencia, ...]:
        """Extremos de arista en el vértice, en orden de archivo"""
        self.indice_vertice(vertex)
        return self._incidencias[vertex]

    def valencia(self, vertex: str) -> int:
        return len(self.incidencias(vertex))

    @property
    def longitud_total(self) -> Fraction:
        return sum((e.length for e in self.edges), Fraction(0))

    def punto_vertice(self, vertex: str) -> Point:
        self.indice_vertice(vertex)
        return Point(vertex=vertex)

    def punto_en_arista(self, edge_id: str, offset) -> Point:
        """
        Punto canónico a distancia `offset` del tail de la arista.

        Args:
            edge_id: id de la arista
            offset: racional en [0, longitud]

        Returns:
            Point: en forma de vértice si offset es 0 o la longitud

        Raises:
            CurvaInvalida: si el offset cae fuera de la arista
        """
        arista = self.arista(edge_id)
        offset = Fraction(offset)
        if offset < 0 or offset > arista.length:
            raise CurvaInvalida(
                f"Offset {offset} fuera de la arista '{edge_id}' de longitud {arista.length}"
            )
        if offset == 0:
            return Point(vertex=arista.tail)
        if offset == arista.length:
            return Point(vertex=arista.head)
        return Point(edge=edge_id, offset=offset)

    def validar_punto(self, p: Point) -> Point:
        if p.es_vertice:
            return self.punto_vertice(p.vertex)
        canonico = self.punto_en_arista(p.edge, p.offset)
        if canonico != p:
            raise CurvaInvalida(f"El punto {p} no está en forma canónica")
        return p

    def clave_punto(self, p: Point) -> Tuple:
        """Clave de orden determinista: vértices primero, luego puntos interiores"""
        if p.es_vertice:
            return (0, self.indice_vertice(p.vertex), Fraction(0))
        return (1, self.indice_arista(p.edge), p.offset)

    @property
    def vertice_base(self) -> str:
        """Vértice raíz de los árboles generadores: el punto base o el tail de su arista"""
        if self.basepoint.es_vertice:
            return self.basepoint.vertex
        return self.arista(self.basepoint.edge).tail

    def grafo_networkx(self) -> nx.MultiGraph:
        """MultiGraph de networkx con las aristas indexadas por id y su longitud"""
        grafo = nx.MultiGraph()
        grafo.add_nodes_from(self.vertices)
        for e in self.edges:
            grafo.add_edge(e.tail, e.head, key=e.id, length=e.length)
        return grafo
