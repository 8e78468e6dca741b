from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple

from tropitheta.modelos.curva import MetricGraph, Point
from tropitheta.modelos.divisor import Divisor, PLFunction, _evaluar, _normalizar
from tropitheta.modelos.jacobiano import Cycle, GramForm

# pieza refinada -> (arista original, offset de inicio dentro de ella)
Origen = Tuple[str, Fraction]


@dataclass(frozen=True)
class Refinamiento:
    """
    Correspondencia entre un modelo y su subdivisión.

    Cada arista original se parte en piezas consecutivas que conservan la
    orientación tail -> head; `piezas[e]` las lista en orden con su offset
    de inicio. Convierte puntos, divisores, cadenas y funciones PL en ambos
    sentidos cuando tiene sentido.
    """
    original: MetricGraph
    refinado: MetricGraph
    piezas: Mapping[str, Tuple[Tuple[str, Fraction], ...]]
    origen: Mapping[str, Origen]
    nuevos: Mapping[str, Point]

    def punto(self, p: Point) -> Point:
        """Punto del modelo original -> punto canónico del refinado"""
        if p.es_vertice:
            return self.refinado.punto_vertice(p.vertex)
        trozos = self.piezas[p.edge]
        for pieza, inicio in reversed(trozos):
            if p.offset >= inicio:
                return self.refinado.punto_en_arista(pieza, p.offset - inicio)
        raise ValueError(f"Punto {p} fuera de la arista")  # pragma: no cover

    def punto_original(self, p: Point) -> Point:
        """Punto del refinado -> punto canónico del original"""
        if p.es_vertice:
            if p.vertex in self.nuevos:
                return self.nuevos[p.vertex]
            return self.original.punto_vertice(p.vertex)
        arista, inicio = self.origen[p.edge]
        return self.original.punto_en_arista(arista, inicio + p.offset)

    def divisor(self, d: Divisor) -> Divisor:
        return Divisor((self.punto(p), c) for p, c in d.items())

    def divisor_original(self, d: Divisor) -> Divisor:
        return Divisor((self.punto_original(p), c) for p, c in d.items())

    def cadena(self, coeficientes: Sequence) -> Tuple:
        """Cadena sobre aristas originales -> cadena sobre piezas (cada pieza hereda el coeficiente)"""
        por_arista = dict(zip((e.id for e in self.original.edges), coeficientes))
        return tuple(por_arista[self.origen[e.id][0]] for e in self.refinado.edges)

    def ciclo(self, ciclo: Cycle) -> Cycle:
        return Cycle(self.cadena(ciclo.coeficientes))

    def forma(self, forma: GramForm) -> GramForm:
        """La misma base de ciclos vista en el refinado; la matriz de Gram no cambia"""
        return GramForm(basis=tuple(self.ciclo(c) for c in forma.basis), gram=forma.gram)

    def funcion(self, f: PLFunction) -> PLFunction:
        tramos: Dict[str, Tuple] = {}
        for arista_id, trozos in self.piezas.items():
            quiebres = f.tramos[arista_id]
            limites = [inicio for _, inicio in trozos] + [self.original.arista(arista_id).length]
            for (pieza, inicio), fin in zip(trozos, limites[1:]):
                offsets = sorted({inicio, fin} | {o for o, _ in quiebres if inicio < o < fin})
                tramos[pieza] = _normalizar([(o - inicio, _evaluar(quiebres, o)) for o in offsets])
        return PLFunction(tramos=tramos)
