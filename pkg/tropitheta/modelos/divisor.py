from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from tropitheta.errores import CurvaInvalida
from tropitheta.modelos.curva import MetricGraph, Point


class Divisor:
    """
    Suma formal finita de puntos canónicos con coeficientes enteros.

    Inmutable: las operaciones devuelven divisores nuevos. Los coeficientes
    nulos se descartan al construir, así que dos divisores son iguales si y
    solo si tienen el mismo diccionario de coeficientes.
    """
    __slots__ = ("_coeficientes",)

    def __init__(self, coeficientes: Union[Mapping[Point, int], Iterable[Tuple[Point, int]], None] = None):
        if isinstance(coeficientes, Mapping):
            pares = coeficientes.items()
        else:
            pares = coeficientes or ()
        acumulado: Dict[Point, int] = {}
        for punto, c in pares:
            acumulado[punto] = acumulado.get(punto, 0) + int(c)
        self._coeficientes = {p: c for p, c in acumulado.items() if c != 0}

    @classmethod
    def desde_puntos(cls, puntos: Iterable[Point]) -> "Divisor":
        return cls((p, 1) for p in puntos)

    @property
    def grado(self) -> int:
        return sum(self._coeficientes.values())

    @property
    def es_efectivo(self) -> bool:
        return all(c > 0 for c in self._coeficientes.values())

    @property
    def soporte(self) -> frozenset:
        return frozenset(self._coeficientes)

    def coeficiente(self, punto: Point) -> int:
        return self._coeficientes.get(punto, 0)

    def items(self):
        return self._coeficientes.items()

    def ordenado(self, grafo: MetricGraph) -> List[Tuple[Point, int]]:
        return sorted(self._coeficientes.items(), key=lambda par: grafo.clave_punto(par[0]))

    def __add__(self, otro: "Divisor") -> "Divisor":
        return Divisor(list(self.items()) + list(otro.items()))

    def __sub__(self, otro: "Divisor") -> "Divisor":
        return self + (-otro)

    def __neg__(self) -> "Divisor":
        return Divisor((p, -c) for p, c in self.items())

    def __mul__(self, k: int) -> "Divisor":
        return Divisor((p, k * c) for p, c in self.items())

    __rmul__ = __mul__

    def __eq__(self, otro) -> bool:
        if not isinstance(otro, Divisor):
            return NotImplemented
        return self._coeficientes == otro._coeficientes

    def __hash__(self) -> int:
        return hash(frozenset(self._coeficientes.items()))

    def __len__(self) -> int:
        return len(self._coeficientes)

    def __bool__(self) -> bool:
        return bool(self._coeficientes)

    def __repr__(self) -> str:
        terminos = " + ".join(f"{c}·{p}" for p, c in self._coeficientes.items())
        return f"Divisor({terminos or '0'})"


Quiebre = Tuple[Fraction, Fraction]


def _evaluar(quiebres: Tuple[Quiebre, ...], t: Fraction) -> Fraction:
    offsets = [o for o, _ in quiebres]
    i = bisect_right(offsets, t) - 1
    if i >= len(quiebres) - 1:
        return quiebres[-1][1]
    (t0, v0), (t1, v1) = quiebres[i], quiebres[i + 1]
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0)


def _pendiente(a: Quiebre, b: Quiebre) -> Fraction:
    return (b[1] - a[1]) / (b[0] - a[0])


def _normalizar(quiebres: List[Quiebre]) -> Tuple[Quiebre, ...]:
    """Elimina quiebres interiores colineales"""
    resultado = [quiebres[0]]
    for i in range(1, len(quiebres) - 1):
        if _pendiente(resultado[-1], quiebres[i]) != _pendiente(quiebres[i], quiebres[i + 1]):
            resultado.append(quiebres[i])
    resultado.append(quiebres[-1])
    return tuple(resultado)


@dataclass(frozen=True)
class PLFunction:
    """
    Función continua lineal a trozos con pendientes enteras, guardada por arista.

    `tramos[e]` es la lista de quiebres (offset, valor) de la arista e, desde
    offset 0 hasta su longitud, sin quiebres colineales. Construir siempre con
    `PLFunction.desde_quiebres`, que valida contra el grafo.
    """
    tramos: Mapping[str, Tuple[Quiebre, ...]]

    @classmethod
    def desde_quiebres(cls, grafo: MetricGraph, tramos: Mapping[str, Iterable[Tuple]]) -> "PLFunction":
        """
        Valida y normaliza quiebres por arista.

        Args:
            grafo: curva sobre la que vive la función
            tramos: id de arista -> lista de pares (offset, valor)

        Returns:
            PLFunction: función validada

        Raises:
            CurvaInvalida: aristas faltantes, offsets desordenados o fuera de rango,
                pendientes no enteras o discontinuidad en un vértice
        """
        faltantes = [e.id for e in grafo.edges if e.id not in tramos]
        if faltantes:
            raise CurvaInvalida(f"Función PL sin datos en las aristas {faltantes}")
        extra = set(tramos) - {e.id for e in grafo.edges}
        if extra:
            raise CurvaInvalida(f"Función PL con aristas desconocidas {sorted(extra)}")

        normalizados: Dict[str, Tuple[Quiebre, ...]] = {}
        valores_vertice: Dict[str, Fraction] = {}
        for arista in grafo.edges:
            quiebres = [(Fraction(o), Fraction(v)) for o, v in tramos[arista.id]]
            if len(quiebres) < 2 or quiebres[0][0] != 0 or quiebres[-1][0] != arista.length:
                raise CurvaInvalida(
                    f"Los quiebres de '{arista.id}' deben ir de 0 a {arista.length}"
                )
            for a, b in zip(quiebres, quiebres[1:]):
                if b[0] <= a[0]:
                    raise CurvaInvalida(f"Offsets no crecientes en la arista '{arista.id}'")
                if _pendiente(a, b).denominator != 1:
                    raise CurvaInvalida(
                        f"Pendiente no entera {_pendiente(a, b)} en la arista '{arista.id}'"
                    )
            for vertice, valor in ((arista.tail, quiebres[0][1]), (arista.head, quiebres[-1][1])):
                previo = valores_vertice.setdefault(vertice, valor)
                if previo != valor:
                    raise CurvaInvalida(
                        f"Función discontinua en el vértice '{vertice}': {previo} != {valor}"
                    )
            normalizados[arista.id] = _normalizar(quiebres)
        return cls(tramos=normalizados)

    @classmethod
    def constante(cls, grafo: MetricGraph, valor=0) -> "PLFunction":
        valor = Fraction(valor)
        return cls(tramos={e.id: ((Fraction(0), valor), (e.length, valor)) for e in grafo.edges})

    def valor(self, grafo: MetricGraph, punto: Point) -> Fraction:
        if punto.es_vertice:
            arista, sentido = grafo.incidencias(punto.vertex)[0]
            quiebres = self.tramos[arista.id]
            return quiebres[0][1] if sentido == 1 else quiebres[-1][1]
        return _evaluar(self.tramos[punto.edge], punto.offset)

    def valor_en(self, edge_id: str, offset) -> Fraction:
        return _evaluar(self.tramos[edge_id], Fraction(offset))

    def segmentos(self, edge_id: str) -> List[Tuple[Fraction, Fraction, int]]:
        """Lista de (inicio, fin, pendiente) de la arista"""
        quiebres = self.tramos[edge_id]
        return [(a[0], b[0], int(_pendiente(a, b))) for a, b in zip(quiebres, quiebres[1:])]

    def quiebres_interiores(self, grafo: MetricGraph) -> List[Point]:
        """Puntos interiores de arista donde cambia la pendiente"""
        return [
            grafo.punto_en_arista(e.id, o)
            for e in grafo.edges
            for o, _ in self.tramos[e.id][1:-1]
        ]

    def _combinar(self, otra: "PLFunction", op) -> "PLFunction":
        tramos = {}
        for edge_id, quiebres in self.tramos.items():
            offsets = sorted({o for o, _ in quiebres} | {o for o, _ in otra.tramos[edge_id]})
            combinados = [
                (o, op(_evaluar(quiebres, o), _evaluar(otra.tramos[edge_id], o))) for o in offsets
            ]
            tramos[edge_id] = _normalizar(combinados)
        return PLFunction(tramos=tramos)

    def __add__(self, otra: "PLFunction") -> "PLFunction":
        return self._combinar(otra, lambda a, b: a + b)

    def __sub__(self, otra: "PLFunction") -> "PLFunction":
        return self._combinar(otra, lambda a, b: a - b)

    def __neg__(self) -> "PLFunction":
        return self * -1

    def __mul__(self, k: int) -> "PLFunction":
        if int(k) != k:
            raise CurvaInvalida("Solo se admiten múltiplos enteros de una función PL")
        return PLFunction(
            tramos={e: tuple((o, k * v) for o, v in q) for e, q in self.tramos.items()}
        )

    __rmul__ = __mul__

    def mas_constante(self, c) -> "PLFunction":
        c = Fraction(c)
        return PLFunction(tramos={e: tuple((o, v + c) for o, v in q) for e, q in self.tramos.items()})
