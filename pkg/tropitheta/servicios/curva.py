import logging
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

import networkx as nx
from pydantic import ValidationError

from tropitheta.errores import CurvaInvalida
from tropitheta.modelos.curva import Edge, MetricGraph, Point
from tropitheta.modelos.divisor import Divisor
from tropitheta.modelos.refinamiento import Refinamiento
from tropitheta.schemas.curva import CurvaArchivo, DivisorArchivo, PuntoArchivo, racional

logger = logging.getLogger(__name__)


def _texto(datos: Union[str, bytes]) -> str:
    if isinstance(datos, bytes):
        try:
            return datos.decode("utf-8")
        except UnicodeDecodeError as e:
            raise CurvaInvalida(f"Error de parseo: el archivo no es UTF-8 ({e})") from e
    return datos


def _mensaje_validacion(e: ValidationError) -> str:
    primero = e.errors()[0]
    ubicacion = ".".join(str(x) for x in primero.get("loc", ()))
    return f"{ubicacion}: {primero.get('msg')}" if ubicacion else str(primero.get("msg"))


def load_curve(datos: Union[str, bytes]) -> MetricGraph:
    """
    Parsea y valida un archivo JSON de curva.

    Args:
        datos: contenido del archivo (texto o bytes UTF-8)

    Returns:
        MetricGraph: curva validada; el punto base por defecto es el primer vértice

    Raises:
        CurvaInvalida: error de parseo, longitud infinita o no positiva, id duplicado,
            extremo desconocido o grafo desconectado
    """
    try:
        archivo = CurvaArchivo.model_validate_json(_texto(datos))
    except ValidationError as e:
        mensaje = _mensaje_validacion(e)
        if "longitud infinita" in mensaje:
            raise CurvaInvalida(f"Arista de longitud infinita: {mensaje}") from e
        raise CurvaInvalida(f"Error de parseo: {mensaje}") from e
    return construir_grafo(
        vertices=[v.id for v in archivo.vertices],
        aristas=[(a.id, a.tail, a.head, racional(a.length)) for a in archivo.edges],
        basepoint=archivo.basepoint,
        name=archivo.name or "",
    )


def construir_grafo(
    vertices: Iterable[str],
    aristas: Iterable[Tuple[str, str, str, Fraction]],
    basepoint: Union[PuntoArchivo, Point, None] = None,
    name: str = "",
) -> MetricGraph:
    """
    Construye y valida un MetricGraph.

    Args:
        vertices: ids en orden
        aristas: tuplas (id, tail, head, longitud)
        basepoint: punto base; si falta se usa el primer vértice
        name: nombre de la curva

    Returns:
        MetricGraph: grafo validado

    Raises:
        CurvaInvalida: si alguna invariante del modelo no se cumple
    """
    vertices = tuple(vertices)
    if not vertices:
        raise CurvaInvalida("La curva necesita al menos un vértice")
    duplicados = sorted({v for v in vertices if vertices.count(v) > 1})
    if duplicados:
        raise CurvaInvalida(f"Ids de vértice duplicados: {duplicados}")

    lista: List[Edge] = []
    vistos = set()
    for edge_id, tail, head, longitud in aristas:
        if edge_id in vistos:
            raise CurvaInvalida(f"Id de arista duplicado: '{edge_id}'")
        vistos.add(edge_id)
        for extremo in (tail, head):
            if extremo not in vertices:
                raise CurvaInvalida(f"La arista '{edge_id}' usa el vértice desconocido '{extremo}'")
        longitud = Fraction(longitud)
        if longitud <= 0:
            raise CurvaInvalida(f"Longitud no positiva {longitud} en la arista '{edge_id}'")
        lista.append(Edge(id=edge_id, tail=tail, head=head, length=longitud))

    provisional = MetricGraph(vertices=vertices, edges=tuple(lista), basepoint=Point(vertex=vertices[0]), name=name)
    if not nx.is_connected(provisional.grafo_networkx()):
        raise CurvaInvalida("El grafo no es conexo")

    if basepoint is None:
        return provisional
    if isinstance(basepoint, PuntoArchivo):
        basepoint = punto_desde_archivo(provisional, basepoint)
    provisional.validar_punto(basepoint)
    return MetricGraph(vertices=vertices, edges=tuple(lista), basepoint=basepoint, name=name)


def punto_desde_archivo(grafo: MetricGraph, punto: PuntoArchivo) -> Point:
    """Convierte un punto de archivo en un punto canónico de la curva"""
    if punto.vertex is not None:
        return grafo.punto_vertice(punto.vertex)
    return grafo.punto_en_arista(punto.edge, racional(punto.offset))


def load_divisor(grafo: MetricGraph, datos: Union[str, bytes]) -> Divisor:
    """
    Parsea un archivo JSON de divisor sobre la curva dada.

    Raises:
        CurvaInvalida: error de parseo o puntos fuera de la curva
    """
    try:
        archivo = DivisorArchivo.model_validate_json(_texto(datos))
    except ValidationError as e:
        raise CurvaInvalida(f"Error de parseo del divisor: {_mensaje_validacion(e)}") from e
    return Divisor((punto_desde_archivo(grafo, t.point), t.coeff) for t in archivo.divisor)


def genus(grafo: MetricGraph) -> int:
    """Primer número de Betti |E| - |V| + 1"""
    return len(grafo.edges) - len(grafo.vertices) + 1


def canonical_divisor(grafo: MetricGraph) -> Divisor:
    """K = Σ (val(v) - 2)·v; los vértices 2-valentes no aportan"""
    return Divisor((grafo.punto_vertice(v), grafo.valencia(v) - 2) for v in grafo.vertices)


def _id_libre(base: str, usados: set) -> str:
    candidato = base
    while candidato in usados:
        candidato += "'"
    usados.add(candidato)
    return candidato


def subdivide_at(grafo: MetricGraph, puntos: Iterable[Point]) -> Tuple[MetricGraph, Refinamiento]:
    """
    Convierte en vértices los puntos interiores dados.

    Cada arista con k puntos interiores se parte en k+1 piezas "e.0", ..., "e.k"
    con la orientación original; los nuevos vértices se llaman "e@offset".
    Los puntos que ya son vértices no cambian el modelo.

    Args:
        grafo: modelo original
        puntos: puntos de la curva

    Returns:
        (MetricGraph, Refinamiento): modelo refinado y la correspondencia de puntos
    """
    cortes: Dict[str, set] = defaultdict(set)
    for p in puntos:
        grafo.validar_punto(p)
        if not p.es_vertice:
            cortes[p.edge].add(p.offset)

    usados = set(grafo.vertices) | {e.id for e in grafo.edges}
    vertices = list(grafo.vertices)
    aristas: List[Edge] = []
    piezas: Dict[str, Tuple[Tuple[str, Fraction], ...]] = {}
    origen: Dict[str, Tuple[str, Fraction]] = {}
    nuevos: Dict[str, Point] = {}

    for e in grafo.edges:
        offsets = sorted(cortes.get(e.id, ()))
        if not offsets:
            aristas.append(e)
            piezas[e.id] = ((e.id, Fraction(0)),)
            origen[e.id] = (e.id, Fraction(0))
            continue
        usados.discard(e.id)
        intermedios = []
        for o in offsets:
            v = _id_libre(f"{e.id}@{o}", usados)
            intermedios.append(v)
            vertices.append(v)
            nuevos[v] = Point(edge=e.id, offset=o)
        extremos = [e.tail] + intermedios + [e.head]
        limites = [Fraction(0)] + offsets + [e.length]
        trozos = []
        for k in range(len(offsets) + 1):
            pieza = _id_libre(f"{e.id}.{k}", usados)
            aristas.append(Edge(pieza, extremos[k], extremos[k + 1], limites[k + 1] - limites[k]))
            trozos.append((pieza, limites[k]))
            origen[pieza] = (e.id, limites[k])
        piezas[e.id] = tuple(trozos)

    refinado = MetricGraph(
        vertices=tuple(vertices), edges=tuple(aristas), basepoint=grafo.basepoint, name=grafo.name
    )
    refinamiento = Refinamiento(original=grafo, refinado=refinado, piezas=piezas, origen=origen, nuevos=nuevos)
    refinado = MetricGraph(
        vertices=refinado.vertices,
        edges=refinado.edges,
        basepoint=refinamiento.punto(grafo.basepoint),
        name=grafo.name,
    )
    refinamiento = Refinamiento(original=grafo, refinado=refinado, piezas=piezas, origen=origen, nuevos=nuevos)
    logger.debug("Refinamiento de %d a %d aristas", len(grafo.edges), len(refinado.edges))
    return refinado, refinamiento
