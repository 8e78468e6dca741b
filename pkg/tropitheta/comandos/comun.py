"""
Piezas compartidas por los comandos: opciones, lectura de archivos, salida
del reporte y traducción de errores a JSON en stderr.
"""
import functools
import json
import logging
import time
import traceback
from typing import Callable, Optional, Sequence, Tuple

import click

from tropitheta.errores import CurvaInvalida, ErrorTropitheta, InvarianteViolado, LimiteExcedido
from tropitheta.modelos.curva import MetricGraph, Point
from tropitheta.modelos.divisor import Divisor
from tropitheta.schemas.curva import racional
from tropitheta.schemas.reporte import Reporte
from tropitheta.servicios.curva import load_curve, load_divisor

logger = logging.getLogger(__name__)

ERRORES = (
    (CurvaInvalida, "Error de validación"),
    (LimiteExcedido, "Límite excedido"),
    (InvarianteViolado, "Invariante violado"),
    (ErrorTropitheta, "Error de tropitheta"),
    (ValueError, "Error de validación"),
)

opcion_curva = click.option(
    "--curve",
    "ruta_curva",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Archivo JSON de la curva",
)
opcion_formato = click.option(
    "--format",
    "formato",
    type=click.Choice(["json", "text"]),
    default="json",
    show_default=True,
    help="json es el contrato estable; text es un resumen para humanos",
)
opcion_tiempo = click.option(
    "--timing", "con_tiempo", is_flag=True, help="Incluye el tiempo de ejecución en el reporte"
)


def comando_reporte(funcion: Callable[..., Reporte]) -> Callable:
    """
    Decora un comando que devuelve un Reporte: agrega --format y --timing,
    imprime el reporte y convierte los errores del paquete en un detalle
    JSON {"error", "message", "trace"} en stderr con código de salida 1.
    Un reporte con chequeos fallidos también sale con 1.
    """

    @opcion_formato
    @opcion_tiempo
    @functools.wraps(funcion)
    def envoltura(formato: str, con_tiempo: bool, **kwargs):
        inicio = time.perf_counter()
        try:
            reporte = funcion(**kwargs)
        except click.ClickException:
            raise
        except Exception as e:
            rastro = traceback.format_exc()
            logger.debug("Traza completa:\n%s", rastro)
            titulo = next((t for tipo, t in ERRORES if isinstance(e, tipo)), "Error interno")
            detalle = {"error": titulo, "message": str(e), "trace": rastro.splitlines()[-1]}
            click.echo(json.dumps(detalle, ensure_ascii=False), err=True)
            raise SystemExit(1)
        if con_tiempo:
            reporte.timing = round(time.perf_counter() - inicio, 6)
        click.echo(reporte.a_json() if formato == "json" else texto_reporte(reporte))
        if not reporte.exito:
            raise SystemExit(1)

    return envoltura


def texto_reporte(reporte: Reporte) -> str:
    lineas = [f"{reporte.command} [{reporte.curve}]"]
    for clave, valor in reporte.result.items():
        if isinstance(valor, (list, dict)):
            valor = json.dumps(valor, ensure_ascii=False, default=str)
        lineas.append(f"  {clave}: {valor}")
    for chequeo in reporte.checks:
        detalle = f"  ({chequeo.detail})" if chequeo.detail else ""
        lineas.append(f"  [{chequeo.status:>7}] {chequeo.name}{detalle}")
    if reporte.timing is not None:
        lineas.append(f"  tiempo: {reporte.timing}s")
    return "\n".join(lineas)


def leer_curva(ruta: str) -> MetricGraph:
    with open(ruta, "rb") as archivo:
        return load_curve(archivo.read())


def leer_divisor(grafo: MetricGraph, ruta: str) -> Divisor:
    with open(ruta, "rb") as archivo:
        return load_divisor(grafo, archivo.read())


def leer_vector(texto: str) -> Tuple:
    """ "a,b,..." -> tupla de Fraction; la cadena vacía es el vector de R^0"""
    partes = [p for p in texto.split(",") if p.strip()]
    return tuple(racional(p) for p in partes)


def leer_punto(grafo: MetricGraph, texto: Optional[str]) -> Point:
    """
    "v" es un vértice y "e:offset" un punto interior; sin texto, el punto base.

    Raises:
        CurvaInvalida: si el punto no está en la curva
    """
    if texto is None:
        return grafo.basepoint
    if ":" in texto:
        arista, offset = texto.split(":", 1)
        return grafo.punto_en_arista(arista, racional(offset))
    return grafo.punto_vertice(texto)


def leer_bits(texto: str, genero: int) -> Tuple[int, ...]:
    bits = tuple(int(b) for b in texto.replace(",", ""))
    if len(bits) != genero or any(b not in (0, 1) for b in bits):
        raise CurvaInvalida(f"γ debe tener {genero} bits 0/1, se recibió {texto!r}")
    return bits


def nombre_bits(bits: Sequence[int]) -> str:
    return "".join(str(b) for b in bits) or "vacio"
