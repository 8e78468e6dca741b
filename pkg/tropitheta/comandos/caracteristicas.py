import logging
import os
from typing import List, Optional

import click

from tropitheta.comandos.comun import comando_reporte, leer_bits, leer_curva, nombre_bits, opcion_curva
from tropitheta.errores import LimiteExcedido
from tropitheta.modelos.curva import MetricGraph
from tropitheta.schemas.reporte import (
    CaracteristicaSalida,
    Chequeo,
    Reporte,
    divisor_salida,
    jac_salida,
)
from tropitheta.servicios.caracteristicas import Caracteristica, theta_characteristics
from tropitheta.servicios.oraculo import is_effective_oracle
from tropitheta.servicios.orientacion import orientacion_dot

logger = logging.getLogger(__name__)


def escribir_dot(filas: List[Caracteristica], grafo: MetricGraph, directorio: str) -> List[str]:
    """Un archivo gamma-<bits>.dot por fila con el modelo refinado orientado"""
    os.makedirs(directorio, exist_ok=True)
    rutas = []
    for fila in filas:
        nombre = f"gamma-{nombre_bits(fila.bits)}"
        ruta = os.path.join(directorio, f"{nombre}.dot")
        with open(ruta, "w", encoding="utf-8") as archivo:
            archivo.write(orientacion_dot(fila.orientacion, f"{grafo.name or 'curva'} {nombre}"))
        rutas.append(ruta)
    logger.info("%d archivos DOT escritos en %s", len(rutas), directorio)
    return rutas


@click.command("theta-chars", help="Las 2^g características theta con su efectividad")
@opcion_curva
@click.option("--dot", "directorio_dot", type=click.Path(file_okay=False), help="Directorio para los DOT por γ")
@comando_reporte
def theta_chars(ruta_curva: str, directorio_dot: Optional[str]) -> Reporte:
    grafo = leer_curva(ruta_curva)
    tabla = theta_characteristics(grafo)
    salidas, chequeos = [], []
    for fila in tabla.filas:
        nombre = f"oracle_agreement[{nombre_bits(fila.bits)}]"
        try:
            oraculo = is_effective_oracle(grafo, fila.divisor, grafo.basepoint)
        except LimiteExcedido as e:
            oraculo = None
            chequeos.append(Chequeo(name=nombre, status="skipped", detail=str(e)))
        else:
            chequeos.append(Chequeo(name=nombre, status="pass" if oraculo == fila.efectiva else "fail"))
        salidas.append(
            CaracteristicaSalida(
                gamma=list(fila.bits),
                divisor=divisor_salida(fila.divisor, grafo),
                divisor_plus=divisor_salida(fila.divisor_plus, grafo),
                class_=jac_salida(fila.clase),
                half_gamma=jac_salida(fila.medio_gamma),
                effective=fila.efectiva,
                oracle_effective=oraculo,
            ).model_dump(by_alias=True, exclude_none=True)
        )
    resultado = {
        "kappa": jac_salida(tabla.kappa.kappa).model_dump(),
        "non_effective": [list(f.bits) for f in tabla.no_efectivas],
        "characteristics": salidas,
    }
    if directorio_dot:
        resultado["dot"] = escribir_dot(list(tabla.filas), grafo, directorio_dot)
    return Reporte(command="theta-chars", curve=grafo.name, result=resultado, checks=chequeos)


@click.command("export-dot", help="Exporta en DOT la orientación de cada característica")
@opcion_curva
@click.option("--out", "directorio", required=True, type=click.Path(file_okay=False), help="Directorio de salida")
@click.option("--gamma", "texto_gamma", help='Solo esta γ, como bits "01" o "0,1"')
@comando_reporte
def export_dot(ruta_curva: str, directorio: str, texto_gamma: Optional[str]) -> Reporte:
    grafo = leer_curva(ruta_curva)
    tabla = theta_characteristics(grafo)
    filas = list(tabla.filas)
    if texto_gamma is not None:
        bits = leer_bits(texto_gamma, tabla.forma.genero)
        filas = [f for f in filas if f.bits == bits]
    return Reporte(
        command="export-dot",
        curve=grafo.name,
        result={"files": escribir_dot(filas, grafo, directorio)},
    )
