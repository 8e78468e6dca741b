from typing import Optional

import click

from tropitheta.comandos.comun import comando_reporte, leer_curva, leer_divisor, leer_punto, opcion_curva
from tropitheta.schemas.reporte import Reporte, divisor_json, punto_salida
from tropitheta.servicios.oraculo import divisor_metrico, reducir


@click.command("reduce", help="Forma q-reducida de D en el modelo unitario (Dhar)")
@opcion_curva
@click.option(
    "--divisor", "ruta_divisor", required=True, type=click.Path(exists=True, dir_okay=False),
    help="Archivo JSON del divisor",
)
@click.option("--base", "texto_base", help='q: "vértice" o "arista:offset"; por defecto el punto base')
@comando_reporte
def reduce(ruta_curva: str, ruta_divisor: str, texto_base: Optional[str]) -> Reporte:
    grafo = leer_curva(ruta_curva)
    d = leer_divisor(grafo, ruta_divisor)
    q = leer_punto(grafo, texto_base)
    reduccion = reducir(grafo, d, q)
    return Reporte(
        command="reduce",
        curve=grafo.name,
        result={
            "base": punto_salida(q).model_dump(exclude_none=True),
            "scale": reduccion.modelo.escala,
            "reduced": divisor_json(divisor_metrico(reduccion.modelo, reduccion.reducido), grafo),
            "effective": reduccion.efectiva,
        },
    )
