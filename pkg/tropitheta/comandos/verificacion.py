from typing import Optional

import click

from tropitheta.comandos.comun import comando_reporte, leer_curva, opcion_curva
from tropitheta.schemas.reporte import Reporte
from tropitheta.servicios import VerificacionService


@click.command("verify", help="Batería completa de invariantes; sale con 1 si alguna falla")
@opcion_curva
@click.option("--seed", "semilla", type=click.IntRange(min=0), help="Semilla de los chequeos aleatorios")
@comando_reporte
def verify(ruta_curva: str, semilla: Optional[int]) -> Reporte:
    grafo = leer_curva(ruta_curva)
    return VerificacionService(grafo, semilla).verificar()
