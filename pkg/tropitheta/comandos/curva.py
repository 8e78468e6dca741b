import click

from tropitheta.comandos.comun import comando_reporte, leer_curva, opcion_curva
from tropitheta.schemas.curva import texto_racional
from tropitheta.schemas.reporte import Reporte, divisor_json, punto_salida
from tropitheta.servicios.curva import canonical_divisor, genus
from tropitheta.servicios.homologia import forma_de


@click.command("info", help="Resumen de la curva: tamaño, género, divisor canónico y punto base")
@opcion_curva
@comando_reporte
def info(ruta_curva: str) -> Reporte:
    grafo = leer_curva(ruta_curva)
    return Reporte(
        command="info",
        curve=grafo.name,
        result={
            "vertices": len(grafo.vertices),
            "edges": len(grafo.edges),
            "genus": genus(grafo),
            "total_length": texto_racional(grafo.longitud_total),
            "canonical": divisor_json(canonical_divisor(grafo), grafo),
            "basepoint": punto_salida(grafo.basepoint).model_dump(exclude_none=True),
        },
    )


@click.command("gram", help="Base de ciclos del árbol BFS y su matriz de Gram")
@opcion_curva
@comando_reporte
def gram(ruta_curva: str) -> Reporte:
    grafo = leer_curva(ruta_curva)
    forma = forma_de(grafo)
    base = [
        [f"{e.id}:{c}" for e, c in zip(grafo.edges, ciclo.coeficientes) if c]
        for ciclo in forma.basis
    ]
    return Reporte(
        command="gram",
        curve=grafo.name,
        result={
            "genus": forma.genero,
            "basis": base,
            "gram": [[texto_racional(x) for x in fila] for fila in forma.gram],
        },
    )
