import click

from tropitheta.comandos.comun import comando_reporte, leer_curva, leer_divisor, opcion_curva
from tropitheta.schemas.reporte import Reporte, jac_salida
from tropitheta.servicios.divisores import AbelJacobi
from tropitheta.servicios.homologia import forma_de

opcion_archivo = dict(required=True, type=click.Path(exists=True, dir_okay=False))


@click.command("abel-jacobi", help="Imagen μ(D) en J(C) de un divisor")
@opcion_curva
@click.option("--divisor", "ruta_divisor", help="Archivo JSON del divisor", **opcion_archivo)
@comando_reporte
def abel_jacobi(ruta_curva: str, ruta_divisor: str) -> Reporte:
    grafo = leer_curva(ruta_curva)
    d = leer_divisor(grafo, ruta_divisor)
    imagen = AbelJacobi(grafo)(d)
    return Reporte(
        command="abel-jacobi",
        curve=grafo.name,
        result={"degree": d.grado, **jac_salida(imagen).model_dump()},
    )


@click.command("lin-equiv", help="Equivalencia lineal de dos divisores")
@opcion_curva
@click.option("--d1", "ruta_d1", help="Primer divisor", **opcion_archivo)
@click.option("--d2", "ruta_d2", help="Segundo divisor", **opcion_archivo)
@comando_reporte
def lin_equiv(ruta_curva: str, ruta_d1: str, ruta_d2: str) -> Reporte:
    grafo = leer_curva(ruta_curva)
    d1, d2 = leer_divisor(grafo, ruta_d1), leer_divisor(grafo, ruta_d2)
    forma = forma_de(grafo)
    delta = AbelJacobi(grafo, forma)(d1 - d2)
    mismo_grado = d1.grado == d2.grado
    return Reporte(
        command="lin-equiv",
        curve=grafo.name,
        result={
            "equivalent": mismo_grado and delta == forma.cero(),
            "degree_match": mismo_grado,
            "jac_delta": jac_salida(delta).model_dump(),
        },
    )
