import click

from tropitheta.comandos.comun import comando_reporte, leer_curva, leer_vector, opcion_curva
from tropitheta.modelos.jacobiano import JacPoint
from tropitheta.schemas.curva import texto_racional
from tropitheta.schemas.reporte import (
    Chequeo,
    KappaSalida,
    Reporte,
    ThetaSalida,
    divisor_json,
    jac_salida,
)
from tropitheta.servicios.divisores import AbelJacobi
from tropitheta.servicios.homologia import forma_de
from tropitheta.servicios.theta import compute_kappa, pullback_divisor, theta_eval


@click.command("theta-eval", help="Θ(x), su argmax completo y si x cae en el divisor theta")
@opcion_curva
@click.option("--x", "texto_x", required=True, help='Vector "a,b,..." de racionales p/q')
@comando_reporte
def theta_eval_cmd(ruta_curva: str, texto_x: str) -> Reporte:
    grafo = leer_curva(ruta_curva)
    valor = theta_eval(leer_vector(texto_x), forma_de(grafo))
    salida = ThetaSalida(
        value=texto_racional(valor.value),
        argmax=[list(n) for n in valor.argmax],
        on_divisor=valor.en_esquina,
    )
    return Reporte(command="theta-eval", curve=grafo.name, result=salida.model_dump())


@click.command("kappa", help="Constante de Riemann κ y K_0 = -κ")
@opcion_curva
@comando_reporte
def kappa(ruta_curva: str) -> Reporte:
    grafo = leer_curva(ruta_curva)
    clase = compute_kappa(grafo)
    salida = KappaSalida(
        kappa=jac_salida(clase.kappa),
        k0=jac_salida(clase.k0),
        check_2k0_eq_muK=clase.doble_k0_es_canonico,
    )
    chequeo = Chequeo(name="kappa_2k0_eq_muK", status="pass" if clase.doble_k0_es_canonico else "fail")
    return Reporte(command="kappa", curve=grafo.name, result=salida.model_dump(), checks=[chequeo])


@click.command("pullback", help="Divisor D_λ de p ↦ Θ(μ(p) - λ) con la inversión de Jacobi")
@opcion_curva
@click.option("--shift", "texto_shift", required=True, help='λ como vector "a,b,..."')
@comando_reporte
def pullback(ruta_curva: str, texto_shift: str) -> Reporte:
    grafo = leer_curva(ruta_curva)
    forma = forma_de(grafo)
    lam = JacPoint(leer_vector(texto_shift), forma)
    d = pullback_divisor(lam, grafo, forma)
    clase = compute_kappa(grafo, forma)
    inversion = AbelJacobi(grafo, forma)(d) + clase.kappa == lam
    return Reporte(
        command="pullback",
        curve=grafo.name,
        result={"degree": d.grado, "divisor": divisor_json(d, grafo)},
        checks=[
            Chequeo(name="pullback_effective", status="pass" if d.es_efectivo else "fail"),
            Chequeo(name="jacobi_inversion", status="pass" if inversion else "fail"),
        ],
    )
