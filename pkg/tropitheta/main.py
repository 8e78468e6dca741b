import click

from tropitheta import __version__
from tropitheta.comandos import caracteristicas, curva, divisores, oraculo, theta, verificacion
from tropitheta.config import configurar_logging


@click.group(help="Teoría de divisores exacta de curvas tropicales: Jacobiano, theta y características")
@click.version_option(__version__, prog_name="tropitheta")
@click.option("--log-level", "nivel_log", help="Nivel de logging en stderr (por defecto TROPITHETA_LOG_LEVEL)")
def cli(nivel_log):
    configurar_logging(nivel_log.upper() if nivel_log else None)


cli.add_command(curva.info)
cli.add_command(curva.gram)
cli.add_command(divisores.abel_jacobi)
cli.add_command(divisores.lin_equiv)
cli.add_command(theta.theta_eval_cmd)
cli.add_command(theta.kappa)
cli.add_command(theta.pullback)
cli.add_command(caracteristicas.theta_chars)
cli.add_command(caracteristicas.export_dot)
cli.add_command(oraculo.reduce)
cli.add_command(verificacion.verify)
