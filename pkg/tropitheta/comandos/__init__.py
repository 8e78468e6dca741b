from . import caracteristicas, curva, divisores, oraculo, theta, verificacion

__all__ = ["caracteristicas", "curva", "divisores", "oraculo", "theta", "verificacion"]
