from .verificacion import VerificacionService

__all__ = ["VerificacionService"]
