from .curva import CurvaArchivo, DivisorArchivo, PuntoArchivo, TerminoDivisor, racional, texto_racional
from .reporte import Chequeo, Reporte

__all__ = [
    "CurvaArchivo", "DivisorArchivo", "PuntoArchivo", "TerminoDivisor",
    "racional", "texto_racional", "Chequeo", "Reporte",
]
