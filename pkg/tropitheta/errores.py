class ErrorTropitheta(Exception):
    """Error base del paquete"""


class CurvaInvalida(ErrorTropitheta, ValueError):
    """
    Datos de entrada inválidos: archivo mal formado, grafo desconectado,
    longitudes no positivas o infinitas, ids duplicados, puntos fuera de rango
    o funciones PL con pendientes no enteras.
    """


class LimiteExcedido(ErrorTropitheta):
    """
    Se superó un límite de recursos (enumeración 2^g, candidatos de
    Fincke-Pohst o tamaño del modelo unitario).

    Attributes:
        requerido: valor que habría hecho falta (por ejemplo la escala del modelo unitario)
    """

    def __init__(self, mensaje: str, requerido=None):
        super().__init__(mensaje)
        self.requerido = requerido


class InvarianteViolado(ErrorTropitheta):
    """Una postcondición verificada en tiempo de ejecución no se cumplió"""

    def __init__(self, invariante: str, detalle: str = ""):
        super().__init__(f"{invariante}: {detalle}" if detalle else invariante)
        self.invariante = invariante
