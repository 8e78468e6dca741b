import logging
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

load_dotenv()

_NIVELES = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Configuracion(BaseModel):
    """
    Parámetros de ejecución leídos de variables de entorno (o de un archivo .env)
    Los límites protegen las enumeraciones exactas de explosiones combinatorias
    """
    nivel_log: str = Field("WARNING", description="Nivel de logging en stderr")
    semilla: int = Field(0, ge=0, description="Semilla por defecto de las verificaciones aleatorias")
    genero_maximo: int = Field(20, ge=0, description="Tope de g para enumerar 2^g elementos")
    candidatos_maximos: int = Field(10_000_000, ge=1, description="Tope de nodos en Fincke-Pohst")
    aristas_unitarias_maximas: int = Field(1_000_000, ge=1, description="Tope del modelo unitario")
    puntos_aleatorios: int = Field(200, ge=0, description="Muestras de paridad y cuasi-periodicidad")
    desplazamientos_aleatorios: int = Field(50, ge=0, description="Muestras de inversión de Jacobi")

    @field_validator("nivel_log")
    @classmethod
    def validar_nivel(cls, v: str) -> str:
        nivel = v.strip().upper()
        if nivel not in _NIVELES:
            raise ValueError(f"Nivel de log desconocido: {v}")
        return nivel


_VARIABLES = {
    "nivel_log": "TROPITHETA_LOG_LEVEL",
    "semilla": "TROPITHETA_SEED",
    "genero_maximo": "TROPITHETA_MAX_GENUS",
    "candidatos_maximos": "TROPITHETA_MAX_CANDIDATES",
    "aristas_unitarias_maximas": "TROPITHETA_MAX_UNIT_EDGES",
    "puntos_aleatorios": "TROPITHETA_RANDOM_POINTS",
    "desplazamientos_aleatorios": "TROPITHETA_RANDOM_SHIFTS",
}


@lru_cache(maxsize=1)
def obtener_configuracion() -> Configuracion:
    """
    Construye la configuración a partir del entorno.

    Returns:
        Configuracion: valores validados (los ausentes toman su default)

    Raises:
        ValueError: si alguna variable tiene un valor inválido
    """
    valores = {
        campo: os.getenv(variable)
        for campo, variable in _VARIABLES.items()
        if os.getenv(variable) is not None
    }
    try:
        return Configuracion(**valores)
    except ValidationError as e:
        raise ValueError(f"Configuración inválida en variables de entorno: {e}") from e


def configurar_logging(nivel: str = None) -> None:
    """Configura el logging raíz en stderr; stdout queda reservado para los reportes"""
    logging.basicConfig(
        level=nivel or obtener_configuracion().nivel_log,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
