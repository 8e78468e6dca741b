from fractions import Fraction
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

MARCAS_INFINITAS = {"inf", "+inf", "infinity", "+infinity", "∞", "oo"}


def racional(valor: Union[str, int]) -> Fraction:
    """
    Convierte "p/q", "n" o un entero en Fraction.

    Raises:
        ValueError: si el texto no es un racional válido
    """
    if isinstance(valor, bool):
        raise ValueError(f"Racional inválido: {valor!r}")
    if isinstance(valor, int):
        return Fraction(valor)
    texto = str(valor).strip()
    if es_infinito(texto):
        raise ValueError("valor infinito no soportado")
    try:
        return Fraction(texto)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Racional inválido: {valor!r}") from None


def es_infinito(valor) -> bool:
    return isinstance(valor, str) and valor.strip().lower() in MARCAS_INFINITAS


def texto_racional(r: Fraction) -> str:
    """Formato de salida exacto: "p/q" o "n" """
    return str(Fraction(r))


class PuntoArchivo(BaseModel):
    """
    Punto en un archivo: {"vertex": id} o {"edge": id, "offset": "p/q"}
    """
    model_config = ConfigDict(extra="forbid")

    vertex: Optional[str] = Field(None, min_length=1, description="Id de vértice")
    edge: Optional[str] = Field(None, min_length=1, description="Id de arista")
    offset: Optional[Union[str, int]] = Field(None, description="Distancia desde el tail")

    @model_validator(mode="after")
    def validar_forma(self):
        if self.vertex is not None:
            if self.edge is not None or self.offset is not None:
                raise ValueError("Un punto es un vértice o un par (edge, offset), no ambos")
        elif self.edge is None or self.offset is None:
            raise ValueError("Un punto interior necesita 'edge' y 'offset'")
        elif es_infinito(self.offset):
            raise ValueError("offset infinito no soportado en un punto")
        else:
            racional(self.offset)
        return self


class VerticeArchivo(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str = Field(..., min_length=1)


class AristaArchivo(BaseModel):
    """
    Arista del archivo de curva; la longitud se valida como racional positivo
    en `servicios.curva` para distinguir el error de longitud no positiva
    """
    model_config = ConfigDict(extra="forbid")

    id: str = Field(..., min_length=1)
    tail: str = Field(..., min_length=1)
    head: str = Field(..., min_length=1)
    length: Optional[Union[str, int]] = Field(..., description='Racional "p/q"; infinito no soportado')

    @field_validator("length")
    @classmethod
    def validar_longitud(cls, v):
        if v is None or es_infinito(v):
            raise ValueError("longitud infinita no soportada")
        racional(v)
        return v


class CurvaArchivo(BaseModel):
    """
    Esquema del archivo JSON de curva
    """
    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {
                "name": "theta",
                "vertices": [{"id": "u"}, {"id": "v"}],
                "edges": [
                    {"id": "e1", "tail": "u", "head": "v", "length": "1"},
                    {"id": "e2", "tail": "u", "head": "v", "length": "1"},
                    {"id": "e3", "tail": "u", "head": "v", "length": "1"},
                ],
                "basepoint": {"vertex": "u"},
            }
        },
    )

    name: Optional[str] = None
    vertices: List[VerticeArchivo] = Field(..., min_length=1)
    edges: List[AristaArchivo] = Field(default_factory=list)
    basepoint: Optional[PuntoArchivo] = None


class TerminoDivisor(BaseModel):
    model_config = ConfigDict(extra="forbid")

    point: PuntoArchivo
    coeff: int


class DivisorArchivo(BaseModel):
    """Esquema del archivo JSON de divisor"""
    model_config = ConfigDict(extra="forbid")

    divisor: List[TerminoDivisor] = Field(default_factory=list)
