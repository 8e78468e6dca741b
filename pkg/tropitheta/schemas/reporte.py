from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from tropitheta.modelos.curva import MetricGraph, Point
from tropitheta.modelos.divisor import Divisor
from tropitheta.modelos.jacobiano import JacPoint
from tropitheta.schemas.curva import PuntoArchivo, TerminoDivisor, texto_racional


class Chequeo(BaseModel):
    """Resultado de una invariante verificada"""
    name: str
    status: Literal["pass", "fail", "skipped"]
    detail: str = ""


class Reporte(BaseModel):
    """
    Reporte de un comando. El JSON es el contrato: orden de campos fijo y
    `timing` solo presente si se pidió explícitamente
    """
    command: str
    curve: str
    result: Dict[str, Any] = Field(default_factory=dict)
    checks: List[Chequeo] = Field(default_factory=list)
    timing: Optional[float] = None

    @property
    def exito(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def a_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)


class JacSalida(BaseModel):
    coords: List[str]
    canonical: List[str]


class ThetaSalida(BaseModel):
    value: str
    argmax: List[List[int]]
    on_divisor: bool


class KappaSalida(BaseModel):
    kappa: JacSalida
    k0: JacSalida
    check_2k0_eq_muK: bool


class CaracteristicaSalida(BaseModel):
    gamma: List[int]
    divisor: List[TerminoDivisor]
    divisor_plus: List[TerminoDivisor]
    class_: JacSalida = Field(..., alias="class")
    half_gamma: JacSalida
    effective: bool
    oracle_effective: Optional[bool] = None

    model_config = {"populate_by_name": True}


def punto_salida(p: Point) -> PuntoArchivo:
    if p.es_vertice:
        return PuntoArchivo(vertex=p.vertex)
    return PuntoArchivo(edge=p.edge, offset=texto_racional(p.offset))


def divisor_salida(d: Divisor, grafo: MetricGraph) -> List[TerminoDivisor]:
    return [TerminoDivisor(point=punto_salida(p), coeff=c) for p, c in d.ordenado(grafo)]


def jac_salida(x: JacPoint) -> JacSalida:
    return JacSalida(
        coords=[texto_racional(c) for c in x.coords],
        canonical=[texto_racional(c) for c in x.canonico],
    )


def divisor_json(d: Divisor, grafo: MetricGraph) -> List[Dict[str, Any]]:
    """Términos del divisor listos para el payload del reporte (sin campos nulos)"""
    return [t.model_dump(exclude_none=True) for t in divisor_salida(d, grafo)]
