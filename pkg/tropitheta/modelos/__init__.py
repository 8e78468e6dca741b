from .curva import Edge, MetricGraph, Point
from .divisor import Divisor, PLFunction
from .jacobiano import Cycle, GramForm, JacPoint, KappaClass, ThetaValue
from .refinamiento import Refinamiento
from .orientacion import GammaClass, Orientation
from .modelo_unitario import UnitModel

__all__ = [
    "Edge", "MetricGraph", "Point", "Divisor", "PLFunction", "Cycle", "GramForm",
    "JacPoint", "KappaClass", "ThetaValue", "Refinamiento", "GammaClass",
    "Orientation", "UnitModel",
]
