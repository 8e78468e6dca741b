import pytest

from tropitheta.config import obtener_configuracion
from tropitheta.servicios import VerificacionService


@pytest.fixture(autouse=True)
def configuracion_ligera(monkeypatch):
    monkeypatch.setenv("TROPITHETA_RANDOM_POINTS", "20")
    monkeypatch.setenv("TROPITHETA_RANDOM_SHIFTS", "5")
    obtener_configuracion.cache_clear()
    yield
    obtener_configuracion.cache_clear()


def _fallidos(reporte):
    return [c.name for c in reporte.checks if c.status == "fail"]


def test_verifica_circulo(circulo):
    reporte = VerificacionService(circulo, semilla=0).verificar()
    assert _fallidos(reporte) == []
    assert reporte.exito
    assert reporte.result["characteristics"] == 2
    assert reporte.result["non_effective"] == 1
    assert reporte.result["kappa"] == ["1"]
    assert reporte.result["fail"] == 0


@pytest.mark.parametrize("semilla", range(10))
def test_circulo_pasa_con_cualquier_semilla(circulo, semilla):
    reporte = VerificacionService(circulo, semilla=semilla).verificar()
    assert _fallidos(reporte) == []
    nombres = {c.name for c in reporte.checks}
    assert {"moderator_class_is_k0", "moderator_half_distance_difference"} <= nombres


@pytest.mark.parametrize("nombre", ["theta_unitaria", "theta_longitudes", "pesas", "k4"])
def test_verifica_curvas_de_prueba(nombre, request):
    grafo = request.getfixturevalue(nombre)
    reporte = VerificacionService(grafo, semilla=1).verificar()
    assert _fallidos(reporte) == []
    assert reporte.result["characteristics"] == 2 ** reporte.result["genus"]
    assert reporte.result["non_effective"] == 1


def test_verificacion_reproducible(theta_longitudes):
    a = VerificacionService(theta_longitudes, semilla=4).verificar()
    b = VerificacionService(theta_longitudes, semilla=4).verificar()
    assert a.a_json() == b.a_json()


def test_semilla_por_defecto_de_la_configuracion(monkeypatch, circulo):
    monkeypatch.setenv("TROPITHETA_SEED", "9")
    obtener_configuracion.cache_clear()
    assert VerificacionService(circulo).semilla == 9


def test_configuracion_invalida(monkeypatch):
    monkeypatch.setenv("TROPITHETA_MAX_GENUS", "-1")
    obtener_configuracion.cache_clear()
    with pytest.raises(ValueError):
        obtener_configuracion()


def test_limite_omite_el_grupo(monkeypatch, k4):
    monkeypatch.setenv("TROPITHETA_MAX_GENUS", "2")
    obtener_configuracion.cache_clear()
    reporte = VerificacionService(k4, semilla=0).verificar()
    omitidos = [c.name for c in reporte.checks if c.status == "skipped"]
    assert "characteristics" in omitidos
    assert "characteristics" not in reporte.result
