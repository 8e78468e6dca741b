from .configuracion import Configuracion, obtener_configuracion, configurar_logging

__all__ = ["Configuracion", "obtener_configuracion", "configurar_logging"]
