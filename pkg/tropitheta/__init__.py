"""tropitheta: teoría de divisores exacta sobre curvas tropicales compactas."""

__version__ = "1.0.0"
