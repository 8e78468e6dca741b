import logging
import random
from dataclasses import replace
from fractions import Fraction
from typing import Callable, List, Optional

from tropitheta import algebra
from tropitheta.config import obtener_configuracion
from tropitheta.errores import ErrorTropitheta, LimiteExcedido
from tropitheta.modelos.curva import MetricGraph
from tropitheta.modelos.divisor import Divisor
from tropitheta.modelos.jacobiano import GramForm, JacPoint, KappaClass
from tropitheta.modelos.orientacion import GammaClass
from tropitheta.schemas.reporte import Chequeo, Reporte
from tropitheta.servicios import aleatorio
from tropitheta.servicios.caracteristicas import TablaCaracteristicas, theta_characteristics
from tropitheta.servicios.curva import canonical_divisor, genus, subdivide_at
from tropitheta.servicios.divisores import AbelJacobi, lin_equiv, principal_divisor, two_torsion
from tropitheta.servicios.homologia import ciclos_simples, forma_de, gram_matrix, q_pair
from tropitheta.servicios.oraculo import (
    cumple_dhar,
    dhar_reduce,
    disparar,
    is_effective_oracle,
    to_unit_model,
)
from tropitheta.servicios.orientacion import (
    char_divisor,
    construir_moderador,
    descomponer_circuitos,
    es_aciclica,
    midpoint_bookkeeping,
    moderator_difference_check,
    orientacion_caracteristica,
)
from tropitheta.servicios.theta import compute_kappa, on_theta_divisor, pullback_divisor, theta_eval

logger = logging.getLogger(__name__)

ARISTAS_CICLOS_SIMPLES = 12
VERTICES_DHAR = 12
SUBDIVISIONES = 5
CONJUNTOS_FUENTE = 10
REDESCOMPOSICIONES = 10


class VerificacionService:
    """
    Ejecuta la batería completa de invariantes sobre una curva.

    Cada grupo agrega Chequeo al reporte. Un LimiteExcedido marca el grupo
    como omitido; cualquier otro error del paquete lo marca como fallido con
    el nombre de la invariante. Toda la aleatoriedad sale de un único
    random.Random con la semilla dada, así que el reporte es reproducible.
    """

    def __init__(self, grafo: MetricGraph, semilla: Optional[int] = None):
        configuracion = obtener_configuracion()
        self.grafo = grafo
        self.semilla = configuracion.semilla if semilla is None else semilla
        self.puntos_aleatorios = configuracion.puntos_aleatorios
        self.desplazamientos_aleatorios = configuracion.desplazamientos_aleatorios
        self.rng = random.Random(self.semilla)
        self.forma: GramForm = forma_de(grafo)
        self.mu = AbelJacobi(grafo, self.forma)
        self.canonico = canonical_divisor(grafo)
        self.chequeos: List[Chequeo] = []
        self._kappa: Optional[KappaClass] = None
        self.tabla: Optional[TablaCaracteristicas] = None

    @property
    def kappa(self) -> KappaClass:
        if self._kappa is None:
            self._kappa = compute_kappa(self.grafo, self.forma)
        return self._kappa

    def _registrar(self, nombre: str, condicion: bool, detalle: str = "") -> bool:
        estado = "pass" if condicion else "fail"
        if not condicion:
            logger.warning("Chequeo fallido: %s %s", nombre, detalle)
        self.chequeos.append(Chequeo(name=nombre, status=estado, detail=detalle))
        return condicion

    def _omitir(self, nombre: str, detalle: str) -> None:
        self.chequeos.append(Chequeo(name=nombre, status="skipped", detail=detalle))

    def _grupo(self, nombre: str, funcion: Callable[[], None]) -> None:
        try:
            funcion()
        except LimiteExcedido as e:
            self._omitir(nombre, str(e))
        except ErrorTropitheta as e:
            self._registrar(nombre, False, str(e))

    def verificar(self) -> Reporte:
        """
        Corre todos los grupos en orden fijo.

        Returns:
            Reporte: conteos de características, κ y la lista de chequeos
        """
        self._grupo("curve", self.verificar_curva)
        self._grupo("divisors", self.verificar_divisores)
        self._grupo("theta", self.verificar_theta)
        self._grupo("moderators", self.verificar_moderadores)
        self._grupo("characteristics", self.verificar_caracteristicas)
        self._grupo("oracle", self.verificar_oraculo)
        self._grupo("refinement", self.verificar_refinamiento)

        resultado = {"genus": genus(self.grafo), "seed": self.semilla}
        if self._kappa is not None:
            resultado["kappa"] = [str(c) for c in self._kappa.kappa.canonico]
        if self.tabla is not None:
            resultado["characteristics"] = len(self.tabla.filas)
            resultado["non_effective"] = len(self.tabla.no_efectivas)
        for estado in ("pass", "fail", "skipped"):
            resultado[estado] = sum(1 for c in self.chequeos if c.status == estado)
        return Reporte(command="verify", curve=self.grafo.name, result=resultado, checks=self.chequeos)

    def verificar_curva(self) -> None:
        g = genus(self.grafo)
        gram = self.forma.gram
        self._registrar("canonical_degree", self.canonico.grado == 2 * g - 2)
        self._registrar("gram_symmetric", algebra.es_simetrica(gram))
        self._registrar("gram_positive_definite", algebra.es_definida_positiva(gram))
        self._registrar(
            "gram_diagonal_lengths",
            all(gram[i][i] == c.longitud(self.grafo) for i, c in enumerate(self.forma.basis)),
        )
        if len(self.grafo.edges) > ARISTAS_CICLOS_SIMPLES:
            self._omitir("simple_cycle_lengths", f"más de {ARISTAS_CICLOS_SIMPLES} aristas")
            return
        self._registrar(
            "simple_cycle_lengths",
            all(
                q_pair(c.coeficientes, c.coeficientes, self.grafo) == c.longitud(self.grafo)
                for c in ciclos_simples(self.grafo)
            ),
        )

    def verificar_divisores(self) -> None:
        cero = self.forma.cero()
        principales = [
            principal_divisor(aleatorio.funcion_pl(self.grafo, self.rng), self.grafo) for _ in range(20)
        ]
        self._registrar("principal_degree_zero", all(d.grado == 0 for d in principales))
        self._registrar("abel_jacobi_principal_zero", all(self.mu(d) == cero for d in principales))
        d = aleatorio.divisor(self.grafo, self.rng)
        self._registrar(
            "lin_equiv_principal", all(lin_equiv(d, d + p, self.grafo, self.forma) for p in principales)
        )

        pares = [
            (aleatorio.divisor(self.grafo, self.rng), aleatorio.divisor(self.grafo, self.rng))
            for _ in range(10)
        ]
        self._registrar(
            "abel_jacobi_additive", all(self.mu(a + b) == self.mu(a) + self.mu(b) for a, b in pares)
        )

        grado_cero = d - Divisor([(aleatorio.punto(self.grafo, self.rng), d.grado)])
        imagen = self.mu(grado_cero)
        self._registrar(
            "abel_jacobi_basepoint_independent",
            all(
                AbelJacobi(replace(self.grafo, basepoint=self.grafo.punto_vertice(v)), self.forma)(grado_cero)
                == imagen
                for v in self.grafo.vertices
            ),
        )
        self._registrar(
            "abel_jacobi_tree_independent",
            all(
                AbelJacobi(self.grafo, self.forma, aleatorio.arbol(self.grafo, self.rng))(d) == self.mu(d)
                for _ in range(3)
            ),
        )

        torsion = [x for _, x in two_torsion(self.grafo, self.forma)]
        self._registrar("two_torsion_count", len(torsion) == 2 ** self.forma.genero)
        self._registrar("two_torsion_double_zero", all(x * 2 == cero for x in torsion))
        self._registrar("two_torsion_distinct", len(set(torsion)) == len(torsion))

    def verificar_theta(self) -> None:
        forma, g = self.forma, self.forma.genero
        muestras = [aleatorio.vector(self.rng, g) for _ in range(self.puntos_aleatorios)]
        valores = [theta_eval(x, forma).value for x in muestras]
        self._registrar(
            "theta_even",
            all(theta_eval(algebra.escalar(-1, x), forma).value == v for x, v in zip(muestras, valores)),
        )
        periodica = True
        for x, v in zip(muestras, valores):
            n = aleatorio.enteros(self.rng, g)
            gn = forma.punto_reticulo(n)
            esperado = v + algebra.producto_punto(n, x) + Fraction(1, 2) * algebra.producto_punto(n, gn)
            periodica &= theta_eval(algebra.suma(x, gn), forma).value == esperado
        self._registrar("theta_quasi_periodic", periodica)
        self._registrar(
            "theta_midpoint_convex",
            all(
                theta_eval(algebra.escalar(Fraction(1, 2), algebra.suma(x, y)), forma).value <= (vx + vy) / 2
                for (x, vx), (y, vy) in zip(zip(muestras, valores), zip(muestras[1:], valores[1:]))
            ),
        )
        self._registrar("theta_zero_off_divisor", not on_theta_divisor(forma.cero().coords, forma))
        self._registrar(
            "two_torsion_on_divisor",
            all(on_theta_divisor(x.coords, forma) for bits, x in two_torsion(self.grafo, forma) if any(bits)),
        )

        kappa = self.kappa
        self._registrar("kappa_2k0_eq_muK", kappa.doble_k0_es_canonico)
        self._registrar("kappa_is_minus_k0", kappa.kappa == -kappa.k0)

        desplazamientos = [kappa.kappa] + [
            JacPoint(aleatorio.vector(self.rng, g), forma) for _ in range(self.desplazamientos_aleatorios)
        ]
        grado = efectivo = inversion = True
        for lam in desplazamientos:
            d = pullback_divisor(lam, self.grafo, forma)
            grado &= d.grado == g
            efectivo &= d.es_efectivo
            inversion &= self.mu(d) + kappa.kappa == lam
        self._registrar("pullback_degree_g", grado)
        self._registrar("pullback_effective", efectivo)
        self._registrar("jacobi_inversion", inversion, f"{len(desplazamientos)} desplazamientos")
        self._registrar(
            "pullback_lattice_invariant",
            all(
                pullback_divisor(lam, self.grafo, forma)
                == pullback_divisor(
                    JacPoint(algebra.suma(lam.coords, forma.punto_reticulo(aleatorio.enteros(self.rng, g))), forma),
                    self.grafo,
                    forma,
                )
                for lam in desplazamientos[:5]
            ),
        )

    def verificar_moderadores(self) -> None:
        g = self.forma.genero
        k0 = self.kappa.k0
        base = construir_moderador(self.grafo, [self.grafo.basepoint]).menos
        fuentes = [aleatorio.puntos(self.grafo, self.rng) for _ in range(CONJUNTOS_FUENTE)]
        moderadores = [construir_moderador(self.grafo, s) for s in fuentes]
        self._registrar(
            "moderator_sum_is_canonical", all(m.mas + m.menos == self.canonico for m in moderadores)
        )
        self._registrar(
            "moderator_difference_is_principal",
            all(m.mas - m.menos == principal_divisor(m.distancia, self.grafo) for m in moderadores),
        )
        self._registrar("moderator_degree", all(m.menos.grado == g - 1 for m in moderadores))
        self._registrar("moderator_acyclic", all(es_aciclica(m.orientacion) for m in moderadores))
        self._registrar("moderator_class_is_k0", all(self.mu(m.menos) == k0 for m in moderadores))
        self._registrar(
            "moderators_linearly_equivalent",
            all(lin_equiv(m.menos, base, self.grafo, self.forma) for m in moderadores),
        )
        self._registrar(
            "moderator_half_distance_difference",
            all(moderator_difference_check(self.grafo, a, b) for a, b in zip(fuentes, fuentes[1:])),
        )

    def verificar_caracteristicas(self) -> None:
        tabla = theta_characteristics(self.grafo, self.forma)
        self.tabla = tabla
        g = self.forma.genero
        filas = tabla.filas
        self._registrar("characteristics_count", len(filas) == 2 ** g)
        self._registrar(
            "exactly_one_non_effective",
            [f.bits for f in tabla.no_efectivas] == [filas[0].bits],
            f"{len(tabla.no_efectivas)} no efectivas",
        )
        self._registrar("non_effective_is_minus_kappa", filas[0].clase == -tabla.kappa.kappa)
        self._registrar("characteristics_injective", len({f.clase for f in filas}) == len(filas))

        suma = resta = efectivas = medios = descomposicion = True
        for fila in filas[1:]:
            moderador = orientacion_caracteristica(fila.gamma, self.grafo)
            suma &= moderador.mas + moderador.menos == self.canonico
            resta &= moderador.mas - moderador.menos == principal_divisor(moderador.distancia, self.grafo)
            efectivas &= fila.divisor.es_efectivo and fila.divisor.grado == g - 1
            contabilidad = midpoint_bookkeeping(fila.gamma, self.grafo)
            medios &= contabilidad.cumple and self.mu(contabilidad.diferencia) == fila.medio_gamma
            descomposicion &= self._redescomponer(fila.gamma, fila.divisor)
        self._registrar("gamma_sum_is_canonical", suma)
        self._registrar("gamma_difference_is_principal", resta)
        self._registrar("gamma_divisor_effective", efectivas)
        self._registrar("midpoint_bookkeeping", medios)
        self._registrar("circuit_decomposition_invariant", descomposicion)

    def _redescomponer(self, gamma: GammaClass, esperado: Divisor) -> bool:
        for _ in range(REDESCOMPOSICIONES):
            orden = list(gamma.support)
            self.rng.shuffle(orden)
            circuitos = descomponer_circuitos(self.grafo, gamma.support, orden)
            if self.rng.random() < 0.5:
                circuitos = tuple(tuple((e, -s) for e, s in reversed(c)) for c in circuitos)
            alternativa = GammaClass(bits=gamma.bits, support=gamma.support, circuits=circuitos)
            if char_divisor(alternativa, self.grafo) != esperado:
                return False
        return True

    def verificar_oraculo(self) -> None:
        if self.tabla is None:
            self._omitir("oracle_agreement", "sin tabla de características")
            return
        q = self.grafo.basepoint
        desacuerdos = [
            f.bits for f in self.tabla.filas
            if is_effective_oracle(self.grafo, f.divisor, q) != f.efectiva
        ]
        self._registrar("oracle_agreement", not desacuerdos, f"desacuerdos: {desacuerdos}")

        modelo, fichas = to_unit_model(self.grafo, self.tabla.filas[0].divisor, q)
        base = modelo.puntos[q]
        reducido = dhar_reduce(modelo, fichas, base)
        self._registrar("moderator_is_reduced", reducido == fichas)
        self._registrar("reduction_idempotent", dhar_reduce(modelo, reducido, base) == reducido)
        disparado = list(fichas)
        disparar(modelo, disparado, {v for v in range(modelo.n) if self.rng.random() < 0.5}, 1)
        self._registrar("reduction_class_invariant", dhar_reduce(modelo, disparado, base) == reducido)
        if modelo.n > VERTICES_DHAR:
            self._omitir("dhar_criterion", f"modelo unitario con {modelo.n} vértices")
        else:
            self._registrar("dhar_criterion", cumple_dhar(modelo, reducido, base))

    def verificar_refinamiento(self) -> None:
        g = genus(self.grafo)
        tabla = self.tabla
        genero = canonico = gram = kappa = caracteristicas = True
        for _ in range(SUBDIVISIONES):
            puntos = aleatorio.puntos(self.grafo, self.rng)
            refinado, refinamiento = subdivide_at(self.grafo, puntos)
            forma = refinamiento.forma(self.forma)
            genero &= genus(refinado) == g
            canonico &= refinamiento.divisor(self.canonico) == canonical_divisor(refinado)
            gram &= gram_matrix(forma.basis, refinado).gram == self.forma.gram
            kappa &= compute_kappa(refinado, forma).kappa == JacPoint(self.kappa.kappa.coords, forma)
            if tabla is not None:
                filas = theta_characteristics(refinado, forma).filas
                caracteristicas &= all(
                    refinamiento.divisor_original(r.divisor) == f.divisor
                    and r.efectiva == f.efectiva
                    and r.clase == JacPoint(f.clase.coords, forma)
                    for r, f in zip(filas, tabla.filas)
                )
        self._registrar("refinement_genus", genero)
        self._registrar("refinement_canonical", canonico)
        self._registrar("refinement_gram", gram)
        self._registrar("refinement_kappa", kappa)
        if tabla is None:
            self._omitir("refinement_characteristics", "sin tabla de características")
        else:
            self._registrar("refinement_characteristics", caracteristicas)
