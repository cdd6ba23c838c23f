"""
Elements of L_{0,n}(sl2) and its localization, identified with their images
under the Alekseev map.

A LoopElement carries its image in U_q(sl2)^{(x) n} (the canonical form, which
decides equality) and optionally the generator word it was built from, kept for
reports. The localization at the xi^{(i)} is represented through the images
Phi_n(delta^{(i)}) = (K^{-1})^{(i)} and Phi_n(delta^{(i)-1}) = K^{(i)}.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

from common.logging_utils import get_logger
from scalar import Q, Q_DIFF, q_power
from uqsl2 import E, F, K, K_INV, TensorElement, coproduct_iterated
from uqsl2.algebra import ScalarTypes
from graphalg.alekseev import GENERATOR_NAMES, gen_matrix, phi1_generators

logger = get_logger("graphalg")


def _wrap(word: Optional[str]) -> Optional[str]:
    if word is None:
        return None
    return word if word.replace("_", "").isalnum() else f"({word})"


@dataclass(frozen=True, eq=False)
class LoopElement:
    """Element of L_{0,n}: its Phi_n image plus an optional generator word."""

    canonical: TensorElement
    word: Optional[str] = None

    @property
    def arity(self) -> int:
        return self.canonical.arity

    @classmethod
    def scalar(cls, value, n: int) -> "LoopElement":
        return cls(TensorElement.identity(n) * value, str(value))

    def _combine(self, other, symbol: str, result: TensorElement) -> "LoopElement":
        word = None
        if self.word is not None and other.word is not None:
            word = f"{_wrap(self.word)} {symbol} {_wrap(other.word)}"
        return LoopElement(result, word)

    def __add__(self, other):
        if isinstance(other, ScalarTypes):
            other = LoopElement.scalar(other, self.arity)
        if not isinstance(other, LoopElement):
            return NotImplemented
        return self._combine(other, "+", self.canonical + other.canonical)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ScalarTypes):
            other = LoopElement.scalar(other, self.arity)
        if not isinstance(other, LoopElement):
            return NotImplemented
        return self._combine(other, "-", self.canonical - other.canonical)

    def __neg__(self):
        return LoopElement(-self.canonical, None if self.word is None else f"-{_wrap(self.word)}")

    def __mul__(self, other):
        if isinstance(other, ScalarTypes):
            word = None if self.word is None else f"({other}) * {_wrap(self.word)}"
            return LoopElement(self.canonical * other, word)
        if not isinstance(other, LoopElement):
            return NotImplemented
        return self._combine(other, "*", self.canonical * other.canonical)

    def __rmul__(self, other):
        if isinstance(other, ScalarTypes):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int):
        word = None if self.word is None else f"{_wrap(self.word)}^{exponent}"
        return LoopElement(self.canonical ** exponent, word)

    def __eq__(self, other):
        if isinstance(other, LoopElement):
            return self.canonical == other.canonical
        return NotImplemented

    def __hash__(self):
        return hash(self.canonical)

    def __bool__(self):
        return bool(self.canonical)

    def __str__(self):
        return str(self.canonical)

    def __repr__(self):
        return f"LoopElement({self.word or '?'}, {len(self.canonical)} terms)"


# ----------------------------------------------------------------------
# generators
# ----------------------------------------------------------------------
@lru_cache(maxsize=None)
def loop_generators(n: int) -> Dict[str, LoopElement]:
    """The 4n generators, keyed 'a1', 'b1', ..., 'd{n}'."""
    generators = {}
    for site in range(1, n + 1):
        matrix = gen_matrix(n, site)
        for name in GENERATOR_NAMES:
            generators[f"{name}{site}"] = LoopElement(matrix.entry(name), f"{name}{site}")
    return generators


def site_loop_matrix(n: int, site: int):
    """[[a, b], [c, d]] of the given site as LoopElements."""
    generators = loop_generators(n)
    return [[generators[f"a{site}"], generators[f"b{site}"]],
            [generators[f"c{site}"], generators[f"d{site}"]]]


def _matrix_product(left, right):
    return [[left[i][0] * right[0][j] + left[i][1] * right[1][j] for j in range(2)] for i in range(2)]


def site_product(n: int, first: int, last: int = None):
    """M^{(first)} ... M^{(last)} as a 2x2 array of LoopElements."""
    last = n if last is None else last
    return tuple_product(n, range(first, last + 1))


def tuple_product(n: int, sites):
    """M^{(i_1)} ... M^{(i_k)} for any sequence of sites."""
    sites = list(sites)
    product = site_loop_matrix(n, sites[0])
    for site in sites[1:]:
        product = _matrix_product(product, site_loop_matrix(n, site))
    return product


def loop_quantum_trace(product) -> LoopElement:
    """qTr of a 2x2 array of LoopElements on the fundamental module."""
    return product[0][0] * Q + product[1][1] * q_power(-1)


# ----------------------------------------------------------------------
# xi, delta and the diagonal embedding
# ----------------------------------------------------------------------
def xi(n: int, i: int) -> LoopElement:
    """xi^{(i)} = (M^{(i)} ... M^{(n)})_{22}; xi^{(n+1)} = 1."""
    if i == n + 1:
        return LoopElement(TensorElement.identity(n), "1")
    if not 1 <= i <= n:
        raise ValueError(f"Index {i} outside 1..{n}")
    element = site_product(n, i)[1][1]
    return LoopElement(element.canonical, f"xi{i}")


def xi_delta(n: int, i: int) -> Tuple[LoopElement, LoopElement, LoopElement]:
    """
    (xi^{(i)}, delta^{(i)}, delta^{(i)-1}) with delta^{(i)} = xi^{(i)} xi^{(i+1)-1}.

    xi^{(i)} is a genuine element of L_{0,n}; delta and its inverse live in the
    localization and are given by their images.
    """
    if not 1 <= i <= n:
        raise ValueError(f"Index {i} outside 1..{n}")
    delta = LoopElement(TensorElement.embed(K_INV, i, n), f"delta{i}")
    delta_inv = LoopElement(TensorElement.embed(K, i, n), f"delta{i}^-1")
    return xi(n, i), delta, delta_inv


def coproduct_image(n: int, element) -> LoopElement:
    """
    Delta^{(n-1)} of an element of L_{0,1} (a LoopElement of arity 1 or its
    PbwElement image) as an element of L_{0,n}.
    """
    if isinstance(element, LoopElement):
        if element.arity != 1:
            raise ValueError(f"Expected an element of L_0,1, got arity {element.arity}")
        image, word = element.canonical.slot_element(), element.word
    else:
        image, word = element, None
    name = None if word is None else f"Delta({word})"
    return LoopElement(coproduct_iterated(image, n), name)


def diagonal_generators(n: int) -> Dict[str, LoopElement]:
    """Delta^{(n-1)}(a), ..., Delta^{(n-1)}(d): the entries of M^{(1)} ... M^{(n)}."""
    product = site_product(n, 1)
    return {name: LoopElement(product[i][j].canonical, f"Delta({name})")
            for name, (i, j) in zip(GENERATOR_NAMES, ((0, 0), (0, 1), (1, 0), (1, 1)))}


# ----------------------------------------------------------------------
# surjectivity after localization
# ----------------------------------------------------------------------
@lru_cache(maxsize=None)
def local_site_generators(n: int, site: int) -> Dict[str, LoopElement]:
    """
    Loop expressions whose images are Phi_1(a), ..., Phi_1(d) placed at one slot.

    Starting from the site matrix, the conjugations by R_{0k} are undone for
    k = n, n-1, ..., site+1 using only the generators and the delta^{(k)+-1}:

        w = W delta^{(k)-1}
        u = U - q^{-1} c' w F_k
        t = T + q c' w F_k
        v = (V - q c' (t - u) K_k F_k + q^2 c'^2 w K_k F_k^2) delta^{(k)}

    with K_k = delta^{(k)-1} and F_k = q c'^{-1} b_local^{(k)}.
    """
    generators = loop_generators(n)
    u, v = generators[f"a{site}"], generators[f"b{site}"]
    w, t = generators[f"c{site}"], generators[f"d{site}"]
    c_prime = Q_DIFF
    for k in range(n, site, -1):
        _, delta, delta_inv = xi_delta(n, k)
        f_k = local_slot_generators(n, k)["F"]
        w = w * delta_inv
        u_new = u - (w * f_k) * (c_prime / Q)
        t_new = t + (w * f_k) * (Q * c_prime)
        v = (v - ((t_new - u_new) * delta_inv * f_k) * (Q * c_prime)
             + (w * delta_inv * f_k * f_k) * (Q * Q * c_prime * c_prime)) * delta
        u, t = u_new, t_new
    logger.debug(f"Site {site} of n={n} unconjugated: {len(v.canonical)} terms in b")
    return {"a": u, "b": v, "c": w, "d": t}


@lru_cache(maxsize=None)
def local_slot_generators(n: int, site: int) -> Dict[str, LoopElement]:
    """Loop expressions for K, K^{-1}, E, F at one slot of U_q(sl2)^{(x) n}."""
    local = local_site_generators(n, site)
    _, delta, delta_inv = xi_delta(n, site)
    return {
        "K": delta_inv,
        "K_INV": delta,
        "F": local["b"] * (Q / Q_DIFF),
        "E": (delta_inv * local["c"]) * (1 / Q_DIFF),
    }


def expected_slot_images(n: int, site: int) -> Dict[str, TensorElement]:
    return {name: TensorElement.embed(element, site, n)
            for name, element in (("K", K), ("K_INV", K_INV), ("E", E), ("F", F))}


def phi1_local_images(n: int, site: int) -> Dict[str, TensorElement]:
    return {name: TensorElement.embed(element, site, n)
            for name, element in zip(GENERATOR_NAMES, phi1_generators())}
