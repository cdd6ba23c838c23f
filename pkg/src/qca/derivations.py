"""
Quantum coadjoint derivations.

    D_a(u) = - lim_{q -> eps} [a~, u~] / (l (q^l - q^{-l}))

for a central at eps. The commutator is taken over Q(v), divided as rational
functions and then specialized; a pole at that point means the commutator was
not divisible and is reported as an error.

A DerivationValue stores a derivation by its values on E, F, K, K^{-1} of each
slot and extends to all of U_eps^{(x) n} by the Leibniz rule.

With these lifts the triple closes exactly on the center and on K^{+-1}; on E
and F the bracket [E, F] differs from H by the inner derivation returned by
triple_defect.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple

from common.logging_utils import get_logger
from scalar import PoleAtSpecialization, q_power
from uqsl2 import E, F, K, K_INV, PbwElement, TensorElement, commutator
from graphalg import LoopElement
from rootcenter import EpsTensorElement, as_root, embed_at, slot_coordinates, specialize_element
from qca.lifts import CentralLift, diagonal_lift

logger = get_logger("qca")

GENERATORS = ("E", "F", "K", "K_INV")
_PBW_GENERATORS = {"E": E, "F": F, "K": K, "K_INV": K_INV}

SlotGenerator = Tuple[int, str]


def _as_tensor(element, arity: int = None) -> TensorElement:
    if isinstance(element, CentralLift):
        element = element.lift
    elif isinstance(element, LoopElement):
        element = element.canonical
    if isinstance(element, PbwElement):
        element = TensorElement.embed(element, 1, 1)
    if not isinstance(element, TensorElement):
        raise TypeError(f"Expected a q-dependent element, got {element!r}")
    if arity is not None and element.arity != arity:
        raise ValueError(f"Arity {element.arity} does not match {arity}")
    return element


def limit_denominator(l: int):
    """l (q^l - q^{-l})."""
    return (q_power(l) - q_power(-l)) * l


def derivation(a, u, l: int) -> EpsTensorElement:
    """
    D_a(u) from lifts of a and u.

    Raises:
        PoleAtSpecialization: if [a~, u~] is not divisible by q^l - q^{-l}
    """
    a_lift = _as_tensor(a)
    u_lift = _as_tensor(u, a_lift.arity)
    quotient = commutator(a_lift, u_lift) / limit_denominator(l)
    try:
        return -specialize_element(quotient, as_root(l))
    except PoleAtSpecialization as e:
        logger.error(f"[{a}, u] is not divisible by q^{l} - q^-{l}: {e}")
        raise


# ----------------------------------------------------------------------
# derivations stored on generators
# ----------------------------------------------------------------------
@lru_cache(maxsize=None)
def slot_generators(arity: int, l: int) -> Dict[SlotGenerator, EpsTensorElement]:
    return {(slot, name): embed_at(generator, slot, arity, l)
            for slot in range(1, arity + 1) for name, generator in _PBW_GENERATORS.items()}


def monomial_word(key) -> List[SlotGenerator]:
    """The generator word whose product is the tensor monomial, slot by slot."""
    word = []
    for slot, monomial in enumerate(key, start=1):
        word.extend([(slot, "F")] * monomial.f_exp)
        k_name = "K" if monomial.k_exp >= 0 else "K_INV"
        word.extend([(slot, k_name)] * abs(monomial.k_exp))
        word.extend([(slot, "E")] * monomial.e_exp)
    return word


class DerivationValue:
    """A derivation of U_eps^{(x) arity} given on the generators of every slot."""

    def __init__(self, arity: int, l: int, table: Mapping[SlotGenerator, EpsTensorElement],
                 name: str = "D"):
        self.arity = arity
        self.l = l
        self.name = name
        self._table = {key: table.get(key, EpsTensorElement(arity, l))
                       for key in slot_generators(arity, l)}
        self._monomials: Dict[tuple, EpsTensorElement] = {}

    @classmethod
    def of_central(cls, a, l: int, name: str = None) -> "DerivationValue":
        """D_a evaluated on every slot generator through the commutator formula."""
        lift = _as_tensor(a)
        table = {(slot, generator): derivation(
                     lift, TensorElement.embed(_PBW_GENERATORS[generator], slot, lift.arity), l)
                 for slot in range(1, lift.arity + 1) for generator in GENERATORS}
        return cls(lift.arity, l, table, name or f"D_{a}")

    @classmethod
    def zero(cls, arity: int, l: int) -> "DerivationValue":
        return cls(arity, l, {}, "0")

    @classmethod
    def inner(cls, j: EpsTensorElement, name: str = None) -> "DerivationValue":
        """ad(j): u -> j u - u j."""
        l = j.root.l
        table = {key: j * generator - generator * j
                 for key, generator in slot_generators(j.arity, l).items()}
        return cls(j.arity, l, table, name or "ad")

    def value(self, slot: int, generator: str) -> EpsTensorElement:
        return self._table[(slot, generator)]

    @property
    def table(self) -> Dict[SlotGenerator, EpsTensorElement]:
        return dict(self._table)

    # ------------------------------------------------------------------
    # evaluation
    # ------------------------------------------------------------------
    def _on_monomial(self, key) -> EpsTensorElement:
        cached = self._monomials.get(key)
        if cached is not None:
            return cached
        word = monomial_word(key)
        generators = slot_generators(self.arity, self.l)
        unit = EpsTensorElement.identity(self.arity, self.l)
        suffixes = [unit]
        for letter in reversed(word):
            suffixes.append(generators[letter] * suffixes[-1])
        suffixes.reverse()
        total = EpsTensorElement(self.arity, self.l)
        prefix = unit
        for position, letter in enumerate(word):
            total = total + prefix * self._table[letter] * suffixes[position + 1]
            prefix = prefix * generators[letter]
        self._monomials[key] = total
        return total

    def __call__(self, element) -> EpsTensorElement:
        if not isinstance(element, EpsTensorElement):
            element = specialize_element(_as_tensor(element, self.arity), self.l)
        total = EpsTensorElement(self.arity, self.l)
        for key, coefficient in element.terms.items():
            total = total + self._on_monomial(key) * coefficient
        return total

    def iterate(self, element, times: int) -> EpsTensorElement:
        for _ in range(times):
            element = self(element)
        return element

    # ------------------------------------------------------------------
    # linear structure
    # ------------------------------------------------------------------
    def _combine(self, other: "DerivationValue", sign: int, symbol: str) -> "DerivationValue":
        if (self.arity, self.l) != (other.arity, other.l):
            raise ValueError(f"Cannot combine derivations of U_eps^(x){self.arity} and U_eps^(x){other.arity}")
        table = {key: value + other._table[key] * sign for key, value in self._table.items()}
        return DerivationValue(self.arity, self.l, table, f"{self.name} {symbol} {other.name}")

    def __add__(self, other):
        return self._combine(other, 1, "+")

    def __sub__(self, other):
        return self._combine(other, -1, "-")

    def __mul__(self, value):
        table = {key: entry * value for key, entry in self._table.items()}
        return DerivationValue(self.arity, self.l, table, f"{value}*{self.name}")

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def times(self, factor: EpsTensorElement, label: str = None) -> "DerivationValue":
        """factor * D for a central factor, again a derivation."""
        table = {key: factor * entry for key, entry in self._table.items()}
        return DerivationValue(self.arity, self.l, table, f"{label or 'c'}*{self.name}")

    def bracket(self, other: "DerivationValue") -> "DerivationValue":
        """[D1, D2] = D1 D2 - D2 D1, again a derivation."""
        table = {key: self(other._table[key]) - other(self._table[key]) for key in self._table}
        return DerivationValue(self.arity, self.l, table, f"[{self.name}, {other.name}]")

    def residuals(self, other: "DerivationValue") -> Dict[str, EpsTensorElement]:
        """Differences on every slot generator, keyed like 'E1', 'K_INV2'."""
        return {f"{generator}{slot}": value - other._table[(slot, generator)]
                for (slot, generator), value in self._table.items()}

    def relation_residuals(self) -> Dict[str, EpsTensorElement]:
        """
        D applied to the defining relations of every slot; all vanish exactly when
        the Leibniz extension from the generator table is well defined.
        """
        generators = slot_generators(self.arity, self.l)
        eps = as_root(self.l).eps
        q2, c_diff = eps ** 2, eps - eps ** -1
        residuals = {}
        for slot in range(1, self.arity + 1):
            e, f, k, k_inv = (generators[(slot, name)] for name in GENERATORS)
            de, df, dk, dk_inv = (self._table[(slot, name)] for name in GENERATORS)
            residuals[f"D(K K^-1){slot}"] = dk * k_inv + k * dk_inv
            residuals[f"D(K E - q^2 E K){slot}"] = dk * e + k * de - (de * k + e * dk) * q2
            residuals[f"D(K F - q^-2 F K){slot}"] = dk * f + k * df - (df * k + f * dk) * q2.inverse()
            residuals[f"D([E, F] - [K;0]){slot}"] = (de * f + e * df - df * e - f * de) * c_diff - (dk - dk_inv)
        return residuals

    def __repr__(self):
        return f"DerivationValue({self.name}, arity={self.arity}, l={self.l})"


# ----------------------------------------------------------------------
# checks on the commutator formula
# ----------------------------------------------------------------------
def leibniz_residual(a, u, w, l: int) -> EpsTensorElement:
    """D_a(uw) - D_a(u) w - u D_a(w), each term from the commutator formula."""
    lift = _as_tensor(a)
    u_lift, w_lift = _as_tensor(u, lift.arity), _as_tensor(w, lift.arity)
    u_eps, w_eps = specialize_element(u_lift, l), specialize_element(w_lift, l)
    return (derivation(lift, u_lift * w_lift, l) - derivation(lift, u_lift, l) * w_eps
            - u_eps * derivation(lift, w_lift, l))


def extension_residual(a, u, l: int) -> EpsTensorElement:
    """Commutator formula minus the Leibniz extension of the generator table."""
    return derivation(a, u, l) - DerivationValue.of_central(a, l)(u)


def lift_independence_residuals(a, u, l: int, junk: Iterable) -> Dict[str, EpsTensorElement]:
    """D_a(u~) - D_a(u~ + (q^l - q^{-l}) j) for each junk element j."""
    lift = _as_tensor(a)
    u_lift = _as_tensor(u, lift.arity)
    base = derivation(lift, u_lift, l)
    shift = q_power(l) - q_power(-l)
    return {f"junk {index}": base - derivation(lift, u_lift + _as_tensor(j, lift.arity) * shift, l)
            for index, j in enumerate(junk)}


def bracket_defect(a, b, bracket, l: int) -> EpsTensorElement:
    """
    The element J with [D_a, D_b] = D_{a,b} + ad(J) / l^2.

    bracket is a lift of {a, b} = D_a(b); then

        J = lim_{q -> eps} ([a~, b~] / h + l {a, b}~) / h,    h = q^l - q^{-l}

    Changing the lift of {a, b} changes J by a central element; changing the
    lifts of a or b changes ad(J).
    """
    a_lift = _as_tensor(a)
    b_lift = _as_tensor(b, a_lift.arity)
    bracket_lift = _as_tensor(bracket, a_lift.arity)
    h = q_power(l) - q_power(-l)
    second = (commutator(a_lift, b_lift) / h + bracket_lift * l) / h
    try:
        return specialize_element(second, as_root(l))
    except PoleAtSpecialization as e:
        logger.error(f"{{{a}, {b}}} does not match the given lift to first order: {e}")
        raise


@lru_cache(maxsize=None)
def script_triple(n: int, l: int) -> Dict[str, DerivationValue]:
    """
    E^Delta = Delta(z) D_Delta(x), F^Delta = -Delta(z) D_Delta(y), H^Delta = -2 Delta(z)^{-1} D_Delta(z)
    on U_eps^{(x) n}, with Delta = Delta^{(n-1)}; for n = 1 the triple E = z D_x, F = -z D_y, H = -2 z^{-1} D_z.
    """
    z = diagonal_lift("z", l, n).at_eps()
    z_inv = diagonal_lift("z_inv", l, n).at_eps()
    triple = {
        "E": DerivationValue.of_central(diagonal_lift("x", l, n), l).times(z, "z"),
        "F": -DerivationValue.of_central(diagonal_lift("y", l, n), l).times(z, "z"),
        "H": DerivationValue.of_central(diagonal_lift("z", l, n), l).times(z_inv, "z^-1") * -2,
    }
    for key, value in triple.items():
        value.name = key if n == 1 else f"{key}^Delta"
    logger.debug(f"Built the triple on U_eps^(x){n} at l={l}")
    return triple


@lru_cache(maxsize=None)
def triple_defect(n: int, l: int) -> DerivationValue:
    """
    [E, F] - H as an inner derivation: -(z^2 / l^2) ad(J), J the bracket defect of
    x and y with {x, y} = 1 - x y - z^{-2} (all taken through Delta^{(n-1)}).
    """
    x, y, z, z_inv = (diagonal_lift(name, l, n) for name in ("x", "y", "z", "z_inv"))
    bracket = TensorElement.identity(n) - x.lift * y.lift - z_inv.lift * z_inv.lift
    j = bracket_defect(x, y, bracket, l)
    z_eps = z.at_eps()
    defect = DerivationValue.inner(j, "ad(J)").times(z_eps * z_eps, "z^2") * Fraction(-1, l * l)
    defect.name = "[E,F] - H"
    return defect
