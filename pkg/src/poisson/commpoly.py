"""
Commutative polynomials in named variables, kept in a normal form.

Three variable spaces are used, each for a given number n of sites:

    coordinates   x{i}, y{i}, z{i}, z_inv{i}     with z{i} z_inv{i} = 1
    matrix        a{i}, b{i}, c{i}, d{i}         with a{i} d{i} - b{i} c{i} = 1
    dressing      x{i}, y{i}, zp{i}, zp_inv{i}   with zp{i} zp_inv{i} = 1 and z = zp^2

In the lex order of the listed variables the relations have pairwise coprime
leading monomials, so the remainder on division by them is a normal form and
equality of normalized polynomials is structural.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, wraps
from typing import Dict, Iterator, Mapping, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from scalar.laurent import from_qq, to_qq

ENTRY_NAMES = ("a", "b", "c", "d")
COORDINATE_NAMES = ("x", "y", "z", "z_inv")
DRESSING_NAMES = ("x", "y", "zp", "zp_inv")


@dataclass(frozen=True, eq=False)
class VariableSpace:
    """Polynomial ring over Q in named variables together with its relations."""

    kind: str
    n: int
    names: Tuple[str, ...]
    poly_ring: object
    relations: Tuple = ()

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"No variable '{name}' in the {self.kind} space of n={self.n}") from None

    def gen(self, name: str) -> "CommPoly":
        return CommPoly(self, self.poly_ring.gens[self.index(name)])

    def gens(self) -> Dict[str, "CommPoly"]:
        return {name: self.gen(name) for name in self.names}

    def constant(self, value) -> "CommPoly":
        return CommPoly(self, self.poly_ring.ground_new(to_qq(value)))

    @property
    def zero(self) -> "CommPoly":
        return CommPoly(self)

    @property
    def one(self) -> "CommPoly":
        return self.constant(1)

    def __eq__(self, other):
        if not isinstance(other, VariableSpace):
            return NotImplemented
        return (self.kind, self.n) == (other.kind, other.n)

    def __hash__(self):
        return hash((self.kind, self.n))

    def __repr__(self):
        return f"VariableSpace({self.kind}, n={self.n})"


def _space(kind: str, n: int, stems: Tuple[str, ...], relation) -> VariableSpace:
    if n < 1:
        raise ValueError(f"Number of sites must be positive, got {n}")
    names = tuple(f"{stem}{site}" for site in range(1, n + 1) for stem in stems)
    poly_ring, *gens = ring(",".join(names), QQ)
    by_name = dict(zip(names, gens))
    relations = tuple(relation(by_name, site) for site in range(1, n + 1))
    return VariableSpace(kind, n, names, poly_ring, relations)


_SPACE_LOCK = threading.Lock()


def _one_space_per_size(factory):
    """Memoize a space factory so that concurrent callers share one instance."""
    cached = lru_cache(maxsize=None)(factory)

    @wraps(factory)
    def locked(n: int) -> VariableSpace:
        with _SPACE_LOCK:
            return cached(n)

    locked.cache_clear = cached.cache_clear
    locked.cache_info = cached.cache_info
    return locked


@_one_space_per_size
def coordinate_space(n: int) -> VariableSpace:
    return _space("coordinates", n, COORDINATE_NAMES,
                  lambda g, i: g[f"z{i}"] * g[f"z_inv{i}"] - 1)


@_one_space_per_size
def matrix_space(n: int) -> VariableSpace:
    return _space("matrix", n, ENTRY_NAMES,
                  lambda g, i: g[f"a{i}"] * g[f"d{i}"] - g[f"b{i}"] * g[f"c{i}"] - 1)


@_one_space_per_size
def dressing_space(n: int) -> VariableSpace:
    return _space("dressing", n, DRESSING_NAMES,
                  lambda g, i: g[f"zp{i}"] * g[f"zp_inv{i}"] - 1)


class CommPoly:
    """Immutable polynomial of a VariableSpace in normal form."""

    __slots__ = ("space", "_poly")

    def __init__(self, space: VariableSpace, poly=None):
        self.space = space
        if poly is None:
            poly = space.poly_ring.zero
        if poly and space.relations:
            poly = poly.rem(list(space.relations))
        self._poly = poly

    # ------------------------------------------------------------------
    # views
    # ------------------------------------------------------------------
    @property
    def poly(self):
        """Underlying sympy ring element."""
        return self._poly

    def terms(self) -> Iterator[Tuple[Dict[str, int], Fraction]]:
        """(exponents by variable name, coefficient) for every term."""
        names = self.space.names
        for monom, coefficient in self._poly.terms():
            yield {names[k]: e for k, e in enumerate(monom) if e}, from_qq(coefficient)

    def variables(self) -> Tuple[str, ...]:
        used = set()
        for exponents, _ in self.terms():
            used.update(exponents)
        return tuple(name for name in self.space.names if name in used)

    def degree_in(self, name: str) -> int:
        return max((exponents.get(name, 0) for exponents, _ in self.terms()), default=0)

    def is_constant(self) -> bool:
        return not self.variables()

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CommPoly):
            if other.space != self.space:
                raise TypeError(f"Cannot combine polynomials of {self.space!r} and {other.space!r}")
            return other._poly
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, Fraction)):
            return self.space.poly_ring.ground_new(to_qq(other))
        return None

    def __add__(self, other):
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return CommPoly(self.space, self._poly + poly)

    __radd__ = __add__

    def __sub__(self, other):
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return CommPoly(self.space, self._poly - poly)

    def __rsub__(self, other):
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return CommPoly(self.space, poly - self._poly)

    def __neg__(self):
        return CommPoly(self.space, -self._poly)

    def __mul__(self, other):
        poly = self._coerce(other)
        if poly is None:
            return NotImplemented
        return CommPoly(self.space, self._poly * poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Negative powers of polynomials are not defined")
        result = self.space.one
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self):
        return bool(self._poly)

    def __eq__(self, other):
        try:
            poly = self._coerce(other)
        except TypeError:
            return False
        if poly is None:
            return NotImplemented
        return self._poly == poly

    def __hash__(self):
        return hash((self.space.kind, self.space.n, frozenset(self._poly.items())))

    # ------------------------------------------------------------------
    # calculus and substitution
    # ------------------------------------------------------------------
    def diff(self, name: str) -> "CommPoly":
        """Partial derivative of the normal form with respect to one variable."""
        generator = self.space.poly_ring.gens[self.space.index(name)]
        return CommPoly(self.space, self._poly.diff(generator))

    def evaluate(self, images: Mapping[str, object], one):
        """
        The polynomial with every variable replaced by its image.

        `one` is the unit of the target ring; images may be polynomials of another
        space or any commutative ring elements supporting +, * and integer powers.
        """
        total = one * 0
        powers: Dict[Tuple[str, int], object] = {}
        for exponents, coefficient in self.terms():
            term = one * coefficient
            for name, k in exponents.items():
                if (name, k) not in powers:
                    powers[(name, k)] = images[name] ** k
                term = term * powers[(name, k)]
            total = total + term
        return total

    def __str__(self):
        return str(self._poly)

    def __repr__(self):
        return f"CommPoly({self.space.kind}, n={self.space.n}, {self._poly})"


def determinant(matrix) -> CommPoly:
    return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]


def inverse_unimodular(matrix):
    """Inverse of a 2x2 matrix of determinant 1, by the adjugate."""
    (a, b), (c, d) = matrix
    return [[d, -b], [-c, a]]


def matmul2(left, right):
    return [[left[i][0] * right[0][j] + left[i][1] * right[1][j] for j in range(2)]
            for i in range(2)]
