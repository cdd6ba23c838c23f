"""
Poisson bracket tables on O(G^n) and on the small center.

A table stores the brackets of all pairs of variables of a VariableSpace and
extends to polynomials by the Leibniz rule

    {f, g} = sum_{u, v} df/du dg/dv {u, v}.

The Fock-Rosly bracket on the matrix entries L^{(i)} = [[a, b], [c, d]] is read
off 4x4 matrix identities with the classical r-matrix

    r = 1/4 H (x) H + E (x) F,    r21 its flip,

namely, for one site and for sites i < j,

    {L1, L2}         = r L1 L2 + L1 r21 L2 - L2 r L1 - L1 L2 r21
    {L1^(i), L2^(j)} = r L1 L2 + L1 L2 r - L2 r L1 - L1 r L2

where L1 = L (x) 1, L2 = 1 (x) L and the entry ((i, k), (j, l)) of the left side
is {L_ij, L_kl}.
"""

import json
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from common.logging_utils import get_logger
from uqsl2 import TensorElement
from repv import AlgebraMatrix, flip_matrix
from qca import central_lift, derivation, generic_lifts
from poisson.commpoly import (
    COORDINATE_NAMES, ENTRY_NAMES, CommPoly, VariableSpace, coordinate_space, matrix_space,
)
from poisson.configs.poisson_config import config
from poisson.coordinates import to_coordinates

logger = get_logger("poisson")

Pair = Tuple[str, str]


@dataclass
class PoissonBracketTable:
    """Brackets {u, v} of the variables of a space, as polynomials of the same space."""

    name: str
    space: VariableSpace
    values: Dict[Pair, CommPoly] = field(default_factory=dict)

    def value(self, u: str, v: str) -> CommPoly:
        if (u, v) in self.values:
            return self.values[(u, v)]
        if (v, u) in self.values:
            return -self.values[(v, u)]
        return self.space.zero

    def bracket(self, f, g) -> CommPoly:
        """Leibniz extension to polynomials (variable names are accepted too)."""
        f, g = self._as_poly(f), self._as_poly(g)
        total = self.space.zero
        g_partials = {v: g.diff(v) for v in g.variables()}
        for u in f.variables():
            df = f.diff(u)
            for v, dg in g_partials.items():
                entry = self.value(u, v)
                if entry:
                    total = total + df * dg * entry
        return total

    def _as_poly(self, value) -> CommPoly:
        return self.space.gen(value) if isinstance(value, str) else value

    # ------------------------------------------------------------------
    # Poisson axioms
    # ------------------------------------------------------------------
    def antisymmetry_residuals(self) -> Dict[str, CommPoly]:
        """{u, v} + {v, u} for every stored pair, including u = v."""
        residuals = {}
        for (u, v), entry in self.values.items():
            if u == v:
                residuals[f"{{{u},{u}}}"] = entry
            elif (v, u) in self.values and u < v:
                residuals[f"{{{u},{v}}} + {{{v},{u}}}"] = entry + self.values[(v, u)]
        return residuals

    def jacobi_residual(self, u: str, v: str, w: str) -> CommPoly:
        return (self.bracket(u, self.value(v, w)) + self.bracket(v, self.value(w, u))
                + self.bracket(w, self.value(u, v)))

    def jacobi_triples(self, sample: int = None, seed: int = 0) -> List[Tuple[str, str, str]]:
        sample = config.jacobi_sample if sample is None else sample
        triples = list(combinations(self.space.names, 3))
        if sample and sample < len(triples):
            triples = sorted(random.Random(seed).sample(triples, sample))
        return triples

    def jacobi_residuals(self, triples: Iterable[Tuple[str, str, str]] = None) -> Dict[str, CommPoly]:
        triples = self.jacobi_triples() if triples is None else triples
        return {f"Jacobi({u},{v},{w})": self.jacobi_residual(u, v, w) for u, v, w in triples}

    # ------------------------------------------------------------------
    # export
    # ------------------------------------------------------------------
    def to_dict(self) -> Dict[str, str]:
        """Pair 'u,v' to polynomial string, for every pair with u before v."""
        names = self.space.names
        return {f"{u},{v}": str(self.value(u, v))
                for i, u in enumerate(names) for v in names[i + 1:]}

    def to_json(self, indent: int = 2) -> str:
        return json.dumps({"table": self.name, "n": self.space.n, "brackets": self.to_dict()},
                          indent=indent)


def _antisymmetric(space: VariableSpace, name: str, upper: Dict[Pair, CommPoly]) -> PoissonBracketTable:
    values = {}
    for (u, v), entry in upper.items():
        values[(u, v)] = entry
        values[(v, u)] = -entry
    return PoissonBracketTable(name, space, values)


# ----------------------------------------------------------------------
# Fock-Rosly
# ----------------------------------------------------------------------
def classical_r_matrix(space: VariableSpace) -> AlgebraMatrix:
    """1/4 H (x) H + E (x) F on C^2 (x) C^2."""
    one, zero = space.one, space.zero
    h = AlgebraMatrix.diagonal([one, -one])
    e = AlgebraMatrix([[zero, one], [zero, zero]])
    f = AlgebraMatrix([[zero, zero], [one, zero]])
    return h.kron(h) * Fraction(1, 4) + e.kron(f)


def site_matrix(space: VariableSpace, site: int) -> AlgebraMatrix:
    gens = space.gens()
    a, b, c, d = (gens[f"{name}{site}"] for name in ENTRY_NAMES)
    return AlgebraMatrix([[a, b], [c, d]])


def _entry_name(site: int, i: int, j: int) -> str:
    return f"{ENTRY_NAMES[2 * i + j]}{site}"


def single_site_bracket_matrix(space: VariableSpace, site: int, literal: bool = False) -> AlgebraMatrix:
    """
    {L1, L2} for one site; with literal=True the variant
    r L1 L2 - L1 L2 r21 + L2 r21 L1 - L1 r L2 is used instead.
    """
    one = space.one
    r = classical_r_matrix(space)
    flip = flip_matrix(2, 2, one, space.zero)
    r21 = flip @ r @ flip
    ident = AlgebraMatrix.identity(2, one, space.zero)
    matrix = site_matrix(space, site)
    l1, l2 = matrix.kron(ident), ident.kron(matrix)
    if literal:
        return r @ l1 @ l2 - l1 @ l2 @ r21 + l2 @ r21 @ l1 - l1 @ r @ l2
    return r @ l1 @ l2 + l1 @ r21 @ l2 - l2 @ r @ l1 - l1 @ l2 @ r21


def cross_site_bracket_matrix(space: VariableSpace, first: int, second: int) -> AlgebraMatrix:
    """{L1^(first), L2^(second)} for first < second."""
    one = space.one
    r = classical_r_matrix(space)
    ident = AlgebraMatrix.identity(2, one, space.zero)
    l1 = site_matrix(space, first).kron(ident)
    l2 = ident.kron(site_matrix(space, second))
    return r @ l1 @ l2 + l1 @ l2 @ r - l2 @ r @ l1 - l1 @ r @ l2


def _read_entries(matrix: AlgebraMatrix, first: int, second: int) -> Dict[Pair, CommPoly]:
    values = {}
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    values[(_entry_name(first, i, j), _entry_name(second, k, l))] = matrix[2 * i + k, 2 * j + l]
    return values


@lru_cache(maxsize=None)
def fr_bracket(n: int, literal: bool = False) -> PoissonBracketTable:
    """The Fock-Rosly bracket on O(G^n): all 16 n^2 generator brackets."""
    space = matrix_space(n)
    values: Dict[Pair, CommPoly] = {}
    for site in range(1, n + 1):
        values.update(_read_entries(single_site_bracket_matrix(space, site, literal), site, site))
    for first, second in combinations(range(1, n + 1), 2):
        for (u, v), entry in _read_entries(cross_site_bracket_matrix(space, first, second),
                                           first, second).items():
            values[(u, v)] = entry
            values[(v, u)] = -entry
    logger.debug(f"Fock-Rosly bracket for n={n}: {len(values)} generator pairs")
    return PoissonBracketTable("literal" if literal else "fock_rosly", space, values)


def conjugation_field(xi: str, f: CommPoly) -> CommPoly:
    """
    The infinitesimal diagonal conjugation L^{(i)} -> [xi, L^{(i)}] applied to f,
    for xi in H, X, Y.
    """
    space = f.space
    one, zero = space.one, space.zero
    generators = {
        "H": [[one, zero], [zero, -one]],
        "X": [[zero, one], [zero, zero]],
        "Y": [[zero, zero], [one, zero]],
    }
    if xi not in generators:
        raise ValueError(f"Unknown sl2 generator '{xi}', expected H, X or Y")
    g = generators[xi]
    total = zero
    for site in range(1, space.n + 1):
        m = site_matrix(space, site)
        for i in range(2):
            for j in range(2):
                name = _entry_name(site, i, j)
                if name not in f.variables():
                    continue
                image = sum((g[i][k] * m[k, j] - m[i, k] * g[k][j] for k in range(2)), zero)
                total = total + f.diff(name) * image
    return total


def trace_function(n: int, sites: Sequence[int]) -> CommPoly:
    """Tr(L^{(i_1)} ... L^{(i_k)}) on G^n."""
    space = matrix_space(n)
    product = site_matrix(space, sites[0])
    for site in sites[1:]:
        product = product @ site_matrix(space, site)
    return product.trace()


def classical_invariance_residuals(n: int) -> Dict[str, CommPoly]:
    """H, X, Y applied to the trace functions of consecutive tuples."""
    residuals = {}
    for length in range(1, n + 1):
        for start in range(1, n - length + 2):
            sites = tuple(range(start, start + length))
            trace = trace_function(n, sites)
            label = "".join(map(str, sites))
            for xi in ("H", "X", "Y"):
                residuals[f"{xi} Tr({label})"] = conjugation_field(xi, trace)
    return residuals


# ----------------------------------------------------------------------
# the bracket on Z_0
# ----------------------------------------------------------------------
def _site_entries(space: VariableSpace, site: int) -> Dict[Pair, CommPoly]:
    g = space.gens()
    x, y, z, z_inv = (g[f"{name}{site}"] for name in COORDINATE_NAMES)
    s = str(site)
    return {
        ("y" + s, "x" + s): -1 + x * y + z_inv * z_inv,
        ("z" + s, "x" + s): -(z * x),
        ("z" + s, "y" + s): y * z,
        ("z_inv" + s, "x" + s): x * z_inv,
        ("z_inv" + s, "y" + s): -(y * z_inv),
        ("z" + s, "z_inv" + s): space.zero,
    }


@lru_cache(maxsize=None)
def qca_bracket_model(n: int) -> PoissonBracketTable:
    """{y,x} = -1 + xy + z^-2, {z,x} = -zx, {z,y} = yz on each site, zero across sites."""
    space = coordinate_space(n)
    upper = {}
    for site in range(1, n + 1):
        upper.update(_site_entries(space, site))
    return _antisymmetric(space, "qca_model", upper)


def poisson_casimir(n: int, site: int) -> CommPoly:
    """-xyz + z + z^{-1} at a site."""
    g = coordinate_space(n).gens()
    x, y, z, z_inv = (g[f"{name}{site}"] for name in COORDINATE_NAMES)
    return -(x * y * z) + z + z_inv


def casimir_residuals(n: int) -> Dict[str, CommPoly]:
    table = qca_bracket_model(n)
    return {f"{{C{site}, {name}}}": table.bracket(poisson_casimir(n, site), name)
            for site in range(1, n + 1) for name in table.space.names}


_CENTRAL_NAME = re.compile(r"^(x|y|z|z_inv|e|f|omega)(\d*)$")


def _parse(name: str, n: int) -> Tuple[str, int]:
    match = _CENTRAL_NAME.match(name)
    if match is None:
        raise ValueError(f"Unknown central element '{name}'")
    stem, digits = match.groups()
    site = int(digits) if digits else 1
    if not 1 <= site <= n:
        raise ValueError(f"Site {site} of '{name}' outside 1..{n}")
    return stem, site


def qca_bracket_from_derivations(pair: Pair, l: int, n: int = 1) -> CommPoly:
    """
    {a, b}_QCA = D_a(b) computed from the commutator formula and read in the
    coordinates; names are like 'y', 'x2' or 'omega1'.
    """
    (a_stem, a_site), (b_stem, b_site) = (_parse(name, n) for name in pair)
    a = central_lift(a_stem, l, a_site, n)
    b = TensorElement.embed(generic_lifts(l)[b_stem], b_site, n)
    return to_coordinates(derivation(a, b, l))


@lru_cache(maxsize=None)
def qca_bracket_derived(n: int, l: int) -> PoissonBracketTable:
    """The bracket table of the coordinates computed through derivations."""
    space = coordinate_space(n)
    values = {(u, v): qca_bracket_from_derivations((u, v), l, n)
              for u in space.names for v in space.names}
    return PoissonBracketTable(f"qca_derived_l{l}", space, values)


def model_agreement_residuals(n: int, l: int, pairs: Optional[Iterable[Pair]] = None) -> Dict[str, CommPoly]:
    """Derived bracket minus the model, on the given pairs (all pairs by default)."""
    model = qca_bracket_model(n)
    names = model.space.names
    pairs = [(u, v) for u in names for v in names if u != v] if pairs is None else pairs
    return {f"{{{u},{v}}}": qca_bracket_from_derivations((u, v), l, n) - model.value(u, v)
            for u, v in pairs}
