"""
Text form of algebra elements.

    element  := "0" | term (" + " term)*
    term     := "[" scalar "] * " monomial (" (x) " monomial)*
    monomial := "F^a K^b E^c"
    scalar   := laurent | "(" laurent ") / (" laurent ")"
    laurent  := "0" | c "*v^" k (" + " c "*v^" k)*

Terms are printed in the canonical monomial order so printing is deterministic,
and parse_element(format_element(u)) == u.
"""

import re
from fractions import Fraction
from typing import Union

from scalar import LaurentPoly, RatFunc
from uqsl2.errors import GrammarError
from uqsl2.pbw import PbwElement, PbwMonomial
from uqsl2.tensor import TensorElement

_MONOMIAL = r"F\^(\d+) K\^(-?\d+) E\^(\d+)"
_MONOMIAL_RE = re.compile(_MONOMIAL)
_PLAIN_MONOMIAL = r"F\^\d+ K\^-?\d+ E\^\d+"
_TERM_RE = re.compile(
    r"\[([^\]]*)\] \* (" + _PLAIN_MONOMIAL + r"(?: \(x\) " + _PLAIN_MONOMIAL + r")*)"
)
_LAURENT_TERM_RE = re.compile(r"(-?\d+(?:/\d+)?)\*v\^(-?\d+)")
_SEPARATOR = " + "


def format_element(element) -> str:
    """Canonical text of a PbwElement, TensorElement or specialized tensor."""
    if not element:
        return "0"
    pieces = []
    for key, coefficient in element:
        if isinstance(key, PbwMonomial):
            monomials = str(key)
        else:
            monomials = " (x) ".join(str(m) for m in key)
        pieces.append(f"[{coefficient}] * {monomials}")
    return _SEPARATOR.join(pieces)


def _parse_laurent(text: str, source: str, offset: int) -> LaurentPoly:
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    coefficients = {}
    position = 0
    while True:
        match = _LAURENT_TERM_RE.match(text, position)
        if match is None:
            raise GrammarError(source, offset + position, "Expected a term c*v^k")
        exponent = int(match.group(2))
        coefficients[exponent] = coefficients.get(exponent, 0) + Fraction(match.group(1))
        position = match.end()
        if position == len(text):
            return LaurentPoly(coefficients)
        if not text.startswith(_SEPARATOR, position):
            raise GrammarError(source, offset + position, "Expected ' + ' between scalar terms")
        position += len(_SEPARATOR)


def parse_scalar(text: str, source: str = None, offset: int = 0) -> RatFunc:
    """Parse the scalar grammar back into a RatFunc."""
    source = text if source is None else source
    text = text.strip()
    if text.startswith("("):
        split = text.find(") / (")
        if split < 0 or not text.endswith(")"):
            raise GrammarError(source, offset, "Malformed quotient")
        numerator = _parse_laurent(text[1:split], source, offset + 1)
        denominator = _parse_laurent(text[split + 5:-1], source, offset + split + 5)
        if denominator.is_zero:
            raise GrammarError(source, offset + split + 5, "Zero denominator")
        return RatFunc.from_parts(numerator, denominator)
    return RatFunc(_parse_laurent(text, source, offset))


def _parse_monomials(text: str):
    return tuple(
        PbwMonomial(int(m.group(1)), int(m.group(2)), int(m.group(3)))
        for m in _MONOMIAL_RE.finditer(text)
    )


def parse_element(text: str) -> Union[PbwElement, TensorElement]:
    """
    Parse element text; single-factor terms give a PbwElement, otherwise a TensorElement.

    Raises:
        GrammarError: on malformed input or terms of mixed arity
    """
    stripped = text.strip()
    if stripped == "0":
        return PbwElement()
    terms = {}
    arity = None
    position = 0
    while True:
        match = _TERM_RE.match(stripped, position)
        if match is None:
            raise GrammarError(stripped, position, "Expected '[scalar] * F^a K^b E^c'")
        coefficient = parse_scalar(match.group(1), stripped, match.start(1))
        key = _parse_monomials(match.group(2))
        if arity is None:
            arity = len(key)
        elif arity != len(key):
            raise GrammarError(stripped, match.start(2), f"Term arity {len(key)} differs from {arity}")
        terms[key] = terms[key] + coefficient if key in terms else coefficient
        position = match.end()
        if position == len(stripped):
            break
        if not stripped.startswith(_SEPARATOR, position):
            raise GrammarError(stripped, position, "Expected ' + ' between terms")
        position += len(_SEPARATOR)
    if arity == 1:
        return PbwElement({key[0]: c for key, c in terms.items()})
    return TensorElement(arity, terms)
