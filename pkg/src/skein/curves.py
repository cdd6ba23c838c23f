"""
Wilson loops of the curves with closed-form images in L_{0,n}.

Three classes of simple closed curves on the n-punctured disk are handled:

    boundary:i     parallel to the i-th puncture          W = omega^{(i)}
    outer          parallel to the outer boundary         W = eta
    arc:i..j       bounding the punctures i, ..., j       W = qTr(M^{(i)} ... M^{(j)})

A curve may carry a Chebyshev power c (the value is T_c(W)) and a linking
exponent lk (the value is multiplied by i^lk).
"""

import re
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from common.logging_utils import get_logger
from scalar import chebyshev_apply, root_of_unity
from uqsl2 import TensorElement
from graphalg import LoopElement, eta, loop_quantum_trace, omega, tuple_product
from rootcenter import EpsTensorElement, chebyshev_of, specialize_element
from skein.errors import CurveSpecError

logger = get_logger("skein")

CURVE_KINDS = ("boundary", "outer", "arc")

_CURVE = re.compile(
    r"^(?P<kind>boundary|outer|arc)"
    r"(?::(?P<first>\d+)(?:\.\.(?P<last>\d+))?)?"
    r"(?:\^(?P<power>\d+|l))?"
    r"(?:@(?P<linking>-?\d+))?$"
)


@dataclass(frozen=True)
class CurveSpec:
    """A boundary-parallel or consecutive-puncture curve with its decorations."""

    kind: str
    site: int = 1
    length: int = 1
    power: int = 1
    linking: int = 0

    def __post_init__(self):
        if self.kind not in CURVE_KINDS:
            raise CurveSpecError(self.label(), f"kind must be one of {', '.join(CURVE_KINDS)}")
        if self.site < 1 or self.length < 1:
            raise CurveSpecError(self.label(), "sites are numbered from 1")
        if self.power < 1:
            raise CurveSpecError(self.label(), "the Chebyshev power must be at least 1")

    @classmethod
    def boundary(cls, site: int, power: int = 1, linking: int = 0) -> "CurveSpec":
        return cls("boundary", site, 1, power, linking)

    @classmethod
    def outer(cls, power: int = 1, linking: int = 0) -> "CurveSpec":
        return cls("outer", 1, 1, power, linking)

    @classmethod
    def arc(cls, site: int, length: int, power: int = 1, linking: int = 0) -> "CurveSpec":
        return cls("arc", site, length, power, linking)

    def sites(self, n: int) -> Tuple[int, ...]:
        """The punctures the curve encloses."""
        if self.kind == "outer":
            return tuple(range(1, n + 1))
        return tuple(range(self.site, self.site + self.length))

    def validate(self, n: int) -> "CurveSpec":
        sites = self.sites(n)
        if sites[-1] > n:
            raise CurveSpecError(self.label(), f"puncture {sites[-1]} outside 1..{n}")
        return self

    def label(self) -> str:
        if self.kind == "outer":
            text = "outer"
        elif self.kind == "boundary":
            text = f"boundary:{self.site}"
        else:
            text = f"arc:{self.site}..{self.site + self.length - 1}"
        if self.power != 1:
            text += f"^{self.power}"
        if self.linking:
            text += f"@{self.linking}"
        return text

    def __str__(self):
        return self.label()


def parse_curve(text: str, l: Optional[int] = None) -> CurveSpec:
    """
    Read 'boundary:2', 'outer', 'arc:1..3', with an optional Chebyshev power
    '^3' (or '^l', resolved with the given l) and linking exponent '@1'.

    Raises:
        CurveSpecError: for text outside this grammar
    """
    match = _CURVE.match(text.strip())
    if match is None:
        raise CurveSpecError(text, "expected boundary:i, outer or arc:i..j with optional ^c and @lk")
    kind, first, last = match.group("kind"), match.group("first"), match.group("last")
    power_text, linking_text = match.group("power"), match.group("linking")
    if power_text == "l":
        if l is None:
            raise CurveSpecError(text, "the power '^l' needs a value of l")
        power = l
    else:
        power = int(power_text) if power_text else 1
    linking = int(linking_text) if linking_text else 0
    if kind == "outer":
        if first is not None:
            raise CurveSpecError(text, "the outer boundary takes no sites")
        return CurveSpec.outer(power, linking)
    if first is None:
        raise CurveSpecError(text, f"{kind} needs a site")
    if kind == "boundary":
        if last is not None:
            raise CurveSpecError(text, "a boundary curve surrounds a single puncture")
        return CurveSpec.boundary(int(first), power, linking)
    last = int(first) if last is None else int(last)
    if last < int(first):
        raise CurveSpecError(text, "arc sites must increase")
    return CurveSpec.arc(int(first), last - int(first) + 1, power, linking)


def _trace(spec: CurveSpec, n: int) -> TensorElement:
    if spec.kind == "boundary":
        return omega(n, spec.site).canonical
    if spec.kind == "outer":
        return eta(n).canonical
    return loop_quantum_trace(tuple_product(n, spec.sites(n))).canonical


def wilson_curve(spec: CurveSpec, n: int, l: Optional[int] = None) -> Union[LoopElement, EpsTensorElement]:
    """
    The Wilson loop of a curve: a LoopElement at generic q, or its value at eps
    when l is given.

    At generic q only even linking exponents are allowed, since i^lk must be
    rational.
    """
    spec.validate(n)
    trace = _trace(spec, n)
    if l is None:
        if spec.linking % 2:
            raise CurveSpecError(spec.label(), "an odd linking exponent needs a root of unity")
        value = trace
        if spec.power > 1:
            value = chebyshev_apply(spec.power, trace, TensorElement.identity(n))
        return LoopElement(value * (-1) ** (spec.linking // 2), spec.label())
    value = specialize_element(trace, l)
    if spec.power > 1:
        value = chebyshev_of(value, spec.power)
    logger.debug(f"W({spec.label()}) at l={l}: {len(value)} terms")
    return value * root_of_unity(l).i ** spec.linking
