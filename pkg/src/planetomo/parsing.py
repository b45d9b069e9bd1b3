"""Textual grammars for states, observables and axes used by the CLI."""

from __future__ import annotations

import math
import re

from .fock import DEFAULT_DIM, StateSpec
from .symbols import ObservableExpr
from .tomograms import AxisSpec


class SpecParseError(ValueError):
    """Parse failure carrying the offending position."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_RE_REAL = re.compile(rf"[+-]?{_NUMBER}")
_RE_IMAG = re.compile(rf"(?P<im>[+-]?{_NUMBER}|[+-]?)i")
_RE_BOTH = re.compile(rf"(?P<re>[+-]?{_NUMBER})(?P<im>[+-](?:{_NUMBER})?)i")
_RE_TERM = re.compile(
    rf"(?P<sign>[+-]?)(?:(?P<coeff>{_NUMBER})\*)?(?:S\((?P<m>\d+),(?P<n>\d+)\)|(?P<gen>[NI]))")


def parse_complex(token: str, context: str | None = None, offset: int = 0) -> complex:
    """Parse 'a', 'bi' or 'a+bi' (also 'a-bi' and bare 'i')."""
    source = context if context is not None else token
    if _RE_REAL.fullmatch(token):
        return complex(float(token), 0.0)
    match = _RE_BOTH.fullmatch(token)
    if match:
        imag = match.group("im")
        if imag in ("+", "-"):
            imag += "1"
        return complex(float(match.group("re")), float(imag))
    match = _RE_IMAG.fullmatch(token)
    if match:
        imag = match.group("im")
        if imag in ("", "+"):
            return complex(0.0, 1.0)
        if imag == "-":
            return complex(0.0, -1.0)
        return complex(0.0, float(imag))
    raise SpecParseError("expected a complex number like 1, 2i or 1+2i", source, offset)


def parse_state(text: str, dim: int = DEFAULT_DIM) -> StateSpec:
    """Parse 'fock:<n>', 'coherent:<a+bi>' or 'super:<c0>,<c1>,...'."""
    head, sep, rest = text.partition(":")
    if not sep:
        raise SpecParseError("expected 'kind:payload'", text, 0)
    offset = len(head) + 1
    if head == "fock":
        if not rest.isdigit():
            raise SpecParseError("expected a non-negative integer level", text, offset)
        return StateSpec.fock(int(rest), dim=dim)
    if head == "coherent":
        return StateSpec.coherent(parse_complex(rest, context=text, offset=offset), dim=dim)
    if head == "super":
        coefficients = []
        position = offset
        for entry in rest.split(","):
            if not entry:
                raise SpecParseError("empty superposition entry", text, position)
            coefficients.append(parse_complex(entry, context=text, offset=position))
            position += len(entry) + 1
        return StateSpec.superposition(coefficients, dim=dim, label=text)
    raise SpecParseError("unknown state kind (want fock, coherent or super)", text, 0)


def parse_observable(text: str) -> ObservableExpr:
    """Parse a real combination of S(m,n), N and I, e.g. '0.5*S(2,0)+0.5*S(0,2)-0.5*I'."""
    compact = "".join(text.split())
    if not compact:
        raise SpecParseError("empty observable", text, 0)
    terms: dict[tuple[int, int], float] = {}
    const = 0.0
    position = 0
    while position < len(compact):
        match = _RE_TERM.match(compact, position)
        if match is None or (position > 0 and not match.group("sign")):
            raise SpecParseError("expected a term like 0.5*S(2,0), N or I", compact, position)
        coeff = float(match.group("coeff")) if match.group("coeff") else 1.0
        if match.group("sign") == "-":
            coeff = -coeff
        generator = match.group("gen")
        if generator == "N":
            terms[(2, 0)] = terms.get((2, 0), 0.0) + 0.5 * coeff
            terms[(0, 2)] = terms.get((0, 2), 0.0) + 0.5 * coeff
            const -= 0.5 * coeff
        elif generator == "I":
            const += coeff
        else:
            key = (int(match.group("m")), int(match.group("n")))
            terms[key] = terms.get(key, 0.0) + coeff
        position = match.end()
    return ObservableExpr.from_terms(terms, const)


def parse_axis(text: str, periodic: bool = False) -> AxisSpec:
    """Parse 'min:max:step'; the step should evenly split the range (extra tail is dropped)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise SpecParseError("expected min:max:step", text, 0)
    try:
        low, high, step = (float(part) for part in parts)
    except ValueError:
        raise SpecParseError("axis bounds must be numbers", text, 0) from None
    if step <= 0 or high <= low:
        raise SpecParseError("need max > min and step > 0", text, 0)
    count = int(math.floor((high - low) / step + 1e-9)) + 1
    stop = low + (count - 1) * step
    if abs(stop - high) < 1e-9 * max(1.0, abs(high)):
        stop = high
    return AxisSpec(low, stop, count, periodic=periodic)
