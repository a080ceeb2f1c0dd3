"""Input grammars and output formats.

Semigroups parse from comma-separated positive integers ("4,5,6"); ideals
from "gens@semigroup" ("5,12@3,5").  Ideals print in tail notation, where a
trailing "k->" stands for every integer from k on: "{5,8,10,11,12->}".
Polynomials for the truncated engine are signed sums of "c*t^k" terms with
rational c, e.g. "t^4 - 1/2*t^5".
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import EmptyInput
from .ideals import SemigroupIdeal, from_generators, from_membership
from .semigroup import NumericalSemigroup, from_generators as sg_from_generators


# -- semigroups and ideals ----------------------------------------------------


def parse_semigroup(text: str) -> NumericalSemigroup:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise EmptyInput("no semigroup generators given")
    return sg_from_generators(int(p) for p in parts)


def parse_ideal(text: str) -> SemigroupIdeal:
    """Parse "gens@semigroup", e.g. "5,12@3,5"."""
    if "@" not in text:
        raise ValueError(f"ideal spec {text!r} must look like 'gens@semigroup'")
    left, right = text.split("@", 1)
    semigroup = parse_semigroup(right)
    gens = [int(p.strip()) for p in left.split(",") if p.strip()]
    if not gens:
        raise EmptyInput("no ideal generators given")
    return from_generators(semigroup, gens)


def format_tail(ideal: SemigroupIdeal) -> str:
    sporadic = ideal.sporadic_elements()
    tail = ideal.tail_start
    inner = ",".join(str(z) for z in sporadic)
    if inner:
        inner += ","
    return "{" + inner + f"{tail}->" + "}"


def parse_tail(text: str) -> tuple[list[int], int]:
    """Inverse of :func:`format_tail`: returns (sporadic members, tail start)."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"tail notation must be braced, got {text!r}")
    parts = [p.strip() for p in body[1:-1].split(",") if p.strip()]
    if not parts or not parts[-1].endswith("->"):
        raise ValueError(f"tail notation needs a final 'k->' entry, got {text!r}")
    tail = int(parts[-1][:-2])
    members = [int(p) for p in parts[:-1]]
    return members, tail


def ideal_from_tail(semigroup: NumericalSemigroup, text: str) -> SemigroupIdeal:
    members, tail = parse_tail(text)
    return from_membership(semigroup, members, tail)


def semigroup_to_json(semigroup: NumericalSemigroup) -> dict:
    return {
        "generators": list(semigroup.generators),
        "frobenius": semigroup.frobenius,
        "conductor": semigroup.conductor,
        "multiplicity": semigroup.multiplicity,
        "gaps": semigroup.gaps(),
        "smallElements": semigroup.small_elements(),
    }


def ideal_to_json(ideal: SemigroupIdeal) -> dict:
    c = ideal.semigroup.conductor
    return {
        "semigroup": list(ideal.semigroup.generators),
        "minElement": ideal.min_element,
        "minimalGenerators": ideal.minimal_generators(),
        "window": [ideal.window >> i & 1 for i in range(c + 1)],
    }


# -- polynomials ------------------------------------------------------------

_TERM = re.compile(
    r"""^(?:
        (?P<coef>-?\d+(?:/\d+)?)(?:\*(?:t(?:\^(?P<exp1>\d+))?))?
      | t(?:\^(?P<exp2>\d+))?
    )$""",
    re.VERBOSE,
)


def parse_polynomial(text: str) -> dict[int, Fraction]:
    """Parse a signed sum of rational monomials in t into {exponent: coeff}."""
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial")
    pieces = re.split(r"(?=[+-])", compact)
    coeffs: dict[int, Fraction] = {}
    for piece in pieces:
        if not piece:
            continue
        sign = Fraction(1)
        if piece[0] == "+":
            piece = piece[1:]
        elif piece[0] == "-":
            sign = Fraction(-1)
            piece = piece[1:]
        m = _TERM.match(piece)
        if m is None:
            raise ValueError(f"bad polynomial term {piece!r} in {text!r}")
        if m.group("coef") is not None:
            coef = Fraction(m.group("coef"))
            if "*" in piece or piece.endswith("t") or "t^" in piece:
                exp = int(m.group("exp1") or 1)
            else:
                exp = 0
        else:
            coef = Fraction(1)
            exp = int(m.group("exp2") or 1)
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
    return {k: v for k, v in coeffs.items() if v}


def parse_polynomial_list(text: str) -> list[dict[int, Fraction]]:
    """Comma-separated polynomials; commas never occur inside a term."""
    parts = [p for p in (q.strip() for q in text.split(",")) if p]
    if not parts:
        raise ValueError("no polynomials given")
    return [parse_polynomial(p) for p in parts]


def format_polynomial(coeffs: dict[int, Fraction]) -> str:
    if not coeffs:
        return "0"
    terms = []
    for exp in sorted(coeffs):
        c = coeffs[exp]
        if exp == 0:
            body = str(c)
        elif c == 1:
            body = f"t^{exp}"
        elif c == -1:
            body = f"-t^{exp}"
        else:
            body = f"{c}*t^{exp}"
        terms.append(body)
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out
