"""Shared tokenizer for the polynomial text syntax ``c*x^k + ...``."""

from __future__ import annotations

import re
from typing import Callable

from .errors import ParseError

_OPEN = "(["
_CLOSE = ")]"


def _split_top(text: str, seps: str) -> list[tuple[str, str]]:
    """Split at separator characters that sit outside brackets.

    Returns ``(separator, piece)`` pairs; the first separator is ``""``.
    """
    out = []
    depth = 0
    sep = ""
    start = 0
    for i, ch in enumerate(text):
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        elif depth == 0 and ch in seps:
            # a sign right after '^' or at the very start belongs to the piece
            prev = text[:i].rstrip()
            if ch in "+-" and (not prev or prev[-1] in "^*"):
                continue
            out.append((sep, text[start:i]))
            sep = ch
            start = i + 1
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {text!r}")
    out.append((sep, text[start:]))
    return out


def split_list(text: str) -> list[str]:
    """Split a comma separated list at top level."""
    return [piece.strip() for _, piece in _split_top(text, ",")]


def parse_polynomial(
    text: str,
    var: str,
    parse_scalar: Callable[[str], object],
    mul: Callable[[object, object], object],
    add: Callable[[object, object], object],
    neg: Callable[[object], object],
    one: object,
) -> dict[int, object]:
    """Parse ``text`` into a ``degree -> coefficient`` map.

    Scalar factors must precede the variable inside a term, since in a skew
    ring ``c*x`` and ``x*c`` differ.
    """
    mono = re.compile(rf"^{re.escape(var)}(?:\^(\d+))?$")
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial")
    terms: dict[int, object] = {}
    for sep, piece in _split_top(text, "+-"):
        piece = piece.strip()
        negate = sep == "-"
        while piece.startswith(("-", "+")):
            negate ^= piece[0] == "-"
            piece = piece[1:].strip()
        if not piece:
            raise ParseError(f"empty term in {text!r}")
        coeff = one
        degree = 0
        seen_var = False
        for _, factor in _split_top(piece, "*"):
            factor = factor.strip()
            m = mono.match(factor)
            if m:
                degree += int(m.group(1) or 1)
                seen_var = True
                continue
            if seen_var:
                raise ParseError(f"scalar after {var} in term {piece!r}; write c*{var}^k")
            if factor.startswith("(") and factor.endswith(")"):
                factor = factor[1:-1]
            coeff = mul(coeff, parse_scalar(factor))
        if negate:
            coeff = neg(coeff)
        terms[degree] = add(terms[degree], coeff) if degree in terms else coeff
    return terms


def format_polynomial(terms: list[tuple[int, str]], var: str) -> str:
    """Format ``(degree, coefficient text)`` pairs; ``"1"`` coefficients are elided."""
    parts = []
    for deg, c in sorted(terms, key=lambda t: -t[0]):
        if deg == 0:
            parts.append(c)
            continue
        mono = var if deg == 1 else f"{var}^{deg}"
        if c == "1":
            parts.append(mono)
        else:
            if "+" in c or " " in c:
                c = f"({c})"
            parts.append(f"{c}*{mono}")
    return " + ".join(parts) if parts else "0"
