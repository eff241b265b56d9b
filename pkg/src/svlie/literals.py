"""Parsing of element and r-matrix literals.

Grammar (bit-exact with the canonical printers):

    element := ['-'] term (('+'|'-') term)*
    term    := [coeff '*'] gen
    coeff   := rational like '3' or '1/2'
    gen     := 'L[' int ']' | 'M[' int ']' | 'Y[' halfint ']' | 'c'
    halfint := int | int '/2'

Tensor terms replace gen with ``gen (x) gen``; r-matrix files carry one
signed tensor term per line, with blank lines and '#' comments ignored.
Every rejection carries a 1-based line/column diagnostic.  Y-parity
against s is not checked here; the consuming operation validates it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .algebra import BasisIndex, C, Element
from .tensors import Tensor2

__all__ = ["LiteralError", "ParseDiagnostic", "parse_element", "parse_tensor2"]


@dataclass
class ParseDiagnostic:
    line: int
    column: int
    message: str
    token: str

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message} (at {self.token!r})"


class LiteralError(ValueError):
    def __init__(self, diagnostic: ParseDiagnostic) -> None:
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


class _Scanner:
    """Character scanner with 1-based positions."""

    def __init__(self, text: str, line: int = 1) -> None:
        self.text = text
        self.pos = 0
        self.line = line

    def fail(self, message: str, at: Optional[int] = None) -> LiteralError:
        at = self.pos if at is None else at
        token = self.text[at : at + 8] or "<end>"
        return LiteralError(ParseDiagnostic(self.line, at + 1, message, token))

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, literal: str) -> bool:
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str, what: str) -> None:
        if not self.eat(literal):
            raise self.fail(f"expected {what}")

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise self.fail("expected an integer", start)
        return int(self.text[start : self.pos])

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            den_at = self.pos
            den = self.integer()
            if den <= 0:
                raise self.fail("denominator must be positive", den_at)
            return Fraction(num, den)
        return Fraction(num)

    def generator(self) -> BasisIndex:
        self.skip_ws()
        start = self.pos
        ch = self.peek()
        if ch == "c":
            self.pos += 1
            return C
        if ch not in ("L", "M", "Y"):
            raise self.fail("expected a generator (L[..], M[..], Y[..] or c)", start)
        kind = ch
        self.pos += 1
        self.expect("[", "'[' after generator kind")
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            den_at = self.pos
            den = self.integer()
            if den != 2:
                raise self.fail("only integers and halves are allowed", den_at)
            if kind != "Y":
                raise self.fail(f"{kind} takes an integer degree", den_at)
            dd = num
        else:
            dd = 2 * num
        self.expect("]", "']' closing the generator index")
        return BasisIndex(kind, dd)

    def coeff_then(self) -> Fraction:
        """Optional 'coeff *' prefix; returns 1 when absent."""
        self.skip_ws()
        if self.peek().isdigit() or (
            self.peek() == "-" and self._digit_follows(self.pos + 1)
        ):
            save = self.pos
            value = self.rational()
            self.skip_ws()
            if self.eat("*"):
                return value
            self.pos = save
            raise self.fail("expected '*' between coefficient and generator", save)
        return Fraction(1)

    def _digit_follows(self, at: int) -> bool:
        while at < len(self.text) and self.text[at] in " \t":
            at += 1
        return at < len(self.text) and self.text[at].isdigit()


def _parse_signed_terms(sc: _Scanner, term_fn) -> list:
    """term (('+'|'-') term)* with an optional leading sign."""
    out = []
    sc.skip_ws()
    sign = Fraction(1)
    if sc.eat("-"):
        sign = Fraction(-1)
    elif sc.eat("+"):
        pass
    out.append(term_fn(sc, sign))
    while not sc.at_end():
        sc.skip_ws()
        if sc.eat("+"):
            sign = Fraction(1)
        elif sc.eat("-"):
            sign = Fraction(-1)
        else:
            raise sc.fail("expected '+' or '-' between terms")
        out.append(term_fn(sc, sign))
    return out


def _element_term(sc: _Scanner, sign: Fraction) -> tuple[BasisIndex, Fraction]:
    coeff = sc.coeff_then()
    gen = sc.generator()
    return gen, sign * coeff


def _tensor_term(sc: _Scanner, sign: Fraction):
    coeff = sc.coeff_then()
    left = sc.generator()
    sc.skip_ws()
    sc.expect("(x)", "'(x)' between the tensor slots")
    right = sc.generator()
    return (left, right), sign * coeff


def parse_element(text: str, line: int = 1) -> Element:
    """Parse an element literal; canonical print/parse round-trips."""
    sc = _Scanner(text, line)
    if sc.at_end():
        raise sc.fail("empty element literal")
    if sc.text.strip() == "0":
        return Element.zero()
    terms: dict[BasisIndex, Fraction] = {}
    for gen, coeff in _parse_signed_terms(sc, _element_term):
        terms[gen] = terms.get(gen, Fraction(0)) + coeff
    return Element(terms)


def parse_tensor2(source: Union[str, Iterable[str]]) -> Tensor2:
    """Parse a two-tensor from a single literal or from r-matrix lines.

    A string is parsed as one '+/-'-joined literal unless it contains
    newlines, in which case it is split into file-format lines.
    """
    if isinstance(source, str):
        lines = source.splitlines() if "\n" in source else [source]
    else:
        lines = list(source)
    terms: dict = {}
    parsed_any = False
    for lineno, raw in enumerate(lines, start=1):
        # strip comments only; columns in diagnostics stay exact
        stripped = raw.split("#", 1)[0].rstrip()
        if not stripped.strip():
            continue
        if stripped.strip() == "0":
            parsed_any = True
            continue
        sc = _Scanner(stripped, lineno)
        for key, coeff in _parse_signed_terms(sc, _tensor_term):
            terms[key] = terms.get(key, Fraction(0)) + coeff
        parsed_any = True
    if not parsed_any:
        raise LiteralError(
            ParseDiagnostic(1, 1, "no tensor terms found", "<empty>")
        )
    return Tensor2(terms)
