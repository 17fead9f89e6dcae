# beauville_forge/core/atlas/words.py
"""
Words in standard generators.

Grammar (whitespace ignored)::

    word     := factor+
    factor   := primary ('^' exponent)*
    primary  := atom | '(' word ')' | '[' word ',' word ']'
    exponent := ['-'] digits | atom | '(' word ')' | '[' word ',' word ']'
    atom     := letter digit*

Juxtaposition is the group product, ``^n`` a power, ``^w`` conjugation
(``u^v = v^-1 u v``) and ``[u,v] = u^-1 v^-1 u v``. Powers and conjugations
chain to the left: ``a^b^c`` is ``(a^b)^c``. An atom is one letter with
optional trailing digits, so ``t1t2`` reads as ``t1 t2`` and ``cd`` as ``c d``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Any, Mapping, Tuple, Union

from ..exceptions import UnboundAtomError, WordSyntaxError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Product:
    factors: Tuple["WordExpr", ...]


@dataclass(frozen=True)
class Power:
    base: "WordExpr"
    exponent: int


@dataclass(frozen=True)
class Commutator:
    left: "WordExpr"
    right: "WordExpr"


@dataclass(frozen=True)
class Conjugate:
    base: "WordExpr"
    by: "WordExpr"


WordExpr = Union[Atom, Product, Power, Commutator, Conjugate]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str) -> WordSyntaxError:
        return WordSyntaxError(message, text=self.text, position=self.pos)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.fail(f"expected {ch!r} but found {found}")
        self.pos += 1

    def word(self) -> WordExpr:
        factors = []
        while self.peek() and (self.peek().isalpha() or self.peek() in "(["):
            factors.append(self.factor())
        if not factors:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.fail(f"expected a word but found {found}")
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> WordExpr:
        node = self.primary()
        while self.peek() == "^":
            self.pos += 1
            ch = self.peek()
            if ch == "-" or ch.isdigit():
                node = Power(node, self.integer())
            else:
                node = Conjugate(node, self.primary())
        return node

    def integer(self) -> int:
        start = self.pos
        if self.text[self.pos] == "-":
            self.pos += 1
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            raise self.fail("expected digits after '-'")
        return int(self.text[start:self.pos])

    def primary(self) -> WordExpr:
        ch = self.peek()
        if ch.isalpha():
            start = self.pos
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return Atom(self.text[start:self.pos])
        if ch == "(":
            self.pos += 1
            inner = self.word()
            self.expect(")")
            return inner
        if ch == "[":
            self.pos += 1
            left = self.word()
            self.expect(",")
            right = self.word()
            self.expect("]")
            return Commutator(left, right)
        found = repr(ch) if ch else "end of input"
        raise self.fail(f"expected an identifier, '(' or '[' but found {found}")


def parse_word(text: str) -> WordExpr:
    """
    Parse a word.

    Example:
        >>> parse_word("t1t2^d")
        Product(factors=(Atom(name='t1'), Conjugate(base=Atom(name='t2'), by=Atom(name='d'))))

    Raises:
        WordSyntaxError: with the 0-based position where parsing stopped.
    """
    parser = _Parser(text)
    expr = parser.word()
    if parser.peek():
        raise parser.fail(f"unexpected {parser.peek()!r}")
    return expr


def _wrapped(e: WordExpr) -> str:
    if isinstance(e, (Atom, Commutator)):
        return format_word(e)
    return f"({format_word(e)})"


def format_word(e: WordExpr) -> str:
    """Text that ``parse_word`` reads back into an equal expression."""
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Product):
        return "".join(_wrapped(f) if isinstance(f, Product) else format_word(f) for f in e.factors)
    if isinstance(e, Power):
        return f"{_wrapped(e.base)}^{e.exponent}"
    if isinstance(e, Conjugate):
        return f"{_wrapped(e.base)}^{_wrapped(e.by)}"
    return f"[{format_word(e.left)},{format_word(e.right)}]"


def atoms(e: WordExpr) -> Tuple[str, ...]:
    """Identifiers in order of first appearance."""
    seen: dict = {}

    def walk(node: WordExpr) -> None:
        if isinstance(node, Atom):
            seen.setdefault(node.name, None)
        elif isinstance(node, Product):
            for f in node.factors:
                walk(f)
        elif isinstance(node, Power):
            walk(node.base)
        elif isinstance(node, Conjugate):
            walk(node.base)
            walk(node.by)
        else:
            walk(node.left)
            walk(node.right)

    walk(e)
    return tuple(seen)


def evaluate_word(e: Union[WordExpr, str], env: Mapping[str, Any]) -> Any:
    """
    Evaluate under left-to-right composition.

    Raises:
        UnboundAtomError: an identifier missing from ``env``.
        DegreeMismatchError: elements of different degree.
    """
    if isinstance(e, str):
        e = parse_word(e)
    if isinstance(e, Atom):
        if e.name not in env:
            raise UnboundAtomError(e.name)
        return env[e.name]
    if isinstance(e, Product):
        return reduce(lambda a, b: a * b, (evaluate_word(f, env) for f in e.factors))
    if isinstance(e, Power):
        return evaluate_word(e.base, env) ** e.exponent
    if isinstance(e, Conjugate):
        return evaluate_word(e.base, env).conjugate(evaluate_word(e.by, env))
    u, v = evaluate_word(e.left, env), evaluate_word(e.right, env)
    return u.inverse() * v.inverse() * u * v


__all__ = [
    "Atom",
    "Product",
    "Power",
    "Commutator",
    "Conjugate",
    "WordExpr",
    "parse_word",
    "format_word",
    "atoms",
    "evaluate_word",
]
