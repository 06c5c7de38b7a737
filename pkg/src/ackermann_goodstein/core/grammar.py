"""Text syntax for Ackermann terms and Veblen ordinal terms.

Both grammars share one shape and are whitespace-insensitive:

    term  := "0" | block ("+" block)*
    block := HEAD "(" term "," term ")" ("*" nat)?

with HEAD = "A" for Ackermann terms and HEAD = "phi" for ordinals. Printing
emits exactly the parsed structure, so print(parse(s)) reproduces s up to
whitespace and parse(print(t)) == t.
"""

from __future__ import annotations

from typing import Callable, Generic, TypeVar, Union

from ackermann_goodstein.core.errors import TermSyntaxError
from ackermann_goodstein.core.ordinal import OrdTerm, Phi
from ackermann_goodstein.core.terms import ZERO, Node, Term, Zero

T = TypeVar("T", Node, Phi)


class _Parser(Generic[T]):
    """Recursive-descent parser over a whitespace-free copy of the input."""

    def __init__(self, text: str, head: str, make: Callable[..., T]) -> None:
        self.original = text
        self.text = "".join(text.split())
        self.pos = 0
        self.head = head
        self.make = make

    def error(self, message: str) -> TermSyntaxError:
        return TermSyntaxError(message, self.original, self.pos)

    def peek(self, token: str) -> bool:
        return self.text.startswith(token, self.pos)

    def expect(self, token: str) -> None:
        if not self.peek(token):
            found = self.text[self.pos : self.pos + 1] or "end of input"
            raise self.error(f"expected {token!r}, found {found!r}")
        self.pos += len(token)

    def parse(self) -> Union[Zero, T]:
        if not self.text:
            raise self.error("empty input")
        result = self.term()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return result

    def term(self) -> Union[Zero, T]:
        if self.peek("0"):
            self.pos += 1
            return ZERO
        parts = [self.block()]
        while self.peek("+"):
            self.pos += 1
            parts.append(self.block())
        result: Union[Zero, T] = ZERO
        for first, second, coeff in reversed(parts):
            result = self.make(first, second, coeff, result)
        return result

    def block(self) -> tuple[Union[Zero, T], Union[Zero, T], int]:
        self.expect(self.head + "(")
        first = self.term()
        self.expect(",")
        second = self.term()
        self.expect(")")
        coeff = 1
        if self.peek("*"):
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                raise self.error("expected a coefficient after '*'")
            coeff = int(self.text[start : self.pos])
            if coeff < 1:
                self.pos = start
                raise self.error("coefficient must be at least 1")
        return first, second, coeff


def parse_term(text: str) -> Term:
    """Parse an Ackermann term.

    Raises:
        TermSyntaxError: With the offending position

    Example:
        >>> parse_term("A(0, 0)")
        Node(index=ZERO, arg=ZERO, coeff=1, rest=ZERO)
    """
    return _Parser(text, "A", Node).parse()


def parse_ordinal(text: str) -> OrdTerm:
    """Parse a Veblen ordinal term such as "phi(phi(0,0),0)"."""
    return _Parser(text, "phi", Phi).parse()


def _render(t: Union[Zero, Node, Phi], head: str) -> str:
    if isinstance(t, Zero):
        return "0"
    parts = []
    current: Union[Zero, Node, Phi] = t
    while not isinstance(current, Zero):
        first = current.index if isinstance(current, Node) else current.alpha
        second = current.arg if isinstance(current, Node) else current.beta
        text = f"{head}({_render(first, head)},{_render(second, head)})"
        if current.coeff > 1:
            text += f"*{current.coeff}"
        parts.append(text)
        current = current.rest
    return "+".join(parts)


def print_term(t: Term) -> str:
    """Render an Ackermann term in the term grammar."""
    return _render(t, "A")


def print_ordinal(t: OrdTerm) -> str:
    """Render a Veblen ordinal term in the ordinal grammar."""
    return _render(t, "phi")
