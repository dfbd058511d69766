"""
Tokenizer and recursive-descent parser for Prolog-style term text.

Syntax: lowercase identifiers and quoted `'...'` symbols are atoms, names
starting with an uppercase letter or `_` are variables (`_` alone is always
fresh), decimal integers may carry a leading `-`, `f(a,...)` is a compound
and `[a,b]` / `[H|T]` are lists. Runs of symbol characters such as `<=`,
`->` or `||` are atoms too, so `if1(<=,0,3)` reads as written.
"""

import re
from dataclasses import dataclass
from typing import Optional

from app.exceptions import ParseError
from app.models.term import NIL, Atom, Compound, Int, Term, Var, VarContext, make_list

SYMBOL_CHARS = set("+-*/\\^<>=~:.?@#&$|")
PUNCTUATION = set("()[],")

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_DIGITS = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class Token:
    kind: str  # int | var | atom | sym | punct | end
    text: str
    column: int

    @property
    def value(self) -> int:
        return int(self.text)


def tokenize(text: str, line: int = 1) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "%":
            break
        prev = tokens[-1] if tokens else None
        starts_negative = (
            ch == "-"
            and i + 1 < len(text)
            and text[i + 1].isdigit()
            and (prev is None or (prev.kind == "punct" and prev.text in "([,") or prev.kind == "sym")
        )
        if ch.isdigit() or starts_negative:
            match = _DIGITS.match(text, i + 1 if starts_negative else i)
            tokens.append(Token("int", text[i:match.end()], i))
            i = match.end()
        elif ch.isalpha() or ch == "_":
            match = _IDENT.match(text, i)
            word = match.group()
            kind = "var" if word[0].isupper() or word[0] == "_" else "atom"
            tokens.append(Token(kind, word, i))
            i = match.end()
        elif ch == "'":
            end = text.find("'", i + 1)
            if end < 0:
                raise ParseError(line, f"unterminated quoted atom at column {i + 1}")
            tokens.append(Token("atom", text[i + 1:end], i))
            i = end + 1
        elif ch in PUNCTUATION:
            tokens.append(Token("punct", ch, i))
            i += 1
        elif ch in SYMBOL_CHARS:
            j = i + 1
            # a `-` right before a digit starts a negative integer, not part of the symbol
            while j < len(text) and text[j] in SYMBOL_CHARS and not (text[j] == "-" and text[j + 1:j + 2].isdigit()):
                j += 1
            tokens.append(Token("sym", text[i:j], i))
            i = j
        else:
            raise ParseError(line, f"unexpected character {ch!r} at column {i + 1}")
    tokens.append(Token("end", "", len(text)))
    return tokens


class TermParser:
    """Cursor over a token list; variables with the same name share one Var."""

    def __init__(self, text: str, line: int = 1, ctx: Optional[VarContext] = None,
                 names: Optional[dict[str, Var]] = None):
        self.line = line
        self.tokens = tokenize(text, line)
        self.pos = 0
        self.ctx = ctx or VarContext()
        self.names: dict[str, Var] = names if names is not None else {}

    # ---- cursor ----

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        self.pos += 1
        return token

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        token = self.peek()
        return token.kind == kind and (text is None or token.text == text)

    def accept(self, kind: str, text: Optional[str] = None) -> Optional[Token]:
        if self.at(kind, text):
            return self.advance()
        return None

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        token = self.accept(kind, text)
        if token is None:
            wanted = text or kind
            raise self.error(f"expected {wanted!r}")
        return token

    def expect_end(self) -> None:
        if not self.at("end"):
            raise self.error("unexpected trailing input")

    def error(self, reason: str) -> ParseError:
        token = self.peek()
        found = token.text or "end of input"
        return ParseError(self.line, f"{reason}, found {found!r} at column {token.column + 1}")

    # ---- grammar ----

    def variable(self, name: str) -> Var:
        if name == "_":
            return self.ctx.fresh("_")
        if name not in self.names:
            self.names[name] = self.ctx.fresh(name)
        return self.names[name]

    def parse_term(self) -> Term:
        token = self.peek()
        if token.kind == "int":
            self.advance()
            return Int(token.value)
        if token.kind == "var":
            self.advance()
            return self.variable(token.text)
        if token.kind in ("atom", "sym"):
            self.advance()
            if self.accept("punct", "("):
                args = self.parse_args(")")
                return Compound(token.text, tuple(args))
            return Atom(token.text)
        if self.accept("punct", "["):
            return self.parse_list()
        if self.accept("punct", "("):
            term = self.parse_term()
            self.expect("punct", ")")
            return term
        raise self.error("expected a term")

    def parse_args(self, closer: str) -> list[Term]:
        args = [self.parse_term()]
        while self.accept("punct", ","):
            args.append(self.parse_term())
        self.expect("punct", closer)
        return args

    def parse_list(self) -> Term:
        if self.accept("punct", "]"):
            return NIL
        items = [self.parse_term()]
        while self.accept("punct", ","):
            items.append(self.parse_term())
        tail: Term = NIL
        if self.accept("sym", "|"):
            tail = self.parse_term()
        self.expect("punct", "]")
        return make_list(items, tail)


def parse_term(text: str, line: int = 1, ctx: Optional[VarContext] = None) -> tuple[Term, dict[str, Var]]:
    """Parse one complete term; returns it with the name → variable table."""
    parser = TermParser(text, line, ctx)
    term = parser.parse_term()
    parser.expect_end()
    return term, parser.names
