"""
Process syntax: `stop`, `a -> P` (right-associative, binds tighter than
`||`), `P || Q` (left-associative) and parentheses. The quoted canonical
forms `'->'(a,P)` and `'||'(P,Q)` are accepted as well.
"""

from app.models.process import STOP, Interleave, Prefix, Process
from app.utils.term_parser import TermParser


class ProcessParser(TermParser):
    def parse_process(self) -> Process:
        left = self.parse_prefix()
        while self.accept("sym", "||"):
            left = Interleave(left, self.parse_prefix())
        return left

    def parse_prefix(self) -> Process:
        token = self.peek()
        if token.kind == "atom" and self.peek(1).kind == "sym" and self.peek(1).text == "->":
            self.advance()
            self.advance()
            return Prefix(token.text, self.parse_prefix())
        return self.parse_primary()

    def parse_primary(self) -> Process:
        if self.accept("punct", "("):
            inner = self.parse_process()
            self.expect("punct", ")")
            return inner
        token = self.peek()
        if token.kind == "atom" and token.text in ("||", "->") and self.peek(1).text == "(":
            self.advance()
            self.advance()
            if token.text == "||":
                left = self.parse_process()
                self.expect("punct", ",")
                right = self.parse_process()
                self.expect("punct", ")")
                return Interleave(left, right)
            action = self.expect("atom").text
            self.expect("punct", ",")
            cont = self.parse_process()
            self.expect("punct", ")")
            return Prefix(action, cont)
        if self.accept("atom", "stop"):
            return STOP
        raise self.error("expected a process")


def parse_process(text: str, line: int = 1) -> Process:
    parser = ProcessParser(text, line)
    process = parser.parse_process()
    parser.expect_end()
    return process
