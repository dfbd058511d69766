"""
Error types raised by the parsers, the interpreter and the analyses.

Every error derives from AnalysisError so the CLI can map whole families
onto exit codes without knowing each concrete class.
"""

from typing import Any


class AnalysisError(Exception):
    """Root of every error the toolkit raises on purpose."""


class ParseError(AnalysisError, ValueError):
    """Malformed input text (bytecode, terms, formulas, processes, goals)."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class InvalidTarget(AnalysisError):
    """A jump target or fall-through pc names no instruction."""

    def __init__(self, pc: int):
        self.pc = pc
        super().__init__(f"no instruction at pc {pc}")


class DomainMismatch(AnalysisError):
    """A program constant is not a value of the selected domain."""

    def __init__(self, value: Any, domain: str):
        self.value = value
        self.domain = domain
        super().__init__(f"constant {value} is not a {domain} value")


class StackUnderflow(AnalysisError):
    def __init__(self, env: Any):
        self.env = env
        super().__init__(f"*** Could not pop from stack: {env}")


class UnsupportedAbstractOp(AnalysisError):
    def __init__(self, op: str):
        self.op = op
        super().__init__(f"operator {op} has no abstract table")


class JoinShapeMismatch(AnalysisError):
    """Two environments reaching one pc disagree on stack height or locals."""

    def __init__(self, pc: int, left: Any = None, right: Any = None):
        self.pc = pc
        self.left = left
        self.right = right
        super().__init__(f"cannot join environments at pc {pc}: {left} vs {right}")


class NonGroundFormula(AnalysisError):
    def __init__(self, formula: Any):
        self.formula = formula
        super().__init__(f"formula is not ground: {formula}")
