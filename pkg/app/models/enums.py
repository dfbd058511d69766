import enum

# Enums
class Sign(str, enum.Enum):
    """Abstract integer values; bottom is represented by an empty solution stream."""

    pos = "pos"
    neg = "neg"
    zero = "0"
    top = "top"

    def __str__(self) -> str:
        return self.value

class ArithOp(str, enum.Enum):
    mul = "*"
    add = "+"
    sub = "-"

    def __str__(self) -> str:
        return self.value

class CmpOp(str, enum.Enum):
    le = "<="
    gt = ">"

    def __str__(self) -> str:
        return self.value

    @property
    def negation(self) -> "CmpOp":
        return CmpOp.gt if self is CmpOp.le else CmpOp.le

class SearchStrategy(str, enum.Enum):
    bfs = "bfs"
    dfs = "dfs"
    best_first = "best_first"

class PropMode(str, enum.Enum):
    sat = "sat"
    nsat = "nsat"

class ReplMode(str, enum.Enum):
    bytecode = "bytecode"
    type = "type"
    prop = "prop"
    nprop = "nprop"
    proc = "proc"
    traces = "traces"
    goals = "goals"

class ExitCode(enum.IntEnum):
    ok = 0
    no_solution = 1
    parse_error = 2
    analysis_error = 3
    floundered = 4
