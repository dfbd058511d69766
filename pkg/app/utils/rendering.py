"""
Answer printing in the style of an interactive Prolog top level.

An answer is a list of `(name, value)` pairs; each pair is one line, lines
are joined with `,` and the last one ends in ` ? ;`. When the answer stream
runs dry before the cap, a final `no` is printed.
"""

from typing import Iterable, Iterator, Mapping, Optional, Sequence

from app.models.bytecode import RunResult, TraceEntry
from app.models.term import Substitution, Term, Var, canonical_names, render_term
from app.services.unification import resolve

Binding = tuple[str, str]


def format_answer(bindings: Sequence[Binding]) -> list[str]:
    if not bindings:
        return ["yes ? ;"]
    lines = [f"{name} = {value}," for name, value in bindings]
    lines[-1] = lines[-1][:-1] + " ? ;"
    return lines


def answer_bindings(names: Mapping[str, Var], s: Substitution) -> list[Binding]:
    """
    Visible bindings of the query variables under `s`.

    Args:
        names: Query variable names in source order
        s: Answer substitution

    Returns:
        `(name, rendered value)` pairs; names starting with `_` and variables
        left unbound are omitted, other unbound variables print as `_1`, `_2`, ...
    """
    visible: list[tuple[str, Term]] = []
    for name, var in names.items():
        if name.startswith("_"):
            continue
        value = resolve(var, s)
        if value == var:
            continue
        visible.append((name, value))
    numbering = canonical_names([value for _, value in visible])
    return [(name, render_term(value, numbering)) for name, value in visible]


def answer_lines(answers: Iterable[Sequence[Binding]], limit: Optional[int]) -> tuple[list[str], int]:
    """Print up to `limit` answers; `no` follows when the stream ends first."""
    lines: list[str] = []
    count = 0
    it = iter(answers)
    while limit is None or count < limit:
        answer = next(it, None)
        if answer is None:
            lines.append("no")
            break
        lines.extend(format_answer(answer))
        count += 1
    return lines, count


def _common_prefix(left: Sequence[TraceEntry], right: Sequence[TraceEntry]) -> int:
    n = 0
    for a, b in zip(left, right):
        if a != b:
            break
        n += 1
    return n


def path_lines(results: Iterable[RunResult], name: str = "R", full: bool = False) -> Iterator[str]:
    """
    Trace and answer lines for a sequence of interpreter paths.

    Unless `full` is set, each path only shows the entries past the prefix it
    shares with the previous path, which is what backtracking re-executes.
    """
    previous: Sequence[TraceEntry] = ()
    for result in results:
        start = 0 if full else _common_prefix(previous, result.trace)
        for entry in result.trace[start:]:
            yield str(entry)
        yield f"{name} = {result.env} ? ;"
        previous = result.trace
