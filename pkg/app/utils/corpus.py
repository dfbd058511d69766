"""
Test-corpus files written by the REPL's `:record` command.

One record per line: `<mode>: <input> ⟶ <output>`, where newlines in the
output are written as `\\n` (and backslashes as `\\\\`).
"""

from pathlib import Path
from typing import Union

import pydantic

from app.exceptions import ParseError
from app.models.enums import ReplMode

ARROW = " ⟶ "


class CorpusRecord(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(frozen=True)

    mode: ReplMode
    input: str
    output: str

    @pydantic.field_validator("input")
    @classmethod
    def input_is_one_line(cls, v: str) -> str:
        if "\n" in v or ARROW in v:
            raise ValueError("input must be a single line without the record arrow")
        return v


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\n", "\\n")


def _unescape(text: str) -> str:
    out = []
    chars = iter(text)
    for ch in chars:
        if ch == "\\":
            nxt = next(chars, "")
            out.append("\n" if nxt == "n" else nxt)
        else:
            out.append(ch)
    return "".join(out)


def format_record(record: CorpusRecord) -> str:
    return f"{record.mode.value}: {record.input}{ARROW}{_escape(record.output)}"


def append_record(path: Union[str, Path], record: CorpusRecord) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(format_record(record) + "\n")


def parse_record(line: str, number: int = 1) -> CorpusRecord:
    head, sep, output = line.partition(ARROW)
    mode, colon, source = head.partition(": ")
    if not sep or not colon:
        raise ParseError(number, "expected '<mode>: <input> ⟶ <output>'")
    try:
        return CorpusRecord(mode=mode, input=source, output=_unescape(output))
    except pydantic.ValidationError as e:
        raise ParseError(number, e.errors()[0]["msg"]) from None


def load_corpus(path: Union[str, Path]) -> list[CorpusRecord]:
    """
    Read every record of a corpus file.

    Args:
        path: Corpus file; blank lines and `#` comment lines are skipped

    Returns:
        Records in file order
    """
    records = []
    text = Path(path).read_text(encoding="utf-8")
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        records.append(parse_record(line, number))
    return records
