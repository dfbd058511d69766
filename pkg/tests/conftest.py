from pathlib import Path

import pytest

from app.utils.bytecode_parser import load_program

ROOT = Path(__file__).resolve().parent.parent
SAMPLES = ROOT / "samples"
GOLDEN = Path(__file__).resolve().parent / "golden"


def golden(name: str) -> str:
    return (GOLDEN / name).read_text(encoding="utf-8")


@pytest.fixture
def countdown_path() -> Path:
    return SAMPLES / "countdown.bc"


@pytest.fixture
def countdown_abs_path() -> Path:
    return SAMPLES / "countdown_abs.bc"


@pytest.fixture
def countdown(countdown_path):
    return load_program(countdown_path)


@pytest.fixture
def countdown_abs(countdown_abs_path):
    return load_program(countdown_abs_path)
