from pathlib import Path

import pytest

CORPUS = Path(__file__).parent / "corpus"

QASM_FILES = sorted((CORPUS / "qasm").glob("*.qasm"))
BLACKBIRD_FILES = sorted((CORPUS / "blackbird").glob("*.xbb"))
QMASM_FILES = sorted((CORPUS / "qmasm").glob("*.qmasm"))


def read(path: Path) -> str:
    return path.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS
