import json
import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def data_dir():
    return pathlib.Path(os.environ.get("STRATA_TEST_DATA", ROOT / "tests" / "data"))


@pytest.fixture(scope="session")
def schema_dir():
    return pathlib.Path(os.environ.get("STRATA_SCHEMAS", ROOT / "schemas"))


@pytest.fixture(scope="session")
def cli_bin():
    path = os.environ.get("STRATA_LAB_BIN", str(ROOT / "build" / "tools" / "strata_lab"))
    if not pathlib.Path(path).exists():
        pytest.skip("strata_lab binary not built")
    return path


@pytest.fixture(scope="session")
def schemas(schema_dir):
    return {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
