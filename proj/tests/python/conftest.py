import os
import shutil

import pytest

SCHEMA_DIR = os.path.join(os.path.dirname(__file__), "..", "..", "schemas")


@pytest.fixture(scope="session")
def schema_dir():
    return os.path.abspath(SCHEMA_DIR)


@pytest.fixture(scope="session")
def cli_binary():
    path = os.environ.get("SCHUR_CLI") or shutil.which("schur")
    if not path:
        pytest.skip("schur executable not available")
    return path
