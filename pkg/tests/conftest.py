import pathlib

import pytest

from colorbalance import formats

data_path = pathlib.Path("tests", "data")


@pytest.fixture
def load_cgf():
    """Read one of the colored graphs in tests/data by name."""

    def load(name):
        return formats.parse_cgf((data_path / f"{name}.cgf").read_text())

    return load
