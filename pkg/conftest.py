import os
import sys

import pytest

ROOT = os.path.dirname(os.path.abspath(__file__))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from modules.geometry.arrangement import read_arrangement  # noqa: E402
from modules.geometry.lattice import build_lattice  # noqa: E402
from modules.presentation.relations import generate_presentation  # noqa: E402
from modules.presentation.storage import read_presentation  # noqa: E402

ARRANGEMENTS_DIR = os.path.join(ROOT, 'data', 'arrangements')
PRESENTATIONS_DIR = os.path.join(ROOT, 'data', 'presentations')


@pytest.fixture
def arrangement_path():
    return lambda name: os.path.join(ARRANGEMENTS_DIR, f"{name}.arr")


@pytest.fixture
def presentation_path():
    return lambda name: os.path.join(PRESENTATIONS_DIR, f"{name}.json")


@pytest.fixture
def load_arrangement(arrangement_path):
    return lambda name: read_arrangement(arrangement_path(name))


@pytest.fixture
def load_lattice(load_arrangement):
    return lambda name: build_lattice(load_arrangement(name))


@pytest.fixture
def arrangement_presentation(load_lattice):
    """Conjugation-free presentation of a fixture arrangement."""
    return lambda name: generate_presentation(load_lattice(name))


@pytest.fixture
def hand_presentation(presentation_path):
    return lambda name: read_presentation(presentation_path(name))
