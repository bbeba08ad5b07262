import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from app import create_app
from matroid import circuit, direct_sum, m_s, uniform
from reports import build_matroid, load_matroid_file

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name):
    return str(FIXTURES / f"{name}.json")


def load(name):
    return build_matroid(load_matroid_file(fixture_path(name)))


def fixture_doc(name):
    return json.loads((FIXTURES / f"{name}.json").read_text())


def fixture_matroids():
    return {
        "u24": uniform(2, 4),
        "u35": uniform(3, 5),
        "c3": circuit(3),
        "c4": circuit(4),
        "c2+c3": direct_sum(circuit(2), circuit(3)),
        "m1": load("m1"),
        "m2": load("m2"),
        "m_s(2)": m_s(2),
        "m_s(3)": m_s(3),
        "m_s(4)": m_s(4),
        "m_s(5)": m_s(5),
    }


# exact ranks in the top degrees of these take minutes
HEAVY = {"m_s(5)"}


def fixture_params(names=None):
    """pytest params over the fixture matroids, heavy ones marked slow."""
    names = names or list(fixture_matroids())
    return [pytest.param(name, marks=pytest.mark.slow) if name in HEAVY else name for name in names]


@pytest.fixture
def app(tmp_path):
    app = create_app(testing=True, db_path=str(tmp_path / "reports.db"))
    yield app


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def runner():
    return CliRunner()
