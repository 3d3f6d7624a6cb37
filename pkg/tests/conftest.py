import os.path as osp

import pytest

from vedacl.semantics import load_model
from vedacl.snf import load_problem

ROOT = osp.dirname(osp.dirname(osp.abspath(__file__)))
DATA = osp.join(ROOT, 'data')


def data_path(*parts):
    return osp.join(DATA, *parts)


@pytest.fixture
def light_path():
    return data_path('problems', 'light.clp')


@pytest.fixture
def light(light_path):
    return load_problem(light_path)


@pytest.fixture
def one_state():
    return load_model(data_path('models', 'one_state.cgm'))


@pytest.fixture
def two_agents():
    return load_model(data_path('models', 'two_agents.cgm'))


@pytest.fixture
def write(tmp_path):
    """Write ``text`` to ``tmp_path/name`` and return the path."""

    def _write(name, text):
        path = tmp_path / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        return str(path)

    return _write
