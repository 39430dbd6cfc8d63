import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(os.environ.get("CANONLIFT_ROOT", pathlib.Path(__file__).resolve().parents[2]))
FIXTURES = ROOT / "tests" / "fixtures"
SCHEMAS = ROOT / "schemas"


@pytest.fixture
def fixture_text():
    return lambda name: (FIXTURES / name).read_text()


@pytest.fixture
def fixture_path():
    return lambda name: str(FIXTURES / name)


@pytest.fixture
def schema():
    from jsonschema import Draft202012Validator
    from referencing import Registry, Resource

    resources = [(p.name, Resource.from_contents(json.loads(p.read_text()))) for p in SCHEMAS.glob("*.json")]
    registry = Registry().with_resources(resources)

    def load(name):
        return Draft202012Validator(json.loads((SCHEMAS / name).read_text()), registry=registry)

    return load


@pytest.fixture
def exe():
    path = os.environ.get("CANONLIFT_EXE")
    if not path:
        pytest.skip("CANONLIFT_EXE not set")

    def run(*args):
        return subprocess.run([path, *map(str, args)], capture_output=True, text=True)

    return run
