"""Fixture documents: a versioned JSON envelope around each kind of input datum."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Any, Mapping

from .cdga import FiniteCDGA
from .constructors import ArrangementIncidence, TreeGraphManifold
from .groups import GroupPresentation
from .links import LinkData
from .threeman import ClosedThreeManifoldData

SCHEMA_VERSION = 1

KINDS = ("link", "manifold", "presentation", "arrangement", "tree", "cdga", "connected-sum")

ALIASES = {"link-5_2_1": "whitehead", "link-whitehead": "whitehead"}


class FixtureError(ValueError):
    """The document is not a well-formed fixture (bad JSON, schema or kind)."""


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _build_sum(data: Mapping) -> list[ClosedThreeManifoldData]:
    summands = [ClosedThreeManifoldData.from_json(d) for d in data["summands"]]
    if len(summands) < 2:
        raise ValueError("a connected sum needs at least two summands")
    return summands


_BUILDERS = {
    "link": LinkData.from_json,
    "manifold": ClosedThreeManifoldData.from_json,
    "presentation": GroupPresentation.from_json,
    "arrangement": ArrangementIncidence.from_json,
    "tree": TreeGraphManifold.from_json,
    "cdga": FiniteCDGA.from_json,
    "connected-sum": _build_sum,
}


def data_of(kind: str, obj) -> dict:
    """Inverse of Fixture.build: the canonical data block of a domain object."""
    if kind == "connected-sum":
        return {"summands": [m.to_json() for m in obj]}
    return obj.to_json()


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    description: str
    data: Mapping

    def build(self):
        try:
            return _BUILDERS[self.kind](self.data)
        except KeyError as exc:
            raise FixtureError(f"fixture {self.name!r} lacks field {exc}") from None

    def to_json(self) -> dict:
        return {"schema": SCHEMA_VERSION, "name": self.name, "kind": self.kind,
                "description": self.description, "data": self.data}

    def dumps(self) -> str:
        return canonical_json(self.to_json())

    def canonical(self) -> "Fixture":
        """Same fixture with the data block re-serialized from the parsed object."""
        return Fixture(self.name, self.kind, self.description, data_of(self.kind, self.build()))


def parse_fixture(text: str) -> Fixture:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FixtureError("fixture document must be a JSON object")
    if doc.get("schema") != SCHEMA_VERSION:
        raise FixtureError(f"unsupported schema version {doc.get('schema')!r}")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise FixtureError(f"unknown fixture kind {kind!r}")
    if not isinstance(doc.get("data"), dict):
        raise FixtureError("fixture has no data object")
    return Fixture(str(doc.get("name", "")), kind, str(doc.get("description", "")), doc["data"])


def _data_dir():
    return resources.files("jumploci") / "data"


def fixture_names() -> list[str]:
    return sorted(p.name[:-5] for p in _data_dir().iterdir() if p.name.endswith(".json"))


def fixture_text(name: str) -> str:
    name = ALIASES.get(name, name)
    path = _data_dir() / f"{name}.json"
    if not path.is_file():
        raise FixtureError(f"no builtin fixture named {name!r}")
    return path.read_text(encoding="utf-8")


def load_fixture(name: str) -> Fixture:
    return parse_fixture(fixture_text(name))


def load(name: str):
    """Build the domain object of a builtin fixture."""
    return load_fixture(name).build()
