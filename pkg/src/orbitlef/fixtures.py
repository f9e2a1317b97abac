"""Versioned fixture data shipped with the package (``data/v1``)."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .polyalg.ideal import Ideal
from .topology_hodge import HodgeDiamond

FIXTURE_VERSION = "v1"


def default_data_dir() -> Path:
    return Path(str(resources.files("orbitlef") / "data" / FIXTURE_VERSION))


class FixtureSet:
    """Access to one fixture directory; ``root`` may point at a copy for testing."""

    def __init__(self, root: str | Path | None = None):
        self.root = Path(root) if root is not None else default_data_dir()

    def manifest(self) -> dict:
        return json.loads((self.root / "manifest.json").read_text())

    def expected(self) -> dict:
        return json.loads((self.root / "expected.json").read_text())

    def diamond(self, name: str) -> HodgeDiamond:
        return HodgeDiamond.from_json((self.root / "diamonds" / f"{name}.json").read_text())

    def diamond_text(self, name: str) -> str:
        return (self.root / "diamonds" / f"{name}.json").read_text()

    def ideal(self, name: str) -> Ideal:
        return Ideal.read(self.root / "ideals" / f"{name}.ideal")

    def diamond_names(self) -> list[str]:
        return sorted(p.stem for p in (self.root / "diamonds").glob("*.json"))

    def ideal_names(self) -> list[str]:
        return sorted(p.stem for p in (self.root / "ideals").glob("*.ideal"))
