"""File-backed named-scenario store: one JSON document per name,
last-write-wins via atomic replace."""

from __future__ import annotations

import hashlib
import os
import re
import tempfile
from pathlib import Path
from typing import Optional

from .errors import LitiquantError, ValidationError
from .scenario import DisputeScenario, load_scenario, serialize_scenario

_NAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]{0,127}$")


class StoreConflict(LitiquantError):
    """Version precondition (etag) did not match the stored document."""


class ScenarioNotFound(LitiquantError):
    pass


def _etag(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class ScenarioStore:
    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, name: str) -> Path:
        if not _NAME_RE.match(name) or ".." in name:
            raise ValidationError("name", f"invalid scenario name {name!r}")
        return self.directory / f"{name}.json"

    def list(self) -> list:
        return sorted(p.stem for p in self.directory.glob("*.json"))

    def get(self, name: str):
        path = self._path(name)
        if not path.exists():
            raise ScenarioNotFound(name)
        text = path.read_text()
        return load_scenario(text), _etag(text)

    def put(self, name: str, scenario: DisputeScenario,
            expected_etag: Optional[str] = None) -> str:
        path = self._path(name)
        if expected_etag is not None:
            if not path.exists():
                raise StoreConflict(f"{name}: precondition given but no stored version")
            if _etag(path.read_text()) != expected_etag:
                raise StoreConflict(f"{name}: stored version does not match precondition")
        text = serialize_scenario(scenario)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return _etag(text)

    def delete(self, name: str):
        path = self._path(name)
        if not path.exists():
            raise ScenarioNotFound(name)
        path.unlink()
