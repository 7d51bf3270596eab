"""JSON schemas for the command-line outputs."""

import json
from importlib import resources


def load_schema(name: str) -> dict:
    """Load ``<name>.schema.json`` shipped with the package."""
    text = resources.files(__name__).joinpath(f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
