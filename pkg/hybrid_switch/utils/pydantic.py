"""Pydantic utility functions for easy file I/O operations."""

import json
from pathlib import Path
from typing import Any, Type, TypeVar, Union

import yaml
from pydantic import BaseModel

T = TypeVar("T", bound=BaseModel)


def _detect_format(file_path: Path, format: str) -> str:
    if format != "auto":
        return format.lower()
    if file_path.suffix.lower() in [".yaml", ".yml"]:
        return "yaml"
    return "json"


def save_model(
    model: BaseModel,
    file_path: Union[str, Path],
    format: str = "auto",
    indent: int = 2,
    **kwargs: Any,
) -> None:
    """
    Save a Pydantic model instance to a file in JSON or YAML format.

    Args:
        model: The Pydantic model instance to save
        file_path: Path to the output file
        format: Output format ('json', 'yaml', or 'auto' to detect from extension)
        indent: Indentation level for pretty formatting
        **kwargs: Additional arguments passed to json.dump() or yaml.dump()
    """
    file_path = Path(file_path)
    format = _detect_format(file_path, format)
    model_dict = model.model_dump(mode="json")
    save_dict(model_dict, file_path, format=format, indent=indent, **kwargs)


def save_dict(
    data: dict,
    file_path: Union[str, Path],
    format: str = "auto",
    indent: int = 2,
    **kwargs: Any,
) -> None:
    """Write a plain dictionary as JSON or YAML, keeping key order."""
    file_path = Path(file_path)
    format = _detect_format(file_path, format)

    # Create parent directories if they don't exist
    file_path.parent.mkdir(parents=True, exist_ok=True)

    with open(file_path, "w", encoding="utf-8") as f:
        if format == "yaml":
            yaml.safe_dump(data, f, indent=indent, default_flow_style=False, sort_keys=False, **kwargs)
        else:
            json.dump(data, f, indent=indent, ensure_ascii=False, **kwargs)
            f.write("\n")


def load_data(file_path: Union[str, Path]) -> Any:
    """Read a JSON or YAML file (YAML is a superset of JSON, so one parser covers both)."""
    with open(file_path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


def load_model(file_path: Union[str, Path], model_class: Type[T]) -> T:
    """
    Loads a Pydantic model from a JSON or YAML file.

    Args:
        file_path: The path to the file.
        model_class: The Pydantic model class to instantiate.

    Returns:
        An instance of the Pydantic model.
    """
    data = load_data(file_path)
    return model_class.model_validate(data or {})
