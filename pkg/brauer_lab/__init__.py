"""Exact Brauer-algebra and symplectic tensor computations.

Submodules are imported lazily so that ``import brauer_lab`` stays cheap and
does not open log files until a module is used.
"""

from __future__ import annotations

from importlib import import_module
from types import ModuleType
from typing import TYPE_CHECKING

__all__: tuple[str, ...] = (
    "scalars",
    "linalg",
    "diagrams",
    "tensor",
    "hyperalg",
    "characters",
    "bmw",
    "experiments",
    "cache_utils",
    "report_utils",
    "config",
)


def __getattr__(name: str) -> ModuleType:
    if name not in __all__:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
    module = globals()[name] = import_module(f".{name}", __name__)
    return module


def __dir__() -> list[str]:
    return sorted(set(globals()) | set(__all__))


if TYPE_CHECKING:
    from . import (bmw, cache_utils, characters, config, diagrams, experiments, hyperalg, linalg,  # noqa: F401
                   report_utils, scalars, tensor)
