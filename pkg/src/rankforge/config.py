"""Enumeration budget shared by all exhaustive operations."""

from __future__ import annotations

import contextlib
import os
from typing import Iterator

from .errors import BudgetExceeded

DEFAULT_BUDGET = 1 << 24
ENV_VAR = "RANKFORGE_BUDGET"

_override: int | None = None


def get_budget() -> int:
    if _override is not None:
        return _override
    raw = os.environ.get(ENV_VAR)
    if raw:
        value = int(raw)
        if value < 1:
            raise ValueError(f"{ENV_VAR} must be >= 1, got {value}")
        return value
    return DEFAULT_BUDGET


def set_budget(value: int | None) -> None:
    """Set a process-wide override; ``None`` restores env/default lookup."""
    global _override
    if value is not None and value < 1:
        raise ValueError("budget must be >= 1")
    _override = value


@contextlib.contextmanager
def budget(value: int) -> Iterator[None]:
    global _override
    previous = _override
    set_budget(value)
    try:
        yield
    finally:
        _override = previous


def check_budget(count: int, what: str = "objects") -> None:
    limit = get_budget()
    if count > limit:
        raise BudgetExceeded(f"enumerating {count} {what} exceeds budget {limit}")
