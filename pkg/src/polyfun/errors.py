"""Exception types and the configurable element-count guard."""

from __future__ import annotations

import os

DEFAULT_MAX_ELEMS = 1_000_000
ENV_MAX_ELEMS = "POLYFUN_MAX_ELEMS"


class PolyfunError(Exception):
    """Base class for all library errors."""


class BoundaryError(PolyfunError):
    """Domain/codomain or anchoring mismatch between composed pieces."""


class ShapeError(PolyfunError):
    """Input does not have the shape an operation requires."""


class ResourceBoundError(PolyfunError):
    """A construction would materialize more elements than the bound allows."""


class ModelError(PolyfunError):
    """Model file failed validation; carries located error records."""

    def __init__(self, problems):
        self.problems = list(problems)
        lines = "; ".join(f"{p['pointer']}: {p['message']}" for p in self.problems)
        super().__init__(f"model validation failed: {lines}")


def max_elements() -> int:
    raw = os.environ.get(ENV_MAX_ELEMS)
    if raw is None:
        return DEFAULT_MAX_ELEMS
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_ELEMS


def guard(count: int, what: str = "construction") -> None:
    """Raise if a construction is about to materialize `count` elements."""
    bound = max_elements()
    if count > bound:
        raise ResourceBoundError(
            f"{what} needs {count} intermediate elements, bound is {bound} "
            f"(override with {ENV_MAX_ELEMS})"
        )
