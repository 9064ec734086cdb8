"""Exception types raised across the package."""

from __future__ import annotations


class DivGraphError(Exception):
    """Base class for every error raised by divgraph."""


class ConfigError(DivGraphError, ValueError):
    """A configured bound (sieve cap, oracle cap, budget) was violated."""


class VertexRangeError(DivGraphError, ValueError):
    """A vertex label or interval lies outside the graph or the sieve."""


class DomainError(DivGraphError, ValueError):
    """An argument is in range but violates a mathematical precondition."""


class WidthOverflowError(DivGraphError, OverflowError):
    """An intermediate left the signed 128-bit range."""


INT128_MAX = (1 << 127) - 1


def check_width(value: int, what: str = "value") -> int:
    if not -INT128_MAX - 1 <= value <= INT128_MAX:
        raise WidthOverflowError(f"{what} exceeds the signed 128-bit range")
    return value
