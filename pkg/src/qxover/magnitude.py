"""Nonnegative quantities stored as base-10 logarithms.

Threshold sizes and operation counts in this package routinely exceed
anything a float can hold (10^434294 and beyond), so arithmetic is done
on log10 values and conversion back to plain integers is only allowed
while the value still fits comfortably in exact integer range.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

# Largest log10 for which to_int() is considered exact.
EXACT_INT_LIMIT = 15.0

# Relative slack when deciding that a float is "really" an integer.
_SNAP_REL = 1e-9


@dataclass(frozen=True, order=True)
class LogMagnitude:
    """A nonnegative quantity represented by its base-10 logarithm."""

    log10: float

    @classmethod
    def from_value(cls, value: float) -> "LogMagnitude":
        if value < 0:
            raise ValueError(f"magnitude must be nonnegative, got {value}")
        return cls(math.log10(value) if value > 0 else -math.inf)

    @classmethod
    def from_int(cls, value: int) -> "LogMagnitude":
        return cls.from_value(value)

    @property
    def value(self) -> float:
        """The represented quantity as a float; inf when out of range."""
        try:
            return 10.0 ** self.log10
        except OverflowError:
            return math.inf

    def to_int(self) -> int:
        """Exact integer form; only valid below 10^15."""
        if self.log10 >= EXACT_INT_LIMIT:
            raise ValueError(
                f"10^{self.log10:g} is too large for exact integer conversion"
            )
        return snap_int(self.value)

    def __mul__(self, other: "LogMagnitude") -> "LogMagnitude":
        return LogMagnitude(self.log10 + other.log10)

    def __truediv__(self, other: "LogMagnitude") -> "LogMagnitude":
        return LogMagnitude(self.log10 - other.log10)


def snap_int(value: float) -> int:
    """Round to the nearest integer when within float noise, else ceil.

    Bisection and pow() leave results like 999999.9999999999 for roots
    that are exactly 10^6; snapping keeps those cells exact while honest
    non-integer roots still round up.
    """
    nearest = round(value)
    if abs(value - nearest) <= _SNAP_REL * max(1.0, abs(value)):
        return int(nearest)
    return int(math.ceil(value))


def snap_floor(value: float) -> int:
    """Round to the nearest integer when within float noise, else floor."""
    nearest = round(value)
    if abs(value - nearest) <= _SNAP_REL * max(1.0, abs(value)):
        return int(nearest)
    return int(math.floor(value))
