import math
import re

_ANGLE_FRACTION = re.compile(
    r"^\s*(\d*(?:\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d+)?))?\s*$"
)


def parse_angle(value: str | float | int | None) -> float | int | None:
    """Converts angle strings like `2pi/64` or `pi/8` to radians; plain numbers pass through"""
    if value is None or isinstance(value, (int, float)):
        return value
    match = _ANGLE_FRACTION.match(value.lower())
    if not match:
        return float(value)
    multiplier = float(match.group(1)) if match.group(1) else 1.0
    divisor = float(match.group(2)) if match.group(2) else 1.0
    return multiplier * math.pi / divisor


def format_float(value: float | None) -> str:
    """Shortest round-tripping text for a float; `-` stands in for a missing value"""
    if value is None:
        return "-"
    return repr(float(value))
