"""Planar angle helpers for the sector model

Azimuths are radians in [0, 2pi), measured counter-clockwise from the +x axis.
"""

import math

import numpy as np

TWO_PI = 2 * math.pi
# Slack for boundary comparisons so that a point exactly on a sector edge counts as covered
TOLERANCE = 1e-9


def azimuth(origin, target) -> float:
    """Direction from `origin` to `target`"""
    return math.atan2(target[1] - origin[1], target[0] - origin[0]) % TWO_PI


def angular_offset(a: float, b: float) -> float:
    """Smallest absolute angle between two directions, in [0, pi]"""
    difference = abs(a - b) % TWO_PI
    return min(difference, TWO_PI - difference)


def sector_covers(origin, direction: float, width: float, reach: float, point) -> bool:
    """Whether `point` lies inside the closed sector centered on `direction`"""
    distance = math.dist(origin, point)
    if distance > reach + TOLERANCE:
        return False
    if distance == 0:
        return True
    return angular_offset(azimuth(origin, point), direction) <= width / 2 + TOLERANCE


def sector_mask(
    positions: np.ndarray, origin_index: int, direction: float, width: float, reach: float
) -> np.ndarray:
    """Boolean mask of the positions covered by a sector, origin excluded"""
    offsets = positions - positions[origin_index]
    distances = np.hypot(offsets[:, 0], offsets[:, 1])
    angles = np.arctan2(offsets[:, 1], offsets[:, 0])
    difference = np.abs(angles - direction) % TWO_PI
    difference = np.minimum(difference, TWO_PI - difference)
    covered = (distances <= reach + TOLERANCE) & (
        (difference <= width / 2 + TOLERANCE) | (distances == 0)
    )
    covered[origin_index] = False
    return covered


def arcs_overlap(center_a: float, width_a: float, center_b: float, width_b: float) -> bool:
    """Whether two azimuth intervals share more than a boundary point"""
    return angular_offset(center_a, center_b) + TOLERANCE < (width_a + width_b) / 2
