"""Analysis toolkit for perfect binary codes and their relatives:
equivalence and automorphisms via canonical graph labeling, extracted
Steiner systems, switching classes, defining-set and embedding searches,
MacWilliams/orthogonal-array checks, and mixed-alphabet compressions.
"""

from .refinement import BACKEND as kernel_backend
from .words import (
    BinaryCode,
    DistanceDistribution,
    distance,
    distance_distribution,
    extend,
    is_perfect,
    is_self_complementary,
    min_distance,
    puncture,
    shorten,
    weight,
)

__all__ = [
    "BinaryCode",
    "DistanceDistribution",
    "distance",
    "distance_distribution",
    "extend",
    "is_perfect",
    "is_self_complementary",
    "kernel_backend",
    "min_distance",
    "puncture",
    "shorten",
    "weight",
]

__version__ = "0.1.0"
