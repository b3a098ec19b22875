"""Outerstring recognition and grounded L/mirrored-L drawings for series-parallel graphs."""

from __future__ import annotations

from .construct import construct_representation
from .geometry import GroundedCurve, Representation, crossings, verify
from .graph import Graph, SeparationPair
from .heaviness import decide

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GroundedCurve",
    "Representation",
    "SeparationPair",
    "construct_representation",
    "crossings",
    "decide",
    "verify",
]
