"""
Schemas module initialization
"""

from app.schemas.schemas import (
    # Enums
    RepresentationEnum,
    CheckSuiteEnum,
    CacheRepresentationEnum,
    # Objects
    TreePayload,
    TreePairPayload,
    TidPayload,
    IntervalPosetPayload,
    CubicCoordinatePayload,
    CellPayload,
    # Reports
    CountsResponse,
    RealizationGraph,
    CheckReport,
    ShellingReport,
    VolumeReport,
    CacheEntryHeader,
    # Errors
    ErrorResponse,
    to_json,
)

__all__ = [
    "RepresentationEnum",
    "CheckSuiteEnum",
    "CacheRepresentationEnum",
    "TreePayload",
    "TreePairPayload",
    "TidPayload",
    "IntervalPosetPayload",
    "CubicCoordinatePayload",
    "CellPayload",
    "CountsResponse",
    "RealizationGraph",
    "CheckReport",
    "ShellingReport",
    "VolumeReport",
    "CacheEntryHeader",
    "ErrorResponse",
    "to_json",
]
