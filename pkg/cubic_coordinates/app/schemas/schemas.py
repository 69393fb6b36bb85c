"""
Pydantic Schemas for the JSON wire formats
"""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import orjson
from pydantic import BaseModel, ConfigDict, Field, RootModel, field_validator, model_validator


# ============================================
# Enums
# ============================================

class RepresentationEnum(str, Enum):
    TREE_PAIR = "tree-pair"
    INTERVAL_POSET = "interval-poset"
    TID = "tid"
    CC = "cc"


class CheckSuiteEnum(str, Enum):
    BIJECTIONS = "bijections"
    LATTICE = "lattice"
    CELLS = "cells"
    VOLUMES = "volumes"
    SHELLING = "shelling"
    ALL = "all"


class CacheRepresentationEnum(str, Enum):
    CC = "cc"
    TID = "tid"
    TREES = "trees"
    CELLS = "cells"


# ============================================
# Object Schemas
# ============================================

class TreePayload(RootModel[Any]):
    """Nested [left, right] arrays, null for a leaf"""

    @field_validator("root")
    @classmethod
    def validate_shape(cls, v):
        def check(node):
            if node is None:
                return
            if not isinstance(node, list) or len(node) != 2:
                raise ValueError("A tree is null or a two-element array")
            check(node[0])
            check(node[1])

        check(v)
        return v


class TreePairPayload(BaseModel):
    """Tamari interval given by its two bounding trees"""
    lower: TreePayload
    upper: TreePayload


class TidPayload(BaseModel):
    """Tamari interval diagram"""
    u: List[int]
    v: List[int]

    @field_validator("u", "v")
    @classmethod
    def validate_letters(cls, v):
        if any(letter < 0 for letter in v):
            raise ValueError("Diagram letters are non-negative")
        return v

    @model_validator(mode="after")
    def validate_lengths(self):
        if len(self.u) != len(self.v):
            raise ValueError("u and v must have the same length")
        return self


class IntervalPosetPayload(BaseModel):
    """Interval-poset with reflexive pairs omitted"""
    n: int = Field(..., ge=0)
    decreasing: List[Tuple[int, int]] = Field(default_factory=list)
    increasing: List[Tuple[int, int]] = Field(default_factory=list)

    @field_validator("decreasing")
    @classmethod
    def validate_decreasing(cls, v):
        for source, goal in v:
            if source <= goal:
                raise ValueError(f"Decreasing relation ({source}, {goal}) needs source > goal")
        return v

    @field_validator("increasing")
    @classmethod
    def validate_increasing(cls, v):
        for source, goal in v:
            if source >= goal:
                raise ValueError(f"Increasing relation ({source}, {goal}) needs source < goal")
        return v


class CubicCoordinatePayload(RootModel[List[int]]):
    """Array of integers"""


class CellPayload(BaseModel):
    """Cell with its synchronized image and volume"""
    model_config = ConfigDict(populate_by_name=True)

    c_min: List[int] = Field(..., alias="min")
    c_max: List[int] = Field(..., alias="max")
    gamma: List[int]
    volume: int = Field(..., ge=0)


# ============================================
# Report Schemas
# ============================================

class CountsResponse(BaseModel):
    """Sizes of the enumerations at one n"""
    n: int
    cc: int
    synchronized: int
    cells: int
    trees: int
    edges: int
    formula: int


class RealizationGraph(BaseModel):
    """Cover graph of CC(n) with vertices referenced by position"""
    n: int
    vertices: List[List[int]]
    edges: List[Tuple[int, int]]


class CheckReport(BaseModel):
    """Outcome of a check suite"""
    suite: CheckSuiteEnum
    n: int
    passed: bool
    checks: int = 0
    failures: List[str] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)


class ShellingReport(BaseModel):
    """Outcome of the EL-labeling verification at one size"""
    n: int
    full: bool
    pairs: int
    failures: List[str] = Field(default_factory=list)
    certificates: List[Dict[str, Any]] = Field(default_factory=list)


class VolumeReport(BaseModel):
    """Per-cell volumes and their total"""
    n: int
    cells: List[CellPayload]
    total: int


class CacheEntryHeader(BaseModel):
    """First line of a cache file"""
    representation: CacheRepresentationEnum
    n: int = Field(..., ge=1)
    count: int = Field(..., ge=0)
    checksum: str = Field(..., min_length=64, max_length=64)
    version: int = 1


# ============================================
# Error Schemas
# ============================================

class ErrorResponse(BaseModel):
    """Standard error response"""
    success: bool = False
    error_code: str
    message: str
    condition: Optional[str] = None
    witness: Optional[List[int]] = None


def to_json(model: BaseModel, indent: bool = True) -> str:
    """Deterministic JSON (sorted keys) for a schema instance"""
    option = orjson.OPT_SORT_KEYS | (orjson.OPT_INDENT_2 if indent else 0)
    return orjson.dumps(model.model_dump(mode="json", by_alias=True), option=option).decode()
