"""
Conversion Service

Parses and renders the four interval representations and converts between
them through the cubic coordinate, which every bijection reaches directly.
"""

import logging
from typing import Union

import orjson
from pydantic import ValidationError

from app.core.errors import ParseError
from app.domain.cubic import CubicCoordinate, parse_cubic_coordinate, phi, phi_inv, psi, psi_inv
from app.domain.diagrams import TamariIntervalDiagram, parse_tid_text
from app.domain.interval_posets import (
    IntervalPoset,
    TamariInterval,
    chi,
    chi_inv,
    from_payload_dict,
    to_payload_dict,
)
from app.domain.trees import from_bracket_word, from_nested, to_bracket_word, to_nested
from app.schemas.schemas import (
    CubicCoordinatePayload,
    IntervalPosetPayload,
    RepresentationEnum,
    TidPayload,
    TreePairPayload,
)

logger = logging.getLogger(__name__)

IntervalObject = Union[TamariInterval, IntervalPoset, TamariIntervalDiagram, CubicCoordinate]


class ConversionService:
    """Round-trip conversions between tree-pair, interval-poset, tid and cc"""

    def parse(self, text: str, representation: RepresentationEnum) -> IntervalObject:
        """
        Parse JSON (objects or arrays) or the text form of a representation.

        Raises:
            ParseError: malformed input
            InvalidObjectError: well-formed input naming an invalid object
        """
        text = text.strip()
        if text.startswith("{") or text.startswith("["):
            try:
                data = orjson.loads(text)
            except orjson.JSONDecodeError as e:
                raise ParseError(f"Invalid JSON: {e}") from e
            return self._from_json(data, representation)
        return self._from_text(text, representation)

    def _from_json(self, data, representation: RepresentationEnum) -> IntervalObject:
        try:
            if representation == RepresentationEnum.CC:
                payload = CubicCoordinatePayload.model_validate(data)
                return CubicCoordinate(tuple(payload.root))
            if representation == RepresentationEnum.TID:
                payload = TidPayload.model_validate(data)
                return TamariIntervalDiagram.from_words(payload.u, payload.v)
            if representation == RepresentationEnum.INTERVAL_POSET:
                payload = IntervalPosetPayload.model_validate(data)
                return from_payload_dict(payload.model_dump())
            payload = TreePairPayload.model_validate(data)
            return TamariInterval(from_nested(payload.lower.root), from_nested(payload.upper.root))
        except ValidationError as e:
            raise ParseError(f"Invalid {representation.value} payload: {e.errors()[0]['msg']}") from e

    def _from_text(self, text: str, representation: RepresentationEnum) -> IntervalObject:
        if representation == RepresentationEnum.CC:
            return parse_cubic_coordinate(text)
        if representation == RepresentationEnum.TID:
            return parse_tid_text(text)
        if representation == RepresentationEnum.TREE_PAIR:
            parts = text.split()
            if len(parts) != 2:
                raise ParseError("A tree pair is two bracket words separated by a space")
            return TamariInterval(from_bracket_word(parts[0]), from_bracket_word(parts[1]))
        raise ParseError("Interval-posets are read from JSON only")

    def to_cc(self, obj: IntervalObject) -> CubicCoordinate:
        if isinstance(obj, CubicCoordinate):
            return obj
        if isinstance(obj, TamariIntervalDiagram):
            return phi_inv(obj)
        if isinstance(obj, IntervalPoset):
            return phi_inv(chi_inv(obj))
        return psi(obj)

    def from_cc(self, c: CubicCoordinate, representation: RepresentationEnum) -> IntervalObject:
        if representation == RepresentationEnum.CC:
            return c
        if representation == RepresentationEnum.TID:
            return phi(c)
        if representation == RepresentationEnum.INTERVAL_POSET:
            return chi(phi(c))
        return psi_inv(c)

    def convert(
        self,
        obj: IntervalObject,
        target: RepresentationEnum,
    ) -> IntervalObject:
        return self.from_cc(self.to_cc(obj), target)

    def to_json_data(self, obj: IntervalObject):
        if isinstance(obj, CubicCoordinate):
            return list(obj.components)
        if isinstance(obj, TamariIntervalDiagram):
            return {"u": list(obj.u.word), "v": list(obj.v.word)}
        if isinstance(obj, IntervalPoset):
            return to_payload_dict(obj)
        return {"lower": to_nested(obj.lower), "upper": to_nested(obj.upper)}

    def render(self, obj: IntervalObject, output_format: str = "json") -> str:
        if output_format == "json":
            return orjson.dumps(self.to_json_data(obj), option=orjson.OPT_SORT_KEYS).decode()
        if isinstance(obj, CubicCoordinate):
            return str(obj)
        if isinstance(obj, TamariIntervalDiagram):
            return obj.to_text()
        if isinstance(obj, TamariInterval):
            return f"{to_bracket_word(obj.lower)} {to_bracket_word(obj.upper)}"
        return orjson.dumps(self.to_json_data(obj), option=orjson.OPT_SORT_KEYS).decode()


conversion_service = ConversionService()
