"""
Realization Export

Writes the cover graph of CC(n) as JSON or as a graphviz digraph. For
example, after exporting to 'cc4.gv':

    dot -Tpng -O cc4.gv
"""

import logging
from typing import List, Optional

from app.core.errors import PreconditionError
from app.schemas.schemas import RealizationGraph, to_json
from app.services.enumeration_service import EnumerationService

logger = logging.getLogger(__name__)

EXPORT_FORMATS = ("json", "dot")


class ExportService:
    """Builds and serializes the realization graph from cached enumerations"""

    def __init__(self, enumeration: Optional[EnumerationService] = None):
        self._enumeration = enumeration

    @property
    def enumeration(self) -> EnumerationService:
        if self._enumeration is None:
            self._enumeration = EnumerationService()
        return self._enumeration

    def realization_graph(self, n: int) -> RealizationGraph:
        return RealizationGraph(
            n=n,
            vertices=[list(c.components) for c in self.enumeration.coordinates(n)],
            edges=self.enumeration.cover_edges(n),
        )

    def to_dot(self, graph: RealizationGraph) -> str:
        labels = ["(" + ",".join(str(x) for x in vertex) + ")" for vertex in graph.vertices]
        lines: List[str] = [f"digraph cc{graph.n} {{", "\trankdir=BT;"]
        for k, label in enumerate(labels):
            lines.append(f'\t"{k}" [label="{label}"];')
        for source, target in graph.edges:
            lines.append(f'\t"{source}" -> "{target}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def export(self, n: int, output_format: str) -> str:
        """
        Serialize the realization graph.

        Raises:
            PreconditionError: unknown format
        """
        if output_format not in EXPORT_FORMATS:
            raise PreconditionError(f"Unknown export format {output_format!r}; use json or dot")
        graph = self.realization_graph(n)
        logger.info(f"Exporting realization n={n}: {len(graph.vertices)} vertices, {len(graph.edges)} edges")
        if output_format == "json":
            return to_json(graph) + "\n"
        return self.to_dot(graph)


export_service = ExportService()
