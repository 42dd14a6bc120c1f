"""
JSON documents for chord diagrams and graphs.

A diagram document lists its chords as (tail, head) endpoint pairs in label
order; ``order`` (1-based chord numbers from l_1 to l_n) overrides the list
order. A graph document lists 0-based edges. Both carry ``schema_version``
1. See ``docs/file-formats.md``.
"""

import json
import logging
from pathlib import Path
from typing import List, Literal, Optional, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .chord_core import ChordDiagram, ChordSystem, SimpleGraph
from .errors import DocumentParseError, InvalidDiagramError, InvalidGraphError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

DocumentT = TypeVar("DocumentT", bound=BaseModel)


class ChordEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    tail: int = Field(ge=0)
    head: int = Field(ge=0)


class DiagramDocument(BaseModel):
    """Serialized chord system."""

    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1] = SCHEMA_VERSION
    name: Optional[str] = None
    points: int = Field(ge=2)
    chords: List[ChordEntry] = Field(min_length=1)
    order: Optional[List[int]] = None

    @model_validator(mode="after")
    def check_matching(self) -> "DiagramDocument":
        n = len(self.chords)
        if self.points != 2 * n:
            raise ValueError(f"points must be twice the chord count ({2 * n}), got {self.points}")
        for number, chord in enumerate(self.chords, start=1):
            if chord.tail == chord.head:
                raise ValueError(f"chord {number} has tail equal to head ({chord.tail})")
        endpoints = sorted(p for chord in self.chords for p in (chord.tail, chord.head))
        if endpoints != list(range(self.points)):
            raise ValueError(f"chords must use every endpoint 0..{self.points - 1} exactly once")
        if self.order is not None and sorted(self.order) != list(range(1, n + 1)):
            raise ValueError(f"order must be a permutation of 1..{n}, got {self.order}")
        return self

    def to_system(self) -> ChordSystem:
        diagram = ChordDiagram(tuple((c.tail, c.head) for c in self.chords))
        orientations = tuple((c.tail, c.head) for c in self.chords)
        order = tuple(k - 1 for k in self.order) if self.order is not None else tuple(range(len(self.chords)))
        return ChordSystem(diagram, orientations, order)

    @classmethod
    def from_system(cls, system: ChordSystem, name: Optional[str] = None) -> "DiagramDocument":
        """Document for a system; ``order`` is written only when it is not the list order."""
        identity = system.order == tuple(range(system.n))
        return cls(
            name=name,
            points=system.diagram.points,
            chords=[ChordEntry(tail=t, head=h) for t, h in system.orientations],
            order=None if identity else [label + 1 for label in system.order],
        )


class GraphDocument(BaseModel):
    """Serialized simple graph on vertices 0..vertices-1."""

    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1] = SCHEMA_VERSION
    name: Optional[str] = None
    vertices: int = Field(ge=1)
    edges: List[List[int]] = Field(default_factory=list)
    order: Optional[List[int]] = None

    @model_validator(mode="after")
    def check_edges(self) -> "GraphDocument":
        seen = set()
        for edge in self.edges:
            if len(edge) != 2:
                raise ValueError(f"edge {edge} must have exactly two vertices")
            u, v = edge
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise ValueError(f"edge {edge} out of range for {self.vertices} vertices")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {edge}")
            seen.add(key)
        if self.order is not None and sorted(self.order) != list(range(self.vertices)):
            raise ValueError(f"order must be a permutation of 0..{self.vertices - 1}")
        return self

    def to_graph(self) -> SimpleGraph:
        return SimpleGraph.from_edges(self.vertices, self.edges, self.order)

    @classmethod
    def from_graph(cls, graph: SimpleGraph, name: Optional[str] = None) -> "GraphDocument":
        order = list(graph.order) if graph.order is not None else None
        return cls(name=name, vertices=graph.n, edges=[list(e) for e in graph.edges()], order=order)


def _parse(text: str, model: Type[DocumentT], invalid: type) -> DocumentT:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        errors = exc.errors()
        first = errors[0]
        location = ".".join(str(part) for part in first["loc"])
        if all(err["type"] == "value_error" and not err["loc"] for err in errors):
            message = first["msg"].removeprefix("Value error, ")
            raise invalid(message) from exc
        raise DocumentParseError(first["msg"], location=location or None) from exc


def parse_diagram_document(text: str) -> DiagramDocument:
    """Parse JSON text; syntax and schema errors raise ``DocumentParseError``, a bad matching ``InvalidDiagramError``."""
    return _parse(text, DiagramDocument, InvalidDiagramError)


def parse_graph_document(text: str) -> GraphDocument:
    return _parse(text, GraphDocument, InvalidGraphError)


def _read(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentParseError(f"cannot read {path}: {exc.strerror}") from exc


def load_diagram(path: Union[str, Path]) -> DiagramDocument:
    document = parse_diagram_document(_read(path))
    logger.debug("diagram loaded", extra={"path": str(path), "chords": len(document.chords)})
    return document


def load_graph(path: Union[str, Path]) -> GraphDocument:
    return parse_graph_document(_read(path))


def dump_document(document: BaseModel) -> str:
    """Stable JSON text (two-space indent, unset optional fields omitted)."""
    return json.dumps(document.model_dump(mode="json", exclude_none=True), indent=2) + "\n"
