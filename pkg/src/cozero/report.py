"""Shared outcome record for the Wiener index engines."""

from __future__ import annotations

from dataclasses import dataclass

STATUS_VALUE = "value"
STATUS_EMPTY = "empty_graph"
STATUS_DISCONNECTED = "disconnected"


@dataclass(frozen=True)
class WienerReport:
    """Result of one Wiener computation, by whichever method produced it.

    `wiener` is present exactly when status is "value"; a disconnected
    graph deliberately carries no value because shortest paths between
    components do not exist.  `edge_count` is reported by the element-level
    method only, `diameter` only for connected graphs with two or more
    vertices.  All integers are exact.
    """

    status: str
    method: str
    vertex_count: int
    class_count: int
    component_count: int
    wiener: int | None = None
    edge_count: int | None = None
    diameter: int | None = None
    elapsed: float = 0.0

    def __post_init__(self) -> None:
        if self.status not in (STATUS_VALUE, STATUS_EMPTY, STATUS_DISCONNECTED):
            raise ValueError(f"unknown status {self.status!r}")
        if (self.status == STATUS_EMPTY) != (self.vertex_count == 0):
            raise ValueError("empty_graph status must coincide with an empty vertex set")
        if (self.wiener is not None) != (self.status == STATUS_VALUE):
            raise ValueError("wiener value must be present exactly when status is 'value'")
        if self.wiener is not None and self.wiener < 0:
            raise ValueError("wiener value cannot be negative")
        if self.status == STATUS_VALUE and self.vertex_count == 1 and self.wiener != 0:
            raise ValueError("a single-vertex graph has Wiener index 0")
        if self.diameter is not None and (self.status != STATUS_VALUE or self.vertex_count < 2):
            raise ValueError("diameter applies to connected graphs with >= 2 vertices only")
