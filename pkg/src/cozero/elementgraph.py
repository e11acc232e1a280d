"""Element-level construction of the cozero-divisor graph, plus its Wiener index.

The graph of a ring has one vertex per element that is neither zero nor a
unit; two distinct vertices are adjacent exactly when neither one's
principal ideal contains the other's.  This module materializes that graph
from the actual elements and computes all pairwise distances by BFS from
every single vertex, making it the ground-truth oracle the arithmetic
routes are checked against.

Because adjacency between two elements depends only on their ideal labels,
vertices sharing a label have identical neighbor sets.  The BFS below
exploits that to run each per-source search on bitmask frontiers (one
Python int per frontier, one OR per label group and level) instead of
walking explicit adjacency lists; it still performs a genuine breadth-first
search from every vertex and assumes nothing about distances, diameter, or
connectivity.
"""

from __future__ import annotations

import itertools
import os
import time
from math import gcd

from .report import STATUS_DISCONNECTED, STATUS_EMPTY, STATUS_VALUE, WienerReport
from .ringspec import FAMILY_Z, IdealLabel, RingSpec, ideal_contains

BRUTE_LIMIT_ENV = "COZERO_BRUTE_LIMIT"
DEFAULT_BRUTE_LIMIT = 100_000


class BruteForceLimitError(ValueError):
    """Raised when a ring is too large for element-level enumeration."""


def resolve_brute_limit(limit: int | None = None) -> int:
    """Effective element cap: explicit argument, else env var, else default."""
    if limit is not None:
        return limit
    env = os.environ.get(BRUTE_LIMIT_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{BRUTE_LIMIT_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_BRUTE_LIMIT


class ElementGraph:
    """The graph on all non-zero non-unit elements of a ring.

    Vertices are element tuples in lexicographic order.  Adjacency is kept
    per label group: `group_keys[g]` lists the distinct ideal labels,
    `group_members[g]` the vertex indices carrying each label, and
    `group_adjacency[g]` the groups whose labels are mutually
    non-containing with it.  Two vertices are adjacent exactly when their
    groups are, and never within one group.
    """

    def __init__(
        self,
        spec: RingSpec,
        vertices: list[tuple[int, ...]],
        labels: list[IdealLabel],
        group_keys: list[IdealLabel],
        group_members: list[list[int]],
        group_adjacency: list[list[int]],
    ) -> None:
        self.spec = spec
        self.vertices = vertices
        self.labels = labels
        self.group_keys = group_keys
        self.group_members = group_members
        self.group_adjacency = group_adjacency
        self._group_index = {key: g for g, key in enumerate(group_keys)}
        self._group_of_vertex = [self._group_index[lab] for lab in labels]
        self._adjacency_sets = [set(neigh) for neigh in group_adjacency]
        self._group_bits: list[int] | None = None
        self._group_rows: list[int] | None = None

    def __repr__(self) -> str:
        return (
            f"ElementGraph({self.spec}, vertices={len(self.vertices)}, "
            f"groups={len(self.group_keys)}, edges={self.edge_count()})"
        )

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def group_of(self, i: int) -> int:
        return self._group_of_vertex[i]

    def adjacent(self, i: int, j: int) -> bool:
        """True when distinct vertices i and j share an edge."""
        if i == j:
            return False
        return self._group_of_vertex[j] in self._adjacency_sets[self._group_of_vertex[i]]

    def neighbors(self, i: int) -> list[int]:
        """Neighbor indices of vertex i, ascending."""
        out: list[int] = []
        for g in self.group_adjacency[self._group_of_vertex[i]]:
            out.extend(self.group_members[g])
        out.sort()
        return out

    def degree(self, i: int) -> int:
        return sum(len(self.group_members[g]) for g in self.group_adjacency[self._group_of_vertex[i]])

    def edge_count(self) -> int:
        total = 0
        for g, neigh in enumerate(self.group_adjacency):
            for h in neigh:
                if h > g:
                    total += len(self.group_members[g]) * len(self.group_members[h])
        return total

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) index pairs with i < j, lexicographic."""
        out: list[tuple[int, int]] = []
        for g, neigh in enumerate(self.group_adjacency):
            for h in neigh:
                if h > g:
                    for i in self.group_members[g]:
                        for j in self.group_members[h]:
                            out.append((i, j) if i < j else (j, i))
        out.sort()
        return out

    def _bitmasks(self) -> tuple[list[int], list[int]]:
        # group_bits[g]: members of group g as a bitmask over vertex indices;
        # group_rows[g]: the shared neighbor bitmask of every vertex in g.
        if self._group_bits is None:
            nbytes = (len(self.vertices) + 7) // 8
            bits = []
            for members in self.group_members:
                buf = bytearray(nbytes)
                for i in members:
                    buf[i >> 3] |= 1 << (i & 7)
                bits.append(int.from_bytes(buf, "little"))
            rows = []
            for g in range(len(self.group_keys)):
                row = 0
                for h in self.group_adjacency[g]:
                    row |= bits[h]
                rows.append(row)
            self._group_bits = bits
            self._group_rows = rows
        return self._group_bits, self._group_rows

    def bfs_distances(self, source: int) -> list[int | None]:
        """Shortest-path distances from one vertex; None where unreachable."""
        bits, rows = self._bitmasks()
        dist: list[int | None] = [None] * len(self.vertices)
        dist[source] = 0
        seen = 1 << source
        frontier = rows[self._group_of_vertex[source]] & ~seen
        d = 0
        while frontier:
            d += 1
            mask = frontier
            while mask:
                low = mask & -mask
                dist[low.bit_length() - 1] = d
                mask ^= low
            seen |= frontier
            nxt = 0
            for g in range(len(self.group_keys)):
                if frontier & bits[g]:
                    nxt |= rows[g]
            frontier = nxt & ~seen
        return dist


def build_graph(spec: RingSpec, limit: int | None = None) -> ElementGraph:
    """Enumerate all elements of the ring and assemble its cozero-divisor graph.

    Refuses rings with more elements than the brute-force limit (argument,
    COZERO_BRUTE_LIMIT environment variable, or the built-in default).
    """
    cap = resolve_brute_limit(limit)
    card = spec.cardinality
    if card > cap:
        raise BruteForceLimitError(
            f"ring {spec} has {card} elements, above the brute-force limit of {cap}"
        )

    # Per-component label lookup tables; fields label on zero vs nonzero only.
    tables = []
    for c in spec.components:
        if spec.is_field_product:
            tables.append([c] + [1] * (c - 1))
        else:
            tables.append([c] + [gcd(x, c) for x in range(1, c)])

    vertices: list[tuple[int, ...]] = []
    labels: list[IdealLabel] = []
    comps = spec.components
    for element in itertools.product(*(range(c) for c in comps)):
        label = tuple(tables[i][x] for i, x in enumerate(element))
        if all(d == c for d, c in zip(label, comps)):
            continue  # zero element
        if all(d == 1 for d in label):
            continue  # unit
        vertices.append(element)
        labels.append(label)

    members: dict[IdealLabel, list[int]] = {}
    for i, lab in enumerate(labels):
        members.setdefault(lab, []).append(i)
    group_keys = sorted(members)
    group_members = [members[k] for k in group_keys]
    group_adjacency: list[list[int]] = [[] for _ in group_keys]
    for g, a in enumerate(group_keys):
        for h in range(g + 1, len(group_keys)):
            b = group_keys[h]
            if not ideal_contains(a, b) and not ideal_contains(b, a):
                group_adjacency[g].append(h)
                group_adjacency[h].append(g)
    return ElementGraph(spec, vertices, labels, group_keys, group_members, group_adjacency)


def compute_wiener(graph: ElementGraph) -> WienerReport:
    """Run BFS from every vertex of a built graph and aggregate the results."""
    t0 = time.perf_counter()
    n = graph.vertex_count
    if n == 0:
        return WienerReport(
            status=STATUS_EMPTY,
            method="brute",
            vertex_count=0,
            class_count=0,
            component_count=0,
            edge_count=0,
            elapsed=time.perf_counter() - t0,
        )

    bits, rows = graph._bitmasks()
    group_range = range(len(graph.group_keys))
    group_of = graph._group_of_vertex
    full = (1 << n) - 1

    components = 0
    remaining = full
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = rows[group_of[low.bit_length() - 1]] & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            for g in group_range:
                if frontier & bits[g]:
                    nxt |= rows[g]
            frontier = nxt & ~comp
        components += 1
        remaining &= ~comp

    if components > 1:
        return WienerReport(
            status=STATUS_DISCONNECTED,
            method="brute",
            vertex_count=n,
            class_count=len(graph.group_keys),
            component_count=components,
            edge_count=graph.edge_count(),
            elapsed=time.perf_counter() - t0,
        )

    total = 0
    diameter = 0
    for s in range(n):
        seen = 1 << s
        frontier = rows[group_of[s]] & ~seen
        d = 0
        while frontier:
            d += 1
            total += d * frontier.bit_count()
            seen |= frontier
            nxt = 0
            for g in group_range:
                if frontier & bits[g]:
                    nxt |= rows[g]
            frontier = nxt & ~seen
        if d > diameter:
            diameter = d

    return WienerReport(
        status=STATUS_VALUE,
        method="brute",
        vertex_count=n,
        class_count=len(graph.group_keys),
        component_count=1,
        wiener=total // 2,
        edge_count=graph.edge_count(),
        diameter=diameter if n >= 2 else None,
        elapsed=time.perf_counter() - t0,
    )


def wiener_brute(spec: RingSpec, limit: int | None = None) -> WienerReport:
    """Wiener index by exhaustive element enumeration and all-sources BFS."""
    return compute_wiener(build_graph(spec, limit))


def vertex_name(spec: RingSpec, element: tuple[int, ...]) -> str:
    """Stable display name of an element: bare integer for Z(n), tuple otherwise."""
    if spec.family == FAMILY_Z:
        return str(element[0])
    return "(" + ",".join(str(x) for x in element) + ")"


def graph_export(graph: ElementGraph, fmt: str) -> str:
    """Serialize a graph as Graphviz DOT or a plain edge list.

    Output is byte-stable for a given spec: vertices appear in lexicographic
    element order and each edge once, lexicographically.
    """
    names = [vertex_name(graph.spec, v) for v in graph.vertices]
    if fmt == "dot":
        lines = ["graph {"]
        lines.extend(f'  "{name}";' for name in names)
        lines.extend(f'  "{names[i]}" -- "{names[j]}";' for i, j in graph.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "edgelist":
        return "".join(f"{names[i]} {names[j]}\n" for i, j in graph.edges())
    raise ValueError(f"unknown export format {fmt!r}: expected 'dot' or 'edgelist'")
