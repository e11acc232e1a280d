"""Quotient route: class enumeration, the class graph, and its Wiener aggregate.

Elements generating the same principal ideal form an equivalence class, so
the class is identified by its ideal label and its size follows from the
totient alone; no element is ever enumerated here.  Distinct classes are
adjacent exactly when their labelled ideals are mutually non-containing,
and all element-level distance information lives in that class graph: two
classmates sit at distance 2 through any neighboring class, while vertices
of different classes inherit the class-graph distance.  The Wiener index
is therefore

    2 * sum_i C(size_i, 2)  +  sum_{i<j} size_i * size_j * d(i, j)

whenever the class graph is connected and a second class exists; the
degenerate layouts (no classes, one singleton class, one non-singleton
class, disconnected class graph) are resolved explicitly first.
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass
from math import comb

from .numtheory import euler_phi, proper_divisors
from .report import STATUS_DISCONNECTED, STATUS_EMPTY, STATUS_VALUE, WienerReport
from .ringspec import FAMILY_Z, IdealLabel, RingSpec, labels_comparable


@dataclass(frozen=True)
class ClassInfo:
    """One equivalence class: its ideal label and exact element count."""

    key: IdealLabel
    size: int


@dataclass
class QuotientGraph:
    """Classes of a ring plus adjacency between them, indexed positionally."""

    spec: RingSpec
    classes: list[ClassInfo]
    adjacency: list[list[int]]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, neigh in enumerate(self.adjacency) for j in neigh if j > i]


def enumerate_classes(spec: RingSpec) -> list[ClassInfo]:
    """All vertex classes with arithmetic sizes, ordered lexicographically by key.

    For Z(n) this is one class per proper divisor d with size phi(n/d).  For
    products, keys run over the Cartesian product of per-component label
    sets minus the all-zero and all-unit tuples, and sizes multiply
    componentwise (phi(m/d) for an integers-mod component, q - 1 or 1 for
    the nonzero/zero label of a field component).
    """
    if spec.family == FAMILY_Z:
        n = spec.components[0]
        return [ClassInfo((d,), euler_phi(n // d)) for d in proper_divisors(n)]
    label_sets = [spec.component_labels(i) for i in range(len(spec.components))]
    zero_key = spec.components
    unit_key = tuple(1 for _ in spec.components)
    out = []
    for key in itertools.product(*label_sets):
        if key == zero_key or key == unit_key:
            continue
        size = 1
        for i, d in enumerate(key):
            size *= spec.label_class_size(i, d)
        out.append(ClassInfo(key, size))
    return out


def class_adjacent(a: IdealLabel, b: IdealLabel) -> bool:
    """True when classes with these labels are adjacent (mutual non-containment)."""
    if a == b:
        raise ValueError(f"class_adjacent needs two distinct labels, got {a} twice")
    return not labels_comparable(a, b)


def build_quotient_graph(spec: RingSpec) -> QuotientGraph:
    classes = enumerate_classes(spec)
    adjacency: list[list[int]] = [[] for _ in classes]
    for i, a in enumerate(classes):
        for j in range(i + 1, len(classes)):
            if class_adjacent(a.key, classes[j].key):
                adjacency[i].append(j)
                adjacency[j].append(i)
    return QuotientGraph(spec, classes, adjacency)


def quotient_distances(qg: QuotientGraph) -> tuple[list[list[int | None]], bool]:
    """BFS distance table over class pairs, plus whether the class graph is connected."""
    n = qg.class_count
    table: list[list[int | None]] = []
    for s in range(n):
        dist: list[int | None] = [None] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in qg.adjacency[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        table.append(dist)
    connected = n <= 1 or all(d is not None for d in table[0])
    return table, connected


def _class_components(qg: QuotientGraph) -> list[list[int]]:
    seen = [False] * qg.class_count
    comps = []
    for s in range(qg.class_count):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in qg.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(comp)
    return comps


def wiener_quotient(spec: RingSpec) -> WienerReport:
    """Wiener index from class sizes and class-graph BFS distances."""
    t0 = time.perf_counter()
    qg = build_quotient_graph(spec)
    classes = qg.classes
    k = len(classes)
    if k == 0:
        return WienerReport(
            status=STATUS_EMPTY,
            method="quotient",
            vertex_count=0,
            class_count=0,
            component_count=0,
            elapsed=time.perf_counter() - t0,
        )

    sizes = [c.size for c in classes]
    vertex_count = sum(sizes)
    if k == 1:
        # A lone class is edgeless: one vertex is the whole (trivial) graph,
        # two or more are pairwise unreachable.
        if sizes[0] == 1:
            return WienerReport(
                status=STATUS_VALUE,
                method="quotient",
                vertex_count=1,
                class_count=1,
                component_count=1,
                wiener=0,
                elapsed=time.perf_counter() - t0,
            )
        return WienerReport(
            status=STATUS_DISCONNECTED,
            method="quotient",
            vertex_count=vertex_count,
            class_count=1,
            component_count=vertex_count,
            elapsed=time.perf_counter() - t0,
        )

    table, connected = quotient_distances(qg)
    if not connected:
        # An isolated class scatters into isolated vertices; any other class
        # component glues into a single element-level component.
        components = 0
        for comp in _class_components(qg):
            if len(comp) == 1:
                components += sizes[comp[0]]
            else:
                components += 1
        return WienerReport(
            status=STATUS_DISCONNECTED,
            method="quotient",
            vertex_count=vertex_count,
            class_count=k,
            component_count=components,
            elapsed=time.perf_counter() - t0,
        )

    total = 2 * sum(comb(s, 2) for s in sizes)
    max_pair = 0
    for i in range(k):
        row = table[i]
        for j in range(i + 1, k):
            d = row[j]
            total += sizes[i] * sizes[j] * d
            if d > max_pair:
                max_pair = d
    diameter = max(max_pair, 2 if any(s >= 2 for s in sizes) else 0)
    return WienerReport(
        status=STATUS_VALUE,
        method="quotient",
        vertex_count=vertex_count,
        class_count=k,
        component_count=1,
        wiener=total,
        diameter=diameter,
        elapsed=time.perf_counter() - t0,
    )
