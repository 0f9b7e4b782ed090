"""
================================================================================
FAN GRAPH MODULE - Graph of Multiple Points
================================================================================

The graph G(L) of a real arrangement: its vertices are the multiple points
(three or more lines), and every line carrying at least two multiple points
contributes the segments between consecutive multiple points as edges.
Simple intersections between two graph lines are ignored.

Classification follows the cycle-tree criterion: a connected component with
at most one cycle (edge count <= vertex count) is a cycle-tree graph. Pure
trees are accepted as degenerate cycle-trees.
================================================================================
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import networkx as nx

from modules.geometry.arrangement import Arrangement, Line
from modules.geometry.lattice import IncidenceLattice, build_lattice

logger = logging.getLogger(__name__)

ISOLATED_VERTEX = 'isolated-vertex'
TREE = 'tree'
SINGLE_CYCLE = 'single-cycle'
UNICYCLIC_WITH_TREES = 'unicyclic-with-trees'
OTHER = 'other'


# =============================================================================
# DATA TYPES
# =============================================================================
@dataclass(frozen=True)
class FanEdge:
    a: int
    b: int
    line: int


@dataclass(frozen=True)
class FanGraph:
    """Vertices are indices into `lattice.points`; edges are labeled by line."""

    lattice: IncidenceLattice
    vertices: Tuple[int, ...]
    edges: Tuple[FanEdge, ...]

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.a, edge.b, line=edge.line)
        return graph


@dataclass(frozen=True)
class ComponentRecord:
    vertices: Tuple[int, ...]
    vertex_count: int
    edge_count: int
    kind: str

    def to_dict(self) -> dict:
        return {
            'vertices': list(self.vertices),
            'vertex_count': self.vertex_count,
            'edge_count': self.edge_count,
            'kind': self.kind,
        }


@dataclass(frozen=True)
class GraphClassification:
    components: Tuple[ComponentRecord, ...]

    @property
    def has_no_edges(self) -> bool:
        return all(c.kind == ISOLATED_VERTEX for c in self.components)

    @property
    def is_union_of_cycles(self) -> bool:
        return all(c.kind in (ISOLATED_VERTEX, SINGLE_CYCLE) for c in self.components)

    @property
    def is_union_of_cycle_trees(self) -> bool:
        return all(c.edge_count <= c.vertex_count for c in self.components)

    def to_dict(self) -> dict:
        return {
            'has_no_edges': self.has_no_edges,
            'is_union_of_cycles': self.is_union_of_cycles,
            'is_union_of_cycle_trees': self.is_union_of_cycle_trees,
            'components': [c.to_dict() for c in self.components],
        }


@dataclass(frozen=True)
class Certificate:
    applicable: bool
    reason: str

    def to_dict(self) -> dict:
        return {'applicable': self.applicable, 'reason': self.reason}


# =============================================================================
# CONSTRUCTION
# =============================================================================
def build_fan_graph(lat: IncidenceLattice) -> FanGraph:
    """Multiple points joined by consecutive segments along graph lines."""
    vertices = tuple(k for k, p in enumerate(lat.points) if p.is_multiple)
    multiple = set(vertices)

    edges = []
    for line_index, order in enumerate(lat.line_points):
        on_line = [k for k in order if k in multiple]
        if len(on_line) < 2:
            continue
        for a, b in zip(on_line, on_line[1:]):
            edges.append(FanEdge(a, b, line_index))

    logger.info("fan graph: %d vertices, %d edges", len(vertices), len(edges))
    return FanGraph(lat, vertices, tuple(edges))


def graph_to_json(g: FanGraph) -> dict:
    """Adjacency export: {vertices: [{id, location, lines}], edges: [{a, b, line}]}."""
    vertices = []
    for k in g.vertices:
        point = g.lattice.points[k]
        vertices.append({
            'id': k,
            'location': [str(point.location[0]), str(point.location[1])],
            'lines': list(point.lines),
        })
    edges = [{'a': e.a, 'b': e.b, 'line': e.line} for e in g.edges]
    return {'vertices': vertices, 'edges': edges}


# =============================================================================
# CLASSIFICATION
# =============================================================================
def _component_kind(sub: nx.MultiGraph) -> str:
    v = sub.number_of_nodes()
    e = sub.number_of_edges()
    if e == 0:
        return ISOLATED_VERTEX
    if e == v - 1:
        return TREE
    if e == v:
        if all(degree == 2 for _, degree in sub.degree()):
            return SINGLE_CYCLE
        return UNICYCLIC_WITH_TREES
    return OTHER


def classify(g: FanGraph) -> GraphClassification:
    graph = g.to_networkx()
    components = []
    for nodes in nx.connected_components(graph):
        sub = graph.subgraph(nodes)
        components.append(ComponentRecord(
            vertices=tuple(sorted(nodes)),
            vertex_count=sub.number_of_nodes(),
            edge_count=sub.number_of_edges(),
            kind=_component_kind(sub),
        ))
    components.sort(key=lambda c: c.vertices)
    return GraphClassification(tuple(components))


def certify_conjugation_free(arr: Arrangement) -> Certificate:
    """
    Whether the cycle-tree corollary applies to `arr`.

    The reason names the first component with more edges than vertices, or
    flags tree components since trees are accepted as degenerate cycle-trees.
    """
    classification = classify(build_fan_graph(build_lattice(arr)))
    for component in classification.components:
        if component.edge_count > component.vertex_count:
            return Certificate(False,
                f"component on points {list(component.vertices)} has more edges "
                f"({component.edge_count}) than vertices ({component.vertex_count})")

    if classification.has_no_edges:
        return Certificate(True, "graph has no edges")
    if any(c.kind == TREE for c in classification.components):
        return Certificate(True, "union of cycle-trees; tree component (degenerate cycle-tree)")
    return Certificate(True, "union of cycle-trees")


# =============================================================================
# LINE ADDITION
# =============================================================================
LINE_TRANSVERSAL = 'transversal'
LINE_THROUGH_ONE_POINT = 'through-one-point'
LINE_OTHER = 'other'


@dataclass(frozen=True)
class LineAddition:
    kind: str
    point: Optional[int] = None

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'point': self.point}


def classify_line_addition(arr: Arrangement, line: Line) -> LineAddition:
    """
    How a new line meets an arrangement.

    - transversal: it meets every line of `arr` in a new simple point
    - through-one-point: it passes through exactly one intersection point of
      `arr` and meets the remaining lines in new simple points
    - other: anything else (parallels, two or more old points, new multiple
      points)

    The first two moves keep a conjugation-free presentation.
    """
    old = build_lattice(arr)
    extended = arr.with_line(line)
    new_index = len(arr)
    lattice = build_lattice(extended)

    old_locations = {p.location: k for k, p in enumerate(old.points)}
    through = set()
    for i in range(len(arr)):
        point = lattice.point_of(i, new_index)
        if point is None:
            return LineAddition(LINE_OTHER)
        if point.location in old_locations:
            through.add(old_locations[point.location])
        elif point.multiplicity != 2:
            return LineAddition(LINE_OTHER)

    if not through:
        return LineAddition(LINE_TRANSVERSAL)
    if len(through) == 1:
        return LineAddition(LINE_THROUGH_ONE_POINT, through.pop())
    return LineAddition(LINE_OTHER)
