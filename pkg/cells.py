"""Convex subsets of the Cayley graph: descent classes, A-cells and boundary reflections."""
import logging
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from coxeter_core import descent_set

log = logging.getLogger('CELLS')

UP = 'up'
DOWN = 'down'


class CellError(ValueError):
    pass


class DirectionUndefinedError(CellError):
    pass


@dataclass(frozen=True)
class DescentSpec:
    A: frozenset
    D: frozenset

    def __post_init__(self):
        if not self.D <= self.A:
            raise CellError('descent set D must be contained in A')


@dataclass(frozen=True)
class Cell:
    system: object = field(repr=False, compare=False)
    members: tuple
    internal_reflections: frozenset
    boundary_reflections: frozenset
    out_direction: dict = field(default=None, compare=False, repr=False)

    def __len__(self):
        return len(self.members)

    def __contains__(self, w):
        return w in self.member_set

    @cached_property
    def member_set(self):
        return frozenset(self.members)

    @cached_property
    def convexity(self):
        return is_convex(self.system, self)

    @property
    def minimum(self):
        return min(self.members, key=lambda w: (self.system.lengths[w], w))

    def words(self):
        return [self.system.word_string(w) for w in self.members]


def _edge_data(sys, members):
    member_set = frozenset(members)
    internal, boundary = set(), set()
    crossings = {}
    for w in members:
        for s in range(sys.rank):
            x = sys.right[w][s]
            t = sys.reflection_of(w, s)
            if x in member_set:
                internal.add(t)
            else:
                boundary.add(t)
                crossings.setdefault(t, set()).add(UP if sys.lengths[x] > sys.lengths[w] else DOWN)
    return frozenset(internal), frozenset(boundary), crossings


def make_cell(sys, members):
    members = tuple(sorted({sys.index(w) for w in members}))
    internal, boundary, crossings = _edge_data(sys, members)
    direction = None
    if not internal & boundary and all(len(ways) == 1 for ways in crossings.values()):
        direction = {t: next(iter(ways)) for t, ways in crossings.items()}
    return Cell(sys, members, internal, boundary, direction)


def boundary_data(sys, K):
    """(T_K, T_dK, out-direction of every boundary reflection)."""
    K = K if isinstance(K, Cell) else make_cell(sys, K)
    internal, boundary, crossings = _edge_data(sys, K.members)
    overlap = internal & boundary
    if overlap:
        raise DirectionUndefinedError(
            f'reflection {sys.word_string(min(overlap))} labels both internal and boundary edges')
    direction = {}
    for t in sorted(crossings):
        ways = crossings[t]
        if len(ways) > 1:
            raise DirectionUndefinedError(f'reflection {sys.word_string(t)} leaves the cell both up and down')
        direction[t] = next(iter(ways))
    return internal, boundary, direction


def generalized_descent_class(sys, spec):
    """W_A^D = {w : Des_A(w) = D}."""
    members = [w for w in range(sys.order) if sys.left_descents[w] & spec.A == spec.D]
    return make_cell(sys, members)


def descent_class(sys, w):
    """Standard left descent class {v : Des_S(v) = Des_S(w)}."""
    simple = frozenset(sys.generator_elements)
    return generalized_descent_class(sys, DescentSpec(simple, descent_set(sys, w, simple)))


def _allowed_graph(sys, A):
    A = frozenset(A)
    graph = sys.cayley_graph
    return nx.subgraph_view(graph, filter_edge=lambda u, v: graph[u][v]['reflection'] not in A)


def a_cell(sys, A, w):
    """K_A(w): closure of w under the moves w <-> ws with wsw^-1 not in A."""
    return make_cell(sys, nx.node_connected_component(_allowed_graph(sys, A), sys.index(w)))


def a_cells(sys, A):
    components = nx.connected_components(_allowed_graph(sys, A))
    return sorted((make_cell(sys, component) for component in components), key=lambda cell: cell.members[0])


@dataclass(frozen=True)
class ConvexityResult:
    convex: bool
    witness: int = None
    endpoints: tuple = None

    def __bool__(self):
        return self.convex


def tits_certificate(sys, K):
    """(A, D) with A the reflections of edges leaving K and D = Des_A of a member."""
    K = K if isinstance(K, Cell) else make_cell(sys, K)
    A = K.boundary_reflections
    return DescentSpec(A, descent_set(sys, K.members[0], A))


def is_convex(sys, K):
    """Every geodesic between members stays inside K.

    Walks back from every target v: each neighbour x of a member u that is one
    step closer to v lies on a u-v geodesic, and all such x must be members.
    """
    members = K.members if isinstance(K, Cell) else tuple(sorted({sys.index(w) for w in K}))
    member_set = frozenset(members)
    result = ConvexityResult(True)
    for v in members:
        distance = nx.single_source_shortest_path_length(sys.cayley_graph, v)
        for u in members:
            if u == v:
                continue
            for s in range(sys.rank):
                x = sys.right[u][s]
                if distance[x] == distance[u] - 1 and x not in member_set:
                    result = ConvexityResult(False, x, (u, v))
                    break
            if not result.convex:
                break
        if not result.convex:
            break

    if members:
        spec = tits_certificate(sys, members)
        tits = frozenset(w for w in range(sys.order) if sys.left_descents[w] & spec.A == spec.D)
        if (tits == member_set) != result.convex:
            raise CellError(f'geodesic test and descent-class test disagree on {sorted(members)}')
    return result


def reflection_cut(sys, t):
    """Components of the Cayley graph without its t-edges: (W_{t}^{}, W_{t}^{t})."""
    if t not in sys.reflections:
        raise CellError(f'{sys.word_string(t)} is not a reflection')
    components = list(nx.connected_components(_allowed_graph(sys, {t})))
    if len(components) != 2:
        raise CellError(f'removing the edges of {sys.word_string(t)} leaves {len(components)} components')
    lower, upper = sorted(components, key=min)
    return make_cell(sys, lower), make_cell(sys, upper)


def is_strongly_connected(sys, K, feasible):
    """Every ordered pair of members is joined by a path of feasible arcs w -> ws inside K."""
    members = K.members if isinstance(K, Cell) else tuple(K)
    if not members:
        return False
    member_set = frozenset(members)
    graph = nx.DiGraph()
    graph.add_nodes_from(members)
    for w in members:
        for s in range(sys.rank):
            x = sys.right[w][s]
            if x in member_set and feasible(w, s):
                graph.add_edge(w, x)
    return nx.is_strongly_connected(graph)


def geodesic_counts(sys, K, feasible, u, v):
    """(number of u-v geodesics, number of them made only of feasible arcs)."""
    member_set = K.member_set if isinstance(K, Cell) else frozenset(K)
    distance = nx.single_source_shortest_path_length(sys.cayley_graph, v)
    total = {u: 1}
    good = {u: 1}
    frontier = [u]
    while frontier:
        following = {}
        for x in frontier:
            for s in range(sys.rank):
                y = sys.right[x][s]
                if distance[y] != distance[x] - 1:
                    continue
                if y not in member_set:
                    raise CellError('geodesic leaves the cell')
                following.setdefault(y, [0, 0])
                following[y][0] += total[x]
                following[y][1] += good[x] if feasible(x, s) else 0
        for y, (count, count_good) in following.items():
            total[y], good[y] = count, count_good
        frontier = sorted(following)
    return total[v], good[v]
