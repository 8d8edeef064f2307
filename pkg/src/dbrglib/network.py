"""
The weighted network model.

A :class:`Network` is a finite, connected, loopless graph whose edges carry exact positive
conductances. Networks are only ever created through :func:`build_network` (or one of the family
constructors built on top of it) so that connectivity and the conductance rules are checked once.
"""

from dbrglib.utils import as_rational, rational_to_string, RationalLike
from dbrglib.errors import (
    DisconnectedGraph,
    InvalidConductance,
    DuplicateEdge,
    SelfLoop,
    UnknownVertex,
    ParseError,
)
from dbrglib.serializable import Serializable
from dbrglib.matrix import RationalMatrix
from typing import Dict, Any, List, Tuple, Optional, Sequence, Iterable, Union, FrozenSet
from fractions import Fraction
import networkx as nx
import logging

logger: logging.Logger = logging.getLogger(__name__)

EdgeSpec = Union[Tuple[Any, Any], Tuple[Any, Any, RationalLike]]

class Network(Serializable):
    """ A finite connected network with exact rational conductances.

    The vertex ids are opaque strings kept in insertion order; that order is the dense index order
    used by every matrix the library produces. The underlying networkx graph is frozen, so a Network
    can be shared freely between threads.
    """

    def __init__(
        self,
        graph: nx.Graph
    ) -> None:
        """ Wraps an already validated networkx graph. Use :func:`build_network` instead. """

        self.graph: nx.Graph = nx.freeze(graph)
        self.vertices: Tuple[str, ...] = tuple(graph.nodes)
        self.index: Dict[str, int] = {vertex: i for i, vertex in enumerate(self.vertices)}

    @property
    def n(self) -> int:
        """ The number of vertices """
        return len(self.vertices)

    def conductance(self, x: str, y: str) -> Fraction:
        """ c(x, y), which is zero for non adjacent pairs and on the diagonal """
        self.require(x, y)
        data: Optional[Dict[str, Any]] = self.graph.get_edge_data(x, y)
        return data['conductance'] if data is not None else Fraction(0)

    def degree(self, x: str) -> Fraction:
        """ k(x), the sum of the conductances of the edges at x """
        self.require(x)
        return sum((data['conductance'] for _, _, data in self.graph.edges(x, data = True)), Fraction(0))

    def neighbors(self, x: str) -> List[str]:
        """ The neighbors of x in vertex order """
        self.require(x)
        return sorted(self.graph.neighbors(x), key = self.index.__getitem__)

    def edges(self) -> List[Tuple[str, str, Fraction]]:
        """ Every edge once, as ``(u, v, c)`` with u before v in vertex order """

        ordered: List[Tuple[str, str, Fraction]] = []
        for u, v, data in self.graph.edges(data = True):
            first, second = (u, v) if self.index[u] < self.index[v] else (v, u)
            ordered.append((first, second, data['conductance']))
        return sorted(ordered, key = lambda edge: (self.index[edge[0]], self.index[edge[1]]))

    def is_unit(self) -> bool:
        """ Checks whether every conductance equals 1 """
        return all(c == 1 for _, _, c in self.edges())

    def require(self, *vertices: str) -> None:
        """ Raises UnknownVertex unless every vertex given belongs to the network """
        for vertex in vertices:
            if vertex not in self.index:
                raise UnknownVertex(f"The vertex {vertex!r} is not part of the network")

    def to_edge_list(self) -> str:
        """ Writes the network in the edge list text format """
        return "".join(f"{u} {v} {rational_to_string(c)}\n" for u, v, c in self.edges())

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"Network(n={self.n}, edges={len(self.graph.edges)})"

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for equality between self and other """
        return self.to_dict() == other.to_dict() if isinstance(other, Network) else False

    def to_dict(self) -> Dict[str, Any]:
        """" Converts the object to a dictionary """
        return {
            "vertices": list(self.vertices),
            "edges": [[u, v, rational_to_string(c)] for u, v, c in self.edges()]
        }

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'Network':
        """ Creates a new instance of the Network from a dictionary

        Args:
            dictionary (dict): A dictionary of the form
                ``{"vertices": [...], "edges": [[u, v, "p/q"], ...]}``.

        Returns:
            Network: A Network loaded with the data
        """

        return build_network(
            edge_list = [tuple(edge) for edge in dictionary['edges']],  # type: ignore
            vertices = dictionary.get('vertices')
        )

class DistanceTable():
    """ Hop distances between every pair of vertices of a network.

    Conductances play no role here: d(x, y) is the length of a shortest path in the underlying
    graph, and d(x, y) = 1 exactly when c(x, y) > 0.
    """

    def __init__(
        self,
        network: Network,
        lengths: Dict[str, Dict[str, int]]
    ) -> None:
        """ Instantiates a DistanceTable from the BFS lengths of every vertex. """

        self.network: Network = network
        self.__lengths: Dict[str, Dict[str, int]] = lengths
        self.diameter: int = max(max(row.values()) for row in lengths.values())

    def d(self, x: str, y: str) -> int:
        """ The distance between x and y """
        self.network.require(x, y)
        return self.__lengths[x][y]

    def eccentricity(self, x: str) -> int:
        """ The largest distance from x to any vertex """
        return max(self.__lengths[x].values())

    def sphere(self, x: str, i: int) -> FrozenSet[str]:
        """ Gamma_i(x), the set of vertices at distance exactly i from x """
        return frozenset(y for y, length in self.__lengths[x].items() if length == i)

    def sphere_sizes(self, x: str) -> List[int]:
        """ k_i(x) for i = 0, ..., eccentricity(x) """
        sizes: List[int] = [0] * (self.eccentricity(x) + 1)
        for length in self.__lengths[x].values():
            sizes[length] += 1
        return sizes

    def ball_size(self, x: str, i: int) -> int:
        """ B_i(x), the number of vertices at distance at most i from x """
        return sum(1 for length in self.__lengths[x].values() if length <= i)

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"DistanceTable(n={self.network.n}, diameter={self.diameter})"

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

def build_network(
    edge_list: Iterable[EdgeSpec],
    vertices: Optional[Sequence[Any]] = None
) -> Network:
    """ Builds a connected network from a list of edges.

    Every edge is either ``(u, v)`` (unit conductance) or ``(u, v, c)`` where c is an int, a ``p/q``
    string or a Fraction. Vertex ids are converted to strings. Vertices are indexed in the order
    given by ``vertices`` when provided and otherwise in the order of first appearance.

    Args:
        edge_list (Iterable[EdgeSpec]): The edges of the network.
        vertices (:obj:`Sequence`, optional): An explicit vertex order. Every edge endpoint must be
            listed and every listed vertex must be covered by some edge.

    Returns:
        Network: The validated network.

    Raises:
        SelfLoop: Raised when an edge joins a vertex to itself.
        DuplicateEdge: Raised when an unordered pair appears twice.
        InvalidConductance: Raised when a conductance is not a strictly positive rational.
        UnknownVertex: Raised when an edge uses a vertex missing from ``vertices``.
        DisconnectedGraph: Raised when the graph has fewer than two vertices or is disconnected.
    """

    graph: nx.Graph = nx.Graph()
    if vertices is not None:
        graph.add_nodes_from(str(vertex) for vertex in vertices)

    for edge in edge_list:
        if len(edge) not in (2, 3):
            raise ParseError(f"An edge must be (u, v) or (u, v, c) but got {edge!r}")

        u, v = str(edge[0]), str(edge[1])
        if u == v:
            raise SelfLoop(f"Self-loop at vertex {u!r}")
        if graph.has_edge(u, v):
            raise DuplicateEdge(f"The edge {{{u}, {v}}} appears more than once")
        if vertices is not None and (u not in graph or v not in graph):
            raise UnknownVertex(f"The edge {{{u}, {v}}} uses a vertex that is not listed")

        try:
            conductance: Fraction = as_rational(edge[2]) if len(edge) == 3 else Fraction(1) # type: ignore
        except ParseError as error:
            raise InvalidConductance(f"Invalid conductance on {{{u}, {v}}}: {error}") from error
        if conductance <= 0:
            raise InvalidConductance(f"The conductance of {{{u}, {v}}} must be positive but is {conductance}")

        graph.add_edge(u, v, conductance = conductance)

    if graph.number_of_nodes() < 2:
        raise DisconnectedGraph(f"A network needs at least two vertices but got {graph.number_of_nodes()}")
    if not nx.is_connected(graph):
        components: int = nx.number_connected_components(graph)
        raise DisconnectedGraph(f"The graph has {components} connected components")

    logger.debug("Built a network with %d vertices and %d edges", graph.number_of_nodes(), graph.number_of_edges())
    return Network(graph)

def parse_edge_list(text: str) -> Network:
    """ Parses the edge list text format into a network.

    One edge per line as ``u v`` or ``u v p/q``; blank lines and lines starting with ``#`` are
    ignored.

    Args:
        text (str): The content of an edge list file.

    Returns:
        Network: The network described by the text.

    Raises:
        ParseError: Raised, with the line number, when a line does not have two or three fields or
            when its conductance is not a rational.
    """

    edges: List[EdgeSpec] = []
    for number, line in enumerate(text.splitlines(), start = 1):
        stripped: str = line.strip()
        if not stripped or stripped.startswith('#'):
            continue

        fields: List[str] = stripped.split()
        if len(fields) not in (2, 3):
            raise ParseError(f"Line {number}: expected 'u v [p/q]' but got {stripped!r}")
        edges.append(tuple(fields)) # type: ignore

    return build_network(edges)

def read_edge_list(path: str) -> Network:
    """ Reads a UTF-8 edge list file into a network.

    Raises:
        ParseError: Raised when the file is not valid UTF-8 or when a line is malformed.
    """

    with open(path, 'r', encoding = 'utf-8') as file:
        try:
            text: str = file.read()
        except UnicodeDecodeError as error:
            raise ParseError(f"{path} is not UTF-8 text: {error.reason} at byte {error.start}") from error
    return parse_edge_list(text)

def distances(net: Network) -> DistanceTable:
    """ Computes the hop distance between every pair of vertices by breadth-first search.

    Args:
        net (Network): The network.

    Returns:
        DistanceTable: The table of distances.
    """

    lengths: Dict[str, Dict[str, int]] = {
        source: dict(row) for source, row in nx.all_pairs_shortest_path_length(net.graph)
    }
    return DistanceTable(net, lengths)

def laplacian(net: Network) -> RationalMatrix:
    """ Assembles the combinatorial Laplacian L of the network.

    ``L(x, x) = k(x)`` and ``L(x, y) = -c(x, y)`` for x != y, in the dense vertex order.

    Args:
        net (Network): The network.

    Returns:
        RationalMatrix: The Laplacian, symmetric with zero row sums.
    """

    rows: List[List[Fraction]] = [[Fraction(0)] * net.n for _ in range(net.n)]
    for u, v, c in net.edges():
        i, j = net.index[u], net.index[v]
        rows[i][j] -= c
        rows[j][i] -= c
        rows[i][i] += c
        rows[j][j] += c
    return RationalMatrix(rows)

# #######################################
# ---------- Network families ----------
# #######################################

def from_graph(graph: nx.Graph) -> Network:
    """ Converts a plain networkx graph into a unit conductance network.

    Vertices are relabeled with their string form and ordered by the graph's node order.
    """

    return build_network(
        edge_list = [(u, v) for u, v in graph.edges],
        vertices = list(graph.nodes)
    )

def make_complete_bipartite(a: int, b: int) -> Network:
    """ Builds the unit conductance complete bipartite graph K_{a,b}.

    The side of size a is made of the vertices ``u0, ..., u{a-1}`` and the other side of
    ``w0, ..., w{b-1}``. Every ``u`` vertex has degree b.

    Args:
        a (int): The size of the first side.
        b (int): The size of the second side.

    Returns:
        Network: The complete bipartite network.

    Raises:
        DisconnectedGraph: Raised when a side is empty.
    """

    if a < 1 or b < 1:
        raise DisconnectedGraph(f"Both sides of K_{{a,b}} must be non empty but got a={a}, b={b}")

    return build_network(
        edge_list = [(f"u{i}", f"w{j}") for i in range(a) for j in range(b)],
        vertices = [f"u{i}" for i in range(a)] + [f"w{j}" for j in range(b)]
    )

def make_subdivision(g: Network) -> Network:
    """ Builds the subdivision graph S(g).

    Every edge {u, v} becomes a path u - s(u,v) - v through a fresh vertex named ``s(u,v)``. The
    original vertices come first in the vertex order, followed by the fresh ones in edge order.

    Args:
        g (Network): A unit conductance network.

    Returns:
        Network: The subdivided network, with unit conductances.

    Raises:
        InvalidConductance: Raised when g has a conductance other than 1.
    """

    if not g.is_unit():
        raise InvalidConductance("Only unit conductance networks can be subdivided")

    fresh: List[str] = []
    edges: List[EdgeSpec] = []
    for u, v, _ in g.edges():
        middle: str = f"s({u},{v})"
        fresh.append(middle)
        edges.extend([(u, middle), (middle, v)])

    return build_network(edges, vertices = list(g.vertices) + fresh)

def make_complete_graph(n: int, conductances: Optional[Dict[Tuple[int, int], RationalLike]] = None) -> Network:
    """ Builds K_n on vertices ``x1, ..., xn``.

    Args:
        n (int): The number of vertices.
        conductances (:obj:`dict`, optional): Conductances keyed by 1-based index pairs ``(i, j)``
            with ``i < j``; missing pairs get conductance 1.

    Returns:
        Network: The complete network.
    """

    weights: Dict[Tuple[int, int], RationalLike] = conductances or {}
    return build_network(
        edge_list = [
            (f"x{i}", f"x{j}", weights.get((i, j), weights.get((j, i), 1)))
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
        ],
        vertices = [f"x{i}" for i in range(1, n + 1)]
    )

def make_k3(c1: RationalLike, c2: RationalLike, c3: RationalLike) -> Network:
    """ Builds K_3 with c1 = c(x1, x2), c2 = c(x2, x3) and c3 = c(x3, x1) """
    return make_complete_graph(3, {(1, 2): c1, (2, 3): c2, (1, 3): c3})

def make_cycle(n: int) -> Network:
    """ Builds the unit cycle C_n on vertices ``0, ..., n-1`` """
    return from_graph(nx.cycle_graph(n))

def make_path(n: int) -> Network:
    """ Builds the unit path on vertices ``0, ..., n-1`` """
    return from_graph(nx.path_graph(n))

def make_petersen() -> Network:
    """ Builds the unit Petersen graph """
    return from_graph(nx.petersen_graph())
