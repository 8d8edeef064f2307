"""
Exact potential theory on a network.

Everything here is derived from the equilibrium measures ``nu^y``: the capacities, the group inverse
``L#`` of the Laplacian (which doubles as the dense oracle for the closed forms of the biregular
subpackage), effective resistances and the M-property tests.
"""

from dbrglib.utils import (
    rational_to_string,
    rational_from_string,
    convert_to_dict_recursively,
    drop_absent_fields,
    as_rational,
    RationalLike,
)
from dbrglib.errors import DbrgError, DepthViolation, SameVertex, IdentityViolation
from dbrglib.network import Network, DistanceTable, laplacian
from dbrglib.matrix import RationalMatrix, solve_exact
from dbrglib.serializable import Serializable
from typing import Dict, Any, List, Tuple, Optional
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
import numpy as np
import logging

logger: logging.Logger = logging.getLogger(__name__)

class EquilibriumMeasure(Serializable):
    """ The equilibrium measure ``nu^y`` of ``V \\ {y}``.

    ``nu^y`` vanishes at the base vertex y, is positive everywhere else and satisfies
    ``L(nu^y) = 1 - n * e_y``. Its total mass is the capacity of y.
    """

    def __init__(
        self,
        base_vertex: str,
        values: Dict[str, Fraction]
    ) -> None:
        """ Instantiates a new EquilibriumMeasure.

        Args:
            base_vertex (str): The vertex y the measure is taken for.
            values (Dict[str, Fraction]): nu^y(x) for every vertex x, in vertex order.
        """

        self.base_vertex: str = base_vertex
        self.values: Dict[str, Fraction] = dict(values)
        self.capacity: Fraction = sum(self.values.values(), Fraction(0))

    def __getitem__(self, x: str) -> Fraction:
        """ nu^y(x) """
        return self.values[x]

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"""EquilibriumMeasure({", ".join(map(lambda x: "%s=%s" % x, self.to_dict().items()))})"""

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for equality between self and other """
        return self.to_dict() == other.to_dict() if isinstance(other, EquilibriumMeasure) else False

    def to_dict(self) -> Dict[str, Any]:
        """" Converts the object to a dictionary """
        return {
            "base_vertex": self.base_vertex,
            "values": {x: rational_to_string(value) for x, value in self.values.items()},
            "capacity": rational_to_string(self.capacity)
        }

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'EquilibriumMeasure':
        """ Loads an EquilibriumMeasure from a Python dictionary """

        return cls(
            base_vertex = dictionary['base_vertex'],
            values = {x: rational_from_string(value) for x, value in dictionary['values'].items()}
        )

class EquilibriumArray(Serializable):
    """ The distinct values ``0 = q_0 < q_1 < ... < q_l`` taken by an equilibrium measure, together
    with how many vertices take each of them. ``l`` is the length of the array. """

    def __init__(
        self,
        base_vertex: str,
        levels: List[Fraction],
        multiplicities: List[int]
    ) -> None:
        """ Instantiates a new EquilibriumArray.

        Args:
            base_vertex (str): The base vertex y.
            levels (List[Fraction]): The strictly increasing distinct values of nu^y.
            multiplicities (List[int]): The number of vertices taking each level.
        """

        self.base_vertex: str = base_vertex
        self.levels: List[Fraction] = list(levels)
        self.multiplicities: List[int] = list(multiplicities)

    @property
    def length(self) -> int:
        """ l(y), the index of the largest level """
        return len(self.levels) - 1

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"""EquilibriumArray({", ".join(map(lambda x: "%s=%s" % x, self.to_dict().items()))})"""

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for equality between self and other """
        return self.to_dict() == other.to_dict() if isinstance(other, EquilibriumArray) else False

    def to_dict(self) -> Dict[str, Any]:
        """" Converts the object to a dictionary """
        return {
            "base_vertex": self.base_vertex,
            "levels": [rational_to_string(level) for level in self.levels],
            "multiplicities": self.multiplicities,
            "length": self.length
        }

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'EquilibriumArray':
        """ Loads an EquilibriumArray from a Python dictionary """

        return cls(
            base_vertex = dictionary['base_vertex'],
            levels = [rational_from_string(level) for level in dictionary['levels']],
            multiplicities = [int(m) for m in dictionary['multiplicities']]
        )

class MReport(Serializable):
    """ The verdict of an M-property test.

    When the verdict is negative the witness describes what failed: the pair of vertices whose
    inequality does not hold, the positive off-diagonal entry of ``L#``, or the array level
    inequality with both of its sides.
    """

    def __init__(
        self,
        verdict: bool,
        method: str,
        witness: Optional[Dict[str, Any]] = None
    ) -> None:
        """ Instantiates a new MReport.

        Args:
            verdict (bool): Whether the M-property holds.
            method (str): The test which produced the verdict.
            witness (:obj:`dict`, optional): What failed. Required when the verdict is False.

        Raises:
            DbrgError: Raised when a negative verdict comes without a witness.
        """

        if not verdict and witness is None:
            raise DbrgError(f"A negative verdict of the {method} test must carry a witness")

        self.verdict: bool = verdict
        self.method: str = method
        self.witness: Optional[Dict[str, Any]] = witness

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"""MReport({", ".join(map(lambda x: "%s=%s" % x, self.to_dict().items()))})"""

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for equality between self and other """
        return self.to_dict() == other.to_dict() if isinstance(other, MReport) else False

    def to_dict(self) -> Dict[str, Any]:
        """" Converts the object to a dictionary """
        return drop_absent_fields({
            "verdict": self.verdict,
            "method": self.method,
            "witness": convert_to_dict_recursively(self.witness) if self.witness is not None else None
        })

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'MReport':
        """ Loads an MReport from a Python dictionary """

        return cls(
            verdict = bool(dictionary['verdict']),
            method = dictionary['method'],
            witness = dictionary.get('witness')
        )

def solve_equilibrium(net: Network, y: str) -> EquilibriumMeasure:
    """ Computes the equilibrium measure of ``V \\ {y}``.

    The Laplacian is grounded at y (its row and column are deleted) and the remaining system
    ``L' nu = 1`` is solved exactly. The full identity ``L(nu) = 1 - n * e_y`` is then checked at
    every vertex, including y itself.

    Args:
        net (Network): The network.
        y (str): The base vertex.

    Returns:
        EquilibriumMeasure: The measure nu^y.

    Raises:
        UnknownVertex: Raised when y is not a vertex of the network.
        SingularSystem: Raised when the grounded system is singular.
        IdentityViolation: Raised when the solution does not satisfy the equilibrium identity.
    """

    net.require(y)
    l: np.ndarray = laplacian(net).array
    keep: List[int] = [i for i in range(net.n) if i != net.index[y]]

    reduced: np.ndarray = l[np.ix_(keep, keep)]
    rhs: np.ndarray = np.array([Fraction(1)] * len(keep), dtype = object)
    solution: np.ndarray = solve_exact(reduced, rhs)

    nu: np.ndarray = np.array([Fraction(0)] * net.n, dtype = object)
    nu[keep] = solution

    applied: np.ndarray = l.dot(nu)
    for i, vertex in enumerate(net.vertices):
        expected: Fraction = Fraction(1 - net.n) if vertex == y else Fraction(1)
        if applied[i] != expected:
            raise IdentityViolation(f"L(nu^{y}) at {vertex} is {applied[i]} instead of {expected}")
        if vertex != y and nu[i] <= 0:
            raise IdentityViolation(f"nu^{y}({vertex}) = {nu[i]} is not positive")

    logger.debug("Solved the equilibrium measure of %s", y)
    return EquilibriumMeasure(y, {vertex: nu[i] for i, vertex in enumerate(net.vertices)})

def equilibrium_array(m: EquilibriumMeasure, dist: DistanceTable) -> EquilibriumArray:
    """ Groups an equilibrium measure into its equilibrium array.

    Args:
        m (EquilibriumMeasure): The measure nu^y.
        dist (DistanceTable): The distances of the same network.

    Returns:
        EquilibriumArray: The distinct levels of nu^y and their multiplicities.

    Raises:
        DepthViolation: Raised when a vertex at level i lies further than i from y, or when the
            first i + 1 levels hold more vertices than the ball of radius i around y.
    """

    y: str = m.base_vertex
    levels: List[Fraction] = sorted(set(m.values.values()))
    rank: Dict[Fraction, int] = {level: i for i, level in enumerate(levels)}

    multiplicities: List[int] = [0] * len(levels)
    for x, value in m.values.items():
        i: int = rank[value]
        multiplicities[i] += 1
        if dist.d(x, y) > i:
            raise DepthViolation(f"nu^{y}({x}) is level {i} but d({x}, {y}) = {dist.d(x, y)}")

    for i in range(len(levels)):
        if sum(multiplicities[:i + 1]) > dist.ball_size(y, i):
            raise DepthViolation(f"The first {i + 1} levels of nu^{y} exceed the ball of radius {i}")

    return EquilibriumArray(y, levels, multiplicities)

def equilibrium_measures(net: Network, max_workers: int = 1) -> List[EquilibriumMeasure]:
    """ Solves ``nu^y`` for every vertex y.

    The solves are independent; with ``max_workers > 1`` they run on a thread pool. The measures
    are returned in vertex order whatever the number of workers.

    Args:
        net (Network): The network.
        max_workers (int): The number of threads used for the solves.

    Returns:
        List[EquilibriumMeasure]: One measure per vertex, in the order of ``net.vertices``.
    """

    if max_workers <= 1:
        return [solve_equilibrium(net, y) for y in net.vertices]

    with ThreadPoolExecutor(max_workers = max_workers) as executor:
        return list(executor.map(lambda y: solve_equilibrium(net, y), net.vertices))

def capacities(net: Network, max_workers: int = 1) -> Dict[str, Fraction]:
    """ cap(y) for every vertex y, in vertex order """
    return {measure.base_vertex: measure.capacity for measure in equilibrium_measures(net, max_workers)}

def group_inverse(net: Network, max_workers: int = 1, measures: Optional[List[EquilibriumMeasure]] = None) -> RationalMatrix:
    """ Assembles the group inverse ``L#`` of the Laplacian from the equilibrium measures.

    ``L#(x, y) = (cap(y) - n * nu^y(x)) / n^2``. The measures are solved with
    :func:`equilibrium_measures` unless the caller already holds them.

    Args:
        net (Network): The network.
        max_workers (int): The number of threads used for the equilibrium solves.
        measures (Optional[List[EquilibriumMeasure]]): The measures of every vertex in vertex
            order, as returned by :func:`equilibrium_measures`.

    Returns:
        RationalMatrix: The group inverse of the Laplacian.

    Raises:
        DbrgError: Raised when the given measures are not based at the vertices in order.
        IdentityViolation: Raised when the assembled matrix fails one of the group inverse
            identities or is not symmetric.
    """

    if measures is None:
        measures = equilibrium_measures(net, max_workers)
    elif [measure.base_vertex for measure in measures] != list(net.vertices):
        raise DbrgError("The equilibrium measures must be based at the vertices of the network, in order")

    g: RationalMatrix = __assemble_group_inverse(net, measures)
    violations: List[str] = check_group_inverse(net, g)
    if violations:
        raise IdentityViolation(f"The assembled group inverse violates: {', '.join(violations)}")
    return g

def check_group_inverse(net: Network, g: RationalMatrix) -> List[str]:
    """ Lists the group inverse identities that ``g`` violates for the Laplacian of ``net``.

    The identities checked are ``L G L = L``, ``G L G = G``, ``L G = G L``, ``G 1 = 0`` and the
    symmetry of G. An empty list means g is the group inverse.
    """

    l: RationalMatrix = laplacian(net)
    violations: List[str] = []
    if l @ g @ l != l:
        violations.append("LGL=L")
    if g @ l @ g != g:
        violations.append("GLG=G")
    if l @ g != g @ l:
        violations.append("LG=GL")
    if any(total != 0 for total in g.row_sums()):
        violations.append("G1=0")
    if not g.is_symmetric():
        violations.append("symmetry")
    return violations

def check_penrose(g: RationalMatrix, l: RationalMatrix) -> List[str]:
    """ Lists the Moore-Penrose conditions that ``g`` violates as a pseudo-inverse of ``l`` """

    violations: List[str] = []
    if l @ g @ l != l:
        violations.append("LGL=L")
    if g @ l @ g != g:
        violations.append("GLG=G")
    if not (l @ g).is_symmetric():
        violations.append("(LG)^T=LG")
    if not (g @ l).is_symmetric():
        violations.append("(GL)^T=GL")
    return violations

def effective_resistance(net: Network, x: str, y: str) -> Fraction:
    """ The effective resistance ``R(x, y) = (nu^x(y) + nu^y(x)) / n``.

    Raises:
        SameVertex: Raised when x and y are the same vertex.
    """

    if x == y:
        raise SameVertex(f"The effective resistance needs two distinct vertices but got {x!r} twice")
    return (solve_equilibrium(net, x)[y] + solve_equilibrium(net, y)[x]) / net.n

def resistance_matrix(net: Network, max_workers: int = 1) -> RationalMatrix:
    """ The matrix of effective resistances between every pair of vertices """

    measures: List[EquilibriumMeasure] = equilibrium_measures(net, max_workers)
    return RationalMatrix([
        [(measures[i][y] + measures[j][x]) / net.n for j, y in enumerate(net.vertices)]
        for i, x in enumerate(net.vertices)
    ])

def m_property_general(net: Network, max_workers: int = 1) -> MReport:
    """ Decides whether ``L#`` is an M-matrix, that is whether every off-diagonal entry of ``L#`` is
    non positive.

    Two independent tests are run. The minimum principle test checks ``cap(y) <= n * nu^y(x)`` for
    every y and every neighbor x of y. The sign test assembles ``L#`` and inspects its off-diagonal
    entries. The returned report is the minimum principle one.

    Args:
        net (Network): The network.
        max_workers (int): The number of threads used for the equilibrium solves.

    Returns:
        MReport: The verdict, with the failing pair of vertices as witness when negative.

    Raises:
        IdentityViolation: Raised when the two tests disagree.
    """

    measures: List[EquilibriumMeasure] = equilibrium_measures(net, max_workers)

    witness: Optional[Dict[str, Any]] = None
    for measure in measures:
        y: str = measure.base_vertex
        for x in net.neighbors(y):
            if measure.capacity > net.n * measure[x]:
                witness = {
                    "vertices": [y, x],
                    "capacity": measure.capacity,
                    "bound": net.n * measure[x]
                }
                break
        if witness is not None:
            break

    sign_report: MReport = __green_sign_test(__assemble_group_inverse(net, measures), net)
    verdict: bool = witness is None
    if verdict != sign_report.verdict:
        raise IdentityViolation(
            f"The minimum principle test says {verdict} but the sign of L# says {sign_report.verdict}"
        )

    return MReport(verdict, "minimum-principle", witness)

def sufficient_m_test(arrays: List[EquilibriumArray]) -> MReport:
    """ The equilibrium array criterion for the M-property.

    For every base vertex y the criterion is ``sum_{i >= 2} m_i (q_i - q_1) <= q_1``. It is
    sufficient in general and also necessary when the smallest positive level of every ``nu^y`` is
    attained exactly on the neighbors of y. Arrays of length 1 always pass.

    Args:
        arrays (List[EquilibriumArray]): The equilibrium arrays of every vertex.

    Returns:
        MReport: The verdict, with the first failing base vertex as witness when negative.
    """

    for array in arrays:
        if array.length < 1:
            continue

        q1: Fraction = array.levels[1]
        lhs: Fraction = sum(
            (m * (q - q1) for q, m in zip(array.levels[2:], array.multiplicities[2:])),
            Fraction(0)
        )
        if lhs > q1:
            return MReport(False, "equilibrium-array", {"base_vertex": array.base_vertex, "lhs": lhs, "rhs": q1})

    return MReport(True, "equilibrium-array")

def k3_m_property(c1: RationalLike, c2: RationalLike, c3: RationalLike) -> bool:
    """ Closed form M-property test of the triangle: ``3 max(c) <= 2 sum(c)`` """

    conductances: Tuple[Fraction, ...] = tuple(as_rational(c) for c in (c1, c2, c3))
    return 3 * max(conductances) <= 2 * sum(conductances)

def __assemble_group_inverse(net: Network, measures: List[EquilibriumMeasure]) -> RationalMatrix:
    """ L#(x, y) = (cap(y) - n nu^y(x)) / n^2 from the measures of every vertex, in vertex order """

    n: int = net.n
    rows: List[List[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    for j, measure in enumerate(measures):
        for i, x in enumerate(net.vertices):
            rows[i][j] = (measure.capacity - n * measure[x]) / (n * n)
    return RationalMatrix(rows)

def __green_sign_test(g: RationalMatrix, net: Network) -> MReport:
    """ M-property verdict from the signs of the off-diagonal entries of L# """

    for i, x in enumerate(net.vertices):
        for j, y in enumerate(net.vertices):
            if i != j and g[i, j] > 0:
                return MReport(False, "green-sign", {"entry": [x, y], "value": g[i, j]})
    return MReport(True, "green-sign")
