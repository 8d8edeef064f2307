"""
Recognition of distance-biregular graphs and verification of the closed forms against the dense
exact oracle of :mod:`dbrglib.potential`.
"""

from dbrglib.biregular.array import BiregularArray
from dbrglib.biregular.closed_form import (
    equilibrium_arrays,
    group_inverse_entry,
    dbrg_effective_resistance,
    DbrgEquilibrium,
)
from dbrglib.network import Network, DistanceTable, distances
from dbrglib.potential import EquilibriumMeasure, equilibrium_measures, group_inverse
from dbrglib.matrix import RationalMatrix
from dbrglib.utils import convert_to_dict_recursively, drop_absent_fields
from dbrglib.serializable import Serializable
from typing import Dict, Any, List, Tuple, Optional, FrozenSet
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
import networkx as nx
import logging
import json

logger: logging.Logger = logging.getLogger(__name__)

Profile = Tuple[Tuple[int, ...], Tuple[int, ...]]

def biregular_sides(net: Network, dist: Optional[DistanceTable] = None) -> Optional[Tuple[FrozenSet[str], FrozenSet[str]]]:
    """ Splits a semiregular bipartite network into its two stable sets ``(V0, V1)``.

    V0 is the side with the smaller eccentricity; on a tie the side with the larger degree, and then
    the side holding the lexicographically smallest vertex id.

    Args:
        net (Network): The network.
        dist (:obj:`DistanceTable`, optional): The distances of the network when already known.

    Returns:
        Optional[Tuple[FrozenSet[str], FrozenSet[str]]]: The two sides, or None when the network is
            not bipartite or some side is not regular.
    """

    if not nx.is_bipartite(net.graph):
        logger.debug("The network is not bipartite")
        return None

    table: DistanceTable = dist if dist is not None else distances(net)
    first, second = nx.bipartite.sets(net.graph)

    keys: List[Tuple[int, int, str]] = []
    for side in (first, second):
        degrees = {len(net.graph[vertex]) for vertex in side}
        if len(degrees) != 1:
            logger.debug("The side containing %s is not regular: degrees %s", min(side), sorted(degrees))
            return None
        eccentricity: int = max(table.eccentricity(vertex) for vertex in side)
        keys.append((eccentricity, -degrees.pop(), min(side)))

    if keys[0] <= keys[1]:
        return frozenset(first), frozenset(second)
    return frozenset(second), frozenset(first)

def detect_dbrg(net: Network, max_workers: int = 1) -> Optional[BiregularArray]:
    """ Decides whether a unit conductance network is distance-biregular and returns its array.

    For every base vertex x and every y at distance i from x the numbers
    ``|Gamma_{i-1}(x) & Gamma_1(y)|`` and ``|Gamma_{i+1}(x) & Gamma_1(y)|`` are counted; the network
    is distance-biregular when they only depend on i and on the side of x.

    Args:
        net (Network): The network.
        max_workers (int): The number of threads scanning base vertices.

    Returns:
        Optional[BiregularArray]: The array with sides labeled as in :func:`biregular_sides`, or None.
    """

    if not net.is_unit():
        logger.debug("Only unit conductance networks are checked for distance-biregularity")
        return None

    table: DistanceTable = distances(net)
    sides = biregular_sides(net, table)
    if sides is None:
        return None

    profiles: List[Optional[Profile]]
    if max_workers <= 1:
        profiles = [__profile(net, table, x) for x in net.vertices]
    else:
        with ThreadPoolExecutor(max_workers = max_workers) as executor:
            profiles = list(executor.map(lambda x: __profile(net, table, x), net.vertices))
    by_vertex: Dict[str, Optional[Profile]] = dict(zip(net.vertices, profiles))

    chosen: List[Profile] = []
    for side in sides:
        distinct = {by_vertex[x] for x in side}
        if len(distinct) != 1 or None in distinct:
            logger.debug("The intersection numbers of the side containing %s are not constant", min(side))
            return None
        chosen.append(distinct.pop()) # type: ignore

    (c0, _), (c1, _) = chosen
    array: BiregularArray = BiregularArray(
        k0 = len(net.graph[next(iter(sides[0]))]),
        k1 = len(net.graph[next(iter(sides[1]))]),
        D0 = len(c0),
        D1 = len(c1),
        c0 = list(c0),
        c1 = list(c1)
    )
    logger.debug("Detected the array %s", array.notation())
    return array

def __profile(net: Network, table: DistanceTable, x: str) -> Optional[Profile]:
    """ The c and b numbers seen from x, or None when they vary within a distance class """

    eccentricity: int = table.eccentricity(x)
    c_numbers: List[Optional[int]] = [None] * (eccentricity + 1)
    b_numbers: List[Optional[int]] = [None] * (eccentricity + 1)

    for y in net.vertices:
        i: int = table.d(x, y)
        neighbors: List[int] = [table.d(x, z) for z in net.graph[y]]
        c: int = sum(1 for d in neighbors if d == i - 1)
        b: int = sum(1 for d in neighbors if d == i + 1)

        if c_numbers[i] is None:
            c_numbers[i], b_numbers[i] = c, b
        elif (c_numbers[i], b_numbers[i]) != (c, b):
            return None

    return tuple(c_numbers[1:]), tuple(b_numbers) # type: ignore

class VerificationReport(Serializable):
    """ The outcome of checking the closed forms of a detected array against the dense oracle """

    def __init__(
        self,
        array: Optional[BiregularArray],
        entries_compared: int = 0,
        values_compared: int = 0,
        resistances_compared: int = 0,
        first_mismatch: Optional[Dict[str, Any]] = None
    ) -> None:
        """ Instantiates a new VerificationReport.

        Args:
            array (:obj:`BiregularArray`, optional): The detected array, None when the network is
                not distance-biregular.
            entries_compared (int): The number of group inverse entries compared.
            values_compared (int): The number of equilibrium values compared.
            resistances_compared (int): The number of effective resistances compared.
            first_mismatch (:obj:`dict`, optional): The first disagreement found.
        """

        self.array: Optional[BiregularArray] = array
        self.entries_compared: int = entries_compared
        self.values_compared: int = values_compared
        self.resistances_compared: int = resistances_compared
        self.first_mismatch: Optional[Dict[str, Any]] = first_mismatch

    @property
    def detected(self) -> bool:
        """ Whether the network was recognized as distance-biregular """
        return self.array is not None

    @property
    def matched(self) -> bool:
        """ Whether every closed form value equals its oracle value """
        return self.detected and self.first_mismatch is None

    def summary(self) -> str:
        """ One line description of the outcome """
        if not self.detected:
            return "not distance-biregular"
        if self.first_mismatch is not None:
            return f"mismatch: {json.dumps(convert_to_dict_recursively(self.first_mismatch))}"
        return f"all {self.entries_compared} entries match"

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"""VerificationReport({", ".join(map(lambda x: "%s=%s" % x, self.to_dict().items()))})"""

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for equality between self and other """
        return self.to_dict() == other.to_dict() if isinstance(other, VerificationReport) else False

    def to_dict(self) -> Dict[str, Any]:
        """" Converts the object to a dictionary """
        return drop_absent_fields({
            "detected": self.detected,
            "matched": self.matched,
            "array": self.array.to_dict() if self.array is not None else None,
            "entries_compared": self.entries_compared,
            "values_compared": self.values_compared,
            "resistances_compared": self.resistances_compared,
            "first_mismatch": convert_to_dict_recursively(self.first_mismatch) if self.first_mismatch is not None else None,
            "summary": self.summary()
        })

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'VerificationReport':
        """ Loads a VerificationReport from a Python dictionary """

        return cls(
            array = BiregularArray.from_dict(dictionary['array']) if 'array' in dictionary else None,
            entries_compared = int(dictionary.get('entries_compared', 0)),
            values_compared = int(dictionary.get('values_compared', 0)),
            resistances_compared = int(dictionary.get('resistances_compared', 0)),
            first_mismatch = dictionary.get('first_mismatch')
        )

def verify_closed_form(net: Network, max_workers: int = 1) -> VerificationReport:
    """ Compares every closed form value of a distance-biregular network with the dense oracle.

    For every ordered pair (x, y) the entry ``L#(x, y)`` and the value ``nu^y(x)`` are compared with
    their closed forms for the side of y and the distance d(x, y); for every pair of distinct
    vertices the effective resistance is compared as well. Only the first mismatch is kept.

    Args:
        net (Network): The network.
        max_workers (int): The number of threads used by the oracle solves.

    Returns:
        VerificationReport: The counts of compared values and the first mismatch, if any.
    """

    array: Optional[BiregularArray] = detect_dbrg(net, max_workers)
    if array is None:
        return VerificationReport(None)

    table: DistanceTable = distances(net)
    sides = biregular_sides(net, table)
    side_of: Dict[str, int] = {vertex: side for side in (0, 1) for vertex in sides[side]} # type: ignore

    closed: DbrgEquilibrium = equilibrium_arrays(array)
    measures: Dict[str, EquilibriumMeasure] = {m.base_vertex: m for m in equilibrium_measures(net, max_workers)}
    oracle: RationalMatrix = group_inverse(net, measures = list(measures.values()))

    green: Dict[Tuple[int, int], Fraction] = {}
    resistance: Dict[Tuple[int, int], Fraction] = {}
    report: VerificationReport = VerificationReport(array)

    for j, y in enumerate(net.vertices):
        for i, x in enumerate(net.vertices):
            d: int = table.d(x, y)
            key: Tuple[int, int] = (side_of[y], d)

            if key not in green:
                green[key] = group_inverse_entry(array, side_of[y], d)
            report.entries_compared += 1
            __record(report, "group-inverse", x, y, d, green[key], oracle[i, j])

            report.values_compared += 1
            __record(report, "equilibrium", x, y, d, closed.q(side_of[y])[d], measures[y][x])

            if x != y:
                if key not in resistance:
                    resistance[key] = dbrg_effective_resistance(array, side_of[y], d)
                report.resistances_compared += 1
                oracle_resistance: Fraction = (measures[y][x] + measures[x][y]) / net.n
                __record(report, "resistance", x, y, d, resistance[key], oracle_resistance)

    logger.info("Verified %s: %s", array.notation(), report.summary())
    return report

def __record(report: VerificationReport, kind: str, x: str, y: str, d: int, closed: Fraction, oracle: Fraction) -> None:
    """ Keeps the first disagreement between a closed form value and its oracle value """
    if closed != oracle and report.first_mismatch is None:
        report.first_mismatch = {
            "kind": kind,
            "x": x,
            "y": y,
            "distance": d,
            "closed_form": closed,
            "oracle": oracle
        }
