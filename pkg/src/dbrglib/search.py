"""
Bounded exhaustive search over double intersection arrays.

The c sequences of each side are enumerated depth first, pruning as soon as a sphere size stops
being an integer or the running vertex count exceeds the bound. Sequences of the two sides that
count the same number of vertices are paired, and every pair passing the feasibility checks is
classified and tested for the M-property.
"""

from dbrglib.biregular.array import BiregularArray
from dbrglib.biregular.feasibility import validate
from dbrglib.biregular.closed_form import m_property_array
from dbrglib.classify import CaseLabel, classify_case
from dbrglib.potential import MReport
from dbrglib.errors import FormMismatch, ParamOutOfRange
from dbrglib.serializable import Serializable
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Any, List, Tuple
from dataclasses import dataclass
from fractions import Fraction
import logging

logger: logging.Logger = logging.getLogger(__name__)

@dataclass(frozen = True)
class SearchBounds():
    """ Bounds of the exhaustive array search.

    Args:
        max_k (int): The largest degree k0 (and therefore k1 <= k0).
        max_d (int): The largest eccentricity D1 (and therefore D0 <= D1).
        max_n (int): The largest number of vertices.
    """
    max_k: int
    max_d: int
    max_n: int

    def __post_init__(self) -> None:
        for name in ("max_k", "max_d", "max_n"):
            if getattr(self, name) < 1:
                raise ParamOutOfRange(f"{name} must be positive but got {getattr(self, name)}")

DEFAULT_BOUNDS: SearchBounds = SearchBounds(
    max_k = 5,
    max_d = 8,
    max_n = 60
)
""" The bounds used when none are given: k <= 5, D <= 8 and n <= 60 """

class SearchResult(Serializable):
    """ A feasible array found by the search, with its M-property report and its case """

    def __init__(
        self,
        array: BiregularArray,
        report: MReport,
        case: CaseLabel,
        n: int
    ) -> None:
        """ Instantiates a new SearchResult """
        self.array: BiregularArray = array
        self.report: MReport = report
        self.case: CaseLabel = case
        self.n: int = n

    def key(self) -> Tuple[Any, ...]:
        """ The canonical ordering key (n, k0, k1, D0, D1, c0, c1) """
        return (self.n,) + self.array.key()

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"""SearchResult({", ".join(map(lambda x: "%s=%s" % x, self.to_dict().items()))})"""

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for equality between self and other """
        return self.to_dict() == other.to_dict() if isinstance(other, SearchResult) else False

    def to_dict(self) -> Dict[str, Any]:
        """" Converts the object to a dictionary """
        return {
            "array": self.array.to_dict(),
            "m_property": self.report.verdict,
            "case": self.case.value,
            "n": self.n,
            "report": self.report.to_dict()
        }

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'SearchResult':
        """ Loads a SearchResult from a Python dictionary """
        return cls(
            array = BiregularArray.from_dict(dictionary['array']),
            report = MReport.from_dict(dictionary['report']),
            case = CaseLabel(dictionary['case']),
            n = int(dictionary['n'])
        )

def side_sequences(k_side: int, k_other: int, diameter: int, max_n: int) -> List[Tuple[Tuple[int, ...], int]]:
    """ Every c sequence of one side with integral sphere sizes and at most max_n vertices.

    Args:
        k_side (int): The degree of the vertices of this side.
        k_other (int): The degree of the vertices of the other side.
        diameter (int): The eccentricity of the vertices of this side.
        max_n (int): The bound on the number of vertices.

    Returns:
        List[Tuple[Tuple[int, ...], int]]: Pairs of a c sequence and the number of vertices it counts.
    """

    found: List[Tuple[Tuple[int, ...], int]] = []

    def walk(prefix: Tuple[int, ...], previous: int, total: int) -> None:
        i: int = len(prefix) + 1
        previous_b: int = (k_side if (i - 1) % 2 == 0 else k_other) - (prefix[-1] if prefix else 0)
        full: int = k_side if i % 2 == 0 else k_other

        candidates: List[int]
        if i == diameter:
            candidates = [full]
        elif i == 1:
            candidates = [1] if full > 1 else []
        else:
            candidates = list(range(1, full))

        for c in candidates:
            if i == 1 and c != 1:
                continue
            sphere: Fraction = Fraction(previous * previous_b, c)
            if sphere.denominator != 1 or total + sphere.numerator > max_n:
                continue
            if i == diameter:
                found.append((prefix + (c,), total + sphere.numerator))
            else:
                walk(prefix + (c,), sphere.numerator, total + sphere.numerator)

    walk((), 1, 1)
    return found

def __shapes(bounds: SearchBounds) -> List[Tuple[int, int, int, int]]:
    """ Every (k0, k1, D0, D1) allowed by the eccentricity cases within the bounds """

    shapes: List[Tuple[int, int, int, int]] = []
    for k0 in range(1, bounds.max_k + 1):
        for k1 in range(1, k0 + 1):
            for d0 in range(1, bounds.max_d + 1):
                if k0 == k1:
                    shapes.append((k0, k1, d0, d0))
                elif d0 % 2 == 0:
                    shapes.append((k0, k1, d0, d0))
                elif d0 + 1 <= bounds.max_d:
                    shapes.append((k0, k1, d0, d0 + 1))
    return shapes

def __search_shape(shape: Tuple[int, int, int, int], max_n: int) -> List[SearchResult]:
    """ The feasible arrays of one (k0, k1, D0, D1) shape """

    k0, k1, d0, d1 = shape
    first: List[Tuple[Tuple[int, ...], int]] = side_sequences(k0, k1, d0, max_n)
    second: Dict[int, List[Tuple[int, ...]]] = {}
    for sequence, n in side_sequences(k1, k0, d1, max_n):
        second.setdefault(n, []).append(sequence)

    results: List[SearchResult] = []
    for c0, n in first:
        for c1 in second.get(n, []):
            if k0 == k1 and c0 != c1:
                continue

            array: BiregularArray = BiregularArray(k0 = k0, k1 = k1, D0 = d0, D1 = d1, c0 = c0, c1 = c1)
            if not validate(array).passed:
                continue

            try:
                report: MReport = m_property_array(array)
            except FormMismatch as error:
                logger.warning("Skipping %s: %s", array.notation(), error)
                continue
            results.append(SearchResult(array, report, classify_case(array), n))
    return results

def search_arrays(bounds: SearchBounds = DEFAULT_BOUNDS, max_workers: int = 1) -> List[SearchResult]:
    """ Enumerates every feasible array within the bounds.

    Args:
        bounds (SearchBounds): The bounds on degrees, eccentricities and order.
        max_workers (int): The number of threads; the shapes (k0, k1, D0, D1) are searched
            independently and the merged output is sorted, so it does not depend on this number.

    Returns:
        List[SearchResult]: The feasible arrays sorted by (n, k0, k1, D0, D1, c0, c1).
    """

    shapes: List[Tuple[int, int, int, int]] = __shapes(bounds)

    batches: List[List[SearchResult]]
    if max_workers <= 1:
        batches = [__search_shape(shape, bounds.max_n) for shape in shapes]
    else:
        with ThreadPoolExecutor(max_workers = max_workers) as executor:
            batches = list(executor.map(lambda shape: __search_shape(shape, bounds.max_n), shapes))

    results: List[SearchResult] = sorted((result for batch in batches for result in batch), key = SearchResult.key)
    logger.info(
        "Found %d feasible arrays within %s, %d of them with the M-property",
        len(results), bounds, sum(1 for result in results if result.report.verdict)
    )
    return results
