"""
Feasibility conditions on double intersection arrays.

Every condition that a distance-biregular graph imposes on its intersection numbers and that can be
checked from the array alone is evaluated here. Failures are collected in a report rather than
raised, so that a single pass lists everything wrong with an array.
"""

from dbrglib.biregular.array import BiregularArray, DerivedCounts, derive_counts
from dbrglib.errors import NegativeB, NonIntegralCount, TotalMismatch
from dbrglib.serializable import Serializable
from typing import Dict, Any, List, Tuple, Optional
from fractions import Fraction
from math import comb
import logging

logger: logging.Logger = logging.getLogger(__name__)

CONDITIONS: Tuple[str, ...] = (
    "parity",
    "diameter",
    "diameter-case",
    "integrality",
    "ball-sum",
    "odd-sphere-ratio",
    "product-identity",
    "monotonicity",
    "binomial",
    "same-side-bound",
    "cross-side-bound",
    "degree-ratio",
)
""" The identifiers of the feasibility conditions, in evaluation order """

class FeasibilityReport(Serializable):
    """ The outcome of :func:`validate`: every failed condition with a human readable detail """

    def __init__(
        self,
        failures: List[Tuple[str, str]]
    ) -> None:
        """ Instantiates a new FeasibilityReport from the list of ``(condition, detail)`` failures """
        self.failures: List[Tuple[str, str]] = list(failures)

    @property
    def passed(self) -> bool:
        """ True when no condition failed """
        return not self.failures

    def failed_conditions(self) -> List[str]:
        """ The distinct ids of the failed conditions, in evaluation order """
        failed = {condition for condition, _ in self.failures}
        return [condition for condition in CONDITIONS if condition in failed]

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"""FeasibilityReport({", ".join(map(lambda x: "%s=%s" % x, self.to_dict().items()))})"""

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for equality between self and other """
        return self.to_dict() == other.to_dict() if isinstance(other, FeasibilityReport) else False

    def to_dict(self) -> Dict[str, Any]:
        """" Converts the object to a dictionary """
        return {
            "passed": self.passed,
            "failures": [{"condition": condition, "detail": detail} for condition, detail in self.failures]
        }

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'FeasibilityReport':
        """ Loads a FeasibilityReport from a Python dictionary """
        return cls([(failure['condition'], failure['detail']) for failure in dictionary['failures']])

def validate(a: BiregularArray) -> FeasibilityReport:
    """ Evaluates every feasibility condition on an array.

    The conditions are:

    * ``parity``: the derived b numbers are positive before the last distance and zero at it.
    * ``diameter``: ``0 <= D1 - D0 <= 1``, and D0 is odd when ``D1 = D0 + 1``.
    * ``diameter-case``: the array is bipartite distance-regular (``D0 = D1``, ``k0 = k1`` and equal
      c sequences), or ``k0 > k1`` with D0 odd and ``D1 = D0 + 1``, or ``k0 > k1`` with
      ``D0 = D1`` even.
    * ``integrality`` and ``ball-sum``: the sphere sizes are integers and both sides count the same
      number of vertices.
    * The count identities ``k_{l,i} b_{l,i} = k_{l,i+1} c_{l,i+1}`` define the sphere sizes, so they
      hold whenever those are integers.
    * ``odd-sphere-ratio``: ``k0 k_{1,2i+1} = k1 k_{0,2i+1}`` for ``2i + 1 <= D0``.
    * ``product-identity``: ``c_{0,2i} c_{0,2i+1} = c_{1,2i} c_{1,2i+1}`` and
      ``b_{0,2i-1} b_{0,2i} = b_{1,2i-1} b_{1,2i}`` for ``1 <= i`` and ``2i + 1 <= D0``.
    * ``monotonicity``: ``1 <= c_{l,i} <= c_{l',i+1}`` and ``b_{l,i} >= b_{l',i+1}`` for
      ``i < D_{l'}``, and ``b_{l,i} >= c_{l',i+1}`` for ``1 <= i <= D_{l'} - 2``, l' being the
      other side.
    * ``binomial``: ``c_{l,2} <= binomial(c_{l,3} - 1, c_{l',2} - 1)`` when ``D_l >= 3``.
    * ``same-side-bound``: ``c_{l,i} <= b_{l,j}`` when i + j is even and at most D_l.
    * ``cross-side-bound``: ``c_{l,i} <= b_{l',j}`` and ``c_{l',i} <= b_{l,j}`` when i + j is odd
      and at most D0.
    * ``degree-ratio``: when ``k0 > k1``, for ``1 <= i <= D0 - 1``, the strict inequalities
      ``b_{1,i}/b_{0,i} < k1/k0 < c_{1,i}/c_{0,i}`` for even i and
      ``b_{0,i}/b_{1,i} < k1/k0 < c_{0,i}/c_{1,i}`` for odd i. A b ratio with a zero denominator
      is not evaluated.

    Conditions that need the sphere sizes are skipped when those can not be derived.

    Args:
        a (BiregularArray): The array to check.

    Returns:
        FeasibilityReport: Every failed condition with a detail message.
    """

    failures: List[Tuple[str, str]] = []
    failures.extend(__parity(a))
    failures.extend(__diameter(a))
    failures.extend(__diameter_case(a))

    counts: Optional[DerivedCounts] = None
    if all(condition != "parity" for condition, _ in failures):
        try:
            counts = derive_counts(a)
        except NegativeB as error:
            failures.append(("parity", str(error)))
        except NonIntegralCount as error:
            failures.append(("integrality", str(error)))
        except TotalMismatch as error:
            failures.append(("ball-sum", str(error)))

    if counts is not None:
        failures.extend(__odd_sphere_ratio(a, counts))

    failures.extend(__product_identity(a))
    failures.extend(__monotonicity(a))
    failures.extend(__binomial(a))
    failures.extend(__same_side_bound(a))
    failures.extend(__cross_side_bound(a))
    failures.extend(__degree_ratio(a))

    logger.debug("Validated %s: %d failures", a.notation(), len(failures))
    return FeasibilityReport(failures)

def __parity(a: BiregularArray) -> List[Tuple[str, str]]:
    failures: List[Tuple[str, str]] = []
    for side in (0, 1):
        for i in range(a.D(side)):
            if a.b(side, i) <= 0:
                failures.append(("parity", f"b_{{{side},{i}}} = {a.b(side, i)} must be positive"))
        if a.b(side, a.D(side)) != 0:
            failures.append((
                "parity",
                f"b_{{{side},{a.D(side)}}} = {a.b(side, a.D(side))} must be 0 at the eccentricity"
            ))
    return failures

def __diameter(a: BiregularArray) -> List[Tuple[str, str]]:
    if not 0 <= a.D1 - a.D0 <= 1:
        return [("diameter", f"D1 - D0 = {a.D1 - a.D0} must be 0 or 1")]
    if a.D1 == a.D0 + 1 and a.D0 % 2 == 0:
        return [("diameter", f"D1 = D0 + 1 requires an odd D0 but D0 = {a.D0}")]
    return []

def __diameter_case(a: BiregularArray) -> List[Tuple[str, str]]:
    if a.k0 == a.k1:
        if a.D0 != a.D1:
            return [("diameter-case", f"k0 = k1 requires D0 = D1 but got D0={a.D0}, D1={a.D1}")]
        if a.c0 != a.c1:
            return [("diameter-case", "k0 = k1 requires both sides to share the same c sequence")]
        return []

    if a.k0 < a.k1:
        return [("diameter-case", f"Sides must be labeled so that k0 >= k1 but got k0={a.k0}, k1={a.k1}")]
    if a.D0 == a.D1 and a.D0 % 2 == 0:
        return []
    if a.D1 == a.D0 + 1 and a.D0 % 2 == 1:
        return []
    return [("diameter-case", f"k0 > k1 needs D0 = D1 even or D1 = D0 + 1 with D0 odd; got D0={a.D0}, D1={a.D1}")]

def __odd_sphere_ratio(a: BiregularArray, counts: DerivedCounts) -> List[Tuple[str, str]]:
    failures: List[Tuple[str, str]] = []
    for i in range(0, (a.D0 - 1) // 2 + 1):
        left: int = a.k0 * counts.sphere(1, 2 * i + 1)
        right: int = a.k1 * counts.sphere(0, 2 * i + 1)
        if left != right:
            failures.append(("odd-sphere-ratio", f"k0 k_{{1,{2 * i + 1}}} = {left} but k1 k_{{0,{2 * i + 1}}} = {right}"))
    return failures

def __product_identity(a: BiregularArray) -> List[Tuple[str, str]]:
    failures: List[Tuple[str, str]] = []
    for i in range(1, (a.D0 - 1) // 2 + 1):
        c_left: int = a.c(0, 2 * i) * a.c(0, 2 * i + 1)
        c_right: int = a.c(1, 2 * i) * a.c(1, 2 * i + 1)
        if c_left != c_right:
            failures.append(("product-identity", f"c_{{0,{2 * i}}} c_{{0,{2 * i + 1}}} = {c_left} but c_{{1,{2 * i}}} c_{{1,{2 * i + 1}}} = {c_right}"))

        b_left: int = a.b(0, 2 * i - 1) * a.b(0, 2 * i)
        b_right: int = a.b(1, 2 * i - 1) * a.b(1, 2 * i)
        if b_left != b_right:
            failures.append(("product-identity", f"b_{{0,{2 * i - 1}}} b_{{0,{2 * i}}} = {b_left} but b_{{1,{2 * i - 1}}} b_{{1,{2 * i}}} = {b_right}"))
    return failures

def __monotonicity(a: BiregularArray) -> List[Tuple[str, str]]:
    failures: List[Tuple[str, str]] = []
    for side in (0, 1):
        other: int = 1 - side
        for i in range(0, a.D(other)):
            if i > a.D(side):
                break
            if i >= 1 and a.c(side, i) < 1:
                failures.append(("monotonicity", f"c_{{{side},{i}}} must be at least 1"))
            if a.c(side, i) > a.c(other, i + 1):
                failures.append(("monotonicity", f"c_{{{side},{i}}} = {a.c(side, i)} > c_{{{other},{i + 1}}} = {a.c(other, i + 1)}"))
            if a.b(side, i) < a.b(other, i + 1):
                failures.append(("monotonicity", f"b_{{{side},{i}}} = {a.b(side, i)} < b_{{{other},{i + 1}}} = {a.b(other, i + 1)}"))

        for i in range(1, a.D(other) - 1):
            if i > a.D(side):
                break
            if a.b(side, i) < a.c(other, i + 1):
                failures.append(("monotonicity", f"b_{{{side},{i}}} = {a.b(side, i)} < c_{{{other},{i + 1}}} = {a.c(other, i + 1)}"))
    return failures

def __binomial(a: BiregularArray) -> List[Tuple[str, str]]:
    failures: List[Tuple[str, str]] = []
    for side in (0, 1):
        other: int = 1 - side
        if a.D(side) < 3 or a.D(other) < 2:
            continue

        top: int = a.c(side, 3) - 1
        bottom: int = a.c(other, 2) - 1
        bound: int = comb(top, bottom) if 0 <= bottom <= top else 0
        if a.c(side, 2) > bound:
            failures.append(("binomial", f"c_{{{side},2}} = {a.c(side, 2)} > binomial({top}, {bottom}) = {bound}"))
    return failures

def __same_side_bound(a: BiregularArray) -> List[Tuple[str, str]]:
    failures: List[Tuple[str, str]] = []
    for side in (0, 1):
        for i in range(a.D(side) + 1):
            for j in range(a.D(side) + 1 - i):
                if (i + j) % 2 == 0 and a.c(side, i) > a.b(side, j):
                    failures.append(("same-side-bound", f"c_{{{side},{i}}} = {a.c(side, i)} > b_{{{side},{j}}} = {a.b(side, j)}"))
    return failures

def __cross_side_bound(a: BiregularArray) -> List[Tuple[str, str]]:
    failures: List[Tuple[str, str]] = []
    for side in (0, 1):
        other: int = 1 - side
        for i in range(a.D0 + 1):
            for j in range(a.D0 + 1 - i):
                if (i + j) % 2 == 0:
                    continue
                if a.c(side, i) > a.b(other, j):
                    failures.append(("cross-side-bound", f"c_{{{side},{i}}} = {a.c(side, i)} > b_{{{other},{j}}} = {a.b(other, j)}"))
                if a.c(other, i) > a.b(side, j):
                    failures.append(("cross-side-bound", f"c_{{{other},{i}}} = {a.c(other, i)} > b_{{{side},{j}}} = {a.b(side, j)}"))
    return failures

def __degree_ratio(a: BiregularArray) -> List[Tuple[str, str]]:
    if a.k0 <= a.k1:
        return []

    failures: List[Tuple[str, str]] = []
    ratio: Fraction = Fraction(a.k1, a.k0)
    for i in range(1, a.D0):
        # for even i the side 1 numbers go on top, for odd i the side 0 ones
        top, bottom = (1, 0) if i % 2 == 0 else (0, 1)

        if a.b(bottom, i) != 0 and not Fraction(a.b(top, i), a.b(bottom, i)) < ratio:
            failures.append(("degree-ratio", f"b_{{{top},{i}}}/b_{{{bottom},{i}}} = {a.b(top, i)}/{a.b(bottom, i)} is not below k1/k0 = {ratio}"))
        if not ratio < Fraction(a.c(top, i), a.c(bottom, i)):
            failures.append(("degree-ratio", f"c_{{{top},{i}}}/c_{{{bottom},{i}}} = {a.c(top, i)}/{a.c(bottom, i)} is not above k1/k0 = {ratio}"))
    return failures
