"""
Closed forms for distance-biregular graphs.

On a distance-biregular graph the equilibrium measure ``nu^y`` only depends on the side of y and on
the distance to y, so the whole potential theory of the graph collapses to two short arrays
``q_0`` and ``q_1`` computed from the intersection numbers. Each quantity below has two closed
forms, one through the b numbers and one through the c numbers; both are evaluated and compared.
"""

from dbrglib.biregular.array import BiregularArray, DerivedCounts, derive_counts
from dbrglib.errors import (
    FormMismatch,
    DistanceOutOfRange,
    DiameterTooSmall,
    NonIntegralRecovery,
    RecoveryMismatch,
    InvalidArray,
)
from dbrglib.potential import MReport
from dbrglib.utils import rational_to_string, rational_from_string, as_integer
from dbrglib.serializable import Serializable
from typing import Dict, Any, List, Tuple, Sequence
from fractions import Fraction
import logging

logger: logging.Logger = logging.getLogger(__name__)

class DbrgEquilibrium(Serializable):
    """ The equilibrium arrays ``q_0`` and ``q_1`` of a distance-biregular graph.

    ``q_{l,m}`` is the value of ``nu^y(x)`` for any y on side l and any x at distance m from y.
    """

    def __init__(
        self,
        q0: Sequence[Fraction],
        q1: Sequence[Fraction]
    ) -> None:
        """ Instantiates a new DbrgEquilibrium from both arrays, each starting at q_{l,0} = 0 """
        self.q0: Tuple[Fraction, ...] = tuple(q0)
        self.q1: Tuple[Fraction, ...] = tuple(q1)

    def q(self, side: int) -> Tuple[Fraction, ...]:
        """ The array of the given side """
        return self.q0 if side == 0 else self.q1

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"""DbrgEquilibrium({", ".join(map(lambda x: "%s=%s" % x, self.to_dict().items()))})"""

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for equality between self and other """
        return (self.q0, self.q1) == (other.q0, other.q1) if isinstance(other, DbrgEquilibrium) else False

    def to_dict(self) -> Dict[str, Any]:
        """" Converts the object to a dictionary """
        return {
            "q0": [rational_to_string(q) for q in self.q0],
            "q1": [rational_to_string(q) for q in self.q1]
        }

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'DbrgEquilibrium':
        """ Loads a DbrgEquilibrium from a Python dictionary """
        return cls(
            q0 = [rational_from_string(str(q)) for q in dictionary['q0']],
            q1 = [rational_from_string(str(q)) for q in dictionary['q1']]
        )

def __b_term(a: BiregularArray, counts: DerivedCounts, side: int, j: int) -> Fraction:
    """ (n - B_{l,j}) / (k_{l,j} b_{l,j}), the increment q_{l,j+1} - q_{l,j} through the b numbers """
    return Fraction(counts.n - counts.ball(side, j), counts.sphere(side, j) * a.b(side, j))

def __c_term(a: BiregularArray, counts: DerivedCounts, side: int, j: int) -> Fraction:
    """ (n - B_{l,j-1}) / (k_{l,j} c_{l,j}), the same increment q_{l,j} - q_{l,j-1} through the c numbers """
    return Fraction(counts.n - counts.ball(side, j - 1), counts.sphere(side, j) * a.c(side, j))

def equilibrium_arrays(a: BiregularArray) -> DbrgEquilibrium:
    """ Computes the equilibrium arrays of both sides of an array.

    ``q_{l,m} = sum_{j<m} (n - B_{l,j}) / (k_{l,j} b_{l,j}) = sum_{1<=j<=m} (n - B_{l,j-1}) / (k_{l,j} c_{l,j})``

    Args:
        a (BiregularArray): The array.

    Returns:
        DbrgEquilibrium: q_0 and q_1.

    Raises:
        NegativeB, NonIntegralCount, TotalMismatch: Raised when the counts of the array can not be
            derived.
        FormMismatch: Raised when the b form and the c form disagree or an array is not strictly
            increasing.
    """

    counts: DerivedCounts = derive_counts(a)

    arrays: List[List[Fraction]] = []
    for side in (0, 1):
        b_form: List[Fraction] = [Fraction(0)]
        c_form: List[Fraction] = [Fraction(0)]
        for m in range(1, a.D(side) + 1):
            b_form.append(b_form[-1] + __b_term(a, counts, side, m - 1))
            c_form.append(c_form[-1] + __c_term(a, counts, side, m))

        if b_form != c_form:
            raise FormMismatch(f"The b and c forms of q_{side} differ for {a.notation()}: {b_form} != {c_form}")
        if any(later <= earlier for earlier, later in zip(b_form, b_form[1:])):
            raise FormMismatch(f"q_{side} is not strictly increasing for {a.notation()}")
        arrays.append(b_form)

    return DbrgEquilibrium(arrays[0], arrays[1])

def dbrg_equilibrium_value(a: BiregularArray, side: int, m: int) -> Fraction:
    """ q_{side,m}, the value of nu^y at distance m from a vertex y on the given side

    Raises:
        DistanceOutOfRange: Raised when m is outside ``0..D_side``.
    """

    if side not in (0, 1) or not 0 <= m <= a.D(side):
        raise DistanceOutOfRange(f"No distance {m} on side {side} of {a.notation()}")
    return equilibrium_arrays(a).q(side)[m]

def sphere_multiplicities(a: BiregularArray) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """ The multiplicities m_{l,i} = k_{l,i} of the levels of both equilibrium arrays """
    return derive_counts(a).spheres

def cross_relation_check(e: DbrgEquilibrium, a: BiregularArray) -> bool:
    """ Checks ``q_{l,m} = q_{l',m} + (n - 1)(1/k_l - 1/k_{l'})`` between the two sides.

    Two vertices at odd distance lie on different sides, so the relation is checked at every odd
    distance m <= D0. When k0 = k1 it is also checked at the even distances, where it reads
    ``q_{0,m} = q_{1,m}``.

    Args:
        e (DbrgEquilibrium): The equilibrium arrays.
        a (BiregularArray): The array they were computed for.

    Returns:
        bool: Whether the relation holds at every checked distance.
    """

    n: int = derive_counts(a).n
    shift: Fraction = (n - 1) * (Fraction(1, a.k0) - Fraction(1, a.k1))

    for m in range(1, a.D0 + 1):
        if m % 2 == 0 and a.k0 != a.k1:
            continue
        if e.q0[m] != e.q1[m] + shift:
            logger.debug("Cross relation fails at distance %d: %s != %s + %s", m, e.q0[m], e.q1[m], shift)
            return False
    return True

def dbrg_capacity(a: BiregularArray, side: int) -> Fraction:
    """ cap(y) for y on the given side: ``sum_j (n - B_{l,j-1})^2 / (k_{l,j} c_{l,j})`` """

    counts: DerivedCounts = derive_counts(a)
    return sum(
        (Fraction((counts.n - counts.ball(side, j - 1)) ** 2, counts.sphere(side, j) * a.c(side, j))
            for j in range(1, a.D(side) + 1)),
        Fraction(0)
    )

def group_inverse_entry(a: BiregularArray, side: int, j: int) -> Fraction:
    """ The entry ``L#(x, y)`` for y on the given side and ``d(x, y) = j``.

    The c form is
    ``(1/n) sum_{t>j} (n - B_{l,t-1}) / (k_{l,t} c_{l,t}) - (1/n^2) sum_t B_{l,t-1} (n - B_{l,t-1}) / (k_{l,t} c_{l,t})``
    and the b form is the same expression with every ``k_{l,t} c_{l,t}`` replaced by
    ``k_{l,t-1} b_{l,t-1}``.

    Args:
        a (BiregularArray): The array.
        side (int): The side of y.
        j (int): The distance between x and y.

    Returns:
        Fraction: The entry of the group inverse.

    Raises:
        DistanceOutOfRange: Raised when j is outside ``0..D_side``.
        FormMismatch: Raised when the two forms disagree.
    """

    if side not in (0, 1) or not 0 <= j <= a.D(side):
        raise DistanceOutOfRange(f"No distance {j} on side {side} of {a.notation()}")

    counts: DerivedCounts = derive_counts(a)
    n: int = counts.n
    diameter: int = a.D(side)

    c_terms: List[Fraction] = [__c_term(a, counts, side, t) for t in range(1, diameter + 1)]
    b_terms: List[Fraction] = [__b_term(a, counts, side, t - 1) for t in range(1, diameter + 1)]

    forms: List[Fraction] = []
    for terms in (c_terms, b_terms):
        tail: Fraction = sum(terms[j:], Fraction(0))
        weighted: Fraction = sum(
            (counts.ball(side, t - 1) * term for t, term in enumerate(terms, start = 1)),
            Fraction(0)
        )
        forms.append(tail / n - weighted / (n * n))

    if forms[0] != forms[1]:
        raise FormMismatch(f"The c form {forms[0]} and the b form {forms[1]} of L#_{{{side},{j}}} differ")
    return forms[0]

def dbrg_effective_resistance(a: BiregularArray, side_of_y: int, dist: int) -> Fraction:
    """ The effective resistance between y on side ``side_of_y`` and any x at distance ``dist``.

    ``R = (2/n) q_{l,dist} + ((n - 1)/n)(1/k_{l'} - 1/k_l)`` where l' is the side of x: the same
    side as y for an even distance and the other one for an odd distance.

    Raises:
        DistanceOutOfRange: Raised when dist is outside ``1..D_{side_of_y}``.
    """

    if side_of_y not in (0, 1) or not 1 <= dist <= a.D(side_of_y):
        raise DistanceOutOfRange(f"No pair at distance {dist} from side {side_of_y} of {a.notation()}")

    n: int = derive_counts(a).n
    q: Fraction = equilibrium_arrays(a).q(side_of_y)[dist]
    side_of_x: int = side_of_y if dist % 2 == 0 else 1 - side_of_y

    correction: Fraction = Fraction(n - 1, n) * (Fraction(1, a.k(side_of_x)) - Fraction(1, a.k(side_of_y)))
    return 2 * q / n + correction

def __m_inequality(a: BiregularArray, counts: DerivedCounts, side: int) -> Tuple[Fraction, Fraction]:
    """ Both sides of ``sum_{j=1}^{D_l-1} (n - B_{l,j})^2 / (k_{l,j} b_{l,j}) <= (n - 1)/k_l`` """

    lhs: Fraction = sum(
        (Fraction((counts.n - counts.ball(side, j)) ** 2, counts.sphere(side, j) * a.b(side, j))
            for j in range(1, a.D(side))),
        Fraction(0)
    )
    return lhs, Fraction(counts.n - 1, a.k(side))

def m_property_array(a: BiregularArray) -> MReport:
    """ Decides the M-property of a distance-biregular graph from its array.

    The graph has the M-property if and only if
    ``sum_{j=1}^{D0-1} (1/(k_{0,j} b_{0,j})) (sum_{i>j} k_{0,i})^2 <= (n - 1)/k0``, which says that the
    entry of ``L#`` between two adjacent vertices is not positive. The same inequality written for
    side 1 is evaluated as well and has to give the same verdict.

    Args:
        a (BiregularArray): The array.

    Returns:
        MReport: The verdict, with both sides of the side 0 inequality as witness when negative.

    Raises:
        FormMismatch: Raised when the side 0 and side 1 inequalities disagree.
    """

    counts: DerivedCounts = derive_counts(a)
    lhs0, rhs0 = __m_inequality(a, counts, 0)
    lhs1, rhs1 = __m_inequality(a, counts, 1)

    verdict: bool = lhs0 <= rhs0
    if verdict != (lhs1 <= rhs1):
        raise FormMismatch(
            f"The side 0 inequality ({lhs0} <= {rhs0}) and the side 1 inequality ({lhs1} <= {rhs1}) "
            f"disagree for {a.notation()}"
        )

    if verdict:
        return MReport(True, "array-inequality")
    return MReport(False, "array-inequality", {"side": 0, "lhs": lhs0, "rhs": rhs0, "side_1_lhs": lhs1, "side_1_rhs": rhs1})

def necessary_condition(a: BiregularArray) -> bool:
    """ The necessary condition ``n < 2 k1 + k0`` for the M-property.

    Raises:
        DiameterTooSmall: Raised when D0 < 2, where the condition does not apply.
    """

    if a.D0 < 2:
        raise DiameterTooSmall(f"The condition needs D0 >= 2 but {a.notation()} has D0 = {a.D0}")
    return derive_counts(a).n < 2 * a.k1 + a.k0

def recover_array(e: DbrgEquilibrium, mults: Tuple[Sequence[int], Sequence[int]]) -> BiregularArray:
    """ Recovers the intersection array from the equilibrium arrays and the level multiplicities.

    With ``S_i = sum_{j>i} m_{l,j}``:
    ``b_{l,i} = S_i / (m_{l,i} (q_{l,i+1} - q_{l,i}))`` and
    ``c_{l,i+1} = S_i / (m_{l,i+1} (q_{l,i+1} - q_{l,i}))``.

    Args:
        e (DbrgEquilibrium): The equilibrium arrays q_0 and q_1.
        mults (Tuple[Sequence[int], Sequence[int]]): The multiplicities m_{0,i} and m_{1,i}, which
            are the sphere sizes of each side.

    Returns:
        BiregularArray: The recovered array.

    Raises:
        InvalidArray: Raised when the inputs are malformed (lengths, q_{l,0} != 0, m_{l,0} != 1,
            non positive multiplicities or non increasing levels).
        NonIntegralRecovery: Raised when a recovered b or c is not an integer.
        RecoveryMismatch: Raised when the recovered b numbers do not follow from the recovered c
            numbers, or when the sides count a different number of vertices.
    """

    c_sequences: List[List[int]] = []
    b_sequences: List[List[int]] = []
    for side in (0, 1):
        q: Tuple[Fraction, ...] = e.q(side)
        m: List[int] = list(mults[side])

        if len(q) != len(m) or len(q) < 2:
            raise InvalidArray(f"Side {side} has {len(q)} levels and {len(m)} multiplicities")
        if q[0] != 0 or m[0] != 1:
            raise InvalidArray(f"Side {side} must start with q = 0 and multiplicity 1")
        if any(value <= 0 for value in m):
            raise InvalidArray(f"The multiplicities of side {side} must be positive but got {m}")
        if any(later <= earlier for earlier, later in zip(q, q[1:])):
            raise InvalidArray(f"The levels of side {side} must be strictly increasing")

        b_values: List[int] = []
        c_values: List[int] = []
        for i in range(len(q) - 1):
            remaining: int = sum(m[i + 1:])
            step: Fraction = q[i + 1] - q[i]
            b_values.append(__integral(remaining / (m[i] * step), f"b_{{{side},{i}}}"))
            c_values.append(__integral(remaining / (m[i + 1] * step), f"c_{{{side},{i + 1}}}"))

        c_sequences.append(c_values)
        b_sequences.append(b_values)

    if sum(mults[0]) != sum(mults[1]):
        raise RecoveryMismatch(f"The multiplicities add up to {sum(mults[0])} and {sum(mults[1])}")

    recovered: BiregularArray = BiregularArray(
        k0 = b_sequences[0][0],
        k1 = b_sequences[1][0],
        D0 = len(c_sequences[0]),
        D1 = len(c_sequences[1]),
        c0 = c_sequences[0],
        c1 = c_sequences[1]
    )

    for side in (0, 1):
        for i, b in enumerate(b_sequences[side]):
            if recovered.b(side, i) != b:
                raise RecoveryMismatch(
                    f"The recovered b_{{{side},{i}}} = {b} does not match {recovered.b(side, i)} implied by the c numbers"
                )
    return recovered

def __integral(value: Fraction, name: str) -> int:
    """ Returns value as an int or raises NonIntegralRecovery """
    integral = as_integer(value)
    if integral is None:
        raise NonIntegralRecovery(f"The recovered {name} = {value} is not an integer")
    return integral
