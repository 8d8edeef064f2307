from dbrglib.errors import InvalidArray, NegativeB, NonIntegralCount, TotalMismatch, DistanceOutOfRange
from dbrglib.utils import as_integer
from dbrglib.serializable import Serializable
from typing import Dict, Any, List, Tuple, Sequence
from fractions import Fraction
import logging

logger: logging.Logger = logging.getLogger(__name__)

class BiregularArray(Serializable):
    """ The double intersection array ``{k0; c01, ..., c0D0 | k1; c11, ..., c1D1}`` of a
    distance-biregular graph.

    Side 0 holds the vertices of degree k0 and eccentricity D0, side 1 those of degree k1 and
    eccentricity D1, with ``D0 <= D1``. Only the c sequences are stored. The b sequences follow from
    the parity rule: ``c_{l,i} + b_{l,i}`` is ``k_l`` for even i and the degree of the other side for
    odd i, since a vertex at odd distance from a side l vertex lies on the other side.
    """

    def __init__(
        self,
        k0: int,
        k1: int,
        D0: int,
        D1: int,
        c0: Sequence[int],
        c1: Sequence[int]
    ) -> None:
        """ Instantiates a new BiregularArray.

        Args:
            k0 (int): The degree of the side 0 vertices.
            k1 (int): The degree of the side 1 vertices.
            D0 (int): The eccentricity of the side 0 vertices.
            D1 (int): The eccentricity of the side 1 vertices.
            c0 (Sequence[int]): c_{0,1}, ..., c_{0,D0}.
            c1 (Sequence[int]): c_{1,1}, ..., c_{1,D1}.

        Raises:
            InvalidArray: Raised when a degree or a diameter is not a positive integer, when
                ``D0 > D1``, when a c sequence has the wrong length or a non positive entry, or when
                ``c_{l,1} != 1``.
        """

        for name, value in (("k0", k0), ("k1", k1), ("D0", D0), ("D1", D1)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidArray(f"{name} must be a positive integer but got {value!r}")
        if D0 > D1:
            raise InvalidArray(f"Sides must be labeled so that D0 <= D1 but got D0={D0}, D1={D1}")

        for name, sequence, diameter in (("c0", c0, D0), ("c1", c1, D1)):
            if len(sequence) != diameter:
                raise InvalidArray(f"{name} must have {diameter} entries but has {len(sequence)}")
            if any(isinstance(c, bool) or not isinstance(c, int) or c < 1 for c in sequence):
                raise InvalidArray(f"{name} must hold positive integers but got {list(sequence)}")
            if sequence[0] != 1:
                raise InvalidArray(f"{name} must start with 1 but starts with {sequence[0]}")

        self.k0: int = k0
        self.k1: int = k1
        self.D0: int = D0
        self.D1: int = D1
        self.c0: Tuple[int, ...] = tuple(c0)
        self.c1: Tuple[int, ...] = tuple(c1)

    def k(self, side: int) -> int:
        """ k_l, the degree of the vertices on the given side """
        return self.k0 if side == 0 else self.k1

    def D(self, side: int) -> int:
        """ D_l, the eccentricity of the vertices on the given side """
        return self.D0 if side == 0 else self.D1

    def c(self, side: int, i: int) -> int:
        """ c_{l,i} for 0 <= i <= D_l, with c_{l,0} = 0 """
        self.__check_index(side, i)
        return 0 if i == 0 else (self.c0 if side == 0 else self.c1)[i - 1]

    def b(self, side: int, i: int) -> int:
        """ b_{l,i} for 0 <= i <= D_l, derived through the parity rule.

        The value may be negative, or nonzero at ``i = D_l``, for an inconsistent array; that is
        what the parity condition of the feasibility checks looks for.
        """

        self.__check_index(side, i)
        total: int = self.k(side) if i % 2 == 0 else self.k(1 - side)
        return total - self.c(side, i)

    def notation(self) -> str:
        """ The usual ``{k0; c01, ... | k1; c11, ...}`` notation """
        left: str = ",".join(map(str, self.c0))
        right: str = ",".join(map(str, self.c1))
        return f"{{{self.k0};{left} | {self.k1};{right}}}"

    def key(self) -> Tuple[Any, ...]:
        """ Canonical tuple identifying the array """
        return (self.k0, self.k1, self.D0, self.D1, self.c0, self.c1)

    def __check_index(self, side: int, i: int) -> None:
        """ Raises DistanceOutOfRange unless 0 <= i <= D_side """
        if side not in (0, 1):
            raise DistanceOutOfRange(f"The side must be 0 or 1 but got {side}")
        if not 0 <= i <= self.D(side):
            raise DistanceOutOfRange(f"Distance {i} is outside 0..{self.D(side)} on side {side}")

    def __hash__(self) -> int:
        """ Hashes the canonical key """
        return hash(self.key())

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"""BiregularArray({", ".join(map(lambda x: "%s=%s" % x, self.to_dict().items()))})"""

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for equality between self and other """
        return self.key() == other.key() if isinstance(other, BiregularArray) else False

    def to_dict(self) -> Dict[str, Any]:
        """" Converts the object to a dictionary """
        return {
            "k0": self.k0,
            "k1": self.k1,
            "D0": self.D0,
            "D1": self.D1,
            "c0": list(self.c0),
            "c1": list(self.c1)
        }

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'BiregularArray':
        """ Loads a BiregularArray from a Python dictionary

        Args:
            dictionary (dict): A dictionary of the form
                ``{"k0": 3, "k1": 2, "D0": 3, "D1": 4, "c0": [1, 1, 2], "c1": [1, 1, 2, 2]}``.

        Returns:
            BiregularArray: The array described by the dictionary.

        Raises:
            InvalidArray: Raised when a key is missing or the values do not form an array.
        """

        missing: List[str] = [key for key in ("k0", "k1", "D0", "D1", "c0", "c1") if key not in dictionary]
        if missing:
            raise InvalidArray(f"The array is missing the keys {missing}")

        return cls(
            k0 = dictionary['k0'],
            k1 = dictionary['k1'],
            D0 = dictionary['D0'],
            D1 = dictionary['D1'],
            c0 = list(dictionary['c0']),
            c1 = list(dictionary['c1'])
        )

class DerivedCounts(Serializable):
    """ The sphere sizes ``k_{l,i}``, the ball sizes ``B_{l,i}`` and the order n of an array """

    def __init__(
        self,
        spheres: Tuple[Sequence[int], Sequence[int]],
    ) -> None:
        """ Instantiates DerivedCounts from the sphere sizes of both sides.

        Raises:
            TotalMismatch: Raised when the two sides do not add up to the same number of vertices.
        """

        self.spheres: Tuple[Tuple[int, ...], Tuple[int, ...]] = (tuple(spheres[0]), tuple(spheres[1]))
        self.balls: Tuple[Tuple[int, ...], Tuple[int, ...]] = (
            self.__partial_sums(self.spheres[0]),
            self.__partial_sums(self.spheres[1])
        )

        if self.balls[0][-1] != self.balls[1][-1]:
            raise TotalMismatch(
                f"Side 0 counts {self.balls[0][-1]} vertices while side 1 counts {self.balls[1][-1]}"
            )
        self.n: int = self.balls[0][-1]

    @staticmethod
    def __partial_sums(values: Tuple[int, ...]) -> Tuple[int, ...]:
        """ B_i = k_0 + ... + k_i """
        sums: List[int] = []
        for value in values:
            sums.append(value + (sums[-1] if sums else 0))
        return tuple(sums)

    def sphere(self, side: int, i: int) -> int:
        """ k_{l,i} """
        return self.spheres[side][i]

    def ball(self, side: int, i: int) -> int:
        """ B_{l,i} """
        return self.balls[side][i]

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"""DerivedCounts({", ".join(map(lambda x: "%s=%s" % x, self.to_dict().items()))})"""

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for equality between self and other """
        return self.to_dict() == other.to_dict() if isinstance(other, DerivedCounts) else False

    def to_dict(self) -> Dict[str, Any]:
        """" Converts the object to a dictionary """
        return {
            "k0": list(self.spheres[0]),
            "k1": list(self.spheres[1]),
            "B0": list(self.balls[0]),
            "B1": list(self.balls[1]),
            "n": self.n
        }

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'DerivedCounts':
        """ Loads DerivedCounts from a Python dictionary. Only the sphere sizes are read. """
        return cls((dictionary['k0'], dictionary['k1']))

def derive_counts(a: BiregularArray) -> DerivedCounts:
    """ Computes the sphere and ball sizes of both sides of an array.

    ``k_{l,0} = 1`` and ``k_{l,i+1} = k_{l,i} b_{l,i} / c_{l,i+1}``, which must be an integer at
    every step.

    Args:
        a (BiregularArray): The array.

    Returns:
        DerivedCounts: The counts of both sides and the common order n.

    Raises:
        NegativeB: Raised when a derived b_{l,i} is negative, or zero before the last distance.
        NonIntegralCount: Raised when some k_{l,i} is not an integer.
        TotalMismatch: Raised when the two sides count a different number of vertices.
    """

    spheres: List[List[int]] = []
    for side in (0, 1):
        for i in range(a.D(side) + 1):
            b: int = a.b(side, i)
            if b < 0 or (b == 0 and i < a.D(side)):
                raise NegativeB(f"b_{{{side},{i}}} = {b} in {a.notation()}")

        counts: List[int] = [1]
        for i in range(a.D(side)):
            value: Fraction = Fraction(counts[-1] * a.b(side, i), a.c(side, i + 1))
            integral = as_integer(value)
            if integral is None:
                raise NonIntegralCount(f"k_{{{side},{i + 1}}} = {value} is not an integer in {a.notation()}")
            counts.append(integral)
        spheres.append(counts)

    return DerivedCounts((spheres[0], spheres[1]))
