"""
Dense exact matrices.

Matrices are numpy arrays with ``dtype=object`` whose entries are ``fractions.Fraction`` values, so
numpy provides the shape bookkeeping and the products while every entry stays an exact rational.
"""

from dbrglib.utils import as_rational, rational_to_string, rational_from_string, RationalLike
from dbrglib.serializable import Serializable
from dbrglib.errors import SingularSystem, ParseError
from typing import Dict, Any, List, Sequence, Union
from fractions import Fraction
import numpy as np
import logging

logger: logging.Logger = logging.getLogger(__name__)

def fraction_array(rows: Union[Sequence[Sequence[RationalLike]], np.ndarray]) -> np.ndarray:
    """ Builds a 2D object array of Fractions from nested sequences of rationals """

    source: List[List[RationalLike]] = [list(row) for row in rows]
    array: np.ndarray = np.empty((len(source), len(source[0]) if source else 0), dtype=object)
    for i, row in enumerate(source):
        for j, value in enumerate(row):
            array[i, j] = as_rational(value)
    return array

def solve_exact(matrix: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """ Solves the square system ``matrix @ x = rhs`` exactly by Gaussian elimination.

    The pivot of every column is the first nonzero entry at or below the diagonal. Exact arithmetic
    needs no numerical pivoting, and this rule keeps the elimination order deterministic.

    Args:
        matrix (np.ndarray): A square object array of Fractions. It is not modified.
        rhs (np.ndarray): A 1D object array of Fractions with as many entries as the matrix has rows.

    Returns:
        np.ndarray: The unique solution as a 1D object array of Fractions.

    Raises:
        SingularSystem: Raised when some column has no nonzero pivot.
    """

    order: int = matrix.shape[0]
    a: np.ndarray = matrix.copy()
    b: np.ndarray = rhs.copy()

    # Forward elimination
    for column in range(order):
        pivot_row: int = next((row for row in range(column, order) if a[row, column] != 0), -1)
        if pivot_row < 0:
            raise SingularSystem(f"No nonzero pivot in column {column} of a system of order {order}")

        if pivot_row != column:
            a[[column, pivot_row]] = a[[pivot_row, column]]
            b[[column, pivot_row]] = b[[pivot_row, column]]

        pivot: Fraction = a[column, column]
        for row in range(column + 1, order):
            factor: Fraction = a[row, column] / pivot
            if factor != 0:
                a[row, column:] = a[row, column:] - factor * a[column, column:]
                b[row] = b[row] - factor * b[column]

    # Back substitution
    solution: np.ndarray = np.empty(order, dtype=object)
    for row in reversed(range(order)):
        tail: Fraction = sum((a[row, k] * solution[k] for k in range(row + 1, order)), Fraction(0))
        solution[row] = (b[row] - tail) / a[row, row]

    return solution

class RationalMatrix(Serializable):
    """ A dense square matrix of exact rationals.

    Used for the Laplacian ``L`` and its group inverse ``L#``. Instances are immutable: the
    underlying array is flagged read-only and every operation returns a new matrix.
    """

    def __init__(
        self,
        entries: Union[Sequence[Sequence[RationalLike]], np.ndarray]
    ) -> None:
        """ Instantiates a new RationalMatrix from nested rows of rationals.

        Args:
            entries (Union[Sequence[Sequence[RationalLike]], np.ndarray]): The rows of the matrix.

        Raises:
            ParseError: Raised when the rows do not form a square matrix.
        """

        array: np.ndarray = fraction_array(entries)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ParseError(f"A RationalMatrix must be square but got the shape {array.shape}")

        array.setflags(write = False)
        self.__array: np.ndarray = array

    @classmethod
    def identity(cls, order: int) -> 'RationalMatrix':
        """ The identity matrix of the given order """
        return cls([[Fraction(int(i == j)) for j in range(order)] for i in range(order)])

    @classmethod
    def ones(cls, order: int) -> 'RationalMatrix':
        """ The all-ones matrix J of the given order """
        return cls([[Fraction(1)] * order for _ in range(order)])

    @property
    def order(self) -> int:
        """ The number of rows (and columns) of the matrix """
        return int(self.__array.shape[0])

    @property
    def array(self) -> np.ndarray:
        """ A writable copy of the underlying object array """
        return self.__array.copy()

    def __getitem__(self, key: Any) -> Fraction:
        """ Returns the entry at ``(row, column)`` """
        return self.__array[key]

    def __matmul__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        """ Exact matrix product """
        return RationalMatrix(self.__array.dot(other.array))

    def __add__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        """ Exact entrywise sum """
        return RationalMatrix(self.__array + other.array)

    def __sub__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        """ Exact entrywise difference """
        return RationalMatrix(self.__array - other.array)

    def scale(self, factor: RationalLike) -> 'RationalMatrix':
        """ Multiplies every entry by an exact factor """
        return RationalMatrix(self.__array * as_rational(factor))

    def transpose(self) -> 'RationalMatrix':
        """ The transposed matrix """
        return RationalMatrix(self.__array.T)

    def is_symmetric(self) -> bool:
        """ Checks entrywise exact symmetry """
        return bool(np.array_equal(self.__array, self.__array.T))

    def row_sums(self) -> List[Fraction]:
        """ The exact sum of every row """
        return [sum(row, Fraction(0)) for row in self.__array]

    def column_sums(self) -> List[Fraction]:
        """ The exact sum of every column """
        return [sum(column, Fraction(0)) for column in self.__array.T]

    def rows(self) -> List[List[Fraction]]:
        """ The entries as nested lists of Fractions """
        return [list(row) for row in self.__array]

    def __str__(self) -> str:
        """ Converts the object to a string """
        return f"RationalMatrix(order={self.order}, entries={[[rational_to_string(x) for x in row] for row in self.__array]})"

    def __repr__(self) -> str:
        """ Represents an object """
        return str(self)

    def __eq__(self, other: 'object') -> bool:
        """ Checks for exact entrywise equality between self and other """
        return bool(np.array_equal(self.__array, other.array)) if isinstance(other, RationalMatrix) else False

    def to_dict(self) -> Dict[str, Any]:
        """ Converts the object to a dictionary """
        return {
            "order": self.order,
            "entries": [[rational_to_string(value) for value in row] for row in self.__array]
        }

    @classmethod
    def from_dict(
        cls,
        dictionary: Dict[str, Any]
    ) -> 'RationalMatrix':
        """ Creates a new instance of the RationalMatrix from a dictionary

        Args:
            dictionary (dict): A dictionary of the form ``{"order": n, "entries": [["p/q", ...]]}``.

        Returns:
            RationalMatrix: A RationalMatrix loaded with the data

        Raises:
            ParseError: Raised when the declared order does not match the entries.
        """

        matrix: RationalMatrix = cls([[rational_from_string(value) for value in row] for row in dictionary['entries']])
        if matrix.order != int(dictionary['order']):
            raise ParseError(f"Declared order {dictionary['order']} but got {matrix.order} rows")
        return matrix
