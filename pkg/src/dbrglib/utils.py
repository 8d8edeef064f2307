from typing import Optional, Dict, Any, TypeVar, List, Tuple, Union
from dbrglib.serializable import Serializable
from dbrglib.errors import ParseError
from decimal import Decimal, localcontext
from fractions import Fraction
import re

RationalLike = Union[Fraction, int, str]

RATIONAL_PATTERN: 're.Pattern[str]' = re.compile(r'^-?\d+(/\d+)?$')

def as_rational(value: RationalLike) -> Fraction:
    """ Converts an integer, a ``p/q`` string or a Fraction into a Fraction.

    Floats are refused.

    Args:
        value (Union[Fraction, int, str]): The value to convert.

    Returns:
        Fraction: The value as an exact rational in lowest terms.

    Raises:
        ParseError: Raised when the value is a float, a bool or a malformed string.
    """

    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"Expected an exact rational but got {value!r} of type {type(value).__name__}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rational_from_string(value)

    raise ParseError(f"Can not interpret {value!r} as a rational number")

def rational_to_string(value: RationalLike) -> str:
    """ Serializes a rational as its canonical ``p/q`` string (``p`` when the denominator is 1).

    Args:
        value (Union[Fraction, int, str]): The rational to serialize.

    Returns:
        str: The canonical string.
    """

    fraction: Fraction = as_rational(value)
    if fraction.denominator == 1:
        return str(fraction.numerator)
    return f"{fraction.numerator}/{fraction.denominator}"

def rational_from_string(string: str) -> Fraction:
    """ Parses a ``p/q`` or ``p`` string into a Fraction.

    Args:
        string (str): The string to parse.

    Returns:
        Fraction: The parsed rational.

    Raises:
        ParseError: Raised when the string is not of the form ``p`` or ``p/q`` with ``q > 0``.
    """

    stripped: str = string.strip()
    if not RATIONAL_PATTERN.match(stripped):
        raise ParseError(f"Malformed rational: {string!r}")

    if '/' in stripped:
        numerator, denominator = stripped.split('/')
        if int(denominator) == 0:
            raise ParseError(f"Zero denominator in rational: {string!r}")
        return Fraction(int(numerator), int(denominator))
    return Fraction(int(stripped))

def as_integer(value: Fraction) -> Optional[int]:
    """ Returns the value as an int when it is integral and None otherwise. """
    return value.numerator if value.denominator == 1 else None

def rational_to_decimal(value: RationalLike, digits: int) -> str:
    """ Renders a rational as a decimal string with the given number of digits after the point.

    This is only ever used for display next to the exact value; nothing is computed from it.

    Args:
        value (Union[Fraction, int, str]): The rational to render.
        digits (int): The number of digits after the decimal point.

    Returns:
        str: The decimal rendering.
    """

    fraction: Fraction = as_rational(value)
    with localcontext() as context:
        context.prec = max(28, digits + len(str(abs(fraction.numerator))) + 5)
        quotient: Decimal = Decimal(fraction.numerator) / Decimal(fraction.denominator)
        return f"{quotient:.{digits}f}"

def drop_absent_fields(value: Any) -> Any:
    """ Drops the fields of a report that hold None, at any depth.

    A witness that does not exist or a mismatch that was never found is left out instead of being
    written as ``null``. Objects nested in lists are cleaned too, but the list entries themselves
    keep their positions, None included.

    Args:
        value (Any): A JSON ready dictionary, list or scalar.

    Returns:
        Any: A copy of the value without None fields.
    """

    if isinstance(value, dict):
        return {key: drop_absent_fields(item) for key, item in value.items() if item is not None}
    if isinstance(value, (list, tuple)):
        return [drop_absent_fields(item) for item in value]
    return value

__T = TypeVar('__T', Dict[Any, Any], List[Any], Tuple[Any, ...])
def convert_to_dict_recursively(
    iterable: __T
) -> __T:
    """ Converts the individual items in an iterable into their JSON ready form.

    Serializable objects are replaced by their ``to_dict`` form and Fractions by their canonical
    ``p/q`` string. The function recurses into nested dictionaries, lists and tuples. Tuples come
    back as lists since that is what they become in JSON anyway.

    Args:
        iterable (Union[Dict[Any, Any], List[Any], Tuple[Any, ...]]): The structure to convert.

    Returns:
        Union[Dict[Any, Any], List[Any]]: The structure with every Serializable and Fraction
            converted.
    """

    if isinstance(iterable, dict):
        return {key: __convert_item(value) for key, value in iterable.items()} # type: ignore

    elif isinstance(iterable, (list, tuple)): # type: ignore
        return [__convert_item(item) for item in iterable] # type: ignore

    else:
        raise NotImplementedError(
            f"No implementation for convert_to_dict_recursively available for: {type(iterable)}."
        )

def __convert_item(item: Any) -> Any:
    """ Converts a single item for :func:`convert_to_dict_recursively` """

    if isinstance(item, Serializable):
        return convert_to_dict_recursively(item.to_dict())
    elif isinstance(item, Fraction):
        return rational_to_string(item)
    elif isinstance(item, (dict, list, tuple)):
        return convert_to_dict_recursively(item) # type: ignore
    return item

def add_decimal_columns(obj: Any, digits: int) -> Any:
    """ Adds a ``<key>_decimal`` sibling next to every rational string found in a JSON structure.

    The exact value stays untouched; the sibling is there for humans reading a report. Lists of
    rationals (for instance matrix rows) get a sibling list of the same shape.

    Args:
        obj (Any): A JSON ready structure (the output of ``to_dict``).
        digits (int): The number of digits after the decimal point.

    Returns:
        Any: A new structure with the decimal columns added.
    """

    if isinstance(obj, dict):
        annotated: Dict[str, Any] = {}
        for key, value in obj.items():
            annotated[key] = add_decimal_columns(value, digits)
            decimal_value: Any = __decimal_shadow(value, digits)
            if decimal_value is not None:
                annotated[f"{key}_decimal"] = decimal_value
        return annotated
    elif isinstance(obj, list):
        return [add_decimal_columns(item, digits) for item in obj]
    return obj

def __decimal_shadow(value: Any, digits: int) -> Any:
    """ Returns the decimal rendering of a rational string (or nested list of them), else None """

    if isinstance(value, str):
        return rational_to_decimal(value, digits) if '/' in value and RATIONAL_PATTERN.match(value) else None

    # only lists of rationals holding at least one proper fraction
    if isinstance(value, list) and value:
        flat: List[Any] = __flatten(value)
        all_rational: bool = all(isinstance(item, str) and RATIONAL_PATTERN.match(item) for item in flat)
        if all_rational and any('/' in item for item in flat):
            return __render_nested(value, digits)
    return None

def __flatten(value: List[Any]) -> List[Any]:
    """ Flattens arbitrarily nested lists """
    flat: List[Any] = []
    for item in value:
        flat.extend(__flatten(item) if isinstance(item, list) else [item])
    return flat

def __render_nested(value: Any, digits: int) -> Any:
    """ Renders every rational string of a nested list as a decimal, keeping the shape """
    if isinstance(value, list):
        return [__render_nested(item, digits) for item in value]
    return rational_to_decimal(value, digits)
