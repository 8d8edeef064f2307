from abc import ABC, abstractmethod
from dbrglib.errors import ParseError
from typing import Dict, Any, Type, TypeVar
import json

S = TypeVar('S', bound = 'Serializable')

class Serializable(ABC):
    """ A value of the library that travels as a JSON object.

    Subclasses provide the dictionary form; the JSON text form is shared. Rationals always appear
    in the dictionary form as canonical ``p/q`` strings, so the JSON text is exact and the same
    value always gives the same text.
    """

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        """ Converts the object to a JSON ready dictionary """
        pass

    @classmethod
    @abstractmethod
    def from_dict(cls: Type[S], dictionary: Dict[str, Any]) -> S:
        """ Loads an object from a dictionary """
        pass

    def to_json_string(self) -> str:
        """ Converts the object to a JSON string """
        return json.dumps(self.to_dict())

    @classmethod
    def from_json_string(cls: Type[S], json_string: str) -> S:
        """ Loads an object from a JSON string.

        Args:
            json_string (str): The JSON text of a single object.

        Returns:
            The loaded object.

        Raises:
            ParseError: Raised when the text is not JSON or holds something other than an object.
        """

        try:
            document: Any = json.loads(json_string)
        except json.JSONDecodeError as error:
            raise ParseError(f"Malformed JSON for {cls.__name__}: {error.msg} at line {error.lineno}") from error

        if not isinstance(document, dict):
            raise ParseError(f"A {cls.__name__} must be a JSON object but got a {type(document).__name__}")
        return cls.from_dict(document)
