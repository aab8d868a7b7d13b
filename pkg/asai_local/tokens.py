"""The class definitions for all the tokens of a config file.

Each token is one line of a config file and has a ``content`` property,
the original text of the line, and a ``line_number`` attribute. Each
token class also has a boolean class variable (not an instance variable)
named ``HAS_PATTERN``. If ``HAS_PATTERN`` is True, the class has a
corresponding regular expression in patterns.py whose name is the
token type's name in snake case.
"""
import inspect
from abc import ABC
from abc import abstractmethod
from functools import lru_cache
from types import ModuleType
from typing import Any
from typing import List
from typing import Type

from asai_local import patterns


class Token(ABC):
    """The abstract base class (ABC) for all tokens."""

    HAS_PATTERN = False

    @abstractmethod
    def __init__(self, line: str = "", line_number: int = 0):
        self._content: str = line
        self.line_number: int = line_number

    def __str__(self) -> str:
        """Returns the original content of the token's raw text."""
        return self._content + "\n"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._content!r}, {self.line_number})"

    @property
    def content(self) -> str:
        return self._content

    @content.setter
    def content(self, line: str) -> None:
        self._content = line


class Text(Token):
    """A line that does not fit any other category.

    Outside of frontmatter, a text token is a syntax error.

    Attributes
    ----------
    content : str
        The content of the line of text.
    """

    def __init__(self, line: str = "", line_number: int = 0):
        super().__init__(line, line_number)


class EmptyLine(Token):
    """A line with either whitespace characters or nothing."""

    HAS_PATTERN = True

    def __init__(self, line: str = "", line_number: int = 0):
        super().__init__(line, line_number)


class Comment(Token):
    """A line that only holds a comment, starting with ``#``."""

    HAS_PATTERN = True

    def __init__(self, line: str = "", line_number: int = 0):
        super().__init__(line, line_number)


class Assignment(Token):
    """A ``key = value`` line.

    Attributes
    ----------
    content : str
        The content of the line of text.
    key : str
        The name left of the equals sign.
    value : str
        The text right of the equals sign, without any trailing comment
        and surrounding whitespace.
    """

    HAS_PATTERN = True

    def __init__(self, line: str = "", line_number: int = 0):
        super().__init__(line, line_number)
        match = patterns.assignment.match(line)
        if match is None:
            raise ValueError(f"not an assignment: {line!r}")
        self.key: str = match["key"]
        self.value: str = patterns.inline_comment.sub("", match["value"]).strip()


class FrontmatterFence(Token):
    """A ``---`` line opening or closing the YAML frontmatter."""

    HAS_PATTERN = True

    def __init__(self, line: str = "", line_number: int = 0):
        super().__init__(line, line_number)


class FrontmatterLine(Token):
    """A line between the frontmatter fences, left for the YAML loader."""

    def __init__(self, line: str = "", line_number: int = 0):
        super().__init__(line, line_number)


def __is_token_type(obj: Any) -> bool:
    """Returns True if obj is a concrete Token type.

    Parameters
    ----------
    obj : Any
        The object to test.
    """
    return inspect.isclass(obj) and issubclass(obj, Token) and not inspect.isabstract(obj)


@lru_cache(maxsize=1)
def get_all_token_types(tokens_module: ModuleType) -> List[Type[Token]]:
    """Lists the concrete config line token types, sorted by name.

    Parameters
    ----------
    tokens_module : ModuleType
        This module, i.e. ``tokens.get_all_token_types(tokens)``. A
        module cannot inspect its own members while it is being defined.
    """
    return [c[1] for c in inspect.getmembers(tokens_module, __is_token_type)]


def get_token_type_name(token_type: Type) -> str:
    """Gets the token type's output-formatted name, e.g. ``empty line``.

    Parameters
    ----------
    token_type : Type
        The token type to get the name of.
    """
    token_name = []
    try:
        for i, letter in enumerate(token_type.__name__):
            if i and letter.isupper():
                token_name.append(" ")
            token_name.append(letter)
    except AttributeError:
        raise TypeError(f"{token_type} is not a Type.")
    return "".join(token_name).lower()
