"""For converting a list of config tokens to a syntax tree."""
from typing import Dict
from typing import List
from typing import Optional

import yaml  # https://pyyaml.org/wiki/PyYAMLDocumentation

from asai_local import tokens


class ConfigError(ValueError):
    """Raised for a config that cannot be read, naming the offending key or line."""


class ConfigAST:
    """An entire config file as a syntax tree.

    Attributes
    ----------
    frontmatter : Optional[dict]
        The file's optional YAML frontmatter as a Python object.
    entries : Dict[str, str]
        The raw value of each key, in file order.
    line_numbers : Dict[str, int]
        The line each key was assigned on.
    """

    def __init__(self, tokens_: List[tokens.Token]):
        """Creates a syntax tree from a list of tokens.

        Parameters
        ----------
        tokens_ : List[tokens.Token]
            A list of tokens created from a Lexer object.

        Raises
        ------
        ConfigError
            For unreadable lines, repeated keys or bad frontmatter.
        """
        self.__tokens = list(tokens_)
        self.frontmatter: Optional[dict] = self.__get_frontmatter()
        self.entries: Dict[str, str] = {}
        self.line_numbers: Dict[str, int] = {}
        self.__get_entries()

    def __str__(self) -> str:
        return "".join(f"{key} = {value}\n" for key, value in self.entries.items())

    def __get_frontmatter(self) -> Optional[dict]:
        """Takes the frontmatter tokens off the front of the token list.

        Returns
        -------
        Optional[dict]
            YAML frontmatter loaded as a Python object. If there is no
            frontmatter, None will be returned.
        """
        while self.__tokens and isinstance(self.__tokens[0], tokens.EmptyLine):
            self.__tokens.pop(0)
        if not self.__tokens or not isinstance(self.__tokens[0], tokens.FrontmatterFence):
            return None
        opening = self.__tokens.pop(0)
        frontmatter_tokens: List[tokens.FrontmatterLine] = []
        while self.__tokens:
            token = self.__tokens.pop(0)
            if isinstance(token, tokens.FrontmatterFence):
                return self.__load_frontmatter(frontmatter_tokens)
            assert isinstance(token, tokens.FrontmatterLine)
            frontmatter_tokens.append(token)
        raise ConfigError(f"line {opening.line_number}: the frontmatter is never closed")

    def __load_frontmatter(self, frontmatter_tokens: List[tokens.FrontmatterLine]) -> Optional[dict]:
        """Loads the frontmatter lines as YAML."""
        text = "".join(str(token) for token in frontmatter_tokens)
        try:
            frontmatter = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise ConfigError(f"the frontmatter is not valid YAML: {e}") from e
        if frontmatter is None:
            return None
        if not isinstance(frontmatter, dict):
            raise ConfigError("the frontmatter must be a mapping")
        return frontmatter

    def __get_entries(self) -> None:
        for token in self.__tokens:
            if isinstance(token, (tokens.EmptyLine, tokens.Comment)):
                continue
            if isinstance(token, tokens.Assignment):
                if token.key in self.entries:
                    raise ConfigError(
                        f"{token.key}: assigned on lines {self.line_numbers[token.key]} and {token.line_number}"
                    )
                self.entries[token.key] = token.value
                self.line_numbers[token.key] = token.line_number
            else:
                raise ConfigError(f"line {token.line_number}: expected key = value, got {token.content.strip()!r}")
