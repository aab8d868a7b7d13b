"""For splitting the raw text of a config file into a list of tokens.

The lexer categorizes lines of text first without looking at their
context. For example, a line of YAML frontmatter may look like an
assignment. Then the lexer makes a quick pass over the token list while
looking at each token's context to ensure they have the correct type.
"""
from typing import List
from typing import Type

from asai_local import patterns
from asai_local import tokens


class Lexer:
    """Creates a Callable that converts raw text to a list of tokens."""

    def __call__(self, text: str) -> List[tokens.Token]:
        """Converts raw text to a list of tokens.

        Parameters
        ----------
        text : str
            The raw text to convert to a list of tokens.
        """
        self.__tokens: List[tokens.Token] = []
        all_token_types = tokens.get_all_token_types(tokens)
        for line_number, line in enumerate(text.splitlines(), start=1):
            self.__tokens.append(self.__create_token(line, line_number, all_token_types))
        self.__check_token_types()
        return self.__tokens

    def __create_token(
        self, line: str, line_number: int, all_token_types: List[Type[tokens.Token]]
    ) -> tokens.Token:
        """Lexes the line, creates a token, and returns it.

        Parameters
        ----------
        line : str
            The line of text to lex.
        line_number : int
            The 1-based number of the line in the file.
        all_token_types : List[Type[tokens.Token]]
            A list of all token types.
        """
        for type_ in all_token_types:
            if type_.HAS_PATTERN and self.__matches(line, type_):
                return type_(line, line_number)
        return tokens.Text(line, line_number)

    def __matches(self, line: str, type_: Type[tokens.Token]) -> bool:
        """Determines if the line matches the given type's pattern.

        Parameters
        ----------
        line : str
            The line of text to check.
        type_ : Type[tokens.Token]
            The token type to check the pattern of.
        """
        type_name = tokens.get_token_type_name(type_).replace(" ", "_")
        return bool(patterns.__dict__[type_name].match(line))

    def __check_token_types(self) -> None:
        """Turns the lines of a leading frontmatter block into frontmatter lines.

        Frontmatter is only recognized when its opening fence is the
        first line that is not empty. An unclosed block is left alone
        for the parser to report.
        """
        start = 0
        while start < len(self.__tokens) and isinstance(self.__tokens[start], tokens.EmptyLine):
            start += 1
        if start == len(self.__tokens) or not isinstance(self.__tokens[start], tokens.FrontmatterFence):
            return
        for end in range(start + 1, len(self.__tokens)):
            if isinstance(self.__tokens[end], tokens.FrontmatterFence):
                break
        else:
            return
        for i in range(start + 1, end):
            token_ = self.__tokens[i]
            self.__tokens[i] = tokens.FrontmatterLine(token_.content, token_.line_number)
