r"""Compiled regular expressions.

Most of these patterns are for full-line elements of config files that
are each in their own string with no newline characters. The rest are
for the textual forms of exact numbers.

Attributes
----------
assignment : re.Pattern
    The pattern for a ``key = value`` config line (a full-line
    element). The key and the value are captured in the ``key`` and
    ``value`` groups.
comment : re.Pattern
    The pattern for a line that only holds a comment (a full-line
    element).
empty_line : re.Pattern
    The pattern for a line with nothing or only whitespace characters
    (a full-line element).
frontmatter_fence : re.Pattern
    The pattern for a frontmatter delimiter (a full-line element).
inline_comment : re.Pattern
    The pattern for a trailing comment after a value (an inline
    element).
rational : re.Pattern
    The pattern for an exact rational number, either ``a`` or ``a/b``
    with an optional sign.
scalar_lexeme : re.Pattern
    The pattern for one lexeme of a scalar's textual form: a rational
    without sign, the imaginary unit ``i``, the square root ``sqrtq``,
    an operator, or a parenthesis.
"""
import re


# full-line elements
assignment = re.compile(r"^\s*(?P<key>[A-Za-z_][\w-]*)\s*=\s*(?P<value>.*?)\s*$")
comment = re.compile(r"^\s*#.*$")
empty_line = re.compile(r"^\s*$")
frontmatter_fence = re.compile(r"^---\s*$")

# inline elements
inline_comment = re.compile(r"\s+#.*$")

# numbers
rational = re.compile(r"^\s*(?P<sign>[-+]?)(?P<num>\d+)(?:/(?P<den>\d+))?\s*$")
scalar_lexeme = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<sqrtq>sqrtq)|(?P<unit>i)"
    r"|(?P<op>[-+*])|(?P<paren>[()]))"
)
