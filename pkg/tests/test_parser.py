import pytest

from asai_local import parser_
from asai_local import tokens


###############
#  ConfigAST  #
###############


def test_ConfigAST_with_frontmatter():
    ast = parser_.ConfigAST(
        [
            tokens.FrontmatterFence("---", 1),
            tokens.FrontmatterLine("name: rank-one", 2),
            tokens.FrontmatterLine("tags: [ramified]", 3),
            tokens.FrontmatterFence("---", 4),
            tokens.Comment("# the case", 5),
            tokens.Assignment("q = 5", 6),
            tokens.EmptyLine("", 7),
            tokens.Assignment("satake = 2/1", 8),
        ]
    )
    assert ast.frontmatter == {"name": "rank-one", "tags": ["ramified"]}
    assert ast.entries == {"q": "5", "satake": "2/1"}
    assert ast.line_numbers == {"q": 6, "satake": 8}
    assert str(ast) == "q = 5\nsatake = 2/1\n"


def test_ConfigAST_without_frontmatter():
    ast = parser_.ConfigAST([tokens.EmptyLine(""), tokens.Assignment("n = 3", 2)])
    assert ast.frontmatter is None
    assert ast.entries == {"n": "3"}


def test_ConfigAST_with_empty_frontmatter():
    ast = parser_.ConfigAST([tokens.FrontmatterFence("---", 1), tokens.FrontmatterFence("---", 2)])
    assert ast.frontmatter is None
    assert ast.entries == {}


def test_ConfigAST_with_repeated_key():
    with pytest.raises(parser_.ConfigError, match="^q: assigned on lines 1 and 3"):
        parser_.ConfigAST(
            [tokens.Assignment("q = 5", 1), tokens.EmptyLine("", 2), tokens.Assignment("q = 7", 3)]
        )


def test_ConfigAST_with_text():
    with pytest.raises(parser_.ConfigError, match="line 2"):
        parser_.ConfigAST([tokens.Assignment("q = 5", 1), tokens.Text("five", 2)])


def test_ConfigAST_with_unclosed_frontmatter():
    with pytest.raises(parser_.ConfigError, match="never closed"):
        parser_.ConfigAST([tokens.FrontmatterFence("---", 1), tokens.FrontmatterLine("name: x", 2)])


def test_ConfigAST_with_list_frontmatter():
    with pytest.raises(parser_.ConfigError, match="mapping"):
        parser_.ConfigAST(
            [tokens.FrontmatterFence("---", 1), tokens.FrontmatterLine("- a", 2), tokens.FrontmatterFence("---", 3)]
        )


def test_ConfigAST_with_invalid_yaml():
    with pytest.raises(parser_.ConfigError, match="YAML"):
        parser_.ConfigAST(
            [tokens.FrontmatterFence("---", 1), tokens.FrontmatterLine("a: [b", 2), tokens.FrontmatterFence("---", 3)]
        )
