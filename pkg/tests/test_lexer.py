from textwrap import dedent

from asai_local import lexer
from asai_local import tokens


def test_tokenize_assignment():
    tokenize = lexer.Lexer()
    token = tokenize("q = 5")[0]
    assert isinstance(token, tokens.Assignment)
    assert token.line_number == 1


def test_tokenize_with_text():
    tokenize = lexer.Lexer()
    token = tokenize("this is not a config line")[0]
    assert isinstance(token, tokens.Text)


def test_tokenize_comments_and_empty_lines():
    tokenize = lexer.Lexer()
    tokens_ = tokenize("# a comment\n\n   \nn = 2")
    assert len(tokens_) == 4
    assert isinstance(tokens_[0], tokens.Comment)
    assert isinstance(tokens_[1], tokens.EmptyLine)
    assert isinstance(tokens_[2], tokens.EmptyLine)
    assert isinstance(tokens_[3], tokens.Assignment)
    assert tokens_[3].line_number == 4


def test_tokenize_with_frontmatter():
    content = dedent(
        """\

        ---
        name: example
        q = 3
        ---
        q = 5
        """
    )
    tokenize = lexer.Lexer()
    tokens_ = tokenize(content)
    assert isinstance(tokens_[0], tokens.EmptyLine)
    assert isinstance(tokens_[1], tokens.FrontmatterFence)
    assert isinstance(tokens_[2], tokens.FrontmatterLine)
    assert isinstance(tokens_[3], tokens.FrontmatterLine)
    assert tokens_[3].content == "q = 3"
    assert isinstance(tokens_[4], tokens.FrontmatterFence)
    assert isinstance(tokens_[5], tokens.Assignment)


def test_tokenize_fence_after_content():
    tokenize = lexer.Lexer()
    tokens_ = tokenize("q = 5\n---\nname: x\n---")
    assert isinstance(tokens_[2], tokens.Text)


def test_tokenize_unclosed_frontmatter():
    tokenize = lexer.Lexer()
    tokens_ = tokenize("---\nname: x")
    assert isinstance(tokens_[0], tokens.FrontmatterFence)
    assert isinstance(tokens_[1], tokens.Text)
