"""Configuration file for the Sphinx documentation builder.

https://www.sphinx-doc.org/en/master/usage/configuration.html
"""
# -- Path setup --------------------------------------------------------------
import inspect
import os
import sys
from typing import List

sys.path.insert(0, os.path.abspath(".."))

from asai_local import tokens  # noqa: E402


# -- Project information -----------------------------------------------------

project = "asai-local"
master_doc = "index"
copyright = "2026, the asai-local developers"
author = "the asai-local developers"


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.mathjax",
    "myst_parser",
]

napoleon_numpy_docstring = True
napoleon_include_private_with_doc = True
napoleon_include_special_with_doc = True
napoleon_include_init_with_doc = True

source_suffix = {
    ".rst": "restructuredtext",
    ".md": "markdown",
}

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]


# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_static_path: List[str] = []


# -- Custom automatic documentation ------------------------------------------

# Overwrites config-tokens.rst with the config line token types found in
# asai_local.tokens. Indentation marks a subclass.


def save_token_hierarchy():
    """Detects, creates, and saves the config token hierarchy to a file."""
    with open("config-tokens.rst", "w") as file:
        file.write(create_token_hierarchy())
    print("Token hierarchy saved to docs/config-tokens.rst")


def create_token_hierarchy() -> str:
    """Lists every config line token type as a nested rst list."""
    lines = [
        "config file tokens",
        "==================",
        "\nThe lexer turns each line of a config file into one of these tokens.\n",
    ]
    class_tree = inspect.getclasstree(tokens.get_all_token_types(tokens))
    __create_token_subhierarchy(lines, class_tree)
    lines.append("")
    return "\n".join(lines)


def __create_token_subhierarchy(lines: List[str], class_tree: list, indentation: str = "") -> None:
    for c in class_tree:
        if isinstance(c, list):
            __create_token_subhierarchy(lines, c, indentation + "    ")
            continue
        class_name = c[0].__name__
        if class_name not in ("object", "ABC"):
            abstract = " (abstract)" if inspect.isabstract(c[0]) else ""
            lines.append(f"{indentation[4:]}* :py:class:`asai_local.tokens.{class_name}`{abstract}")


save_token_hierarchy()
