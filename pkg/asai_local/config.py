"""Run configurations read from ``key = value`` files.

A config file pins one case: the local datum, the Satake parameters,
the datum tau and the truncation degree. Example::

    ---
    name: ramified-rank-one
    ---
    # n = 1 over a ramified extension
    q = 5
    extension = ramified
    n = 1
    satake = 2/1
    tau_valuation = 1
    lambda_ef = i

Lists are comma-separated. ``extension`` accepts ``split``,
``inert_unramified`` (alias ``unramified``) and ``inert_ramified``
(alias ``ramified``). ``satake2`` is required for split data and
forbidden otherwise.
"""
from typing import Any
from typing import Dict
from typing import Optional
from typing import Tuple

from asai_local.lexer import Lexer
from asai_local.parser_ import ConfigAST
from asai_local.parser_ import ConfigError
from asai_local.repdata import ExtensionType
from asai_local.repdata import LocalDatum
from asai_local.repdata import RepresentationError
from asai_local.repdata import TauDatum
from asai_local.repdata import UnramifiedRep
from asai_local.scalars import GaussRational
from asai_local.scalars import Scalar
from asai_local.scalars import ScalarError
from asai_local.settings import settings


EXTENSION_ALIASES = {
    "ramified": ExtensionType.INERT_RAMIFIED,
    "unramified": ExtensionType.INERT_UNRAMIFIED,
}
KNOWN_KEYS = (
    "q",
    "extension",
    "n",
    "satake",
    "satake2",
    "tau_valuation",
    "lambda_ef",
    "truncation",
    "seed",
)


class Config:
    """One case of the command-line tool.

    Attributes
    ----------
    name : str
        The case name, from the frontmatter ``name`` key.
    datum : LocalDatum
        q and the extension type.
    rep : UnramifiedRep
        The Satake parameters.
    tau : TauDatum
        The valuation of tau and the Langlands constant.
    truncation : int
        The truncation degree N.
    seed : int
        The seed of any random draws.
    frontmatter : dict
        The whole frontmatter, empty if there is none.
    """

    def __init__(
        self,
        datum: LocalDatum,
        rep: UnramifiedRep,
        tau: TauDatum,
        truncation: int,
        seed: int,
        name: str = "config",
        frontmatter: Optional[Dict[str, Any]] = None,
    ):
        self.datum = datum
        self.rep = rep
        self.tau = tau
        self.truncation = truncation
        self.seed = seed
        self.name = name
        self.frontmatter = frontmatter or {}

    @classmethod
    def from_ast(cls, ast: ConfigAST) -> "Config":
        """Validates the entries of a syntax tree.

        Raises
        ------
        ConfigError
            Naming the first offending key.
        """
        entries = ast.entries
        for key in entries:
            if key not in KNOWN_KEYS:
                raise ConfigError(f"{key}: unknown key")
        q = _integer(entries, "q")
        ext = _extension(_required(entries, "extension"))
        try:
            datum = LocalDatum(q, ext)
        except RepresentationError as e:
            raise ConfigError(f"q: {e}") from e
        satake = _scalars(entries, "satake", q)
        satake2: Optional[Tuple[Scalar, ...]] = None
        if ext is ExtensionType.SPLIT:
            satake2 = _scalars(entries, "satake2", q)
        elif "satake2" in entries:
            raise ConfigError(f"satake2: only split data takes a second parameter list, not {ext}")
        n = _integer(entries, "n", len(satake))
        if n != len(satake):
            raise ConfigError(f"satake: expected n = {n} parameters, got {len(satake)}")
        if satake2 is not None and len(satake2) != n:
            raise ConfigError(f"satake2: expected n = {n} parameters, got {len(satake2)}")
        rep = UnramifiedRep(satake, satake2)

        default_tau = TauDatum.default_for(datum)
        d = _integer(entries, "tau_valuation", default_tau.d)
        if d < 0:
            raise ConfigError(f"tau_valuation: must be nonnegative, got {d}")
        try:
            tau = TauDatum(d, _langlands_constant(entries.get("lambda_ef", "1")))
        except (RepresentationError, ScalarError) as e:
            raise ConfigError(f"lambda_ef: {e}") from e

        truncation = _integer(entries, "truncation", settings["depth"])
        if truncation < 0:
            raise ConfigError(f"truncation: must be nonnegative, got {truncation}")
        seed = _integer(entries, "seed", settings["seed"])
        frontmatter = ast.frontmatter or {}
        name = str(frontmatter.get("name", "config"))
        return cls(datum, rep, tau, truncation, seed, name, frontmatter)


def parse_config(text: str) -> Config:
    """Reads a config from its raw text."""
    tokenize = Lexer()
    return Config.from_ast(ConfigAST(tokenize(text)))


def load_config(path: str) -> Config:
    """Reads a config file.

    Raises
    ------
    ConfigError
        If the file cannot be opened or read.
    """
    try:
        with open(path, "r", encoding="utf8") as file:
            content = file.read()
    except OSError as e:
        raise ConfigError(f"cannot open config file {path!r}: {e.strerror}") from e
    return parse_config(content)


def _required(entries: Dict[str, str], key: str) -> str:
    if key not in entries or not entries[key]:
        raise ConfigError(f"{key}: missing")
    return entries[key]


def _integer(entries: Dict[str, str], key: str, default: Optional[int] = None) -> int:
    if key not in entries and default is not None:
        return default
    text = _required(entries, key)
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {text!r}") from None


def _extension(text: str) -> ExtensionType:
    if text in EXTENSION_ALIASES:
        return EXTENSION_ALIASES[text]
    try:
        return ExtensionType(text)
    except ValueError:
        names = ", ".join([e.value for e in ExtensionType] + list(EXTENSION_ALIASES))
        raise ConfigError(f"extension: expected one of {names}, got {text!r}") from None


def _scalars(entries: Dict[str, str], key: str, q: int) -> Tuple[Scalar, ...]:
    values = []
    for piece in _required(entries, key).split(","):
        try:
            value = Scalar.parse(piece, q)
        except ScalarError as e:
            raise ConfigError(f"{key}: {e}") from e
        if value.is_zero():
            raise ConfigError(f"{key}: Satake parameters must be nonzero")
        values.append(value)
    return tuple(values)


def _langlands_constant(text: str) -> GaussRational:
    value = Scalar.parse(text)
    if not value.is_rational():
        raise ScalarError(f"expected one of 1, i, -1, -i, got {text!r}")
    return value.a
