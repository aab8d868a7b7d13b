"""The user's run settings and related functions.

The settings are stored in a dictionary named ``settings`` with the
following keys. Command-line flags override them for a single run.

acceptance_tolerance : float
    The largest residual a floating-point check may have and pass.
cases_per_type : int
    The number of random parameter tuples per extension type and rank in
    the unramified and functional equation suites.
depth : int
    The default truncation degree of formal series.
identity_cases : int
    The number of random tuples per symmetric function identity.
identity_depth : int
    The truncation degree of the symmetric function identities.
n_max : int
    The largest rank drawn by the suites.
numerator_bound : int
    The bound on numerators and denominators of random parameters.
pole_cases : int
    The number of random unit-modulus parameter tuples in the pole
    suite.
q_choices : List[int]
    The residue cardinalities drawn by the suites.
quad_tolerance : float
    The absolute tolerance of numerical quadrature.
scaling_cases : int
    The number of random instances in the epsilon scaling suite.
schur_cases : int
    The number of random instances in the Schur cross-validation suite.
seed : int
    The default seed of the random generators.
tau_valuations : List[int]
    The valuations of tau crossed with each case of the functional
    equation suite.
twist_cases : int
    The number of random tuples per extension type and rank in the twist
    suites.
twist_depth : int
    The truncation degree of the twist suites.
"""
import json
from typing import Any
from typing import Dict


SETTINGS_FILE_NAME = "asai-settings.json"


__DEFAULT_SETTINGS = {
    "acceptance_tolerance": 1e-6,
    "cases_per_type": 50,
    "depth": 12,
    "identity_cases": 20,
    "identity_depth": 10,
    "n_max": 4,
    "numerator_bound": 9,
    "pole_cases": 50,
    "q_choices": [2, 3, 4, 5, 7, 9],
    "quad_tolerance": 1e-9,
    "scaling_cases": 100,
    "schur_cases": 200,
    "seed": 7,
    "tau_valuations": [0, 1, 2],
    "twist_cases": 10,
    "twist_depth": 8,
}


settings: Dict[str, Any] = {}


def save_settings(path: str = SETTINGS_FILE_NAME) -> None:
    """Save the settings to a JSON file."""
    with open(path, "w") as file:
        json.dump(settings, file, indent=4)


def load_settings(path: str = SETTINGS_FILE_NAME) -> None:
    """Attempt to load the settings from a JSON file.

    If the file does not exist or cannot be decoded, the default
    settings are used.
    """
    try:
        with open(path, "r") as file:
            settings.update(json.load(file))
    except (FileNotFoundError, json.JSONDecodeError):
        settings.update(__DEFAULT_SETTINGS)
    else:
        add_new_settings()


def add_new_settings() -> None:
    """Add any new settings to the settings dictionary."""
    for key, value in __DEFAULT_SETTINGS.items():
        if key not in settings:
            settings[key] = value


def reset_settings() -> None:
    """Reset the settings to their defaults."""
    settings.clear()
    settings.update(__DEFAULT_SETTINGS)
