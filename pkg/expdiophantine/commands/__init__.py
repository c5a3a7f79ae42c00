"""Subcommand modules.

Each module exposes ``register(subparsers)``; the entry point includes them
all. A handler takes the parsed arguments and the settings and returns an
``Outcome``.
"""

import argparse
from typing import Any, Dict, NamedTuple, Optional

SIGNS = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}


class Outcome(NamedTuple):
    parameters: Dict[str, Any]
    payload: Any
    # True when a verifier contradicts a published claim
    violation: bool = False


def sign(text: str) -> int:
    try:
        return SIGNS[text.strip()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}") from None


def pick(value: Optional[int], default: int) -> int:
    """Command-line value if given, otherwise the configured default."""
    return default if value is None else value
