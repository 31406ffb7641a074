"""Exact complex-cobordism characteristic-class calculus.

Thin wrapper around the C++ extension ``cobord._cobord``.
"""

from ._cobord import *  # noqa: F401,F403
from ._cobord import (  # noqa: F401
    ConfigurationError,
    DomainError,
    Error,
    ParseError,
    TruncationError,
    UsageError,
)

__version__ = "0.1.0"
