"""Edge partitions of graphs into degree-constrained parts."""

from ._core import *  # noqa: F401,F403
from ._core import (
    DomainError,
    Error,
    ParameterError,
    ParseError,
    ResourceError,
    ValidationError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
