"""Exact Kemeny's constant, Braess edges and twin pendent path analysis."""

from ._core import *  # noqa: F401,F403
from ._core import oracle  # noqa: F401
from ._core import (  # noqa: F401
    DisconnectedGraphError,
    EdgeListParseError,
    InternalConsistencyError,
    OracleBoundError,
)
