"""Input-output fidelity of bosonic Gaussian channels with pure Gaussian inputs."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    Error,
    InvalidArgument,
    InvalidState,
    PreconditionError,
    SingularMatrix,
    UnsupportedChannel,
    UnsupportedDimension,
)

__version__ = "0.1.0"
