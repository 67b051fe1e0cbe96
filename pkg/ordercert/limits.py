"""Size guards for the exhaustive algorithms.

Every exhaustive routine in ordercert refuses inputs above a vertex-count guard
instead of silently running for hours. The guards are held in a frozen
``Limits`` dataclass; ``ORDERCERT_MAX_N`` overrides all of them at once, and an
explicit ``max_n`` argument overrides the environment.
"""

import os
from dataclasses import dataclass, replace
from typing import Literal, Optional

from .constants import (
    DEFAULT_BANDWIDTH_MAX_N,
    DEFAULT_CATERPILLAR_MAX_N,
    DEFAULT_ENUMERATION_MAX_N,
    DEFAULT_SEARCH_MAX_N,
    ENV_MAX_N,
)
from .errors import ConfigurationError, SizeGuardError

Guard = Literal[
    "search",
    "bandwidth",
    "caterpillar",
    "enumeration",
]


@dataclass(frozen=True)
class Limits:
    """Vertex-count guards, one per exhaustive routine."""

    search: int = DEFAULT_SEARCH_MAX_N
    bandwidth: int = DEFAULT_BANDWIDTH_MAX_N
    caterpillar: int = DEFAULT_CATERPILLAR_MAX_N
    enumeration: int = DEFAULT_ENUMERATION_MAX_N

    @classmethod
    def from_env(cls) -> "Limits":
        """Build limits from the defaults and the ORDERCERT_MAX_N variable."""
        raw = os.environ.get(ENV_MAX_N)
        if raw is None or not raw.strip():
            return cls()
        return cls().override(_parse_max_n(raw))

    def override(self, max_n: Optional[int]) -> "Limits":
        """Return limits with every guard set to max_n (unchanged if None)."""
        if max_n is None:
            return self
        if max_n < 0:
            raise ConfigurationError(f"max_n must be non-negative, got {max_n}")
        return replace(
            self,
            search=max_n,
            bandwidth=max_n,
            caterpillar=max_n,
            enumeration=max_n,
        )

    def check(self, guard: Guard, n: int) -> None:
        """Raise SizeGuardError if n exceeds the named guard."""
        limit = getattr(self, guard)
        if n > limit:
            raise SizeGuardError(guard, n, limit)


def _parse_max_n(raw: str) -> int:
    try:
        value = int(raw.strip())
    except ValueError as e:
        raise ConfigurationError(
            f"{ENV_MAX_N} must be an integer, got {raw!r}"
        ) from e
    if value < 0:
        raise ConfigurationError(f"{ENV_MAX_N} must be non-negative, got {value}")
    return value


def guard(name: Guard, n: int, max_n: Optional[int] = None) -> None:
    """Enforce a size guard, honouring ORDERCERT_MAX_N and an explicit max_n.

    Args:
        name (str): Guard name ("search", "bandwidth", "caterpillar",
            "enumeration").
        n (int): Instance size.
        max_n (int, optional): Explicit override; wins over the environment.

    Raises:
        SizeGuardError: If n exceeds the effective limit.

    """
    Limits.from_env().override(max_n).check(name, n)
