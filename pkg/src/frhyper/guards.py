"""Enumeration guards.

Every metric in this package is computed by exact subset enumeration, so a
carelessly large instance can burn hours.  The guards below refuse instances
above n = 28 nodes or 2^26 enumerated subsets unless the caller forces the
computation (``force=True``, or the ``FRC_GUARD_OVERRIDE=1`` environment
variable, which the CLI maps onto ``--force``).
"""

from __future__ import annotations

import os

from .errors import GuardExceededError

MAX_NODES = 28
MAX_SUBSETS = 2 ** 26


def _overridden() -> bool:
    return os.environ.get("FRC_GUARD_OVERRIDE") == "1"


def guard_nodes(n: int, force: bool = False) -> None:
    if force or _overridden():
        return
    if n > MAX_NODES:
        raise GuardExceededError(f"{n} nodes exceeds the enumeration guard ({MAX_NODES})")


def guard_subsets(count: int, force: bool = False) -> None:
    if force or _overridden():
        return
    if count > MAX_SUBSETS:
        raise GuardExceededError(
            f"{count} subsets exceeds the enumeration guard (2^26)"
        )
