"""Optional accounting of touched vertices and arcs.

Algorithms call :func:`charge` with the number of vertices/arcs they
scanned.  Outside a :func:`metered` block this is a no-op, so the
accounting costs one context-variable lookup per call.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator


class WorkMeter:
    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0


_active: ContextVar[WorkMeter | None] = ContextVar("ssdgraph_work_meter", default=None)


def charge(amount: int) -> None:
    meter = _active.get()
    if meter is not None:
        meter.count += amount


@contextmanager
def metered() -> Iterator[WorkMeter]:
    meter = WorkMeter()
    token = _active.set(meter)
    try:
        yield meter
    finally:
        _active.reset(token)
