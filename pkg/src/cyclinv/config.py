"""Resource caps shared by all brute-force and span computations."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_CAP_AMBIENT = "CYCLINV_CAP_AMBIENT"


class CapExceeded(RuntimeError):
    """Raised when a computation would exceed a configured resource cap."""

    def __init__(self, cap: str, limit: int, requested: int):
        self.cap = cap
        self.limit = limit
        self.requested = requested
        super().__init__(f"{cap} cap exceeded: requested {requested}, limit {limit}")


@dataclass(frozen=True)
class Caps:
    ambient: int = 100_000  # d^n, size of a homogeneous component
    group_order: int = 10_000
    s_degree: int = 6  # max degree for S-algebra spans

    def __post_init__(self):
        for name in ("ambient", "group_order", "s_degree"):
            if getattr(self, name) < 1:
                raise ValueError(f"cap {name} must be positive")

    def check_ambient(self, size: int) -> None:
        if size > self.ambient:
            raise CapExceeded("ambient", self.ambient, size)

    def check_group_order(self, size: int) -> None:
        if size > self.group_order:
            raise CapExceeded("group-order", self.group_order, size)

    def check_s_degree(self, n: int) -> None:
        if n > self.s_degree:
            raise CapExceeded("s-degree", self.s_degree, n)

    @classmethod
    def from_env(cls, **overrides) -> "Caps":
        caps = cls()
        raw = os.environ.get(ENV_CAP_AMBIENT)
        if raw:
            caps = replace(caps, ambient=int(raw))
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(caps, **overrides)


def resolve(caps: Caps | None) -> Caps:
    return caps if caps is not None else Caps.from_env()
