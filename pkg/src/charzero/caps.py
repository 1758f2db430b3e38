"""Resource caps.

Caps bound the exact algorithms, which are exponential-ish in the wrong places
by design (desk scale, no floating point). Precedence: explicit argument >
CHARZERO_CAPS environment variable > defaults.

CHARZERO_CAPS format: comma-separated key=value pairs, e.g.
``CHARZERO_CAPS=closure=200000,order=8192,prime=20000000``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import ParseError

DEFAULT_CLOSURE_CAP = 100_000
DEFAULT_ORDER_CAP = 100_000
DEFAULT_PRIME_CAP = 10_000_000
TABLE_THRESHOLD = 4096          # multiplication stored as a table up to here
ASSOC_EXHAUSTIVE_LIMIT = 200    # full associativity check below, sampled above
ASSOC_SAMPLES = 100_000


@dataclass(frozen=True)
class Caps:
    closure: int = DEFAULT_CLOSURE_CAP
    order: int = DEFAULT_ORDER_CAP
    prime: int = DEFAULT_PRIME_CAP

    def with_overrides(self, **kw: int | None) -> "Caps":
        actual = {k: v for k, v in kw.items() if v is not None}
        return replace(self, **actual) if actual else self


def caps_from_env(env: dict[str, str] | None = None) -> Caps:
    env = os.environ if env is None else env
    raw = env.get("CHARZERO_CAPS", "")
    if not raw.strip():
        return Caps()
    values: dict[str, int] = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ParseError("CHARZERO_CAPS", f"expected key=value, got {item!r}")
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in ("closure", "order", "prime"):
            raise ParseError("CHARZERO_CAPS", f"unknown cap {key!r}")
        try:
            values[key] = int(val)
        except ValueError:
            raise ParseError("CHARZERO_CAPS", f"cap {key!r} is not an integer: {val!r}")
    return Caps(**values)
