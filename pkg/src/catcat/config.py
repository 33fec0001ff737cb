"""Size bounds for the brute-force routines.

Every bound can be overridden through an environment variable named
``CATCAT_<FIELD>`` (upper case), e.g. ``CATCAT_MAX_ENUMERATE_N=13``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

ENV_PREFIX = "CATCAT_"


@dataclass(frozen=True)
class Bounds:
    max_enumerate_n: int = 12
    max_presentation_n: int = 5
    kb_max_rules: int = 10_000
    kb_max_word_len: int = 64
    max_faithful_n: int = 6
    max_ttuple_n: int = 12
    max_phi_n: int = 5
    max_word_len: int = 8
    max_koszul_n: int = 8

    @classmethod
    def from_env(cls, environ=None) -> "Bounds":
        environ = os.environ if environ is None else environ
        values = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is not None:
                try:
                    values[f.name] = int(raw)
                except ValueError:
                    raise ValueError(f"{ENV_PREFIX}{f.name.upper()} must be an integer") from None
        return cls(**values)


BOUNDS = Bounds.from_env()
