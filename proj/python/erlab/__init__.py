"""Python access to the erlab library.

Exponents come back as ``fractions.Fraction``; everything else is plain
dicts and lists decoded from the native JSON.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from . import _core
from ._core import (  # noqa: F401
    ASYMPTOTIC_LABEL,
    ParameterError,
    PreconditionError,
    StructuralError,
    UnresolvedRamsey,
)

__all__ = [
    "ASYMPTOTIC_LABEL",
    "ParameterError",
    "PreconditionError",
    "StructuralError",
    "UnresolvedRamsey",
    "alpha",
    "construct",
    "count_free_subsets",
    "exponent_lower",
    "exponent_upper",
    "fit_exponent",
    "run_experiment",
    "uncolored_exponent",
    "verify",
]


def _exponent(raw: str) -> dict:
    out = json.loads(raw)
    out["value"] = Fraction(out["value"])
    return out


def exponent_lower(s: int, t: int) -> dict:
    return _exponent(_core.exponent_lower(s, t))


def exponent_upper(s: int, t: int, b: int = 3) -> dict:
    return _exponent(_core.exponent_upper(s, b, t))


def uncolored_exponent(s: int, t: int) -> Fraction:
    return Fraction(_core.uncolored_exponent(s, t))


def _edges(edges: Iterable) -> list[tuple[int, int]]:
    return [(int(u), int(v)) for u, v in edges]


def alpha(n: int, edges: Iterable, s: int, max_nodes: int = 0) -> dict:
    size, witness, optimal, upper = _core.alpha_exact(n, _edges(edges), s, max_nodes)
    return {"size": size, "witness": list(witness), "optimal": optimal, "upper": upper}


def count_free_subsets(n: int, edges: Iterable, s: int, min_size: int = 0) -> int:
    return _core.count_free_subsets(n, _edges(edges), s, min_size)


def construct(s: int, b: int, t: int, n: int, *, k: int = 1, R: Optional[int] = None,
              retention_p: float = 1.0, seed: int = 1,
              out_dir: Optional[str | Path] = None) -> dict:
    raw = _core.construct(s, b, t, n, k, R, retention_p, seed,
                          None if out_dir is None else Path(out_dir))
    return json.loads(raw)


def run_experiment(config: dict, write: bool = False) -> dict:
    return json.loads(_core.run_experiment(json.dumps(config), write))


def fit_exponent(rows: Iterable[tuple[float, float]]) -> dict:
    return _core.fit_exponent([(float(x), float(y)) for x, y in rows])


def verify(level: str, corpus_dir: str | Path, work_dir: str | Path) -> list[dict]:
    return [
        {"id": i, "name": name, "passed": ok, "detail": detail}
        for i, name, ok, detail in _core.verify(level, Path(corpus_dir), Path(work_dir))
    ]
