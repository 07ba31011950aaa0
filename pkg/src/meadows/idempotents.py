"""Idempotents of a meadow and their natural partial order.

An idempotent is a nonzero e with e*e = e; e <= e' means e*e' = e.  The
minimal idempotents are the combinatorial skeleton of the decomposition
into fields: they are pairwise orthogonal and sum to 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from meadows.structures import FiniteStructure, is_meadow

__all__ = [
    "IdempotentSet",
    "idempotents",
    "leq_idempotent",
    "minimal_idempotents",
    "are_orthogonal",
    "idempotent_set",
]


def _require_meadow(m: FiniteStructure) -> None:
    if not is_meadow(m):
        raise ValueError("structure is not a meadow")


def _require_idempotent(m: FiniteStructure, e: int, name: str) -> None:
    if not (0 <= e < m.order) or e == m.zero or m.mul[e, e] != e:
        raise ValueError(f"{name}={e} is not an idempotent")


def idempotents(m: FiniteStructure) -> list[int]:
    """All nonzero e with e*e = e, ascending."""
    _require_meadow(m)
    idx = np.arange(m.order)
    hits = np.nonzero(m.mul[idx, idx] == idx)[0]
    return [int(e) for e in hits if e != m.zero]


def leq_idempotent(m: FiniteStructure, e: int, e2: int) -> bool:
    """The idempotent order: e <= e2 iff e*e2 = e.  Both arguments must be
    idempotents."""
    _require_idempotent(m, e, "e")
    _require_idempotent(m, e2, "e2")
    return bool(m.mul[e, e2] == e)


def minimal_idempotents(m: FiniteStructure) -> list[int]:
    """Idempotents with no strictly smaller idempotent below them, ascending."""
    idem = idempotents(m)
    out = []
    for e in idem:
        if all(e2 == e or m.mul[e2, e] != e2 for e2 in idem):
            out.append(e)
    return out


def are_orthogonal(m: FiniteStructure, e: int, e2: int) -> bool:
    """True iff e*e2 is the zero element.  Defined for arbitrary elements."""
    n = m.order
    if not (0 <= e < n and 0 <= e2 < n):
        raise ValueError(f"elements ({e}, {e2}) out of range 0..{n - 1}")
    return bool(m.mul[e, e2] == m.zero)


@dataclass(frozen=True)
class IdempotentSet:
    """The idempotents of a meadow together with the minimal ones."""

    meadow: FiniteStructure
    idempotents: tuple[int, ...]
    minimal: tuple[int, ...]


def idempotent_set(m: FiniteStructure) -> IdempotentSet:
    return IdempotentSet(
        meadow=m,
        idempotents=tuple(idempotents(m)),
        minimal=tuple(minimal_idempotents(m)),
    )
