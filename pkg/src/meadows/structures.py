"""Finite structures for the signature {0, 1, +, -, *, ^-1} and exhaustive axiom checking.

A structure is given by explicit operation tables over the carrier {0..n-1}.
The ten meadow axioms (eight commutative-ring axioms plus reflection and the
restricted inverse law) are decided by exhaustive enumeration of all element
tuples; there is no sampling, so a "pass" is a proof for the structure at hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

__all__ = [
    "AXIOM_NAMES",
    "RING_AXIOM_NAMES",
    "AXIOM_VARIABLES",
    "MeadowError",
    "FiniteStructure",
    "AxiomReport",
    "validate_structure",
    "check_axioms",
    "evaluate_axiom",
    "is_commutative_ring",
    "is_meadow",
]

#: The ten axioms, in fixed report order.  The first eight specify a
#: commutative ring with identity; Ref makes inversion an involution and
#: Ril is the restricted inverse law x*(x*x^-1) = x.
AXIOM_NAMES: tuple[str, ...] = (
    "add-assoc",
    "add-comm",
    "add-zero",
    "add-inverse",
    "mul-assoc",
    "mul-comm",
    "mul-one",
    "distributivity",
    "Ref",
    "Ril",
)

RING_AXIOM_NAMES: tuple[str, ...] = AXIOM_NAMES[:8]

#: Variables quantified over in each axiom; witness tuples follow this order.
AXIOM_VARIABLES: dict[str, tuple[str, ...]] = {
    "add-assoc": ("x", "y", "z"),
    "add-comm": ("x", "y"),
    "add-zero": ("x",),
    "add-inverse": ("x",),
    "mul-assoc": ("x", "y", "z"),
    "mul-comm": ("x", "y"),
    "mul-one": ("x",),
    "distributivity": ("x", "y", "z"),
    "Ref": ("x",),
    "Ril": ("x",),
}


class MeadowError(Exception):
    """Base class for domain errors raised by this package."""


def _frozen_table(value, dtype=np.int64) -> np.ndarray:
    arr = np.array(value)
    if arr.dtype.kind in "ui":
        arr = arr.astype(dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteStructure:
    """Operation tables of a finite {0,1,+,-,*,^-1}-structure on carrier {0..n-1}.

    ``zero`` and ``one`` are designated element indices (not necessarily 0
    and 1; a file may permute the carrier).  ``add`` and ``mul`` are n x n
    tables, ``neg`` and ``inv`` length-n tables, all holding element indices.
    ``labels`` is an optional tuple of n distinct display strings.

    Instances are immutable; the tables are read-only arrays, so structures
    are safe to share between threads.
    """

    order: int
    zero: int
    one: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "order", int(self.order))
        object.__setattr__(self, "zero", int(self.zero))
        object.__setattr__(self, "one", int(self.one))
        object.__setattr__(self, "add", _frozen_table(self.add))
        object.__setattr__(self, "mul", _frozen_table(self.mul))
        object.__setattr__(self, "neg", _frozen_table(self.neg))
        object.__setattr__(self, "inv", _frozen_table(self.inv))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))

    def elements(self) -> range:
        return range(self.order)

    def label(self, x: int) -> str:
        """Display string for element x (its index if the structure is unlabelled)."""
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteStructure):
            return NotImplemented
        return (
            self.order == other.order
            and self.zero == other.zero
            and self.one == other.one
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
            and np.array_equal(self.neg, other.neg)
            and np.array_equal(self.inv, other.inv)
            and self.labels == other.labels
        )

    def __repr__(self) -> str:
        return f"FiniteStructure(order={self.order}, zero={self.zero}, one={self.one})"


def validate_structure(s: FiniteStructure) -> list[str]:
    """Check the well-formedness invariants of a structure.

    Returns a list of defect descriptions; the empty list means ok.  Defects
    name the offending table, row and column.  Range scans stop at the first
    offender per table to keep reports bounded.
    """
    defects: list[str] = []
    n = s.order
    if n < 1:
        return [f"order={n}; expected a positive integer"]

    if not (0 <= s.zero < n):
        defects.append(f"zero={s.zero} out of range 0..{n - 1}")
    if not (0 <= s.one < n):
        defects.append(f"one={s.one} out of range 0..{n - 1}")

    for name, table, shape in (
        ("add", s.add, (n, n)),
        ("mul", s.mul, (n, n)),
        ("neg", s.neg, (n,)),
        ("inv", s.inv, (n,)),
    ):
        if table.dtype.kind not in "ui":
            defects.append(f"{name}: entries must be integers")
            continue
        if table.shape != shape:
            want = "x".join(str(d) for d in shape)
            got = "x".join(str(d) for d in table.shape)
            defects.append(f"{name}: expected {want} table, got {got}")
            continue
        bad = (table < 0) | (table >= n)
        if bad.any():
            pos = np.argwhere(bad)[0]
            at = "".join(f"[{int(i)}]" for i in pos)
            defects.append(f"{name}{at}={int(table[tuple(pos)])} out of range 0..{n - 1}")

    if s.labels is not None:
        if len(s.labels) != n:
            defects.append(f"labels: expected {n} entries, got {len(s.labels)}")
        elif len(set(s.labels)) != n:
            seen: dict[str, int] = {}
            for i, lab in enumerate(s.labels):
                if lab in seen:
                    defects.append(f"labels[{i}] duplicates labels[{seen[lab]}] ({lab!r})")
                    break
                seen[lab] = i

    return defects


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an exhaustive axiom check.

    ``results`` maps each checked axiom name to pass/fail; ``witnesses``
    holds, for each failed axiom, the lexicographically first falsifying
    assignment (element indices in AXIOM_VARIABLES order).
    """

    results: dict[str, bool]
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        for name, ok in self.results.items():
            if ok and name in self.witnesses:
                raise ValueError(f"passed axiom {name} must not carry a witness")
            if not ok and name not in self.witnesses:
                raise ValueError(f"failed axiom {name} must carry a witness")

    @property
    def all_pass(self) -> bool:
        return all(self.results.values())

    @property
    def failed(self) -> tuple[str, ...]:
        return tuple(name for name, ok in self.results.items() if not ok)


def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> tuple[int, ...] | None:
    bad = lhs != rhs
    if not bad.any():
        return None
    return tuple(int(i) for i in np.argwhere(bad)[0])


def _check_ternary(per_x) -> tuple[bool, tuple[int, ...] | None]:
    # per_x(x) -> (lhs, rhs) as n x n arrays over (y, z); scanning x in
    # ascending order keeps the witness lexicographically first while
    # bounding memory to O(n^2) per axiom.
    for x, (lhs, rhs) in per_x:
        w = _first_mismatch(lhs, rhs)
        if w is not None:
            return False, (x, *w)
    return True, None


def _axiom_result(s: FiniteStructure, name: str) -> tuple[bool, tuple[int, ...] | None]:
    n = s.order
    idx = np.arange(n)
    A, M, N, I = s.add, s.mul, s.neg, s.inv

    if name == "add-assoc":
        return _check_ternary((x, (A[A[x], :], A[x][A])) for x in range(n))
    if name == "mul-assoc":
        return _check_ternary((x, (M[M[x], :], M[x][M])) for x in range(n))
    if name == "distributivity":
        return _check_ternary(
            (x, (M[x][A], A[M[x][:, None], M[x][None, :]])) for x in range(n)
        )
    if name == "add-comm":
        w = _first_mismatch(A, A.T)
        return w is None, w
    if name == "mul-comm":
        w = _first_mismatch(M, M.T)
        return w is None, w
    if name == "add-zero":
        w = _first_mismatch(A[:, s.zero], idx)
        return w is None, w
    if name == "add-inverse":
        w = _first_mismatch(A[idx, N], np.full(n, s.zero))
        return w is None, w
    if name == "mul-one":
        w = _first_mismatch(M[:, s.one], idx)
        return w is None, w
    if name == "Ref":
        w = _first_mismatch(I[I], idx)
        return w is None, w
    if name == "Ril":
        w = _first_mismatch(M[idx, M[idx, I]], idx)
        return w is None, w
    raise ValueError(f"unknown axiom {name!r}")


def check_axioms(
    s: FiniteStructure, axioms: Sequence[str] = AXIOM_NAMES
) -> AxiomReport:
    """Exhaustively check the given axioms (all ten by default).

    Triples are enumerated for associativity and distributivity, pairs for
    commutativity, single elements for the rest.  A failed axiom's witness is
    the lexicographically first falsifying tuple in row-major scan order, so
    reports are deterministic.

    Raises ValueError if the structure itself is malformed.
    """
    defects = validate_structure(s)
    if defects:
        raise ValueError(f"invalid structure: {'; '.join(defects)}")
    results: dict[str, bool] = {}
    witnesses: dict[str, tuple[int, ...]] = {}
    for name in axioms:
        ok, witness = _axiom_result(s, name)
        results[name] = ok
        if not ok:
            witnesses[name] = witness
    return AxiomReport(results=results, witnesses=witnesses)


def evaluate_axiom(
    s: FiniteStructure, name: str, assignment: Sequence[int]
) -> tuple[int, int]:
    """Evaluate both sides of an axiom at a concrete assignment.

    ``assignment`` lists element indices for the axiom's variables in
    AXIOM_VARIABLES order.  Used to display and verify witnesses.
    """
    A, M, N, I = s.add, s.mul, s.neg, s.inv
    vals = [int(v) for v in assignment]
    if len(vals) != len(AXIOM_VARIABLES[name]):
        raise ValueError(
            f"{name} takes {len(AXIOM_VARIABLES[name])} variables, got {len(vals)}"
        )
    if name == "add-assoc":
        x, y, z = vals
        return int(A[A[x, y], z]), int(A[x, A[y, z]])
    if name == "add-comm":
        x, y = vals
        return int(A[x, y]), int(A[y, x])
    if name == "add-zero":
        (x,) = vals
        return int(A[x, s.zero]), x
    if name == "add-inverse":
        (x,) = vals
        return int(A[x, N[x]]), s.zero
    if name == "mul-assoc":
        x, y, z = vals
        return int(M[M[x, y], z]), int(M[x, M[y, z]])
    if name == "mul-comm":
        x, y = vals
        return int(M[x, y]), int(M[y, x])
    if name == "mul-one":
        (x,) = vals
        return int(M[x, s.one]), x
    if name == "distributivity":
        x, y, z = vals
        return int(M[x, A[y, z]]), int(A[M[x, y], M[x, z]])
    if name == "Ref":
        (x,) = vals
        return int(I[I[x]]), x
    if name == "Ril":
        (x,) = vals
        return int(M[x, M[x, I[x]]]), x
    raise ValueError(f"unknown axiom {name!r}")


def is_commutative_ring(s: FiniteStructure) -> bool:
    """True iff the eight ring axioms hold (inversion is ignored)."""
    return check_axioms(s, RING_AXIOM_NAMES).all_pass


def is_meadow(s: FiniteStructure) -> bool:
    """True iff all ten axioms hold."""
    return check_axioms(s).all_pass
