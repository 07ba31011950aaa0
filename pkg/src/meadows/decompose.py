"""Decomposition of finite meadows into Galois fields.

Every finite meadow is isomorphic to the product of the factors e*M cut out
by its minimal idempotents e, via h(m) = (e_1*m, ..., e_n*m); each factor is
a field.  ``decompose`` constructs this data and verifies it exhaustively,
so the sorted multiset of factor prime powers (the signature) is a complete
isomorphism invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from meadows.numtheory import is_prime, prime_power
from meadows.idempotents import minimal_idempotents
from meadows.structures import FiniteStructure, MeadowError, is_meadow

__all__ = [
    "TheoremViolationError",
    "CriterionMismatchError",
    "Signature",
    "Decomposition",
    "factor_by_idempotent",
    "decompose",
    "signature_of",
    "are_isomorphic",
    "prime_submeadow",
    "is_minimal_meadow",
]


class TheoremViolationError(MeadowError):
    """An internal verification failed on a structure that passed the meadow
    check.  The decomposition theorem guarantees this cannot happen, so it
    signals an implementation bug, not bad input."""


class CriterionMismatchError(MeadowError):
    """The submeadow-closure test and the signature test for minimality
    disagreed; like TheoremViolationError this indicates a bug."""


@dataclass(frozen=True)
class Signature:
    """Sorted multiset of prime powers (p, k): the isomorphism type of a
    finite meadow.  The empty signature is the one-element meadow."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        entries = tuple((int(p), int(k)) for p, k in self.entries)
        object.__setattr__(self, "entries", entries)
        for p, k in entries:
            if not is_prime(p):
                raise ValueError(f"signature base {p} is not prime")
            if k < 1:
                raise ValueError(f"signature exponent {k} must be positive")
        if list(entries) != sorted(entries):
            raise ValueError(f"signature entries {entries} not sorted ascending")

    @classmethod
    def of_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Signature":
        return cls(tuple(sorted((int(p), int(k)) for p, k in pairs)))

    @property
    def order(self) -> int:
        out = 1
        for p, k in self.entries:
            out *= p**k
        return out

    @property
    def is_squarefree(self) -> bool:
        """True iff all exponents are 1 and the primes are distinct (the
        signature of a minimal meadow)."""
        primes = [p for p, _ in self.entries]
        return all(k == 1 for _, k in self.entries) and len(set(primes)) == len(primes)

    def __str__(self) -> str:
        if not self.entries:
            return "1"
        return " x ".join(f"GF({p**k})" for p, k in self.entries)


@dataclass(frozen=True, eq=False)
class Decomposition:
    """A meadow's minimal idempotents, the field factors they generate, and
    the verified isomorphism onto the product of those factors.

    ``h_forward[x]`` is the tuple of factor indices of element x;
    ``h_inverse`` maps each such tuple back to its unique preimage.
    ``embeddings[i]`` lists, per factor element, the original element index.
    """

    meadow: FiniteStructure
    minimal: tuple[int, ...]
    factors: tuple[FiniteStructure, ...]
    embeddings: tuple[tuple[int, ...], ...]
    h_forward: tuple[tuple[int, ...], ...]
    h_inverse: Mapping[tuple[int, ...], int]
    signature: Signature


def factor_by_idempotent(
    m: FiniteStructure, e: int
) -> tuple[FiniteStructure, tuple[int, ...]]:
    """The meadow e*M with multiplicative identity e.

    Returns the factor structure plus its embedding: the carrier is the set
    {e*x : x in M}, listed in ascending original index and reindexed from 0.
    The factor's operations are the originals restricted to that carrier
    (e*M is closed under all of them), its zero is e*0 = 0 and its one is e.
    """
    if not is_meadow(m):
        raise ValueError("structure is not a meadow")
    if e == m.zero or m.mul[e, e] != e:
        raise ValueError(f"e={e} is not an idempotent")
    return _restrict(m, sorted(int(v) for v in set(m.mul[e, :].tolist())), one=e)


def _restrict(
    m: FiniteStructure, carrier: list[int], one: int
) -> tuple[FiniteStructure, tuple[int, ...]]:
    pos = {orig: i for i, orig in enumerate(carrier)}
    k = len(carrier)
    add = np.zeros((k, k), dtype=np.int64)
    mul = np.zeros((k, k), dtype=np.int64)
    neg = np.zeros(k, dtype=np.int64)
    inv = np.zeros(k, dtype=np.int64)
    for i, x in enumerate(carrier):
        neg[i] = pos[int(m.neg[x])]
        inv[i] = pos[int(m.inv[x])]
        for j, y in enumerate(carrier):
            add[i, j] = pos[int(m.add[x, y])]
            mul[i, j] = pos[int(m.mul[x, y])]
    labels = None
    if m.labels is not None:
        labels = tuple(m.labels[x] for x in carrier)
    structure = FiniteStructure(
        order=k,
        zero=pos[m.zero],
        one=pos[one],
        add=add,
        mul=mul,
        neg=neg,
        inv=inv,
        labels=labels,
    )
    return structure, tuple(carrier)


def _is_field(f: FiniteStructure) -> bool:
    idx = np.arange(f.order)
    nonzero = idx != f.zero
    return bool(np.all(f.mul[idx[nonzero], f.inv[nonzero]] == f.one))


def decompose(m: FiniteStructure) -> Decomposition:
    """Split a meadow into the field factors of its minimal idempotents and
    verify the isomorphism h(x) = (e_1*x, ..., e_n*x) exhaustively.

    The verification covers: h is a bijection, h is a homomorphism for all
    six signature symbols, every factor is a meadow in which each nonzero
    element is invertible, and each factor order is a prime power.  Any
    failure raises TheoremViolationError, which indicates a bug rather than
    bad input, since these facts are guaranteed for every meadow.
    """
    if not is_meadow(m):
        raise ValueError("structure is not a meadow")
    n = m.order
    mins = minimal_idempotents(m)

    factors: list[FiniteStructure] = []
    embeddings: list[tuple[int, ...]] = []
    phis: list[np.ndarray] = []
    for e in mins:
        f, emb = factor_by_idempotent(m, e)
        pos = {orig: i for i, orig in enumerate(emb)}
        phi = np.array([pos[int(m.mul[e, x])] for x in range(n)], dtype=np.int64)
        _verify_factor(m, f, phi, e)
        factors.append(f)
        embeddings.append(emb)
        phis.append(phi)

    h_rows = [tuple(int(phi[x]) for phi in phis) for x in range(n)]
    h_inverse = {row: x for x, row in enumerate(h_rows)}
    product_size = 1
    for f in factors:
        product_size *= f.order
    if len(h_inverse) != n or product_size != n:
        raise TheoremViolationError(
            f"h is not a bijection: {len(h_inverse)} distinct images, "
            f"product size {product_size}, order {n}"
        )

    pairs = []
    for f in factors:
        pk = prime_power(f.order)
        if pk is None:
            raise TheoremViolationError(f"factor order {f.order} is not a prime power")
        pairs.append(pk)

    return Decomposition(
        meadow=m,
        minimal=tuple(mins),
        factors=tuple(factors),
        embeddings=tuple(embeddings),
        h_forward=tuple(h_rows),
        h_inverse=h_inverse,
        signature=Signature.of_pairs(pairs),
    )


def _verify_factor(
    m: FiniteStructure, f: FiniteStructure, phi: np.ndarray, e: int
) -> None:
    # phi must be a surjective homomorphism M -> f for all six symbols.
    checks = (
        ("zero", phi[m.zero] == f.zero),
        ("one", phi[m.one] == f.one),
        ("add", np.array_equal(phi[m.add], f.add[phi[:, None], phi[None, :]])),
        ("mul", np.array_equal(phi[m.mul], f.mul[phi[:, None], phi[None, :]])),
        ("neg", np.array_equal(phi[m.neg], f.neg[phi])),
        ("inv", np.array_equal(phi[m.inv], f.inv[phi])),
    )
    for symbol, ok in checks:
        if not np.all(ok):
            raise TheoremViolationError(
                f"projection onto factor of idempotent {e} fails for {symbol}"
            )
    if not is_meadow(f):
        raise TheoremViolationError(f"factor of idempotent {e} is not a meadow")
    if not _is_field(f):
        raise TheoremViolationError(
            f"factor of idempotent {e} has a non-invertible nonzero element"
        )


def signature_of(m: FiniteStructure) -> Signature:
    """The sorted multiset of prime powers of the meadow's field factors."""
    return decompose(m).signature


def are_isomorphic(a: FiniteStructure, b: FiniteStructure) -> bool:
    """Isomorphism test via signatures, which classify finite meadows
    completely: equal signature means isomorphic, and conversely."""
    return signature_of(a) == signature_of(b)


def prime_submeadow(m: FiniteStructure) -> tuple[FiniteStructure, tuple[int, ...]]:
    """The smallest submeadow: the closure of {0, 1} under all operations,
    reindexed ascending, with its embedding into m."""
    if not is_meadow(m):
        raise ValueError("structure is not a meadow")
    closed = {m.zero, m.one}
    frontier = list(closed)
    while frontier:
        x = frontier.pop()
        new = {int(m.neg[x]), int(m.inv[x])}
        for y in list(closed):
            new.add(int(m.add[x, y]))
            new.add(int(m.mul[x, y]))
        for v in new:
            if v not in closed:
                closed.add(v)
                frontier.append(v)
    return _restrict(m, sorted(closed), one=m.one)


def is_minimal_meadow(m: FiniteStructure) -> bool:
    """True iff the meadow has no proper submeadow.

    Decided by the closure criterion (the prime submeadow is everything) and
    cross-checked against the signature criterion (all exponents 1, distinct
    primes, i.e. squarefree order); a disagreement would be a bug and raises
    CriterionMismatchError.
    """
    sub, _ = prime_submeadow(m)
    by_closure = sub.order == m.order
    by_signature = signature_of(m).is_squarefree
    if by_closure != by_signature:
        raise CriterionMismatchError(
            f"closure criterion says {by_closure}, signature criterion says "
            f"{by_signature} for a meadow of order {m.order}"
        )
    return by_closure
