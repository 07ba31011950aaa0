"""Censuses of self-inverse and invertible elements, and enumeration of all
finite meadows of a given order up to isomorphism.

The closed-form predictions work factorwise: a field of order q contributes
q-1 invertibles, and its self-inverse elements are exactly the roots of
m*(m-1)*(m+1), that is {0, 1, -1} -- two elements in characteristic 2
(where 1 = -1) and three otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from meadows.construct import direct_product, make_gf
from meadows.decompose import Signature, signature_of
from meadows.numtheory import factorize, partitions
from meadows.structures import FiniteStructure, is_meadow

__all__ = [
    "CensusReport",
    "count_self_inverses",
    "count_invertibles",
    "predict_counts",
    "take_census",
    "check_cube_characterization",
    "enumerate_signatures",
    "build_from_signature",
]


def _require_meadow(m: FiniteStructure) -> None:
    if not is_meadow(m):
        raise ValueError("structure is not a meadow")


def count_self_inverses(m: FiniteStructure) -> tuple[int, tuple[int, ...]]:
    """Count and list (ascending) the elements with x = x^-1."""
    _require_meadow(m)
    idx = np.arange(m.order)
    hits = np.nonzero(m.inv == idx)[0]
    elements = tuple(int(x) for x in hits)
    return len(elements), elements


def count_invertibles(m: FiniteStructure) -> tuple[int, tuple[int, ...]]:
    """Count and list (ascending) the elements with x * x^-1 = 1."""
    _require_meadow(m)
    idx = np.arange(m.order)
    hits = np.nonzero(m.mul[idx, m.inv] == m.one)[0]
    elements = tuple(int(x) for x in hits)
    return len(elements), elements


def predict_counts(sig: Signature) -> tuple[int, int]:
    """Closed-form (self-inverse count, invertible count) for a signature.

    Each field factor contributes multiplicatively: 2 self-inverses in
    characteristic 2, else 3; and p^k - 1 invertibles.  The empty signature
    predicts (1, 1) for the one-element meadow.
    """
    self_inv = prod(2 if p == 2 else 3 for p, _ in sig.entries)
    invertible = prod(p**k - 1 for p, k in sig.entries)
    return self_inv, invertible


@dataclass(frozen=True)
class CensusReport:
    """Brute-force census of a meadow next to the closed-form predictions."""

    order: int
    self_inverse_count: int
    invertible_count: int
    predicted_self_inverse: int
    predicted_invertible: int
    self_inverse_elements: tuple[int, ...]
    invertible_elements: tuple[int, ...]

    def __post_init__(self):
        if self.self_inverse_count != len(self.self_inverse_elements):
            raise ValueError("self-inverse count does not match its element list")
        if self.invertible_count != len(self.invertible_elements):
            raise ValueError("invertible count does not match its element list")

    @property
    def counts_match(self) -> bool:
        return (
            self.self_inverse_count == self.predicted_self_inverse
            and self.invertible_count == self.predicted_invertible
        )


def take_census(m: FiniteStructure) -> CensusReport:
    """Census a meadow by brute force and by formula from its signature."""
    si_count, si_elements = count_self_inverses(m)
    inv_count, inv_elements = count_invertibles(m)
    predicted_si, predicted_inv = predict_counts(signature_of(m))
    return CensusReport(
        order=m.order,
        self_inverse_count=si_count,
        invertible_count=inv_count,
        predicted_self_inverse=predicted_si,
        predicted_invertible=predicted_inv,
        self_inverse_elements=si_elements,
        invertible_elements=inv_elements,
    )


def check_cube_characterization(m: FiniteStructure) -> bool:
    """True iff {x : x^3 = x} coincides exactly with the self-inverse set.

    This equivalence holds in every meadow; the check makes it testable on
    explicit tables.
    """
    _require_meadow(m)
    idx = np.arange(m.order)
    cubes_fixed = m.mul[m.mul[idx, idx], idx] == idx
    self_inverse = m.inv == idx
    return bool(np.array_equal(cubes_fixed, self_inverse))


def enumerate_signatures(n: int) -> list[Signature]:
    """All meadow signatures of order n, i.e. all multisets of prime powers
    with product n, sorted canonically.

    For n = q_1^a_1 * ... * q_r^a_r each signature chooses an integer
    partition of every exponent a_i, so the count is the product of the
    partition numbers of the a_i.  enumerate_signatures(1) is the singleton
    empty signature.
    """
    if n < 1:
        raise ValueError(f"order {n} must be positive")
    per_prime: list[list[list[tuple[int, int]]]] = []
    for q, a in factorize(n):
        per_prime.append([[(q, part) for part in partition] for partition in partitions(a)])

    signatures: list[Signature] = []

    def assemble(i: int, acc: list[tuple[int, int]]) -> None:
        if i == len(per_prime):
            signatures.append(Signature.of_pairs(acc))
            return
        for choice in per_prime[i]:
            assemble(i + 1, acc + choice)

    assemble(0, [])
    signatures.sort(key=lambda sig: sig.entries)
    return signatures


def build_from_signature(sig: Signature) -> FiniteStructure:
    """The canonical meadow with the given signature: the direct product of
    GF(p^k) over the sorted entries."""
    return direct_product([make_gf(p, k) for p, k in sig.entries])
