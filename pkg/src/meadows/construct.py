"""Constructors for canonical finite meadows.

Residue rings Z/nZ, zero-totalized Galois fields GF(p^k), and finite direct
products.  All constructions are deterministic: the same arguments always
produce bit-identical tables, so serialized structures are stable golden
files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from meadows.numtheory import is_prime
from meadows.polynomials import (
    PolynomialModP,
    is_irreducible,
    poly_inverse_mod,
)
from meadows.structures import (
    FiniteStructure,
    MeadowError,
    check_axioms,
    is_meadow,
    RING_AXIOM_NAMES,
    validate_structure,
)

__all__ = [
    "NoInverseError",
    "AmbiguousInverseError",
    "GaloisFieldSpec",
    "make_zmod_ring",
    "inverse_candidates",
    "totalize_inverse",
    "find_irreducible",
    "make_gf",
    "direct_product",
    "product_encode",
    "product_decode",
]


class NoInverseError(MeadowError):
    """Raised when a ring element has no group inverse, so the ring admits no
    total meadow inverse."""

    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no candidate inverse")


class AmbiguousInverseError(MeadowError):
    """Raised when an element has several group-inverse candidates.

    Uniqueness is a theorem of commutative rings, so this signals a bug in
    the caller's tables or in this package, never a property of valid input.
    """

    def __init__(self, element: int, candidates: Sequence[int]):
        self.element = element
        self.candidates = tuple(int(c) for c in candidates)
        super().__init__(
            f"element {element} has {len(self.candidates)} inverse candidates: "
            f"{list(self.candidates)}"
        )


def make_zmod_ring(n: int) -> FiniteStructure:
    """The residue ring Z/nZ with carrier {0..n-1} and arithmetic mod n.

    The inverse table is only a placeholder (the identity map) and the result
    is in general not a meadow; pass it through ``totalize_inverse`` to
    complete it.  zero=0 and one=1 mod n (so one=0 when n=1).
    """
    if n < 1:
        raise ValueError(f"ring order {n} must be positive")
    idx = np.arange(n)
    return FiniteStructure(
        order=n,
        zero=0,
        one=1 % n,
        add=(idx[:, None] + idx[None, :]) % n,
        mul=(idx[:, None] * idx[None, :]) % n,
        neg=(-idx) % n,
        inv=idx.copy(),
        labels=tuple(str(i) for i in range(n)),
    )


def inverse_candidates(ring: FiniteStructure, x: int) -> list[int]:
    """All y with x*x*y = x and y*y*x = y, in ascending order.

    In a commutative ring such a y (the group inverse of x) is unique when it
    exists; an empty list means the ring cannot carry a total meadow inverse.
    """
    M = ring.mul
    n = ring.order
    idx = np.arange(n)
    squares = M[idx, idx]
    left = M[M[x, x], :] == x
    right = M[squares, x] == idx
    return [int(y) for y in np.nonzero(left & right)[0]]


def totalize_inverse(ring: FiniteStructure) -> FiniteStructure:
    """Expand a commutative ring to a meadow by computing the group inverse
    of every element.

    For each x the unique y with x*x*y = x and y*y*x = y becomes inv(x);
    candidates are collected exhaustively so uniqueness is verified, not
    assumed.  Raises NoInverseError if some element has no candidate (the
    ring is not expandable), AmbiguousInverseError if uniqueness ever fails
    (impossible for a genuine commutative ring), and ValueError if the input
    does not satisfy the eight ring axioms.
    """
    report = check_axioms(ring, RING_AXIOM_NAMES)
    if not report.all_pass:
        raise ValueError(
            f"input is not a commutative ring; failing axioms: {', '.join(report.failed)}"
        )
    inv = np.zeros(ring.order, dtype=np.int64)
    for x in range(ring.order):
        candidates = inverse_candidates(ring, x)
        if not candidates:
            raise NoInverseError(x)
        if len(candidates) > 1:
            raise AmbiguousInverseError(x, candidates)
        inv[x] = candidates[0]
    return FiniteStructure(
        order=ring.order,
        zero=ring.zero,
        one=ring.one,
        add=ring.add,
        mul=ring.mul,
        neg=ring.neg,
        inv=inv,
        labels=ring.labels,
    )


def find_irreducible(p: int, k: int) -> PolynomialModP:
    """The canonical (least) monic irreducible polynomial of degree k over F_p.

    Candidates x^k + c_{k-1} x^{k-1} + ... + c_0 are ordered by the base-p
    value of the digit string (c_0, ..., c_{k-1}), c_0 least significant, and
    the first irreducible one is returned.  Existence is guaranteed for every
    prime p and k >= 1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"degree {k} must be positive")
    for m in range(p**k):
        candidate = PolynomialModP.from_index(p, m + p**k)
        if is_irreducible(candidate):
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class GaloisFieldSpec:
    """Defining data of GF(p^k): the prime, the degree, and a monic
    irreducible modulus of that degree."""

    p: int
    k: int
    modulus: PolynomialModP

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError(f"degree {self.k} must be positive")
        if self.modulus.p != self.p:
            raise ValueError(
                f"modulus is over F_{self.modulus.p}, expected F_{self.p}"
            )
        if not (self.modulus.is_monic and self.modulus.degree == self.k):
            raise ValueError(f"modulus {self.modulus} is not monic of degree {self.k}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus} is reducible")

    @classmethod
    def canonical(cls, p: int, k: int) -> "GaloisFieldSpec":
        return cls(p, k, find_irreducible(p, k))

    @property
    def order(self) -> int:
        return self.p**self.k


def make_gf(p: int, k: int = 1, modulus: Optional[PolynomialModP] = None) -> FiniteStructure:
    """The zero-totalized Galois field GF(p^k) as an explicit structure.

    Elements are the polynomials of degree < k over F_p, encoded by base-p
    digits: element index = sum(coeff_i * p**i).  Multiplication is modulo
    the canonical irreducible polynomial (or ``modulus`` if given); nonzero
    inverses come from the extended Euclidean algorithm, and inv(0) = 0.
    """
    spec = GaloisFieldSpec(p, k, modulus if modulus is not None else find_irreducible(p, k))
    q = spec.order
    polys = [PolynomialModP.from_index(p, i) for i in range(q)]

    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    neg = np.zeros(q, dtype=np.int64)
    inv = np.zeros(q, dtype=np.int64)
    for i, a in enumerate(polys):
        neg[i] = (-a).to_index()
        if not a.is_zero:
            inv[i] = poly_inverse_mod(a, spec.modulus).to_index()
        for j, b in enumerate(polys):
            add[i, j] = (a + b).to_index()
            mul[i, j] = ((a * b) % spec.modulus).to_index()

    if k == 1:
        labels = tuple(str(i) for i in range(q))
    else:
        labels = tuple(poly.to_string("a") for poly in polys)
    return FiniteStructure(
        order=q, zero=0, one=1, add=add, mul=mul, neg=neg, inv=inv, labels=labels
    )


def product_encode(digits: Sequence[int], orders: Sequence[int]) -> int:
    """Mixed-radix encoding of a tuple of factor indices; leftmost factor is
    most significant."""
    if len(digits) != len(orders):
        raise ValueError(f"{len(digits)} digits for {len(orders)} factors")
    out = 0
    for d, o in zip(digits, orders):
        if not 0 <= d < o:
            raise ValueError(f"digit {d} out of range 0..{o - 1}")
        out = out * o + d
    return out


def product_decode(index: int, orders: Sequence[int]) -> tuple[int, ...]:
    """Inverse of ``product_encode``."""
    digits = [0] * len(orders)
    for i in range(len(orders) - 1, -1, -1):
        index, digits[i] = divmod(index, orders[i])
    if index:
        raise ValueError("index out of range for the given factor orders")
    return tuple(digits)


def direct_product(factors: Sequence[FiniteStructure]) -> FiniteStructure:
    """Componentwise direct product of meadows.

    Element (x_1, ..., x_m) is encoded by ``product_encode``; the empty
    product is the one-element meadow.  Every factor must itself be a meadow
    (checked; the product of meadows is then a meadow as well).
    """
    for i, f in enumerate(factors):
        defects = validate_structure(f)
        if defects:
            raise ValueError(f"factor {i} is invalid: {'; '.join(defects)}")
        if not is_meadow(f):
            raise ValueError(f"factor {i} is not a meadow")

    orders = [f.order for f in factors]
    n = 1
    for o in orders:
        n *= o

    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    neg = np.zeros(n, dtype=np.int64)
    inv = np.zeros(n, dtype=np.int64)
    tuples = [product_decode(i, orders) for i in range(n)]
    for i, xs in enumerate(tuples):
        neg[i] = product_encode([int(f.neg[x]) for f, x in zip(factors, xs)], orders)
        inv[i] = product_encode([int(f.inv[x]) for f, x in zip(factors, xs)], orders)
        for j, ys in enumerate(tuples):
            add[i, j] = product_encode(
                [int(f.add[x, y]) for f, x, y in zip(factors, xs, ys)], orders
            )
            mul[i, j] = product_encode(
                [int(f.mul[x, y]) for f, x, y in zip(factors, xs, ys)], orders
            )

    labels: Optional[tuple[str, ...]]
    if factors and all(f.labels is not None for f in factors):
        labels = tuple(
            "(" + ",".join(f.labels[x] for f, x in zip(factors, xs)) + ")"
            for xs in tuples
        )
    else:
        labels = None

    return FiniteStructure(
        order=n,
        zero=product_encode([f.zero for f in factors], orders),
        one=product_encode([f.one for f in factors], orders),
        add=add,
        mul=mul,
        neg=neg,
        inv=inv,
        labels=labels,
    )
