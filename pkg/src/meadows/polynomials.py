"""Polynomial arithmetic over prime fields F_p.

Polynomials are coefficient tuples, low degree first, with no trailing
zeros; the zero polynomial is the empty tuple.  Degrees and moduli stay
small here (field orders of at most a few hundred), so irreducibility is
decided by trial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

from meadows.numtheory import is_prime

__all__ = ["PolynomialModP", "poly_egcd", "poly_inverse_mod", "is_irreducible"]


@dataclass(frozen=True)
class PolynomialModP:
    """A polynomial over F_p: ``coeffs[i]`` is the coefficient of x^i."""

    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise ValueError(f"coefficients {self.coeffs} not reduced mod {self.p}")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError(f"trailing zero coefficient in {self.coeffs}")

    @classmethod
    def from_coeffs(cls, p: int, coeffs: Iterable[int]) -> "PolynomialModP":
        """Build from arbitrary integer coefficients, reducing mod p and trimming."""
        reduced = [c % p for c in coeffs]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        return cls(p, tuple(reduced))

    @classmethod
    def zero(cls, p: int) -> "PolynomialModP":
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> "PolynomialModP":
        return cls(p, (1,))

    @classmethod
    def x(cls, p: int) -> "PolynomialModP":
        return cls(p, (0, 1))

    @classmethod
    def constant(cls, p: int, c: int) -> "PolynomialModP":
        return cls.from_coeffs(p, [c])

    @classmethod
    def from_index(cls, p: int, index: int) -> "PolynomialModP":
        """Decode the base-p digit encoding: index = sum(coeffs[i] * p**i)."""
        if index < 0:
            raise ValueError(f"index {index} must be nonnegative")
        digits = []
        while index:
            index, d = divmod(index, p)
            digits.append(d)
        return cls(p, tuple(digits))

    def to_index(self) -> int:
        """Base-p digit encoding of the coefficient vector."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * self.p + c
        return out

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) == -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check_same_field(self, other: "PolynomialModP") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "PolynomialModP") -> "PolynomialModP":
        self._check_same_field(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return PolynomialModP.from_coeffs(
            self.p, [self.coeff(i) + other.coeff(i) for i in range(m)]
        )

    def __neg__(self) -> "PolynomialModP":
        return PolynomialModP.from_coeffs(self.p, [-c for c in self.coeffs])

    def __sub__(self, other: "PolynomialModP") -> "PolynomialModP":
        return self + (-other)

    def __mul__(self, other: "PolynomialModP") -> "PolynomialModP":
        self._check_same_field(other)
        if self.is_zero or other.is_zero:
            return PolynomialModP.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolynomialModP.from_coeffs(self.p, out)

    def scale(self, c: int) -> "PolynomialModP":
        return PolynomialModP.from_coeffs(self.p, [c * a for a in self.coeffs])

    def __divmod__(self, other: "PolynomialModP") -> tuple["PolynomialModP", "PolynomialModP"]:
        self._check_same_field(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        lead_inv = pow(other.coeffs[-1], -1, p)
        rem = list(self.coeffs)
        deg_d = other.degree
        quot = [0] * max(len(rem) - deg_d, 0)
        for i in range(len(rem) - 1, deg_d - 1, -1):
            if rem[i] == 0:
                continue
            q = rem[i] * lead_inv % p
            quot[i - deg_d] = q
            for j, b in enumerate(other.coeffs):
                rem[i - deg_d + j] = (rem[i - deg_d + j] - q * b) % p
        return (
            PolynomialModP.from_coeffs(p, quot),
            PolynomialModP.from_coeffs(p, rem),
        )

    def __mod__(self, other: "PolynomialModP") -> "PolynomialModP":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "PolynomialModP") -> "PolynomialModP":
        return divmod(self, other)[0]

    def to_string(self, symbol: str = "x") -> str:
        """Compact rendering, highest degree first, e.g. ``a^2+2a+1``."""
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = symbol if i == 1 else f"{symbol}^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms)

    def __str__(self) -> str:
        return self.to_string()


def poly_egcd(
    a: PolynomialModP, b: PolynomialModP
) -> tuple[PolynomialModP, PolynomialModP, PolynomialModP]:
    """Extended Euclidean algorithm: returns (g, s, t) with s*a + t*b = g.

    g is monic unless it is zero.
    """
    a._check_same_field(b)
    p = a.p
    r0, r1 = a, b
    s0, s1 = PolynomialModP.one(p), PolynomialModP.zero(p)
    t0, t1 = PolynomialModP.zero(p), PolynomialModP.one(p)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.is_zero and not r0.is_monic:
        c = pow(r0.coeffs[-1], -1, p)
        r0, s0, t0 = r0.scale(c), s0.scale(c), t0.scale(c)
    return r0, s0, t0


def poly_inverse_mod(a: PolynomialModP, modulus: PolynomialModP) -> PolynomialModP:
    """Inverse of a modulo ``modulus`` via the extended Euclidean algorithm."""
    g, s, _ = poly_egcd(a, modulus)
    if g.degree != 0:
        raise ValueError(f"{a} is not invertible modulo {modulus}")
    return s % modulus


def _monic_polynomials(p: int, degree: int) -> Iterable[PolynomialModP]:
    # Ordered by the base-p digit string of the non-leading coefficients,
    # least significant digit = constant term.
    for m in range(p**degree):
        yield PolynomialModP.from_index(p, m + p**degree)


def is_irreducible(f: PolynomialModP) -> bool:
    """Irreducibility over F_p by trial division.

    A polynomial of degree d >= 1 is reducible iff it has a monic factor of
    degree 1..d//2; constants and the zero polynomial are not irreducible.
    """
    d = f.degree
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for g in _monic_polynomials(f.p, k):
            if (f % g).is_zero:
                return False
    return True
