"""Decomposition into Galois fields and the signature invariant."""

from __future__ import annotations

import numpy as np
import pytest

from meadows import (
    Signature,
    are_isomorphic,
    decompose,
    direct_product,
    factor_by_idempotent,
    is_meadow,
    is_minimal_meadow,
    make_gf,
    make_zmod_ring,
    prime_submeadow,
    signature_of,
    totalize_inverse,
)


def z10():
    return totalize_inverse(make_zmod_ring(10))


class TestSignature:
    def test_of_pairs_sorts(self):
        sig = Signature.of_pairs([(5, 1), (2, 1)])
        assert sig.entries == ((2, 1), (5, 1))

    def test_order(self):
        assert Signature.of_pairs([(2, 2), (3, 1)]).order == 12
        assert Signature.of_pairs([]).order == 1

    def test_squarefree(self):
        assert Signature.of_pairs([(2, 1), (5, 1)]).is_squarefree
        assert not Signature.of_pairs([(2, 2)]).is_squarefree
        assert not Signature.of_pairs([(2, 1), (2, 1)]).is_squarefree

    def test_str(self):
        assert str(Signature.of_pairs([(2, 1), (5, 1)])) == "GF(2) x GF(5)"
        assert str(Signature.of_pairs([(2, 2)])) == "GF(4)"
        assert str(Signature.of_pairs([])) == "1"

    def test_rejects_bad_entries(self):
        with pytest.raises(ValueError):
            Signature.of_pairs([(4, 1)])
        with pytest.raises(ValueError):
            Signature.of_pairs([(2, 0)])


class TestFactorByIdempotent:
    def test_z10_factor_carriers(self):
        m = z10()
        f5, emb5 = factor_by_idempotent(m, 5)
        assert emb5 == (0, 5)
        assert f5.order == 2
        f6, emb6 = factor_by_idempotent(m, 6)
        assert emb6 == (0, 2, 4, 6, 8)
        assert f6.order == 5

    def test_factor_identity_is_e(self):
        m = z10()
        f6, emb6 = factor_by_idempotent(m, 6)
        assert emb6[f6.one] == 6

    def test_factor_is_meadow(self):
        m = z10()
        for e in (1, 5, 6):
            f, _ = factor_by_idempotent(m, e)
            assert is_meadow(f)

    def test_rejects_non_idempotent(self):
        with pytest.raises(ValueError):
            factor_by_idempotent(z10(), 2)
        with pytest.raises(ValueError):
            factor_by_idempotent(z10(), 0)


class TestDecompose:
    def test_z10(self):
        dec = decompose(z10())
        assert dec.minimal == (5, 6)
        assert [f.order for f in dec.factors] == [2, 5]
        assert dec.signature == Signature.of_pairs([(2, 1), (5, 1)])

    def test_h_is_bijection_z10(self):
        dec = decompose(z10())
        images = set(dec.h_forward)
        assert len(images) == 10
        for x in range(10):
            assert dec.h_inverse[dec.h_forward[x]] == x

    def test_h_is_homomorphism_z10(self):
        m = z10()
        dec = decompose(m)
        h = dec.h_forward
        for x in range(10):
            for y in range(10):
                sx, sy = h[x], h[y]
                sum_img = tuple(
                    int(f.add[a, b]) for f, a, b in zip(dec.factors, sx, sy)
                )
                assert h[int(m.add[x, y])] == sum_img
                prod_img = tuple(
                    int(f.mul[a, b]) for f, a, b in zip(dec.factors, sx, sy)
                )
                assert h[int(m.mul[x, y])] == prod_img
        # constants and unary operations
        assert h[m.zero] == tuple(f.zero for f in dec.factors)
        assert h[m.one] == tuple(f.one for f in dec.factors)
        for x in range(10):
            assert h[int(m.inv[x])] == tuple(
                int(f.inv[c]) for f, c in zip(dec.factors, h[x])
            )

    def test_field_decomposes_to_itself(self):
        gf9 = make_gf(3, 2)
        dec = decompose(gf9)
        assert len(dec.factors) == 1
        assert dec.signature.entries == ((3, 2),)

    def test_trivial_meadow(self):
        dec = decompose(direct_product([]))
        assert dec.factors == ()
        assert dec.signature.entries == ()

    def test_product_recovers_signature(self):
        prod = direct_product([make_gf(2, 2), make_gf(3), make_gf(2)])
        assert signature_of(prod).entries == ((2, 1), (2, 2), (3, 1))

    def test_rejects_non_meadow(self):
        with pytest.raises(ValueError):
            decompose(make_zmod_ring(4))


class TestIsomorphism:
    def test_gf4_vs_gf2xgf2(self):
        gf4 = make_gf(2, 2)
        klein = direct_product([make_gf(2), make_gf(2)])
        assert gf4.order == klein.order == 4
        assert signature_of(gf4) != signature_of(klein)
        assert not are_isomorphic(gf4, klein)

    def test_z10_isomorphic_to_gf2xgf5(self):
        assert are_isomorphic(z10(), direct_product([make_gf(2), make_gf(5)]))

    def test_reflexive(self):
        m = z10()
        assert are_isomorphic(m, m)


class TestPrimeSubmeadow:
    def test_z10_is_its_own_prime_submeadow(self):
        sub, emb = prime_submeadow(z10())
        assert sub.order == 10
        assert emb == tuple(range(10))

    def test_gf4_prime_submeadow_is_gf2(self):
        sub, emb = prime_submeadow(make_gf(2, 2))
        assert sub.order == 2
        assert emb == (0, 1)
        assert signature_of(sub).entries == ((2, 1),)

    def test_gf9_prime_submeadow_is_gf3(self):
        sub, _ = prime_submeadow(make_gf(3, 2))
        assert sub.order == 3

    def test_submeadow_is_meadow(self):
        sub, _ = prime_submeadow(direct_product([make_gf(2, 2), make_gf(3)]))
        assert is_meadow(sub)
        # closure of {0,1} hits GF(2) x GF(3) inside GF(4) x GF(3)
        assert sub.order == 6


class TestIsMinimal:
    def test_squarefree_zmod_minimal(self):
        for n in (2, 3, 5, 6, 10, 15, 30):
            assert is_minimal_meadow(totalize_inverse(make_zmod_ring(n)))

    def test_prime_power_fields_not_minimal(self):
        assert not is_minimal_meadow(make_gf(2, 2))
        assert not is_minimal_meadow(make_gf(3, 3))

    def test_repeated_prime_not_minimal(self):
        assert not is_minimal_meadow(direct_product([make_gf(2), make_gf(2)]))

    def test_trivial_is_minimal(self):
        assert is_minimal_meadow(direct_product([]))
