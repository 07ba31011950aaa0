"""Every finite meadow is a product of Galois fields.

The minimal idempotents cut the meadow into factors e*M, each a field,
and m |-> (e1*m, ..., ek*m) is an isomorphism onto their product.  The
multiset of factor orders — the signature — decides isomorphism, so two
meadows of the same size need not be isomorphic.
"""

from meadows import (
    are_isomorphic,
    decompose,
    direct_product,
    idempotents,
    make_gf,
    make_zmod_ring,
    minimal_idempotents,
    signature_of,
    totalize_inverse,
)

m = totalize_inverse(make_zmod_ring(30))
print("Z/30Z")
print("  idempotents:        ", idempotents(m))
print("  minimal idempotents:", minimal_idempotents(m))

dec = decompose(m)
print("  factor orders:      ", [f.order for f in dec.factors])
print("  signature:          ", dec.signature)
print("  h(7) =", dec.h_forward[7], " h(29) =", dec.h_forward[29])
print("  h is a bijection:", len(set(dec.h_forward)) == m.order)

print()
print("order 4 both ways:")
gf4 = make_gf(2, 2)
klein = direct_product([make_gf(2), make_gf(2)])
print("  signature of GF(4):       ", signature_of(gf4))
print("  signature of GF(2)xGF(2): ", signature_of(klein))
print("  isomorphic:", are_isomorphic(gf4, klein))

print()
print("Z/10Z against the product of its fields:")
z10 = totalize_inverse(make_zmod_ring(10))
rebuilt = direct_product([make_gf(2), make_gf(5)])
print("  isomorphic:", are_isomorphic(z10, rebuilt))
