"""Galois fields GF(p^k) as zero-totalized fields.

Elements are polynomials of degree < k over F_p, indexed by their base-p
digit strings; arithmetic is modulo the first irreducible polynomial of
degree k (in digit order).  Inversion comes from the extended Euclidean
algorithm, with 0^-1 = 0 making it total.
"""

from meadows import find_irreducible, make_gf
from meadows.cli import run_command

for p, k in [(2, 2), (2, 3), (3, 2)]:
    modulus = find_irreducible(p, k)
    print(f"GF({p**k}) = F_{p}[x] / ({modulus.to_string('x')})")
    f = make_gf(p, k)
    for x in range(f.order):
        inv = int(f.inv[x])
        print(f"  {f.label(x):>6}: inverse {f.label(inv)}")
    print()

print("full tables for GF(4):")
run_command(["gf", "2", "2", "-o", "/tmp/gf4-demo.json"])
run_command(["table", "/tmp/gf4-demo.json"])
