"""Build a small structure and check the ten defining equations.

Z/10Z with the right inverse table satisfies all of them; the same ring
with the identity map as "inverse" fails Ril, and the checker names the
least element where it breaks.
"""

from meadows import AXIOM_NAMES, check_axioms, make_zmod_ring, totalize_inverse

ring = make_zmod_ring(10)
meadow = totalize_inverse(ring)

print("Z/10Z, inverse totalized")
print("  inv:", list(meadow.inv))

report = check_axioms(meadow)
for name in AXIOM_NAMES:
    print(f"  {name:<14} {'pass' if report.results[name] else 'FAIL'}")
print(f"  meadow: {report.all_pass}")

print()
print("same ring, identity map pretending to be the inverse")
report = check_axioms(ring)  # make_zmod_ring leaves inv as the identity
for name in report.failed:
    # x=2 is the least counterexample: 2*(2*2) = 8 != 2 mod 10
    print(f"  {name} fails at {report.witnesses[name]}")
