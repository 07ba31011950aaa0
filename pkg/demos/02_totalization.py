"""Which Z/nZ carry a total inverse?

For each element the candidate inverses are the y with x*x*y = x and
y*y*x = y.  When every element has exactly one candidate the ring becomes
a meadow; the first element with none is reported otherwise.  The pattern
that emerges: success exactly at squarefree n.
"""

from meadows import NoInverseError, inverse_candidates, make_zmod_ring, totalize_inverse
from meadows.numtheory import is_squarefree

for n in range(1, 31):
    ring = make_zmod_ring(n)
    try:
        totalize_inverse(ring)
        verdict = "meadow"
    except NoInverseError as exc:
        verdict = f"stuck at element {exc.element}"
    marker = "squarefree" if is_squarefree(n) else "          "
    print(f"  n={n:<3} {marker}  {verdict}")

print()
print("candidate sets in Z/10Z (always singletons):")
ring = make_zmod_ring(10)
for x in range(10):
    print(f"  {x}: {inverse_candidates(ring, x)}")

print()
print("candidate sets in Z/12Z (2, 4, 6, ... have none):")
ring = make_zmod_ring(12)
for x in range(12):
    print(f"  {x}: {inverse_candidates(ring, x)}")
