"""
Graceful labelings, exactly
===========================

A labeling is graceful when the vertex labels are distinct values from
{0..m} and the m edge differences are all distinct.  The enumerator walks
the whole search space with incremental pruning; the canonical mode keeps
one representative per symmetry orbit.
"""

from graceful_game import (
    FamilySpec,
    build_family,
    complement,
    enumerate_graceful,
    is_alpha,
    is_graceful,
)

k4 = build_family(FamilySpec("complete", (4,)))
f = (5, 6, 0, 2)
print("K4 with labels", f, "is graceful:", is_graceful(k4, f))
print("its complement", complement(f, k4.m), "is graceful too:",
      is_graceful(k4, complement(f, k4.m)))

# K4 has exactly two labelings up to symmetry (complements are not merged).
print("\nK4 canonical labelings:", sorted(enumerate_graceful(k4, "up_to_automorphism")))

# Cycles are graceful exactly when n = 0,3 (mod 4); C5 and C6 have none.
for n in range(3, 9):
    count = len(enumerate_graceful(build_family(FamilySpec("cycle", (n,)))))
    print(f"C{n}: {count} graceful labelings")

# Caterpillars carry an order-respecting labeling: a threshold splits
# every edge's endpoint labels.
cat = build_family(FamilySpec("caterpillar", (1, 2)))
witness = next(f for f in sorted(enumerate_graceful(cat)) if is_alpha(cat, f))
print("\ncat(1,2) threshold-split labeling:", witness)
