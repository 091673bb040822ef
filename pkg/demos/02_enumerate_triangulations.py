"""Enumerate every maximal planar graph on up to nine vertices.

Starting from the tetrahedron, each of the three wheel-insertion operations
deletes the chords of a pure chord-cycle (length 3, 4 or 5) and joins a new
hub to its boundary.  Deduplicating by canonical code after every level
yields exactly one representative per isomorphism class.
"""

from collections import Counter

from pmfg import count_cliques, degree_census, degree_sequence, generate_all

for n in range(4, 10):
    records = generate_all(n)
    censuses = Counter(
        count_cliques(rec.embedding).counts for rec in records.values()
    )
    spread = ", ".join(
        f"{c3}/{c4}x{mult}" for (c3, c4), mult in sorted(censuses.items())
    )
    print(f"n={n}: {len(records):3d} classes   (C3/C4 x classes: {spread})")

print()
print("degree multisets vs realizable triangulations at n=8:")
census = degree_census(8)
print(f"  candidates with entries in [3,7] summing to 36: {census.total_combinations}")
print(f"  realizable by some triangulation:               {census.realizable}")
print(f"  realized by two or more distinct classes:       {census.ambiguous}")
for seq in census.ambiguous_sequences:
    print(f"    ambiguous: {list(seq)}")

print()
print("one representative per class at n=7, with its construction trace:")
for rec in generate_all(7).values():
    ops = "".join(op.kind[-1] for op in rec.trace)
    print(
        f"  degrees {degree_sequence(rec.embedding)}  "
        f"cliques {count_cliques(rec.embedding).counts}  ops phi[{ops}]"
    )
