"""Diagonal flips and the standard spherical form.

Two adjacent triangles form a quadrilateral; flipping exchanges its shared
edge for the opposite diagonal.  Any two triangulations on the same vertex
count are connected by flips, and every triangulation reaches the standard
form: two poles adjacent to everything, the rest a path of degree-4 vertices
capped by two degree-3 ends.
"""

from pmfg import (
    canonical_code,
    count_cliques,
    degree_sequence,
    diagonal_flip,
    legal_flips,
    normalize_to_standard,
    random_triangulation,
    standard_form,
)

emb = random_triangulation(9, seed=77)
print(f"random 9-vertex triangulation, degrees {degree_sequence(emb)}")
print(f"legal flips available: {len(legal_flips(emb))} of {emb.e} edges")

move = legal_flips(emb)[0]
flipped = diagonal_flip(emb, move)
print(f"flip {move.shared_edge} -> {move.replacement}: "
      f"degrees now {degree_sequence(flipped)}")
back = diagonal_flip(flipped, type(move)(move.replacement))
print(f"flipping the replacement restores the embedding: {back == emb}")

normalized, trace = normalize_to_standard(emb)
print(f"\nnormalized in {len(trace)} flips; degrees {degree_sequence(normalized)}")
print(f"canonical code matches standard_form(9): "
      f"{canonical_code(normalized) == canonical_code(standard_form(9))}")
print(f"clique counts hit the maxima: {count_cliques(normalized).counts} "
      f"== ({3 * 9 - 8}, {9 - 3})")

print("\nflip trace:")
for i, step in enumerate(trace, 1):
    print(f"  {i:2d}. remove {step.shared_edge}")
