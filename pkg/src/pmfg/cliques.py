"""Census of 3-cliques and 4-cliques of a sphere triangulation.

Every 3-clique of a triangulation either bounds a face (a surface triangle)
or has vertices strictly inside and strictly outside it (a separating
3-cycle).  Kuratowski's theorem caps clique size in a planar graph at 4, so
the census of sizes 3 and 4 is complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .embedding import PlanarEmbedding
from .errors import CeilingError, InputError, StructuralError

BRUTE_FORCE_CEILING = 16


@dataclass(frozen=True)
class CliqueCensus:
    c3_total: int
    c3_surface: int
    c3_separating: int
    c4_total: int
    surface_triangles: tuple[tuple[int, int, int], ...]
    separating_triangles: tuple[tuple[int, int, int], ...]
    four_cliques: tuple[tuple[int, int, int, int], ...]

    @property
    def counts(self) -> tuple[int, int]:
        return (self.c3_total, self.c4_total)

    def to_json_dict(self, n: int | None = None) -> dict:
        doc: dict = {
            "c3_total": self.c3_total,
            "c3_surface": self.c3_surface,
            "c3_separating": self.c3_separating,
            "c4_total": self.c4_total,
            "surface_triangles": [list(t) for t in self.surface_triangles],
            "separating_triangles": [list(t) for t in self.separating_triangles],
            "four_cliques": [list(q) for q in self.four_cliques],
        }
        if n is not None:
            doc["bounds"] = {
                "c3_min": 2 * n - 4,
                "c3_max": 3 * n - 8,
                "c4_max": n - 3,
                "c3_max_attained": self.c3_total == 3 * n - 8,
                "c4_max_attained": self.c4_total == n - 3,
            }
        return doc


class StandardFormCensus(NamedTuple):
    """Clique counts of the standard spherical triangulation on n vertices.

    ``c3`` decomposes as surface + enclosing - overlap: the 2n - 4 faces,
    plus the n - 3 pole triangles that enclose smaller triangles, minus the
    one pole triangle that is itself a face and would be counted twice.
    """

    c3: int
    c4: int
    surface: int
    enclosing: int
    overlap: int


def count_cliques(emb: PlanarEmbedding) -> CliqueCensus:
    """Enumerate and classify all 3- and 4-cliques of a triangulation."""
    if emb.n < 4:
        raise InputError("clique census needs n >= 4")
    if not emb.is_triangulation():
        raise StructuralError("clique census requires a triangulation")
    masks = emb.neighbor_masks
    triangles: list[tuple[int, int, int]] = []
    for u, v in emb.edges():
        w_mask = masks[u] & masks[v] & ~((1 << (v + 1)) - 1)
        while w_mask:
            low = w_mask & -w_mask
            triangles.append((u, v, low.bit_length() - 1))
            w_mask ^= low
    four: list[tuple[int, int, int, int]] = []
    for a, b, c in triangles:
        x_mask = masks[a] & masks[b] & masks[c] & ~((1 << (c + 1)) - 1)
        while x_mask:
            low = x_mask & -x_mask
            four.append((a, b, c, low.bit_length() - 1))
            x_mask ^= low
    face_sets = emb.face_sets
    surface = tuple(t for t in triangles if frozenset(t) in face_sets)
    separating = tuple(t for t in triangles if frozenset(t) not in face_sets)
    return CliqueCensus(
        c3_total=len(triangles),
        c3_surface=len(surface),
        c3_separating=len(separating),
        c4_total=len(four),
        surface_triangles=surface,
        separating_triangles=separating,
        four_cliques=tuple(four),
    )


def standard_form_expected(n: int) -> StandardFormCensus:
    """Clique counts the standard form attains: the maxima 3n - 8 and n - 3."""
    if n < 4:
        raise InputError("standard form is defined for n >= 4")
    return StandardFormCensus(
        c3=3 * n - 8,
        c4=n - 3,
        surface=2 * n - 4,
        enclosing=n - 3,
        overlap=1,
    )


def brute_force_cliques(n: int, edges, *, ceiling: int = BRUTE_FORCE_CEILING) -> tuple[int, int]:
    """Count 3- and 4-cliques of an abstract graph by exhaustive subsets."""
    if n > ceiling:
        raise CeilingError(f"refusing brute-force census for n={n} > {ceiling}")
    adj = [[False] * n for _ in range(n)]
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise InputError(f"bad edge ({u}, {v})")
        adj[u][v] = adj[v][u] = True
    c3 = sum(
        1
        for a, b, c in combinations(range(n), 3)
        if adj[a][b] and adj[a][c] and adj[b][c]
    )
    c4 = sum(
        1
        for quad in combinations(range(n), 4)
        if all(adj[x][y] for x, y in combinations(quad, 2))
    )
    return (c3, c4)
