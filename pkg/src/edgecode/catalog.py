"""The table of connected five-vertex graphs with their tabulated distances.

Each graph is stored with the vertex labels exactly as drawn in its table
cell.  The table lists 21 graphs: every connected graph on five vertices up
to isomorphism, each once.  Two distance formulas appear in the table:

    "C4"    (q-2)**2 * (q-1)**3   (graph contains a 4-cycle)
    "noC4"  (q-2) * (q-1)**4

The tag is what the table claims; it is not guaranteed to be the true
minimum distance (see ``verify.run_suite("table3", ...)``).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .hypergraph import Hypergraph

C4_TAG = "C4"
NO_C4_TAG = "noC4"

# (row, column, name, edges, tag); row 1 holds only K5, in column 3.
_TABLE = [
    (1, 3, "K5", [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)], C4_TAG),
    (2, 1, "C5", [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)], NO_C4_TAG),
    (2, 2, "", [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)], C4_TAG),
    (2, 3, "K2,3", [(1, 3), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)], C4_TAG),
    (2, 4, "", [(1, 2), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)], C4_TAG),
    (2, 5, "K5-e", [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)], C4_TAG),
    (3, 1, "K1,4", [(1, 2), (1, 3), (1, 4), (1, 5)], NO_C4_TAG),
    (3, 2, "K4+pendant", [(1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)], C4_TAG),
    (3, 3, "", [(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)], C4_TAG),
    (3, 4, "fork", [(1, 2), (1, 3), (1, 5), (4, 5)], NO_C4_TAG),
    (3, 5, "bowtie", [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)], NO_C4_TAG),
    (4, 1, "", [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)], C4_TAG),
    (4, 2, "triangle+2 pendants", [(1, 5), (2, 5), (3, 4), (3, 5), (4, 5)], NO_C4_TAG),
    (4, 3, "bull", [(1, 3), (2, 4), (3, 4), (3, 5), (4, 5)], NO_C4_TAG),
    (4, 4, "", [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)], C4_TAG),
    (4, 5, "", [(1, 5), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)], C4_TAG),
    (5, 1, "P5", [(1, 2), (2, 3), (3, 4), (4, 5)], NO_C4_TAG),
    (5, 2, "triangle+pendant path", [(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)], NO_C4_TAG),
    (5, 3, "", [(1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)], C4_TAG),
    (5, 4, "", [(1, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5)], C4_TAG),
    (5, 5, "banner", [(1, 3), (2, 3), (2, 5), (3, 4), (4, 5)], C4_TAG),
]


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    row: int
    column: int
    name: str
    graph: Hypergraph
    tag: str

    def tabulated_distance(self, q: int) -> int:
        if self.tag == C4_TAG:
            return (q - 2) ** 2 * (q - 1) ** 3
        return (q - 2) * (q - 1) ** 4


@functools.lru_cache(maxsize=None)
def five_vertex_catalog() -> tuple[CatalogEntry, ...]:
    out = []
    for k, (row, col, name, edges, tag) in enumerate(_TABLE, start=1):
        out.append(CatalogEntry(f"t3-{k:02d}", row, col, name, Hypergraph(5, tuple(edges)), tag))
    return tuple(out)
