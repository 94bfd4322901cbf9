"""Hypergraphs, clutters and the special families used to build edge codes."""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass

from .errors import (
    BadParams,
    DuplicateEdge,
    DuplicateLabels,
    FullEdge,
    InvalidVertex,
    NotUniform,
    ParseError,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """Vertices 1..s and a duplicate-free set of nonempty edges.

    Edges are stored sorted internally and the edge list is sorted
    lexicographically, so two hypergraphs with the same edge set compare equal
    and produce identical generator matrices.
    """

    s: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if not isinstance(self.s, int) or self.s < 1:
            raise BadParams(f"vertex count must be a positive integer, got {self.s!r}")
        canon = []
        for e in self.edges:
            e = tuple(sorted(int(v) for v in e))
            if not e:
                raise BadParams("edges must be nonempty")
            if len(set(e)) != len(e):
                raise DuplicateLabels(f"edge {e} repeats a vertex")
            for v in e:
                if not 1 <= v <= self.s:
                    raise InvalidVertex(f"vertex {v} outside 1..{self.s}")
            canon.append(e)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise DuplicateEdge(f"edge {a} appears twice")
        object.__setattr__(self, "edges", tuple(canon))

    def __len__(self):
        return len(self.edges)

    def index(self, edge) -> int:
        return self.edges.index(tuple(sorted(edge)))

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(range(1, self.s + 1))

    def degree_of(self, vertex: int) -> int:
        return sum(vertex in e for e in self.edges)


@dataclass(frozen=True)
class ClutterCertificate:
    is_clutter: bool
    witness: tuple[int, int] | None = None
    uniform_degree: int | None = None


def classify(h: Hypergraph) -> ClutterCertificate:
    """Decide whether ``h`` is a clutter and whether it is uniform.

    The witness is a pair of 1-based edge positions (i, j) with e_i a proper
    subset of e_j; the lexicographically first such pair is reported.
    """
    sizes = {len(e) for e in h.edges}
    uniform = sizes.pop() if len(sizes) == 1 else None
    sets = [frozenset(e) for e in h.edges]
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if i != j and a < b:
                return ClutterCertificate(False, (i + 1, j + 1), uniform)
    return ClutterCertificate(True, None, uniform)


def edge_removed(h: Hypergraph) -> Hypergraph:
    """Replace every edge by its complement in the vertex set."""
    full = h.vertex_set
    comps = []
    for e in h.edges:
        c = full.difference(e)
        if not c:
            raise FullEdge(f"edge {e} is the whole vertex set")
        comps.append(tuple(sorted(c)))
    return Hypergraph(h.s, tuple(comps))


def complement_pairing(h: Hypergraph) -> list[int]:
    """perm[i] = position in edge_removed(h) of the complement of h.edges[i]."""
    star = edge_removed(h)
    full = h.vertex_set
    return [star.index(full.difference(e)) for e in h.edges]


def _parts(labels):
    labels = list(labels)
    if len(labels) % 2:
        raise BadParams("partite labels come in pairs")
    if len(set(labels)) != len(labels):
        raise DuplicateLabels(f"labels {labels} are not distinct")
    return [(labels[2 * r], labels[2 * r + 1]) for r in range(len(labels) // 2)]


def partite_path_clutter(d: int, labels, s: int | None = None) -> Hypergraph:
    """The 2**d edges picking one label from each of the d pairs of ``labels``.

    Part r is (labels[2r], labels[2r+1]).  These edges are exactly the
    monomial support of (t_a1 - t_b1)(t_a2 - t_b2)...(t_ad - t_bd).
    """
    if d < 1 or len(labels) != 2 * d:
        raise BadParams(f"need d >= 1 and exactly 2d labels, got d={d}, {len(labels)} labels")
    parts = _parts(labels)
    if s is None:
        s = max(labels)
    return Hypergraph(s, tuple(itertools.product(*parts)))


def contains_subclutter(h: Hypergraph, c: Hypergraph) -> bool:
    have = set(h.edges)
    return all(e in have for e in c.edges)


def pair_partitions(vertices):
    """All ways of splitting an even-sized vertex list into unordered pairs."""
    vertices = list(vertices)
    if not vertices:
        yield []
        return
    first = vertices[0]
    for k in range(1, len(vertices)):
        rest = vertices[1:k] + vertices[k + 1 :]
        for tail in pair_partitions(rest):
            yield [(first, vertices[k])] + tail


def find_partite_embedding(h: Hypergraph, d: int) -> tuple[int, ...] | None:
    """Labels (a1, b1, ..., ad, bd) such that h contains the partite-path clutter.

    Parts are unordered and so are the two labels inside a part, so it is
    enough to try every set of 2d vertices with every pairing of them.  The
    first hit in that enumeration order is returned.
    """
    if 2 * d > h.s:
        return None
    have = set(h.edges)
    for chosen in itertools.combinations(range(1, h.s + 1), 2 * d):
        for pairing in pair_partitions(chosen):
            if all(tuple(sorted(e)) in have for e in itertools.product(*pairing)):
                return tuple(v for pair in pairing for v in pair)
    return None


class Branch(enum.Enum):
    BRANCH1 = "Branch1"
    BRANCH2 = "Branch2"
    NOT_COVERED = "NotCovered"


@dataclass(frozen=True)
class BranchResult:
    branch: Branch
    degree: int
    labels: tuple[int, ...] | None = None


def clutter_branch(c: Hypergraph) -> BranchResult:
    """Which case of the uniform-clutter distance formula applies to ``c``.

    Branch1 needs d <= s/2 and an embedded partite-path clutter of order d in
    c.  Branch2 needs s/2 < d < s and an embedded clutter of order s-d in the
    edge-removed hypergraph; ``labels`` then refer to that hypergraph.
    """
    cert = classify(c)
    if cert.uniform_degree is None:
        raise NotUniform("clutter_branch needs a uniform hypergraph")
    d, s = cert.uniform_degree, c.s
    if 2 * d <= s:
        labels = find_partite_embedding(c, d)
        if labels is not None:
            return BranchResult(Branch.BRANCH1, d, labels)
    elif d < s:
        labels = find_partite_embedding(edge_removed(c), s - d)
        if labels is not None:
            return BranchResult(Branch.BRANCH2, d, labels)
    return BranchResult(Branch.NOT_COVERED, d, None)


# families ----------------------------------------------------------------


def path_graph(s: int) -> Hypergraph:
    if s < 2:
        raise BadParams("a path needs at least two vertices")
    return Hypergraph(s, tuple((i, i + 1) for i in range(1, s)))


def cycle_graph(s: int) -> Hypergraph:
    if s < 3:
        raise BadParams("a cycle needs at least three vertices")
    return Hypergraph(s, tuple((i, i % s + 1) for i in range(1, s + 1)))


def complete_graph(s: int) -> Hypergraph:
    if s < 2:
        raise BadParams("a complete graph needs at least two vertices")
    return Hypergraph(s, tuple(itertools.combinations(range(1, s + 1), 2)))


def star(s: int) -> Hypergraph:
    """Star with centre 1 and leaves 2..s."""
    if s < 2:
        raise BadParams("a star needs at least two vertices")
    return Hypergraph(s, tuple((1, j) for j in range(2, s + 1)))


def interval_hypergraph(s: int, d1: int, d2: int) -> Hypergraph:
    """Every subset of {1..s} whose size lies in [d2, d1]."""
    if not 1 <= d2 <= d1 <= s:
        raise BadParams(f"need 1 <= d2 <= d1 <= s, got s={s}, d1={d1}, d2={d2}")
    edges = [e for r in range(d2, d1 + 1) for e in itertools.combinations(range(1, s + 1), r)]
    return Hypergraph(s, tuple(edges))


def interval_edge_count(s: int, d1: int, d2: int) -> int:
    return sum(math.comb(s, r) for r in range(d2, d1 + 1))


def all_subsets(s: int) -> Hypergraph:
    """Every nonempty subset of {1..s}: the span is all squarefree polynomials
    without constant term."""
    return interval_hypergraph(s, s, 1)


FAMILIES = ("path", "cycle", "complete", "star", "interval", "partite", "catalog")


def family(name: str, n: int | None = None, d: int | None = None, d1: int | None = None,
           d2: int | None = None) -> Hypergraph:
    """Build a named family; ``n`` is the vertex count (or catalog index)."""

    def need(value, flag):
        if value is None:
            raise BadParams(f"family {name!r} needs {flag}")
        return value

    if name == "path":
        return path_graph(need(n, "--n"))
    if name == "cycle":
        return cycle_graph(need(n, "--n"))
    if name == "complete":
        return complete_graph(need(n, "--n"))
    if name == "star":
        return star(need(n, "--n"))
    if name == "interval":
        return interval_hypergraph(need(n, "--n"), need(d1, "--d1"), need(d2, "--d2"))
    if name == "partite":
        d = need(d, "--d")
        s = n if n is not None else 2 * d
        return partite_path_clutter(d, tuple(range(1, 2 * d + 1)), s)
    if name == "catalog":
        from .catalog import five_vertex_catalog

        cat = five_vertex_catalog()
        k = need(n, "--n")
        if not 1 <= k <= len(cat):
            raise BadParams(f"catalog index must be in 1..{len(cat)}")
        return cat[k - 1].graph
    raise BadParams(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


# JSON --------------------------------------------------------------------


def parse_hypergraph(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "$")
    unknown = set(data) - {"vertices", "edges"}
    if unknown:
        raise ParseError(f"unexpected keys {sorted(unknown)}", "$")
    s = data.get("vertices")
    if not isinstance(s, int) or isinstance(s, bool) or s < 1:
        raise ParseError("must be a positive integer", "vertices")
    raw = data.get("edges")
    if not isinstance(raw, list):
        raise ParseError("must be a list of edges", "edges")
    seen = {}
    edges = []
    for i, e in enumerate(raw):
        locus = f"edges[{i}]"
        if not isinstance(e, list) or not e:
            raise ParseError("must be a nonempty list of vertex labels", locus)
        for v in e:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"label {v!r} is not an integer", locus)
            if not 1 <= v <= s:
                raise InvalidVertex(f"{locus}: vertex {v} outside 1..{s}")
        if len(set(e)) != len(e):
            raise ParseError("repeats a vertex", locus)
        key = tuple(sorted(e))
        if key in seen:
            raise ParseError(f"duplicates edges[{seen[key]}] after canonicalization", locus)
        seen[key] = i
        edges.append(key)
    return Hypergraph(s, tuple(edges))


def serialize_hypergraph(h: Hypergraph) -> str:
    return json.dumps({"vertices": h.s, "edges": [list(e) for e in h.edges]})
