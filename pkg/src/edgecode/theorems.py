"""Closed-form distance and weight predictions, and extremal witness polynomials."""

from __future__ import annotations

import enum
import itertools

from .errors import BadParams, EmbeddingMissing, NotCovered
from .field import FieldSpec
from .hypergraph import Branch, Hypergraph, contains_subclutter, interval_hypergraph, partite_path_clutter
from .torus import EdgePolynomial


class Theorem(enum.Enum):
    CLUTTER_A = "ClutterA"
    INTERVAL_B = "IntervalB"
    TREE_WEIGHTS = "TreeWeights"
    SELF_ORTH = "SelfOrth"
    ASTER_DUALITY = "AsterDuality"
    TABLE1 = "Table1"
    TABLE2 = "Table2"
    TABLE3 = "Table3"
    FOOTPRINT_BOUND = "FootprintBound"


def _check_q(q):
    if q < 3:
        raise BadParams(f"closed forms assume q >= 3, got q={q}")


def predict_clutter(s: int, d: int, q: int, branch: Branch) -> int:
    """Minimum distance of a d-uniform clutter code on s vertices."""
    _check_q(q)
    if branch is Branch.BRANCH1 and 1 <= d and 2 * d <= s:
        return (q - 2) ** d * (q - 1) ** (s - d)
    if branch is Branch.BRANCH2 and s < 2 * d and d < s:
        return (q - 2) ** (s - d) * (q - 1) ** d
    raise NotCovered(f"no branch covers s={s}, d={d} with {branch.value}")


def predict_interval(s: int, d1: int, d2: int, q: int) -> int:
    """Minimum distance when every edge of size d2..d1 is present."""
    _check_q(q)
    if not 1 <= d2 <= d1 <= s:
        raise BadParams(f"need 1 <= d2 <= d1 <= s, got s={s}, d1={d1}, d2={d2}")
    if d1 + d2 <= s:
        return (q - 2) ** d1 * (q - 1) ** (s - d1)
    return (q - 2) ** (s - d2) * (q - 1) ** d2


def predict_tree_weights(s: int, q: int, t_max: int | None = None) -> list[int]:
    """The t-th smallest Hamming weight of a tree's edge code, t = 1..t_max.

    Weight t is (q-1)^s minus the zeros of a 2t-term forest polynomial.
    """
    _check_q(q)
    top = (s - 1) // 2
    if t_max is None:
        t_max = top
    if not 1 <= t_max <= top:
        raise BadParams(f"need 1 <= t <= (s-1)/2, got t={t_max}, s={s}")
    out = []
    for t in range(1, t_max + 1):
        zeros = sum((-1) ** (i - 1) * (q - 1) ** (s - i) for i in range(1, 2 * t))
        out.append((q - 1) ** s - zeros)
    return out


# witness polynomials -------------------------------------------------------


def expand_product(factors) -> dict[frozenset, int]:
    """Expand a product of sparse linear factors into integer coefficients.

    Each factor is a list of (variable or None, coefficient); None stands for
    the constant 1.  Factors must use pairwise disjoint variables, so every
    product term is squarefree.
    """
    poly: dict[frozenset, int] = {frozenset(): 1}
    for factor in factors:
        nxt: dict[frozenset, int] = {}
        for mono, c in poly.items():
            for var, a in factor:
                key = mono if var is None else mono | {var}
                nxt[key] = nxt.get(key, 0) + c * a
        poly = {k: v for k, v in nxt.items() if v}
    return poly


def _to_edge_poly(spec: FieldSpec, h: Hypergraph, poly: dict) -> EdgePolynomial:
    coeffs = [0] * len(h.edges)
    index = {e: i for i, e in enumerate(h.edges)}
    for mono, c in poly.items():
        e = tuple(sorted(mono))
        if e not in index:
            raise EmbeddingMissing(f"monomial {e} is not an edge of the hypergraph")
        coeffs[index[e]] = spec.from_int(c)
    return EdgePolynomial(h, tuple(coeffs))


def witness_clutter(spec: FieldSpec, h: Hypergraph, d: int, labels) -> EdgePolynomial:
    """(t_a1 - t_b1)...(t_ad - t_bd) written over the edges of h.

    Requires the partite-path clutter on ``labels`` to be contained in h.
    """
    c = partite_path_clutter(d, tuple(labels), h.s)
    if not contains_subclutter(h, c):
        raise EmbeddingMissing(f"partite-path clutter on {tuple(labels)} is not contained in h")
    factors = [[(labels[2 * r], 1), (labels[2 * r + 1], -1)] for r in range(d)]
    return _to_edge_poly(spec, h, expand_product(factors))


def interval_witness_factors(s: int, d1: int, d2: int):
    """Factors of the extremal polynomial for the interval hypergraph.

    d1 + d2 <= s: (t_1 - t_2)...(t_{2d2-1} - t_{2d2}) (t_{2d2+1} - 1)...(t_{d1+d2} - 1),
    d1 binomials in all.  d1 + d2 > s: s - d1 pair binomials, d1 - d2 binomials
    t_k - 1, times the remaining d1 + d2 - s variables.
    """
    if not 1 <= d2 <= d1 <= s:
        raise BadParams(f"need 1 <= d2 <= d1 <= s, got s={s}, d1={d1}, d2={d2}")
    if d1 + d2 <= s:
        pairs, singles, extra = d2, d1 - d2, 0
    else:
        pairs, singles, extra = s - d1, d1 - d2, d1 + d2 - s
    factors = [[(2 * i + 1, 1), (2 * i + 2, -1)] for i in range(pairs)]
    k = 2 * pairs
    factors += [[(k + i + 1, 1), (None, -1)] for i in range(singles)]
    k += singles
    factors += [[(k + i + 1, 1)] for i in range(extra)]
    return factors


def witness_interval(spec: FieldSpec, s: int, d1: int, d2: int, h: Hypergraph | None = None) -> EdgePolynomial:
    if h is None:
        h = interval_hypergraph(s, d1, d2)
    return _to_edge_poly(spec, h, expand_product(interval_witness_factors(s, d1, d2)))


def binomial_count(s: int, d1: int, d2: int) -> int:
    """Number of binomial factors in the interval witness."""
    return d1 if d1 + d2 <= s else s - d2


def coefficient_choices(q: int, r: int):
    """Every assignment of nonzero field codes to r terms."""
    return itertools.product(range(1, q), repeat=r)
