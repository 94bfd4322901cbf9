"""Exact code parameters by enumeration, and closed-form zero counts."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import BadParams, SearchTooLarge, ZeroPolynomial
from .torus import EdgeCode, EdgePolynomial

DEFAULT_MAX_MESSAGES = 2**32
MAX_MESSAGES_ENV = "EDGECODE_MAX_MESSAGES"


def default_max_messages() -> int:
    env = os.environ.get(MAX_MESSAGES_ENV)
    return int(env) if env else DEFAULT_MAX_MESSAGES


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    witness: tuple[int, ...]
    search_space: int
    elapsed: float


@dataclass(frozen=True)
class WeightDistribution:
    counts: dict[int, int]
    length: int
    dimension: int

    @property
    def minimum_distance(self) -> int | None:
        return min((w for w, a in self.counts.items() if w > 0 and a), default=None)

    @property
    def weights(self) -> list[int]:
        """Sorted positive weights that occur."""
        return sorted(w for w, a in self.counts.items() if w > 0 and a)

    def total(self) -> int:
        return sum(self.counts.values())


def message_ranges(q: int, n: int, projective: bool) -> list[tuple[int, int]]:
    """Integer ranges of messages to scan, in ascending message order.

    With projective collapse, one representative per scalar class: the
    messages whose leading nonzero digit is 1, i.e. [q**j, 2 q**j).
    """
    if projective:
        return [(q**j, 2 * q**j) for j in range(n)]
    return [(1, q**n)]


def search_size(q: int, n: int, projective: bool) -> int:
    return (q**n - 1) // (q - 1) if projective else q**n - 1


def _split(ranges, pieces):
    total = sum(b - a for a, b in ranges)
    size = max(1, -(-total // pieces))
    out = []
    for a, b in ranges:
        while a < b:
            out.append((a, min(b, a + size)))
            a += size
    return out


def digits_of(msg: int, q: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(msg % q)
        msg //= q
    return tuple(reversed(out))


def scan(code: EdgeCode, *, projective: bool = True, max_messages: int | None = None,
         workers: int = 1, backend: str | None = None):
    """Enumerate codewords; returns (best weight, best message, histogram, count).

    Work is split into contiguous message ranges.  The histogram merge is a
    sum and the minimum keeps the smallest message among ties, so the result
    does not depend on ``workers``.
    """
    q, n, N = code.q, code.G.shape[0], code.length
    limit = default_max_messages() if max_messages is None else max_messages
    count = search_size(q, n, projective)
    if count > limit:
        raise SearchTooLarge("message enumeration", count, limit)
    F = code.field
    ranges = message_ranges(q, n, projective)
    chunks = _split(ranges, max(1, workers) * 4) if workers > 1 else ranges

    def run(rng):
        hist = np.zeros(N + 1, dtype=np.int64)
        w, m = _kernels.scan_messages(code.G, F.add_table, F.mul_table, q, rng[0], rng[1], hist, backend)
        return w, m, hist

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, chunks))
    else:
        results = [run(r) for r in chunks]
    hist = np.zeros(N + 1, dtype=np.int64)
    best = (N + 1, -1)
    for w, m, h in results:
        hist += h
        if m >= 0 and (w, m) < best:
            best = (w, m)
    return best[0], best[1], hist, count


def minimum_distance_exhaustive(code: EdgeCode, *, projective: bool = True,
                                max_messages: int | None = None, workers: int = 1,
                                backend: str | None = None) -> DistanceResult:
    t0 = time.perf_counter()
    w, m, _, count = scan(code, projective=projective, max_messages=max_messages,
                          workers=workers, backend=backend)
    if m < 0:
        raise BadParams("code has no nonzero codeword")
    return DistanceResult(w, digits_of(m, code.q, code.G.shape[0]), count, time.perf_counter() - t0)


def weight_distribution(code: EdgeCode, *, projective: bool = True,
                        max_messages: int | None = None, workers: int = 1,
                        backend: str | None = None) -> WeightDistribution:
    """Number of codewords of each weight, zero codeword included.

    Each projective representative stands for q-1 codewords.  Counting is by
    message, so it equals the codeword count when the rows are independent
    (always the case for q >= 3).
    """
    _, _, hist, _ = scan(code, projective=projective, max_messages=max_messages,
                         workers=workers, backend=backend)
    if projective:
        hist = hist * (code.q - 1)
    hist[0] += 1
    counts = {int(w): int(a) for w, a in enumerate(hist) if a}
    return WeightDistribution(counts, code.length, code.dimension)


# closed forms -------------------------------------------------------------


def squarefree_zero_bound(s: int, d: int, q: int) -> int:
    """(q-1)^s - (q-2)^d (q-1)^(s-d): most zeros of a squarefree f of degree <= d."""
    if not 0 <= d <= s or q < 3:
        raise BadParams(f"need 0 <= d <= s and q >= 3, got s={s}, d={d}, q={q}")
    return (q - 1) ** s - (q - 2) ** d * (q - 1) ** (s - d)


def zeros_disjoint_binomials(s: int, d: int, q: int) -> int:
    """Torus zeros of a product of d variable-disjoint factors t_k - t_l or t_k - 1."""
    return squarefree_zero_bound(s, d, q)


def _alternating(s, r, q):
    return sum((-1) ** (i - 1) * (q - 1) ** (s - i) for i in range(1, r))


def zeros_linear_form(r: int, s: int, q: int) -> int:
    """Torus zeros of a_1 t_i1 + ... + a_r t_ir with every a_k nonzero."""
    if not 2 <= r <= s or q < 3:
        raise BadParams(f"need 2 <= r <= s and q >= 3, got r={r}, s={s}, q={q}")
    return _alternating(s, r, q)


def zeros_tree_poly(r: int, s: int, q: int) -> int:
    """Torus zeros of an edge polynomial of a forest with r nonzero terms."""
    if r < 1 or s < r + 1 or q < 3:
        raise BadParams(f"need 1 <= r <= s-1 and q >= 3, got r={r}, s={s}, q={q}")
    return _alternating(s, r, q)


def grevlex_key(edge, s: int):
    """Sort key so that max() picks the graded reverse lex leading monomial
    with t_1 > t_2 > ... > t_s."""
    a = [0] * s
    for j in edge:
        a[j - 1] = 1
    # higher degree wins; on ties the smaller exponent in the last differing
    # variable wins, so compare the negated reversed exponent vector
    return (len(edge), tuple(-x for x in reversed(a)))


def leading_monomial(f: EdgePolynomial) -> tuple[int, ...]:
    support = f.support
    if not support:
        raise ZeroPolynomial("the zero polynomial has no leading monomial")
    return max(support, key=lambda e: grevlex_key(e, f.hypergraph.s))


def footprint_bound(f: EdgePolynomial, q: int) -> int:
    """Upper bound on torus zeros from the leading monomial t^a of f.

    The torus ideal has initial ideal (t_1^(q-1), ..., t_s^(q-1)), giving
    (q-1)^s - prod_k ((q-1) - a_k).
    """
    if q < 3:
        raise BadParams("q must be at least 3")
    lead = set(leading_monomial(f))
    s = f.hypergraph.s
    rest = 1
    for k in range(1, s + 1):
        rest *= (q - 1) - (1 if k in lead else 0)
    return (q - 1) ** s - rest
