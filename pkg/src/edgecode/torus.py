"""Edge codes: evaluation of edge monomials on the affine torus (F_q^*)^s."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import BadParams, DegenerateField, LengthMismatch, TooLarge
from .field import FieldSpec
from .hypergraph import Hypergraph

DEFAULT_MAX_POINTS = 10**7
POINT_ORDER = "lex-canonical"


def torus_size(q: int, s: int) -> int:
    return (q - 1) ** s


def enumerate_torus(spec: FieldSpec, s: int, max_points: int = DEFAULT_MAX_POINTS) -> np.ndarray:
    """All points of (F_q^*)^s as an (N, s) array of element codes.

    Rows are in lexicographic order of codes with coordinate 1 most
    significant, so the order is a pure function of (q, s).
    """
    if s < 1:
        raise BadParams("s must be at least 1")
    n = torus_size(spec.q, s)
    if n > max_points:
        raise TooLarge(f"torus (F_{spec.q}^*)^{s}", n, max_points)
    nz = np.arange(1, spec.q, dtype=np.uint16)
    grids = np.meshgrid(*([nz] * s), indexing="ij")
    return np.stack([g.reshape(-1) for g in grids], axis=1)


@dataclass(frozen=True)
class EdgePolynomial:
    """f = sum_i coeffs[i] * prod_{j in e_i} t_j over the hypergraph's edges."""

    hypergraph: Hypergraph
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != len(self.hypergraph.edges):
            raise LengthMismatch(f"{len(coeffs)} coefficients for {len(self.hypergraph.edges)} edges")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_terms(cls, hypergraph: Hypergraph, terms: dict) -> "EdgePolynomial":
        """Build from {edge: coefficient}; edges missing from the dict get 0."""
        coeffs = [0] * len(hypergraph.edges)
        for e, c in terms.items():
            coeffs[hypergraph.index(e)] = c
        return cls(hypergraph, tuple(coeffs))

    @property
    def support(self) -> list[tuple[int, ...]]:
        return [e for e, c in zip(self.hypergraph.edges, self.coeffs) if c]

    @property
    def degree(self) -> int:
        """Largest edge size with a nonzero coefficient; -1 for the zero polynomial."""
        return max((len(e) for e in self.support), default=-1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def evaluate(spec: FieldSpec, f: EdgePolynomial, point) -> int:
    if len(point) != f.hypergraph.s:
        raise LengthMismatch(f"point has {len(point)} coordinates, expected {f.hypergraph.s}")
    total = 0
    for e, c in zip(f.hypergraph.edges, f.coeffs):
        if c:
            term = c
            for j in e:
                term = spec.mul(term, int(point[j - 1]))
            total = spec.add(total, term)
    return total


def monomial_rows(spec: FieldSpec, h: Hypergraph, points: np.ndarray) -> np.ndarray:
    """Row i = values of the edge monomial of e_i at every point (via discrete logs)."""
    logs = spec.log_table[points]
    dtype = np.uint8 if spec.q <= 256 else np.uint16
    out = np.empty((len(h.edges), len(points)), dtype=dtype)
    for i, e in enumerate(h.edges):
        k = logs[:, [j - 1 for j in e]].sum(axis=1) % (spec.q - 1)
        out[i] = spec.exp_table[k]
    return out


def rank(spec: FieldSpec, M) -> int:
    """Rank over F_q by Gaussian elimination on table lookups."""
    A = np.array(M, dtype=np.uint16)
    rows = A.shape[0]
    r = 0
    while r < rows:
        nz_cols = np.flatnonzero(A[r:].any(axis=0))
        if nz_cols.size == 0:
            break
        c = nz_cols[0]
        p = r + int(np.flatnonzero(A[r:, c])[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = spec.mul_table[spec.inv_table[A[r, c]], A[r]]
        for i in range(r + 1, rows):
            a = A[i, c]
            if a:
                A[i] = spec.add_table[A[i], spec.mul_table[spec.neg_table[a], A[r]]]
        r += 1
    return r


@dataclass(frozen=True, eq=False)
class EdgeCode:
    field: FieldSpec
    hypergraph: Hypergraph
    points: np.ndarray = field(repr=False)
    G: np.ndarray = field(repr=False)
    rank: int

    @property
    def length(self) -> int:
        return self.G.shape[1]

    @property
    def dimension(self) -> int:
        return self.rank

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def s(self) -> int:
        return self.hypergraph.s


def generator_matrix(h: Hypergraph, spec: FieldSpec, max_points: int = DEFAULT_MAX_POINTS) -> EdgeCode:
    if spec.q < 3:
        raise DegenerateField(f"edge codes need q >= 3, got q={spec.q}")
    if not h.edges:
        raise BadParams("hypergraph has no edges")
    points = enumerate_torus(spec, h.s, max_points)
    G = monomial_rows(spec, h, points)
    G.setflags(write=False)
    points.setflags(write=False)
    return EdgeCode(spec, h, points, G, rank(spec, G))


def _coeffs(code: EdgeCode, lam) -> np.ndarray:
    if isinstance(lam, EdgePolynomial):
        if lam.hypergraph != code.hypergraph:
            raise BadParams("polynomial belongs to a different hypergraph")
        lam = lam.coeffs
    lam = np.asarray(lam, dtype=np.int64).reshape(-1)
    if lam.shape[0] != code.G.shape[0]:
        raise LengthMismatch(f"{lam.shape[0]} coefficients for {code.G.shape[0]} rows")
    if (lam < 0).any() or (lam >= code.q).any():
        raise BadParams("coefficients must be element codes 0..q-1")
    return lam


def encode(code: EdgeCode, lam) -> np.ndarray:
    """Codeword lam . G."""
    lam = _coeffs(code, lam)
    return code.field.linear_combination(lam, code.G)


def weight(word) -> int:
    return int(np.count_nonzero(word))


def count_zeros(code: EdgeCode, f) -> int:
    """Number of torus points where f vanishes (f as EdgePolynomial or coefficients)."""
    return code.length - weight(encode(code, f))


def gram_matrix(code: EdgeCode) -> np.ndarray:
    """G G^T over F_q: entry (i, j) = sum over points of f_i(P) f_j(P)."""
    F = code.field
    n = code.G.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            v = int(F.vsum(F.mul_table[code.G[i], code.G[j]]))
            out[i, j] = out[j, i] = v
    return out


def gram_closed_form(spec: FieldSpec, h: Hypergraph) -> np.ndarray:
    """Gram entries from the product of one-variable character sums.

    sum_P prod_k P_k^(a_k + b_k) factors as prod_k sum_{x in F_q^*} x^(a_k + b_k).
    """
    n = len(h.edges)
    out = np.zeros((n, n), dtype=np.int64)
    sets = [set(e) for e in h.edges]
    for i in range(n):
        for j in range(n):
            v = 1
            for k in range(1, h.s + 1):
                v = spec.mul(v, spec.power_sum((k in sets[i]) + (k in sets[j])))
            out[i, j] = v
    return out


def is_self_orthogonal(code: EdgeCode) -> bool:
    return not gram_matrix(code).any()


# export --------------------------------------------------------------------


def to_csv(code: EdgeCode) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in code.G:
        w.writerow(row.tolist())
    return buf.getvalue()


def to_json(code: EdgeCode) -> str:
    return json.dumps(
        {
            "q": code.q,
            "s": code.s,
            "edges": [list(e) for e in code.hypergraph.edges],
            "point_order": POINT_ORDER,
            "matrix": code.G.tolist(),
        }
    )
