"""Independent brute-force oracles.

Nothing here touches edgecode's lookup tables: field arithmetic is done on
coefficient lists with schoolbook multiplication, points come from
itertools.product, and polynomials are evaluated term by term.
"""

import itertools


class SlowField:
    """F_{p^m} on coefficient tuples; codes use the same base-p convention as edgecode."""

    def __init__(self, p, modulus):
        self.p = p
        self.modulus = tuple(modulus)  # constant term first, monic
        self.m = len(modulus) - 1
        self.q = p**self.m

    def vec(self, code):
        return [(code // self.p**i) % self.p for i in range(self.m)]

    def code(self, vec):
        return sum(c * self.p**i for i, c in enumerate(vec))

    def add(self, a, b):
        return self.code([(x + y) % self.p for x, y in zip(self.vec(a), self.vec(b))])

    def mul(self, a, b):
        va, vb = self.vec(a), self.vec(b)
        prod = [0] * (2 * self.m)
        for i, x in enumerate(va):
            for j, y in enumerate(vb):
                prod[i + j] += x * y
        for k in range(2 * self.m - 1, self.m - 1, -1):
            c = prod[k] % self.p
            prod[k] = 0
            for i in range(self.m):
                prod[k - self.m + i] -= c * self.modulus[i]
        return self.code([c % self.p for c in prod[: self.m]])

    def from_int(self, n):
        return n % self.p


def prime_field(p):
    return SlowField(p, (0, 1))


F3 = prime_field(3)
F4 = SlowField(2, (1, 1, 1))
F5 = prime_field(5)


def torus(F, s):
    return list(itertools.product(range(1, F.q), repeat=s))


def eval_terms(F, terms, point):
    """terms: list of (coefficient code, tuple of 1-based variables)."""
    total = 0
    for c, mono in terms:
        v = c
        for j in mono:
            v = F.mul(v, point[j - 1])
        total = F.add(total, v)
    return total


def zeros(F, s, terms):
    return sum(eval_terms(F, terms, P) == 0 for P in torus(F, s))


def eval_product(F, factors, point):
    """factors: list of lists of (coefficient int, variable or None)."""
    v = 1
    for fac in factors:
        acc = 0
        for c, var in fac:
            x = F.from_int(c)
            if var is not None:
                x = F.mul(x, point[var - 1])
            acc = F.add(acc, x)
        v = F.mul(v, acc)
    return v


def product_zeros(F, s, factors):
    return sum(eval_product(F, factors, P) == 0 for P in torus(F, s))


def all_codewords(F, s, edges):
    """Yield (lambda, codeword weight) for every message, the slow way."""
    pts = torus(F, s)
    for lam in itertools.product(range(F.q), repeat=len(edges)):
        terms = [(c, e) for c, e in zip(lam, edges) if c]
        w = sum(eval_terms(F, terms, P) != 0 for P in pts)
        yield lam, w


def min_distance(F, s, edges):
    return min(w for lam, w in all_codewords(F, s, edges) if any(lam) and w)


def weight_set(F, s, edges):
    return sorted({w for lam, w in all_codewords(F, s, edges) if w})


def gram_entry(F, s, e1, e2):
    tot = 0
    for P in torus(F, s):
        tot = F.add(tot, F.mul(eval_terms(F, [(1, e1)], P), eval_terms(F, [(1, e2)], P)))
    return tot


def rank(F, rows):
    rows = [list(r) for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    neg = {a: next(b for b in range(F.q) if F.add(a, b) == 0) for a in range(F.q)}
    inv = {a: next(b for b in range(1, F.q) if F.mul(a, b) == 1) for a in range(1, F.q)}
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        k = inv[rows[r][c]]
        rows[r] = [F.mul(k, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = neg[rows[i][c]]
                rows[i] = [F.add(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        r += 1
    return r
