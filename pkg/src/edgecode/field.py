"""Table-driven arithmetic in F_q for prime powers q <= 1024.

Elements are plain integers 0..q-1 ("codes").  For a prime field the code is
the residue.  For F_{p^m} the code of c_0 + c_1 x + ... + c_{m-1} x^{m-1} is
sum(c_i * p**i), i.e. the base-p digit string of the coefficient vector with
the constant term least significant.  Ordering elements by code gives a
canonical total order that never depends on the machine or the run.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from .errors import DivisionByZero, NotAPrimePower, Unsupported

MAX_ORDER = 1024

# Monic irreducible moduli, coefficients listed from the constant term up.
# Each entry is the irreducible of degree m whose lower coefficients have the
# smallest code.  Never edit an entry: it would silently change every
# generator matrix exported for that field.
MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 1, 0, 0, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (5, 4): (2, 0, 0, 0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (2, 0, 1),
    (17, 2): (3, 0, 1),
    (19, 2): (1, 0, 1),
    (23, 2): (1, 0, 1),
    (29, 2): (2, 0, 1),
    (31, 2): (1, 0, 1),
}


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p**m, or raise NotAPrimePower."""
    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotAPrimePower(f"{q} has at least two distinct prime factors")
    return p, m


def _polymulmod(a, b, modulus, p):
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # modulus is monic: x^m = -(lower terms)
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        if c:
            for i in range(m):
                prod[k - m + i] = (prod[k - m + i] - c * modulus[i]) % p
    return prod[:m]


@dataclass(frozen=True, eq=False, repr=False)
class FieldSpec:
    """An immutable finite field with precomputed lookup tables.

    Tables are numpy arrays indexed by element codes.  ``inv_table[0]`` and
    ``log_table[0]`` hold the sentinel 0 and -1 respectively; use ``inv`` for
    checked access.
    """

    q: int
    p: int
    m: int
    modulus: tuple[int, ...]
    generator: int
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)
    neg_table: np.ndarray = field(repr=False)
    inv_table: np.ndarray = field(repr=False)
    log_table: np.ndarray = field(repr=False)
    exp_table: np.ndarray = field(repr=False)
    digits: np.ndarray = field(repr=False)

    def __repr__(self):
        return f"FieldSpec(q={self.q})"

    def __reduce__(self):
        return build_field, (self.q,)

    def _check(self, *xs):
        for x in xs:
            if not 0 <= x < self.q:
                raise ValueError(f"{x} is not an element of F_{self.q}")

    # scalar operations --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.add_table[a, self.neg_table[b]])

    def neg(self, a: int) -> int:
        self._check(a)
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.q}")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 has no inverse")
            return 1 if e == 0 else 0
        k = (int(self.log_table[a]) * e) % (self.q - 1)
        return int(self.exp_table[k])

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_q (lands in the prime subfield)."""
        return n % self.p

    # element encoding ---------------------------------------------------

    def decode(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (constant term first) of element code ``a``."""
        self._check(a)
        return tuple(int(c) for c in self.digits[a])

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.m or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"{coeffs} is not a coefficient vector over F_{self.p}")
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def nonzero_elements(self) -> list[int]:
        return list(range(1, self.q))

    # vector helpers -----------------------------------------------------

    def vadd(self, a, b):
        return self.add_table[a, b]

    def vmul(self, a, b):
        return self.mul_table[a, b]

    def vsum(self, a, axis=None):
        """Field sum of array entries; addition is digit-wise mod p."""
        a = np.asarray(a)
        if self.m == 1:
            return np.asarray(a.astype(np.int64).sum(axis=axis) % self.p)
        d = self.digits[a].astype(np.int64)
        if axis is None:
            d = d.reshape(-1, self.m)
            axis = 0
        elif axis < 0:
            axis += a.ndim
        tot = d.sum(axis=axis) % self.p
        return np.asarray(tot @ self._powers)

    @functools.cached_property
    def _powers(self):
        return self.p ** np.arange(self.m, dtype=np.int64)

    def linear_combination(self, coeffs, rows):
        """sum_i coeffs[i] * rows[i] over F_q, for a 2-D array of codes."""
        rows = np.asarray(rows)
        acc = np.zeros(rows.shape[1:], dtype=rows.dtype)
        for c, row in zip(coeffs, rows):
            if c:
                acc = self.add_table[acc, self.mul_table[c, row]]
        return acc.astype(rows.dtype)

    def power_sum(self, e: int) -> int:
        """sum of x**e over the multiplicative group, by the character-sum rule."""
        if e % (self.q - 1):
            return 0
        return self.from_int(self.q - 1)


def _make_tables(p, m, modulus):
    q = p**m
    digits = np.array([[(c // p**i) % p for i in range(m)] for c in range(q)], dtype=np.int16)
    powers = p ** np.arange(m, dtype=np.int64)

    if m == 1:
        a = np.arange(q, dtype=np.int64)
        add = (a[:, None] + a[None, :]) % q
    else:
        add = ((digits[:, None, :] + digits[None, :, :]) % p).astype(np.int64) @ powers
    neg = ((-digits.astype(np.int64)) % p) @ powers

    # smallest primitive element, found by walking powers
    def mul(a, b):
        if m == 1:
            return (a * b) % p
        return int(np.dot(_polymulmod(digits[a].tolist(), digits[b].tolist(), modulus, p), powers))

    generator, exp = None, None
    for g in range(1, q):
        seq = [1]
        x = g
        while x != 1:
            seq.append(x)
            x = mul(x, g)
        if len(seq) == q - 1:
            generator, exp = g, seq
            break
    exp = np.array(exp, dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    log[exp] = np.arange(q - 1)

    la = log[1:]
    mul_t = np.zeros((q, q), dtype=np.int64)
    mul_t[1:, 1:] = exp[(la[:, None] + la[None, :]) % (q - 1)]
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = exp[(-la) % (q - 1)]

    def ro(a, dtype=np.uint16):
        a = np.ascontiguousarray(a, dtype=dtype)
        a.setflags(write=False)
        return a

    return dict(
        generator=generator,
        add_table=ro(add),
        mul_table=ro(mul_t),
        neg_table=ro(neg),
        inv_table=ro(inv),
        log_table=ro(log, np.int64),
        exp_table=ro(exp),
        digits=ro(digits, np.int16),
    )


@functools.lru_cache(maxsize=None)
def build_field(q: int) -> FieldSpec:
    """Construct F_q.  Results are cached; FieldSpec is immutable."""
    if q > MAX_ORDER:
        raise Unsupported(f"q={q} exceeds the supported maximum {MAX_ORDER}")
    p, m = prime_power(q)
    modulus = MODULI[(p, m)] if m > 1 else (0, 1)
    return FieldSpec(q=q, p=p, m=m, modulus=modulus, **_make_tables(p, m, modulus))


def supported_orders() -> list[int]:
    out = []
    for q in range(2, MAX_ORDER + 1):
        try:
            prime_power(q)
        except NotAPrimePower:
            continue
        out.append(q)
    return out
