"""Hot loops for exhaustive codeword enumeration.

Two interchangeable implementations of ``scan_messages``:

* ``scan_messages_loop``: an explicit loop that updates codewords
  incrementally (only the trailing coefficient usually changes).  It is
  compiled with numba when available.
* ``scan_messages_numpy``: vectorised batches, pure numpy.

Set ``EDGECODE_DISABLE_NUMBA=1`` to force the numpy path.  Both return
identical results; tests and ``benchmarks/bench_kernels.py`` compare them.

A message is an integer in [0, q**n); its base-q digits, most significant
first, are the coefficients (lambda_1, ..., lambda_n).
"""

from __future__ import annotations

import os

import numpy as np

DISABLE_ENV = "EDGECODE_DISABLE_NUMBA"


def _numba_requested() -> bool:
    return os.environ.get(DISABLE_ENV, "").strip().lower() not in ("1", "true", "yes", "on")


def _scan_loop(G, add, mul, q, lo, hi, hist):
    n, N = G.shape
    digits = np.zeros(n, np.int64)
    x = lo
    for k in range(n - 1, -1, -1):
        digits[k] = x % q
        x //= q
    # partial[k] holds sum_{i<k} lambda_i * G_i
    partial = np.zeros((n + 1, N), np.uint16)
    start = 0
    best_w = N + 1
    best_msg = -1
    msg = lo
    while msg < hi:
        for i in range(start, n):
            c = digits[i]
            src = partial[i]
            dst = partial[i + 1]
            if c == 0:
                for j in range(N):
                    dst[j] = src[j]
            else:
                row = G[i]
                mrow = mul[c]
                for j in range(N):
                    dst[j] = add[src[j], mrow[row[j]]]
        last = partial[n]
        w = 0
        for j in range(N):
            if last[j] != 0:
                w += 1
        hist[w] += 1
        if w > 0 and w < best_w:
            best_w = w
            best_msg = msg
        msg += 1
        k = n - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] < q:
                break
            digits[k] = 0
            k -= 1
        start = k if k > 0 else 0
    return best_w, best_msg


def scan_messages_numpy(G, add, mul, q, lo, hi, hist, batch_cells=1 << 22):
    n, N = G.shape
    best_w, best_msg = N + 1, -1
    place = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    step = max(1, batch_cells // max(N, 1))
    for a in range(lo, hi, step):
        b = min(hi, a + step)
        msgs = np.arange(a, b, dtype=np.int64)
        digits = (msgs[:, None] // place[None, :]) % q
        acc = np.zeros((b - a, N), dtype=np.uint16)
        for i in range(n):
            acc = add[acc, mul[digits[:, i, None], G[i][None, :]]]
        w = np.count_nonzero(acc, axis=1)
        hist += np.bincount(w, minlength=N + 1)
        pos = w > 0
        if pos.any():
            wm = int(w[pos].min())
            if wm < best_w:
                best_w = wm
                best_msg = int(msgs[np.flatnonzero(w == wm)[0]])
    return best_w, best_msg


scan_messages_loop = _scan_loop
HAVE_NUMBA = False
try:
    if _numba_requested():
        from numba import njit

        scan_messages_loop = njit(nogil=True, cache=True)(_scan_loop)
        HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    pass

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def scan_messages(G, add, mul, q, lo, hi, hist, backend=None):
    """Enumerate messages lo..hi-1, accumulating weights into ``hist``.

    Returns (smallest positive weight, first message attaining it); the
    weight is len+1 and the message -1 if no positive weight occurred.
    """
    backend = backend or BACKEND
    G = np.ascontiguousarray(G, dtype=np.uint16)
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend unavailable")
        w, m = scan_messages_loop(G, add, mul, np.int64(q), np.int64(lo), np.int64(hi), hist)
        return int(w), int(m)
    if backend == "python":
        return _scan_loop(G, add, mul, q, lo, hi, hist)
    return scan_messages_numpy(G, add, mul, q, lo, hi, hist)
