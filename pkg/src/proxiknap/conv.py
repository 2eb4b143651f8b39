"""Row maxima of totally monotone matrices and step-concave (max,+)-convolution.

Profit sequences are plain lists of ints indexed by total weight, with a
reserved very-negative sentinel (``NEG_INF``) marking unattainable weights.
The sentinel is an ordinary integer: ingestion bounds guarantee that no sum
of real profits can ever reach the sentinel's neighbourhood, so plain
addition is safe and ``v <= NEG_THRESHOLD`` cleanly recognizes fakes.
"""
from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

NEG_INF = -(1 << 62)
NEG_THRESHOLD = -(1 << 61)

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

    def njit(*a, **k):
        def deco(f):
            return f

        return deco


def smawk_row_maxima(
    row_count: int, col_count: int, entry: Callable[[int, int], int]
) -> list[int]:
    """Leftmost argmax column of each row of a totally monotone matrix.

    ``entry(i, j)`` must be O(1) and the implicit matrix totally monotone
    for maxima (leftmost argmax indices non-decreasing down the rows); this
    is the caller's contract.  Uses O(row_count + col_count) oracle calls.
    """
    if row_count <= 0:
        return []
    if col_count <= 0:
        raise ValueError("col_count must be positive")
    result = [0] * row_count
    _smawk(list(range(row_count)), list(range(col_count)), entry, result)
    return result


def _smawk(
    rows: list[int],
    cols: list[int],
    entry: Callable[[int, int], int],
    result: list[int],
) -> None:
    # REDUCE: prune columns that cannot hold any row maximum.
    stack: list[int] = []
    for c in cols:
        while stack:
            r = rows[len(stack) - 1]
            if entry(r, c) > entry(r, stack[-1]):
                stack.pop()
            else:
                break
        if len(stack) < len(rows):
            stack.append(c)
    cols = stack

    if len(rows) == 1:
        result[rows[0]] = cols[0]
        return

    # Recurse on odd rows, then interpolate the even ones.
    _smawk(rows[1::2], cols, entry, result)

    ci = 0
    for k in range(0, len(rows), 2):
        r = rows[k]
        hi = result[rows[k + 1]] if k + 1 < len(rows) else cols[-1]
        best_c = cols[ci]
        best_v = entry(r, best_c)
        while cols[ci] != hi:
            ci += 1
            v = entry(r, cols[ci])
            if v > best_v:
                best_v, best_c = v, cols[ci]
        result[r] = best_c


def step_profile(
    copies: Sequence[tuple[int, int]], w: int, cap: int
) -> list[int]:
    """Profit sequence of an equal-weight item group.

    ``copies`` are (profit, multiplicity) pairs, all of weight ``w``.  Entry
    i*w holds the total profit of the i most valuable copies; every other
    index is NEG_INF.  Length is min(cap, total group weight) + 1.
    """
    if w < 1:
        raise ValueError("weight must be >= 1")
    if cap < 0:
        raise ValueError("cap must be >= 0")
    prefix = concave_prefix(copies, cap // w)
    length = min(cap, (len(prefix) - 1) * w) + 1
    out = [NEG_INF] * length
    for i, p in enumerate(prefix):
        if i * w < length:
            out[i * w] = p
    return out


def concave_prefix(copies: Sequence[tuple[int, int]], max_copies: int) -> list[int]:
    """Prefix sums of the most valuable copies: S[c] = top-c profit total."""
    out = [0]
    total = 0
    for p, u in sorted(copies, key=lambda pu: -pu[0]):
        take = min(u, max_copies - (len(out) - 1))
        for _ in range(take):
            total += p
            out.append(total)
        if len(out) - 1 >= max_copies:
            break
    return out


def prefix_maxima(x: Sequence[int], extend_to: int | None = None) -> list[int]:
    """Running maxima of a profit sequence, optionally extended at the tail."""
    out = []
    best = NEG_INF
    for v in x:
        if v > best:
            best = v
        out.append(best)
    if extend_to is not None:
        while len(out) < extend_to + 1:
            out.append(best)
    return out


def prefix_argmaxima(x: Sequence[int], extend_to: int | None = None) -> tuple[list[int], list[int]]:
    """Running maxima plus the (leftmost) index achieving each one."""
    out, arg = [], []
    best, best_i = NEG_INF, 0
    for i, v in enumerate(x):
        if v > best:
            best, best_i = v, i
        out.append(best)
        arg.append(best_i)
    if extend_to is not None:
        while len(out) < extend_to + 1:
            out.append(best)
            arg.append(best_i)
    return out, arg


def concave_step_convolve(
    x: Sequence[int], s: Sequence[int], cap: int
) -> list[int]:
    """(max,+)-convolution of x with a step profile, truncated to cap+1.

    ``s`` must come from :func:`step_profile`: finite entries at multiples of
    a single weight, concave along that lattice.  NEG_INF absorbs.
    """
    w, prefix = _parse_step(s)
    out, _ = convolve_with_choices(list(x), prefix, w, cap)
    return out


def _parse_step(s: Sequence[int]) -> tuple[int, list[int]]:
    finite = [i for i, v in enumerate(s) if v > NEG_THRESHOLD]
    if not finite or finite[0] != 0:
        raise ValueError("step profile must have a finite entry at index 0")
    if len(finite) == 1:
        return 1, [s[0]]
    w = finite[1]
    if finite != list(range(0, w * len(finite), w)):
        raise ValueError("step profile support must be a single-weight lattice")
    return w, [s[i] for i in finite]


def convolve_with_choices(
    x: list[int], prefix: list[int], w: int, cap: int
) -> tuple[list[int], list[int]]:
    """Convolve x with the concave prefix-sum profile of one weight group.

    Returns (result, choice) where choice[i] is the number of weight-w copies
    used at output index i.  Dispatches to the jitted divide-and-conquer
    kernel when available, else to SMAWK over the implicit matrix.
    """
    m = len(prefix) - 1
    n_out = min(cap, (len(x) - 1) + m * w) + 1
    if m == 0:
        base = prefix[0]
        out = [
            v + base if v > NEG_THRESHOLD else NEG_INF for v in x[:n_out]
        ]
        out += [NEG_INF] * (n_out - len(out))
        return out, [0] * n_out
    if _HAVE_NUMBA:
        xa = np.asarray(x, dtype=np.int64)
        pa = np.asarray(prefix, dtype=np.int64)
        out_a, ch_a = _conv_kernel(xa, pa, w, n_out)
        return out_a.tolist(), ch_a.tolist()
    return _convolve_smawk_py(x, prefix, w, n_out)


def _convolve_smawk_py(
    x: list[int], prefix: list[int], w: int, n_out: int
) -> tuple[list[int], list[int]]:
    # The staircase boundary (copy counts outside [0, m]) is filled with a
    # steep linear extension of the prefix profile.  The extension keeps the
    # matrix concave in the copy-count direction (hence inverse Monge, hence
    # totally monotone) while staying far below any attainable entry, so the
    # post-filter below can discard boundary argmaxes safely.
    m = len(prefix) - 1
    if m == 0:
        base = prefix[0]
        out = [
            v + base if v > NEG_THRESHOLD else NEG_INF for v in x[:n_out]
        ]
        out += [NEG_INF] * (n_out - len(out))
        return out, [0] * n_out
    steep = 1 << 50
    lo_slope = (prefix[1] - prefix[0]) + steep
    hi_slope = (prefix[m] - prefix[m - 1]) - steep
    out = [NEG_INF] * n_out
    choice = [0] * n_out
    for r in range(min(w, n_out)):
        xr = x[r::w]
        n_rows = (n_out - 1 - r) // w + 1
        if not xr:
            continue

        def entry(q: int, j: int, xr=xr) -> int:
            c = q - j
            if c < 0:
                s = prefix[0] + c * lo_slope
            elif c > m:
                s = prefix[m] + (c - m) * hi_slope
            else:
                s = prefix[c]
            return xr[j] + s

        args = smawk_row_maxima(n_rows, min(n_rows, len(xr)), entry)
        for q, j in enumerate(args):
            c = q - j
            i = q * w + r
            if 0 <= c <= m and xr[j] > NEG_THRESHOLD:
                out[i] = xr[j] + prefix[c]
                choice[i] = c
    return out, choice


@njit(cache=True)
def _conv_kernel(x, prefix, w, n_out):  # pragma: no cover - exercised via wrapper
    NEG = -(1 << 62)
    THRESH = -(1 << 61)
    m = prefix.shape[0] - 1
    out = np.full(n_out, NEG, np.int64)
    choice = np.zeros(n_out, np.int64)
    stack = np.empty((256, 4), np.int64)
    for r in range(min(w, n_out)):
        n_rows = (n_out - 1 - r) // w + 1
        n_x = (x.shape[0] - 1 - r) // w + 1 if x.shape[0] > r else 0
        if n_x <= 0:
            continue
        # Divide and conquer over rows; argmax columns are monotone because
        # the implicit matrix entry xr[j] + prefix[q - j] is inverse Monge.
        top = 0
        stack[top, 0] = 0
        stack[top, 1] = n_rows - 1
        stack[top, 2] = 0
        stack[top, 3] = n_x - 1
        top += 1
        while top > 0:
            top -= 1
            qlo = stack[top, 0]
            qhi = stack[top, 1]
            jlo = stack[top, 2]
            jhi = stack[top, 3]
            if qlo > qhi:
                continue
            q = (qlo + qhi) >> 1
            lo = jlo if jlo > q - m else q - m
            if lo < 0:
                lo = 0
            hi = jhi if jhi < q else q
            best_j = -1
            best_v = NEG
            for j in range(lo, hi + 1):
                xv = x[j * w + r]
                if xv <= THRESH:
                    continue
                v = xv + prefix[q - j]
                if v > best_v:
                    best_v = v
                    best_j = j
            i = q * w + r
            if best_j >= 0:
                out[i] = best_v
                choice[i] = q - best_j
                split = best_j
            else:
                split = lo if lo <= hi else jlo
            if q - 1 >= qlo:
                stack[top, 0] = qlo
                stack[top, 1] = q - 1
                stack[top, 2] = jlo
                stack[top, 3] = split if best_j >= 0 else jhi
                top += 1
            if q + 1 <= qhi:
                stack[top, 0] = q + 1
                stack[top, 1] = qhi
                stack[top, 2] = split if best_j >= 0 else jlo
                stack[top, 3] = jhi
                top += 1
            if top > 250:  # pathological; cannot happen for log-depth splits
                top = 250
    return out, choice


def brute_force_maxplus(a: Sequence[int], b: Sequence[int], cap: int) -> list[int]:
    """Quadratic (max,+)-convolution; test oracle for the structured kernel."""
    n_out = min(cap, len(a) + len(b) - 2) + 1
    out = [NEG_INF] * n_out
    for i, av in enumerate(a):
        if av <= NEG_THRESHOLD:
            continue
        for j, bv in enumerate(b):
            if bv <= NEG_THRESHOLD or i + j >= n_out:
                continue
            v = av + bv
            if v > out[i + j]:
                out[i + j] = v
    return out
