"""Sumset computation over bit-vector sets, with an exact NTT backend.

Sets of attainable sums are stored as Python big-int bitmasks (bit s set
iff s is attainable).  Zero is always a member, matching the sumset
convention A+B = {a+b : a in A u {0}, b in B u {0}}.  Small convolutions
use shift-or; large ones a number-theoretic transform so results stay
exact (no floating-point FFT rounding).
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

NTT_MOD = 998244353
NTT_ROOT = 3
SHIFT_OR_LIMIT = 4096


class SumsetStats:
    """Byte counter for produced sumset masks (benchmark plumbing)."""

    __slots__ = ("sumset_bytes",)

    def __init__(self) -> None:
        self.sumset_bytes = 0

    def record(self, mask: int) -> None:
        self.sumset_bytes += (mask.bit_length() + 7) // 8


class AttainableSet:
    """Set of achievable subset sums on [0, cap]; 0 is always a member."""

    __slots__ = ("mask", "cap")

    def __init__(self, mask: int, cap: int) -> None:
        if cap < 0:
            raise ValueError("cap must be >= 0")
        self.cap = cap
        self.mask = (mask | 1) & ((1 << (cap + 1)) - 1)

    @classmethod
    def from_elements(cls, elements: Iterable[int], cap: int) -> "AttainableSet":
        mask = 1
        for e in elements:
            if e < 0:
                raise ValueError("elements must be non-negative")
            if e <= cap:
                mask |= 1 << e
        return cls(mask, cap)

    def elements(self) -> list[int]:
        out = []
        m = self.mask
        while m:
            lsb = m & -m
            out.append(lsb.bit_length() - 1)
            m ^= lsb
        return out

    @property
    def max_element(self) -> int:
        return self.mask.bit_length() - 1

    def truncated(self, cap: int) -> "AttainableSet":
        return AttainableSet(self.mask, min(cap, self.cap))

    def __contains__(self, s: int) -> bool:
        return 0 <= s <= self.cap and bool((self.mask >> s) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AttainableSet):
            return NotImplemented
        return self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.mask, self.cap))

    def __repr__(self) -> str:
        els = self.elements()
        body = ",".join(map(str, els[:12])) + ("..." if len(els) > 12 else "")
        return f"AttainableSet({{{body}}}, cap={self.cap})"


def pairwise_sumset(
    a: AttainableSet,
    b: AttainableSet,
    cap: int,
    stats: Optional[SumsetStats] = None,
) -> AttainableSet:
    """A+B truncated to [0, cap]."""
    mask = _conv_masks(a.mask, b.mask, cap)
    if stats is not None:
        stats.record(mask)
    return AttainableSet(mask, cap)


def multi_sumset(
    sets: Sequence[AttainableSet],
    cap: int,
    stats: Optional[SumsetStats] = None,
) -> AttainableSet:
    """S_1 + ... + S_l by balanced binary merging of comparable-cap sets."""
    if not sets:
        return AttainableSet(1, cap)
    pool = sorted(sets, key=lambda s: s.max_element)
    while len(pool) > 1:
        nxt = []
        for i in range(0, len(pool) - 1, 2):
            nxt.append(pairwise_sumset(pool[i], pool[i + 1], cap, stats))
        if len(pool) % 2:
            nxt.append(pool[-1].truncated(cap))
        pool = sorted(nxt, key=lambda s: s.max_element)
    return pool[0].truncated(cap)


def kary_membership(
    sets: Sequence[AttainableSet],
    k: int,
    t: int,
    stats: Optional[SumsetStats] = None,
) -> bool:
    """Decide t in S_0 + k*S_1 + ... + k^l * S_l.

    Residue filtering against k, exact scale-down, one sumset per level.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if t < 0:
        raise ValueError("t must be >= 0")
    if not sets:
        return t == 0
    mask = sets[0].mask & ((1 << (t + 1)) - 1)
    target = t
    for level in range(1, len(sets)):
        r0 = target % k
        filt = mask & _residue_pattern(r0, k, min(mask.bit_length() - 1, target))
        if filt == 0:
            return False
        scaled = _scale_down(filt, r0, k)
        target = (target - r0) // k
        nxt = _conv_masks(scaled, sets[level].mask, target)
        if nxt == 0:
            return False
        if stats is not None:
            stats.record(nxt)
        mask = nxt
    return bool((mask >> target) & 1)


def _residue_pattern(r0: int, k: int, limit: int) -> int:
    if limit < r0:
        return 0
    if k == 1:
        return (1 << (limit + 1)) - 1
    pat = 0
    for p in range(r0, limit + 1, k):
        pat |= 1 << p
    return pat


def _scale_down(mask: int, r0: int, k: int) -> int:
    # Every set bit is congruent to r0 mod k; the division is exact.
    out = 0
    m = mask
    while m:
        lsb = m & -m
        s = lsb.bit_length() - 1
        assert (s - r0) % k == 0
        out |= 1 << ((s - r0) // k)
        m ^= lsb
    return out


def _conv_masks(ma: int, mb: int, cap: int) -> int:
    """Boolean convolution of two bitmasks, truncated to cap bits."""
    full = (1 << (cap + 1)) - 1
    ma &= full
    mb &= full
    if ma == 0 or mb == 0:
        return 0
    top_a = ma.bit_length() - 1
    top_b = mb.bit_length() - 1
    if min(top_a, top_b) <= SHIFT_OR_LIMIT:
        small, big = (ma, mb) if ma.bit_count() <= mb.bit_count() else (mb, ma)
        out = 0
        m = small
        while m:
            lsb = m & -m
            out |= big << (lsb.bit_length() - 1)
            m ^= lsb
        return out & full
    return _conv_masks_ntt(ma, mb, cap)


def _conv_masks_ntt(ma: int, mb: int, cap: int) -> int:
    la = _mask_to_coeffs(ma)
    lb = _mask_to_coeffs(mb)
    size = 1
    need = len(la) + len(lb) - 1
    while size < need:
        size *= 2
    fa = la + [0] * (size - len(la))
    fb = lb + [0] * (size - len(lb))
    _ntt(fa, False)
    _ntt(fb, False)
    for i in range(size):
        fa[i] = fa[i] * fb[i] % NTT_MOD
    _ntt(fa, True)
    out = 0
    for i in range(min(need, cap + 1)):
        if fa[i]:
            out |= 1 << i
    return out


def _mask_to_coeffs(mask: int) -> list[int]:
    out = [0] * mask.bit_length()
    m = mask
    while m:
        lsb = m & -m
        out[lsb.bit_length() - 1] = 1
        m ^= lsb
    return out


def _ntt(a: list[int], inverse: bool) -> None:
    n = len(a)
    j = 0
    for i in range(1, n):
        bit = n >> 1
        while j & bit:
            j ^= bit
            bit >>= 1
        j |= bit
        if i < j:
            a[i], a[j] = a[j], a[i]
    length = 2
    while length <= n:
        root = pow(NTT_ROOT, (NTT_MOD - 1) // length, NTT_MOD)
        if inverse:
            root = pow(root, NTT_MOD - 2, NTT_MOD)
        for start in range(0, n, length):
            w = 1
            half = length // 2
            for i in range(start, start + half):
                u, v = a[i], a[i + half] * w % NTT_MOD
                a[i] = (u + v) % NTT_MOD
                a[i + half] = (u - v) % NTT_MOD
                w = w * root % NTT_MOD
        length *= 2
    if inverse:
        inv_n = pow(n, NTT_MOD - 2, NTT_MOD)
        for i in range(n):
            a[i] = a[i] * inv_n % NTT_MOD
