"""Triangle convexity on C_n^2.

A subgraph is convex with respect to ``T_i`` when it holds at most one
edge of the triangle or all three.  The closure of an edge set is the
smallest convex superset, reached by completing any triangle that holds
exactly two edges until none is left.

Connected spanning convex subgraphs fall into three families: the whole
graph, the all-window graph (odd n only), and the strips with tails
S_{n,k,j}.  :func:`classify` names a subgraph by family and
:func:`enumerate_convex` finds every one of them by exhaustive search.
"""

from __future__ import annotations

import enum
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .graph_core import (
    DomainError,
    EdgeSet,
    Triangle,
    _check_n,
    _connected_bits,
    _escape_bits,
    max_k,
    triangle_masks,
)

ENUMERATE_MAX_N = 14
_CHUNK = 1 << 22


class ContractViolation(ValueError):
    """Input does not satisfy a precondition the operation relies on."""


class Variant(enum.Enum):
    FULL = "full"
    WINDOWS = "windows"
    STRIP = "strip"


@dataclass(frozen=True)
class ConvexLabel:
    variant: Variant
    j: Optional[int] = None
    k: Optional[int] = None

    def to_json(self) -> dict:
        out: dict = {"variant": self.variant.value}
        if self.variant is Variant.STRIP:
            out["j"] = self.j
            out["k"] = self.k
        return out

    @classmethod
    def from_json(cls, obj: dict) -> ConvexLabel:
        return cls(Variant(obj["variant"]), obj.get("j"), obj.get("k"))

    def edge_set(self, n: int) -> EdgeSet:
        full = (1 << 2 * n) - 1
        if self.variant is Variant.FULL:
            return EdgeSet(n, full)
        if self.variant is Variant.WINDOWS:
            if n % 2 == 0:
                raise DomainError("the all-window label only exists for odd n")
            return EdgeSet(n, full ^ ((1 << n) - 1))
        return EdgeSet(n, full & ~_escape_bits(n, self.k, self.j))


FULL = ConvexLabel(Variant.FULL)
WINDOWS = ConvexLabel(Variant.WINDOWS)


def _is_convex_bits(n: int, bits: int) -> bool:
    for mask in triangle_masks(n):
        if (bits & mask).bit_count() == 2:
            return False
    return True


def is_convex_wrt(g: EdgeSet, t: Triangle) -> bool:
    if t.n != g.n:
        raise DomainError(f"triangle of n={t.n} tested against edge set of n={g.n}")
    return (g.bits & t.mask).bit_count() != 2


def is_convex(g: EdgeSet) -> bool:
    return _is_convex_bits(g.n, g.bits)


def _closure_bits(n: int, bits: int) -> int:
    masks = triangle_masks(n)
    queue = deque(range(n))
    queued = [True] * n
    while queue:
        i = queue.popleft()
        queued[i] = False
        mask = masks[i]
        if (bits & mask).bit_count() != 2:
            continue
        added = mask & ~bits
        bits |= mask
        # only a new frame can unsettle another triangle: e_x sits in T_{x-1} and T_x
        if added < 1 << n:
            x = added.bit_length() - 1
            for t in ((x - 1) % n, x):
                if not queued[t]:
                    queued[t] = True
                    queue.append(t)
    return bits


def closure(g: EdgeSet) -> EdgeSet:
    """Smallest convex edge set containing ``g``."""
    return EdgeSet(g.n, _closure_bits(g.n, g.bits))


@lru_cache(maxsize=None)
def strip_catalog(n: int) -> dict[int, tuple[int, int]]:
    """Map edge bits of each S_{n,k,j} to its ``(j, k)``.

    If two parameter pairs ever produced the same graph only the first
    would be kept; distinctness is checked separately.
    """
    _check_n(n)
    full = (1 << 2 * n) - 1
    out: dict[int, tuple[int, int]] = {}
    for k in range(max_k(n) + 1):
        for j in range(n):
            out.setdefault(full & ~_escape_bits(n, k, j), (j, k))
    return out


def catalog(n: int) -> list[tuple[ConvexLabel, EdgeSet]]:
    """Every labelled subgraph the classification predicts, in (k, j) order."""
    _check_n(n)
    out = [(FULL, FULL.edge_set(n))]
    if n % 2:
        out.append((WINDOWS, WINDOWS.edge_set(n)))
    for k in range(max_k(n) + 1):
        for j in range(n):
            label = ConvexLabel(Variant.STRIP, j, k)
            out.append((label, label.edge_set(n)))
    return out


def _classify_bits(n: int, bits: int) -> Optional[ConvexLabel]:
    full = (1 << 2 * n) - 1
    if bits == full:
        return FULL
    if n % 2 and bits == full ^ ((1 << n) - 1):
        return WINDOWS
    hit = strip_catalog(n).get(bits)
    if hit is None:
        return None
    return ConvexLabel(Variant.STRIP, *hit)


def classify(g: EdgeSet) -> Optional[ConvexLabel]:
    """Label a connected spanning convex subgraph.

    Returns ``None`` when ``g`` is convex and connected but matches no
    known family.  That outcome is a counterexample, not an error.

    Raises:
        ContractViolation: ``g`` is disconnected or not convex.
    """
    if not _connected_bits(g.n, g.bits):
        raise ContractViolation(f"not connected: {g!r}")
    if not _is_convex_bits(g.n, g.bits):
        raise ContractViolation(f"not convex: {g!r}")
    return _classify_bits(g.n, g.bits)


def _convex_in_range(n: int, start: int, stop: int) -> list[int]:
    dtype = np.uint32 if 2 * n <= 32 else np.uint64
    x = np.arange(start, stop, dtype=dtype)
    ok = np.ones(len(x), dtype=bool)
    one = dtype(1)
    for i in range(n):
        a, b, c = i, (i + 1) % n, n + i
        hits = ((x >> dtype(a)) & one) + ((x >> dtype(b)) & one) + ((x >> dtype(c)) & one)
        ok &= hits != 2
    return [b for b in x[ok].tolist() if _connected_bits(n, b)]


def enumerate_convex(n: int, jobs: int = 1) -> Iterator[EdgeSet]:
    """Yield every connected spanning convex subgraph of C_n^2.

    Tests all 2^(2n) edge subsets; output is ascending by bit value.
    ``jobs > 1`` splits the subset range across worker processes.
    """
    _check_n(n)
    if n > ENUMERATE_MAX_N:
        raise DomainError(f"exhaustive search supports n <= {ENUMERATE_MAX_N}, got n={n}")
    total = 1 << 2 * n
    ranges = [(s, min(total, s + _CHUNK)) for s in range(0, total, _CHUNK)]
    if jobs > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_convex_in_range, [n] * len(ranges), *zip(*ranges))
            for part in parts:
                for b in part:
                    yield EdgeSet(n, b)
        return
    for start, stop in ranges:
        for b in _convex_in_range(n, start, stop):
            yield EdgeSet(n, b)


def frame_forcing_violation(g: EdgeSet) -> Optional[tuple[int, int]]:
    """Look for a counterexample to frame forcing in ``g``.

    For residues k and 0 <= p < n, containing
    ``{e_{k-1}, f_k, f_{k+2}, ..., f_{k+2p-2}, e_{k+2p}}`` must imply
    containing ``e_k, ..., e_{k+2p-1}``.  Returns the first offending
    ``(k, p)`` or ``None``.
    """
    n, bits = g.n, g.bits
    has_e = [bool(bits >> i & 1) for i in range(n)]
    has_f = [bool(bits >> (n + i) & 1) for i in range(n)]
    for k in range(n):
        if not has_e[(k - 1) % n]:
            continue
        for p in range(n):
            # windows f_k .. f_{k+2p-2} must all be present; the p-th one extends the run
            if p > 0 and not has_f[(k + 2 * p - 2) % n]:
                break
            if not has_e[(k + 2 * p) % n]:
                continue
            if not all(has_e[(k + i) % n] for i in range(2 * p)):
                return k, p
    return None
