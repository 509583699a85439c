"""Square cycles C_n^2 and the graph families carved out of them.

Vertices of C_n^2 are the residues 0..n-1.  Edges come in two kinds:

* frame ``e_i = {i, i+1}``
* window ``f_i = {i, i+2}``

A spanning subgraph is an :class:`EdgeSet`, a 2n-bit vector with frames in
bits ``0..n-1`` and windows in bits ``n..2n-1``.  Every index is reduced
mod n on the way in, so ``e_i`` and ``e_{i+n}`` are the same edge.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

MIN_N = 5

__all__ = [
    "DomainError",
    "CyclicIndex",
    "EdgeKind",
    "EdgeId",
    "EdgeSet",
    "Triangle",
    "StripGraph",
    "frame",
    "window",
    "square_cycle",
    "windows_only",
    "triangle",
    "triangles",
    "strip_graph",
    "max_k",
    "escape_route",
    "strip_with_tails",
    "is_connected",
]


class DomainError(ValueError):
    """An argument lies outside the domain where the construction is defined."""


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < MIN_N:
        raise DomainError(f"square cycles need n >= {MIN_N}, got n={n}")


@dataclass(frozen=True, order=True)
class CyclicIndex:
    """A residue mod ``modulus``; integer arithmetic wraps around."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise DomainError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __add__(self, other: int) -> CyclicIndex:
        return CyclicIndex(self.value + int(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other: int) -> CyclicIndex:
        return CyclicIndex(self.value - int(other), self.modulus)

    def __int__(self) -> int:
        return self.value

    __index__ = __int__


class EdgeKind(enum.Enum):
    FRAME = "frame"
    WINDOW = "window"


@dataclass(frozen=True, order=True)
class EdgeId:
    """One edge of C_n^2.  ``index`` is always reduced mod ``n``."""

    kind: EdgeKind
    index: int
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "index", self.index % self.n)

    @property
    def bit(self) -> int:
        """Position of this edge in an :class:`EdgeSet` bit vector."""
        return self.index if self.kind is EdgeKind.FRAME else self.n + self.index

    @property
    def endpoints(self) -> tuple[int, int]:
        step = 1 if self.kind is EdgeKind.FRAME else 2
        return self.index, (self.index + step) % self.n

    def __str__(self) -> str:
        return f"{'e' if self.kind is EdgeKind.FRAME else 'f'}_{self.index}"


def frame(n: int, i: int) -> EdgeId:
    return EdgeId(EdgeKind.FRAME, i, n)


def window(n: int, i: int) -> EdgeId:
    return EdgeId(EdgeKind.WINDOW, i, n)


def _edge_from_bit(n: int, b: int) -> EdgeId:
    if b < n:
        return EdgeId(EdgeKind.FRAME, b, n)
    return EdgeId(EdgeKind.WINDOW, b - n, n)


@lru_cache(maxsize=None)
def edge_endpoints(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs for every bit position 0..2n-1."""
    return tuple((i, (i + 1) % n) for i in range(n)) + tuple(
        (i, (i + 2) % n) for i in range(n)
    )


@dataclass(frozen=True)
class EdgeSet:
    """A spanning subgraph of C_n^2, stored as an integer bit vector.

    Supports the usual set algebra (``|``, ``&``, ``-``, ``^``, ``<=``),
    membership of :class:`EdgeId` values, ``len`` and iteration in bit
    order.  Operands must share ``n``.
    """

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if self.bits < 0 or self.bits >> (2 * self.n):
            raise DomainError(f"bits out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[EdgeId]) -> EdgeSet:
        bits = 0
        for e in edges:
            if e.n != n:
                raise DomainError(f"edge {e} belongs to n={e.n}, not n={n}")
            bits |= 1 << e.bit
        return cls(n, bits)

    @classmethod
    def from_indices(
        cls, n: int, frames: Iterable[int] = (), windows: Iterable[int] = ()
    ) -> EdgeSet:
        bits = 0
        for i in frames:
            bits |= 1 << (i % n)
        for i in windows:
            bits |= 1 << (n + i % n)
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> EdgeSet:
        return cls(n, 0)

    def _same_n(self, other: EdgeSet) -> None:
        if not isinstance(other, EdgeSet):
            raise TypeError(f"expected EdgeSet, got {type(other).__name__}")
        if other.n != self.n:
            raise DomainError(f"mixing n={self.n} and n={other.n}")

    def __or__(self, other: EdgeSet) -> EdgeSet:
        self._same_n(other)
        return EdgeSet(self.n, self.bits | other.bits)

    def __and__(self, other: EdgeSet) -> EdgeSet:
        self._same_n(other)
        return EdgeSet(self.n, self.bits & other.bits)

    def __sub__(self, other: EdgeSet) -> EdgeSet:
        self._same_n(other)
        return EdgeSet(self.n, self.bits & ~other.bits)

    def __xor__(self, other: EdgeSet) -> EdgeSet:
        self._same_n(other)
        return EdgeSet(self.n, self.bits ^ other.bits)

    def __le__(self, other: EdgeSet) -> bool:
        self._same_n(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: EdgeSet) -> bool:
        return other <= self

    def __lt__(self, other: EdgeSet) -> bool:
        return self <= other and self.bits != other.bits

    def __gt__(self, other: EdgeSet) -> bool:
        return other < self

    def __contains__(self, edge: object) -> bool:
        if not isinstance(edge, EdgeId) or edge.n != self.n:
            return False
        return bool(self.bits >> edge.bit & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[EdgeId]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield _edge_from_bit(self.n, low.bit_length() - 1)
            bits ^= low

    def complement(self) -> EdgeSet:
        return EdgeSet(self.n, ((1 << 2 * self.n) - 1) & ~self.bits)

    def frames(self) -> list[int]:
        mask = (1 << self.n) - 1
        return _bit_positions(self.bits & mask)

    def windows(self) -> list[int]:
        return _bit_positions(self.bits >> self.n)

    def vertex_pairs(self) -> list[tuple[int, int]]:
        ends = edge_endpoints(self.n)
        return [ends[b] for b in _bit_positions(self.bits)]

    def to_json(self) -> dict:
        return {"n": self.n, "frames": self.frames(), "windows": self.windows()}

    @classmethod
    def from_json(cls, obj: dict) -> EdgeSet:
        return cls.from_indices(obj["n"], obj["frames"], obj["windows"])

    def __repr__(self) -> str:
        return f"EdgeSet(n={self.n}, frames={self.frames()}, windows={self.windows()})"


def _bit_positions(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


@dataclass(frozen=True)
class Triangle:
    """``T_i = {e_i, e_{i+1}, f_i}``."""

    i: CyclicIndex

    @property
    def n(self) -> int:
        return self.i.modulus

    @property
    def members(self) -> tuple[EdgeId, EdgeId, EdgeId]:
        n, i = self.n, self.i.value
        return frame(n, i), frame(n, i + 1), window(n, i)

    @property
    def mask(self) -> int:
        return triangle_masks(self.n)[self.i.value]

    def as_edge_set(self) -> EdgeSet:
        return EdgeSet(self.n, self.mask)


@lru_cache(maxsize=None)
def triangle_masks(n: int) -> tuple[int, ...]:
    """Bit masks of T_0..T_{n-1}."""
    return tuple(
        (1 << i) | (1 << (i + 1) % n) | (1 << (n + i)) for i in range(n)
    )


def square_cycle(n: int) -> EdgeSet:
    """The full edge set of C_n^2: all n frames and all n windows."""
    _check_n(n)
    return EdgeSet(n, (1 << 2 * n) - 1)


def windows_only(n: int) -> EdgeSet:
    _check_n(n)
    return EdgeSet(n, ((1 << n) - 1) << n)


def triangle(n: int, i: int) -> Triangle:
    _check_n(n)
    return Triangle(CyclicIndex(i, n))


def triangles(n: int) -> list[Triangle]:
    return [triangle(n, i) for i in range(n)]


@dataclass(frozen=True)
class StripGraph:
    """The strip graph S_k: vertices 1..k, edges between labels at distance 1 or 2."""

    k: int

    @property
    def vertices(self) -> range:
        return range(1, self.k + 1)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i, i + d) for d in (1, 2) for i in range(1, self.k - d + 1)]

    def vertex_pairs(self) -> list[tuple[int, int]]:
        """Edges relabelled to 0-based vertices."""
        return [(a - 1, b - 1) for a, b in self.edges]

    @property
    def num_vertices(self) -> int:
        return self.k


def strip_graph(k: int) -> StripGraph:
    if k <= 0:
        raise DomainError(f"strip graph needs k >= 1, got k={k}")
    return StripGraph(k)


def max_k(n: int) -> int:
    """Largest admissible escape-route parameter, ceil((n-2)/2)."""
    return (n - 1) // 2


def _check_nk(n: int, k: int) -> None:
    _check_n(n)
    if not 0 <= k <= max_k(n):
        raise DomainError(f"k must lie in [0, {max_k(n)}] for n={n}, got k={k}")


def _escape_bits(n: int, k: int, j: int) -> int:
    bits = (1 << n + j % n) | (1 << n + (j + 2 * k + 1) % n)
    for i in range(j + 1, j + 2 * k + 2):
        bits |= 1 << i % n
    return bits


def escape_route(n: int, k: int, j: int) -> EdgeSet:
    """``{f_j, f_{j+2k+1}} | {e_{j+1}, ..., e_{j+2k+1}}``, indices mod n.

    Coinciding indices collapse, so for odd n and k = (n-1)/2 the route
    is every frame plus the single window f_j.
    """
    _check_nk(n, k)
    return EdgeSet(n, _escape_bits(n, k, j))


def strip_with_tails(n: int, k: int, j: int) -> EdgeSet:
    """S_{n,k,j}: C_n^2 with the escape route ES(n,k,j) removed."""
    _check_nk(n, k)
    return EdgeSet(n, ((1 << 2 * n) - 1) & ~_escape_bits(n, k, j))


def _connected_bits(n: int, bits: int) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = n
    ends = edge_endpoints(n)
    while bits and components > 1:
        low = bits & -bits
        u, v = ends[low.bit_length() - 1]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
        bits ^= low
    return components == 1


def is_connected(g: EdgeSet) -> bool:
    """Whether the spanning subgraph on Z_n with edges ``g`` is connected."""
    return _connected_bits(g.n, g.bits)
