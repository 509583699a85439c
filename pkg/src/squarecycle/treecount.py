"""Spanning-tree counts for C_n^2 and its strip subgraphs.

``count_matrix_tree`` is the general-purpose oracle: a Laplacian cofactor
evaluated exactly with fraction-free (Bareiss) elimination.  The closed
forms (``count_formula``, ``count_strip``, ``count_strip_with_tails``)
are checked against it and against brute-force enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Union

from .convexity import Variant, _classify_bits, _closure_bits, strip_catalog
from .fibonacci import fib
from .graph_core import (
    DomainError,
    EdgeSet,
    StripGraph,
    _check_n,
    _check_nk,
    edge_endpoints,
    square_cycle,
)

ENUMERATE_MAX_N = 12

Graph = Union[EdgeSet, StripGraph]


@dataclass
class LaplacianMinor:
    """Laplacian with the row and column of vertex 0 deleted.

    ``rows[r]`` maps column to nonzero entry; row/column ``r`` stands for
    vertex ``r + 1``.
    """

    order: int
    rows: list[dict[int, int]]

    @classmethod
    def from_edges(cls, num_vertices: int, edges: list[tuple[int, int]]) -> LaplacianMinor:
        if num_vertices < 1:
            raise DomainError("a graph needs at least one vertex")
        m = num_vertices - 1
        rows: list[dict[int, int]] = [{} for _ in range(m)]
        for u, v in edges:
            if u == v:
                continue
            for a, b in ((u, v), (v, u)):
                if a == 0:
                    continue
                row = rows[a - 1]
                row[a - 1] = row.get(a - 1, 0) + 1
                if b != 0:
                    row[b - 1] = row.get(b - 1, 0) - 1
        return cls(m, rows)

    def to_dense(self) -> list[list[int]]:
        return [[row.get(c, 0) for c in range(self.order)] for row in self.rows]

    def determinant(self) -> int:
        """Exact determinant by Bareiss elimination without pivoting.

        Only meaningful for positive semidefinite input, which Laplacian
        minors are: a zero pivot there already means a zero determinant.

        Rows are kept sparse and scaled lazily.  A row left alone by steps
        s+1..k-1 only picks up the telescoping factor
        ``pivot[k-1] / pivot[s]``, so it is brought up to date when a step
        actually touches it.
        """
        m = self.order
        if m == 0:
            return 1
        rows = [dict(r) for r in self.rows]
        as_of = [-1] * m
        pivots: list[int] = []
        col_rows: list[set[int]] = [set() for _ in range(m)]
        for r, row in enumerate(rows):
            for c in row:
                col_rows[c].add(r)

        def pivot_at(step: int) -> int:
            return pivots[step] if step >= 0 else 1

        def refresh(r: int, step: int) -> None:
            s = as_of[r]
            if s < step:
                num, den = pivot_at(step), pivot_at(s)
                row = rows[r]
                for c in row:
                    row[c] = row[c] * num // den
                as_of[r] = step

        for k in range(m):
            refresh(k, k - 1)
            piv_row = rows[k]
            p = piv_row.get(k, 0)
            if p == 0:
                return 0
            pivots.append(p)
            if k == m - 1:
                return p
            prev = pivot_at(k - 1)
            for i in sorted(r for r in col_rows[k] if r > k):
                refresh(i, k - 1)
                row = rows[i]
                a_ik = row.pop(k)
                col_rows[k].discard(i)
                for c in list(row):
                    if c not in piv_row:
                        row[c] = row[c] * p // prev
                for c, a_kj in piv_row.items():
                    if c <= k:
                        continue
                    val = (p * row.get(c, 0) - a_ik * a_kj) // prev
                    if val:
                        row[c] = val
                        col_rows[c].add(i)
                    elif c in row:
                        del row[c]
                        col_rows[c].discard(i)
                as_of[i] = k
        raise AssertionError("unreachable")


def _as_graph(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(g, EdgeSet):
        return g.n, g.vertex_pairs()
    if isinstance(g, StripGraph):
        return g.num_vertices, g.vertex_pairs()
    raise TypeError(f"expected EdgeSet or StripGraph, got {type(g).__name__}")


def count_matrix_tree(g: Graph) -> int:
    """Number of spanning trees, as the cofactor of vertex 0."""
    return LaplacianMinor.from_edges(*_as_graph(g)).determinant()


def count_formula(n: int) -> int:
    """Closed form ``n * F_n**2`` for the spanning trees of C_n^2."""
    _check_n(n)
    return n * fib(n) ** 2


def count_strip(m: int) -> int:
    """t(S_m) = F_{2m-2}; the one-vertex strip has exactly one (empty) tree."""
    if m <= 0:
        raise DomainError(f"strip graph needs m >= 1, got m={m}")
    if m == 1:
        return 1
    return fib(2 * m - 2)


def count_strip_with_tails(n: int, k: int, j: int) -> int:
    _check_nk(n, k)
    return count_strip(n - 2 * k)


def _tree_bits(n: int, bits: int) -> Iterator[int]:
    positions = [b for b in range(2 * n) if bits >> b & 1]
    ends = edge_endpoints(n)
    for combo in combinations(positions, n - 1):
        parent = list(range(n))
        acyclic = True
        for b in combo:
            u, v = ends[b]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u == v:
                acyclic = False
                break
            parent[u] = v
        if acyclic:
            out = 0
            for b in combo:
                out |= 1 << b
            yield out


def enumerate_spanning_trees(g: EdgeSet) -> Iterator[EdgeSet]:
    """Yield every spanning tree of ``g``.

    Brute force over (n-1)-edge subsets in lexicographic order of bit
    position, keeping the acyclic ones.  n-1 acyclic edges on n vertices
    always form a spanning tree.
    """
    if g.n > ENUMERATE_MAX_N:
        raise DomainError(f"tree enumeration supports n <= {ENUMERATE_MAX_N}, got n={g.n}")
    for bits in _tree_bits(g.n, g.bits):
        yield EdgeSet(g.n, bits)


class PartitionFailure(Exception):
    """A spanning tree broke the unique-strip decomposition."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness


@dataclass
class DecomposeTable:
    n: int
    cells: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.cells.values())

    def to_json(self) -> dict:
        cells = [
            {"j": j, "k": k, "count": str(c)}
            for (j, k), c in sorted(self.cells.items(), key=lambda item: (item[0][1], item[0][0]))
        ]
        return {"n": self.n, "cells": cells, "total": str(self.total)}


def decompose(n: int) -> DecomposeTable:
    """Sort every spanning tree of C_n^2 into the strip S_{n,k,j} holding it.

    Each tree must lie inside exactly one strip, and its closure must be
    that strip.  Anything else raises :class:`PartitionFailure` carrying
    the tree as witness.
    """
    _check_n(n)
    if n > ENUMERATE_MAX_N:
        raise DomainError(f"decompose supports n <= {ENUMERATE_MAX_N}, got n={n}")
    strips = list(strip_catalog(n).items())
    table = DecomposeTable(n, {(j, k): 0 for _, (j, k) in strips})
    for tree in _tree_bits(n, square_cycle(n).bits):
        holders = [jk for s, jk in strips if tree & ~s == 0]
        hull = _closure_bits(n, tree)
        label = _classify_bits(n, hull)
        if len(holders) != 1 or label is None or label.variant is not Variant.STRIP:
            raise PartitionFailure(
                f"tree is not in exactly one strip (n={n})",
                {
                    "tree": EdgeSet(n, tree).to_json(),
                    "containing_strips": [{"j": j, "k": k} for j, k in holders],
                    "closure": EdgeSet(n, hull).to_json(),
                    "closure_label": label.to_json() if label else None,
                },
            )
        if (label.j, label.k) != holders[0]:
            raise PartitionFailure(
                f"closure differs from the containing strip (n={n})",
                {
                    "tree": EdgeSet(n, tree).to_json(),
                    "containing_strip": {"j": holders[0][0], "k": holders[0][1]},
                    "closure_label": label.to_json(),
                },
            )
        table.cells[holders[0]] += 1
    return table
