"""Slow, obviously-correct reference routines used only by the tests.

None of these share code paths with the package beyond plain vertex/edge
bookkeeping.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations


def vertex_pairs(n: int, frames, windows) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in frames] + [(i, (i + 2) % n) for i in windows]


def edge_bits_to_pairs(n: int, bits: int) -> list[tuple[int, int]]:
    frames = [i for i in range(n) if bits >> i & 1]
    windows = [i for i in range(n) if bits >> (n + i) & 1]
    return vertex_pairs(n, frames, windows)


def fraction_det(matrix: list[list[int]]) -> int:
    """Determinant by Gaussian elimination over the rationals, with pivoting."""
    a = [[Fraction(x) for x in row] for row in matrix]
    m = len(a)
    det = Fraction(1)
    for c in range(m):
        piv = next((r for r in range(c, m) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, m):
            f = a[r][c] / a[c][c]
            if f:
                for cc in range(c, m):
                    a[r][cc] -= f * a[c][cc]
    assert det.denominator == 1
    return int(det)


def laplacian_cofactor(num_vertices: int, edges: list[tuple[int, int]], drop: int = 0) -> int:
    """Cofactor of the Laplacian with row/column ``drop`` removed (dense, rational)."""
    lap = [[0] * num_vertices for _ in range(num_vertices)]
    for u, v in edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    keep = [i for i in range(num_vertices) if i != drop]
    return fraction_det([[lap[r][c] for c in keep] for r in keep])


def connected(num_vertices: int, edges) -> bool:
    """Depth-first search connectivity."""
    adj: dict[int, list[int]] = {v: [] for v in range(num_vertices)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == num_vertices


def brute_force_tree_count(num_vertices: int, edges: list[tuple[int, int]]) -> int:
    """(|V|-1)-edge subsets that are connected; such subsets are exactly the trees."""
    if num_vertices == 1:
        return 1
    return sum(
        1 for sub in combinations(edges, num_vertices - 1) if connected(num_vertices, sub)
    )


def naive_fib(i: int) -> int:
    a, b = 0, 1
    for _ in range(i):
        a, b = b, a + b
    return a


def triangle_bit_positions(n: int) -> list[tuple[int, int, int]]:
    return [(i, (i + 1) % n, n + i) for i in range(n)]


def slow_is_convex(n: int, bits: int) -> bool:
    for tri in triangle_bit_positions(n):
        if sum(bits >> b & 1 for b in tri) == 2:
            return False
    return True


def slow_convex_connected(n: int) -> list[int]:
    """Pure-Python scan of every edge subset."""
    return [
        bits
        for bits in range(1 << 2 * n)
        if slow_is_convex(n, bits) and connected(n, edge_bits_to_pairs(n, bits))
    ]


def random_order_closure(n: int, bits: int, rng: random.Random) -> int:
    """Complete triangles one at a time, picking uniformly among the eligible ones."""
    tris = triangle_bit_positions(n)
    while True:
        eligible = [t for t in tris if sum(bits >> b & 1 for b in t) == 2]
        if not eligible:
            return bits
        for b in rng.choice(eligible):
            bits |= 1 << b


def random_edge_bits(n: int, rng: random.Random) -> int:
    """Random subset with a random density, so closures are not all trivially full."""
    p = rng.choice((0.05, 0.1, 0.2, 0.3, 0.5))
    bits = 0
    for b in range(2 * n):
        if rng.random() < p:
            bits |= 1 << b
    return bits
