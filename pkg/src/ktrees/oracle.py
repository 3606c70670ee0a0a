"""Brute-force ground truth: explicit coding trees at desk scale.

A k-coding tree is a finite tree with black vertices and colored vertices
(colors 1..k+1) such that every edge joins a black vertex to a colored one
and every black vertex has exactly k+1 neighbors, one of each color.  Black
vertices stand for the hedra of a k-tree, colored vertices for its fronts,
so counting color-orbits of these trees under S_{k+1} counts unlabeled
k-trees directly.

This module enumerates every isomorphism class explicitly (canonical forms
of colored trees, rooted at the tree center) and takes orbits by sweeping
all (k+1)! recolorings.  It exists purely to cross-check the generating
function engine, so it refuses inputs beyond a small documented scale
rather than silently grinding through a combinatorial explosion.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from typing import Iterator, Sequence

# Soft desk-scale limits: plenty to corroborate the engine, small enough
# that the full (k+1)!-sweep and the rooted-tree expansions stay instant.
MAX_K = 3
MAX_N = 6

# Canonical code of a (sub)tree: (color, sorted child codes), where color 0
# marks a black vertex.  Equal codes <=> isomorphic as colored rooted trees.
CanonicalCode = tuple


def _check_scale(k: int, n: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k > MAX_K or n > MAX_N:
        raise ValueError(
            f"brute-force enumeration is limited to k <= {MAX_K}, n <= {MAX_N} "
            f"(got k={k}, n={n}); use the series engine for larger sizes"
        )


def _compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of ``slots`` nonnegative ints summing to ``total``."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


# Rooted construction codes, already canonical for *rooted* colored trees:
#   colored node: (color, units)   units = sorted tuple of black units
#   black unit:   tuple of colored child nodes, ascending by color
@lru_cache(maxsize=None)
def _colored_rooted(k: int, j: int, n: int) -> tuple:
    """All trees rooted at a colored vertex of color j with n black vertices.

    The root carries a multiset of black-rooted units; multisets are
    enumerated one size class at a time so recursion depth stays at n.
    """
    units_by_size = {m: _black_units(k, j, m) for m in range(1, n + 1)}
    results = []

    def pick(size: int, remaining: int, chosen: list) -> None:
        if remaining == 0:
            results.append((j, tuple(sorted(chosen))))
            return
        if size == 0:
            return
        pick(size - 1, remaining, chosen)
        units = units_by_size[size]
        for copies in range(1, remaining // size + 1):
            for extra in combinations_with_replacement(units, copies):
                pick(size - 1, remaining - size * copies, chosen + list(extra))

    pick(n, n, [])
    return tuple(results)


@lru_cache(maxsize=None)
def _black_units(k: int, j: int, m: int) -> tuple:
    """Black-rooted subtrees hanging below a colored vertex of color j.

    The black root already has its parent of color j, so it carries one
    colored child of every other color; m counts its black vertices.
    """
    other_colors = [c for c in range(1, k + 2) if c != j]
    out = []
    for comp in _compositions(m - 1, k):
        pools = [_colored_rooted(k, c, size) for c, size in zip(other_colors, comp)]
        for combo in product(*pools):
            out.append(tuple(combo))
    return tuple(out)


def _black_rooted(k: int, n: int) -> Iterator[tuple]:
    """All trees rooted at a black vertex with n black vertices (n >= 1)."""
    for comp in _compositions(n - 1, k + 1):
        pools = [
            _colored_rooted(k, c, size)
            for c, size in zip(range(1, k + 2), comp)
        ]
        yield from product(*pools)


def _decode(root, is_black_root: bool) -> tuple[list[int], list[list[int]]]:
    """Expand a construction code into (vertex colors, adjacency lists).

    The root gets vertex id 0.  Black vertices have color 0.
    """
    colors: list[int] = []
    adj: list[list[int]] = []

    def alloc(color: int) -> int:
        colors.append(color)
        adj.append([])
        return len(colors) - 1

    def link(u: int, v: int) -> None:
        adj[u].append(v)
        adj[v].append(u)

    def visit_colored(node, parent: int | None) -> None:
        color, units = node
        v = alloc(color)
        if parent is not None:
            link(v, parent)
        for unit in units:
            visit_black(unit, v)

    def visit_black(unit, parent: int | None) -> None:
        v = alloc(0)
        if parent is not None:
            link(v, parent)
        for child in unit:
            visit_colored(child, v)

    if is_black_root:
        visit_black(root, None)
    else:
        visit_colored(root, None)
    return colors, adj


def _center_vertex(colors: Sequence[int], adj: Sequence[Sequence[int]]) -> int:
    """The unique center vertex, by iterated leaf stripping.

    All leaves of a coding tree are colored, so leaf-to-leaf paths have
    even length and the center is a single vertex.  Should stripping ever
    end on an edge anyway, the black endpoint is the deterministic,
    isomorphism-invariant choice (every edge has exactly one).
    """
    n = len(adj)
    if n == 1:
        return 0
    deg = [len(nbrs) for nbrs in adj]
    leaves = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for u in leaves:
            deg[u] = 0
            for w in adj[u]:
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        leaves = nxt
    if len(leaves) == 1:
        return leaves[0]
    a, b = leaves
    return a if colors[a] == 0 else b


def _canonical_code(
    v: int, parent: int, colors: Sequence[int], adj: Sequence[Sequence[int]]
) -> CanonicalCode:
    subs = sorted(
        _canonical_code(u, v, colors, adj) for u in adj[v] if u != parent
    )
    return (colors[v], tuple(subs))


def _validate_coding_tree(k: int, colors: Sequence[int], adj: Sequence[Sequence[int]]) -> None:
    n_vertices = len(colors)
    n_edges = sum(len(nbrs) for nbrs in adj) // 2
    if n_edges != n_vertices - 1:
        raise AssertionError("enumerated graph is not a tree")
    full_palette = set(range(1, k + 2))
    for v, color in enumerate(colors):
        if color == 0:
            nbr_colors = [colors[u] for u in adj[v]]
            if 0 in nbr_colors or set(nbr_colors) != full_palette or len(nbr_colors) != k + 1:
                raise AssertionError(f"black vertex {v} lacks one neighbor of each color")
        else:
            if any(colors[u] != 0 for u in adj[v]):
                raise AssertionError(f"colored vertex {v} has a colored neighbor")


@lru_cache(maxsize=None)
def _all_codes(k: int, n: int) -> tuple[CanonicalCode, ...]:
    codes = set()

    def consider(root, is_black_root: bool) -> None:
        colors, adj = _decode(root, is_black_root)
        if _center_vertex(colors, adj) != 0:
            return
        _validate_coding_tree(k, colors, adj)
        codes.add(_canonical_code(0, -1, colors, adj))

    for j in range(1, k + 2):
        for node in _colored_rooted(k, j, n):
            consider(node, False)
    if n >= 1:
        for unit in _black_rooted(k, n):
            consider(unit, True)
    return tuple(sorted(codes))


def enumerate_coding_trees(k: int, n: int) -> list[CanonicalCode]:
    """Canonical codes of all k-coding trees with exactly n black vertices.

    Rooted shapes are generated recursively; a shape is kept only when its
    root is the tree's center, which selects exactly one rooted form per
    isomorphism class.  Results are sorted for reproducibility and cached
    per (k, n), since the orbit and fixed-count sweeps revisit them.
    """
    _check_scale(k, n)
    return list(_all_codes(k, n))


def _recolored(code: CanonicalCode, perm: Sequence[int]) -> CanonicalCode:
    """Apply a color permutation and restore canonical child order.

    The center of a tree does not depend on colors, so recoloring a
    center-rooted code never moves the root.
    """
    color, children = code
    new_color = perm[color - 1] if color else 0
    return (new_color, tuple(sorted(_recolored(ch, perm) for ch in children)))


def _check_permutation(k: int, perm: Sequence[int]) -> tuple[int, ...]:
    pi = tuple(perm)
    if sorted(pi) != list(range(1, k + 2)):
        raise ValueError(f"not a permutation of 1..{k + 1}: {perm}")
    return pi


def fixed_count(k: int, n: int, perm: Sequence[int]) -> int:
    """Number of n-black coding trees invariant under recoloring by ``perm``.

    ``perm[i-1]`` is the image of color i.
    """
    _check_scale(k, n)
    pi = _check_permutation(k, perm)
    return sum(1 for code in _all_codes(k, n) if _recolored(code, pi) == code)


def orbit_count(k: int, n: int) -> int:
    """Number of color-orbits of k-coding trees with n black vertices.

    This equals the number of unlabeled k-trees with n hedra.  Orbits are
    built by the full (k+1)! recoloring sweep; at desk scale that is at
    most 24 permutations.
    """
    _check_scale(k, n)
    todo = set(_all_codes(k, n))
    perms = list(permutations(range(1, k + 2)))
    orbits = 0
    while todo:
        seed = todo.pop()
        orbits += 1
        for pi in perms:
            todo.discard(_recolored(seed, pi))
    return orbits
