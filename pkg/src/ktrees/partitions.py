"""Integer partitions and the cycle-type algebra of symmetric groups.

A partition is a nonincreasing tuple of positive ints; it doubles as the
cycle type of a permutation (part ``p`` with multiplicity ``l`` means ``l``
cycles of length ``p``).  Partitions index every per-symmetry series in the
k-tree counting system, so the canonical form is simply the sorted tuple.
"""

from __future__ import annotations

from math import factorial, gcd

Partition = tuple[int, ...]


def partitions_of(m: int) -> list[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order.

    >>> partitions_of(3)
    [(3,), (2, 1), (1, 1, 1)]
    >>> partitions_of(0)
    [()]
    """
    if m < 0:
        raise ValueError(f"cannot partition a negative integer: {m}")
    out: list[Partition] = []

    def descend(remaining: int, max_part: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, max_part), 0, -1):
            descend(remaining - part, part, prefix + (part,))

    descend(m, m, ())
    return out


def z_of(lam: Partition) -> int:
    """Centralizer order of a permutation with cycle type ``lam``.

    For cycle type 1^l1 2^l2 ... this is prod_i i^li * li!; the number of
    permutations of that type in S_m is then m!/z.  z_of(()) == 1.
    """
    z = 1
    mult = 0
    prev = 0
    for part in sorted(lam):
        if part == prev:
            mult += 1
        else:
            prev, mult = part, 1
        z *= part * mult  # running product of part^mult * mult!
    return z


def cycle_power(lam: Partition, i: int) -> Partition:
    """Cycle type of pi^i when pi has cycle type ``lam``.

    A cycle of length p splits into gcd(p, i) cycles of length p/gcd(p, i).
    """
    if i < 1:
        raise ValueError(f"power must be >= 1, got {i}")
    if i == 1:
        return lam
    parts: list[int] = []
    for p in lam:
        g = gcd(p, i)
        parts.extend([p // g] * g)
    parts.sort(reverse=True)
    return tuple(parts)


def drop_one_fixed_point(lam: Partition) -> Partition | None:
    """Remove one part equal to 1, or return None if there is none.

    The None case is how callers detect that a permutation has no fixed
    color, which forces the corresponding rooted-tree series to be zero.
    """
    if lam and lam[-1] == 1:
        return lam[:-1]
    return None


def permutation_cycle_type(perm: tuple[int, ...]) -> Partition:
    """Cycle type of a permutation given as a 1-based image tuple.

    ``perm[i-1]`` is the image of ``i``; entries must be a rearrangement of
    1..len(perm).
    """
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {perm}")
    seen = [False] * (n + 1)
    parts = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j - 1]
            length += 1
        parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


def permutation_count(lam: Partition) -> int:
    """Number of permutations with cycle type ``lam`` in S_(sum lam)."""
    return factorial(sum(lam)) // z_of(lam)
