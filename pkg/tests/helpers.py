"""Independent oracles and random-structure generators for the test suite.

The oracles deliberately avoid the library's code paths: unions are plain
frozensets (the library uses bitmasks), the incidence-matrix search runs
row-wise (the realizer places column-wise), and minimality checks enumerate
every smaller candidate.
"""

from __future__ import annotations

import random
from itertools import combinations

import frhyper as fh

HETERO_NODES = [{1, 2, 3, 4}, {1, 5, 6}, {2, 5}, {3, 6}, {4, 6}]
K4_NODES = [{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}]
TRIANGLE_NODES = [{1, 2}, {1, 3}, {2, 3}]


def hetero_code() -> fh.FRCode:
    return fh.validate_fr(HETERO_NODES, theta=6)


def k4_code() -> fh.FRCode:
    return fh.validate_fr(K4_NODES, theta=6)


def triangle_code() -> fh.FRCode:
    return fh.validate_fr(TRIANGLE_NODES, theta=3)


# ---------------------------------------------------------------- oracles

def oracle_max_file_size(nodes: list[set[int]], k: int) -> int:
    return min(
        len(set().union(*chosen)) for chosen in combinations(nodes, k)
    )


def oracle_min_cover(nodes: list[set[int]], failed: int) -> int:
    """Smallest number of other nodes covering node ``failed`` (1-based)."""
    target = nodes[failed - 1]
    others = [u for i, u in enumerate(nodes, 1) if i != failed]
    for size in range(1, len(others) + 1):
        for chosen in combinations(others, size):
            if target <= set().union(*chosen):
                return size
    raise AssertionError("no cover exists")


def oracle_min_distance(nodes: list[set[int]], file_size: int) -> int:
    n = len(nodes)
    for size in range(1, n):
        for failed in combinations(range(n), size):
            survivors = [u for i, u in enumerate(nodes) if i not in failed]
            if len(set().union(*survivors)) < file_size:
                return size
    return n


def oracle_is_linear(groups) -> bool:
    return all(len(set(a) & set(b)) <= 1 for a, b in combinations(groups, 2))


def oracle_matrix_exists(alpha: tuple[int, ...], rho: tuple[int, ...]) -> bool:
    """Row-wise exhaustive search for a 0/1 matrix with the given margins."""
    if sum(alpha) != sum(rho):
        return False
    rows = sorted(alpha, reverse=True)
    n, theta = len(rows), len(rho)
    counts = [0] * theta

    def fill(i: int) -> bool:
        if i == n:
            return all(counts[j] == rho[j] for j in range(theta))
        left = n - i
        for j in range(theta):
            if rho[j] - counts[j] > left:
                return False
        if rows[i] > theta:
            return False
        for cols in combinations(range(theta), rows[i]):
            if any(counts[j] >= rho[j] for j in cols):
                continue
            for j in cols:
                counts[j] += 1
            if fill(i + 1):
                return True
            for j in cols:
                counts[j] -= 1
        return False

    return fill(0)


# ------------------------------------------------------------- generators

def random_code(rng: random.Random, max_n: int = 8, max_theta: int = 10) -> fh.FRCode:
    """A uniform-ish valid FR code: every packet lands somewhere, every node
    gets something, plus a random sprinkle of extra replicas."""
    n = rng.randint(1, max_n)
    theta = rng.randint(1, max_theta)
    nodes: list[set[int]] = [set() for _ in range(n)]
    for j in range(1, theta + 1):
        nodes[rng.randrange(n)].add(j)
    for content in nodes:
        if not content:
            content.add(rng.randint(1, theta))
    for _ in range(rng.randint(0, n * theta // 2)):
        nodes[rng.randrange(n)].add(rng.randint(1, theta))
    return fh.validate_fr(nodes, theta)


def random_fr_hypergraph(rng: random.Random, max_n: int = 8, max_theta: int = 10) -> fh.Hypergraph:
    return fh.fr_to_hypergraph(random_code(rng, max_n, max_theta))


def partitions(total: int, largest: int | None = None):
    """Descending integer partitions of ``total``."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for head in range(min(total, largest), 0, -1):
        for tail in partitions(total - head, head):
            yield (head,) + tail
