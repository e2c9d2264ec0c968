"""Arrangements shared across the test modules."""

from itertools import combinations

from arrmult import Arrangement, family

# Rank-3 line configurations in P^2, written as planes through the origin of C^3.
# Lines through [0:0:1] are a*x + b*y; lines through [0:1:0] are a*x + c*z.
THROUGH_Z = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, -1, 0), (1, 2, 0), (1, -2, 0), (1, 3, 0)]
THROUGH_Y = [(0, 0, 1), (1, 0, 1), (1, 0, -1), (1, 0, 2), (1, 0, -2)]


def near_pencil(k):
    """k planes through the z-axis plus the transverse plane z = 0 (d = k + 1)."""
    return Arrangement.from_normals(THROUGH_Z[:k] + [(0, 0, 1)])


def two_pencil(a, b):
    """a lines through P1 and b lines through P2, sharing the line P1P2 (x = 0): d = a + b - 1."""
    return Arrangement.from_normals(THROUGH_Z[:a] + THROUGH_Y[:b - 1])


def single_hyperplane(n=2):
    return Arrangement.from_normals([[1] + [0] * (n - 1)])


def rank3_configurations():
    """Named rank-3 arrangements used by the codim-3 checks."""
    return {
        "generic d=6": family("generic", n=3, d=6, seed=11),
        "generic d=7": family("generic", n=3, d=7, seed=5),
        "near-pencil 5+1": near_pencil(5),
        "near-pencil 6+1": near_pencil(6),
        "two-pencil 4+4 (d=7)": two_pencil(4, 4),
        "two-pencil 5+3 (d=7)": two_pencil(5, 3),
        "two-pencil 3+3 (d=5)": two_pencil(3, 3),
        "two-pencil 4+3 (d=6)": two_pencil(4, 3),
        "braid C^4": family("braid", n=4),
    }


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def braid_flats_by_partition(n):
    """(rank, mult) of every proper braid flat, read off the set partitions of {0..n-1}."""
    out = []
    for part in set_partitions(range(n)):
        rank = n - len(part)
        if rank == 0:
            continue
        mult = sum(len(list(combinations(block, 2))) for block in part)
        out.append((rank, mult))
    return out
