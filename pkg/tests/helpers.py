"""Shared brute-force oracles for the test suite.

Everything here recomputes order data from the covering relation by
breadth-first closure, independently of the structured algorithms under
test, and caches per size so exhaustive suites stay fast.
"""

from functools import cache

from tamari.mtamari import BallotPath, enumerate_ballot_paths, path_rotation_covers
from tamari.order import sylvester_class, tamari_upset
from tamari.trees import BinaryTree, enumerate_trees


@cache
def tree_upsets(n: int) -> dict[BinaryTree, frozenset[BinaryTree]]:
    return {t: tamari_upset(t) for t in enumerate_trees(n)}


@cache
def tree_leq_pairs(n: int) -> frozenset[tuple[BinaryTree, BinaryTree]]:
    return frozenset((t, u) for t, ups in tree_upsets(n).items() for u in ups)


@cache
def tree_downsets(n: int) -> dict[BinaryTree, frozenset[BinaryTree]]:
    ups = tree_upsets(n)
    trees = enumerate_trees(n)
    return {t: frozenset(u for u in trees if t in ups[u]) for t in trees}


@cache
def sylvester_classes(n: int) -> dict[BinaryTree, frozenset]:
    return {t: frozenset(sylvester_class(t)) for t in enumerate_trees(n)}


@cache
def path_upsets(m: int, n: int) -> dict[BallotPath, frozenset[BallotPath]]:
    memo: dict[BallotPath, frozenset[BallotPath]] = {}

    def reach(p: BallotPath) -> frozenset[BallotPath]:
        got = memo.get(p)
        if got is None:
            closure = {p}
            for q in path_rotation_covers(p):
                closure |= reach(q)
            got = memo[p] = frozenset(closure)
        return got

    for p in enumerate_ballot_paths(m, n):
        reach(p)
    return memo


@cache
def path_downset_sizes(m: int, n: int) -> dict[BallotPath, int]:
    ups = path_upsets(m, n)
    paths = enumerate_ballot_paths(m, n)
    return {p: sum(1 for q in paths if p in ups[q]) for p in paths}


def greedy_max_extension(n: int, relations) -> tuple[int, ...]:
    """Coinversion-maximal linear extension: always place the largest value
    whose predecessors are all placed."""
    preds = {v: set() for v in range(1, n + 1)}
    for a, b in relations:
        preds[b].add(a)
    placed: set[int] = set()
    word = []
    while len(word) < n:
        v = max(v for v in range(1, n + 1)
                if v not in placed and preds[v] <= placed)
        placed.add(v)
        word.append(v)
    return tuple(word)
