"""m-ballot paths, the rotation lattice on them, and the m-linear machinery.

An m-ballot path takes n north and m*n east steps from the origin and stays
weakly above the line x = m*y; m=1 gives Dyck paths.  Rotation swaps an east
step that is immediately followed by a north step with the shortest factor
after it that is a translated m-ballot word; repeated rotation generates the
m-Tamari lattice.

Paths correspond to trees whose internal nodes have m+1 children, via a
prefix reading taken right to left: each node contributes a north step, each
leaf an east step, and the trailing east step is dropped.  Applying the
chained slope form to the children of every node (and x to every leaf)
yields a counting polynomial for the path's lower set, checked here at x=1.
"""

from __future__ import annotations

from collections import deque

from .poly import Polynomial, X, Y, delta


class BallotPath:
    """Immutable m-ballot path; ``steps`` is a word over {N, E}."""

    __slots__ = ("m", "steps")

    def __init__(self, m: int, steps: str):
        if m < 1:
            raise ValueError("slope parameter m must be at least 1")
        bad = set(steps) - {"N", "E"}
        if bad:
            raise ValueError(f"path may only contain N and E, got {bad!r}")
        norths = easts = 0
        for i, step in enumerate(steps):
            if step == "N":
                norths += 1
            else:
                easts += 1
            if easts > m * norths:
                raise ValueError(f"path dips below x = {m}y at position {i}")
        if easts != m * norths:
            raise ValueError(f"expected {m} east steps per north step")
        self.m = m
        self.steps = steps

    @property
    def n(self) -> int:
        return len(self.steps) // (self.m + 1)

    def to_text(self) -> str:
        return f"m={self.m}:{self.steps}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, BallotPath):
            return NotImplemented
        return self.m == other.m and self.steps == other.steps

    def __hash__(self) -> int:
        return hash((self.m, self.steps))

    def __repr__(self) -> str:
        return f"<BallotPath {self.to_text()}>"


def parse_ballot_path(text: str) -> BallotPath:
    """Parse the ``m=<int>:<word>`` form."""
    head, sep, word = text.strip().partition(":")
    if not sep or not head.startswith("m="):
        raise ValueError(f"expected 'm=<int>:<word>', got {text!r}")
    return BallotPath(int(head[2:]), word)


def enumerate_ballot_paths(m: int, n: int) -> list[BallotPath]:
    """All m-ballot paths of size n, N-before-E lexicographic order."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    out: list[BallotPath] = []
    word: list[str] = []

    def extend(norths: int, easts: int) -> None:
        if norths == n and easts == m * n:
            out.append(BallotPath(m, "".join(word)))
            return
        if norths < n:
            word.append("N")
            extend(norths + 1, easts)
            word.pop()
        if easts < m * norths:
            word.append("E")
            extend(norths, easts + 1)
            word.pop()

    extend(0, 0)
    return out


def path_rotation_covers(path: BallotPath) -> set[BallotPath]:
    """One rotation step: for each east step followed by a north step, swap
    it with the shortest following factor whose east deficit returns to
    zero (a translated m-ballot word)."""
    word, m = path.steps, path.m
    covers = set()
    for i in range(len(word) - 1):
        if word[i] == "E" and word[i + 1] == "N":
            deficit = 0
            for j in range(i + 1, len(word)):
                deficit += m if word[j] == "N" else -1
                if deficit == 0:
                    break
            rotated = word[:i] + word[i + 1:j + 1] + "E" + word[j + 1:]
            covers.add(BallotPath(m, rotated))
    return covers


def path_leq(lower: BallotPath, upper: BallotPath) -> bool:
    """Reachability of ``upper`` from ``lower`` by rotations."""
    if lower.m != upper.m or lower.n != upper.n:
        raise ValueError("paths must share m and size")
    if lower == upper:
        return True
    seen = {lower}
    queue = deque([lower])
    while queue:
        for cover in path_rotation_covers(queue.popleft()):
            if cover == upper:
                return True
            if cover not in seen:
                seen.add(cover)
                queue.append(cover)
    return False


class MAryTree:
    """Immutable tree whose internal nodes have a fixed number of children;
    a leaf has none."""

    __slots__ = ("children", "_hash")

    def __init__(self, children: tuple[MAryTree, ...] = ()):
        self.children = tuple(children)
        self._hash = hash(tuple(c._hash for c in self.children))

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __eq__(self, other) -> bool:
        if not isinstance(other, MAryTree):
            return NotImplemented
        return self._hash == other._hash and self.children == other.children

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.is_leaf:
            return "Leaf"
        return f"Node({', '.join(map(repr, self.children))})"


LEAF = MAryTree()


def path_to_mary_prefix(path: BallotPath) -> MAryTree:
    """The tree whose right-to-left prefix reading gives the path.

    Parses the word plus the dropped trailing east step; after each north
    step the m+1 children follow rightmost first.
    """
    word = path.steps + "E"
    arity = path.m + 1
    pos = 0

    def parse() -> MAryTree:
        nonlocal pos
        if pos >= len(word):
            raise ValueError("path word ends inside a subtree")
        step = word[pos]
        pos += 1
        if step == "E":
            return LEAF
        read = tuple(parse() for _ in range(arity))
        return MAryTree(read[::-1])

    tree = parse()
    if pos != len(word):
        raise ValueError(f"trailing steps at position {pos}")
    return tree


def mary_to_path_prefix(tree: MAryTree, m: int) -> BallotPath:
    """Inverse reading: emit N per node and E per leaf, children right to
    left, and drop the final east step."""
    out: list[str] = []

    def walk(t: MAryTree) -> None:
        if t.is_leaf:
            out.append("E")
            return
        if len(t.children) != m + 1:
            raise ValueError(f"expected {m + 1} children, got {len(t.children)}")
        out.append("N")
        for child in reversed(t.children):
            walk(child)

    walk(tree)
    assert out[-1] == "E"
    return BallotPath(m, "".join(out[:-1]))


def multilinear_Bm(polys: list[Polynomial]) -> Polynomial:
    """The chained slope form xy * f1 * D(f2 * D(... * D(fk)...)) on k
    arguments, with k-1 nested slope operators; a single argument gives
    xy * f1.  The m-Tamari recursion applies it to m+1 series."""
    if not polys:
        raise ValueError("the form needs at least one polynomial")
    if len(polys) == 1:
        return X * Y * polys[0]
    chain = polys[-1]
    for f in polys[-2:0:-1]:
        chain = f * delta(chain)
    return X * Y * polys[0] * delta(chain)


def phi_m_series(m: int, max_degree: int) -> Polynomial:
    """The m-Tamari interval series through y^max_degree, solving
    Phi = x + B(Phi, ..., Phi) with m+1 arguments by fixed-point iteration."""
    if m < 1:
        raise ValueError("slope parameter m must be at least 1")
    if max_degree < 0:
        raise ValueError("series order must be non-negative")
    phi = X
    for _ in range(max_degree + 1):
        phi = (X + multilinear_Bm([phi] * (m + 1))).truncate_y(max_degree)
    return phi


def mary_tamari_poly(tree: MAryTree) -> Polynomial:
    """Counting polynomial of a prefix-read tree: x on leaves, the chained
    slope form on each node's children in left-to-right order."""
    if tree.is_leaf:
        return X
    return multilinear_Bm([mary_tamari_poly(c) for c in tree.children])


def fuss_catalan(m: int, n: int) -> int:
    """Path count by dynamic programming over lattice points (independent
    of the path generator)."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    # ways[j] = paths with the current number of north steps and j east steps
    ways = [1] + [0] * (m * n)
    for i in range(1, n + 1):
        acc = 0
        for j in range(m * n + 1):
            acc += ways[j]
            ways[j] = acc if j <= m * i else 0
    return ways[m * n] if n else 1
