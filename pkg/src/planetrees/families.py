"""Exhaustive enumeration and uniform sampling of the three tree families.

Families, for a given number of edges n (labels drawn from 1..n+1):

* labeled plane trees, counted by (n+1)! C_n = 2^n (2n-1)!!,
* labeled plane trees whose root is labeled 1, counted by n! C_n,
* increasing plane trees (every edge goes small to large), counted by
  (2n-1)!!.

All enumerators are streaming generators: memory stays proportional to one
tree.  Shapes come from the first-subtree decomposition (a shape with n
edges is a first child's subtree with k edges plus a remaining tree with
n-1-k edges), labelings are the lexicographic permutations assigned to
vertices in depth-first order, and increasing trees are grown by inserting
the next label into each of the 2m+1 child slots of a tree with m edges.
Removing the largest label is deterministic, so every increasing tree has
exactly one insertion history; choosing slots uniformly at random therefore
samples uniformly.  Uniform labeled trees combine a uniform shape (random
balanced word via the cycle rotation trick) with a uniform labeling.

The bounds below are where exhaustive work stops being a desk-scale job;
the polynomial layer and the command line refuse larger n unless forced.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .tree import Node, PlaneTree, preorder

MAX_LABELED_EDGES = 6      # |labeled family| at 6 is 665,280
MAX_INCREASING_EDGES = 7   # |increasing family| at 7 is 135,135


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def odd_double_factorial(n: int) -> int:
    """Product of the first n odd numbers, 1 * 3 * ... * (2n-1); 1 for n = 0."""
    out = 1
    for k in range(3, 2 * n, 2):
        out *= k
    return out


@dataclass(frozen=True)
class FamilyCount:
    n: int
    labeled: int
    root_one: int
    increasing: int
    catalan: int


def family_count(n: int) -> FamilyCount:
    c = catalan(n)
    return FamilyCount(
        n=n,
        labeled=math.factorial(n + 1) * c,
        root_one=math.factorial(n) * c,
        increasing=odd_double_factorial(n),
        catalan=c,
    )


# ---- shapes ----

def plane_shapes(n: int) -> Iterator[tuple]:
    """All plane tree shapes with n edges, as nested tuples of child shapes."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield ()
        return
    for k in range(n):
        for first in plane_shapes(k):
            for rest in plane_shapes(n - 1 - k):
                yield (first,) + rest


def shape_arrays(shape: tuple) -> tuple[list[int], list[list[int]]]:
    """Parent and children arrays of a shape, vertices indexed in preorder."""
    par: list[int] = []
    kids: list[list[int]] = []
    stack = [(shape, -1)]
    while stack:
        sub, p = stack.pop()
        v = len(par)
        par.append(p)
        kids.append([])
        if p >= 0:
            kids[p].append(v)
        for child in reversed(sub):
            stack.append((child, v))
    return par, kids


def build_tree(kids: list[list[int]], labels) -> PlaneTree:
    """Assemble a tree from preorder children arrays and per-vertex labels.

    The edge down to preorder vertex v gets id v-1, which is exactly the
    first-descent numbering the parser uses.
    """
    count = len(kids)
    nodes: list[Node] = [None] * count  # type: ignore[list-item]
    for v in range(count - 1, -1, -1):
        nodes[v] = Node(labels[v], tuple((c - 1, nodes[c]) for c in kids[v]))
    return PlaneTree(nodes[0])


# ---- exhaustive enumeration ----

def labeled_trees(n: int) -> Iterator[PlaneTree]:
    """All labeled plane trees with n edges, labels 1..n+1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for shape in plane_shapes(n):
        _, kids = shape_arrays(shape)
        for labels in permutations(range(1, n + 2)):
            yield build_tree(kids, labels)


def root_one_trees(n: int) -> Iterator[PlaneTree]:
    """All labeled plane trees with n edges whose root is labeled 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for shape in plane_shapes(n):
        _, kids = shape_arrays(shape)
        for rest in permutations(range(2, n + 2)):
            yield build_tree(kids, (1,) + rest)


def insertion_slots(tree: PlaneTree) -> int:
    """Number of child positions available for a new leaf: 2n+1 for n edges."""
    return sum(len(node.children) + 1 for node in tree.nodes())


def _subtree_edge_counts(root: Node) -> dict[int, int]:
    sizes: dict[int, int] = {}
    order = list(preorder(root))
    for node in reversed(order):
        sizes[id(node)] = sum(sizes[id(c)] + 1 for _, c in node.children)
    return sizes


def _insert_leaf(root: Node, slot: int, label: int, eid: int) -> Node:
    """New tree with a leaf in the given slot.

    Slots are numbered depth-first: vertex v with d children owns slots
    0..d (positions among its children) before any slot in its subtrees.
    """
    sizes = _subtree_edge_counts(root)
    path: list[tuple[Node, int]] = []
    node = root
    pos = slot
    while True:
        d = len(node.children)
        if pos <= d:
            grown = Node(node.label,
                         node.children[:pos] + ((eid, Node(label)),)
                         + node.children[pos:])
            for parent, at in reversed(path):
                ch = parent.children
                grown = Node(parent.label,
                             ch[:at] + ((ch[at][0], grown),) + ch[at + 1:])
            return grown
        pos -= d + 1
        for at, (_, child) in enumerate(node.children):
            span = 2 * sizes[id(child)] + 1
            if pos < span:
                path.append((node, at))
                node = child
                break
            pos -= span
        else:
            raise ValueError("slot out of range")


def _canonical_ids(root: Node) -> Node:
    # rebuild so edge ids follow first-descent order, as the parser assigns
    # them; leaf insertion numbers edges by age instead
    order = list(preorder(root))
    index = {id(node): i for i, node in enumerate(order)}
    rebuilt: dict[int, Node] = {}
    for node in reversed(order):
        rebuilt[id(node)] = Node(
            node.label,
            tuple((index[id(child)] - 1, rebuilt[id(child)])
                  for _, child in node.children))
    return rebuilt[id(root)]


def increasing_trees(n: int) -> Iterator[PlaneTree]:
    """All increasing plane trees with n edges, grown by leaf insertion."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield PlaneTree(Node(1))
        return
    for prev in increasing_trees(n - 1):
        for slot in range(2 * n - 1):
            yield PlaneTree(_canonical_ids(
                _insert_leaf(prev.root, slot, n + 1, n - 1)))


# ---- uniform sampling ----

def _random_shape_arrays(n: int, rng: random.Random) -> list[list[int]]:
    # a uniform word of n up-steps and n+1 down-steps, rotated to start just
    # after its first prefix-sum minimum, is a uniform balanced word plus a
    # final down-step (cycle lemma: each rotation class of size 2n+1 holds
    # exactly one such word)
    steps = [1] * n + [-1] * (n + 1)
    rng.shuffle(steps)
    total = 0
    low = 2
    cut = -1
    for i, st in enumerate(steps):
        total += st
        if total < low:
            low = total
            cut = i
    word = steps[cut + 1:] + steps[:cut + 1]
    assert word[-1] == -1
    kids: list[list[int]] = [[]]
    stack = [0]
    for st in word[:-1]:
        if st == 1:
            v = len(kids)
            kids.append([])
            kids[stack[-1]].append(v)
            stack.append(v)
        else:
            stack.pop()
    return kids


def _random_labeled_tree(n: int, rng: random.Random) -> PlaneTree:
    kids = _random_shape_arrays(n, rng)
    labels = list(range(1, n + 2))
    rng.shuffle(labels)
    return build_tree(kids, labels)


def _random_increasing_tree(n: int, rng: random.Random) -> PlaneTree:
    root = Node(1)
    for m in range(1, n + 1):
        slot = rng.randrange(2 * m - 1)
        root = _insert_leaf(root, slot, m + 1, m - 1)
    return PlaneTree(_canonical_ids(root))


def sample_labeled_tree(n: int, seed: int) -> PlaneTree:
    """One uniform labeled plane tree with n edges; deterministic in seed."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _random_labeled_tree(n, random.Random(seed))


def sample_increasing_tree(n: int, seed: int) -> PlaneTree:
    """One uniform increasing plane tree with n edges; deterministic in seed."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _random_increasing_tree(n, random.Random(seed))


def sample_labeled_trees(n: int, seed: int, count: int) -> Iterator[PlaneTree]:
    rng = random.Random(seed)
    for _ in range(count):
        yield _random_labeled_tree(n, rng)


def sample_increasing_trees(n: int, seed: int, count: int) -> Iterator[PlaneTree]:
    rng = random.Random(seed)
    for _ in range(count):
        yield _random_increasing_tree(n, rng)
