"""Stirling permutations and their walk bijection with increasing trees.

A Stirling permutation of order n is an arrangement of the multiset
{1,1,2,2,...,n,n} in which everything between the two copies of any value
exceeds that value.  Equivalently the word is a well-nested string of
brackets labeled 1..n whose labels increase going into any open bracket.

The bijection walks an increasing tree depth first and records, on both
the way down into a child and the way back up, the child's label minus
one.  Each child of the root opens and closes at top level, so the walk
splits into as many nested blocks as the root has children; a block of a
Stirling permutation is a maximal balanced factor.  The inverse reads the
word left to right: the first copy of v opens a child labeled v+1, the
second copy closes it.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .tree import Node, PlaneTree, has_canonical_labels, is_increasing


def parse_permutation(text: str) -> tuple[int, ...]:
    """Whitespace-separated positive integers."""
    parts = text.split()
    if not parts:
        raise ValueError("empty permutation")
    values = []
    for part in parts:
        try:
            v = int(part)
        except ValueError:
            raise ValueError(f"not an integer: {part!r}") from None
        if v < 1:
            raise ValueError(f"values must be positive, got {v}")
        values.append(v)
    return tuple(values)


def format_permutation(seq: Sequence[int]) -> str:
    return " ".join(str(v) for v in seq)


def is_stirling(seq: Sequence[int]) -> bool:
    """True iff seq is a Stirling permutation of {1,1,...,n,n} for some n."""
    if len(seq) % 2:
        return False
    n = len(seq) // 2
    if Counter(seq) != Counter({v: 2 for v in range(1, n + 1)}):
        return False
    stack: list[int] = []
    for v in seq:
        if stack and stack[-1] == v:
            stack.pop()            # second copy closes
        else:
            if stack and v < stack[-1]:
                return False       # descent into an open value
            stack.append(v)
    return not stack


def blocks(seq: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal balanced factors of a Stirling permutation, as half-open
    index ranges."""
    if not is_stirling(seq):
        raise ValueError("not a Stirling permutation")
    out = []
    depth = 0
    start = 0
    seen: set[int] = set()
    for i, v in enumerate(seq):
        if v in seen:
            depth -= 1
            if depth == 0:
                out.append((start, i + 1))
                start = i + 1
                seen.clear()
        else:
            seen.add(v)
            depth += 1
    return out


def tree_to_stirling(tree: PlaneTree) -> tuple[int, ...]:
    """Depth-first walk of an increasing tree with labels 1..n+1; records
    child label minus one on the way down and again on the way up."""
    if tree.is_tagged:
        raise ValueError("expected an untagged tree")
    if not has_canonical_labels(tree):
        raise ValueError("labels must be exactly 1..n+1")
    if not is_increasing(tree):
        raise ValueError("not an increasing tree")
    word: list[int] = []
    stack: list = [iter(tree.root.children)]
    spine: list[int] = []
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            if spine:
                word.append(spine.pop())
            continue
        _, child = step
        word.append(child.label - 1)
        spine.append(child.label - 1)
        stack.append(iter(child.children))
    return tuple(word)


def stirling_to_tree(seq: Sequence[int]) -> PlaneTree:
    """Inverse walk: first copy of v opens a child labeled v+1 under the
    current vertex, second copy closes it."""
    if not is_stirling(seq):
        raise ValueError("not a Stirling permutation")
    # frames of (label, children-so-far); edge ids follow the walk, which
    # is exactly first-descent order
    frames: list[tuple[int, list]] = [(1, [])]
    open_labels: list[int] = []
    eid = 0
    for v in seq:
        label = v + 1
        if open_labels and open_labels[-1] == label:
            open_labels.pop()
            closed_label, closed_children = frames.pop()
            node = Node(closed_label, tuple(closed_children))
            frames[-1][1][-1] = (frames[-1][1][-1][0], node)
        else:
            frames[-1][1].append((eid, None))
            frames.append((label, []))
            open_labels.append(label)
            eid += 1
    root_label, root_children = frames[0]
    return PlaneTree(Node(root_label, tuple(root_children)))


def stirling_permutations(n: int):
    """All Stirling permutations of order n, built by inserting the pair
    ``n n`` into every gap of each permutation of order n-1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield ()
        return
    for smaller in stirling_permutations(n - 1):
        pair = (n, n)
        for gap in range(len(smaller) + 1):
            yield smaller[:gap] + pair + smaller[gap:]


def block_table(n: int) -> Counter:
    """Distribution of the block count over all order-n permutations."""
    return Counter(len(blocks(seq)) for seq in stirling_permutations(n))
