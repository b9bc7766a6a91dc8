"""The edge involution and the bijection onto increasing plane trees.

:func:`flip_edge` is an involution on plane trees that toggles the status of
one chosen edge while leaving the status of every other edge unchanged.  For
the edge e = (i, j) write A for the subtrees hanging off j's left siblings,
B for the subtrees of j's children and C for the subtrees of j's right
siblings.  The flip puts j in i's former position, gives j the children
roots(A) ++ [i] ++ roots(B), and gives i the children roots(C).  Edge ids
persist through the move: i's former parent edge now attaches to j, the A
edges now leave j, e itself now joins j to i, and the B and C edges are
untouched, as is everything strictly inside A, B and C.  Edge tags travel
with their ids.

:func:`to_increasing` flips, one after another, the improper edges of its
input (ids frozen up front, in first-descent order); the result is an
increasing plane tree on the same label set.  Flipped edges are tagged x,
all others y; with ``rooted=True`` the edges at vertex 1, which are never
improper, are tagged t instead.  :func:`from_increasing` inverts this by
flipping the x-tagged edges of a tagged increasing tree.  The flips involved
commute, so each map really is a bijection and the two are mutually inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tree import (
    IMPROPER_TAG,
    PROPER_TAG,
    ROOT_TAG,
    EdgeRef,
    Node,
    PlaneTree,
    edge_list,
    edge_path,
    has_canonical_labels,
    improper_edges,
    is_increasing,
)


@dataclass(frozen=True)
class Decomposition:
    """The five pieces a tree splits into at one edge."""

    parent: Node            # the edge's parent endpoint
    child: Node             # the edge's child endpoint
    edge: EdgeRef
    left: tuple             # (edge id, subtree) pairs on the child's left siblings
    below: tuple            # (edge id, subtree) pairs on the child's children
    right: tuple            # (edge id, subtree) pairs on the child's right siblings


def decompose(tree: PlaneTree, edge: EdgeRef) -> Decomposition:
    parent, idx = edge_path(tree.root, edge)[-1]
    _, child = parent.children[idx]
    return Decomposition(
        parent=parent,
        child=child,
        edge=edge,
        left=parent.children[:idx],
        below=child.children,
        right=parent.children[idx + 1:],
    )


def flip_edge(tree: PlaneTree, edge: EdgeRef) -> PlaneTree:
    """Apply the involution at one edge; a new tree, input untouched."""
    path = edge_path(tree.root, edge)
    parent, idx = path[-1]
    slots = parent.children
    eid, child = slots[idx]
    new_parent = Node(parent.label, slots[idx + 1:])
    built = Node(child.label,
                 slots[:idx] + ((eid, new_parent),) + child.children)
    for ancestor, at in reversed(path[:-1]):
        ch = ancestor.children
        built = Node(ancestor.label,
                     ch[:at] + ((ch[at][0], built),) + ch[at + 1:])
    return PlaneTree(built, tree.tags)


def to_increasing(tree: PlaneTree, rooted: bool = False) -> PlaneTree:
    """Map a labeled plane tree to a tagged increasing plane tree.

    Requires labels 1..n+1 and an untagged input.  ``rooted=True``
    additionally requires root label 1 and tags the edges at vertex 1
    with t instead of y.
    """
    if tree.is_tagged:
        raise ValueError("input tree is already tagged")
    if not has_canonical_labels(tree):
        raise ValueError("labels must be exactly 1..n+1")
    if rooted and tree.root.label != 1:
        raise ValueError("rooted mode requires root label 1")

    flips = improper_edges(tree)
    improper = set(flips)
    tags = {}
    for eid, p, c in edge_list(tree):
        if eid in improper:
            tags[eid] = IMPROPER_TAG
        elif rooted and (p == 1 or c == 1):
            tags[eid] = ROOT_TAG
        else:
            tags[eid] = PROPER_TAG

    out = PlaneTree(tree.root, tags)
    for eid in flips:
        out = flip_edge(out, eid)
    assert is_increasing(out)
    return out


def from_increasing(tree: PlaneTree) -> PlaneTree:
    """Invert :func:`to_increasing`; returns the untagged preimage."""
    if not is_increasing(tree):
        raise ValueError("input tree is not increasing")
    tags = tree.tags or {}
    edges = edge_list(tree)
    if len(tags) != len(edges):
        raise ValueError("every edge must carry a tag")
    root_label = tree.root.label
    for eid, p, c in edges:
        if tags[eid] == ROOT_TAG and root_label not in (p, c):
            raise ValueError("tag t is only allowed on edges at the root")

    out = PlaneTree(tree.root, tags)
    for eid, _, _ in edges:
        if tags[eid] == IMPROPER_TAG:
            out = flip_edge(out, eid)
    return PlaneTree(out.root, None)
