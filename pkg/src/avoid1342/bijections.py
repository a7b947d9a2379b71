"""Constructive correspondences between 1342-avoiding permutations and labeled trees.

Three maps, each with an explicit inverse:

* ``f_forward`` / ``f_inverse`` — 1342-avoiders starting with 1  <->  valid
  labelings of the single-path shape;
* ``shape_to_perm`` / ``perm_to_shape`` — 132-avoiders ending with n  <->
  all-zero trees (pure shapes);
* ``F_forward`` / ``F_inverse`` — indecomposable 1342-avoiders  <->  all valid
  labeled trees on n nodes.  ``forest_forward`` extends this to every
  1342-avoider via the block decomposition, one tree per block.

The labels of ``F_forward`` are driven by two relations on entries: ``beats``
(an earlier smaller entry completes a 132-pattern) and ``reaches`` (its
transitive closure along increasing positions).  Entries are attached to tree
nodes by the children-first reading order of :mod:`avoid1342.trees`.

Everything here is pure; exhaustive verification over permutation or tree
ranges can be partitioned freely across workers.
"""
from __future__ import annotations

from .errors import DomainError, ReconstructionError
from .perms import (
    Permutation,
    _block_spans,
    _is_indecomposable,
    compose_blocks,
    contains,
    decompose,
    left_to_right_minima,
    normalize,
)
from .trees import (
    LabeledPlaneTree,
    classify_shape,
    normalize_tree,
    postorder_positions,
    subtree_size,
    validate_beta01,
)

_PATTERN_1342 = Permutation((1, 3, 4, 2))
_PATTERN_132 = Permutation((1, 3, 2))


# ---------------------------------------------------------------------------
# beats / reaches
# ---------------------------------------------------------------------------

def _beats_successors(vals: tuple[int, ...]) -> list[list[int]]:
    """0-based adjacency: j in succ[i] iff entry i beats entry j.

    Entry i beats entry j (i < j) iff some h < i has p_h < p_j < p_i, which is
    equivalent to min(p_1..p_{i-1}) < p_j < p_i.
    """
    n = len(vals)
    succ: list[list[int]] = [[] for _ in range(n)]
    prefix_min = n + 1
    for i in range(n):
        if i > 0:
            succ[i] = [j for j in range(i + 1, n) if prefix_min < vals[j] < vals[i]]
        prefix_min = min(prefix_min, vals[i])
    return succ


def _max_reach(vals: tuple[int, ...]) -> list[int]:
    """For each 0-based position, the largest position it reaches (-1 if none)."""
    succ = _beats_successors(vals)
    out = [-1] * len(vals)
    for i in range(len(vals) - 1, -1, -1):
        for j in succ[i]:
            out[i] = max(out[i], j, out[j])
    return out


def beats(p: Permutation, i: int, j: int) -> bool:
    """True iff the entry at 1-based position i beats the one at position j.

    Requires i < j to hold for a beat; i >= j simply returns False.
    """
    n = len(p)
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"positions must lie in 1..{n}")
    if i >= j:
        return False
    vals = p.values
    prefix_min = min(vals[: i - 1], default=n + 1)
    return prefix_min < vals[j - 1] < vals[i - 1]


def reaches(p: Permutation, i: int, k: int) -> bool:
    """True iff (i, k) lies in the transitive closure of beats (1-based positions).

    Every beaten entry is also reached; positions must strictly increase along
    the chain, so k <= i is always False.
    """
    n = len(p)
    if not (1 <= i <= n and 1 <= k <= n):
        raise DomainError(f"positions must lie in 1..{n}")
    if k <= i:
        return False
    succ = _beats_successors(p.values)
    frontier = [i - 1]
    seen = set(frontier)
    while frontier:
        nxt = []
        for a in frontier:
            for b in succ[a]:
                if b == k - 1:
                    return True
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return False


# ---------------------------------------------------------------------------
# the single-path map f
# ---------------------------------------------------------------------------

def f_forward(p: Permutation) -> LabeledPlaneTree:
    """Map a 1342-avoider starting with 1 to a labeling of the single-path shape.

    Counting from the leaf, node i gets the number of entries at positions
    <= i that exceed at least one later entry; the root repeats the label
    below it.

    >>> str(f_forward(Permutation.from_text("14325")))
    '0(0(2(1(0))))'
    """
    n = len(p)
    if n < 1:
        raise DomainError("the map needs a nonempty permutation")
    if p.values[0] != 1:
        raise DomainError("the single-path map requires first entry 1")
    if contains(p, _PATTERN_1342):
        raise DomainError("permutation contains 1342")
    vals = p.values
    labels = []
    for i in range(1, n):
        suffix_min = min(vals[i:])
        labels.append(sum(1 for j in range(i) if vals[j] > suffix_min))
    labels.append(labels[-1] if labels else 0)
    tree = None
    for label in labels:  # leaf first, root last
        tree = LabeledPlaneTree(label, (tree,) if tree is not None else ())
    return tree


def f_inverse(tree: LabeledPlaneTree) -> Permutation:
    """Invert ``f_forward`` on a single-path valid tree.

    The largest remaining value sits where the run of strictly positive labels
    ending at the last node starts (at the last node itself when its label is
    0).  Delete that node, decrement the labels after it, restore the root
    condition if the last node went away, and repeat.
    """
    if not classify_shape(tree).single_path:
        raise DomainError("tree is not a single path")
    if not validate_beta01(tree):
        raise DomainError("invalid labeled tree")
    labels = [node.label for node in postorder_positions(tree)]  # leaf -> root
    n = len(labels)
    work = [(label, pos) for pos, label in enumerate(labels, start=1)]
    out = [0] * n
    for value in range(n, 0, -1):
        if work[-1][0] > 0:
            i = len(work) - 1
            while i > 0 and work[i - 1][0] > 0:
                i -= 1
        else:
            i = len(work) - 1
        out[work[i][1] - 1] = value
        deleted_last = i == len(work) - 1
        work = work[:i] + [(label - 1, pos) for label, pos in work[i + 1:]]
        if deleted_last and len(work) >= 2:
            work[-1] = (work[-2][0], work[-1][1])
        elif deleted_last and len(work) == 1:
            work[-1] = (0, work[-1][1])
    return Permutation(tuple(out))


# ---------------------------------------------------------------------------
# the zero-tree map (shapes <-> 132-avoiders ending with n)
# ---------------------------------------------------------------------------

def shape_to_perm(tree: LabeledPlaneTree) -> Permutation:
    """Map an all-zero tree to the 132-avoiding permutation ending with n.

    Branches become blocks of consecutive values, leftmost branch largest,
    with n appended for the root.

    >>> str(shape_to_perm(LabeledPlaneTree(0, (LabeledPlaneTree(0), LabeledPlaneTree(0)))))
    '213'
    """
    if not classify_shape(tree).all_zero_labels:
        raise DomainError("tree has a nonzero label")
    return Permutation(tuple(_shape_to_vals(tree)))


def _shape_to_vals(tree: LabeledPlaneTree) -> list[int]:
    n = subtree_size(tree)
    sizes = [subtree_size(c) for c in tree.children]
    out: list[int] = []
    for i, child in enumerate(tree.children):
        offset = sum(sizes[i + 1:])
        out.extend(v + offset for v in _shape_to_vals(child))
    out.append(n)
    return out


def perm_to_shape(p: Permutation) -> LabeledPlaneTree:
    """Invert ``shape_to_perm``: block boundaries of p minus its last entry become branches."""
    if contains(p, _PATTERN_132):
        raise DomainError("permutation contains 132")
    return _vals_to_shape(p.values)


def _vals_to_shape(vals: tuple[int, ...]) -> LabeledPlaneTree:
    n = len(vals)
    if n == 0:
        raise DomainError("the shape map needs a nonempty permutation")
    if vals[-1] != max(vals):
        raise DomainError("permutation does not end with its largest entry")
    kids = []
    prefix = vals[:-1]
    for a, b in _block_spans(prefix):
        kids.append(_vals_to_shape(prefix[a:b]))
    return LabeledPlaneTree(0, tuple(kids))


# ---------------------------------------------------------------------------
# the full bijection F
# ---------------------------------------------------------------------------

def F_forward(p: Permutation) -> LabeledPlaneTree:
    """Map an indecomposable 1342-avoider to a valid labeled tree on n nodes.

    Shape: the zero tree of the normalization N(p).  Entries attach to nodes
    by reading position.  Each non-root node's label counts the descendants
    (itself included) whose entry reaches some entry past the node's own
    position; the root's label is the sum of its children's labels.

    >>> str(F_forward(Permutation.from_text("361542")))
    '3(3(1(0) 1(0)))'
    """
    n = len(p)
    if n < 1:
        raise DomainError("the bijection needs a nonempty permutation")
    if contains(p, _PATTERN_1342):
        raise DomainError("permutation contains 1342")
    if not _is_indecomposable(p.values):
        raise DomainError("permutation is decomposable")

    shape = perm_to_shape(normalize(p))
    sizes = [subtree_size(node) for node in postorder_positions(shape)]
    max_reach = _max_reach(p.values)

    labels = [0] * (n + 1)  # 1-based by reading position; index n fixed below
    for pos in range(1, n):
        low = pos - sizes[pos - 1] + 1
        labels[pos] = sum(1 for j in range(low, pos + 1) if max_reach[j - 1] > pos - 1)

    counter = [0]

    def rebuild(node: LabeledPlaneTree) -> LabeledPlaneTree:
        kids = tuple(rebuild(c) for c in node.children)
        counter[0] += 1
        pos = counter[0]
        label = labels[pos] if pos < n else sum(k.label for k in kids)
        return LabeledPlaneTree(label, kids)

    result = rebuild(shape)
    if not validate_beta01(result):  # always holds on the stated domain; failure is a bug
        raise ReconstructionError(f"forward map produced an invalid tree for {p}")
    return result


class _Node:
    """Mutable working node for the reconstruction; ``pos`` is the original position."""

    __slots__ = ("label", "children", "parent", "pos")

    def __init__(self, label: int):
        self.label = label
        self.children: list["_Node"] = []
        self.parent: "_Node | None" = None
        self.pos = 0


def _build_nodes(tree: LabeledPlaneTree) -> tuple[_Node, list[_Node]]:
    order: list[_Node] = []

    def rec(t: LabeledPlaneTree) -> _Node:
        node = _Node(t.label)
        for c in t.children:
            child = rec(c)
            child.parent = node
            node.children.append(child)
        order.append(node)
        node.pos = len(order)
        return node

    return rec(tree), order


def _live_postorder(root: _Node) -> list[_Node]:
    out: list[_Node] = []

    def rec(node: _Node):
        for c in node.children:
            rec(c)
        out.append(node)

    rec(root)
    return out


def F_inverse(tree: LabeledPlaneTree) -> Permutation:
    """Recover the unique indecomposable 1342-avoider mapping to ``tree``.

    The zero shape pins the left-to-right minima (they live on the leaves), and
    the remaining values are placed largest-first: each goes to the leftmost
    node whose own label and all labels strictly between it and the current
    root are positive, or to the current root when no such node exists.  A
    placed node is deleted (children promoted in place), the labels of its
    remaining ancestors drop by one, and whenever the leftover content splits
    into blocks -- detectable from the minima alone -- each block continues as
    an independent subtree with its own run of consecutive values.
    """
    if not validate_beta01(tree):
        raise DomainError("invalid labeled tree")
    n = subtree_size(tree)
    root, order = _build_nodes(tree)

    base = shape_to_perm(normalize_tree(tree))
    minima_positions = [pos for pos, _ in left_to_right_minima(base).minima]
    assigned: dict[_Node, int] = {}
    for node in order:
        if not node.children:
            assigned[node] = base.values[node.pos - 1]
    if sorted(node.pos for node in assigned) != minima_positions:
        raise ReconstructionError("leaves do not line up with the left-to-right minima")

    def solve(sub_root: _Node, values: list[int]) -> None:
        """Place ``values`` (descending, minima included) onto the subtree."""
        while True:
            live = _live_postorder(sub_root)
            if len(live) != len(values):
                raise ReconstructionError("node/value count mismatch")
            if len(live) == 1:
                node = live[0]
                if node in assigned:
                    if assigned[node] != values[0]:
                        raise ReconstructionError("pre-assigned minimum clashes with its block")
                else:
                    assigned[node] = values[0]
                return

            largest = values[0]
            if any(assigned.get(node) == largest for node in live):
                raise ReconstructionError("largest remaining value is a minimum")

            candidate = None
            for node in live:
                if node is sub_root or node.label <= 0:
                    continue
                ancestor = node.parent
                while ancestor is not sub_root and ancestor.label > 0:
                    ancestor = ancestor.parent
                if ancestor is sub_root:
                    candidate = node
                    break

            if candidate is not None:
                assigned[candidate] = largest
                values = values[1:]
                parent = candidate.parent
                index = parent.children.index(candidate)
                for c in candidate.children:
                    c.parent = parent
                parent.children[index: index + 1] = candidate.children
                ancestor = parent
                while ancestor is not sub_root:
                    ancestor.label -= 1
                    ancestor = ancestor.parent
                forest = [sub_root]
            else:
                # no positive path: the largest value sits at the current root
                assigned[sub_root] = largest
                values = values[1:]
                forest = list(sub_root.children)
                for c in forest:
                    c.parent = None
                if not forest:
                    return

            # Split the leftover content wherever the class forces a cut: a cut
            # after position c is valid iff the running minimum there equals the
            # c-th largest remaining value, and the minima are already placed.
            nodes: list[_Node] = []
            for t in forest:
                nodes.extend(_live_postorder(t))
            total = len(nodes)
            blocks: list[tuple[int, int]] = []
            start = 0
            running_min: int | None = None
            for c in range(1, total + 1):
                node = nodes[c - 1]
                if not node.children:
                    v = assigned[node]
                    running_min = v if running_min is None or v < running_min else running_min
                if running_min is None:
                    raise ReconstructionError("reading order does not start at a leaf")
                if running_min == values[c - 1]:
                    blocks.append((start, c))
                    start = c
            if start != total:
                raise ReconstructionError("cut decomposition did not cover the content")

            if len(blocks) == 1 and len(forest) == 1:
                sub_root = forest[0]
                continue

            subproblems = []
            offset = 0
            for a, b in blocks:
                block_nodes = nodes[a:b]
                block_set = set(block_nodes)
                tops = [nd for nd in block_nodes if nd.parent is None or nd.parent not in block_set]
                if len(tops) != 1:
                    raise ReconstructionError(f"block with {len(tops)} components")
                top = tops[0]
                if top.parent is not None:
                    top.parent.children.remove(top)
                    top.parent = None
                chunk = values[offset: offset + len(block_nodes)]
                offset += len(block_nodes)
                for nd in block_nodes:
                    if not nd.children and assigned[nd] not in chunk:
                        raise ReconstructionError("minimum fell outside its value block")
                subproblems.append((top, chunk))
            for top, chunk in subproblems:
                solve(top, chunk)
            return

    solve(root, list(range(n, 0, -1)))

    out = [0] * n
    for node, value in assigned.items():
        out[node.pos - 1] = value
    return Permutation(tuple(out))


# ---------------------------------------------------------------------------
# forests: all 1342-avoiders
# ---------------------------------------------------------------------------

def forest_forward(p: Permutation) -> list[LabeledPlaneTree]:
    """Map any 1342-avoider to the list of trees of its indecomposable blocks.

    >>> [str(t) for t in forest_forward(Permutation.from_text("312"))]
    ['0', '0(0)']
    """
    if contains(p, _PATTERN_1342):
        raise DomainError("permutation contains 1342")
    return [F_forward(block) for block in decompose(p)]


def forest_inverse(trees: list[LabeledPlaneTree]) -> Permutation:
    """Reassemble a 1342-avoider from per-block trees (descending value offsets)."""
    return compose_blocks([F_inverse(t) for t in trees])
