"""Cup diagrams and their encoding as marked spaced forests."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .weights import WEDGE, WeightDiagram

# A planar rooted tree is the tuple of its child subtrees, left to right.
Tree = tuple


@dataclass(frozen=True)
class CupDiagram:
    arcs: frozenset
    base: WeightDiagram

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def endpoints(self) -> set[int]:
        return {p for arc in self.arcs for p in arc}


@dataclass(frozen=True)
class Sector:
    interval: tuple[int, int]
    outer_arc: tuple[int, int]
    nested: tuple  # child Sectors directly under the outer arc

    def tree(self) -> Tree:
        return tuple(child.tree() for child in self.nested)

    def size(self) -> int:
        return 1 + sum(child.size() for child in self.nested)


@dataclass(frozen=True)
class MarkedSpacedForest:
    trees: tuple
    gaps: tuple  # (d_0, d_1, ..., d_{k-1})
    cross_positions: frozenset
    circle_positions: frozenset

    @property
    def d0(self) -> int:
        return self.gaps[0] if self.gaps else 0


def cup_diagram(d: WeightDiagram) -> CupDiagram:
    """Match every vee with the nearest free wedge to its right, innermost first."""
    arcs = set()
    if d.vees:
        stack = []
        p = min(d.vees)
        remaining = len(d.vees)
        while remaining or stack:
            lab = d.label(p)
            if lab == "v":
                stack.append(p)
                remaining -= 1
            elif lab == WEDGE and stack:
                arcs.add((stack.pop(), p))
            p += 1
    return CupDiagram(frozenset(arcs), d)


def _arc_forest(arcs) -> list[Sector]:
    roots: list = []
    stack: list = []  # (arc, children list)
    for a, b in sorted(arcs):
        while stack and stack[-1][0][1] < a:
            arc, kids = stack.pop()
            node = Sector(arc, arc, tuple(kids))
            (stack[-1][1] if stack else roots).append(node)
        stack.append(((a, b), []))
    while stack:
        arc, kids = stack.pop()
        node = Sector(arc, arc, tuple(kids))
        (stack[-1][1] if stack else roots).append(node)
    return roots


def sectors(c: CupDiagram) -> list[Sector]:
    return _arc_forest(c.arcs)


def mirror_tree(t: Tree) -> Tree:
    return tuple(mirror_tree(child) for child in reversed(t))


def _count(t: Tree) -> int:
    return 1 + sum(_count(ch) for ch in t)


def to_spaced_forest(c: CupDiagram) -> MarkedSpacedForest:
    """Encode ``c`` as a marked spaced forest.

    ``d_i`` (i >= 1) counts the non-core positions strictly between sectors i
    and i+1.  ``d_0`` is normalised so that the trivial weight of every
    gl(m|n) sits at 0 and the mirror formula for duals holds exactly:
    ``d_0 = a_1 + (#arcs - 1) + #{cores left of b_k} - #circles``.
    """
    base = c.base
    secs = sectors(c)
    if not secs:
        return MarkedSpacedForest((), (), base.crosses, base.circles)
    cores = base.cores
    gaps = []
    a1, bk = secs[0].interval[0], secs[-1].interval[1]
    gaps.append(a1 + len(c.arcs) - 1 + sum(1 for q in cores if q < bk) - len(base.circles))
    for left, right in zip(secs, secs[1:]):
        lo, hi = left.interval[1], right.interval[0]
        gaps.append(sum(1 for p in range(lo + 1, hi) if p not in cores))
    return MarkedSpacedForest(tuple(s.tree() for s in secs), tuple(gaps), base.crosses, base.circles)


def forest_mirror(f: MarkedSpacedForest, r: int) -> MarkedSpacedForest:
    """Forest of the dual weight; ``r = m - n``."""
    if not f.trees:
        return MarkedSpacedForest((), (), frozenset(1 - r - a for a in f.cross_positions),
                                  frozenset(1 - r - b for b in f.circle_positions))
    k = len(f.trees)
    d = f.gaps
    new = [-sum(d)] + [d[k - i] for i in range(1, k)]
    return MarkedSpacedForest(
        tuple(mirror_tree(t) for t in reversed(f.trees)),
        tuple(new),
        frozenset(1 - r - a for a in f.cross_positions),
        frozenset(1 - r - b for b in f.circle_positions),
    )


def _layout(trees, gaps, a1, cores):
    """Place the trees starting at ``a1``; returns (arcs, last position)."""
    arcs = []
    pos = a1

    def next_free(p):
        while p in cores:
            p += 1
        return p

    def place(t):
        nonlocal pos
        left = next_free(pos)
        pos = left + 1
        for child in t:
            place(child)
        right = next_free(pos)
        pos = right + 1
        arcs.append((left, right))

    for i, t in enumerate(trees):
        if i:
            for _ in range(gaps[i]):
                pos = next_free(pos) + 1
        place(t)
    return arcs, pos - 1


def from_spaced_forest(f: MarkedSpacedForest) -> CupDiagram:
    """Inverse of :func:`to_spaced_forest`."""
    cores = f.cross_positions | f.circle_positions
    nv = sum(_count(t) for t in f.trees)
    m, n = nv + len(f.cross_positions), nv + len(f.circle_positions)
    if not f.trees:
        base = WeightDiagram(frozenset(), f.cross_positions, f.circle_positions, m, n)
        return CupDiagram(frozenset(), base)
    # a_1 + #{cores < b_k(a_1)} is strictly increasing in a_1, so search outward
    target = f.gaps[0] - nv + 1 + len(f.circle_positions)
    lo = target - len(cores) - 1
    for a1 in range(lo, target + 1):
        if a1 in cores:
            continue
        arcs, bk = _layout(f.trees, f.gaps, a1, cores)
        if a1 + sum(1 for q in cores if q < bk) == target:
            vees = frozenset(a for a, _ in arcs)
            base = WeightDiagram(vees, f.cross_positions, f.circle_positions, m, n)
            return CupDiagram(frozenset(arcs), base)
    raise ValidationError("spaced forest does not correspond to a cup diagram")


def is_oriented(nu: CupDiagram, lam: WeightDiagram) -> bool:
    """Check whether ``nu``'s unlabelled cups carry a valid orientation by ``lam``."""
    if nu.base.crosses != lam.crosses or nu.base.circles != lam.circles:
        return False
    if len(nu.base.vees) != len(lam.vees):
        return False
    for a, b in nu.arcs:
        if lam.is_core(a) or lam.is_core(b):
            return False
        if (a in lam.vees) == (b in lam.vees):
            return False
    return True
