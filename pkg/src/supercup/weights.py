"""Dominant weights of GL(m|n) and their weight diagrams.

A weight diagram labels every integer with one of ``v`` (vee), ``^`` (wedge),
``x`` (cross) or ``o`` (circle).  Only the finitely many non-wedge labels are
stored; every other integer is a wedge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError, ValidationError

VEE, WEDGE, CROSS, CIRCLE = "v", "^", "x", "o"


def _first_increase(seq):
    for i in range(len(seq) - 1):
        if seq[i] < seq[i + 1]:
            return i + 1
    return None


@dataclass(frozen=True, order=True)
class SuperWeight:
    """Highest weight ``(top | bottom)`` of an irreducible GL(m|n)-module."""

    m: int
    n: int
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(int(a) for a in self.top))
        object.__setattr__(self, "bottom", tuple(int(b) for b in self.bottom))
        if self.m < 0 or self.n < 0:
            raise ValidationError(f"gl({self.m}|{self.n}): ranks must be non-negative")
        if len(self.top) != self.m or len(self.bottom) != self.n:
            raise ValidationError(
                f"gl({self.m}|{self.n}) needs {self.m}+{self.n} entries, "
                f"got {len(self.top)}+{len(self.bottom)}"
            )
        i = _first_increase(self.top)
        if i is not None:
            raise ValidationError(f"weight is not dominant: top entries increase at index {i + 1}")
        i = _first_increase(self.bottom)
        if i is not None:
            raise ValidationError(f"weight is not dominant: bottom entries increase at index {i + 1}")

    @property
    def r(self) -> int:
        return self.m - self.n

    def twist(self, k: int) -> "SuperWeight":
        """Tensor with Ber^k: add k to the top entries, subtract it from the bottom ones."""
        return SuperWeight(self.m, self.n, tuple(a + k for a in self.top), tuple(b - k for b in self.bottom))

    def __str__(self):
        top = ",".join(map(str, self.top))
        bottom = ",".join(map(str, self.bottom))
        return f"gl({self.m}|{self.n}) [{top} | {bottom}]"


def trivial(m: int, n: int) -> SuperWeight:
    return SuperWeight(m, n, (0,) * m, (0,) * n)


def berezinian(m: int, n: int, k: int = 1) -> SuperWeight:
    return trivial(m, n).twist(k)


@dataclass(frozen=True)
class WeightDiagram:
    vees: frozenset
    crosses: frozenset = field(default_factory=frozenset)
    circles: frozenset = field(default_factory=frozenset)
    m: int = 0
    n: int = 0

    def __post_init__(self):
        for name in ("vees", "crosses", "circles"):
            object.__setattr__(self, name, frozenset(int(p) for p in getattr(self, name)))
        if self.vees & self.crosses or self.vees & self.circles or self.crosses & self.circles:
            raise ValidationError("weight diagram labels overlap")
        if len(self.vees) + len(self.crosses) != self.m or len(self.vees) + len(self.circles) != self.n:
            raise ValidationError(
                f"diagram with {len(self.vees)} v, {len(self.crosses)} x, {len(self.circles)} o "
                f"does not describe a weight of gl({self.m}|{self.n})"
            )

    def label(self, p: int) -> str:
        if p in self.vees:
            return VEE
        if p in self.crosses:
            return CROSS
        if p in self.circles:
            return CIRCLE
        return WEDGE

    @property
    def cores(self) -> frozenset:
        return self.crosses | self.circles

    def is_core(self, p: int) -> bool:
        return p in self.crosses or p in self.circles

    def support(self) -> frozenset:
        return self.vees | self.crosses | self.circles

    def relabel(self, changes: dict) -> "WeightDiagram":
        """Return a copy with the labels at the given positions replaced.

        The result keeps ``m`` and ``n`` from the new label counts.
        """
        sets = {VEE: set(self.vees), CROSS: set(self.crosses), CIRCLE: set(self.circles)}
        for p in changes:
            for s in sets.values():
                s.discard(p)
        for p, lab in changes.items():
            if lab != WEDGE:
                sets[lab].add(p)
        v, x, o = sets[VEE], sets[CROSS], sets[CIRCLE]
        return WeightDiagram(frozenset(v), frozenset(x), frozenset(o), len(v) + len(x), len(v) + len(o))

    def shifted(self, k: int) -> "WeightDiagram":
        return WeightDiagram(
            frozenset(p + k for p in self.vees),
            frozenset(p + k for p in self.crosses),
            frozenset(p + k for p in self.circles),
            self.m,
            self.n,
        )


@dataclass(frozen=True)
class BlockLabel:
    crosses: frozenset
    circles: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "crosses", frozenset(self.crosses))
        object.__setattr__(self, "circles", frozenset(self.circles))
        if self.crosses & self.circles:
            raise ValidationError("block label has a position that is both x and o")


def cross_set(w: SuperWeight) -> list[int]:
    return [a - i for i, a in enumerate(w.top)]


def circle_set(w: SuperWeight) -> list[int]:
    return [i + 1 - w.m - b for i, b in enumerate(w.bottom)]


def weight_to_diagram(w: SuperWeight) -> WeightDiagram:
    xs, os = set(cross_set(w)), set(circle_set(w))
    return WeightDiagram(frozenset(xs & os), frozenset(xs - os), frozenset(os - xs), w.m, w.n)


def diagram_to_weight(d: WeightDiagram) -> SuperWeight:
    xs = sorted(d.vees | d.crosses, reverse=True)
    os = sorted(d.vees | d.circles)
    if len(xs) != d.m or len(os) != d.n:
        raise ValidationError("diagram cardinalities do not match gl(m|n)")
    top = tuple(p + i for i, p in enumerate(xs))
    bottom = tuple(i + 1 - d.m - p for i, p in enumerate(os))
    return SuperWeight(d.m, d.n, top, bottom)


def atypicality(w: SuperWeight) -> int:
    return len(set(cross_set(w)) & set(circle_set(w)))


def is_maximal_atypical(w: SuperWeight) -> bool:
    return atypicality(w) == w.n


def principal_positions(d: WeightDiagram) -> list[int]:
    """Vee positions after deleting the core symbols and closing the gaps.

    Symbols right of a removed core move one step left per removed core, and
    the whole picture is then translated right by the number of crosses; this
    puts the result in the coordinate frame of gl(k|k), k = number of vees.
    """
    cores = sorted(d.cores)
    shift = len(d.crosses)
    out = []
    for p in sorted(d.vees):
        below = sum(1 for c in cores if c < p)
        out.append(p - below + shift)
    return out


def principal_weight_from_positions(positions: Iterable[int]) -> SuperWeight:
    pos = sorted(positions, reverse=True)
    k = len(pos)
    mu = tuple(p + i for i, p in enumerate(pos))
    return SuperWeight(k, k, mu, tuple(-a for a in reversed(mu)))


def parity(w: SuperWeight) -> int:
    """Parity bit of ``L(w)``.

    Maximal atypical weights use the sum of the bottom entries; for smaller
    atypicality k the parity of the associated gl(k|k) principal-block weight
    is used.
    """
    if is_maximal_atypical(w):
        return sum(w.bottom) % 2
    reduced = principal_weight_from_positions(principal_positions(weight_to_diagram(w)))
    return sum(reduced.bottom) % 2


def block_label(w: SuperWeight) -> BlockLabel:
    d = weight_to_diagram(w)
    return BlockLabel(d.crosses, d.circles)


def classical_core_weight(b: BlockLabel, r: int) -> tuple[int, ...]:
    if b.circles:
        raise DomainError("block has circles; it is not a maximal atypical block of gl(m|n), m >= n")
    if len(b.crosses) != r:
        raise DomainError(f"block has {len(b.crosses)} crosses, expected r = {r}")
    cs = sorted(b.crosses, reverse=True)
    return tuple(c + i for i, c in enumerate(cs))


def core_block(core: Iterable[int]) -> BlockLabel:
    """Inverse of :func:`classical_core_weight`."""
    return BlockLabel(frozenset(a - i for i, a in enumerate(core)))


def _require_maximal(w: SuperWeight):
    if not is_maximal_atypical(w):
        raise DomainError(f"{w} is not maximal atypical (atypicality {atypicality(w)} < {w.n})")


def is_stable(w: SuperWeight) -> bool:
    _require_maximal(w)
    d = weight_to_diagram(w)
    if not d.vees or not d.cores:
        return True
    return max(d.vees) < min(d.cores)


def is_negatively_stable(w: SuperWeight) -> bool:
    # stable weights are (lambda_1..lambda_r, mu | -mu); mu_1 sits at top[r]
    if not is_stable(w):
        return False
    return w.n == 0 or w.top[w.r] <= 0
