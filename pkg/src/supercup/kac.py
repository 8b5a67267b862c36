"""Composition factors of Kac modules via oriented cup diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diagrams import cup_diagram, is_oriented
from .errors import DomainError, InconsistencyError
from .weights import SuperWeight, WeightDiagram, diagram_to_weight, is_maximal_atypical, weight_to_diagram


def kac_window(lam: SuperWeight) -> tuple[int, int]:
    """Positions that may carry a vee of a composition factor of V(lam)."""
    d = weight_to_diagram(lam)
    if not d.vees:
        return (0, -1)
    a = len(d.vees)
    c = len(d.cores)
    return (min(d.vees) - 2 * a - c - 2, max(d.vees))


def kac_composition_factors(lam: SuperWeight, window=None) -> list[SuperWeight]:
    """Weights nu with L(nu) a composition factor of V(lam), each with multiplicity one."""
    d = weight_to_diagram(lam)
    if not d.vees:
        return [lam]
    lo, hi = kac_window(lam) if window is None else window
    free = [p for p in range(lo, hi + 1) if not d.is_core(p)]
    out = []
    for vees in combinations(free, len(d.vees)):
        nu = WeightDiagram(frozenset(vees), d.crosses, d.circles, d.m, d.n)
        if is_oriented(cup_diagram(nu), d):
            out.append(diagram_to_weight(nu))
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class KacBijection:
    weight: SuperWeight
    reduced: SuperWeight
    pairs: tuple  # (factor of V(reduced), factor of V(weight))


def kac_restriction_bijection(lam: SuperWeight) -> KacBijection:
    """Match factors of V(mu | -mu, -lam_1) in gl(n-1|n) with factors of V(lam) starting with lam_1."""
    if lam.m != lam.n or not is_maximal_atypical(lam):
        raise DomainError(f"{lam} is not a maximal atypical weight of gl(n|n)")
    n = lam.n
    if n == 0:
        raise DomainError("gl(0|0) has no restriction to gl(-1|0)")
    reduced = SuperWeight(n - 1, n, lam.top[1:], lam.bottom)
    small = kac_composition_factors(reduced)
    big = [nu for nu in kac_composition_factors(lam) if nu.top[0] == lam.top[0]]
    images = [SuperWeight(n, n, (lam.top[0],) + nu.top, nu.bottom) for nu in small]
    if sorted(images) != sorted(big) or len(set(images)) != len(images):
        raise InconsistencyError(
            f"restriction bijection fails for {lam}: reduced factors map to {images}, expected {big}"
        )
    return KacBijection(lam, reduced, tuple(zip(small, images)))


def reduced_diagram_matches(lam: SuperWeight) -> bool:
    """Check the diagram description of the reduced weight (mu | -mu, -lam_1).

    Its diagram is lam's with every vee but the rightmost moved one step right,
    and the rightmost vee (at lam_1) replaced by a circle at lam_1 + 1.
    """
    d = weight_to_diagram(lam)
    reduced = weight_to_diagram(SuperWeight(lam.n - 1, lam.n, lam.top[1:], lam.bottom))
    top = max(d.vees)
    expect = WeightDiagram(frozenset(p + 1 for p in d.vees if p != top), frozenset(), frozenset({top + 1}),
                           lam.n - 1, lam.n)
    return top == lam.top[0] and reduced == expect
