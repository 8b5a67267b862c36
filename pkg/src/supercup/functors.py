"""Weight-level descriptions of functors on irreducible modules."""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .diagrams import cup_diagram, sectors
from .errors import DomainError, InconsistencyError
from .weights import (
    CIRCLE,
    CROSS,
    VEE,
    WEDGE,
    BlockLabel,
    SuperWeight,
    WeightDiagram,
    classical_core_weight,
    diagram_to_weight,
    is_maximal_atypical,
    is_negatively_stable,
    parity,
    principal_positions,
    principal_weight_from_positions,
    weight_to_diagram,
)


@dataclass(frozen=True, order=True)
class SignedSummand:
    weight: SuperWeight
    parity_shift: int
    multiplicity: int = 1


@dataclass(frozen=True)
class SignedDecomposition:
    summands: tuple
    dropped_negligible: bool = False

    def __len__(self):
        return len(self.summands)

    def weights(self) -> list[SuperWeight]:
        return [s.weight for s in self.summands]

    @classmethod
    def from_counter(cls, counts: Counter, dropped=False) -> "SignedDecomposition":
        items = sorted(SignedSummand(w, p, c) for (w, p), c in counts.items() if c)
        return cls(tuple(items), dropped)


def ds(w: SuperWeight) -> SignedDecomposition:
    """Duflo-Serganova functor on ``L(w)``: one summand per sector."""
    if w.m == 0 or w.n == 0:
        raise DomainError(f"DS is not defined on gl({w.m}|{w.n})")
    d = weight_to_diagram(w)
    if not d.vees:
        # typical irreducibles are projective, hence killed modulo negligibles
        return SignedDecomposition((), dropped_negligible=True)
    p = parity(w)
    out = []
    for sec in sectors(cup_diagram(d)):
        a = sec.outer_arc[0]
        reduced = WeightDiagram(d.vees - {a}, d.crosses, d.circles, w.m - 1, w.n - 1)
        v = diagram_to_weight(reduced)
        out.append(SignedSummand(v, (p - parity(v)) % 2, 1))
    return SignedDecomposition(tuple(sorted(out)))


def ds_power(w: SuperWeight, k: int) -> SignedDecomposition:
    counts = Counter({(w, 0): 1})
    dropped = False
    for _ in range(k):
        nxt: Counter = Counter()
        for (v, shift), c in counts.items():
            dec = ds(v)
            dropped = dropped or dec.dropped_negligible
            for s in dec.summands:
                nxt[(s.weight, (shift + s.parity_shift) % 2)] += c * s.multiplicity
        counts = nxt
    return SignedDecomposition.from_counter(counts, dropped)


_paths_cache: dict = {}
_paths_lock = threading.Lock()


def _path_ends(w: SuperWeight) -> Counter:
    """Counter of (endpoint weight, accumulated parity shift) over all DS^n paths."""
    d = weight_to_diagram(w)
    key = (w.m, w.n, d.vees, d.crosses, d.circles)
    with _paths_lock:
        hit = _paths_cache.get(key)
    if hit is not None:
        return hit
    ends: Counter = Counter()
    if w.n == 0:
        ends[(w, 0)] = 1
    else:
        for s in ds(w).summands:
            for (end, shift), c in _path_ends(s.weight).items():
                ends[(end, (shift + s.parity_shift) % 2)] += c * s.multiplicity
    with _paths_lock:
        _paths_cache[key] = ends
    return ends


def ds_paths(w: SuperWeight) -> tuple[int, int]:
    """Number m(w) of DS^n paths from ``L(w)`` and their common sign."""
    if not is_maximal_atypical(w):
        raise DomainError(f"{w} is not maximal atypical")
    ends = _path_ends(w)
    if len(ends) != 1:
        raise InconsistencyError(f"DS^{w.n} paths of {w} disagree: {sorted(ends.items())}")
    (end, shift), count = next(iter(ends.items()))
    core = classical_core_weight(BlockLabel(weight_to_diagram(w).crosses), w.r)
    if end.top != core:
        raise InconsistencyError(f"DS^{w.n} of {w} ends at {end}, not at the classical core {core}")
    return count, -1 if shift else 1


def clear_path_cache():
    with _paths_lock:
        _paths_cache.clear()


def dual(w: SuperWeight) -> SuperWeight:
    d = weight_to_diagram(w)
    c = cup_diagram(d)
    vees = {b for _, b in c.arcs}
    r = w.r
    flip = lambda ps: frozenset(1 - r - p for p in ps)  # noqa: E731
    return diagram_to_weight(WeightDiagram(flip(vees), flip(d.crosses), flip(d.circles), w.m, w.n))


@dataclass(frozen=True)
class TranslationOutcome:
    kind: str  # "irreducible", "zero" or "non_irreducible"
    weight: Optional[SuperWeight] = None


_F_RULES = {
    (CROSS, VEE): (VEE, CROSS),
    (CROSS, WEDGE): (WEDGE, CROSS),
    (VEE, CIRCLE): (CIRCLE, VEE),
    (WEDGE, CIRCLE): (CIRCLE, WEDGE),
    (VEE, WEDGE): (CIRCLE, CROSS),
}
_E_RULES = {
    (VEE, CROSS): (CROSS, VEE),
    (WEDGE, CROSS): (CROSS, WEDGE),
    (CIRCLE, VEE): (VEE, CIRCLE),
    (CIRCLE, WEDGE): (WEDGE, CIRCLE),
}


def _translate(rules, wide, i, w):
    d = weight_to_diagram(w)
    pair = (d.label(i), d.label(i + 1))
    if pair == wide:
        return TranslationOutcome("non_irreducible")
    if pair not in rules:
        return TranslationOutcome("zero")
    x, y = rules[pair]
    return TranslationOutcome("irreducible", diagram_to_weight(d.relabel({i: x, i + 1: y})))


def translate_F(i: int, w: SuperWeight) -> TranslationOutcome:
    return _translate(_F_RULES, (CROSS, CIRCLE), i, w)


def translate_E(i: int, w: SuperWeight) -> TranslationOutcome:
    return _translate(_E_RULES, (CIRCLE, CROSS), i, w)


def _require_shiftable(w: SuperWeight):
    if not is_maximal_atypical(w):
        raise DomainError(f"{w} is not maximal atypical")
    if w.r < 1:
        raise DomainError("Pi is trivial for m = n; use a Berezin twist instead")


def pi_shift(w: SuperWeight) -> SuperWeight:
    """Weight of the non-negligible summand of ``Pi (x) L(w)``.

    Vees are handled from left to right; each lands on the nearest position
    below it holding neither a cross nor an already placed vee.
    """
    _require_shiftable(w)
    d = weight_to_diagram(w)
    occupied = set(d.vees)
    for p in sorted(d.vees):
        occupied.discard(p)
        q = p - 1
        while q in d.crosses or q in occupied:
            q -= 1
        occupied.add(q)
    return diagram_to_weight(WeightDiagram(frozenset(occupied), d.crosses, d.circles, w.m, w.n))


def pi_unshift(w: SuperWeight) -> SuperWeight:
    """Inverse of :func:`pi_shift` (tensoring with the dual of Pi)."""
    _require_shiftable(w)
    d = weight_to_diagram(w)
    occupied = set(d.vees)
    for p in sorted(d.vees, reverse=True):
        occupied.discard(p)
        q = p + 1
        while q in d.crosses or q in occupied:
            q += 1
        occupied.add(q)
    return diagram_to_weight(WeightDiagram(frozenset(occupied), d.crosses, d.circles, w.m, w.n))


def pi_power(w: SuperWeight, k: int) -> SuperWeight:
    step = pi_shift if k >= 0 else pi_unshift
    for _ in range(abs(k)):
        w = step(w)
    return w


def stabilize(w: SuperWeight) -> tuple[SuperWeight, int]:
    _require_shiftable(w)
    n_shifts = 0
    while not is_negatively_stable(w):
        w = pi_shift(w)
        n_shifts += 1
    return w, n_shifts


def ground_state(b: BlockLabel, N: int, m: int, n: int) -> SuperWeight:
    """Weight of the (higher) ground state ``L(lambda_N)`` of the block ``b``.

    ``N`` may be negative only when m = n, where it is a Berezin power.
    """
    if b.circles or len(b.crosses) != m - n:
        raise DomainError("ground states are defined for maximal atypical blocks of gl(m|n), m >= n")
    if N < 0 and m != n:
        raise DomainError("higher ground states need N >= 0")
    j = min(b.crosses) if b.crosses else 1
    vees = frozenset(j - N - k for k in range(1, n + 1))
    return diagram_to_weight(WeightDiagram(vees, b.crosses, frozenset(), m, n))


def ground_state_index(w: SuperWeight) -> Optional[int]:
    """Return N if ``w`` is the N-th higher ground state of its block, else None."""
    if not is_maximal_atypical(w):
        return None
    d = weight_to_diagram(w)
    if not d.vees:
        return 0
    top = max(d.vees)
    if set(d.vees) != set(range(top - w.n + 1, top + 1)):
        return None
    j = min(d.crosses) if d.crosses else 1
    N = j - 1 - top
    if N < 0 and w.r:
        return None
    return N


def eta0_reduce(w: SuperWeight) -> SuperWeight:
    """Principal-block weight of gl(n|n) obtained by deleting cores and compacting positions."""
    if not is_maximal_atypical(w):
        raise DomainError(f"{w} is not maximal atypical")
    return principal_weight_from_positions(principal_positions(weight_to_diagram(w)))


def eta0_lift(principal: SuperWeight, block: BlockLabel, m: int) -> SuperWeight:
    """The unique maximal atypical weight in ``block`` whose reduction is ``principal``."""
    n = principal.n
    if block.circles or len(block.crosses) != m - n:
        raise DomainError("target block is not a maximal atypical block of gl(m|n)")
    cores = sorted(block.crosses)
    r = len(cores)
    vees = set()
    for q in principal_positions(weight_to_diagram(principal)):
        # invert p -> p - #{cores < p} + r over the non-core integers
        p = q - r
        while True:
            if p not in block.crosses and p - sum(1 for c in cores if c < p) + r == q:
                break
            p += 1
        vees.add(p)
    return diagram_to_weight(WeightDiagram(frozenset(vees), block.crosses, frozenset(), m, n))
