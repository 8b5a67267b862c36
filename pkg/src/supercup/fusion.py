"""Images in the semisimplification and tensor products modulo negligible summands."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional

from .classical import (
    FusionLabel,
    PrincipalFusionSpec,
    check_dominant,
    det_exponent,
    group_fusion,
    label_dim,
    lr_coefficients,
    weyl_dim,
)
from .errors import DomainError, FusionTableRequired, ValidationError
from .functors import (
    ds_paths,
    eta0_lift,
    eta0_reduce,
    ground_state,
    ground_state_index,
    pi_power,
    stabilize,
)
from .weights import (
    SuperWeight,
    atypicality,
    block_label,
    classical_core_weight,
    core_block,
    is_maximal_atypical,
    parity,
    weight_to_diagram,
)


def is_negligible_irreducible(w: SuperWeight) -> bool:
    return atypicality(w) < w.n


def classical_core(w: SuperWeight) -> tuple:
    return classical_core_weight(block_label(w), w.r)


def _require_maximal(w):
    if not is_maximal_atypical(w):
        raise DomainError(f"{w} is negligible (atypicality {atypicality(w)} < {w.n}); it has no principal part")


@dataclass(frozen=True)
class SplitWeight:
    classical: tuple
    principal: SuperWeight
    pi_power: int

    def reassemble(self, m: int) -> SuperWeight:
        stable = eta0_lift(self.principal, core_block(self.classical), m)
        if m == self.principal.n:
            return stable.twist(self.pi_power)
        return pi_power(stable, -self.pi_power)


def splice(w: SuperWeight) -> SplitWeight:
    """Split ``w`` into classical core and principal part after stabilizing with Pi."""
    _require_maximal(w)
    if w.r == 0:
        # Pi = Ber^{-1} for m = n
        N = max(0, w.top[0]) if w.n else 0
        return SplitWeight((), w.twist(-N), N)
    stable, N = stabilize(w)
    return SplitWeight(classical_core(w), eta0_reduce(stable), N)


@dataclass(frozen=True)
class SemisimpleImage:
    """Image of ``L(w)`` in Rep(GL(r)) x Rep(H_pr).

    ``principal`` is the gl(n|n) weight representing the principal factor with
    all Pi-twists resolved; it equals the spliced principal part tensored with
    Ber^``ber_core_power``.
    """

    classical: tuple
    principal: SuperWeight
    parity: int
    ber_core_power: int


def image(w: SuperWeight) -> Optional[SemisimpleImage]:
    """Image in the semisimplification; ``None`` stands for the zero image of a negligible irreducible."""
    if is_negligible_irreducible(w):
        return None
    sp = splice(w)
    return SemisimpleImage(sp.classical, sp.principal.twist(sp.pi_power), parity(w), sp.pi_power)


def sdim(w: SuperWeight) -> int:
    if is_negligible_irreducible(w):
        return 0
    count, sign = ds_paths(w)
    return sign * count * weyl_dim(classical_core(w))


def graded_sdim(w: SuperWeight) -> int:
    """Superdimension when every weight vector has parity (sum of its bottom entries) mod 2.

    Differs from :func:`sdim` by (-1)^C, C = #{(vee, cross) : cross left of vee};
    the two agree on gl(n|n) and on stable weights.
    """
    value = sdim(w)
    if not value:
        return 0
    d = weight_to_diagram(w)
    c = sum(1 for v in d.vees for x in d.crosses if x < v)
    return -value if c % 2 else value


def principal_multiplicity(w: SuperWeight) -> int:
    """m(w): number of DS^n paths, equal to |sdim| of the principal part."""
    _require_maximal(w)
    return ds_paths(w)[0]


# -- tensor products ------------------------------------------------------------


@dataclass(frozen=True)
class FusionSummand:
    classical: tuple
    multiplicity: int
    principal: Optional[SuperWeight] = None
    label: Optional[FusionLabel] = None
    principal_dim: Optional[int] = None
    weight: Optional[SuperWeight] = None
    parity: Optional[int] = None

    @property
    def sdim(self) -> Optional[int]:
        """Superdimension of one copy (sign from ``parity`` when known)."""
        if self.principal_dim is None:
            return None
        mag = weyl_dim(self.classical) * self.principal_dim
        return -mag if self.parity else mag

    def sort_key(self):
        return (
            self.classical,
            (self.principal.top, self.principal.bottom) if self.principal else (),
            str(self.label) if self.label else "",
        )


@dataclass(frozen=True)
class FusionResult:
    summands: tuple
    level: str  # "blockwise" or "full"
    negligible_dropped: bool = True
    flags: tuple = field(default=())

    def total_multiplicity(self) -> int:
        return sum(s.multiplicity for s in self.summands)

    def blocks(self) -> dict:
        out: dict = {}
        for s in self.summands:
            out[s.classical] = out.get(s.classical, 0) + s.multiplicity
        return out


def _result(summands, level, flags=()):
    return FusionResult(tuple(sorted(summands, key=FusionSummand.sort_key)), level, True, tuple(flags))


def _check_pair(w1, w2):
    if (w1.m, w1.n) != (w2.m, w2.n):
        raise ValidationError(f"cannot tensor gl({w1.m}|{w1.n}) with gl({w2.m}|{w2.n})")
    _require_maximal(w1)
    _require_maximal(w2)


def tensor_blockwise(w1: SuperWeight, w2: SuperWeight) -> FusionResult:
    _check_pair(w1, w2)
    lr = lr_coefficients(classical_core(w1), classical_core(w2))
    return _result([FusionSummand(nu, c) for nu, c in lr.items()], "blockwise")


def _full_summand(w: SuperWeight, mult: int, label=None) -> FusionSummand:
    return FusionSummand(
        classical_core(w), mult, eta0_reduce(w), label, principal_multiplicity(w), w, parity(w)
    )


def tensor_ground_states(w1: SuperWeight, w2: SuperWeight) -> FusionResult:
    """Full decomposition mod negligibles of a product of (higher) ground states."""
    _check_pair(w1, w2)
    N1, N2 = ground_state_index(w1), ground_state_index(w2)
    if N1 is None or N2 is None:
        bad = w1 if N1 is None else w2
        raise DomainError(f"{bad} is not a ground state of its block")
    c1, c2 = classical_core(w1), classical_core(w2)
    low1, low2 = (c1[-1], c2[-1]) if w1.r else (0, 0)
    out = []
    for nu, c in lr_coefficients(c1, c2).items():
        # S_nu(V) is the nu_r-th ground state of block nu; Ber twists move the block only
        idx = N1 + N2 + (nu[-1] - low1 - low2 if nu else 0)
        out.append(_full_summand(ground_state(core_block(nu), idx, w1.m, w1.n), c))
    return _result(out, "full")


def _is_character(principal: SuperWeight) -> bool:
    return ds_paths(principal)[0] == 1


def _principal_products(p1, p2, spec1, spec2, partial):
    """Return [(principal weight or None, label or None, dim)] and flags."""
    flags = []
    if _is_character(p1) or _is_character(p2):
        char, other = (p1, p2) if _is_character(p1) else (p2, p1)
        k = char.top[0] if char.n else 0
        prod = other.twist(k)
        return [(prod, None, ds_paths(prod)[0])], flags
    if spec1 is None or spec2 is None:
        raise FusionTableRequired(
            "principal parts are not invertible: requires external fusion table (PrincipalFusionSpec)",
            partial=partial,
        )
    for p, spec in ((p1, spec1), (p2, spec2)):
        if spec.family == "Opaque":
            raise FusionTableRequired(f"group {spec.group_key} is opaque: requires external fusion table", partial)
        if ds_paths(p)[0] != spec.degree:
            raise ValidationError(
                f"principal part {p} has superdimension {ds_paths(p)[0]}, but {spec.group_key} "
                f"acts through a representation of degree {spec.degree}"
            )
    if spec1.group_key != spec2.group_key:
        # distinct simple factors of H_pr: the external product stays irreducible
        label = FusionLabel(f"{spec1.group_key}:{spec1.label()} x {spec2.group_key}:{spec2.label()}")
        return [(None, label, spec1.degree * spec2.degree)], flags
    if spec1.passthrough:
        flags.append(f"{spec1.group_key}: GL tables used as pass-through")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        try:
            labels = group_fusion(spec1, spec1.label(), spec2.label())
        except FusionTableRequired as exc:
            raise FusionTableRequired(str(exc), partial) from None
    return [(None, lab, label_dim(spec1, lab)) for lab in labels], flags


def tensor_mod_negligible(
    w1: SuperWeight,
    w2: SuperWeight,
    spec1: Optional[PrincipalFusionSpec] = None,
    spec2: Optional[PrincipalFusionSpec] = None,
) -> FusionResult:
    """Decompose ``L(w1) (x) L(w2)`` into images ``rho (x) sigma`` modulo negligibles.

    Invertible principal parts (Berezin powers) are handled autonomously.
    Otherwise both specs are needed.
    """
    if (w1.m, w1.n) != (w2.m, w2.n):
        raise ValidationError(f"cannot tensor gl({w1.m}|{w1.n}) with gl({w2.m}|{w2.n})")
    i1, i2 = image(w1), image(w2)
    if i1 is None or i2 is None:
        return _result([], "full")
    partial = tensor_blockwise(w1, w2)
    principal_parts, flags = _principal_products(i1.principal, i2.principal, spec1, spec2, partial)
    out = []
    for nu, c in lr_coefficients(i1.classical, i2.classical).items():
        for pw, label, dim in principal_parts:
            if pw is not None:
                full = eta0_lift(pw, core_block(nu), w1.m)
                out.append(FusionSummand(nu, c, pw, label, dim, full, parity(full)))
            else:
                out.append(FusionSummand(nu, c, None, label, dim))
    return _result(out, "full", flags)


# -- determinants -----------------------------------------------------------------


@dataclass(frozen=True)
class Determinant:
    """det(X) = det^classical_exponent (boxtimes) Ber_{n|n}^(principal_multiplier * ell)."""

    classical_exponent: int
    principal: SuperWeight
    principal_multiplier: int
    ell: Optional[int] = None

    @property
    def principal_exponent(self) -> Optional[int]:
        return None if self.ell is None else self.principal_multiplier * self.ell

    def __str__(self):
        if self.principal_exponent is not None:
            pr = f"Ber^{self.principal_exponent}" if self.principal_exponent else "1"
        else:
            mu = ",".join(map(str, self.principal.top))
            pr = f"Ber^({self.principal_multiplier}*l([{mu}]))"
            if self.principal_multiplier == 1:
                pr = f"Ber^l([{mu}])"
        return f"det^{self.classical_exponent} [x] {pr}"


def determinant(w: SuperWeight, ell: Optional[int] = None) -> Determinant:
    """Determinant of ``X_w`` in the semisimplification.

    ``ell`` is the exponent l(mu) of the principal part; it is only known here
    for invertible principal parts and must otherwise be supplied externally.
    """
    if is_negligible_irreducible(w):
        raise DomainError(f"{w} is negligible; its determinant is not defined here")
    img = image(w)
    core = check_dominant(img.classical)
    a = principal_multiplicity(w)
    if ell is None and _is_character(img.principal):
        ell = img.principal.top[0] if img.principal.n else 0
    return Determinant(a * det_exponent(core), img.principal, weyl_dim(core), ell)
