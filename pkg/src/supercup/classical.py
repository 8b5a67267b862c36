"""GL(r) combinatorics and fusion tables for the groups acting on principal parts.

Classical weights are plain tuples of integers in weakly decreasing order.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from math import comb, prod
from typing import Optional

from .errors import DomainError, FusionTableRequired, InconsistencyError, ValidationError

ClassicalWeight = tuple


def check_dominant(lam) -> ClassicalWeight:
    lam = tuple(int(a) for a in lam)
    for i in range(len(lam) - 1):
        if lam[i] < lam[i + 1]:
            raise ValidationError(f"classical weight {lam} is not weakly decreasing at index {i + 2}")
    return lam


def _strip(lam):
    return tuple(a for a in lam if a)


# -- Littlewood-Richardson ---------------------------------------------------


def _is_lattice(word) -> bool:
    seen = Counter()
    for a in word:
        seen[a] += 1
        if a > 1 and seen[a] > seen[a - 1]:
            return False
    return True


def _horizontal_strips(shape, size, max_rows):
    """All shapes obtained from ``shape`` by adding a horizontal strip of ``size`` boxes."""
    rows = list(shape) + [0] * (max_rows - len(shape))
    out = []

    def rec(i, left, cur):
        if i == len(rows):
            if left == 0:
                out.append(tuple(cur))
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for k in range(cap, -1, -1):
            rec(i + 1, left - k, cur + [rows[i] + k])

    rec(0, size, [])
    return out


@lru_cache(maxsize=None)
def _lr_partitions(lam: tuple, mu: tuple, max_rows: int) -> dict:
    """c^nu_{lam,mu} for partitions, restricted to nu with at most ``max_rows`` rows.

    Enumerates LR tableaux of shape nu/lam and content mu: the letters i are added
    as horizontal strips in order, and the reverse reading word must stay a
    lattice word after each step.
    """
    # filling[row] = letters of the skew part of that row, left to right
    states = [(tuple(lam) + (0,) * (max_rows - len(lam)), tuple(() for _ in range(max_rows)))]
    if len(lam) > max_rows:
        return {}
    for letter, count in enumerate(mu, start=1):
        nxt = []
        for shape, filling in states:
            for new in _horizontal_strips(shape, count, max_rows):
                fill = tuple(filling[i] + (letter,) * (new[i] - shape[i]) for i in range(max_rows))
                word = [a for row in fill for a in reversed(row)]
                if _is_lattice(word):
                    nxt.append((new, fill))
        states = nxt
    counts = Counter(shape for shape, _ in states)
    return dict(counts)


def lr_coefficients(lam, mu) -> dict:
    """Decompose ``L(lam) (x) L(mu)`` for GL(r); arbitrary integral highest weights."""
    lam, mu = check_dominant(lam), check_dominant(mu)
    if len(lam) != len(mu):
        raise ValidationError(f"weights of different rank: {lam}, {mu}")
    r = len(lam)
    if r == 0:
        return {(): 1}
    k = -min(lam[-1], mu[-1], 0)
    a = tuple(x + k for x in lam)
    b = tuple(x + k for x in mu)
    raw = _lr_partitions(_strip(a), _strip(b), r)
    return {tuple(x - 2 * k for x in nu): c for nu, c in raw.items()}


# -- Dimensions ----------------------------------------------------------------


def weyl_dim(lam) -> int:
    lam = check_dominant(lam)
    r = len(lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(r) for j in range(i + 1, r))
    den = prod(j - i for i in range(r) for j in range(i + 1, r))
    q, rem = divmod(num, den)
    if rem:
        raise InconsistencyError(f"Weyl dimension of {lam} is not integral")
    return q


def det_exponent(lam) -> int:
    """k with det(L(lam)) = det^k."""
    lam = check_dominant(lam)
    r = len(lam)
    if r == 0:
        return 0
    q, rem = divmod(sum(lam) * weyl_dim(lam), r)
    if rem:
        raise InconsistencyError(f"det exponent of {lam} is not integral")
    return q


def dual_weight(lam) -> ClassicalWeight:
    return tuple(-a for a in reversed(check_dominant(lam)))


# -- Independent oracle: Schur polynomials by monomial arithmetic -----------------


def _poly_mul(p, q):
    out = Counter()
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            out[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
    return {m: c for m, c in out.items() if c}


def _poly_add(p, q, scale=1):
    out = Counter(p)
    for m, c in q.items():
        out[m] += scale * c
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=None)
def _complete_h(k: int, r: int):
    if k < 0:
        return {}
    return {e: 1 for e in cartesian(range(k + 1), repeat=r) if sum(e) == k}


def _det(matrix, r):
    """Laplace expansion along the first row of a polynomial matrix."""
    size = len(matrix)
    if size == 0:
        return {(0,) * r: 1}
    total = {}
    for j in range(size):
        if not matrix[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = _poly_mul(matrix[0][j], _det(minor, r))
        total = _poly_add(total, term, -1 if j % 2 else 1)
    return total


@lru_cache(maxsize=None)
def schur_polynomial(lam: tuple, r: int):
    """s_lam(x_1..x_r) via the Jacobi-Trudi determinant det(h_{lam_i - i + j})."""
    lam = _strip(lam)
    if len(lam) > r:
        return {}
    size = len(lam)
    matrix = [[_complete_h(lam[i] - i + j, r) for j in range(size)] for i in range(size)]
    return _det(matrix, r)


def schur_product_oracle(lam, mu, r: Optional[int] = None) -> dict:
    """Brute-force ``lr_coefficients``: multiply Schur polynomials, peel off leading terms."""
    lam, mu = check_dominant(lam), check_dominant(mu)
    r = len(lam) if r is None else r
    if r == 0:
        return {(): 1}
    k = -min(lam[-1], mu[-1], 0)
    a = tuple(x + k for x in lam)
    b = tuple(x + k for x in mu)
    poly = _poly_mul(schur_polynomial(a, r), schur_polynomial(b, r))
    out = {}
    while poly:
        lead = max(poly)
        c = poly[lead]
        out[tuple(x - 2 * k for x in lead)] = c
        poly = _poly_add(poly, schur_polynomial(lead, r), -c)
    return out


# -- Covariance ----------------------------------------------------------------


def is_covariant_max_atypical(mu, r: int) -> bool:
    """S_mu(V) is maximal atypical iff mu has at most r non-zero parts."""
    mu = check_dominant(mu)
    if mu and mu[-1] < 0:
        raise ValidationError(f"{mu} is not a partition")
    return len(_strip(mu)) <= r


# -- Principal fusion tables ---------------------------------------------------

FAMILIES = ("GL", "SL", "SO", "Sp", "GSp", "GOrth", "Opaque")
REALIZATIONS = ("standard", "dual-standard")


@dataclass(frozen=True)
class PrincipalFusionSpec:
    """Classification datum for the group acting on one principal part.

    ``twist`` is the exponent of the character (det for GL, similitude for
    GSp/GOrth) twisting the standard representation.  Two specs describe the
    same group when ``group`` agrees; by default that is the pair
    (family, degree).
    """

    family: str
    degree: int
    twist: int = 0
    realization: str = "standard"
    group: Optional[str] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown group family {self.family!r}; expected one of {FAMILIES}")
        if self.realization not in REALIZATIONS:
            raise ValidationError(f"unknown realization {self.realization!r}")
        if self.degree < 1:
            raise ValidationError("degree must be positive")
        if self.family in ("Sp", "GSp") and self.degree % 2:
            raise ValidationError(f"{self.family}({self.degree}) needs an even degree")
        if self.family in ("SO", "Sp", "SL") and self.twist:
            raise ValidationError(f"{self.family} has no character twists")

    @property
    def group_key(self) -> str:
        return self.group or f"{self.family}({self.degree})"

    @property
    def passthrough(self) -> bool:
        """SL carries no tables of its own; GL tables are used and results flagged."""
        return self.family == "SL"

    def label(self) -> "FusionLabel":
        return FusionLabel("dual" if self.realization == "dual-standard" else "std", self.twist)

    def to_json(self) -> dict:
        out = {"family": self.family, "degree": self.degree, "twist": self.twist, "realization": self.realization}
        if self.group is not None:
            out["group"] = self.group
        return out

    @classmethod
    def from_json(cls, data: dict) -> "PrincipalFusionSpec":
        unknown = set(data) - {"family", "degree", "twist", "realization", "group"}
        if unknown:
            raise ValidationError(f"unknown fusion spec keys: {sorted(unknown)}")
        try:
            return cls(
                family=data["family"],
                degree=int(data["degree"]),
                twist=int(data.get("twist", 0)),
                realization=data.get("realization", "standard"),
                group=data.get("group"),
            )
        except KeyError as exc:
            raise ValidationError(f"fusion spec is missing {exc.args[0]!r}") from None


@dataclass(frozen=True, order=True)
class FusionLabel:
    """An irreducible of the principal group: a kind and a character twist."""

    kind: str
    twist: int = 0

    def __str__(self):
        return self.kind if not self.twist else f"{self.kind} chi^{self.twist}"


def label_dim(spec: PrincipalFusionSpec, label: FusionLabel) -> int:
    d = spec.degree
    dims = {
        "std": d,
        "dual": d,
        "trivial": 1,
        "Lambda2": comb(d, 2),
        "Sym2": comb(d + 1, 2),
        "Lambda2*": comb(d, 2),
        "Sym2*": comb(d + 1, 2),
        "adjoint": d * d - 1,
        "Lambda2_0": comb(d, 2) - 1,
        "Sym2_0": comb(d + 1, 2) - 1,
    }
    if label.kind not in dims:
        raise ValidationError(f"unknown fusion label {label}")
    return dims[label.kind]


def _normalize(spec, label):
    # GSp/GOrth: std^* = std (x) chi^{-1}; Sp/SO: std is self-dual
    if label.kind == "dual":
        if spec.family in ("GSp", "GOrth"):
            return FusionLabel("std", label.twist - 1)
        if spec.family in ("Sp", "SO"):
            return FusionLabel("std", label.twist)
    return label


def group_fusion(spec: PrincipalFusionSpec, a: FusionLabel, b: FusionLabel) -> list[FusionLabel]:
    """Decompose a (x) b for the principal group described by ``spec``."""
    if spec.family == "Opaque":
        raise FusionTableRequired(f"group {spec.group_key} is opaque: requires external fusion table")
    if spec.passthrough:
        warnings.warn(f"{spec.group_key}: using GL fusion tables as a pass-through", stacklevel=2)
    a, b = _normalize(spec, a), _normalize(spec, b)
    kinds = tuple(sorted((a.kind, b.kind)))
    t = a.twist + b.twist
    if kinds not in {("std", "std"), ("dual", "std"), ("dual", "dual")}:
        raise FusionTableRequired(f"{a} (x) {b} in {spec.group_key}: requires external fusion table")
    fam = spec.family
    if fam in ("GL", "SL"):
        table = {
            ("std", "std"): [FusionLabel("Lambda2", t), FusionLabel("Sym2", t)],
            ("dual", "std"): [FusionLabel("adjoint", t), FusionLabel("trivial", t)],
            ("dual", "dual"): [FusionLabel("Lambda2*", t), FusionLabel("Sym2*", t)],
        }
        return table[kinds]
    if fam in ("SO", "GOrth"):
        return [FusionLabel("Lambda2", t), FusionLabel("Sym2_0", t), FusionLabel("trivial", t + (fam == "GOrth"))]
    if fam in ("Sp", "GSp"):
        return [FusionLabel("Lambda2_0", t), FusionLabel("Sym2", t), FusionLabel("trivial", t + (fam == "GSp"))]
    raise DomainError(f"no fusion table for family {fam}")
