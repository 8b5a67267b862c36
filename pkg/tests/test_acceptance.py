"""Acceptance criteria, one test each; every test reports a PASS/FAIL line."""

import math
import random
import time
from pathlib import Path

from click.testing import CliRunner

from conftest import ACCEPTANCE_LINES
from oracles import random_max_atypical, random_weight
from supercup.classical import PrincipalFusionSpec, lr_coefficients, schur_product_oracle, weyl_dim
from supercup.cli import main
from supercup.diagrams import cup_diagram, forest_mirror, to_spaced_forest
from supercup.functors import (
    ds,
    ds_paths,
    dual,
    eta0_reduce,
    ground_state,
    pi_power,
    pi_shift,
    stabilize,
)
from supercup.fusion import classical_core, sdim, tensor_blockwise, tensor_ground_states, tensor_mod_negligible
from supercup.kac import kac_composition_factors, kac_restriction_bijection, kac_window
from supercup.weights import (
    BlockLabel,
    SuperWeight,
    block_label,
    diagram_to_weight,
    is_negatively_stable,
    is_stable,
    trivial,
    weight_to_diagram,
)

GOLDEN = Path(__file__).parent / "golden"
A = SuperWeight(6, 3, (3, 2, 1, -2, -3, -4), (4, 3, 2))
B = SuperWeight(6, 3, (4, 2, 1, 0, -1, -2), (2, 1, 0))

# time limits in seconds
LIMIT_DS = 1.0
LIMIT_LR = 1.0
LIMIT_FUSION = 5.0
LIMIT_KAC = 30.0
LIMIT_SDIM = 60.0
LIMIT_ORACLE = 60.0


def report(number, title, ok, detail, elapsed):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} ({detail}; {elapsed:.2f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_01_ds_example():
    t0 = time.perf_counter()
    bad = []
    for m, i in [(4, 5), (3, 2), (5, 7)]:
        w = SuperWeight(m, 2, (0,) * (m - 1) + (-i,), (i, 0))
        bent = SuperWeight(m - 1, 1, (0,) * (m - 2) + (-i - 1,), (i + 1,))
        got = {(s.weight, s.parity_shift, s.multiplicity) for s in ds(w).summands}
        if got != {(trivial(m - 1, 1), 1, 1), (bent, 1, 1)}:
            bad.append((m, i))
    dt = time.perf_counter() - t0
    report(1, "DS of L(0,..,0,-i | i,0)", not bad and dt < LIMIT_DS, f"mismatches at (m,i) = {bad}", dt)


def test_criterion_02_lr_reproduction():
    t0 = time.perf_counter()
    expected = {(7, 4, 2): 1, (7, 3, 3): 1, (6, 5, 2): 1, (6, 4, 3): 2, (5, 5, 3): 1, (5, 4, 4): 1}
    got = lr_coefficients((4, 2, 1), (3, 2, 1))
    dt = time.perf_counter() - t0
    ok = got == expected and sum(got.values()) == 7 and dt < LIMIT_LR
    report(2, "LR (4,2,1) x (3,2,1)", ok, f"{sum(got.values())} summands", dt)


def test_criterion_03_end_to_end_fusion():
    t0 = time.perf_counter()
    spec = PrincipalFusionSpec("GSp", 6, 1)
    blockwise = tensor_blockwise(A, B)
    full = tensor_mod_negligible(A, B, spec, spec)
    dt = time.perf_counter() - t0
    blocks = len(full.blocks())
    total = full.total_multiplicity()
    ok = blocks == 6 and blockwise.total_multiplicity() * 3 == 21 == total and dt < LIMIT_FUSION
    report(3, "GL(6|3) product with GSp(6)", ok, f"{blocks} blocks, {total} summands", dt)


def test_criterion_04_kac_factors():
    t0 = time.perf_counter()
    rng = random.Random(4)
    wrong22, wrong12 = [], []
    for _ in range(20):
        l2 = rng.randint(-5, 4)
        l1 = rng.randint(l2 + 1, 5)
        lam = SuperWeight(2, 2, (l1, l2), (-l2, -l1))
        sq = lambda a, b: SuperWeight(2, 2, (a, b), (-b, -a))  # noqa: E731
        listed = {sq(l1, l2), sq(l1, l2 - 1), sq(l1 - 1, l2), sq(l1 - 1, l2 - 1)}
        if set(kac_composition_factors(lam)) != listed:
            wrong22.append((l1, l2))
        red = SuperWeight(1, 2, (l2,), (-l2, -l1))
        listed = {red, SuperWeight(1, 2, (l2 - 1,), (-l2 + 1, -l1))}
        if set(kac_composition_factors(red)) != listed:
            wrong12.append((l1, l2))
    failures = 0
    for _ in range(50):
        n = rng.randint(1, 3)
        try:
            kac_restriction_bijection(random_max_atypical(rng, n, n, spread=5))
        except Exception:
            failures += 1
    dt = time.perf_counter() - t0
    ok = not wrong22 and not wrong12 and not failures and dt < LIMIT_KAC
    detail = f"GL(2|2) mismatches {wrong22}, GL(1|2) mismatches {wrong12}, bijection failures {failures}/50"
    report(4, "Kac composition factors", ok, detail, dt)


def test_criterion_05_superdimension_consistency():
    t0 = time.perf_counter()
    rng = random.Random(5)
    bad = []
    for _ in range(300):
        n = rng.randint(0, 4)
        m = rng.randint(n, 4)
        w = random_max_atypical(rng, m, n)
        count, _ = ds_paths(w)
        stable = stabilize(w)[0] if w.r else w
        ok = (
            abs(sdim(w)) == count * weyl_dim(classical_core(w))
            and ds_paths(eta0_reduce(stable))[0] == count
            and 1 <= count <= math.factorial(n)
        )
        if not ok:
            bad.append(str(w))
    dt = time.perf_counter() - t0
    report(5, "superdimension via DS^n paths", not bad and dt < LIMIT_SDIM, f"{len(bad)}/300 failures", dt)


def _random_partition(rng, r, size):
    parts = sorted((rng.randint(0, size) for _ in range(r)), reverse=True)
    while sum(parts) > size:
        i = max(j for j, a in enumerate(parts) if a)
        parts[i] -= 1
    return tuple(parts)


def test_criterion_06_oracle_equivalence():
    t0 = time.perf_counter()
    rng = random.Random(6)
    bad = 0
    for _ in range(200):
        r = rng.randint(1, 3)
        a, b = _random_partition(rng, r, 6), _random_partition(rng, r, 6)
        if lr_coefficients(a, b) != schur_product_oracle(a, b):
            bad += 1
    dt = time.perf_counter() - t0
    report(6, "LR equals Schur product oracle", not bad and dt < LIMIT_ORACLE, f"{bad}/200 mismatches", dt)


def test_criterion_07_involutions():
    t0 = time.perf_counter()
    rng = random.Random(7)
    sizes = lambda: (rng.randint(0, 5), rng.randint(0, 5))  # noqa: E731
    dual_bad = sum(dual(dual(w)) != w for w in (random_weight(rng, *sizes()) for _ in range(500)))
    trip_bad = sum(
        diagram_to_weight(weight_to_diagram(w)) != w for w in (random_weight(rng, *sizes()) for _ in range(1000))
    )
    mirror_bad = 0
    for _ in range(200):
        w = random_weight(rng, *sizes())
        f = to_spaced_forest(cup_diagram(weight_to_diagram(w)))
        mirror_bad += forest_mirror(forest_mirror(f, w.r), w.r) != f
    dt = time.perf_counter() - t0
    ok = not (dual_bad or trip_bad or mirror_bad)
    report(7, "involutions and round trips", ok, f"failures dual {dual_bad}, diagram {trip_bad}, mirror {mirror_bad}", dt)


def test_criterion_08_pi_shift_laws():
    t0 = time.perf_counter()
    rng = random.Random(8)
    pi_ok = pi_shift(trivial(2, 1)) == SuperWeight(2, 1, (0, -1), (1,))
    block_bad = minimal_bad = equiv_bad = 0
    for _ in range(200):
        n = rng.randint(0, 3)
        w = random_max_atypical(rng, n + rng.randint(1, 3), n)
        block_bad += block_label(pi_shift(w)) != block_label(w)
        s, N = stabilize(w)
        minimal_bad += not is_negatively_stable(s) or (N > 0 and is_negatively_stable(pi_power(w, N - 1)))
        if is_stable(w):
            equiv_bad += eta0_reduce(pi_shift(w)) != eta0_reduce(w).twist(-1)
        equiv_bad += eta0_reduce(pi_shift(s)) != eta0_reduce(s).twist(-1)
    dt = time.perf_counter() - t0
    ok = pi_ok and not (block_bad or minimal_bad or equiv_bad)
    detail = f"Pi(1)=Pi {pi_ok}, failures block {block_bad}, minimality {minimal_bad}, eta0 {equiv_bad}"
    report(8, "Pi-shift laws", ok, detail, dt)


def test_criterion_09_ground_state_conservation():
    t0 = time.perf_counter()
    rng = random.Random(9)
    bad = 0
    for _ in range(100):
        n = rng.randint(0, 4)
        m = rng.randint(n, 4)
        r = m - n

        def pick():
            crosses = frozenset(rng.sample(range(-4, 5), r))
            N = rng.randint(0, 3) if r else rng.randint(-3, 3)
            return ground_state(BlockLabel(crosses), N, m, n)

        w1, w2 = pick(), pick()
        res = tensor_ground_states(w1, w2)
        bad += sdim(w1) * sdim(w2) != sum(s.multiplicity * s.sdim for s in res.summands)
    dt = time.perf_counter() - t0
    report(9, "ground-state fusion conserves sdim", not bad, f"{bad}/100 failures", dt)


def test_criterion_10_kac_window():
    t0 = time.perf_counter()
    rng = random.Random(10)
    bad = 0
    for _ in range(100):
        n = rng.randint(1, 3)
        w = random_max_atypical(rng, n + rng.randint(0, 2), n, spread=5)
        lo, hi = kac_window(w)
        bad += kac_composition_factors(w, window=(lo - (hi - lo + 1), hi)) != kac_composition_factors(w)
    dt = time.perf_counter() - t0
    report(10, "Kac window doubling", not bad, f"{bad}/100 changed", dt)


def test_criterion_11_cli_golden_files():
    t0 = time.perf_counter()
    runner = CliRunner()
    cases = [
        (["diagram", "gl(2|2) [0,0 | 0,0]"], "diagram_trivial22.txt"),
        (["diagram", "gl(4|2) [0,0,0,-5 | 5,0]"], "diagram_ds_example.txt"),
        (["ds", "gl(4|2) [0,0,0,-5 | 5,0]"], "ds_example.txt"),
        (["--json", "tensor", str(A), str(B), "--fusion", str(GOLDEN / "gsp6.json")], "tensor_gsp6.json"),
    ]
    bad = []
    for args, fixture in cases:
        result = runner.invoke(main, args)
        if result.exit_code or result.output.encode() != (GOLDEN / fixture).read_bytes():
            bad.append(fixture)
    dt = time.perf_counter() - t0
    report(11, "CLI golden files", not bad, f"differing: {bad}", dt)
