import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import pi_shift_by_translation
from strategies import max_atypical, weights
from supercup.errors import DomainError
from supercup.functors import (
    clear_path_cache,
    ds,
    ds_paths,
    ds_power,
    dual,
    eta0_lift,
    eta0_reduce,
    ground_state,
    ground_state_index,
    pi_power,
    pi_shift,
    pi_unshift,
    stabilize,
    translate_E,
    translate_F,
)
from supercup.weights import (
    SuperWeight,
    atypicality,
    berezinian,
    block_label,
    is_maximal_atypical,
    is_negatively_stable,
    is_stable,
    trivial,
    weight_to_diagram,
)


@pytest.mark.parametrize("m,i", [(4, 5), (3, 2), (5, 7), (3, 4), (4, 1)])
def test_ds_of_hook_example(m, i):
    w = SuperWeight(m, 2, (0,) * (m - 1) + (-i,), (i, 0))
    got = {(s.weight, s.parity_shift) for s in ds(w).summands}
    bent = SuperWeight(m - 1, 1, (0,) * (m - 2) + (-i - 1,), (i + 1,))
    # the unit is shifted only for odd i; both shifts would force sdim = 0 for even i
    assert got == {(trivial(m - 1, 1), i % 2), (bent, 1)}


def test_ds_trivial_and_ber():
    assert [(s.weight, s.parity_shift) for s in ds(trivial(2, 2)).summands] == [(trivial(1, 1), 0)]
    assert [(s.weight, s.parity_shift) for s in ds(berezinian(1, 1)).summands] == [(trivial(0, 0), 1)]


@given(max_atypical(max_n=3, max_r=2).filter(lambda w: w.n > 0))
def test_ds_maps_ber_twists_to_ber_twists(w):
    # DS is a tensor functor, and Ber restricts to Ber
    plain = sorted(s.weight for s in ds(w).summands)
    twisted = sorted(s.weight.twist(-1) for s in ds(w.twist(1)).summands)
    assert plain == twisted


@given(max_atypical(max_n=3, max_r=2).filter(lambda w: w.n > 0))
def test_ds_commutes_with_dual(w):
    assert sorted(dual(s.weight) for s in ds(w).summands) == sorted(s.weight for s in ds(dual(w)).summands)


def test_ds_typical_is_dropped():
    dec = ds(SuperWeight(1, 1, (1,), (0,)))
    assert len(dec) == 0 and dec.dropped_negligible


def test_ds_domain():
    with pytest.raises(DomainError):
        ds(trivial(2, 0))


def test_ds_power_aggregates():
    dec = ds_power(trivial(2, 2), 2)
    assert [(s.weight, s.parity_shift, s.multiplicity) for s in dec.summands] == [(trivial(0, 0), 0, 1)]
    dec = ds_power(SuperWeight(2, 2, (1, 0), (0, -1)), 2)
    assert [(s.weight, s.multiplicity) for s in dec.summands] == [(trivial(0, 0), 2)]


def test_ds_paths():
    assert ds_paths(SuperWeight(2, 2, (1, 0), (0, -1))) == (2, -1)
    assert ds_paths(berezinian(3, 2)) == (1, 1)
    clear_path_cache()
    assert ds_paths(trivial(4, 4)) == (1, 1)
    with pytest.raises(DomainError):
        ds_paths(SuperWeight(1, 1, (1,), (0,)))


@given(weights())
def test_dual_is_involution(w):
    assert dual(dual(w)) == w


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (3, 2)])
def test_dual_of_standard_and_ber(m, n):
    std = SuperWeight(m, n, (1,) + (0,) * (m - 1), (0,) * n)
    assert dual(std) == SuperWeight(m, n, (0,) * m, (0,) * (n - 1) + (-1,))
    assert dual(berezinian(m, n)) == berezinian(m, n, -1)
    assert dual(trivial(m, n)) == trivial(m, n)


def test_translation_rules():
    w = trivial(2, 1)  # v at -1, x at 0
    out = translate_F(0, w)
    assert out.kind == "irreducible" and weight_to_diagram(out.weight).crosses == {1}
    assert translate_F(-1, w).kind == "zero"
    out = translate_E(-1, w)
    assert out.kind == "irreducible"
    assert weight_to_diagram(out.weight).label(-1) == "x" and weight_to_diagram(out.weight).label(0) == "v"
    # case v^ -> ox leaves a typical weight
    out = translate_F(0, trivial(1, 1))
    assert out.kind == "irreducible"
    d = weight_to_diagram(out.weight)
    assert d.label(0) == "o" and d.label(1) == "x" and not d.vees


def test_translation_wide_cases():
    xo = SuperWeight(1, 1, (0,), (-1,))  # x at 0, o at 1
    assert translate_F(0, xo).kind == "non_irreducible"
    ox = SuperWeight(1, 1, (1,), (0,))  # x at 1, o at 0
    assert translate_E(0, ox).kind == "non_irreducible"


def test_pi_on_trivial_gl21():
    assert pi_shift(trivial(2, 1)) == SuperWeight(2, 1, (0, -1), (1,))


@given(max_atypical(max_n=3, max_r=3, min_r=1))
def test_pi_shift_matches_translation_oracle(w):
    assert pi_shift(w) == pi_shift_by_translation(w)


@given(max_atypical(max_n=3, max_r=3, min_r=1))
def test_pi_shift_preserves_block_and_inverts(w):
    v = pi_shift(w)
    assert block_label(v) == block_label(w)
    assert pi_unshift(v) == w
    assert pi_power(w, 3) == pi_shift(pi_shift(pi_shift(w)))
    assert pi_power(pi_power(w, 2), -2) == w


@given(max_atypical(max_n=3, max_r=3, min_r=1))
def test_stabilize_is_minimal(w):
    s, N = stabilize(w)
    assert is_negatively_stable(s)
    assert s == pi_power(w, N)
    if N:
        assert not is_negatively_stable(pi_power(w, N - 1))


@given(max_atypical(max_n=3, max_r=3, min_r=1))
def test_eta0_equivariance(w):
    s, _ = stabilize(w)
    assert is_stable(pi_shift(s))
    assert eta0_reduce(pi_shift(s)) == eta0_reduce(s).twist(-1)


@given(max_atypical(max_n=3, max_r=3))
def test_eta0_lift_inverts_reduce(w):
    assert eta0_lift(eta0_reduce(w), block_label(w), w.m) == w


def test_eta0_on_stable_weight():
    # stable weights (lam_1..lam_r, mu | -mu) reduce to (mu | -mu)
    w = SuperWeight(5, 2, (4, 3, 3, 0, -1), (1, 0))
    assert is_stable(w)
    assert eta0_reduce(w) == SuperWeight(2, 2, (0, -1), (1, 0))


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 4), st.lists(st.integers(-4, 4), unique=True, max_size=3))
def test_ground_states(n, extra, N, crosses):
    r = len(crosses)
    if r == 0:
        N -= extra
    from supercup.weights import BlockLabel

    w = ground_state(BlockLabel(frozenset(crosses)), N, n + r, n)
    assert is_maximal_atypical(w)
    assert ground_state_index(w) == (N if n else 0)
    if n and r:
        assert ds_paths(w)[0] == 1


def test_ground_state_domain():
    from supercup.weights import BlockLabel

    with pytest.raises(DomainError):
        ground_state(BlockLabel(frozenset({0})), -1, 2, 1)
    assert ground_state_index(SuperWeight(2, 2, (2, 0), (0, -2))) is None
    assert atypicality(ground_state(BlockLabel(frozenset()), -2, 2, 2)) == 2
