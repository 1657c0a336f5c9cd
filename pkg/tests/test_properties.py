"""Property-based suites over exact algebraic invariants.

Strategies draw small systems (and E6 where it matters), random root pairs,
random Pi-systems built by greedy compatible sampling, random weight
vectors, and random Weyl words.  All suites are deterministic
(derandomized) and use exact arithmetic end to end.
"""

from fractions import Fraction

from hypothesis import HealthCheck, given, settings, strategies as st

from rootforge import (
    CorootVector,
    RootClass,
    WeightedDiagram,
    apply_word,
    check_pi_system,
    coroot_of_weights,
    dominate,
    family_system,
    generate,
    is_positive,
    positive_basis,
    rebase_hermitian,
    reflect,
    scale,
    span_subsystem,
    weights_of,
    weyl_equivalent,
)
from rootforge.errors import RootForgeError
from rootforge.hermitian import HermitianMarking
from rootforge.wdd import reflect_weights

SETTINGS = settings(
    max_examples=300,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)

SMALL_POOL = [("A", 2), ("A", 3), ("A", 4), ("D", 4), ("D", 5)]
FULL_POOL = SMALL_POOL + [("E", 6)]


def _system(draw, pool):
    family, rank = draw(st.sampled_from(pool))
    return family_system(family, rank)


@st.composite
def system_and_root_pair(draw):
    sys = _system(draw, FULL_POOL)
    roots = sorted(sys.roots)
    a = draw(st.sampled_from(roots))
    b = draw(st.sampled_from(roots))
    return sys, a, b


def greedy_pi_system(sys, seed_roots, size):
    """Grow a Pi-system by keeping only compatible, independent roots."""
    chosen = []
    for r in seed_roots:
        if len(chosen) == size:
            break
        candidate = chosen + [r]
        try:
            check_pi_system(sys, candidate)
        except RootForgeError:
            continue
        chosen = candidate
    return chosen


@st.composite
def system_and_pi(draw, pool=FULL_POOL, max_size=4):
    sys = _system(draw, pool)
    roots = sorted(sys.roots)
    size = draw(st.integers(min_value=1, max_value=min(max_size, sys.rank)))
    picks = draw(
        st.lists(st.sampled_from(roots), min_size=size, max_size=4 * size)
    )
    chosen = greedy_pi_system(sys, picks, size)
    if not chosen:
        chosen = [roots[draw(st.integers(min_value=0, max_value=len(roots) - 1))]]
    return sys, tuple(chosen)


@st.composite
def weights_case(draw):
    sys = _system(draw, FULL_POOL)
    vals = draw(
        st.lists(
            st.integers(min_value=-8, max_value=8),
            min_size=sys.rank,
            max_size=sys.rank,
        )
    )
    return sys, WeightedDiagram(system=sys, weights=tuple(Fraction(v) for v in vals))


@SETTINGS
@given(system_and_root_pair())
def test_reflection_closure(case):
    sys, a, b = case
    assert reflect(sys, a, b) in sys.roots


@SETTINGS
@given(system_and_root_pair())
def test_reflection_involution(case):
    sys, a, b = case
    assert reflect(sys, a, reflect(sys, a, b)) == b


@SETTINGS
@given(system_and_pi())
def test_generate_positive_basis_identity(case):
    sys, gens = case
    sub = span_subsystem(sys, gens)
    basis = positive_basis(sub)
    assert all(is_positive(b) for b in basis)
    check_pi_system(sys, basis)
    assert span_subsystem(sys, basis).roots == sub.roots


@SETTINGS
@given(system_and_pi(pool=[("E", 6), ("E", 7)], max_size=4))
def test_rebase_one_noncompact_per_component(case):
    sys, gens = case
    marking = HermitianMarking(system=sys, nc_index=0)
    sub = span_subsystem(sys, gens)
    basis, marks = rebase_hermitian(marking, sub)
    n = len(basis)
    comp = list(range(n))

    def find(i):
        while comp[i] != i:
            comp[i] = comp[comp[i]]
            i = comp[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if sys.inner(basis[i], basis[j]) != 0:
                comp[find(i)] = find(j)
    counts = {}
    for i in range(n):
        if marks[i] is not RootClass.COMPACT:
            counts[find(i)] = counts.get(find(i), 0) + 1
    assert all(v == 1 for v in counts.values())


@SETTINGS
@given(weights_case())
def test_dominate_idempotent_and_nonnegative(case):
    _, w = case
    dom, word = dominate(w)
    assert all(x >= 0 for x in dom.weights)
    again, word2 = dominate(dom)
    assert again.weights == dom.weights and word2 == ()


@SETTINGS
@given(weights_case(), st.lists(st.integers(min_value=0, max_value=6), max_size=8))
def test_dominate_orbit_invariance(case, word_nodes):
    sys, w = case
    moved = w
    for i in word_nodes:
        moved = reflect_weights(moved, i % sys.rank)
    d1, _ = dominate(w)
    d2, _ = dominate(moved)
    assert d1.weights == d2.weights


@SETTINGS
@given(weights_case(), st.integers(min_value=1, max_value=5))
def test_dominate_scale_equivariance(case, k):
    _, w = case
    d1, _ = dominate(scale(w, k))
    d2, _ = dominate(w)
    assert d1.weights == scale(d2, k).weights


@SETTINGS
@given(weights_case())
def test_weight_coroot_round_trip(case):
    sys, w = case
    h = coroot_of_weights(w)
    assert weights_of(h).weights == w.weights


@SETTINGS
@given(weights_case())
def test_coroot_weight_round_trip(case):
    sys, w = case
    h = CorootVector(system=sys, coords=w.weights)
    assert coroot_of_weights(weights_of(h)).coords == h.coords


@SETTINGS
@given(system_and_pi(pool=SMALL_POOL, max_size=3),
       st.lists(st.integers(min_value=0, max_value=6), max_size=6))
def test_weyl_witness_soundness(case, word_nodes):
    from rootforge.pisys import SubrootSystem

    sys, gens = case
    a = span_subsystem(sys, gens)
    image = frozenset(a.roots)
    for i in word_nodes:
        s = sys.simple(i % sys.rank)
        image = apply_word(sys, (s,), image)
    b = SubrootSystem(system=sys, roots=image, basis=a.basis)
    word = weyl_equivalent(sys, a, b)
    assert word is not None
    assert apply_word(sys, word, tuple(a.roots)) == b.roots


@SETTINGS
@given(system_and_pi(pool=[("E", 6)], max_size=3))
def test_weyl_equivalence_reflexive_via_identity(case):
    sys, gens = case
    a = span_subsystem(sys, gens)
    assert weyl_equivalent(sys, a, a) == ()
