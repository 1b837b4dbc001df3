"""Acceptance suite: every structural theorem checked exhaustively on the
shipped fixtures plus 200 seeded random maps (m <= 7).

Each criterion prints its own PASS/FAIL line (run pytest -s to see them on
success).
"""

import time

import pytest

from mapdelta import (
    check_symmetric_exchange,
    cotree_bases,
    enumerate_feasible_gamma,
    enumerate_feasible_k,
    find_hamiltonian,
    is_fully_black_hamiltonian,
    lower_matroid,
    parity_uniform,
    spanning_tree_bases,
    upper_matroid,
)
from mapdelta.errors import AmbiguousCorners, AmbiguousGluing
from mapdelta.families import SetFamily
from mapdelta.fixtures import all_fixtures, get_fixture
from mapdelta.random_maps import random_corpus
from mapdelta.rebuild import build_map, recover_rotations, roundtrip_check

CORPUS_SEED = 1105
N_RANDOM = 200

TWELVE_TRIPLES = [
    {1, 3, 4}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 4},
    {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}, {3, 4, 5}, {3, 4, 6},
]
TWO_FIVE_SETS = [{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}]
EVEN_EXTRA = {1, 2, 3, 4}


@pytest.fixture(scope="module")
def corpus():
    maps = all_fixtures() + random_corpus(CORPUS_SEED, N_RANDOM, max_edges=7)
    assert len(maps) == 7 + N_RANDOM
    return [(m, enumerate_feasible_gamma(m), enumerate_feasible_k(m)) for m in maps]


def report(number, label, passed):
    print("criterion %d (%s): %s" % (number, label, "PASS" if passed else "FAIL"))
    assert passed, "criterion %d (%s) failed" % (number, label)


def test_criterion_1_gamma_is_delta_matroid(corpus):
    start = time.monotonic()
    ok = True
    for m, f_gamma, _ in corpus:
        ok = ok and len(f_gamma) > 0 and check_symmetric_exchange(f_gamma)[0]
    elapsed = time.monotonic() - start
    report(1, "gamma families nonempty and pass symmetric exchange", ok and elapsed < 30.0)


def test_criterion_2_upper_lower_identities(corpus):
    ok = True
    for m, f_gamma, _ in corpus:
        lower_ok = lower_matroid(f_gamma).bases == spanning_tree_bases(m.underlying_graph())
        upper_ok = upper_matroid(f_gamma).bases == cotree_bases(m.dual_graph())
        ok = ok and lower_ok and upper_ok
    report(2, "lower = spanning trees, upper = cotrees of the dual", ok)


def test_criterion_3_rank_gap(corpus):
    ok = True
    for m, f_gamma, _ in corpus:
        gap = upper_matroid(f_gamma).rank - lower_matroid(f_gamma).rank
        ok = ok and gap == 2 - m.euler_characteristic()
    report(3, "rank gap equals 2 - Euler characteristic", ok)


def test_criterion_4_parity_vs_orientability(corpus):
    ok = True
    for m, f_gamma, _ in corpus:
        if m.is_orientable():
            ok = ok and parity_uniform(f_gamma)
        else:
            ok = ok and {len(s) % 2 for s in f_gamma} == {0, 1}
    report(4, "parity uniform iff flag graph bipartite", ok)


def test_criterion_5_two_valent_delta_matroid(corpus):
    ok = True
    for m, f_gamma, f_k in corpus:
        ok = ok and check_symmetric_exchange(f_k)[0]
        ok = ok and f_gamma.is_subfamily_of(f_k)
        ok = ok and lower_matroid(f_k).bases == lower_matroid(f_gamma).bases
        ok = ok and upper_matroid(f_k).bases == upper_matroid(f_gamma).bases
    report(5, "2-valent family: delta-matroid, contains gamma, same matroids", ok)


def test_criterion_6_literal_families():
    torus = get_fixture("torus1v")
    ground = frozenset({1, 2})
    ok = enumerate_feasible_gamma(torus) == SetFamily.of(ground, [set(), {1, 2}])
    ok = ok and enumerate_feasible_k(torus) == SetFamily.of(ground, [set(), {1}, {2}, {1, 2}])

    g6 = range(1, 7)
    triples = SetFamily.of(g6, TWELVE_TRIPLES)
    ok = ok and len(triples) == 12
    ok = ok and check_symmetric_exchange(triples)[0] and parity_uniform(triples)

    bigger = SetFamily.of(g6, TWELVE_TRIPLES + TWO_FIVE_SETS)
    ok = ok and lower_matroid(bigger).rank == 3 and upper_matroid(bigger).rank == 5

    mixed = SetFamily.of(g6, TWELVE_TRIPLES + TWO_FIVE_SETS + [EVEN_EXTRA])
    ok = ok and len(mixed) == 15 and not parity_uniform(mixed)
    report(6, "literal example families behave as published", ok)


def test_criterion_7_reconstruction():
    start = time.monotonic()
    ok = roundtrip_check(get_fixture("k4sphere"))
    ok = ok and roundtrip_check(get_fixture("k5torus"))

    k5 = get_fixture("k5torus")
    g, d = k5.underlying_graph(), k5.dual_graph()
    rebuilt = build_map(g, d, recover_rotations(g, d))
    ok = ok and rebuilt.euler_characteristic() == 0

    for name in ("loop", "bridge"):
        try:
            roundtrip_check(get_fixture(name))
            ok = False  # must not silently produce a map
        except (AmbiguousCorners, AmbiguousGluing):
            pass
    elapsed = time.monotonic() - start
    report(7, "roundtrip on k4sphere/k5torus; ambiguity reported on loop/bridge",
           ok and elapsed < 10.0)


def test_criterion_8_swap_search(corpus):
    ok = True
    for m, f_gamma, _ in corpus:
        sel, swaps, initial = find_hamiltonian(m, with_stats=True)
        ok = ok and is_fully_black_hamiltonian(m, sel)
        ok = ok and swaps <= max(initial - 1, 0) and swaps <= m.n_edges
        ok = ok and sel.greens in f_gamma
    report(8, "swap search terminates within bound and is Hamiltonian", ok)
