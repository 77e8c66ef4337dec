import re

import pytest

from ucycles.alphabet import (
    alphabet_lower_bound,
    build_poset,
    cover_relations,
    maximal_chain_lengths,
    relabel_min,
)
from ucycles.errors import InvalidInputError
from ucycles.generator import generate_u_word
from ucycles.verifier import check_u_cycle, check_u_word

PI3 = (7, 8, 6, 1, 3, 2, 4, 5)
# The u-word behind the paper's printed n = 4 cycle (last n-1 letters restored).
PAPER_PI_PRIME_4 = (25, 26, 27, 24, 23, 21, 22, 3, 20, 4, 2, 19, 1, 6, 7, 5, 11, 10, 8, 13, 9, 12, 15, 14, 16, 17, 18)

# Hasse diagrams drawn in the paper's figure, on letter values.
FIGURE_N3 = "(1)--(2)--(3)--(4)--(5) (3)--(6)--(7)--(8)"
FIGURE_N4 = (
    "(1)--(2)--(3)--(4)--(19)--(20)--(21)--(22)--(23)--(24)--(25)--(26)--(27) "
    "(1)--(5)--(6)--(7)--(19) (2)--(6) (5)--(8)--(9)--(10)--(11)--(13)--(15)--(16)--(17)--(18) "
    "(7)--(10) (9)--(12)--(13) (12)--(14)--(15)"
)


def _figure_edges(text):
    edges = set()
    for chain in text.split():
        v = [int(x) for x in re.findall(r"\((\d+)\)", chain)]
        edges |= set(zip(v, v[1:]))
    return edges


def _value_covers(w, n):
    dag = build_poset(w, n)
    return {(w[j - 1], w[k - 1]) for j, k in cover_relations(w, dag)}


def _brute_height(w, n):
    """Longest chain by exhaustive DFS over the closure, counted in elements."""
    L = len(w)
    above = {p: [q for q in range(L) if abs(p - q) < n and w[q] > w[p]] for p in range(L)}
    memo = {}

    def longest(p):
        if p not in memo:
            memo[p] = 1 + max((longest(q) for q in above[p]), default=0)
        return memo[p]

    return max(longest(p) for p in range(L))


def test_pi3_height_and_relabel():
    dag = build_poset(PI3, 3)
    assert dag.height == 6
    assert relabel_min(PI3, 3) == (5, 6, 4, 1, 3, 2, 4, 5)


def test_chain():
    dag = build_poset((1, 2, 3), 2)
    assert dag.height == 3
    assert dag.edges == [(1, 2), (2, 3)]
    assert relabel_min((1, 2, 3), 2) == (1, 2, 3)


def test_figures_match_paper_words():
    assert _value_covers(PI3, 3) == _figure_edges(FIGURE_N3)
    assert _value_covers(PAPER_PI_PRIME_4, 4) == _figure_edges(FIGURE_N4)
    assert build_poset(PAPER_PI_PRIME_4, 4).height == 13


def test_greedy_pi4_height():
    w = generate_u_word(4).u_word
    assert build_poset(w, 4).height == 14 == _brute_height(w, 4)


@pytest.mark.parametrize("n", range(2, 7))
def test_heights_against_brute_force(n):
    w = generate_u_word(n).u_word
    assert build_poset(w, n).height == _brute_height(w, n)


@pytest.mark.parametrize("n", range(2, 8))
def test_relabel_preserves_windows(n):
    w = generate_u_word(n).u_word
    r = relabel_min(w, n)
    before = check_u_word(w, n)
    after = check_u_word(r, n)
    assert after.verdict
    assert after.patterns == before.patterns
    assert len(set(r)) == build_poset(w, n).height
    for p in range(len(r)):
        for q in range(p + 1, min(len(r), p + n)):
            assert r[p] != r[q]


@pytest.mark.parametrize("n", range(4, 8))
def test_lower_bound(n):
    assert build_poset(generate_u_word(n).u_word, n).height >= alphabet_lower_bound(n)


def test_lower_bound_values():
    assert alphabet_lower_bound(4) == 6
    assert alphabet_lower_bound(3) == 4
    assert alphabet_lower_bound(5) == 8
    assert build_poset(generate_u_word(5).u_word, 5).height >= 8
    with pytest.raises(InvalidInputError):
        alphabet_lower_bound(1)


@pytest.mark.parametrize("w", [generate_u_word(4).u_word, PAPER_PI_PRIME_4])
def test_n4_poset_not_graded(w):
    dag = build_poset(w, 4)
    short, long_ = maximal_chain_lengths(w, dag)
    assert len(short) < len(long_)
    assert len(long_) == dag.height
    covers = set(cover_relations(w, dag))
    for chain in (short, long_):
        assert all((a, b) in covers for a, b in zip(chain, chain[1:]))


def test_heights_recurrence():
    w = generate_u_word(5).u_word
    dag = build_poset(w, 5)
    preds = dag.predecessors()
    for k in range(len(w)):
        assert dag.heights[k] == 1 + max((dag.heights[j] for j in preds[k]), default=0)


@pytest.mark.parametrize("n", range(3, 7))
def test_cyclic_mode_invariants(n):
    res = generate_u_word(n)
    c = res.u_cycle
    dag = build_poset(c, n, cyclic=True)
    assert dag.height >= build_poset(c, n).height
    r = relabel_min(c, n, cyclic=True)
    assert check_u_cycle(r, n).verdict
    assert check_u_cycle(r, n).patterns == check_u_cycle(c, n).patterns


def test_edge_list_text():
    dag = build_poset((1, 2, 3), 2)
    assert dag.edge_list_text() == "1 2\n2 3\n"


def test_errors():
    with pytest.raises(InvalidInputError):
        build_poset((1, 2), 3)
    with pytest.raises(InvalidInputError):
        build_poset((1, 1, 2), 2)
