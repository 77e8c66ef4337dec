"""Letter-reuse poset on the positions of a word and its minimal relabeling.

Positions j, k are related (j below k) when they lie within window distance
(|k - j| < n, or cyclic distance in cyclic mode) and a_j < a_k. The poset is
the transitive closure of these generator edges. Its height, counted in
elements, is the smallest alphabet over which the word can be rewritten
while keeping every length-n window order-isomorphic.
"""

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInputError


@dataclass
class PosetDag:
    node_count: int
    n: int
    cyclic: bool
    edges: list[tuple[int, int]]  # 1-based (j, k) with a_j < a_k, sorted
    heights: list[int]  # heights[p] for 0-based position p; 1 for minimal elements

    @property
    def height(self) -> int:
        return max(self.heights, default=0)

    def predecessors(self) -> list[list[int]]:
        preds: list[list[int]] = [[] for _ in range(self.node_count)]
        for j, k in self.edges:
            preds[k - 1].append(j - 1)
        return preds

    def edge_list_text(self) -> str:
        return "".join(f"{j} {k}\n" for j, k in self.edges)


def _neighbors(p: int, L: int, n: int, cyclic: bool):
    if cyclic:
        # Within cyclic distance < n; dedupe when the word is short.
        return sorted({(p + d) % L for d in range(-(n - 1), n)} - {p})
    return [q for q in range(max(0, p - n + 1), min(L, p + n)) if q != p]


def build_poset(w: Sequence[int], n: int, cyclic: bool = False) -> PosetDag:
    L = len(w)
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if n > L:
        raise InvalidInputError(f"n={n} exceeds word length {L}")
    if len(set(w)) != L:
        raise InvalidInputError("poset construction needs pairwise distinct letters")

    edges = []
    preds: list[list[int]] = [[] for _ in range(L)]
    for p in range(L):
        for q in _neighbors(p, L, n, cyclic):
            if w[q] < w[p]:
                preds[p].append(q)
                edges.append((q + 1, p + 1))
    edges.sort()

    # Increasing letter value is a topological order of the generator edges.
    heights = [0] * L
    for p in sorted(range(L), key=w.__getitem__):
        heights[p] = 1 + max((heights[q] for q in preds[p]), default=0)
    return PosetDag(L, n, cyclic, edges, heights)


def relabel_min(w: Sequence[int], n: int, cyclic: bool = False) -> tuple[int, ...]:
    """Rewrite ``w`` over {1..height} by replacing each letter with its height.

    The result usually repeats letters, but never inside a length-n window.
    """
    return tuple(build_poset(w, n, cyclic).heights)


def alphabet_lower_bound(n: int) -> int:
    """Lower bound 2n - 2 on the alphabet size of the greedy u-word."""
    if n < 2:
        raise InvalidInputError("lower bound is stated for n >= 2")
    return 2 * n - 2


def _up_sets(dag: PosetDag, values: Sequence[int]) -> list[int]:
    """Strict up-set of each position as a bitmask (transitive closure)."""
    succ: list[list[int]] = [[] for _ in range(dag.node_count)]
    for j, k in dag.edges:
        succ[j - 1].append(k - 1)
    up = [0] * dag.node_count
    for p in sorted(range(dag.node_count), key=values.__getitem__, reverse=True):
        mask = 0
        for q in succ[p]:
            mask |= (1 << q) | up[q]
        up[p] = mask
    return up


def cover_relations(w: Sequence[int], dag: PosetDag) -> list[tuple[int, int]]:
    """Hasse diagram edges as 1-based position pairs. Quadratic; meant for small words."""
    up = _up_sets(dag, w)
    covers = []
    for p in range(dag.node_count):
        above = up[p]
        # q covers p iff q is above p but not above any other element above p.
        through = 0
        rest = above
        while rest:
            low = rest & -rest
            r = low.bit_length() - 1
            through |= up[r]
            rest ^= low
        direct = above & ~through
        while direct:
            low = direct & -direct
            covers.append((p + 1, low.bit_length()))
            direct ^= low
    covers.sort()
    return covers


def maximal_chain_lengths(w: Sequence[int], dag: PosetDag) -> tuple[list[int], list[int]]:
    """A shortest and a longest maximal chain, as 1-based position lists.

    Maximal chains are the minimal-to-maximal paths in the Hasse diagram; the
    poset is graded exactly when both have the same length.
    """
    L = dag.node_count
    covers = cover_relations(w, dag)
    up_c: list[list[int]] = [[] for _ in range(L)]
    has_lower = [False] * L
    for j, k in covers:
        up_c[j - 1].append(k - 1)
        has_lower[k - 1] = True

    order = sorted(range(L), key=w.__getitem__, reverse=True)
    shortest: dict = {}
    longest: dict = {}
    for p in order:
        if not up_c[p]:
            shortest[p] = longest[p] = [p]
            continue
        shortest[p] = [p] + min((shortest[q] for q in up_c[p]), key=len)
        longest[p] = [p] + max((longest[q] for q in up_c[p]), key=len)
    minimal = [p for p in range(L) if not has_lower[p]]
    lo = min((shortest[p] for p in minimal), key=len)
    hi = max((longest[p] for p in minimal), key=len)
    return [p + 1 for p in lo], [p + 1 for p in hi]
