"""Order-isomorphism primitives: reduction, right extensions and windows.

Words are plain tuples of positive integers. Only the relative order of the
letters matters, so letters need not be contiguous.
"""

from itertools import permutations
from typing import Sequence

from .errors import InvalidInputError

PermWord = tuple[int, ...]
ReducedPerm = tuple[int, ...]


def reduce(w: Sequence[int]) -> ReducedPerm:
    """Return the pattern of ``w``: its i-th smallest letter replaced by i.

    >>> reduce((3, 2, 7, 5))
    (2, 1, 4, 3)
    """
    if len(w) == 0:
        raise InvalidInputError("cannot reduce an empty word")
    order = sorted(range(len(w)), key=w.__getitem__)
    out = [0] * len(w)
    prev = None
    for rank, pos in enumerate(order, 1):
        if w[pos] == prev:
            raise InvalidInputError(f"duplicate letter {prev} in {tuple(w)}")
        prev = w[pos]
        out[pos] = rank
    return tuple(out)


def is_reduced(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def extend(w: Sequence[int], i: int) -> PermWord:
    """The i-th right extension of ``w`` (1 <= i <= len(w) + 1).

    For i <= len(w) the appended letter b is the i-th smallest letter of w
    and every letter >= b is shifted up by one; for i = len(w) + 1 the
    appended letter is max(w) + 1.
    """
    m = len(w)
    if m == 0:
        raise InvalidInputError("cannot extend an empty word")
    if not 1 <= i <= m + 1:
        raise InvalidInputError(f"extension index {i} outside [1, {m + 1}]")
    if len(set(w)) != m:
        raise InvalidInputError(f"duplicate letters in {tuple(w)}")
    b = sorted(w)[i - 1] if i <= m else max(w) + 1
    return tuple(x + 1 if x >= b else x for x in w) + (b,)


def extend_pattern(p: ReducedPerm, i: int) -> ReducedPerm:
    """Pattern of the i-th extension of a reduced permutation ``p``.

    Equivalent to ``reduce(extend(p, i))`` but without the sort.
    """
    return tuple(x + 1 if x >= i else x for x in p) + (i,)


def windows(w: Sequence[int], n: int, cyclic: bool = False) -> list[ReducedPerm]:
    """Reduced length-n factors of ``w`` in position order.

    Linear mode yields ``len(w) - n + 1`` windows, cyclic mode ``len(w)``.
    """
    L = len(w)
    if n < 1:
        raise InvalidInputError(f"window length must be >= 1, got {n}")
    if n > L:
        raise InvalidInputError(f"window length {n} exceeds word length {L}")
    if cyclic:
        ww = tuple(w) + tuple(w[: n - 1])
        return [reduce(ww[j : j + n]) for j in range(L)]
    return [reduce(w[j : j + n]) for j in range(L - n + 1)]


def all_perms(n: int) -> list[ReducedPerm]:
    """All n-permutations of {1..n} in lexicographic order."""
    return list(permutations(range(1, n + 1)))


def identity(n: int) -> ReducedPerm:
    return tuple(range(1, n + 1))
