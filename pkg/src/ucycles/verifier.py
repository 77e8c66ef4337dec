"""Brute-force exact-cover checks for universal words and cycles.

Windows are recomputed from scratch here; nothing is shared with the
generator beyond ``perm_core.reduce``.
"""

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from typing import Sequence

from .errors import InvalidInputError, MalformedWindowError
from .perm_core import ReducedPerm, reduce


@dataclass
class CoverageReport:
    n: int
    mode: str  # "linear" or "cyclic"
    total_windows: int
    covered: set = field(default_factory=set)
    missing: list[ReducedPerm] = field(default_factory=list)
    duplicated: list[tuple[ReducedPerm, list[int]]] = field(default_factory=list)
    patterns: list[ReducedPerm] = field(default_factory=list, repr=False)

    @property
    def verdict(self) -> bool:
        return not self.missing and not self.duplicated and self.total_windows == factorial(self.n)


def _window_patterns(w: Sequence[int], n: int, cyclic: bool) -> list[ReducedPerm]:
    L = len(w)
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if n > L:
        raise InvalidInputError(f"n={n} exceeds word length {L}")
    ww = tuple(w) + tuple(w[: n - 1]) if cyclic else tuple(w)
    count = L if cyclic else L - n + 1
    out = []
    for j in range(count):
        win = ww[j : j + n]
        if len(set(win)) != n:
            raise MalformedWindowError(j + 1, win)
        out.append(reduce(win))
    return out


def _report(w, n, cyclic) -> CoverageReport:
    pats = _window_patterns(w, n, cyclic)
    where: dict = {}
    for pos, p in enumerate(pats, 1):
        where.setdefault(p, []).append(pos)
    covered = set(where)
    missing = [p for p in permutations(range(1, n + 1)) if p not in covered]
    duplicated = sorted((p, ps) for p, ps in where.items() if len(ps) > 1)
    return CoverageReport(
        n=n,
        mode="cyclic" if cyclic else "linear",
        total_windows=len(pats),
        covered=covered,
        missing=missing,
        duplicated=duplicated,
        patterns=pats,
    )


def check_u_word(w: Sequence[int], n: int) -> CoverageReport:
    """Exact-cover report over the ``len(w) - n + 1`` linear windows of ``w``.

    Letters may repeat across the word, but not inside a window.
    """
    return _report(w, n, cyclic=False)


def check_u_cycle(w: Sequence[int], n: int) -> CoverageReport:
    """Exact-cover report over the ``len(w)`` cyclic windows of ``w``."""
    return _report(w, n, cyclic=True)
