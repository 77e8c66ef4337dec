"""de Bruijn sequences: prefer-smallest greedy, Lyndon concatenation, and a checker."""

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import CapacityError, InvalidInputError

DEFAULT_BUDGET = 2**24


def _check_kn(k: int, n: int, budget: int) -> None:
    if k < 2:
        raise InvalidInputError(f"alphabet size k must be >= 2, got {k}")
    if n < 1:
        raise InvalidInputError(f"factor length n must be >= 1, got {n}")
    if k**n > budget:
        raise CapacityError(f"k^n = {k}^{n} exceeds the budget of {budget} letters")


def martin(k: int, n: int, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Greedy prefer-smallest de Bruijn cycle over {0..k-1}.

    Starts from (k-1)^(n-1), appends the smallest letter that keeps all
    length-n factors distinct until stuck, then drops the last n-1 letters.
    """
    _check_kn(k, n, budget)
    total = k**n
    top = k ** (n - 1)  # weight of the oldest letter in a length-n key
    seen = bytearray(total)
    word = [k - 1] * (n - 1)
    # Base-k value of the last n-1 letters.
    tail = 0
    for x in word:
        tail = tail * k + x
    while True:
        prefix = tail * k
        for a in range(k):
            if not seen[prefix + a]:
                break
        else:
            break
        key = prefix + a
        seen[key] = 1
        word.append(a)
        tail = key % top
    return tuple(word[: len(word) - (n - 1)])


def lyndon_words(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """Lyndon words over {0..k-1} of length <= n in lexicographic order (Duval's successor)."""
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


def lyndon_concat(k: int, n: int, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Concatenate, in lexicographic order, the Lyndon words whose length divides n."""
    _check_kn(k, n, budget)
    out: list[int] = []
    for lw in lyndon_words(k, n):
        if n % len(lw) == 0:
            out.extend(lw)
    return tuple(out)


@dataclass
class DeBruijnReport:
    k: int
    n: int
    length: int
    missing: list[tuple[int, ...]] = field(default_factory=list)
    duplicated: list[tuple[tuple[int, ...], list[int]]] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.length == self.k**self.n and not self.missing and not self.duplicated


def _decode(key: int, k: int, n: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        key, d = divmod(key, k)
        digits.append(d)
    return tuple(reversed(digits))


def is_de_bruijn(w: Sequence[int], k: int, n: int) -> DeBruijnReport:
    """Check that every length-n word over {0..k-1} is a cyclic factor of ``w`` exactly once.

    Missing and duplicated factors are listed for diagnostics; positions are 1-based.
    """
    if k < 2 or n < 1:
        raise InvalidInputError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    bad = [x for x in w if not 0 <= x < k]
    if bad:
        raise InvalidInputError(f"letter {bad[0]} outside alphabet 0..{k - 1}")
    L = len(w)
    if L == 0:
        return DeBruijnReport(k, n, 0, [_decode(x, k, n) for x in range(k**n)])
    where: dict[int, list[int]] = {}
    for j in range(L):
        key = 0
        for t in range(n):
            key = key * k + w[(j + t) % L]
        where.setdefault(key, []).append(j + 1)
    total = k**n
    missing = [_decode(x, k, n) for x in range(total) if x not in where]
    duplicated = [(_decode(x, k, n), ps) for x, ps in sorted(where.items()) if len(ps) > 1]
    return DeBruijnReport(k, n, L, missing, duplicated)


def is_rotation(u: Sequence[int], v: Sequence[int]) -> bool:
    """True when ``v`` is a cyclic rotation of ``u``."""
    if len(u) != len(v):
        return False
    if not u:
        return True
    sep = "," if max(max(u), max(v)) > 9 else ""
    su = sep.join(map(str, u))
    sv = sep.join(map(str, v))
    if sep:
        return f",{sv}," in f",{su},{su},"
    return sv in su + su
