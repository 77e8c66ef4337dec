"""Greedy construction of universal words and cycles for permutations.

The greedy run works on patterns only: the candidate n-window after taking
the i-th extension is fully determined by the pattern of the last n-1
letters. Actual letter values are resolved once at the end from an
order-maintenance list into which each new letter is spliced just below the
i-th smallest suffix letter (or just above the suffix maximum for i = n).
Applying c_b to the whole word at every step gives the same word.
"""

from collections import Counter, deque
from dataclasses import dataclass, field
from math import factorial
from typing import Optional, Sequence

from .errors import CapacityError, InvalidInputError
from .perm_core import PermWord, ReducedPerm, all_perms, extend_pattern, identity, is_reduced, reduce

DEFAULT_MAX_N = 8
DEFAULT_SCAN_MAX_N = 6


@dataclass(frozen=True)
class TraceStep:
    k: int
    sigma: Optional[ReducedPerm]  # window ending at position k+n-1; None for k = 0
    sigma_prime: ReducedPerm
    J: int
    i: int
    b: int  # appended letter, in the coordinates of the word after this step


@dataclass
class GenerationResult:
    n: int
    u_word: PermWord
    u_cycle: ReducedPerm
    trace: Optional[list[TraceStep]] = None
    terminal_J: int = 0


@dataclass
class StartScanResult:
    start: ReducedPerm
    terminal_word: PermWord
    covered_count: int
    missing: list[ReducedPerm] = field(default_factory=list)

    @property
    def is_u_word(self) -> bool:
        return not self.missing and self.covered_count == factorial(len(self.start) + 1)


@dataclass
class _Run:
    word: PermWord
    covered: set
    steps: list
    terminal_J: int


def _greedy(start: ReducedPerm, n: int, with_trace: bool) -> _Run:
    m = n - 1
    cap = factorial(n) + 1

    # Doubly linked list of node ids in increasing letter order; node id = position.
    nxt: list[int] = [-1] * m
    prv: list[int] = [-1] * m
    by_value = sorted(range(m), key=start.__getitem__)
    for a, b in zip(by_value, by_value[1:]):
        nxt[a] = b
        prv[b] = a
    head = by_value[0]

    suffix = deque(range(m))  # node ids of the last m letters
    s = tuple(start)
    covered: set = set()
    seen_suffix: Counter = Counter()
    steps = []
    # Linked-list splices are replayed onto c_b only when a trace is wanted.
    shadow = list(start) if with_trace else None
    prev_sigma = None
    k = 0

    while True:
        seen_suffix[s] += 1
        for i in range(1, n + 1):
            cand = extend_pattern(s, i)
            if cand not in covered:
                break
        else:
            return _Run(_materialize(head, nxt, len(prv)), covered, steps, seen_suffix[s])
        if k >= cap:
            raise RuntimeError(f"greedy run exceeded {cap} extensions")

        node = len(prv)
        nxt.append(-1)
        prv.append(-1)
        if i <= m:
            anchor = suffix[s.index(i)]
            before = prv[anchor]
            prv[node], nxt[node] = before, anchor
            prv[anchor] = node
            if before == -1:
                head = node
            else:
                nxt[before] = node
        else:
            anchor = suffix[s.index(m)]
            after = nxt[anchor]
            prv[node], nxt[node] = anchor, after
            nxt[anchor] = node
            if after != -1:
                prv[after] = node

        if shadow is not None:
            tail = shadow[-m:]
            b = sorted(tail)[i - 1] if i <= m else max(tail) + 1
            shadow = [x + 1 if x >= b else x for x in shadow]
            shadow.append(b)
            steps.append(TraceStep(k, prev_sigma, s, seen_suffix[s], i, b))

        covered.add(cand)
        suffix.append(node)
        suffix.popleft()
        first = cand[0]
        s = tuple(x - 1 if x > first else x for x in cand[1:])
        prev_sigma = cand
        k += 1


def _materialize(head: int, nxt: list[int], size: int) -> PermWord:
    values = [0] * size
    node, rank = head, 1
    while node != -1:
        values[node] = rank
        rank += 1
        node = nxt[node]
    return tuple(values)


def _check_n(n: int, max_n: int, what: str) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be a positive integer, got {n!r}")
    if n > max_n:
        raise CapacityError(f"{what} for n={n} exceeds the configured maximum n={max_n}")


def generate_u_word(n: int, with_trace: bool = False, max_n: int = DEFAULT_MAX_N) -> GenerationResult:
    """Run the greedy algorithm from 12...(n-1) and return the u-word and u-cycle.

    ``with_trace`` additionally records every extension step. Raises
    ``CapacityError`` when ``n > max_n``.
    """
    _check_n(n, max_n, "generation")
    if n == 1:
        return GenerationResult(1, (1,), (1,), [] if with_trace else None, 0)
    run = _greedy(identity(n - 1), n, with_trace)
    return GenerationResult(
        n=n,
        u_word=run.word,
        u_cycle=derive_u_cycle(run.word, n),
        trace=run.steps if with_trace else None,
        terminal_J=run.terminal_J,
    )


def derive_u_cycle(u_word: Sequence[int], n: int) -> ReducedPerm:
    """Drop the last n-1 letters of a u-word and reduce what is left."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    expected = factorial(n) + n - 1
    if len(u_word) != expected:
        raise InvalidInputError(f"u-word for n={n} must have length {expected}, got {len(u_word)}")
    return reduce(tuple(u_word)[: factorial(n)])


def greedy_from(start: Sequence[int], n: Optional[int] = None) -> StartScanResult:
    """Run the greedy algorithm from an arbitrary (n-1)-permutation."""
    start = tuple(start)
    if n is None:
        n = len(start) + 1
    if len(start) != n - 1 or not start or not is_reduced(start):
        raise InvalidInputError(f"start must be a permutation of 1..{n - 1}, got {start}")
    run = _greedy(start, n, False)
    missing = sorted(set(all_perms(n)) - run.covered)
    return StartScanResult(start, run.word, len(run.covered), missing)


def scan_starts(n: int, max_n: int = DEFAULT_SCAN_MAX_N) -> list[StartScanResult]:
    """Greedy runs from every (n-1)-permutation, in lexicographic order of the start."""
    _check_n(n, max_n, "start scan")
    if n < 2:
        raise InvalidInputError("scan_starts needs n >= 2")
    return [greedy_from(p, n) for p in all_perms(n - 1)]
