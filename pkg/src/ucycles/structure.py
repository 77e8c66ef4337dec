"""Structural checks on greedy u-words: the half split and its boundary windows.

Windows use 1-based indexing: sigma_k is the reduced factor starting at
position k, for k = 1..n!.
"""

from dataclasses import dataclass, field
from enum import Enum
from math import factorial
from typing import Optional, Sequence

from .errors import InvalidInputError, PreconditionError
from .perm_core import ReducedPerm, identity
from .verifier import check_u_word


class HalfClass(str, Enum):
    FIRST_ONE_THEN_N = "S_1n"
    FIRST_N_THEN_ONE = "S_n1"


def classify(p: Sequence[int]) -> HalfClass:
    n = len(p)
    if n < 2:
        raise InvalidInputError("half classes are undefined for n < 2")
    if sorted(p) != list(range(1, n + 1)):
        raise InvalidInputError(f"{tuple(p)} is not a permutation of 1..{n}")
    return HalfClass.FIRST_ONE_THEN_N if p.index(1) < p.index(n) else HalfClass.FIRST_N_THEN_ONE


def boundary_forms(n: int) -> tuple[ReducedPerm, ReducedPerm, ReducedPerm]:
    """Expected windows at k = n!/2, n!/2+1 and n!/2+2.

    These are n 1 2 ... (n-1), then 1 3 4 ... n 2, then 2 3 ... (n-1) 1 n.
    """
    mid = (n,) + tuple(range(1, n))
    after = (1,) + tuple(range(3, n + 1)) + ((2,) if n >= 2 else ())
    after2 = tuple(range(2, n)) + (1, n)
    return mid, after, after2


@dataclass
class PropertyReport:
    n: int
    a_mid_is_one: bool
    sigma_mid: ReducedPerm
    sigma_mid_plus_1: ReducedPerm
    sigma_mid_plus_2: Optional[ReducedPerm]
    boundary_windows_match: bool
    first_half_class_pure: bool
    second_half_class_pure: bool
    last_letter_is_max_right_of_one: bool
    identity_only_at_end: bool
    class_counts: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return all(
            (
                self.a_mid_is_one,
                self.boundary_windows_match,
                self.first_half_class_pure,
                self.second_half_class_pure,
                self.last_letter_is_max_right_of_one,
                self.identity_only_at_end,
            )
        )

    def flags(self) -> dict:
        return {
            "a_mid_is_one": self.a_mid_is_one,
            "boundary_windows_match": self.boundary_windows_match,
            "first_half_class_pure": self.first_half_class_pure,
            "second_half_class_pure": self.second_half_class_pure,
            "last_letter_is_max_right_of_one": self.last_letter_is_max_right_of_one,
            "identity_only_at_end": self.identity_only_at_end,
        }


def check_theorem3(result, n: Optional[int] = None) -> PropertyReport:
    """Check the half-split properties of a verified u-word for n >= 2.

    ``result`` is a ``GenerationResult`` or a bare word (then ``n`` is
    required). ``failures`` maps each false flag to the first offending
    1-based position.
    """
    if hasattr(result, "u_word"):
        u_word, n = result.u_word, result.n
    else:
        u_word = result
    if n is None:
        raise InvalidInputError("n is required when passing a bare word")
    if n < 2:
        raise InvalidInputError("half-split properties need n >= 2")
    cov = check_u_word(u_word, n)
    if not cov.verdict:
        raise PreconditionError(f"input is not a u-word for n={n}")
    a = tuple(u_word)
    sigma = cov.patterns  # sigma[k - 1] is sigma_k
    half = factorial(n) // 2
    failures = {}

    a_mid_is_one = a[half] == 1
    if not a_mid_is_one:
        failures["a_mid_is_one"] = half + 1

    want = boundary_forms(n)
    got = [sigma[half - 1], sigma[half]]
    got.append(sigma[half + 1] if half + 1 < len(sigma) else None)
    boundary_ok = True
    for off, (g, e) in enumerate(zip(got, want)):
        if g is not None and g != e:
            boundary_ok = False
            failures.setdefault("boundary_windows_match", half + off)

    classes = [classify(s) for s in sigma]
    first_bad = next((k for k in range(1, half + 1) if classes[k - 1] != HalfClass.FIRST_N_THEN_ONE), None)
    second_bad = next(
        (k for k in range(half + 1, len(sigma) + 1) if classes[k - 1] != HalfClass.FIRST_ONE_THEN_N), None
    )
    if first_bad is not None:
        failures["first_half_class_pure"] = first_bad
    if second_bad is not None:
        failures["second_half_class_pure"] = second_bad

    right = a[half + 1 :]
    last_ok = bool(right) and a[-1] == max(right)
    if not last_ok:
        failures["last_letter_is_max_right_of_one"] = len(a)

    ident = identity(n)
    id_positions = [k for k, s in enumerate(sigma, 1) if s == ident]
    id_ok = id_positions == [len(sigma)]
    if not id_ok:
        failures["identity_only_at_end"] = id_positions[0] if id_positions else len(sigma)

    counts = {c.value: classes.count(c) for c in HalfClass}
    return PropertyReport(
        n=n,
        a_mid_is_one=a_mid_is_one,
        sigma_mid=got[0],
        sigma_mid_plus_1=got[1],
        sigma_mid_plus_2=got[2],
        boundary_windows_match=boundary_ok,
        first_half_class_pure=first_bad is None,
        second_half_class_pure=second_bad is None,
        last_letter_is_max_right_of_one=last_ok,
        identity_only_at_end=id_ok,
        class_counts=counts,
        failures=failures,
    )
