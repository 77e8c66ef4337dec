"""Greedy universal words and cycles for permutations, plus de Bruijn tools."""

from .alphabet import PosetDag, alphabet_lower_bound, build_poset, relabel_min
from .debruijn import is_de_bruijn, lyndon_concat, martin
from .errors import CapacityError, InvalidInputError, MalformedWindowError, PreconditionError, UcycleError
from .generator import (
    GenerationResult,
    StartScanResult,
    TraceStep,
    derive_u_cycle,
    generate_u_word,
    greedy_from,
    scan_starts,
)
from .perm_core import extend, reduce, windows
from .structure import HalfClass, PropertyReport, check_theorem3, classify
from .verifier import CoverageReport, check_u_cycle, check_u_word

__version__ = "0.1.0"
