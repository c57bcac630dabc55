"""Minimal unique substrings over a suffix-array index.

Enumeration, positional stabbing queries, the sqrt lower-bound text
family, executable lemma/bound checkers, and a single-edit sensitivity
harness.  All public positions are 1-based.
"""

from .errors import (
    BudgetExceeded,
    EmptyString,
    EmptyText,
    MuskitError,
    ParameterTooSmall,
    PositionOutOfRange,
    ResultEmpty,
    TextTooLargeForOracle,
)
from .index import UNDEFINED, TextIndex, build_index, occurrence_count
from .lowerbound import LowerBoundInstance, gen_lower, verify_lower
from .mus import (
    BoundReport,
    MusInterval,
    MusSet,
    check_bounds,
    compute_mus,
    max_stab,
    mus_stab,
    rle_size,
    stab_bound,
)
from .sensitivity import (
    EditOp,
    SensitivityRecord,
    apply_edit,
    sensitivity,
    sensitivity_scan,
)
from .text import Text, build_text, smallest_period
from .verify import (
    VerificationReport,
    brute_mus,
    check_key_lemma,
    check_marker_gap_lemma,
    check_three_overlap_fact,
    exhaustive_verify,
    random_verify,
)

__version__ = "0.1.0"
