"""Concurrence of single-mode photon-excited entangled coherent states.

A small numerics library around one family of states: two-mode
superpositions of coherent branches ``|alpha, alpha> +/- |-alpha, -alpha>``
with ``m`` extra quanta created in one mode.  It provides

* closed-form concurrence, normalization constants and branch overlaps,
  evaluated stably from zero field to far beyond double range
  (:mod:`smeecs.entanglement`, :mod:`smeecs.states`),
* the special functions these reduce to — Laguerre and two-variable
  Hermite polynomials, coherent-state moments (:mod:`smeecs.specfun`),
* an independent brute-force check in a truncated number basis
  (:mod:`smeecs.fock_oracle`),
* a claims battery and a CLI (``smeecs sweep | eval | check``).
"""

from .entanglement import (
    ConcurrenceResult,
    EvalPath,
    concurrence_closed,
    concurrence_general,
    concurrence_m0,
    concurrence_small_alpha_limit,
)
from .errors import (
    DegenerateStateError,
    InternalConsistencyError,
    TruncationTooSmallError,
)
from .fock_oracle import (
    BipartiteAmplitudes,
    Mode,
    build_state,
    concurrence_oracle,
    default_truncation,
    reduced_purity,
)
from .specfun import (
    SignedLogValue,
    cross_moment,
    hermite2,
    laguerre,
    laguerre_signed_log,
)
from .states import (
    OverlapPair,
    Sign,
    StateSpec,
    normalization_M,
    normalization_N,
    overlap_p1,
    overlap_p2,
    overlaps,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteAmplitudes",
    "ConcurrenceResult",
    "DegenerateStateError",
    "EvalPath",
    "InternalConsistencyError",
    "Mode",
    "OverlapPair",
    "Sign",
    "SignedLogValue",
    "StateSpec",
    "TruncationTooSmallError",
    "build_state",
    "concurrence_closed",
    "concurrence_general",
    "concurrence_m0",
    "concurrence_oracle",
    "concurrence_small_alpha_limit",
    "cross_moment",
    "default_truncation",
    "hermite2",
    "laguerre",
    "laguerre_signed_log",
    "normalization_M",
    "normalization_N",
    "overlap_p1",
    "overlap_p2",
    "overlaps",
    "reduced_purity",
    "__version__",
]
