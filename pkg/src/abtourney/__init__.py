"""Score sequence toolkit for (a,b)-tournaments.

Decide in linear time whether a nondecreasing integer sequence is the
score sequence of a tournament where every pair of players exchanges
between a and b points, and reconstruct a concrete point table for any
accepted sequence.  Includes independent brute-force oracles for testing
and a command line front end.
"""

from __future__ import annotations

from .bounds import (
    BoundTables,
    ScoreSequence,
    TournamentParams,
    binomial2,
    loss_sequence,
    prefix_sums,
)
from .check import CheckReport, Verdict, landau_check, moon_check, score_check
from .errors import (
    AlgorithmInvariantError,
    EnumerationBudgetError,
    InfeasibleSequenceError,
)
from .oracle import (
    RandomSpec,
    VerificationReport,
    Violation,
    brute_force_realizable,
    count_reconstructions,
    enumerate_score_sequences,
    random_tournament,
    scores_of,
    verify_table,
)
from .reconstruct import (
    ReconstructionTrace,
    RoundTrace,
    SlicePass,
    SliceResult,
    reconstruct,
    reconstruct_pair,
    reconstruct_with_trace,
    score_slicing,
)
from .table import PointTable

__all__ = [
    "AlgorithmInvariantError",
    "BoundTables",
    "CheckReport",
    "EnumerationBudgetError",
    "InfeasibleSequenceError",
    "PointTable",
    "RandomSpec",
    "ReconstructionTrace",
    "RoundTrace",
    "ScoreSequence",
    "SlicePass",
    "SliceResult",
    "TournamentParams",
    "Verdict",
    "VerificationReport",
    "Violation",
    "binomial2",
    "brute_force_realizable",
    "count_reconstructions",
    "enumerate_score_sequences",
    "landau_check",
    "loss_sequence",
    "moon_check",
    "prefix_sums",
    "random_tournament",
    "reconstruct",
    "reconstruct_pair",
    "reconstruct_with_trace",
    "score_check",
    "score_slicing",
    "scores_of",
    "verify_table",
]

__version__ = "0.1.0"
