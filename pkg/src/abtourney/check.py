"""Feasibility test for (a,b)-tournament score sequences.

A nondecreasing sequence s is the score sequence of some (a,b)-tournament
iff for every prefix length k the prefix sum S_k is at least a*B_k (the
first k players must absorb the points they are forced to exchange among
themselves) and at most b*B_n - L_k - (n-k)*s_k (what is left of the
global point budget once the running loss L_k and the k-th score repeated
for every later player are set aside).  score_check scans k = 1..n once
and reports the first violated prefix, testing the lower bound before the
upper bound at the same k.

landau_check and moon_check are independent implementations of the two
classical special cases (a = b = 1 and a = b >= 1).  They deliberately
share no code with score_check so the general test can be cross-validated
against them.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from .bounds import BoundTables, ScoreSequence, TournamentParams, as_score_values


class Verdict(str, Enum):
    ACCEPTED = "accepted"
    SCORE_TOO_SMALL = "score_too_small"
    SCORE_TOO_LARGE = "score_too_large"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of score_check.

    failing_index is the 1-based prefix length of the first violation, or
    None when the sequence is accepted.  tables holds B, S, L filled up to
    the failing index (full when accepted; later entries stay 0).
    """

    params: TournamentParams
    verdict: Verdict
    failing_index: int | None
    tables: BoundTables

    @property
    def accepted(self) -> bool:
        return self.verdict is Verdict.ACCEPTED

    def lower_bounds(self) -> tuple[int, ...]:
        """Per-prefix lower bounds a*B_k, k = 1..n."""
        a = self.params.a
        return tuple(a * Bk for Bk in self.tables.B[1:])

    def upper_bounds(self) -> tuple[int, ...]:
        """Per-prefix upper bounds b*B_n - L_k - (n-k)*s_k, k = 1..n.

        Meaningful through the last computed index; on a rejected sequence
        entries past failing_index are garbage since the tables stop there.
        """
        n = self.params.n
        b = self.params.b
        B, S, L = self.tables.B, self.tables.S, self.tables.L
        budget = b * (n * (n - 1) // 2)
        return tuple(
            budget - L[k] - (n - k) * (S[k] - S[k - 1]) for k in range(1, n + 1)
        )


def score_check(
    params: TournamentParams, s: ScoreSequence | Sequence[int]
) -> CheckReport:
    """Decide whether s is realizable as an (a,b)-tournament score sequence.

    Single forward scan; Theta(n) time and memory.  At each prefix length
    the too-small test runs before the too-large test, so when both fail at
    the same k the verdict is SCORE_TOO_SMALL.
    """
    values = as_score_values(s)
    n = params.n
    if len(values) != n:
        raise ValueError(f"expected {n} scores, got {len(values)}")
    a = params.a
    b = params.b
    B = [0] * (n + 1)
    S = [0] * (n + 1)
    L = [0] * (n + 1)
    budget = b * (n * (n - 1) // 2)
    Sk = 0
    Bk = 0
    aBk = 0
    Lk = 0
    k = 0
    for sk in values:
        Sk += sk
        Bk += k  # k-th player joins k earlier ones: k new pairs
        aBk += a * k
        k += 1
        cand = b * Bk - Sk
        if cand > Lk:
            Lk = cand
        B[k] = Bk
        S[k] = Sk
        L[k] = Lk
        if Sk < aBk:
            return CheckReport(
                params, Verdict.SCORE_TOO_SMALL, k,
                BoundTables(tuple(B), tuple(S), tuple(L)),
            )
        if Sk > budget - Lk - sk * (n - k):
            return CheckReport(
                params, Verdict.SCORE_TOO_LARGE, k,
                BoundTables(tuple(B), tuple(S), tuple(L)),
            )
    return CheckReport(
        params, Verdict.ACCEPTED, None, BoundTables(tuple(B), tuple(S), tuple(L))
    )


def landau_check(s: Sequence[int]) -> bool:
    """Classical test for ordinary tournaments (one point per pair).

    s must be nondecreasing.  Accepts iff every prefix sum is at least
    k*(k-1)/2 with equality for the whole sequence.
    """
    total = 0
    for k, sk in enumerate(s, start=1):
        total += sk
        if total < k * (k - 1) // 2:
            return False
    n = len(s)
    return total == n * (n - 1) // 2


def moon_check(a: int, s: Sequence[int]) -> bool:
    """Classical test for tournaments where every pair exchanges exactly a
    points.  s must be nondecreasing.

    Accepts iff every prefix sum is at least a*k*(k-1)/2 with equality for
    the whole sequence.  With a = 1 this coincides with landau_check.
    """
    if a < 1:
        raise ValueError(f"need a >= 1, got {a}")
    total = 0
    for k, sk in enumerate(s, start=1):
        total += sk
        if total < a * (k * (k - 1) // 2):
            return False
    n = len(s)
    return total == a * (n * (n - 1) // 2)
