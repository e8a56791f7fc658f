"""Core integer tables for tournament score analysis.

An (a,b)-tournament on n players is a round robin where every unordered
pair of players exchanges a total of t points, a <= t <= b, split between
the two in any nonnegative integer proportion.  A score sequence is the
nondecreasing vector of per-player totals.

This module provides the small integer tables everything else is built
from: pair-count binomials B_k = k(k-1)/2, prefix sums S_k of a score
sequence, and the running loss table L_k that measures how many points
the top k players must have conceded to the rest of the field.

All arithmetic is exact: Python integers do not wrap around, so there is
no overflow regime to guard.  Intended operating range is n up to 10**6
and b up to 10**3; everything stays linear in n at that scale.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass


def binomial2(k: int) -> int:
    """Number of unordered pairs among k items, k*(k-1)//2."""
    if k < 0:
        raise ValueError(f"binomial2 needs k >= 0, got {k}")
    return k * (k - 1) // 2


@dataclass(frozen=True)
class TournamentParams:
    """Parameters of an (a,b)-tournament: n players, pair totals in [a, b]."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one player, got n={self.n}")
        if not (0 <= self.a <= self.b):
            raise ValueError(f"need 0 <= a <= b, got a={self.a}, b={self.b}")
        if self.b < 1:
            raise ValueError(f"need b >= 1, got b={self.b}")

    @property
    def pair_count(self) -> int:
        return binomial2(self.n)


@dataclass(frozen=True)
class ScoreSequence:
    """A nondecreasing sequence of nonnegative integer scores.

    Construction validates the invariants; a ScoreSequence can therefore be
    passed around as proof that they hold.  Most operations in this package
    also accept a plain sequence of ints and wrap it themselves.
    """

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]) -> None:
        vals = tuple(values)
        for v in vals:
            if not isinstance(v, int):
                raise ValueError(f"scores must be integers, got {v!r}")
        if vals and min(vals) < 0:
            raise ValueError(f"scores must be nonnegative, got {min(vals)}")
        if any(vals[i] > vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError("scores must be nondecreasing")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def as_score_values(s: ScoreSequence | Sequence[int]) -> tuple[int, ...]:
    """Normalize to a validated tuple of scores."""
    if isinstance(s, ScoreSequence):
        return s.values
    return ScoreSequence(s).values


def prefix_sums(s: ScoreSequence | Sequence[int]) -> tuple[int, ...]:
    """Prefix sums S_0..S_n with S_0 = 0.

    Output has one more entry than the input, so S[k] is the total score of
    the first k players.
    """
    values = as_score_values(s)
    out = [0] * (len(values) + 1)
    acc = 0
    for i, v in enumerate(values, start=1):
        acc += v
        out[i] = acc
    return tuple(out)


@dataclass(frozen=True)
class BoundTables:
    """The three length-(n+1) tables behind the feasibility test.

    B[k] = binomial2(k), S[k] = prefix sum of the first k scores, and L[k]
    is the running loss: the minimum number of points the top n-k players
    must concede to players outside any top-k prefix, accumulated as
    L[k] = max(L[k-1], b*B[k] - S[k]).  Index 0 holds the 0 sentinels.
    """

    B: tuple[int, ...]
    S: tuple[int, ...]
    L: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (len(self.B) == len(self.S) == len(self.L)):
            raise ValueError("B, S, L must have equal length")
        if len(self.B) < 1 or (self.B[0], self.S[0], self.L[0]) != (0, 0, 0):
            raise ValueError("tables must start with the 0 sentinel")


def loss_sequence(
    params: TournamentParams, s: ScoreSequence | Sequence[int]
) -> tuple[int, ...]:
    """Running loss table L_0..L_n for scores s under params.

    L[k] = max(L[k-1], b*B[k] - S[k]) with L[0] = 0.  The max chain keeps L
    nondecreasing and nonnegative.
    """
    values = as_score_values(s)
    if len(values) != params.n:
        raise ValueError(
            f"expected {params.n} scores, got {len(values)}"
        )
    b = params.b
    out = [0] * (len(values) + 1)
    acc = 0
    pairs = 0
    loss = 0
    for k, v in enumerate(values, start=1):
        acc += v
        pairs += k - 1
        cand = b * pairs - acc
        if cand > loss:
            loss = cand
        out[k] = loss
    return tuple(out)
