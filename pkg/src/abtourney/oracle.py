"""Independent oracles: verification, exhaustive enumeration, backtracking
search, and random instance generation.

Nothing in this module uses the analytic feasibility test or the greedy
reconstructor; results obtained here are derived straight from the
definition of an (a,b)-tournament (every unordered pair exchanges t points
with a <= t <= b, split arbitrarily).  That independence is the point:
these routines are slow but trustworthy, and the fast algorithms are
tested against them.

The exhaustive routines refuse (EnumerationBudgetError) when the worst
case outcome space is larger than their work budget.  A refusal is never a
partial answer.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass

from .bounds import ScoreSequence, TournamentParams, as_score_values
from .errors import EnumerationBudgetError
from .table import PointTable

DEFAULT_BUDGET = 10**8


def scores_of(t: PointTable) -> tuple[int, ...]:
    """Row sums of a point table, i.e. the (unsorted) player scores."""
    return tuple(sum(row) for row in t.rows)


@dataclass(frozen=True)
class Violation:
    """One itemized defect found by verify_table.

    kind is one of: "diagonal", "negative_entry", "pair_sum_low",
    "pair_sum_high", "row_sum".  indices holds the 1-based player
    number(s) involved; observed is the offending value (entry, pair sum,
    or row total).
    """

    kind: str
    indices: tuple[int, ...]
    observed: int


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    violations: tuple[Violation, ...]


def verify_table(
    params: TournamentParams,
    t: PointTable,
    s: ScoreSequence | Sequence[int],
) -> VerificationReport:
    """Check a point table against parameters and an expected score vector.

    s is compared row by row, so it must be in the same player order as the
    table (it need not be sorted).  Returns every violation, not just the
    first.
    """
    n = params.n
    if t.n != n:
        raise ValueError(f"expected a {n}x{n} table, got {t.n}x{t.n}")
    expected = tuple(s)
    if len(expected) != n:
        raise ValueError(f"expected {n} scores, got {len(expected)}")
    a, b = params.a, params.b
    found: list[Violation] = []
    rows = t.rows
    for i in range(n):
        if rows[i][i] != 0:
            found.append(Violation("diagonal", (i + 1,), rows[i][i]))
        for j in range(n):
            if rows[i][j] < 0:
                found.append(Violation("negative_entry", (i + 1, j + 1), rows[i][j]))
    for i in range(n):
        for j in range(i + 1, n):
            pair = rows[i][j] + rows[j][i]
            if pair < a:
                found.append(Violation("pair_sum_low", (i + 1, j + 1), pair))
            elif pair > b:
                found.append(Violation("pair_sum_high", (i + 1, j + 1), pair))
    for i in range(n):
        total = sum(rows[i])
        if total != expected[i]:
            found.append(Violation("row_sum", (i + 1,), total))
    return VerificationReport(passed=not found, violations=tuple(found))


def _pair_splits(a: int, b: int) -> list[tuple[int, int]]:
    """All (x, y) with x, y >= 0 and a <= x + y <= b."""
    return [(x, t - x) for t in range(a, b + 1) for x in range(t + 1)]


def _outcome_space(params: TournamentParams) -> int:
    per_pair = sum(t + 1 for t in range(params.a, params.b + 1))
    return per_pair ** params.pair_count


def enumerate_score_sequences(
    params: TournamentParams, budget: int = DEFAULT_BUDGET
) -> frozenset[tuple[int, ...]]:
    """Exact set of achievable score sequences, as sorted tuples.

    Walks the full product of per-pair outcomes; no pruning, no shortcuts.
    Refuses upfront when the outcome space exceeds budget.
    """
    space = _outcome_space(params)
    if space > budget:
        raise EnumerationBudgetError(
            f"outcome space {space} exceeds budget {budget}"
        )
    n = params.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    splits = _pair_splits(params.a, params.b)
    out: set[tuple[int, ...]] = set()
    scores = [0] * n

    def walk(m: int) -> None:
        if m == len(pairs):
            out.add(tuple(sorted(scores)))
            return
        i, j = pairs[m]
        for x, y in splits:
            scores[i] += x
            scores[j] += y
            walk(m + 1)
            scores[i] -= x
            scores[j] -= y

    walk(0)
    return frozenset(out)


def _search_tables(
    params: TournamentParams,
    s: ScoreSequence | Sequence[int],
    budget: int,
    count_all: bool,
) -> int:
    """Backtracking core shared by brute_force_realizable and
    count_reconstructions.

    Assigns pair splits in lexicographic pair order, pruning on row totals:
    a player may never exceed its target, must be able to reach it with b
    points from each unassigned pair, and must hit it exactly once its last
    pair is assigned.  Returns the number of complete tables found (stops
    at 1 when count_all is false).
    """
    space = _outcome_space(params)
    if space > budget:
        raise EnumerationBudgetError(
            f"outcome space {space} exceeds budget {budget}"
        )
    n = params.n
    target = list(as_score_values(s))
    if len(target) != n:
        raise ValueError(f"expected {n} scores, got {len(target)}")
    a, b = params.a, params.b
    if n == 1:
        return 1 if target[0] == 0 else 0
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pairs_left = [n - 1] * n
    scores = [0] * n
    hits = 0

    def feasible_so_far(i: int) -> bool:
        if scores[i] > target[i]:
            return False
        if scores[i] + b * pairs_left[i] < target[i]:
            return False
        if pairs_left[i] == 0 and scores[i] != target[i]:
            return False
        return True

    def walk(m: int) -> bool:
        nonlocal hits
        if m == len(pairs):
            hits += 1
            return not count_all
        i, j = pairs[m]
        pairs_left[i] -= 1
        pairs_left[j] -= 1
        for t in range(a, b + 1):
            for x in range(t + 1):
                scores[i] += x
                scores[j] += t - x
                if feasible_so_far(i) and feasible_so_far(j):
                    if walk(m + 1):
                        scores[i] -= x
                        scores[j] -= t - x
                        pairs_left[i] += 1
                        pairs_left[j] += 1
                        return True
                scores[i] -= x
                scores[j] -= t - x
        pairs_left[i] += 1
        pairs_left[j] += 1
        return False

    walk(0)
    return hits


def brute_force_realizable(
    params: TournamentParams,
    s: ScoreSequence | Sequence[int],
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Does any point table realize s?  Backtracking ground truth."""
    return _search_tables(params, s, budget, count_all=False) > 0


def count_reconstructions(
    params: TournamentParams,
    s: ScoreSequence | Sequence[int],
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Number of distinct labeled point tables realizing s."""
    return _search_tables(params, s, budget, count_all=True)


@dataclass(frozen=True)
class RandomSpec:
    """Seeded description of a random tournament draw."""

    params: TournamentParams
    seed: int


def random_tournament(spec: RandomSpec) -> PointTable:
    """Draw a random (a,b)-tournament point table, deterministic per seed.

    Pairs are visited in lexicographic order (i < j); each draws a total
    t uniform on [a, b], then a split x uniform on [0, t], giving x to i
    and t - x to j.  Equal seeds yield identical tables.
    """
    params = spec.params
    rng = random.Random(spec.seed)
    n = params.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            t = rng.randint(params.a, params.b)
            x = rng.randint(0, t)
            rows[i][j] = x
            rows[j][i] = t - x
    return PointTable(rows)
