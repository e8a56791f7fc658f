"""Greedy reconstruction of a point table from an accepted score sequence.

One slicing round fixes the results of the highest-scoring player k and
reduces the instance to k-1 players.  Player k starts owing
M = (k-1)*b - p_k "missing" points: the gap between the most it could
have scored and what it did score.  Every missing point is explained in
one of two ways:

  * an opponent g won it (q_g grows, g's provisional score shrinks), or
  * it was never played (the pair total drops below b).

Points are handed to opponents greedily from the top of the sorted
prefix, always to the maximal tied block of scores ending at the highest
unsaturated index, never taking a prefix below its feasibility floor
(the slack A_i = P_i - a*B_i stays nonnegative for every i).  A floor
stage runs first when p_k < (k-1)*a: it hands out only sub-a points,
spreading them over enough distinct opponents that player k's own score
can pay the remaining pair minimums.  The assignment stage then slices
freely while slack lasts, and the loss stage absorbs whatever M remains
by lowering player k's own row entries toward the pair minimum a.

Slicing from the top tied block downward keeps the reduced sequence
nondecreasing, and the slack caps keep it feasible, so the rounds chain
by induction down to two players, whose scores are written directly into
the final pair of cells.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .bounds import ScoreSequence, TournamentParams, as_score_values
from .check import score_check
from .errors import AlgorithmInvariantError, InfeasibleSequenceError
from .oracle import verify_table
from .table import PointTable


@dataclass(frozen=True)
class SliceResult:
    """Outcome of one slicing round on p_1..p_k.

    q[g] is what player g+1 won against player k; r_row[g] is what player
    k won against player g+1; p_reduced are the k-1 remaining provisional
    scores after subtracting q.
    """

    p_reduced: tuple[int, ...]
    q: tuple[int, ...]
    r_row: tuple[int, ...]


@dataclass(frozen=True)
class SlicePass:
    """State of one assignment pass, recorded before the pass runs.

    x is the 1-based highest unsaturated player, f the size of the tied
    block ending at x, d the gap from the block down to the next lower
    score, m the per-player cap for this pass, and y the last nonzero
    amount actually sliced from a block member (0 when the pass stalled).
    a_pool is the total prefix slack A_{k-1} and missing is M, both as the
    pass began.
    """

    k: int
    x: int
    a_pool: int
    missing: int
    f: int
    d: int
    m: int
    y: int


@dataclass(frozen=True)
class RoundTrace:
    k: int
    p_start: tuple[int, ...]
    passes: tuple[SlicePass, ...]
    result: SliceResult


@dataclass(frozen=True)
class ReconstructionTrace:
    params: TournamentParams
    scores: tuple[int, ...]
    rounds: tuple[RoundTrace, ...]

    def round_vectors(self) -> list[tuple[int, tuple[int, ...]]]:
        """The chain of provisional score vectors: the input, then each
        round's reduced output, down to the final two players."""
        out = [(len(self.scores), self.scores)]
        for rnd in self.rounds:
            out.append((rnd.k - 1, rnd.result.p_reduced))
        return out


def _slice_round(
    a: int,
    b: int,
    k: int,
    values: Sequence[int],
    passes: list[SlicePass] | None,
) -> SliceResult:
    """Run one slicing round; values is the length-k nondecreasing prefix."""
    pk = values[-1]
    missing = (k - 1) * b - pk
    cur = list(values[:-1])
    q = [0] * (k - 1)
    # prefix slack A[i] = P_{i+1} - a*B_{i+1}, for the k-1 remaining players
    A = []
    acc = 0
    for i, v in enumerate(cur):
        acc += v
        A.append(acc - a * ((i + 1) * i // 2))

    guard = b * k * k + k + 2
    runs = 0

    def one_pass(xi: int, cap_to: int, total_cap: int) -> int:
        """Slice the maximal tied block ending at xi, at most cap_to - q[j]
        per member and total_cap in all; returns the points taken."""
        nonlocal missing
        # a hypothetical 0 below index 0 bounds the block at player 1
        f = 1
        while xi - f >= 0 and cur[xi - f] == cur[xi]:
            f += 1
        lo = xi - f + 1
        d = cur[xi] - (cur[lo - 1] if lo > 0 else 0)
        m = min(b, d, (A[xi] + f - 1) // f, (missing + f - 1) // f)
        pool_before = A[-1]
        missing_before = missing
        # suffix minima of the slack over [j, k-2]; slicing any member
        # lowers every slack from that member rightward, so the binding
        # cap for member j is this minimum less what the pass already took
        suffmin = [0] * f
        running = A[k - 2]
        for i in range(k - 2, lo - 1, -1):
            if A[i] < running:
                running = A[i]
            if i <= xi:
                suffmin[i - lo] = running
        ys = [0] * f
        sliced = 0
        y_last = 0
        for j in range(lo, xi + 1):
            y = min(
                cap_to - q[j], m, missing, suffmin[j - lo] - sliced,
                cur[j], total_cap - sliced,
            )
            if y <= 0:
                continue
            q[j] += y
            cur[j] -= y
            missing -= y
            sliced += y
            ys[j - lo] = y
            y_last = y
        if passes is not None:
            passes.append(
                SlicePass(
                    k=k, x=xi + 1, a_pool=pool_before, missing=missing_before,
                    f=f, d=d, m=m, y=y_last,
                )
            )
        if sliced:
            run = 0
            for i in range(lo, k - 1):
                if i <= xi:
                    run += ys[i - lo]
                A[i] -= run
        return sliced

    # floor stage: player k must pay max(a - q_g, 0) to every opponent
    # left below the pair minimum, and can only afford p_k in all.  Each
    # sub-a point handed out lowers that bill by one, and feasibility
    # guarantees the slack pool holds at least (k-1)*a - p_k, so this
    # stage never starves on an accepted prefix.
    need = (k - 1) * a - pk
    xi = k - 2
    while need > 0:
        runs += 1
        if runs > guard:
            raise AlgorithmInvariantError(
                f"slicing round k={k} exceeded its pass budget {guard}"
            )
        while xi >= 0 and q[xi] >= a:
            xi -= 1
        got = one_pass(xi, a, need) if xi >= 0 else 0
        if got == 0:
            raise AlgorithmInvariantError(
                f"round k={k}: floor shortfall of {need} cannot be covered"
            )
        need -= got

    # assignment stage: hand the remaining missing points to opponents,
    # top tied block first, while prefix slack lasts
    xi = k - 2
    while missing > 0 and A[-1] > 0:
        runs += 1
        if runs > guard:
            raise AlgorithmInvariantError(
                f"slicing round k={k} exceeded its pass budget {guard}"
            )
        while xi >= 0 and q[xi] >= b:
            xi -= 1
        if xi < 0:
            break
        if one_pass(xi, b, missing) == 0:
            # no member could move: every usable slack or score is spent
            break

    # loss phase: absorb leftover missing points by lowering player k's
    # own row from the provisional b - q_g toward the pair floor, one
    # point per player per sweep from the top index down
    r_row = [b - qg for qg in q]
    if missing > 0:
        floors = [max(a - qg, 0) for qg in q]
        while missing > 0:
            progressed = False
            for j in range(k - 2, -1, -1):
                if missing == 0:
                    break
                if r_row[j] > floors[j]:
                    r_row[j] -= 1
                    missing -= 1
                    progressed = True
            if not progressed:
                raise AlgorithmInvariantError(
                    f"cannot absorb {missing} missing points in round k={k}"
                )
    return SliceResult(p_reduced=tuple(cur), q=tuple(q), r_row=tuple(r_row))


def _check_slice_result(
    a: int, b: int, k: int, values: Sequence[int], res: SliceResult
) -> None:
    """Postconditions of a slicing round; failure means a bug here."""
    pk = values[-1]
    if sum(res.r_row) != pk:
        raise AlgorithmInvariantError(
            f"round k={k}: row sum {sum(res.r_row)} != score {pk}"
        )
    for g in range(k - 1):
        pair = res.q[g] + res.r_row[g]
        if not (a <= pair <= b):
            raise AlgorithmInvariantError(
                f"round k={k}: pair total {pair} for player {g + 1} "
                f"outside [{a}, {b}]"
            )
        if res.q[g] < 0 or res.r_row[g] < 0:
            raise AlgorithmInvariantError(f"round k={k}: negative points")
        if res.p_reduced[g] != values[g] - res.q[g]:
            raise AlgorithmInvariantError(f"round k={k}: score bookkeeping broke")
        if res.p_reduced[g] < 0:
            raise AlgorithmInvariantError(f"round k={k}: negative reduced score")
    if any(
        res.p_reduced[g] > res.p_reduced[g + 1] for g in range(k - 2)
    ):
        raise AlgorithmInvariantError(f"round k={k}: reduced scores not sorted")
    reduced_report = score_check(
        TournamentParams(k - 1, a, b), res.p_reduced
    )
    if not reduced_report.accepted:
        raise AlgorithmInvariantError(
            f"round k={k}: reduced sequence fails the feasibility test "
            f"({reduced_report.verdict.value} at {reduced_report.failing_index})"
        )


def score_slicing(
    params: TournamentParams, k: int, p: ScoreSequence | Sequence[int]
) -> SliceResult:
    """Fix player k's results for a feasible k-prefix p.

    Only a and b are read from params; the round size is k.  Raises
    InfeasibleSequenceError when p is not itself a feasible score sequence
    for k players, and AlgorithmInvariantError if the round cannot meet
    its own postconditions (which a feasible input never triggers).
    """
    if k < 3:
        raise ValueError(f"slicing needs k >= 3, got {k}")
    values = as_score_values(p)
    if len(values) != k:
        raise ValueError(f"expected {k} scores, got {len(values)}")
    a, b = params.a, params.b
    report = score_check(TournamentParams(k, a, b), values)
    if not report.accepted:
        raise InfeasibleSequenceError(
            f"prefix of {k} scores is not feasible: "
            f"{report.verdict.value} at index {report.failing_index}"
        )
    res = _slice_round(a, b, k, values, passes=None)
    _check_slice_result(a, b, k, values, res)
    return res


def reconstruct_pair(
    params: TournamentParams, p1: int, p2: int
) -> tuple[int, int]:
    """Results of the final two players: each keeps exactly its own score.

    The pair exchanges p1 + p2 points, which must lie in [a, b].
    """
    if p1 < 0 or p2 < 0:
        raise InfeasibleSequenceError(f"negative scores ({p1}, {p2})")
    if not (params.a <= p1 + p2 <= params.b):
        raise InfeasibleSequenceError(
            f"pair total {p1 + p2} outside [{params.a}, {params.b}]"
        )
    return (p1, p2)


def _reconstruct(
    params: TournamentParams,
    values: tuple[int, ...],
    collect: bool,
) -> tuple[PointTable, ReconstructionTrace]:
    n = params.n
    report = score_check(params, values)
    if not report.accepted:
        raise InfeasibleSequenceError(
            f"sequence rejected: {report.verdict.value} at index "
            f"{report.failing_index}"
        )
    rows = [[0] * n for _ in range(n)]
    rounds: list[RoundTrace] = []
    p: Sequence[int] = values
    a, b = params.a, params.b
    for k in range(n, 2, -1):
        passes: list[SlicePass] | None = [] if collect else None
        res = _slice_round(a, b, k, p, passes)
        _check_slice_result(a, b, k, p, res)
        for g in range(k - 1):
            rows[g][k - 1] = res.q[g]
            rows[k - 1][g] = res.r_row[g]
        if collect:
            rounds.append(
                RoundTrace(
                    k=k, p_start=tuple(p), passes=tuple(passes or ()), result=res
                )
            )
        p = res.p_reduced
    if n >= 2:
        r12, r21 = reconstruct_pair(params, p[0], p[1])
        rows[0][1] = r12
        rows[1][0] = r21
    table = PointTable(rows)
    verdict = verify_table(params, table, values)
    if not verdict.passed:
        raise AlgorithmInvariantError(
            f"reconstructed table fails verification: {verdict.violations}"
        )
    trace = ReconstructionTrace(
        params=params, scores=values, rounds=tuple(rounds)
    )
    return table, trace


def reconstruct(
    params: TournamentParams, s: ScoreSequence | Sequence[int]
) -> PointTable:
    """Build a point table realizing the accepted score sequence s.

    Deterministic: equal inputs give identical tables.  The result is
    verified against params and s before it is returned; a verification
    failure raises AlgorithmInvariantError and indicates a bug, not bad
    input.  Rejected input raises InfeasibleSequenceError.
    """
    values = as_score_values(s)
    if len(values) != params.n:
        raise ValueError(f"expected {params.n} scores, got {len(values)}")
    table, _ = _reconstruct(params, values, collect=False)
    return table


def reconstruct_with_trace(
    params: TournamentParams, s: ScoreSequence | Sequence[int]
) -> tuple[PointTable, ReconstructionTrace]:
    """reconstruct, also returning the per-round slicing trace."""
    values = as_score_values(s)
    if len(values) != params.n:
        raise ValueError(f"expected {params.n} scores, got {len(values)}")
    return _reconstruct(params, values, collect=True)
