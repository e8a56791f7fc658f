"""Point table container shared by the reconstructor and the oracles."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass


@dataclass(frozen=True)
class PointTable:
    """Square matrix of pairwise points: rows[i][j] is what player i took
    from player j.

    Construction enforces shape only (square, integer entries).  Semantic
    validity against tournament parameters and a score sequence (zero
    diagonal, pair sums within [a, b], row sums) is the job of
    oracle.verify_table, which itemizes violations instead of refusing to
    represent them.
    """

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]) -> None:
        mat = tuple(tuple(row) for row in rows)
        n = len(mat)
        if n == 0:
            raise ValueError("a point table needs at least one player")
        for row in mat:
            if len(row) != n:
                raise ValueError(
                    f"table must be square, got a row of length {len(row)} in "
                    f"a {n}-row table"
                )
            for v in row:
                if not isinstance(v, int):
                    raise ValueError(f"table entries must be integers, got {v!r}")
        object.__setattr__(self, "rows", mat)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def __iter__(self):
        return iter(self.rows)
