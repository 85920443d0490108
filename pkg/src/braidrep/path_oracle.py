"""Direct evaluation of the simple representation by following strands.

This deliberately shares no code with ``rep.evaluate``: it never multiplies
matrices. Each strand walks down the braid; at a positive crossing the strand
moving right (the top strand) picks up ``t`` and the one moving left picks up
``b``; at a negative crossing the strand moving left (top) picks up ``t^-1``
and the one moving right picks up ``b^-1``. The strand that starts at i and
ends at j contributes its accumulated product at entry (i, j).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord
from .laurent import ONE, ZERO, LaurentPolynomial, mul, var
from .polymatrix import PolyMatrix

T, B = var("t"), var("b")
T_INV, B_INV = T ** -1, B ** -1


@dataclass
class StrandState:
    position: list[int]
    accumulator: list[LaurentPolynomial]
    touched: list[bool]

    @classmethod
    def start(cls, n: int) -> "StrandState":
        return cls(list(range(1, n + 1)), [ONE] * n, [False] * n)


def path_matrix(w: BraidWord) -> PolyMatrix:
    n = w.n
    state = StrandState.start(n)
    # occupant[p-1] is the strand (0-based) now at position p
    occupant = list(range(n))
    for k in w.letters:
        i = abs(k)
        left, right = occupant[i - 1], occupant[i]
        if k > 0:
            goes_right, goes_left = T, B
        else:
            goes_right, goes_left = B_INV, T_INV
        state.accumulator[left] = mul(state.accumulator[left], goes_right)
        state.accumulator[right] = mul(state.accumulator[right], goes_left)
        state.position[left], state.position[right] = i + 1, i
        state.touched[left] = state.touched[right] = True
        occupant[i - 1], occupant[i] = right, left

    rows = [[ZERO] * n for _ in range(n)]
    for s in range(n):
        end = state.position[s]
        rows[s][end - 1] = state.accumulator[s] if state.touched[s] else ONE
    return PolyMatrix._from_rows(rows)
