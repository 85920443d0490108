"""ASCII braid pictures, top to bottom, three text rows per crossing.

A positive crossing draws the strand moving right as the unbroken ``\\``
stroke (it passes over); a negative crossing draws the unbroken ``/``.
"""

from __future__ import annotations

from .braid import BraidWord, format_word

GAP = 4


def _row(n: int, i: int | None, piece: str) -> str:
    cells = [" "] * ((n - 1) * GAP + 1)
    for s in range(n):
        cells[s * GAP] = "|"
    if i is not None:
        start = (i - 1) * GAP
        cells[start:start + GAP + 1] = piece
    return "".join(cells).rstrip()


def render(w: BraidWord) -> str:
    n = w.n
    width = (n - 1) * GAP + 1
    header = "".join(str(k).ljust(GAP) for k in range(1, n + 1))[:width].rstrip()
    lines = [header]
    for k in w.letters:
        i = abs(k)
        middle = "  \\  " if k > 0 else "  /  "
        label = f"s{i}" if k > 0 else f"s{i}^-1"
        lines.append(_row(n, i, "\\   /").ljust(width) + "    " + label)
        lines.append(_row(n, i, middle))
        lines.append(_row(n, i, "/   \\"))
    if not w.letters:
        lines.append(_row(n, None, ""))
    lines.append(header)
    lines.append(f"word: {format_word(w)}")
    return "\n".join(lines)
