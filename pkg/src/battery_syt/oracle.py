"""Formula-free tableau counting by dynamic programming over order ideals.

A partial filling of a shape with 1..j corresponds to a downward-closed set of
cells, so tableaux are exactly the maximal chains of ideals. Counting walks
the ideals level by level (j cells filled, then j+1) and sums transition
multiplicities, which stays exact for any cell count the state space allows.

Every counting formula in the package is cross-checked against this module.
"""

from dataclasses import dataclass

from .shapes import BatteryShape

__all__ = [
    "DEFAULT_SIZE_CAP",
    "count_linear_extensions",
    "linear_extension_profile",
    "count_line_convex",
    "BatteryTableau",
    "enumerate_syt",
    "is_valid_tableau",
]

DEFAULT_SIZE_CAP = 120
ENUMERATION_CAP = 12


def _battery_moves(lam, a, k, b, mu):
    """Legal single-cell extensions of the ideal (b battery cells, sub-shape mu)."""
    moves = []
    if b < a:
        moves.append((b + 1, mu))
    padded = mu + (0,) * (len(lam) - len(mu))
    for i in range(len(lam)):
        if padded[i] >= lam[i] or (i > 0 and padded[i - 1] <= padded[i]):
            continue
        # the cell under the battery column opens only once the battery is full
        if i == 0 and padded[0] + 1 == k and b < a:
            continue
        grown = padded[:i] + (padded[i] + 1,) + padded[i + 1:]
        while grown and grown[-1] == 0:
            grown = grown[:-1]
        moves.append((b, grown))
    return moves


def linear_extension_profile(shape: BatteryShape, size_cap: int = DEFAULT_SIZE_CAP) -> tuple[int, int]:
    """Exact tableau count of a battery shape and the number of ideal states visited."""
    lam, a, k = shape.lam, shape.a, shape.k
    cells = shape.size
    if cells > size_cap:
        raise ValueError(f"shape has {cells} cells, above the size cap {size_cap}")
    level = {(0, ()): 1}
    states = 1
    for _ in range(cells):
        nxt: dict[tuple[int, tuple[int, ...]], int] = {}
        for (b, mu), ways in level.items():
            for state in _battery_moves(lam, a, k, b, mu):
                nxt[state] = nxt.get(state, 0) + ways
        level = nxt
        states += len(level)
    return level.get((a, lam), 0), states


def count_linear_extensions(shape: BatteryShape, size_cap: int = DEFAULT_SIZE_CAP) -> int:
    """Exact number of standard Young tableaux of a battery shape."""
    count, _ = linear_extension_profile(shape, size_cap)
    return count


def count_line_convex(spans, size_cap: int = DEFAULT_SIZE_CAP) -> int:
    """Tableau count for any line-convex diagram given per-row column spans.

    States are per-row filled-prefix lengths; a cell may be filled once its
    left neighbour (structurally) and, where the row above covers its column,
    its upper neighbour are filled. Works for skew and truncated shapes.
    """
    spans = tuple((int(s), int(e)) for s, e in spans)
    cells = sum(e - s for s, e in spans if e > s)
    if cells > size_cap:
        raise ValueError(f"diagram has {cells} cells, above the size cap {size_cap}")
    rows = len(spans)
    level = {(0,) * rows: 1}
    for _ in range(cells):
        nxt: dict[tuple[int, ...], int] = {}
        for state, ways in level.items():
            for i in range(rows):
                start, stop = spans[i]
                col = start + state[i]
                if col >= stop:
                    continue
                if i > 0:
                    up_start, up_stop = spans[i - 1]
                    if up_start <= col < up_stop and col - up_start >= state[i - 1]:
                        continue
                grown = state[:i] + (state[i] + 1,) + state[i + 1:]
                nxt[grown] = nxt.get(grown, 0) + ways
        level = nxt
    return sum(level.values()) if level else 1


@dataclass(frozen=True)
class BatteryTableau:
    """A filled battery shape: the battery column top-down, then the base rows."""

    battery: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]


def enumerate_syt(shape: BatteryShape, cap: int = ENUMERATION_CAP) -> list[BatteryTableau]:
    """Explicitly build every tableau of a small battery shape."""
    lam, a, k = shape.lam, shape.a, shape.k
    cells = shape.size
    if cells > cap:
        raise ValueError(f"enumeration is limited to {cap} cells, shape has {cells}")
    battery = [0] * a
    grid = [[0] * row for row in lam]
    filled = [0] * len(lam)
    found: list[BatteryTableau] = []

    def place(value: int, b: int):
        if value > cells:
            found.append(
                BatteryTableau(tuple(battery), tuple(tuple(row) for row in grid))
            )
            return
        if b < a:
            battery[b] = value
            place(value + 1, b + 1)
            battery[b] = 0
        for i in range(len(lam)):
            if filled[i] >= lam[i] or (i > 0 and filled[i - 1] <= filled[i]):
                continue
            if i == 0 and filled[0] + 1 == k and b < a:
                continue
            grid[i][filled[i]] = value
            filled[i] += 1
            place(value + 1, b)
            filled[i] -= 1
            grid[i][filled[i]] = 0

    place(1, 0)
    return found


def is_valid_tableau(shape: BatteryShape, tableau: BatteryTableau) -> bool:
    """Independent check of the filling rules: bijective entries, rows and columns
    increasing, battery increasing, and battery bottom smaller than the cell it sits on."""
    lam, a, k = shape.lam, shape.a, shape.k
    if len(tableau.battery) != a or len(tableau.rows) != len(lam):
        return False
    if any(len(row) != lam[i] for i, row in enumerate(tableau.rows)):
        return False
    entries = list(tableau.battery) + [x for row in tableau.rows for x in row]
    if sorted(entries) != list(range(1, shape.size + 1)):
        return False
    for j in range(1, a):
        if tableau.battery[j - 1] >= tableau.battery[j]:
            return False
    if a and lam and tableau.battery[-1] >= tableau.rows[0][k - 1]:
        return False
    for i, row in enumerate(tableau.rows):
        for j in range(len(row)):
            if j > 0 and row[j - 1] >= row[j]:
                return False
            if i > 0 and j < lam[i - 1] and tableau.rows[i - 1][j] >= row[j]:
                return False
    return True
