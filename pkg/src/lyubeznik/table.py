"""Lyubeznik tables of the local ring at the vertex of the affine cone.

For a nonsingular equidimensional projective variety of dimension r the
whole (r+2) x (r+2) table is determined by the Betti vector: the first
row carries consecutive differences of Betti numbers, the last column
mirrors the first row, the corner counts connected components, and every
other entry vanishes.
"""

from dataclasses import dataclass

from .betti import AdmissibilityError, BettiVector, check_lefschetz_admissible
from .graph import ComponentGraph, count_components, gamma_graph


@dataclass(frozen=True)
class LyubeznikTable:
    """(d+1) x (d+1) table of lambda_{i,j} values, where d = r + 1 is the
    dimension of the local ring at the cone vertex.

    Entries with i or j above d are identically zero and are not stored;
    indexing beyond the stored range returns 0.
    """

    dim_a: int
    entries: tuple

    def __post_init__(self):
        d = self.dim_a
        if d < 2:
            raise ValueError(f"the cone over a variety has dimension >= 2, got {d}")
        object.__setattr__(self, "entries",
                           tuple(tuple(row) for row in self.entries))
        if len(self.entries) != d + 1 or any(len(row) != d + 1 for row in self.entries):
            raise ValueError(f"table must be {d + 1} x {d + 1}")
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                if not isinstance(v, int) or v < 0:
                    raise ValueError(
                        f"lambda_({i},{j}) must be a nonnegative integer, got {v!r}")
        # Zero region: nothing below the first row except the last column.
        for i in range(1, d + 1):
            for j in range(d):
                if self.entries[i][j] != 0:
                    raise ValueError(
                        f"lambda_({i},{j}) must vanish for i > 0, j <= {d - 1}")
        if self.entries[0][0] != 0:
            raise ValueError("lambda_(0,0) must vanish")
        if self.entries[0][d] != 0 or self.entries[1][d] != 0:
            raise ValueError(f"lambda_(0,{d}) and lambda_(1,{d}) must vanish")
        for ell in range(2, d):
            if self.entries[ell][d] != self.entries[0][d + 1 - ell]:
                raise ValueError(
                    f"column duality fails: lambda_({ell},{d}) != lambda_(0,{d + 1 - ell})")
        if self.entries[d][d] < 1:
            raise ValueError("the corner entry counts components and must be positive")

    def __getitem__(self, key) -> int:
        i, j = key
        if i < 0 or j < 0:
            raise IndexError("table indices are nonnegative")
        if i > self.dim_a or j > self.dim_a:
            return 0
        return self.entries[i][j]

    def nonzero(self) -> tuple:
        """Nonzero entries as (i, j, value) triples in row-major order."""
        return tuple((i, j, v)
                     for i, row in enumerate(self.entries)
                     for j, v in enumerate(row) if v)


def lyubeznik_table(b: BettiVector) -> LyubeznikTable:
    """Complete Lyubeznik table of the cone-vertex local ring, computed
    from the Betti vector of the projective variety.

    The first row is lambda_{0,1} = beta_0 - 1, lambda_{0,2} = beta_1,
    and lambda_{0,j} = beta_{j-1} - beta_{j-3} for 3 <= j <= r; the last
    column repeats the first row in reverse (lambda_{l,r+1} =
    lambda_{0,r+2-l}); the corner lambda_{r+1,r+1} = beta_0 counts the
    connected components.  Everything else is zero.

    >>> lyubeznik_table(BettiVector(2, (1, 0, 1, 0, 1))).nonzero()
    ((3, 3, 1),)
    >>> lyubeznik_table(BettiVector(2, (1, 2, 2, 2, 1))).nonzero()
    ((0, 2, 2), (2, 3, 2), (3, 3, 1))

    Vectors that fail duality or hard Lefschetz would force negative
    entries, so they are rejected before any entry is computed:

    >>> lyubeznik_table(BettiVector(2, (1, 0, 0, 0, 1)))
    Traceback (most recent call last):
        ...
    lyubeznik.betti.AdmissibilityError: hard Lefschetz fails: beta_0 = 1 > beta_2 = 0
    """
    r = b.dim
    if r < 1:
        raise ValueError("the table is defined for varieties of dimension r >= 1")
    report = check_lefschetz_admissible(b)
    if not report:
        raise AdmissibilityError(report.reason)
    d = r + 1
    rows = [[0] * (d + 1) for _ in range(d + 1)]
    rows[0][1] = b[0] - 1
    if r >= 2:
        rows[0][2] = b[1]
    for j in range(3, r + 1):
        rows[0][j] = b[j - 1] - b[j - 3]
    for ell in range(2, r + 1):
        rows[ell][d] = rows[0][r + 2 - ell]
    rows[d][d] = b[0]
    return LyubeznikTable(d, tuple(tuple(row) for row in rows))


def corner_from_graph(g: ComponentGraph) -> int:
    """Corner entry lambda_{r+1,r+1} from component-intersection data:
    the number of connected components of the graph on top-dimensional
    pieces, joined when an intersection has dimension exactly r - 1.

    >>> corner_from_graph(ComponentGraph((("A", 2), ("B", 2)), ((0, 1, 1),)))
    1
    >>> corner_from_graph(ComponentGraph((("A", 2), ("B", 2)), ((0, 1, -1),)))
    2
    """
    return count_components(gamma_graph(g))
