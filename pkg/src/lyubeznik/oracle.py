"""Exact-sequence cross-check for the first row of the table.

``cone_local_derham_dims`` recomputes dim H^j at the cone vertex for
j = 0..r by pure dimension bookkeeping.  Degree 0 vanishes; degree 1
comes from the three-term sequence relating the vertex to the global
functions; every later degree sits in a short exact sequence whose only
geometric input is that cup product with the hyperplane class is
injective below the middle degree, so the incoming map has full rank.
Each unknown is solved by the alternating-sum rule for exact sequences.
The closed-form first-row formulas are never consulted; agreement of the
two routes is the package's central self-check.
"""

from dataclasses import dataclass

from .betti import AdmissibilityError, BettiVector


@dataclass(frozen=True)
class ConeLocalDims:
    """Dimensions (dim H^0, ..., dim H^r) of the local de Rham cohomology
    at the cone vertex; the degree-0 entry is always 0."""

    dims: tuple

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        if not self.dims:
            raise ValueError("at least the degree-0 entry is required")
        if any(not isinstance(v, int) or v < 0 for v in self.dims):
            raise ValueError(f"entries must be nonnegative integers, got {self.dims}")
        if self.dims[0] != 0:
            raise ValueError(
                f"degree-0 local cohomology must vanish, got {self.dims[0]}")

    def __getitem__(self, j: int) -> int:
        return self.dims[j]

    def __iter__(self):
        return iter(self.dims)

    def __len__(self) -> int:
        return len(self.dims)


def _solve_exact(dims: list, context: str) -> int:
    """Solve an exact sequence 0 -> V_1 -> ... -> V_k -> 0 for its single
    unknown entry (marked None): the alternating sum of the dimensions of
    an exact sequence of finite-dimensional spaces vanishes."""
    unknown = dims.index(None)
    acc = 0
    for pos, value in enumerate(dims):
        if value is not None:
            acc += value if pos % 2 == 0 else -value
    solved = -acc if unknown % 2 == 0 else acc
    if solved < 0:
        raise AdmissibilityError(
            f"exact sequence in {context} forces the negative dimension {solved}; "
            f"a required rank exceeds its target")
    return solved


def cone_local_derham_dims(b: BettiVector) -> ConeLocalDims:
    """Local de Rham cohomology dimensions at the cone vertex, degrees 0..r.

    >>> cone_local_derham_dims(BettiVector(2, (1, 2, 2, 2, 1))).dims
    (0, 0, 2)
    >>> cone_local_derham_dims(BettiVector(2, (1, 0, 1, 0, 1))).dims
    (0, 0, 0)
    """
    r = b.dim
    if r < 1:
        raise ValueError("need a variety of dimension r >= 1")
    dims = [0]  # the vertex cohomology vanishes in degree 0
    # 0 -> k -> H^0(V) -> H^1_vertex -> 0
    dims.append(_solve_exact([1, b[0], None], "degree 1"))
    for j in range(2, r + 1):
        # Cup with the hyperplane class is injective below the middle, so
        # the long sequence splits into
        # 0 -> H^{j-3}(V) -> H^{j-1}(V) -> H^j_vertex -> 0,
        # with negative-degree cohomology read as zero.
        below = b[j - 3] if j >= 3 else 0
        dims.append(_solve_exact([below, b[j - 1], None], f"degree {j}"))
    return ConeLocalDims(tuple(dims))
