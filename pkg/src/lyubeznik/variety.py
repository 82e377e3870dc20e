"""Variety expressions: immutable syntax trees built from six atomic
constructors plus binary product and disjoint union.

Constructor constraints are enforced at construction time, so every
reachable tree describes a nonsingular projective variety of dimension
at least 1.  All values here are frozen and safe to share.
"""

from dataclasses import dataclass


class SemanticError(ValueError):
    """A constructor constraint is violated (wrong arity, bad argument)."""


class DimensionMismatchError(SemanticError):
    """Disjoint union of operands with different dimensions."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SemanticError(message)


class VarietyExpr:
    """Base class for variety expressions."""

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class ProjSpace(VarietyExpr):
    """Projective space of dimension n >= 1."""

    n: int

    def __post_init__(self):
        _require(self.n >= 1, f"P(n) requires n >= 1, got n={self.n}")


@dataclass(frozen=True)
class Grassmannian(VarietyExpr):
    """Grassmannian of k-dimensional subspaces of n-space, 0 < k < n."""

    k: int
    n: int

    def __post_init__(self):
        _require(0 < self.k < self.n,
                 f"Gr(k,n) requires 0 < k < n, got k={self.k}, n={self.n}")


@dataclass(frozen=True)
class Curve(VarietyExpr):
    """Nonsingular projective curve of genus g >= 0."""

    g: int

    def __post_init__(self):
        _require(self.g >= 0, f"Curve(g) requires g >= 0, got g={self.g}")


@dataclass(frozen=True)
class Abelian(VarietyExpr):
    """Abelian variety of dimension g >= 1."""

    g: int

    def __post_init__(self):
        _require(self.g >= 1, f"Ab(g) requires g >= 1, got g={self.g}")


@dataclass(frozen=True)
class Hypersurface(VarietyExpr):
    """Nonsingular degree-d hypersurface in P^n, so of dimension n - 1."""

    n: int
    d: int

    def __post_init__(self):
        _require(self.n >= 2, f"Hyp(n,d) requires n >= 2, got n={self.n}")
        _require(self.d >= 1, f"Hyp(n,d) requires d >= 1, got d={self.d}")


@dataclass(frozen=True)
class CompleteIntersection(VarietyExpr):
    """Nonsingular complete intersection in P^n of the given multidegree."""

    n: int
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        c = len(self.degrees)
        _require(c >= 1, "CI(n; ...) requires at least one degree")
        _require(all(isinstance(d, int) and d >= 1 for d in self.degrees),
                 f"CI degrees must be integers >= 1, got {self.degrees}")
        _require(self.n - c >= 1,
                 f"CI(n; d1,...,dc) requires dimension n - c >= 1, "
                 f"got n={self.n}, c={c}")


@dataclass(frozen=True)
class Product(VarietyExpr):
    """Product of two varieties; dimensions add."""

    left: VarietyExpr
    right: VarietyExpr


@dataclass(frozen=True)
class DisjointUnion(VarietyExpr):
    """Disjoint union of two varieties of the same dimension."""

    left: VarietyExpr
    right: VarietyExpr

    def __post_init__(self):
        dl, dr = dimension(self.left), dimension(self.right)
        if dl != dr:
            raise DimensionMismatchError(
                f"disjoint union requires equal dimensions, got {dl} and {dr}")


def dimension(expr: VarietyExpr) -> int:
    """Total dimension of the variety described by ``expr``.

    >>> dimension(Grassmannian(2, 5))
    6
    >>> dimension(Product(Curve(1), ProjSpace(1)))
    2
    >>> dimension(CompleteIntersection(5, (2, 2)))
    3
    """
    if isinstance(expr, ProjSpace):
        return expr.n
    if isinstance(expr, Grassmannian):
        return expr.k * (expr.n - expr.k)
    if isinstance(expr, Curve):
        return 1
    if isinstance(expr, Abelian):
        return expr.g
    if isinstance(expr, Hypersurface):
        return expr.n - 1
    if isinstance(expr, CompleteIntersection):
        return expr.n - len(expr.degrees)
    if isinstance(expr, Product):
        return dimension(expr.left) + dimension(expr.right)
    if isinstance(expr, DisjointUnion):
        return dimension(expr.left)
    raise TypeError(f"not a variety expression: {expr!r}")


def render(expr: VarietyExpr) -> str:
    """Canonical text for ``expr``; parses back to an equal tree.

    The product operator binds tighter than the union operator and both
    associate to the left, so parentheses appear only where the shape
    demands them.

    >>> render(Product(Curve(1), ProjSpace(1)))
    'Curve(1) x P(1)'
    >>> render(Product(DisjointUnion(ProjSpace(1), ProjSpace(1)), ProjSpace(2)))
    '(P(1) + P(1)) x P(2)'
    >>> render(CompleteIntersection(5, (2, 2)))
    'CI(5; 2,2)'
    """
    return _render(expr, 0)


# Context levels: 0 union operand, 1 product left operand, 2 product right
# operand.  A node needs parentheses when its own binding is looser than
# what the context requires.
def _render(expr: VarietyExpr, level: int) -> str:
    if isinstance(expr, DisjointUnion):
        text = f"{_render(expr.left, 0)} + {_render(expr.right, 1)}"
        return f"({text})" if level >= 1 else text
    if isinstance(expr, Product):
        text = f"{_render(expr.left, 1)} x {_render(expr.right, 2)}"
        return f"({text})" if level >= 2 else text
    if isinstance(expr, ProjSpace):
        return f"P({expr.n})"
    if isinstance(expr, Grassmannian):
        return f"Gr({expr.k},{expr.n})"
    if isinstance(expr, Curve):
        return f"Curve({expr.g})"
    if isinstance(expr, Abelian):
        return f"Ab({expr.g})"
    if isinstance(expr, Hypersurface):
        return f"Hyp({expr.n},{expr.d})"
    if isinstance(expr, CompleteIntersection):
        degrees = ",".join(str(d) for d in expr.degrees)
        return f"CI({expr.n}; {degrees})"
    raise TypeError(f"not a variety expression: {expr!r}")
