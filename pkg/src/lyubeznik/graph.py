"""Intersection graphs of top-dimensional components.

Component and intersection data arrive from a JSON document; only the
combinatorics lives here.  The induced graph on components of maximal
dimension r has an edge exactly where a recorded intersection has
dimension r - 1, and its number of connected components is the corner
entry of the Lyubeznik table.
"""

from dataclasses import dataclass


class GraphError(ValueError):
    """Component or intersection data violates the schema."""


@dataclass(frozen=True)
class ComponentGraph:
    """Named components with dimensions plus pairwise intersection dimensions.

    Intersections are index triples (i, j, dim); an absent pair means an
    empty intersection, which may also be recorded explicitly as dim -1.
    """

    components: tuple
    intersections: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "components",
                           tuple(tuple(c) for c in self.components))
        object.__setattr__(self, "intersections",
                           tuple(tuple(x) for x in self.intersections))
        for name, dim in self.components:
            if not isinstance(name, str):
                raise GraphError(f"component name must be a string, got {name!r}")
            if not isinstance(dim, int) or dim < 0:
                raise GraphError(
                    f"component dimension must be a nonnegative integer, got {dim!r}")
        n = len(self.components)
        seen = set()
        for i, j, dim in self.intersections:
            if not (isinstance(i, int) and isinstance(j, int)):
                raise GraphError(f"intersection indices must be integers: ({i!r}, {j!r})")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"intersection indices out of range: ({i}, {j})")
            if i == j:
                raise GraphError(
                    f"component {self.components[i][0]!r} cannot intersect itself")
            if not isinstance(dim, int) or dim < -1:
                raise GraphError(
                    f"intersection dimension must be an integer >= -1, got {dim!r}")
            if dim > min(self.components[i][1], self.components[j][1]):
                raise GraphError(
                    f"intersection of {self.components[i][0]!r} and "
                    f"{self.components[j][0]!r} cannot exceed either dimension")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GraphError(f"duplicate intersection record for pair {key}")
            seen.add(key)

    @classmethod
    def from_json_dict(cls, data) -> "ComponentGraph":
        """Build from the document shape
        ``{"components": [{"name", "dim"}], "intersections": [{"a", "b", "dim"}]}``.

        Components are referenced by name; names must be unique.  A pair
        with no record has empty intersection.
        """
        if not isinstance(data, dict):
            raise GraphError("top-level JSON value must be an object")
        comp_items = data.get("components")
        if not isinstance(comp_items, list) or not comp_items:
            raise GraphError("'components' must be a nonempty list")
        index_of = {}
        components = []
        for item in comp_items:
            if not isinstance(item, dict) or "name" not in item or "dim" not in item:
                raise GraphError(f"component records need 'name' and 'dim': {item!r}")
            name = item["name"]
            if name in index_of:
                raise GraphError(f"duplicate component name {name!r}")
            index_of[name] = len(components)
            components.append((name, item["dim"]))
        inter_items = data.get("intersections", [])
        if not isinstance(inter_items, list):
            raise GraphError("'intersections' must be a list")
        intersections = []
        for item in inter_items:
            if not isinstance(item, dict) or not {"a", "b", "dim"} <= item.keys():
                raise GraphError(
                    f"intersection records need 'a', 'b' and 'dim': {item!r}")
            for end in ("a", "b"):
                if item[end] not in index_of:
                    raise GraphError(
                        f"unknown component {item[end]!r} in intersection record")
            intersections.append((index_of[item["a"]], index_of[item["b"]], item["dim"]))
        return cls(tuple(components), tuple(intersections))


@dataclass(frozen=True)
class GammaGraph:
    """Graph on the top-dimensional components: vertex names plus edges as
    index pairs into ``vertices``."""

    top_dim: int
    vertices: tuple
    edges: tuple


def gamma_graph(g: ComponentGraph) -> GammaGraph:
    """Induced graph on the components of maximal dimension r, with an
    edge exactly when the recorded intersection has dimension r - 1.

    >>> g = ComponentGraph((("A", 2), ("B", 1)), ((0, 1, 1),))
    >>> gamma_graph(g).vertices
    ('A',)
    """
    if not g.components:
        raise GraphError("at least one component is required")
    r = max(dim for _, dim in g.components)
    vertex_of = {}
    vertices = []
    for idx, (name, dim) in enumerate(g.components):
        if dim == r:
            vertex_of[idx] = len(vertices)
            vertices.append(name)
    edges = set()
    for i, j, dim in g.intersections:
        if i in vertex_of and j in vertex_of and dim == r - 1:
            a, b = vertex_of[i], vertex_of[j]
            edges.add((min(a, b), max(a, b)))
    return GammaGraph(r, tuple(vertices), tuple(sorted(edges)))


class _UnionFind:
    """Union-find over 0..n-1 with path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def count_components(g: GammaGraph) -> int:
    """Number of connected components of the graph.

    >>> count_components(GammaGraph(2, ("A", "B"), ()))
    2
    >>> count_components(GammaGraph(2, ("A", "B"), ((0, 1),)))
    1
    """
    if not g.vertices:
        raise GraphError("empty vertex set")
    uf = _UnionFind(len(g.vertices))
    for a, b in g.edges:
        uf.union(a, b)
    return len({uf.find(v) for v in range(len(g.vertices))})
