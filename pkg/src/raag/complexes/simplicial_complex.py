"""
Finite abstract simplicial complexes.

A simplex is a tuple of strictly increasing vertex ids. The empty tuple
is the empty simplex, dimension -1. A complex is stored by its facets;
faces are enumerated one dimension at a time, only when asked for,
and cached.

Cells are always listed in canonical order: by dimension, then
lexicographically by vertex tuple. Matrices and test goldens depend on it.
"""

from itertools import combinations

import networkx as nx

from raag.errors import MalformedInputError


def make_simplex(vertices):
    """
    Validate and sort a collection of vertex ids into a simplex.
    """
    vertices = list(vertices)
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise MalformedInputError(
                f"Vertex ids must be nonnegative integers, got {v!r}."
            )
    simplex = tuple(sorted(vertices))
    if len(set(simplex)) != len(simplex):
        raise MalformedInputError(f"Simplex {list(vertices)} repeats a vertex.")
    return simplex


def dimension_of(simplex):
    return len(simplex) - 1


def boundary_faces(simplex):
    """
    Codimension-one faces of a simplex with their boundary signs.
    Removing the j-th vertex gives sign (-1)^j.
    """
    return [
        ((-1) ** j, simplex[:j] + simplex[j + 1 :]) for j in range(len(simplex))
    ]


class VertexMap:
    """
    A total map from the vertices 0 .. n - 1 of a source complex
    to target vertex ids.
    """

    def __init__(self, targets):
        self.targets = tuple(targets)
        for t in self.targets:
            if isinstance(t, bool) or not isinstance(t, int) or t < 0:
                raise MalformedInputError(
                    f"Vertex map targets must be nonnegative integers, got {t!r}."
                )

    @classmethod
    def from_json_obj(cls, obj, source_vertex_count=None):
        """
        Accepts either a list (position = source vertex) or an object
        keyed by source vertex id.
        """
        if isinstance(obj, dict):
            try:
                pairs = {int(k): v for k, v in obj.items()}
            except ValueError as err:
                raise MalformedInputError(f"Bad vertex map key: {err}")
            n = source_vertex_count
            if n is None:
                n = max(pairs) + 1 if pairs else 0
            missing = [v for v in range(n) if v not in pairs]
            if missing:
                raise MalformedInputError(
                    f"Vertex map is not total, missing source vertices {missing}."
                )
            return cls([pairs[v] for v in range(n)])
        if isinstance(obj, list):
            return cls(obj)
        raise MalformedInputError("A vertex map must be a JSON list or object.")

    def __len__(self):
        return len(self.targets)

    def __getitem__(self, v):
        return self.targets[v]

    def __eq__(self, other):
        return isinstance(other, VertexMap) and self.targets == other.targets

    def __hash__(self):
        return hash(self.targets)

    def __repr__(self):
        return f"VertexMap({list(self.targets)})"

    def image(self, simplex):
        return tuple(sorted({self.targets[v] for v in simplex}))

    def is_injective(self):
        return len(set(self.targets)) == len(self.targets)

    def target_count(self):
        return max(self.targets) + 1 if self.targets else 0

    def to_json_obj(self):
        return list(self.targets)


class SimplicialComplex:
    """
    An immutable finite simplicial complex on vertices 0 .. vertex_count - 1.

    Build these with `from_facets()` rather than calling the constructor,
    which trusts its input to be a sorted antichain of simplices.

    vertex_labels (optional)
    The relabeling table from the construction that produced the complex.
    For a barycentric subdivision, vertex i is labeled by the simplex of
    the original complex it stands for.

    join_factors (optional)
    The two factors, when the complex was built by `join()`.
    """

    def __init__(
        self,
        facets,
        vertex_count,
        name=None,
        vertex_labels=None,
        join_factors=None,
    ):
        self.facets = tuple(sorted(facets, key=lambda s: (len(s), s)))
        self.vertex_count = int(vertex_count)
        self.name = name
        self.vertex_labels = None if vertex_labels is None else tuple(vertex_labels)
        self.join_factors = join_factors

        self._faces = {}
        self._face_sets = {}
        self._indices = {}

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.vertex_count, self.facets))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<SimplicialComplex{label} f={self.f_vector()}>"

    @property
    def dimension(self):
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    @property
    def vertices(self):
        return tuple(range(self.vertex_count))

    def is_empty(self):
        return self.vertex_count == 0

    def faces(self, dim):
        """
        All faces of dimension `dim`, in lexicographic order.
        faces(-1) is the empty simplex alone.
        """
        if dim in self._faces:
            return self._faces[dim]
        if dim < -1:
            result = ()
        elif dim == -1:
            result = ((),)
        elif dim == 0:
            result = tuple((v,) for v in range(self.vertex_count))
        else:
            found = set()
            for facet in self.facets:
                if len(facet) > dim:
                    found.update(combinations(facet, dim + 1))
            result = tuple(sorted(found))
        self._faces[dim] = result
        return result

    def face_set(self, dim):
        if dim not in self._face_sets:
            self._face_sets[dim] = frozenset(self.faces(dim))
        return self._face_sets[dim]

    def index(self, dim):
        """
        Position of each `dim`-face in the canonical order.
        """
        if dim not in self._indices:
            self._indices[dim] = {s: i for i, s in enumerate(self.faces(dim))}
        return self._indices[dim]

    def has_face(self, simplex):
        simplex = tuple(sorted(simplex))
        return simplex in self.face_set(len(simplex) - 1)

    def simplices(self, include_empty=False):
        """
        Every face, dimension-major then lexicographic.
        """
        start = -1 if include_empty else 0
        for dim in range(start, self.dimension + 1):
            yield from self.faces(dim)

    def f_vector(self):
        return tuple(len(self.faces(dim)) for dim in range(self.dimension + 1))

    def n_cells(self):
        return sum(self.f_vector())

    def euler_characteristic(self):
        return sum((-1) ** dim * n for dim, n in enumerate(self.f_vector()))

    def f_polynomial(self):
        """
        Coefficients of f(L; t) = sum_i f_{i-1} t^i, starting with f_{-1} = 1.
        """
        return (1,) + self.f_vector()

    def graph(self):
        """
        The 1-skeleton as a networkx Graph.
        """
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.faces(1))
        return g

    def skeleton(self, k):
        if k >= self.dimension:
            return self
        facets = set(self.faces(k))
        for dim in range(k):
            for s in self.faces(dim):
                facets.add(s)
        return from_facets(
            sorted(facets),
            vertex_count=self.vertex_count,
            name=None if self.name is None else f"{self.name} {k}-skeleton",
        )


def from_facets(facets, vertex_count=None, name=None, vertex_labels=None):
    """
    Build the closure of a list of simplices.

    Non-maximal input simplices are absorbed. Vertex ids are dense:
    any id below `vertex_count` that appears in no facet becomes
    an isolated vertex.
    """
    simplices = set()
    for facet in facets:
        if len(facet) == 0:
            raise MalformedInputError("Facets must be nonempty.")
        simplices.add(make_simplex(facet))

    top_vertex = max((max(s) for s in simplices), default=-1)
    if vertex_count is None:
        vertex_count = top_vertex + 1
    elif top_vertex >= vertex_count:
        raise MalformedInputError(
            f"Vertex {top_vertex} is out of range for {vertex_count} vertices."
        )

    covered = {v for s in simplices for v in s}
    simplices.update((v,) for v in range(vertex_count) if v not in covered)

    return SimplicialComplex(
        _maximal_simplices(simplices),
        vertex_count,
        name=name,
        vertex_labels=vertex_labels,
    )


def _maximal_simplices(simplices):
    # Largest first, so a simplex only needs checking against kept facets
    # that share its first vertex.
    kept = []
    kept_sets = []
    containing = {}
    for s in sorted(simplices, key=lambda s: (-len(s), s)):
        s_set = set(s)
        if any(
            len(kept[i]) > len(s) and s_set <= kept_sets[i]
            for i in containing.get(s[0], ())
        ):
            continue
        for v in s:
            containing.setdefault(v, []).append(len(kept))
        kept.append(s)
        kept_sets.append(s_set)
    return kept
