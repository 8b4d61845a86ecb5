"""
Constructions on simplicial complexes: flag test and completion,
barycentric subdivision, cone, join, and simplicial quotients.

All of these are pure functions. Each output carries a `vertex_labels`
table saying where its vertices came from.
"""

from itertools import combinations, permutations

import networkx as nx

from raag.complexes.simplicial_complex import SimplicialComplex, from_facets
from raag.errors import NonSimplicialQuotientError, NotFlagError, PreconditionError


def is_flag(complex_):
    """
    Check whether every clique of the 1-skeleton spans a simplex.

    Returns (True, None) or (False, witness), where the witness is a
    minimal non-face whose vertices are pairwise adjacent.
    """
    g = complex_.graph()
    # Sorted so the reported witness doesn't depend on networkx internals.
    cliques = sorted(tuple(sorted(c)) for c in nx.find_cliques(g))
    for clique in cliques:
        if complex_.has_face(clique):
            continue
        return False, _minimal_non_face(complex_, clique)
    return True, None


def require_flag(complex_):
    flag, witness = is_flag(complex_)
    if not flag:
        raise NotFlagError(
            f"{complex_.name or 'The complex'} is not flag, so it does not present "
            f"a RAAG: vertices {list(witness)} are pairwise adjacent but span "
            "no simplex."
        )


def _minimal_non_face(complex_, clique):
    # Every subset of size two is an edge, so start looking at triangles.
    # The first miss at the smallest size is minimal.
    for size in range(3, len(clique) + 1):
        for candidate in combinations(clique, size):
            if not complex_.has_face(candidate):
                return candidate
    return clique


def flag_completion(graph_complex):
    """
    The clique complex of a complex of dimension at most one.
    """
    if graph_complex.dimension > 1:
        raise PreconditionError(
            "Flag completion takes a graph, got a complex of dimension "
            f"{graph_complex.dimension}. Pass its 1-skeleton instead."
        )
    if graph_complex.is_empty():
        return graph_complex
    cliques = [sorted(c) for c in nx.find_cliques(graph_complex.graph())]
    return from_facets(
        cliques,
        vertex_count=graph_complex.vertex_count,
        name=_derived_name("flag", graph_complex),
    )


def barycentric_subdivision(complex_):
    """
    Vertices of the subdivision are the nonempty simplices of the input,
    listed in canonical order; `vertex_labels[i]` is the simplex that
    vertex i stands for. Simplices are chains under inclusion.
    """
    labels = list(complex_.simplices())
    position = {s: i for i, s in enumerate(labels)}

    # Maximal chains grow one vertex at a time up to a facet,
    # one chain per ordering of the facet's vertices.
    chains = []
    for facet in complex_.facets:
        for order in permutations(facet):
            chains.append(
                [position[tuple(sorted(order[: k + 1]))] for k in range(len(order))]
            )

    return from_facets(
        chains,
        vertex_count=len(labels),
        name=_derived_name("sd", complex_),
        vertex_labels=labels,
    )


def cone(complex_, apex_label=None):
    """
    Add a new apex vertex, numbered after all the existing ones,
    joined to every simplex.
    """
    apex = complex_.vertex_count
    if complex_.facets:
        facets = [facet + (apex,) for facet in complex_.facets]
    else:
        facets = [(apex,)]

    labels = None
    if complex_.vertex_labels is not None:
        labels = complex_.vertex_labels + (apex_label,)

    return from_facets(
        facets,
        vertex_count=apex + 1,
        name=_derived_name("cone", complex_),
        vertex_labels=labels,
    )


def join(first, second):
    """
    Vertices of `second` are shifted up past those of `first`.
    vertex_labels[i] is (1, v) or (2, v), naming the factor and the
    original vertex.
    """
    shift = first.vertex_count
    shifted = [tuple(v + shift for v in facet) for facet in second.facets]
    if not first.facets:
        facets = shifted
    elif not second.facets:
        facets = list(first.facets)
    else:
        facets = [a + b for a in first.facets for b in shifted]

    labels = [(1, v) for v in range(first.vertex_count)]
    labels += [(2, v) for v in range(second.vertex_count)]

    name = None
    if first.name and second.name:
        name = f"{first.name} * {second.name}"

    # Every facet here is already maximal, so skip the absorption pass.
    return SimplicialComplex(
        facets,
        shift + second.vertex_count,
        name=name,
        vertex_labels=labels,
        join_factors=(first, second),
    )


def join_f_vector(first, second):
    """
    f(L1 * L2; t) = f(L1; t) f(L2; t), read off without building the join.
    """
    a, b = first.f_polynomial(), second.f_polynomial()
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] += x * y
    return tuple(product[1:])


def simplicial_quotient(complex_, vertex_map):
    """
    Identify vertices according to `vertex_map`, merging duplicate
    image simplices.

    The map has to be onto 0 .. n - 1 and injective on every simplex.
    If some simplex would degenerate, subdivide first.
    """
    if len(vertex_map) != complex_.vertex_count:
        raise PreconditionError(
            f"Vertex map has {len(vertex_map)} entries for a complex with "
            f"{complex_.vertex_count} vertices."
        )
    n_targets = vertex_map.target_count()
    missing = set(range(n_targets)) - set(vertex_map.targets)
    if missing:
        raise PreconditionError(
            f"Vertex map is not onto: target vertices {sorted(missing)} are missed."
        )

    images = []
    for facet in complex_.facets:
        image = vertex_map.image(facet)
        if len(image) < len(facet):
            raise NonSimplicialQuotientError(
                f"Simplex {list(facet)} maps onto {list(image)}, "
                "collapsing two of its vertices."
            )
        images.append(image)

    return from_facets(
        images,
        vertex_count=n_targets,
        name=_derived_name("quotient", complex_),
    )


def _derived_name(prefix, complex_):
    if complex_.name is None:
        return None
    return f"{prefix}({complex_.name})"
