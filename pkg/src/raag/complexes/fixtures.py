"""
A library of named complexes.

Every fixture checks its own Euler characteristic and reduced integral
homology against the known answer before it is handed out, so a broken
triangulation fails loudly instead of feeding bad data downstream.
"""

from functools import lru_cache
from itertools import combinations

from raag.complexes.constructions import (
    barycentric_subdivision,
    cone,
    join,
    simplicial_quotient,
)
from raag.complexes.simplicial_complex import VertexMap, from_facets
from raag.errors import CorruptComplexError, PreconditionError, UnknownFixtureError

FIXTURE_NAMES = (
    "simplex",
    "simplex_boundary",
    "cycle",
    "path",
    "discrete",
    "octahedron",
    "icosahedron",
    "rp2_6",
    "rp2_flag",
    "moore",
    "moore_flag",
    "disk_flag",
    "annulus",
)

# Number of integer parameters each fixture takes.
_n_params = {
    "simplex": 1,
    "simplex_boundary": 1,
    "cycle": 1,
    "path": 1,
    "discrete": 1,
    "annulus": 1,
    "moore": 1,
    "moore_flag": 1,
}


def param_count(name):
    return _n_params.get(name, 0)


def fixture(name, *params):
    """
    Look up a fixture by name, e.g. fixture("cycle", 5) or fixture("rp2_flag").
    """
    if name not in FIXTURE_NAMES:
        raise UnknownFixtureError(
            f"Unknown fixture {name!r}. Known fixtures: {', '.join(FIXTURE_NAMES)}."
        )
    expected_n_params = param_count(name)
    if len(params) != expected_n_params:
        raise PreconditionError(
            f"Fixture {name!r} takes {expected_n_params} integer parameter(s), "
            f"got {len(params)}."
        )
    return _build(name, tuple(int(p) for p in params))


@lru_cache(maxsize=None)
def _build(name, params):
    builder, expected = _builders[name]
    complex_ = builder(*params)
    _self_check(complex_, *expected(*params))
    return complex_


def simplex(n):
    _require(n >= 0, f"simplex(n) needs n >= 0, got {n}.")
    return from_facets([range(n + 1)], name=f"simplex({n})")


def simplex_boundary(n):
    _require(n >= 1, f"simplex_boundary(n) needs n >= 1, got {n}.")
    return from_facets(
        combinations(range(n + 1), n),
        vertex_count=n + 1,
        name=f"simplex_boundary({n})",
    )


def cycle(n):
    _require(n >= 3, f"cycle(n) needs n >= 3, got {n}.")
    return from_facets([(i, (i + 1) % n) for i in range(n)], name=f"cycle({n})")


def path(n):
    _require(n >= 1, f"path(n) needs n >= 1, got {n}.")
    edges = [(i, i + 1) for i in range(n - 1)]
    return from_facets(edges, vertex_count=n, name=f"path({n})")


def discrete(n):
    _require(n >= 1, f"discrete(n) needs n >= 1, got {n}.")
    return from_facets([], vertex_count=n, name=f"discrete({n})")


def octahedron():
    pair = from_facets([], vertex_count=2)
    complex_ = join(join(pair, pair), pair)
    return from_facets(complex_.facets, name="octahedron")


# Icosahedron vertex layout:
#   0          north pole
#   1 .. 5     upper ring u_i, at angle 72 i degrees
#   6 .. 10    lower ring l_i, at angle 72 i + 36 degrees
#   11         south pole
# The antipode of u_i is l_{i+2}.


def icosahedron():
    facets = []
    for i in range(5):
        j = (i + 1) % 5
        u_i, u_j = 1 + i, 1 + j
        l_i, l_j = 6 + i, 6 + j
        facets.append((0, u_i, u_j))
        facets.append((11, l_i, l_j))
        facets.append((u_i, u_j, l_i))
        facets.append((u_j, l_i, l_j))
    return from_facets(facets, name="icosahedron")


def icosahedron_antipodal_map():
    """
    Sends each vertex and its antipode to the same vertex of RP^2.
    """
    targets = [0] * 12
    for i in range(5):
        targets[1 + i] = 1 + i
        targets[6 + (i + 2) % 5] = 1 + i
    return VertexMap(targets)


def rp2_6():
    quotient = simplicial_quotient(icosahedron(), icosahedron_antipodal_map())
    return from_facets(quotient.facets, name="rp2_6")


def rp2_flag():
    sd = barycentric_subdivision(_build("rp2_6", ()))
    return _renamed(sd, "rp2_flag")


# Moore space disk layout, for a boundary 3q-gon:
#   b_j = j             boundary vertices, 0 <= j < 3q
#   a_j = 3q + j        inner ring, a_j is adjacent to b_j and b_{j+1}
#   z   = 6q            center
# The quotient wraps the boundary q times around a triangle c_0 c_1 c_2.
# Inner ring vertices keep their own ids, so the only identifications
# are along the boundary.


def moore_disk(q):
    _require(q >= 2, f"moore(q) needs q >= 2, got {q}.")
    m = 3 * q
    center = 2 * m
    facets = []
    for j in range(m):
        k = (j + 1) % m
        b_j, b_k = j, k
        a_j, a_k = m + j, m + k
        facets.append((a_j, b_j, b_k))
        facets.append((a_j, a_k, b_k))
        facets.append((center, a_j, a_k))
    return from_facets(facets, name=f"moore_disk({q})")


def moore_wrapping_map(q):
    m = 3 * q
    targets = [j % 3 for j in range(m)]
    targets += [3 + j for j in range(m)]
    targets.append(3 + m)
    return VertexMap(targets)


def moore(q):
    quotient = simplicial_quotient(moore_disk(q), moore_wrapping_map(q))
    return from_facets(quotient.facets, name=f"moore({q})")


def moore_flag(q):
    sd = barycentric_subdivision(_build("moore", (q,)))
    return _renamed(sd, f"moore_flag({q})")


def disk_flag():
    # Cone over a hexagon: a wheel with six spokes.
    return _renamed(cone(cycle(6)), "disk_flag")


def annulus(n):
    """
    Two concentric n-cycles a_i = i and b_i = n + i, with
    triangles (a_i, a_{i+1}, b_i) and (a_{i+1}, b_i, b_{i+1}).
    Flag for n >= 4.
    """
    _require(n >= 4, f"annulus(n) needs n >= 4, got {n}.")
    facets = []
    for i in range(n):
        j = (i + 1) % n
        facets.append((i, j, n + i))
        facets.append((j, n + i, n + j))
    return from_facets(facets, name=f"annulus({n})")


def _renamed(complex_, name):
    return from_facets(
        complex_.facets,
        vertex_count=complex_.vertex_count,
        name=name,
        vertex_labels=complex_.vertex_labels,
    )


def _require(condition, message):
    if not condition:
        raise PreconditionError(message)


# Expected (euler characteristic, reduced free ranks, reduced torsion),
# degree -> value, omitted degrees are zero.


def _point_like(*_):
    return 1, {}, {}


def _sphere(dim):
    return 1 + (-1) ** dim, {dim: 1}, {}


def _moore_expected(q):
    return 1, {}, {1: (q,)}


_rp2_expected = (1, {}, {1: (2,)})

_builders = {
    "simplex": (simplex, _point_like),
    "simplex_boundary": (simplex_boundary, lambda n: _sphere(n - 1)),
    "cycle": (cycle, lambda n: _sphere(1)),
    "path": (path, _point_like),
    "discrete": (discrete, lambda n: (n, {0: n - 1} if n > 1 else {}, {})),
    "octahedron": (octahedron, lambda: _sphere(2)),
    "icosahedron": (icosahedron, lambda: _sphere(2)),
    "rp2_6": (rp2_6, lambda: _rp2_expected),
    "rp2_flag": (rp2_flag, lambda: _rp2_expected),
    "moore": (moore, _moore_expected),
    "moore_flag": (moore_flag, _moore_expected),
    "disk_flag": (disk_flag, _point_like),
    "annulus": (annulus, lambda n: (0, {1: 1}, {})),
}


def _self_check(complex_, euler, free_ranks, torsion):
    # Imported here because the homology engine builds on this package.
    from raag.homology.homology import reduced_homology

    if complex_.euler_characteristic() != euler:
        raise CorruptComplexError(
            f"Fixture {complex_.name} has Euler characteristic "
            f"{complex_.euler_characteristic()}, expected {euler}."
        )
    summary = reduced_homology(complex_)
    for degree in summary.degrees():
        if summary.betti_q(degree) != free_ranks.get(degree, 0):
            raise CorruptComplexError(
                f"Fixture {complex_.name} has reduced rational Betti number "
                f"{summary.betti_q(degree)} in degree {degree}, "
                f"expected {free_ranks.get(degree, 0)}."
            )
        if summary.torsion_at(degree) != torsion.get(degree, ()):
            raise CorruptComplexError(
                f"Fixture {complex_.name} has torsion {summary.torsion_at(degree)} "
                f"in degree {degree}, expected {torsion.get(degree, ())}."
            )
