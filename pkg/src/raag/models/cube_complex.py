"""
Salvetti complexes of right-angled Artin groups and their finite
abelian covers.

The Salvetti complex of A_L has one vertex and one k-cube for every
(k-1)-simplex of L, the empty simplex giving the vertex. A homomorphism
phi from A_L onto a finite abelian group Q gives a cover whose cells are
pairs (q, sigma). The cube (q, sigma) has axes along the vertices
v_0 < ... < v_(k-1) of sigma, and in direction j its two parallel
facets are (q + phi(v_j), sigma - v_j) on top and (q, sigma - v_j)
on the bottom, with signs (-1)^j and -(-1)^j.
"""

from collections import deque

from raag.complexes.constructions import require_flag
from raag.errors import MalformedInputError, PreconditionError
from raag.homology.chain_complex import ChainComplexZ
from raag.homology.sparse_matrix import SparseIntMatrix


class FiniteQuotientSpec:
    """
    A map from the generators of A_L to Z/k_1 x ... x Z/k_r.

    moduli     (k_1, ..., k_r), each at least 1
    images     {vertex: residue vector}

    Any such assignment extends to a homomorphism because the target
    is abelian. The deck group is the subgroup the images generate.
    """

    def __init__(self, moduli, images):
        self.moduli = tuple(int(k) for k in moduli)
        for k in self.moduli:
            if k < 1:
                raise PreconditionError(f"Moduli must be at least 1, got {k}.")
        self.images = {}
        for v, residues in images.items():
            residues = tuple(int(x) for x in residues)
            if len(residues) != len(self.moduli):
                raise MalformedInputError(
                    f"Image of vertex {v} has {len(residues)} residues "
                    f"for {len(self.moduli)} moduli."
                )
            self.images[int(v)] = tuple(x % k for x, k in zip(residues, self.moduli))

    @classmethod
    def congruence(cls, complex_, k):
        """
        A_L -> (Z/k)^n, sending vertex i to the i-th basis vector.
        """
        n = complex_.vertex_count
        images = {v: tuple(1 if i == v else 0 for i in range(n)) for v in range(n)}
        return cls((k,) * n, images)

    @classmethod
    def trivial(cls, complex_):
        return cls((), {v: () for v in range(complex_.vertex_count)})

    @classmethod
    def from_json_obj(cls, obj):
        try:
            return cls(obj["moduli"], {int(v): r for v, r in obj["images"].items()})
        except (KeyError, AttributeError, TypeError, ValueError) as err:
            raise MalformedInputError(f"Bad quotient spec: {err}")

    def to_json_obj(self):
        return {
            "moduli": list(self.moduli),
            "images": {str(v): list(r) for v, r in sorted(self.images.items())},
        }

    def __repr__(self):
        return f"FiniteQuotientSpec(moduli={self.describe()})"

    def describe(self):
        return "x".join(str(k) for k in self.moduli) if self.moduli else "1"

    def validate_for(self, complex_):
        unknown = sorted(v for v in self.images if not 0 <= v < complex_.vertex_count)
        if unknown:
            raise PreconditionError(f"Quotient spec names unknown vertices {unknown}.")
        missing = [v for v in complex_.vertices if v not in self.images]
        if missing:
            raise PreconditionError(
                f"Quotient spec has no image for vertices {missing}."
            )

    def add(self, q, residues):
        return tuple((a + b) % k for a, b, k in zip(q, residues, self.moduli))

    def subgroup(self, vertices):
        """
        The subgroup generated by the images of `vertices`,
        as a sorted tuple of residue vectors.
        """
        zero = tuple(0 for _ in self.moduli)
        generators = sorted({self.images[v] for v in vertices} - {zero})
        seen = {zero}
        queue = deque([zero])
        while queue:
            q = queue.popleft()
            for g in generators:
                nxt = self.add(q, g)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return tuple(sorted(seen))

    def deck_group(self):
        return self.subgroup(self.images)


class CubeComplex:
    """
    A finite abelian cover of the Salvetti complex of A_L.

    Cells of dimension i are the pairs (deck element, (i-1)-simplex of L),
    deck-element-major, then in the canonical simplex order.
    """

    def __init__(self, base, spec):
        self.base = base
        self.spec = spec
        self.deck_group = spec.deck_group()
        self.order = len(self.deck_group)
        self.dimension = base.dimension + 1
        self._deck_index = {q: i for i, q in enumerate(self.deck_group)}
        self.boundaries = {i: self._boundary(i) for i in range(1, self.dimension + 1)}

    def __repr__(self):
        return (
            f"<CubeComplex over {self.base!r}, deck group of order {self.order}, "
            f"cells {self.cell_counts()}>"
        )

    def n_cells(self, i):
        return self.order * len(self.base.faces(i - 1))

    def cell_counts(self):
        return tuple(self.n_cells(i) for i in range(self.dimension + 1))

    def cells(self, i):
        return [(q, sigma) for q in self.deck_group for sigma in self.base.faces(i - 1)]

    def cell_index(self, q, sigma):
        i = len(sigma)
        n_base = len(self.base.faces(i - 1))
        return self._deck_index[q] * n_base + self.base.index(i - 1)[sigma]

    def euler_characteristic(self):
        return sum((-1) ** i * n for i, n in enumerate(self.cell_counts()))

    def _boundary(self, i):
        triples = []
        images = self.spec.images
        for q in self.deck_group:
            for sigma in self.base.faces(i - 1):
                col = self.cell_index(q, sigma)
                for j, v in enumerate(sigma):
                    face = sigma[:j] + sigma[j + 1 :]
                    sign = (-1) ** j
                    triples.append(
                        (self.cell_index(self.spec.add(q, images[v]), face), col, sign)
                    )
                    triples.append((self.cell_index(q, face), col, -sign))
        # Opposite facets that coincide cancel here, which is what makes
        # every boundary of the uncovered Salvetti complex zero.
        return SparseIntMatrix.from_triples(
            self.n_cells(i - 1), self.n_cells(i), triples
        )

    def chain_complex(self):
        labels = {
            i: [f"{list(q)}|{list(sigma)}" for q, sigma in self.cells(i)]
            for i in range(self.dimension + 1)
        }
        return ChainComplexZ(labels, self.boundaries)

    def summary(self):
        return {
            "base": self.base.name,
            "moduli": list(self.spec.moduli),
            "deck_group_order": self.order,
            "cell_counts": list(self.cell_counts()),
            "euler_characteristic": self.euler_characteristic(),
        }


def salvetti_complex(complex_, check_flag=True):
    if check_flag:
        require_flag(complex_)
    return CubeComplex(complex_, FiniteQuotientSpec.trivial(complex_))


def finite_cover(complex_, spec, check_flag=True):
    if check_flag:
        require_flag(complex_)
    spec.validate_for(complex_)
    return CubeComplex(complex_, spec)
