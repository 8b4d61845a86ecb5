from raag.complexes.simplicial_complex import boundary_faces
from raag.errors import CorruptComplexError
from raag.homology.sparse_matrix import SparseIntMatrix


class ChainComplexZ:
    """
    A finite chain complex of free abelian groups with fixed ordered bases.

    basis_labels
    {degree: list of cell names}, for degrees min_degree .. top_dimension.

    boundaries
    {degree i: SparseIntMatrix from i-cells to (i-1)-cells}.
    Degrees that are missing are zero maps.

    augmented
    If True the complex includes degree -1, a single cell standing for
    the empty simplex, and its homology is reduced homology.
    """

    def __init__(self, basis_labels, boundaries, augmented=False):
        self.augmented = augmented
        self.min_degree = -1 if augmented else 0
        self.basis_labels = {d: list(labels) for d, labels in basis_labels.items()}
        self.top_dimension = max(
            (d for d, labels in self.basis_labels.items() if labels),
            default=self.min_degree - 1,
        )
        self.boundaries = dict(boundaries)

    def __repr__(self):
        sizes = [self.rank(d) for d in self.degrees()]
        return f"<ChainComplexZ degrees from {self.min_degree}, ranks {sizes}>"

    def degrees(self):
        return range(self.min_degree, self.top_dimension + 1)

    def rank(self, degree):
        """
        The rank of the chain group in this degree.
        """
        return len(self.basis_labels.get(degree, ()))

    def boundary(self, degree):
        matrix = self.boundaries.get(degree)
        if matrix is None:
            matrix = SparseIntMatrix(self.rank(degree - 1), self.rank(degree))
        return matrix

    def euler_characteristic(self):
        return sum((1 if d % 2 == 0 else -1) * self.rank(d) for d in self.degrees())

    def check(self):
        """
        Raise CorruptComplexError unless the shapes match the bases
        and every composite of two boundaries is zero.
        """
        for degree, matrix in self.boundaries.items():
            expected = (self.rank(degree - 1), self.rank(degree))
            if matrix.shape != expected:
                raise CorruptComplexError(
                    f"Boundary in degree {degree} is {matrix.shape}, "
                    f"expected {expected} from the bases."
                )
        for degree in self.degrees():
            if degree - 1 <= self.min_degree:
                continue
            product = self.boundary(degree - 1).matmul(self.boundary(degree))
            if not product.is_zero():
                raise CorruptComplexError(
                    f"The boundary of the boundary is nonzero in degree {degree}, "
                    f"{product.nnz()} nonzero entries."
                )
        return True

    def dump(self, stream):
        for degree in sorted(self.boundaries):
            for line in self.boundaries[degree].dump_lines(degree):
                stream.write(line + "\n")


def simplicial_chain_complex(complex_, augmented=False):
    """
    The boundary of an i-simplex is the alternating sum of its faces,
    removing the j-th vertex with sign (-1)^j. With augmentation,
    every vertex maps to 1 on the empty simplex.
    """
    min_degree = -1 if augmented else 0
    top = complex_.dimension
    basis_labels = {}
    for degree in range(min_degree, top + 1):
        basis_labels[degree] = list(complex_.faces(degree))

    boundaries = {}
    for degree in range(min_degree + 1, top + 1):
        row_index = complex_.index(degree - 1)
        triples = []
        for col, simplex in enumerate(complex_.faces(degree)):
            for sign, face in boundary_faces(simplex):
                triples.append((row_index[face], col, sign))
        boundaries[degree] = SparseIntMatrix.from_triples(
            len(basis_labels[degree - 1]), len(basis_labels[degree]), triples
        )

    return ChainComplexZ(basis_labels, boundaries, augmented=augmented)
