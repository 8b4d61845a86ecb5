"""
Embedding witnesses: a contractible complex L' of the same dimension
as L, together with a simplicial embedding of L into it.
"""

from raag.classifier.collapse import CollapseSequence, collapse
from raag.complexes.io import complex_from_dict, complex_to_dict
from raag.complexes.simplicial_complex import VertexMap
from raag.errors import MalformedInputError
from raag.homology.homology import reduced_homology
from raag.models.poset_complex import amalgam_euler_characteristic

NOT_CONTRACTIBLE = "not contractible"
CONTRACTIBILITY_UNVERIFIED = "contractibility unverified"


class EmbeddingWitness:
    def __init__(self, supercomplex, embedding):
        self.supercomplex = supercomplex
        self.embedding = embedding

    def __repr__(self):
        return f"EmbeddingWitness(into {self.supercomplex!r})"

    def to_dict(self):
        return {
            "supercomplex": complex_to_dict(self.supercomplex),
            "embedding": self.embedding.to_json_obj(),
        }

    @classmethod
    def from_dict(cls, obj):
        if not isinstance(obj, dict):
            raise MalformedInputError("A witness must be a JSON object.")
        try:
            supercomplex = complex_from_dict(obj["supercomplex"])
            embedding = VertexMap.from_json_obj(obj["embedding"])
        except KeyError as err:
            raise MalformedInputError(f"Witness JSON is missing the key {err}.")
        return cls(supercomplex, embedding)


class WitnessCheck:
    """
    ok           the witness proves L embeds in a contractible complex
                 of its own dimension
    reason       why not, when ok is False
    malformed    the witness itself is wrong, as opposed to merely
                 unconfirmed because no collapse of L' was found
    sequence     the collapse of L' that certifies it contractible
    amalgam_euler_characteristic
                 chi of Y_L glued to L' along L, which has to equal
                 chi(X_L) = 1 - chi(L)
    """

    def __init__(
        self,
        ok,
        reason=None,
        malformed=False,
        sequence=None,
        amalgam_euler_characteristic=None,
    ):
        self.ok = ok
        self.reason = reason
        self.malformed = malformed
        self.sequence = sequence
        self.amalgam_euler_characteristic = amalgam_euler_characteristic

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"WitnessCheck(ok={self.ok}, reason={self.reason!r})"


def _rejected(reason):
    return WitnessCheck(False, reason, malformed=True)


def _structural_problem(complex_, witness):
    supercomplex = witness.supercomplex
    embedding = witness.embedding
    if len(embedding) != complex_.vertex_count:
        return (
            f"the embedding has {len(embedding)} entries for "
            f"{complex_.vertex_count} vertices"
        )
    if not embedding.is_injective():
        return "the embedding is not injective"
    if embedding.target_count() > supercomplex.vertex_count:
        return (
            f"the embedding sends a vertex to {embedding.target_count() - 1}, "
            f"but L' has {supercomplex.vertex_count} vertices"
        )
    for facet in complex_.facets:
        image = embedding.image(facet)
        if not supercomplex.has_face(image):
            return f"simplex {list(facet)} maps to {list(image)}, which is not in L'"
    if supercomplex.dimension != complex_.dimension:
        return (
            f"L' has dimension {supercomplex.dimension}, "
            f"L has dimension {complex_.dimension}"
        )
    return None


def _homology_obstruction(supercomplex):
    summary = reduced_homology(supercomplex)
    for d in summary.degrees():
        if summary.betti_q(d) or summary.torsion_at(d):
            return f"{NOT_CONTRACTIBLE}: H~_{d}(L') = {summary.group_name(d)}"
    return None


def verify_witness(complex_, witness, budget, sequence=None):
    """
    Check the embedding, then certify L' contractible by a collapse.

    With `sequence` given, that collapse is replayed instead of searched
    for, which is how a stored certificate is re-verified.
    """
    problem = _structural_problem(complex_, witness)
    if problem is not None:
        return _rejected(problem)

    supercomplex = witness.supercomplex
    obstruction = _homology_obstruction(supercomplex)
    if obstruction is not None:
        return _rejected(obstruction)

    if sequence is None:
        sequence = collapse(supercomplex, budget)
        if sequence is None:
            return WitnessCheck(
                False,
                f"{CONTRACTIBILITY_UNVERIFIED}: no collapse of L' found "
                f"in {budget} restarts",
            )
    else:
        problem = sequence.replay_error(supercomplex)
        if problem is not None:
            return _rejected(f"the stored collapse of L' does not replay, {problem}")

    euler = amalgam_euler_characteristic(complex_, supercomplex)
    if euler != 1 - complex_.euler_characteristic():
        return _rejected(
            f"the amalgam of Y_L and L' has Euler characteristic {euler}, "
            f"expected {1 - complex_.euler_characteristic()}"
        )
    return WitnessCheck(
        True, sequence=sequence, amalgam_euler_characteristic=euler
    )


def witness_data(witness, check):
    return {
        "witness": witness.to_dict(),
        "collapse": check.sequence.to_dict(),
        "amalgam_euler_characteristic": check.amalgam_euler_characteristic,
    }


def witness_from_data(data):
    return (
        EmbeddingWitness.from_dict(data["witness"]),
        CollapseSequence.from_dict(data["collapse"]),
    )
