from enum import Enum

from raag.errors import MalformedInputError

TOP_COHOMOLOGY_NONZERO = "TopCohomologyNonzero"
COMPLEMENTARY_VANISHING = "ComplementaryVanishing"
COLLAPSIBLE_SELF = "CollapsibleSelf"
EMBEDDING_WITNESS = "EmbeddingWitness"

CERTIFICATE_KINDS = (
    TOP_COHOMOLOGY_NONZERO,
    COMPLEMENTARY_VANISHING,
    COLLAPSIBLE_SELF,
    EMBEDDING_WITNESS,
)


class Outcome(Enum):
    POSITIVE = "PositiveEntropy"
    ZERO = "ZeroEntropy"
    UNDETERMINED = "Undetermined"

    @property
    def exit_code(self):
        return 3 if self is Outcome.UNDETERMINED else 0


class Certificate:
    """
    kind    one of CERTIFICATE_KINDS
    data    a JSON-ready dict holding everything needed to re-verify it
    """

    def __init__(self, kind, data):
        if kind not in CERTIFICATE_KINDS:
            raise MalformedInputError(f"Unknown certificate kind {kind!r}.")
        self.kind = kind
        self.data = data

    def __repr__(self):
        return f"Certificate({self.kind})"

    def to_dict(self):
        return {"kind": self.kind, "data": self.data}


class Verdict:
    """
    The outcome for A_L and its evidence.

    dimension   d = dim L
    gdim        the geometric dimension of A_L, d + 1
    homology    the reduced HomologySummary of L the decision was made from
    factors     (L1, L2) when the verdict came from the Kunneth path
    """

    def __init__(
        self,
        outcome,
        dimension,
        certificate=None,
        homology=None,
        notes="",
        factors=None,
    ):
        self.outcome = outcome
        self.dimension = dimension
        self.gdim = dimension + 1
        self.certificate = certificate
        self.homology = homology
        self.notes = notes
        self.factors = factors

    def __repr__(self):
        kind = self.certificate.kind if self.certificate else None
        return f"<Verdict {self.outcome.value} d={self.dimension} certificate={kind}>"

    @property
    def exit_code(self):
        return self.outcome.exit_code

    def to_dict(self):
        certificate = self.certificate
        return {
            "outcome": self.outcome.value,
            "d": self.dimension,
            "gdim": self.gdim,
            "certificate": None if certificate is None else certificate.to_dict(),
            "homology": None if self.homology is None else self.homology.to_dict(),
            "notes": self.notes,
        }
