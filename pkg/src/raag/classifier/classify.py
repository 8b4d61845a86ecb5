"""
Zero or positive minimal volume entropy for A_L, from the homology of L.

With d = dim L:
  H^d(L; Z) != 0                              positive
  H^d(L; Z) = 0 and d != 2                    zero
  H^d(L; Z) = 0, d = 2, L sits inside a       zero
      contractible 2-complex
  anything else                               undetermined

For d != 2 the two conditions are complementary: H^d(L; Z) = 0 is
exactly what it takes for L to embed in a contractible d-complex. In
dimension 2 that is not known, so a zero verdict there needs a collapse
of L itself or a checked embedding witness.
"""

from raag.classifier.collapse import CollapseSequence, collapse
from raag.classifier.verdict import (
    COLLAPSIBLE_SELF,
    COMPLEMENTARY_VANISHING,
    EMBEDDING_WITNESS,
    TOP_COHOMOLOGY_NONZERO,
    Certificate,
    Outcome,
    Verdict,
)
from raag.classifier.witness import verify_witness, witness_data, witness_from_data
from raag.complexes.constructions import join_f_vector, require_flag
from raag.config import restart_budget
from raag.errors import WitnessRejectedError
from raag.homology.homology import (
    reduced_homology,
    top_cohomology_nonzero,
    top_cohomology_of_join,
)
from raag.logging_setup import get_logger


def _top_cohomology(complex_, factors):
    if factors is not None:
        return top_cohomology_of_join(*factors)
    return top_cohomology_nonzero(complex_)


def _dimension(complex_, factors):
    if factors is not None:
        return factors[0].dimension + factors[1].dimension + 1
    return complex_.dimension


def classify(complex_, witness=None, budget=restart_budget, factors=None):
    """
    A complex built by join() carries its factors, and then the top
    cohomology comes from the Kunneth formula without touching the join.
    A join is flag exactly when both factors are.
    """
    if factors is None:
        factors = complex_.join_factors
    if factors is not None:
        for factor in factors:
            require_flag(factor)
    else:
        require_flag(complex_)

    d = _dimension(complex_, factors)
    top = _top_cohomology(complex_, factors)
    homology = top.summary
    if homology is None:
        homology = reduced_homology(complex_)

    def verdict(outcome, kind=None, data=None, notes=""):
        certificate = None if kind is None else Certificate(kind, data)
        result = Verdict(outcome, d, certificate, homology, notes, factors)
        get_logger("classifier").info(f"{complex_.name}: {result!r}")
        return result

    if top.nonzero:
        return verdict(Outcome.POSITIVE, TOP_COHOMOLOGY_NONZERO, top.to_dict())
    if d != 2:
        return verdict(
            Outcome.ZERO,
            COMPLEMENTARY_VANISHING,
            {"dimension": d, "top_cohomology": top.to_dict()},
        )

    notes = []
    if witness is not None:
        check = verify_witness(complex_, witness, budget)
        if check.ok:
            return verdict(
                Outcome.ZERO, EMBEDDING_WITNESS, witness_data(witness, check)
            )
        if check.malformed:
            raise WitnessRejectedError(f"Witness rejected: {check.reason}.")
        notes.append(f"The embedding witness checks out but {check.reason}.")

    sequence = collapse(complex_, budget)
    if sequence is not None:
        return verdict(
            Outcome.ZERO,
            COLLAPSIBLE_SELF,
            {"collapse": sequence.to_dict()},
            notes=" ".join(notes),
        )

    notes.append(
        f"H^2(L; Z) = 0 but no collapse of L was found by the deterministic "
        f"pass or {budget} randomized restarts. Failing to collapse proves "
        f"nothing, and in dimension 2 vanishing top cohomology is not known "
        f"to imply zero entropy."
    )
    return verdict(Outcome.UNDETERMINED, notes=" ".join(notes))


def replay_error(complex_, verdict):
    """
    Re-verify the verdict's certificate from its serialized data.
    Returns None when it holds up, otherwise what failed.
    """
    certificate = verdict.certificate
    if certificate is None:
        return "there is no certificate to replay"
    data = certificate.data

    if certificate.kind in (TOP_COHOMOLOGY_NONZERO, COMPLEMENTARY_VANISHING):
        top = _top_cohomology(complex_, verdict.factors).to_dict()
        if certificate.kind == TOP_COHOMOLOGY_NONZERO:
            stored = data
        else:
            stored = data["top_cohomology"]
        if top != stored:
            return f"recomputed top cohomology {top} differs from {stored}"
        if certificate.kind == TOP_COHOMOLOGY_NONZERO and not top["nonzero"]:
            return "top cohomology is zero"
        if certificate.kind == COMPLEMENTARY_VANISHING and (
            top["nonzero"] or data["dimension"] == 2
        ):
            return "vanishing is only complementary outside dimension 2"
        return None

    if certificate.kind == COLLAPSIBLE_SELF:
        return CollapseSequence.from_dict(data["collapse"]).replay_error(complex_)

    witness, sequence = witness_from_data(data)
    check = verify_witness(complex_, witness, 0, sequence=sequence)
    return None if check.ok else check.reason


def _f_vector(complex_, factors):
    if factors is None:
        return complex_.f_vector()
    return join_f_vector(*factors)


def _growth_prediction(verdict):
    if verdict.outcome is not Outcome.POSITIVE:
        return None
    data = verdict.certificate.data
    every_prime = data["condition"] == "free_top_homology"
    return {
        "degree": verdict.dimension + 1,
        "every_prime": every_prime,
        "primes": data["witness_primes"],
    }


def report(complex_, verdict):
    problem = replay_error(complex_, verdict)
    if verdict.certificate is None:
        replay = "none"
    elif problem is None:
        replay = "verified"
    else:
        replay = f"FAILED: {problem}"
    return {
        "name": complex_.name,
        "dimension": verdict.dimension,
        "gdim": verdict.gdim,
        "f_vector": list(_f_vector(complex_, verdict.factors)),
        "homology": verdict.homology.to_dict(),
        "verdict": verdict.to_dict(),
        "certificate_replay": replay,
        "growth": _growth_prediction(verdict),
    }


def render_report(rep):
    lines = [
        f"{rep['name'] or 'L'}: dim L = {rep['dimension']}, gdim(A_L) = {rep['gdim']}",
        f"  f-vector {rep['f_vector']}",
    ]
    for entry in rep["homology"]["degrees"]:
        groups = [f"Z^{entry['betti_q']}"] if entry["betti_q"] else []
        groups += [f"Z/{t}" for t in entry["torsion"]]
        lines.append(f"  H~_{entry['degree']:<3} {' + '.join(groups) or '0'}")
    verdict = rep["verdict"]
    kind = verdict["certificate"]["kind"] if verdict["certificate"] else "none"
    lines.append(f"  verdict {verdict['outcome']}, certificate {kind}")
    lines.append(f"  certificate replay {rep['certificate_replay']}")
    growth = rep["growth"]
    if growth is not None:
        where = (
            "every prime"
            if growth["every_prime"]
            else "p = " + ", ".join(str(p) for p in growth["primes"])
        )
        lines.append(
            f"  F_p homology growth predicted nonvanishing in degree "
            f"{growth['degree']} at {where}"
        )
    if verdict["notes"]:
        lines.append(f"  notes: {verdict['notes']}")
    return "\n".join(lines)
