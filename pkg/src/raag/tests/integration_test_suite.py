"""
Longer-running checks on bigger complexes and deeper cover chains
"""

import os
import time

from sqlogging import logging

from raag.classifier.classify import classify, render_report, report
from raag.classifier.verdict import Outcome
from raag.complexes.constructions import barycentric_subdivision, join
from raag.complexes.fixtures import (
    annulus,
    cycle,
    discrete,
    disk_flag,
    moore_flag,
    rp2_flag,
)
from raag.config import log_directory
from raag.homology.homology import join_homology_kunneth, reduced_homology
from raag.models.cube_complex import FiniteQuotientSpec
from raag.models.growth import growth_experiment
from raag.tests.complex_mocks import annulus_witness, torus_7

_test_db_name = f"temp_integration_test_{int(time.time())}"


def main():
    # Specify which scenarios to run
    # test_deep_free_group_chain()
    # test_deep_square_chain()
    # test_direct_join_homology()
    # test_verdict_table()
    test_growth_logging()


def db_cleanup():
    db_filename = f"{_test_db_name}.db"
    db_path = os.path.join(log_directory, db_filename)
    os.remove(db_path)


def run_chain(complex_, p, moduli):
    start_time = time.time()
    chain = [FiniteQuotientSpec.congruence(complex_, k) for k in moduli]
    series = growth_experiment(complex_, p, chain)
    print()
    print(series.render())
    print(f"Ran in {int(time.time() - start_time)} seconds")
    return series


def test_deep_free_group_chain():
    series = run_chain(discrete(2), 2, [5, 10, 25])
    assert series.rows[-1].index == 625
    assert series.rows[-1].betti == (1, 626)
    assert series.is_exact()


def test_deep_square_chain():
    series = run_chain(cycle(4), 3, [2, 3, 4, 5])
    assert series.rows[-1].index == 625
    assert series.rows[-1].betti[2] == 26**2
    assert series.is_exact()


def test_direct_join_homology():
    first, second = rp2_flag(), moore_flag(2)
    start_time = time.time()
    direct = reduced_homology(join(first, second), primes=(2, 3))
    print(f"Direct join homology in {int(time.time() - start_time)} seconds")
    predicted = join_homology_kunneth(first, second, primes=(2, 3))
    print(predicted.render())
    assert direct == predicted
    assert direct.torsion_at(3) == (2,)
    assert direct.torsion_at(4) == (2,)


def test_verdict_table():
    # The small cases live in classify_test.py. These are the slow ones.
    cases = [
        (barycentric_subdivision(disk_flag()), None, Outcome.ZERO),
        (barycentric_subdivision(torus_7()), None, Outcome.POSITIVE),
        (annulus(8), None, Outcome.UNDETERMINED),
        (annulus(8), annulus_witness(8), Outcome.ZERO),
        (join(rp2_flag(), moore_flag(3)), None, Outcome.ZERO),
        (join(rp2_flag(), moore_flag(2)), None, Outcome.POSITIVE),
        (join(cycle(5), discrete(3)), None, Outcome.POSITIVE),
    ]
    print()
    for complex_, witness, expected in cases:
        verdict = classify(complex_, witness=witness, budget=8)
        rep = report(complex_, verdict)
        print(render_report(rep))
        assert verdict.outcome is expected
        if verdict.certificate is not None:
            assert rep["certificate_replay"] == "verified"


def test_growth_logging():
    complex_ = cycle(5)
    chain = [FiniteQuotientSpec.congruence(complex_, k) for k in (2, 3)]
    growth_experiment(complex_, 2, chain, log_db=_test_db_name)

    logger = logging.open_logger(
        name=_test_db_name,
        dir_name=log_directory,
        level="info",
    )
    result = logger.query(
        f"""
        SELECT modulus_vector, degree, betti
        FROM {_test_db_name}
    """
    )
    logger.close()
    print(f"Logged {len(result)} rows")
    assert len(result) == 2 * 3
    db_cleanup()


if __name__ == "__main__":
    main()
