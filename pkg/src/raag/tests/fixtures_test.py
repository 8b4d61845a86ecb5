import pytest

from raag.complexes.constructions import is_flag
from raag.complexes.fixtures import FIXTURE_NAMES, fixture, param_count
from raag.errors import PreconditionError, UnknownFixtureError
from raag.homology.homology import reduced_homology

_flag_fixtures = [
    ("cycle", 4),
    ("path", 4),
    ("discrete", 3),
    ("simplex", 3),
    ("octahedron",),
    ("rp2_flag",),
    ("moore_flag", 2),
    ("disk_flag",),
    ("annulus", 5),
]


def test_f_vectors():
    assert fixture("rp2_6").f_vector() == (6, 15, 10)
    assert fixture("icosahedron").f_vector() == (12, 30, 20)
    assert fixture("octahedron").f_vector() == (6, 12, 8)
    assert fixture("moore", 3).f_vector() == (13, 39, 27)
    assert fixture("disk_flag").f_vector() == (7, 12, 6)
    assert fixture("annulus", 6).f_vector() == (12, 24, 12)
    assert fixture("rp2_flag").f_vector() == (31, 90, 60)


@pytest.mark.parametrize("spec", _flag_fixtures)
def test_flag(spec):
    assert is_flag(fixture(*spec))[0]


def test_rp2_homology():
    summary = reduced_homology(fixture("rp2_6"))
    assert summary.torsion_at(1) == (2,)
    assert summary.betti_q(2) == 0


def test_moore_homology():
    for q in (2, 3, 4):
        summary = reduced_homology(fixture("moore_flag", q))
        assert summary.torsion_at(1) == (q,)
        assert summary.is_acyclic() is False


def test_annulus_homology():
    summary = reduced_homology(fixture("annulus", 6))
    assert summary.betti_q(1) == 1
    assert summary.betti_q(2) == 0


def test_names():
    assert fixture("cycle", 5).name == "cycle(5)"
    assert fixture("rp2_flag").name == "rp2_flag"
    assert set(FIXTURE_NAMES) >= {"rp2_6", "moore", "annulus"}
    assert param_count("moore") == 1
    assert param_count("octahedron") == 0


def test_unknown_fixture():
    with pytest.raises(UnknownFixtureError):
        fixture("torus")


def test_parameter_checks():
    with pytest.raises(PreconditionError):
        fixture("cycle")
    with pytest.raises(PreconditionError):
        fixture("cycle", 2)
    with pytest.raises(PreconditionError):
        fixture("annulus", 3)
    with pytest.raises(PreconditionError):
        fixture("moore", 1)
