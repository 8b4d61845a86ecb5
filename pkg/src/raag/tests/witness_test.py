import pytest

from raag.classifier import witness as witness_module
from raag.classifier.witness import (
    CONTRACTIBILITY_UNVERIFIED,
    NOT_CONTRACTIBLE,
    EmbeddingWitness,
    verify_witness,
    witness_data,
    witness_from_data,
)
from raag.complexes.fixtures import annulus, disk_flag, octahedron, simplex
from raag.complexes.simplicial_complex import VertexMap
from raag.errors import MalformedInputError
from raag.tests.complex_mocks import annulus_witness, good_witness, two_triangles


def test_good_witness():
    check = verify_witness(two_triangles(), good_witness(), budget=4)
    assert check.ok
    assert check.reason is None
    assert check.sequence.replay(disk_flag())
    assert check.amalgam_euler_characteristic == 0


def test_annulus_in_disk():
    check = verify_witness(annulus(6), annulus_witness(6), budget=4)
    assert check.ok
    assert check.amalgam_euler_characteristic == 1


def test_sphere_is_rejected():
    witness = EmbeddingWitness(octahedron(), VertexMap([0, 2, 1, 4]))
    check = verify_witness(two_triangles(), witness, budget=4)
    assert not check.ok
    assert check.malformed
    assert check.reason.startswith(NOT_CONTRACTIBLE)
    assert "H~_2(L') = Z" in check.reason


@pytest.mark.parametrize(
    "targets, match",
    [
        ([0, 1, 2], "entries"),
        ([0, 1, 1, 6], "injective"),
        ([0, 1, 2, 9], "vertices"),
        ([0, 2, 4, 6], "not in L'"),
    ],
)
def test_structural_problems(targets, match):
    witness = EmbeddingWitness(disk_flag(), VertexMap(targets))
    check = verify_witness(two_triangles(), witness, budget=4)
    assert check.malformed
    assert match in check.reason


def test_dimension_must_match():
    witness = EmbeddingWitness(simplex(3), VertexMap([0, 1, 2, 3]))
    check = verify_witness(two_triangles(), witness, budget=4)
    assert check.malformed
    assert "dimension" in check.reason


def test_unverified_is_not_malformed(monkeypatch):
    monkeypatch.setattr(witness_module, "collapse", lambda complex_, budget: None)
    check = verify_witness(two_triangles(), good_witness(), budget=4)
    assert not check.ok
    assert not check.malformed
    assert check.reason.startswith(CONTRACTIBILITY_UNVERIFIED)


def test_replay_stored_sequence():
    check = verify_witness(two_triangles(), good_witness(), budget=4)
    data = witness_data(good_witness(), check)
    witness, sequence = witness_from_data(data)
    replayed = verify_witness(two_triangles(), witness, budget=0, sequence=sequence)
    assert replayed.ok

    sequence.steps = sequence.steps[:-1]
    replayed = verify_witness(two_triangles(), witness, budget=0, sequence=sequence)
    assert replayed.malformed
    assert "does not replay" in replayed.reason


def test_witness_json():
    obj = good_witness().to_dict()
    assert obj["embedding"] == [0, 1, 2, 6]
    restored = EmbeddingWitness.from_dict(obj)
    assert restored.supercomplex == disk_flag()
    assert restored.embedding == VertexMap([0, 1, 2, 6])
    with pytest.raises(MalformedInputError):
        EmbeddingWitness.from_dict({"embedding": [0]})
    with pytest.raises(MalformedInputError):
        EmbeddingWitness.from_dict([1, 2])
