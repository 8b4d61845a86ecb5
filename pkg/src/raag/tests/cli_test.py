import json
import os

import pytest

from raag import cli
from raag.classifier.witness import EmbeddingWitness
from raag.complexes.fixtures import cycle, discrete, octahedron
from raag.complexes.io import complex_from_dict, read_complex, write_complex
from raag.complexes.simplicial_complex import VertexMap
from raag.models.cube_complex import FiniteQuotientSpec
from raag.tests.complex_mocks import annulus_witness


def write_json(tmp_path, name, obj):
    path = os.path.join(tmp_path, name)
    with open(path, "wt") as f:
        json.dump(obj, f)
    return path


def write_factors(tmp_path):
    first = os.path.join(tmp_path, "c4.json")
    second = os.path.join(tmp_path, "s0.json")
    write_complex(cycle(4), first)
    write_complex(discrete(2), second)
    return first, second


def test_build_fixture(capsys):
    assert cli.main(["build", "--fixture", "cycle", "--n", "5"]) == 0
    captured = capsys.readouterr()
    assert complex_from_dict(json.loads(captured.out)) == cycle(5)
    assert "f-vector [5, 5], flag" in captured.err


def test_build_transforms_to_file(tmp_path, capsys):
    path = os.path.join(tmp_path, "cone_sd_rp2.json")
    args = ["build", "--fixture", "rp2_6", "--sd", "--cone", "--output", path]
    assert cli.main(args) == 0
    assert read_complex(path).f_vector() == (32, 121, 150, 60)
    assert "flag" in capsys.readouterr().out


def test_transform_order_matters(tmp_path):
    sd_then_cone = os.path.join(tmp_path, "a.json")
    cone_then_sd = os.path.join(tmp_path, "b.json")
    edge = ["build", "--fixture", "path", "--n", "2"]
    cli.main(edge + ["--sd", "--cone", "--output", sd_then_cone])
    cli.main(edge + ["--cone", "--sd", "--output", cone_then_sd])
    assert read_complex(sd_then_cone).f_vector() == (4, 5, 2)
    assert read_complex(cone_then_sd).f_vector() == (7, 12, 6)


def test_build_reports_non_flag(capsys):
    cli.main(["build", "--fixture", "cycle", "--n", "3"])
    assert "not flag, missing simplex [0, 1, 2]" in capsys.readouterr().err


def test_flag_completion_notice(capsys):
    cli.main(["build", "--fixture", "cycle", "--n", "3", "--flag-complete"])
    captured = capsys.readouterr()
    assert "NOTICE" in captured.err
    assert json.loads(captured.out)["facets"] == [[0, 1, 2]]


def test_build_join(tmp_path, capsys):
    first, second = write_factors(tmp_path)
    assert cli.main(["build", "--join", first, second]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert len(obj["join_factors"]) == 2
    assert complex_from_dict(obj).f_vector() == (6, 12, 8)


def test_build_quotient(tmp_path, capsys):
    path = write_json(tmp_path, "map.json", [0, 1, 2, 0, 1, 2])
    args = ["build", "--fixture", "cycle", "--n", "6", "--quotient", path]
    assert cli.main(args) == 0
    assert complex_from_dict(json.loads(capsys.readouterr().out)) == cycle(3)


def test_degenerate_quotient(tmp_path, capsys):
    path = write_json(tmp_path, "map.json", [0, 0, 1, 2])
    args = ["build", "--fixture", "cycle", "--n", "4", "--quotient", path]
    assert cli.main(args) == 13


def test_missing_source(capsys):
    assert cli.main(["build"]) == 10
    assert "error:" in capsys.readouterr().err


def test_missing_parameter(capsys):
    assert cli.main(["build", "--fixture", "cycle"]) == 11
    assert "--n" in capsys.readouterr().err
    assert cli.main(["build", "--fixture", "moore", "--n", "3"]) == 11


def test_unknown_fixture(capsys):
    assert cli.main(["classify", "--fixture", "klein"]) == 16
    assert "Unknown fixture 'klein'" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["shrink", "--fixture", "path", "--n", "3"],
        ["growth", "--fixture", "cycle", "--n", "4", "--moduli", "2,x"],
        ["growth", "--fixture", "cycle", "--n", "4", "--field", "R"],
        ["homology", "--fixture", "path", "--n", "3", "--primes", "two"],
    ],
)
def test_usage_errors(argv, capsys):
    assert cli.main(argv) == 10
    assert "error:" in capsys.readouterr().err


def test_missing_files(tmp_path, capsys):
    missing = os.path.join(tmp_path, "nope.json")
    assert cli.main(["classify", "--input", missing]) == 10
    assert "nope.json" in capsys.readouterr().err
    base = ["classify", "--fixture", "cycle", "--n", "5"]
    assert cli.main(base + ["--witness", missing]) == 10
    assert cli.main(base + ["--quotient", missing]) == 10
    growth = ["growth", "--fixture", "discrete", "--n", "2", "--specs", missing]
    assert cli.main(growth) == 10


def test_input_not_utf8(tmp_path, capsys):
    path = os.path.join(tmp_path, "latin1.json")
    with open(path, "wb") as f:
        f.write(b'{"vertices": 2, "name": "\xe9t\xe9"}')
    assert cli.main(["classify", "--input", path]) == 10
    assert "UTF-8" in capsys.readouterr().err


def test_bad_input_file(tmp_path, capsys):
    path = write_json(tmp_path, "bad.json", {"vertices": 2})
    assert cli.main(["homology", "--input", path]) == 10


def test_homology(capsys):
    assert cli.main(["homology", "--fixture", "rp2_6", "--primes", "2,3"]) == 0
    out = capsys.readouterr().out
    assert "rp2_6, f-vector [6, 15, 10]" in out
    assert "Z/2" in out
    assert "b(F_2)=1" in out
    assert "UCT check: consistent" in out


def test_homology_to_file(tmp_path, capsys):
    path = os.path.join(tmp_path, "h.json")
    args = ["homology", "--fixture", "moore", "--q", "3", "--reduced"]
    args += ["--output", path]
    assert cli.main(args) == 0
    with open(path, "rt") as f:
        obj = json.load(f)
    assert obj["reduced"] is True
    assert obj["uct_consistent"] is True
    assert "H~_1" in capsys.readouterr().out


def test_dump_matrices(tmp_path, capsys):
    path = os.path.join(tmp_path, "boundaries.txt")
    args = ["homology", "--fixture", "cycle", "--n", "3", "--dump-matrices", path]
    assert cli.main(args) == 0
    with open(path, "rt") as f:
        lines = f.read().splitlines()
    assert lines[0] == "1 3 3"
    assert len(lines) == 7


def test_homology_of_big_join(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(cli, "kunneth_cell_limit", 0)
    first, second = write_factors(tmp_path)
    assert cli.main(["homology", "--join", first, second, "--primes", "2"]) == 0
    out = capsys.readouterr().out
    assert "f-vector [6, 12, 8]" in out
    assert "UCT check: consistent" in out

    path = os.path.join(tmp_path, "boundaries.txt")
    args = ["homology", "--join", first, second, "--dump-matrices", path]
    assert cli.main(args) == 11


def test_bad_prime(capsys):
    args = ["homology", "--fixture", "cycle", "--n", "4", "--primes", "4"]
    assert cli.main(args) == 11


def test_classify(tmp_path, capsys):
    path = os.path.join(tmp_path, "report.json")
    args = ["classify", "--fixture", "cycle", "--n", "5", "--output", path]
    assert cli.main(args) == 0
    assert "PositiveEntropy" in capsys.readouterr().out
    with open(path, "rt") as f:
        rep = json.load(f)
    assert rep["verdict"]["certificate"]["kind"] == "TopCohomologyNonzero"
    assert rep["certificate_replay"] == "verified"


def test_classify_undetermined(capsys):
    args = ["classify", "--fixture", "annulus", "--n", "6", "--budget", "1"]
    assert cli.main(args) == 3
    assert "Undetermined" in capsys.readouterr().out


def test_classify_with_witness(tmp_path, capsys):
    path = write_json(tmp_path, "witness.json", annulus_witness(6).to_dict())
    args = ["classify", "--fixture", "annulus", "--n", "6", "--witness", path]
    assert cli.main(args) == 0
    assert "EmbeddingWitness" in capsys.readouterr().out


def test_classify_rejects_witness(tmp_path, capsys):
    witness = EmbeddingWitness(octahedron(), VertexMap([0, 1, 2, 3, 4, 5, 0, 0]))
    path = write_json(tmp_path, "witness.json", witness.to_dict())
    args = ["classify", "--fixture", "disk_flag", "--witness", path]
    assert cli.main(args) == 15


def test_classify_not_flag(capsys):
    assert cli.main(["classify", "--fixture", "rp2_6"]) == 12


def test_growth(capsys):
    args = ["growth", "--fixture", "discrete", "--n", "2", "--moduli", "2,3,4,5"]
    assert cli.main(args) == 0
    captured = capsys.readouterr()
    rows = captured.out.splitlines()
    assert rows[0].startswith("modulus_vector,index")
    assert "5x5,25,1,26,26,25,1" in rows
    assert "EXACT" in captured.err


def test_growth_over_rationals(tmp_path, capsys):
    path = os.path.join(tmp_path, "growth.csv")
    args = ["growth", "--fixture", "cycle", "--n", "4", "--field", "Q"]
    args += ["--output", path]
    assert cli.main(args) == 0
    with open(path, "rt") as f:
        assert "2x2x2x2,16,2,25,25,16,1" in f.read().splitlines()
    assert "Growth of Q homology" in capsys.readouterr().out


def test_growth_specs(tmp_path, capsys):
    spec = FiniteQuotientSpec((3,), {0: (1,), 1: (2,)})
    path = write_json(tmp_path, "specs.json", [spec.to_json_obj()])
    args = ["growth", "--fixture", "discrete", "--n", "2", "--specs", path]
    assert cli.main(args) == 0
    assert "3,3,1,4,4,3,1" in capsys.readouterr().out.splitlines()


def test_growth_errors(tmp_path, capsys):
    base = ["growth", "--fixture", "discrete", "--n", "2"]
    assert cli.main(base + ["--moduli", "3,2"]) == 11
    assert cli.main(base + ["--moduli", "0,2"]) == 11
    assert cli.main(base + ["--prime", "6"]) == 11
    path = write_json(tmp_path, "specs.json", {"moduli": [2]})
    assert cli.main(base + ["--specs", path]) == 10


def test_growth_dump_covers(tmp_path, capsys):
    path = os.path.join(tmp_path, "covers.json")
    args = ["growth", "--fixture", "discrete", "--n", "2", "--moduli", "2,3"]
    assert cli.main(args + ["--dump-covers", path]) == 0
    with open(path, "rt") as f:
        covers = json.load(f)
    assert [c["deck_group_order"] for c in covers] == [4, 9]
    assert covers[0]["cell_counts"] == [4, 8]
    assert covers[1]["euler_characteristic"] == -9
    assert all(c["base"] == "discrete(2)" for c in covers)
