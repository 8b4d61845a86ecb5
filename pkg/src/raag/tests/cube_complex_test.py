import pytest

from raag.complexes.fixtures import (
    cycle,
    discrete,
    rp2_flag,
    simplex,
    simplex_boundary,
)
from raag.errors import MalformedInputError, NotFlagError, PreconditionError
from raag.homology.homology import homology_Z
from raag.models.cube_complex import FiniteQuotientSpec, finite_cover, salvetti_complex


def cover_betti(complex_, k):
    cover = finite_cover(complex_, FiniteQuotientSpec.congruence(complex_, k))
    summary = homology_Z(cover.chain_complex())
    return tuple(summary.betti_q(d) for d in range(cover.dimension + 1))


def test_salvetti_counts():
    assert salvetti_complex(discrete(1)).cell_counts() == (1, 1)
    assert salvetti_complex(simplex(1)).cell_counts() == (1, 2, 1)
    assert salvetti_complex(cycle(4)).cell_counts() == (1, 4, 4)


def test_salvetti_boundaries_vanish():
    salvetti = salvetti_complex(cycle(4))
    assert all(matrix.is_zero() for matrix in salvetti.boundaries.values())
    summary = homology_Z(salvetti.chain_complex())
    assert [summary.betti_q(d) for d in range(3)] == [1, 4, 4]


def test_needs_flag():
    with pytest.raises(NotFlagError):
        salvetti_complex(simplex_boundary(2))
    with pytest.raises(NotFlagError):
        finite_cover(cycle(3), FiniteQuotientSpec.congruence(cycle(3), 2))


def test_cover_of_free_group():
    cover = finite_cover(discrete(2), FiniteQuotientSpec.congruence(discrete(2), 3))
    assert cover.order == 9
    assert cover.cell_counts() == (9, 18)
    assert cover_betti(discrete(2), 3) == (1, 10)


def test_cover_of_torus():
    assert cover_betti(simplex(1), 3) == (1, 2, 1)


def test_trivial_quotient():
    cover = finite_cover(cycle(4), FiniteQuotientSpec.trivial(cycle(4)))
    assert cover.cell_counts() == salvetti_complex(cycle(4)).cell_counts()
    assert cover.spec.describe() == "1"


def test_boundary_squares_to_zero():
    spec = FiniteQuotientSpec.congruence(cycle(5), 3)
    assert finite_cover(cycle(5), spec).chain_complex().check()

    base = rp2_flag()
    spec = FiniteQuotientSpec((2,), {v: (1,) for v in base.vertices})
    cover = finite_cover(base, spec)
    assert cover.order == 2
    assert cover.chain_complex().check()


def test_euler_characteristic_is_multiplicative():
    for k in (2, 3):
        cover = finite_cover(cycle(4), FiniteQuotientSpec.congruence(cycle(4), k))
        salvetti = salvetti_complex(cycle(4))
        assert cover.euler_characteristic() == k**4 * salvetti.euler_characteristic()


def test_cell_counts_scale_with_index():
    small = finite_cover(cycle(4), FiniteQuotientSpec.congruence(cycle(4), 2))
    large = finite_cover(cycle(4), FiniteQuotientSpec.congruence(cycle(4), 4))
    for a, b in zip(small.cell_counts(), large.cell_counts()):
        assert b == 16 * a


def test_cell_index():
    cover = finite_cover(simplex(1), FiniteQuotientSpec.congruence(simplex(1), 2))
    cells = cover.cells(1)
    for position, (q, sigma) in enumerate(cells):
        assert cover.cell_index(q, sigma) == position
    assert cells[0] == ((0, 0), (0,))


def test_deck_group_is_generated_subgroup():
    spec = FiniteQuotientSpec((4,), {0: (2,), 1: (2,)})
    assert spec.deck_group() == ((0,), (2,))
    assert spec.subgroup([]) == ((0,),)
    assert finite_cover(discrete(2), spec).order == 2


def test_spec_errors():
    with pytest.raises(PreconditionError):
        FiniteQuotientSpec((0,), {0: (0,)})
    with pytest.raises(MalformedInputError):
        FiniteQuotientSpec((2, 2), {0: (1,)})
    spec = FiniteQuotientSpec((2,), {0: (1,), 5: (1,)})
    with pytest.raises(PreconditionError):
        spec.validate_for(discrete(2))
    with pytest.raises(PreconditionError):
        FiniteQuotientSpec((2,), {0: (1,)}).validate_for(discrete(2))
    with pytest.raises(MalformedInputError):
        FiniteQuotientSpec.from_json_obj({"moduli": [2]})


def test_spec_json():
    spec = FiniteQuotientSpec((2, 3), {0: (1, 4), 1: (0, 1)})
    assert spec.images[0] == (1, 1)
    obj = spec.to_json_obj()
    assert obj == {"moduli": [2, 3], "images": {"0": [1, 1], "1": [0, 1]}}
    restored = FiniteQuotientSpec.from_json_obj(obj)
    assert restored.images == spec.images
    assert restored.describe() == "2x3"


def test_summary():
    cover = finite_cover(discrete(2), FiniteQuotientSpec.congruence(discrete(2), 2))
    assert cover.summary() == {
        "base": "discrete(2)",
        "moduli": [2, 2],
        "deck_group_order": 4,
        "cell_counts": [4, 8],
        "euler_characteristic": -4,
    }
