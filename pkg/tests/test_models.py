import pytest

from jordan_atlas import matrices as mx
from jordan_atlas.errors import ParseError
from jordan_atlas.models import Ambient, CanonicalSpec, Embedding, Family, InvariantVector, TypeLabel

from conftest import full, spec, sym, symp


@pytest.mark.parametrize("ambient, dimension", [
    (full(3), 9),
    (sym(3), 6),
    (symp(4), 6),
    (symp(8), 28),
])
def test_ambient_dimension_matches_basis(ambient, dimension):
    assert ambient.dimension == dimension
    assert len(ambient.basis()) == dimension
    assert mx.subspace_from(ambient.basis()).dim == dimension
    assert all(ambient.contains(b) for b in ambient.basis())


def test_membership():
    assert not sym(2).contains(mx.unit(2, 0, 1))
    assert full(2).contains(mx.unit(2, 0, 1))
    assert not full(2).contains(mx.identity(3))
    assert symp(2).contains(mx.identity(2))
    assert not symp(2).contains(mx.unit(2, 0, 1))


def test_symplectic_needs_even_order():
    with pytest.raises(ParseError):
        Ambient(Family.SYMP, 3)


def test_spin_is_not_an_ambient():
    with pytest.raises(ParseError):
        Ambient(Family.SPIN, 4)


@pytest.mark.parametrize("label, family, m, dimension", [
    ("FullPlus(3)", Family.FULL, 3, 9),
    ("SymmetricH(4)", Family.SYM, 4, 10),
    ("SymplecticH(6)", Family.SYMP, 3, 15),
    ("Spin(5)", Family.SPIN, 5, 6),
])
def test_type_labels(label, family, m, dimension):
    t = TypeLabel.parse(label)
    assert t == TypeLabel(family, m)
    assert t.dimension == dimension
    assert t.label == label


def test_bad_type_label():
    with pytest.raises(ParseError):
        TypeLabel.parse("SymplecticH(5)")
    with pytest.raises(ParseError):
        TypeLabel.parse("Octonions(3)")


def test_spec_round_trip():
    original = spec(full(10), Family.FULL, 3, l=2, k=1)
    assert CanonicalSpec.from_dict(original.to_dict()) == original
    spin = spec(full(4), Family.SPIN, 5)
    data = spin.to_dict()
    assert data["spin_embedding"] == "second"
    assert CanonicalSpec.from_dict(data).embedding is Embedding.SECOND


@pytest.mark.parametrize("data", [
    {"type": "full", "m": 3, "l": 1},
    {"ambient": {"kind": "full", "n": 3}, "type": "quaternion", "m": 3, "l": 1},
    {"ambient": {"kind": "full", "n": 3}, "type": "full", "m": "three", "l": 1},
    {"ambient": {"kind": "full", "n": 3}, "type": "spin", "m": 4, "l": 1, "spin_embedding": "third"},
    [1, 2],
])
def test_malformed_specs(data):
    with pytest.raises(ParseError):
        CanonicalSpec.from_dict(data)


def test_invariant_vector_json():
    vector = InvariantVector(TypeLabel(Family.FULL, 3), 9, 1)
    assert vector.to_dict() == {"type": "FullPlus(3)", "rank_e": 9, "k_a": 1}
