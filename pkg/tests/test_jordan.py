import pytest

from jordan_atlas import matrices as mx
from jordan_atlas.catalog import build
from jordan_atlas.clifford import gamma_rep
from jordan_atlas.errors import NotInAmbient, Unrecognized
from jordan_atlas.jordan import (Subalgebra, associative_envelope, closure_check, detect_type,
                                 identity_idempotent, jordan_degree, jordan_product)
from jordan_atlas.models import Family, TypeLabel
from jordan_atlas.scalar import HALF

from conftest import full, spec, sym, symp


def test_product_with_identity(random_matrix):
    x = random_matrix(3)
    assert jordan_product(mx.identity(3), x) == x


def test_product_of_units():
    assert jordan_product(mx.unit(2, 0, 0), mx.unit(2, 0, 1)) == mx.scale(mx.unit(2, 0, 1), HALF)
    e11 = mx.unit(2, 0, 0)
    assert jordan_product(e11, e11) == e11


def test_product_is_commutative(random_matrix):
    x, y = random_matrix(3, 1), random_matrix(3, 2)
    assert jordan_product(x, y) == jordan_product(y, x)


def test_closure():
    assert closure_check(build(spec(full(4), Family.SYM, 3)))
    off = Subalgebra.from_generators(full(2), [mx.unit(2, 0, 1), mx.unit(2, 1, 0)])
    assert not closure_check(off)
    whole = Subalgebra.from_generators(symp(4), symp(4).basis())
    assert closure_check(whole)


def test_generators_outside_the_ambient():
    with pytest.raises(NotInAmbient):
        Subalgebra.from_generators(sym(2), [mx.unit(2, 0, 1)])


def test_envelope_of_form_one():
    s = Subalgebra.from_generators(sym(4), [
        mx.assemble([[a, mx.zeros(2)], [mx.zeros(2), a]])
        for a in (mx.unit(2, 0, 0), mx.unit(2, 1, 1), mx.matrix([[0, 1], [1, 0]]))
    ] + [mx.assemble([[mx.zeros(2), b], [mx.neg(b), mx.zeros(2)]]) for b in (mx.matrix([[0, 1], [-1, 0]]),)])
    assert s.dim == 4
    assert associative_envelope(s).dim == 8
    assert identity_idempotent(s) == mx.identity(4)


@pytest.mark.parametrize("l, k, envelope_dim", [(1, 1, 18), (2, 0, 9)])
def test_envelope_of_repeated_blocks(l, k, envelope_dim):
    s = build(spec(full(6), Family.FULL, 3, l=l, k=k))
    assert associative_envelope(s).dim == envelope_dim


def test_identity_idempotents():
    whole = Subalgebra.from_generators(sym(3), sym(3).basis())
    assert identity_idempotent(whole) == mx.identity(3)
    s = build(spec(full(5), Family.SYM, 3))
    assert identity_idempotent(s) == mx.block_diagonal([mx.identity(3)], 5)


def test_identity_of_symbolic_degree_two_block():
    s = Subalgebra.from_generators(full(5), [mx.block_diagonal([b], 5) for b in sym(2).basis()])
    assert identity_idempotent(s) == mx.block_diagonal([mx.identity(2)], 5)


@pytest.mark.parametrize("s_spec, label", [
    (spec(sym(4), Family.SYM, 3), "SymmetricH(3)"),
    (spec(sym(6), Family.FULL, 3), "FullPlus(3)"),
    (spec(full(6), Family.SYMP, 3), "SymplecticH(6)"),
    (spec(symp(6), Family.FULL, 3), "FullPlus(3)"),
    (spec(full(5), Family.SYM, 5), "SymmetricH(5)"),
])
def test_detect_type(s_spec, label):
    s = build(s_spec)
    assert detect_type(s).label == label


def test_detect_spin_from_gammas():
    rep = gamma_rep(2)
    s = Subalgebra.from_generators(full(4), [mx.identity(4), *rep.gammas])
    assert detect_type(s) == TypeLabel(Family.SPIN, 4)


def test_degree_separates_equal_dimensions():
    # SymplecticH(6) and SymmetricH(5) both have dimension 15
    s = build(spec(full(6), Family.SYMP, 3))
    assert jordan_degree(s, identity_idempotent(s)) == 3
    t = build(spec(full(5), Family.SYM, 5))
    assert jordan_degree(t, identity_idempotent(t)) == 5


def test_unrecognized_subalgebra():
    diagonal = Subalgebra.from_generators(full(3), [mx.unit(3, 0, 0), mx.unit(3, 1, 1)])
    with pytest.raises(Unrecognized):
        detect_type(diagonal)


def test_subalgebra_json_round_trip():
    s = build(spec(sym(4), Family.SYM, 3))
    assert Subalgebra.from_dict(s.to_dict()) == s


@pytest.mark.parametrize("s_spec, degree", [
    (spec(full(7), Family.FULL, 3, l=1, k=1), 3),
    (spec(symp(12), Family.FULL, 3, l=2), 3),
    (spec(symp(12), Family.SYMP, 3, l=1, k=1), 3),
    (spec(sym(12), Family.SYMP, 3), 3),
])
def test_jordan_degree_of_block_forms(s_spec, degree):
    s = build(s_spec)
    assert jordan_degree(s, identity_idempotent(s)) == degree
    assert detect_type(s) == s_spec.type
