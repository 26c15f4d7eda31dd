import pytest

from jordan_atlas import matrices as mx
from jordan_atlas.automorphisms import theta_conjugator
from jordan_atlas.errors import ShapeError, SingularMatrix
from jordan_atlas.scalar import I, gaussian


def test_identity_is_neutral(random_matrix):
    x = random_matrix(3)
    assert mx.mat_mul(mx.identity(3), x) == x
    assert mx.mat_mul(x, mx.identity(3)) == x


def test_elementary_products():
    assert mx.mat_mul(mx.unit(2, 0, 0), mx.unit(2, 0, 1)) == mx.unit(2, 0, 1)
    assert mx.is_zero(mx.mat_mul(mx.unit(2, 0, 1), mx.unit(2, 0, 1)))


def test_conjugator_inverse():
    s = theta_conjugator(2)
    assert mx.mat_mul(s, mx.mat_inverse(s)) == mx.identity(4)


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        mx.mat_mul(mx.zeros(2, 3), mx.zeros(2, 3))
    with pytest.raises(ShapeError):
        mx.mat_add(mx.zeros(2), mx.zeros(3))


def test_singular_inverse():
    with pytest.raises(SingularMatrix):
        mx.mat_inverse(mx.unit(2, 0, 0))


@pytest.mark.parametrize("a, rank", [
    (mx.zeros(3), 0),
    (mx.matrix([[1, 0, 0], [0, 1, 0], [0, 0, 0]]), 2),
    (mx.block_diagonal([mx.identity(3)], 5), 3),
    (mx.matrix([[1, I], [I, -1]]), 1),
])
def test_rank(a, rank):
    assert mx.mat_rank(a) == rank


def test_symplectic_transpose_fixes_identity():
    assert mx.symplectic_transpose(mx.identity(4)) == mx.identity(4)


def test_symplectic_transpose_of_nilpotent():
    x = mx.matrix([[0, 1], [0, 0]])
    assert mx.symplectic_transpose(x) == mx.neg(x)


def test_symplectic_transpose_fixes_form_one_blocks(random_matrix):
    a = random_matrix(2)
    b = mx.matrix([[0, 3], [-3, 0]])
    c = mx.matrix([[0, gaussian(1, 1)], [gaussian(-1, -1), 0]])
    x = mx.assemble([[a, b], [c, mx.transpose(a)]])
    assert mx.symplectic_transpose(x) == x


def test_symplectic_transpose_needs_even_order():
    with pytest.raises(ShapeError):
        mx.symplectic_transpose(mx.identity(3))


def test_subspace_spans():
    x = mx.matrix([[1, 2], [3, 4]])
    assert mx.subspace_from([x, mx.scale(x, 2)]).dim == 1
    e11, e22 = mx.unit(2, 0, 0), mx.unit(2, 1, 1)
    assert mx.subspace_from([e11, e22, mx.mat_add(e11, e22)]).dim == 2


def test_form_one_span_at_order_four():
    # [[A, B], [-B, A]] with A symmetric and B skew, both of order 2
    generators = []
    for a in (mx.unit(2, 0, 0), mx.unit(2, 1, 1), mx.matrix([[0, 1], [1, 0]])):
        generators.append(mx.assemble([[a, mx.zeros(2)], [mx.zeros(2), a]]))
    b = mx.matrix([[0, 1], [-1, 0]])
    generators.append(mx.assemble([[mx.zeros(2), b], [mx.neg(b), mx.zeros(2)]]))
    assert mx.subspace_from(generators).dim == 4


def test_subspace_membership_and_coordinates():
    e11, e12 = mx.unit(2, 0, 0), mx.unit(2, 0, 1)
    space = mx.subspace_from([e11, e12])
    x = mx.mat_add(mx.scale(e11, 3), mx.scale(e12, I))
    assert space.contains(x)
    assert not space.contains(mx.unit(2, 1, 0))
    assert space.combination(space.coordinates(x)) == x


def test_equal_spans_compare_equal():
    e11, e22 = mx.unit(2, 0, 0), mx.unit(2, 1, 1)
    a = mx.subspace_from([e11, e22])
    b = mx.subspace_from([mx.mat_add(e11, e22), mx.mat_sub(e11, e22)])
    assert a == b


def test_solve_and_nullspace():
    columns = [{0: gaussian(1)}, {1: gaussian(1)}, {0: gaussian(1), 1: gaussian(1)}]
    assert mx.solve(columns, {0: gaussian(2), 1: gaussian(3)}, 2) == [gaussian(2), gaussian(3), gaussian(0)]
    assert mx.solve(columns[:1], {1: gaussian(1)}, 2) is None
    kernel = mx.nullspace(columns, 2)
    assert kernel == [[gaussian(1), gaussian(1), gaussian(-1)]]


def test_block_helpers():
    x = mx.matrix([[1, 2], [3, 4]])
    d = mx.block_diagonal([x, mx.transpose(x)], 5)
    assert mx.submatrix(d, 2, 2, 2) == mx.transpose(x)
    assert mx.is_zero(mx.submatrix(d, 4, 0, 1, 5))
    with pytest.raises(ShapeError):
        mx.block_diagonal([x, x], 3)


def test_kron_order():
    assert mx.kron(mx.identity(2), mx.unit(2, 0, 1)) == mx.block_diagonal([mx.unit(2, 0, 1)] * 2)
