import pytest

from jordan_atlas import matrices as mx
from jordan_atlas.catalog import (build, build_matrix_canonical, build_spin_canonical, canonicalize,
                                  catalog_form, layout, rank_of_spec, validate_spec)
from jordan_atlas.errors import EmbeddingUnavailable, SpecInvalid
from jordan_atlas.jordan import closure_check, detect_type, identity_idempotent
from jordan_atlas.models import CanonicalSpec, Embedding, Family, TypeLabel

from conftest import full, spec, sym, symp

FORMS = [
    ("1.1", spec(full(6), Family.FULL, 3, l=1, k=1)),
    ("1.2", spec(full(5), Family.SYM, 3)),
    ("1.3", spec(full(6), Family.SYMP, 3)),
    ("2.1", spec(sym(6), Family.FULL, 3)),
    ("2.2", spec(sym(4), Family.SYM, 3)),
    ("2.3", spec(sym(12), Family.SYMP, 3)),
    ("3.1", spec(symp(6), Family.FULL, 3)),
    ("3.2", spec(symp(8), Family.SYM, 3)),
    ("3.3", spec(symp(8), Family.SYMP, 3)),
    ("3.3", spec(symp(12), Family.SYMP, 3, l=1, k=1)),
    ("spin 1.1", spec(full(4), Family.SPIN, 4)),
    ("spin 1.2", spec(full(4), Family.SPIN, 5)),
    ("spin 1.3", spec(full(4), Family.SPIN, 3, l=1, k=1)),
    ("spin 2.1", spec(sym(4), Family.SPIN, 2)),
    ("spin 2.2", spec(sym(8), Family.SPIN, 4)),
    ("spin 2.3", spec(sym(4), Family.SPIN, 3)),
    ("spin 3.1", spec(symp(4), Family.SPIN, 2)),
    ("spin 3.2", spec(symp(4), Family.SPIN, 4)),
    ("spin 3.3", spec(symp(8), Family.SPIN, 5)),
    ("spin 3.4", spec(symp(4), Family.SPIN, 3)),
    ("spin 3.4", spec(symp(8), Family.SPIN, 3, l=1, k=1)),
]


@pytest.mark.parametrize("form, s_spec", FORMS, ids=[f"{f} {s.ambient.label}" for f, s in FORMS])
def test_canonical_forms(form, s_spec):
    assert validate_spec(s_spec, for_build=True) == []
    assert catalog_form(s_spec) == form
    s = build(s_spec)
    assert s.dim == s_spec.type.dimension
    assert all(s_spec.ambient.contains(b) for b in s.basis())
    assert closure_check(s)
    assert detect_type(s) == s_spec.type
    assert mx.mat_rank(identity_idempotent(s)) == rank_of_spec(s_spec)


def test_symmetric_block_in_symmetric_ambient():
    s = build(spec(sym(4), Family.SYM, 3))
    assert s.dim == 6
    assert all(mx.is_zero(mx.submatrix(b, 3, 0, 1, 4)) for b in s.basis())


def test_block_and_transpose():
    s = build(spec(full(6), Family.FULL, 3, l=1, k=1))
    x = mx.matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert s.span.contains(mx.block_diagonal([x, mx.transpose(x)]))
    assert not s.span.contains(mx.block_diagonal([x, x]))


def test_gammas_span_spin_four():
    s = build(spec(full(4), Family.SPIN, 4))
    assert s.dim == 5
    assert s.span.contains(mx.identity(4))


@pytest.mark.parametrize("s_spec", [
    spec(full(7), Family.SYM, 2, l=3),
    spec(sym(8), Family.SPIN, 4),
    spec(sym(9), Family.FULL, 2, l=2),
])
def test_symbolically_valid(s_spec):
    assert validate_spec(s_spec) == []


def test_size_overflow():
    violations = validate_spec(spec(full(5), Family.FULL, 3, l=1, k=1))
    assert any("size overflow" in v for v in violations)


def test_transposes_need_a_transposing_form():
    violations = validate_spec(spec(full(6), Family.SYM, 3, l=1, k=1))
    assert violations == ["form 1.2 has no transposed blocks, k must be 0"]


def test_explicit_s_must_match():
    given = CanonicalSpec(full(5), TypeLabel(Family.SYM, 3), 1, 0, s=1)
    assert validate_spec(given) == ["s must be 2, got 1"]
    assert validate_spec(CanonicalSpec(full(5), TypeLabel(Family.SYM, 3), 1, 0, s=2)) == []


def test_no_blocks():
    assert "at least one block is required (l + k >= 1)" in validate_spec(spec(full(5), Family.SYM, 3, l=0))


def test_whole_ambient_is_not_proper():
    violations = validate_spec(spec(full(3), Family.FULL, 3))
    assert "FullPlus(3) is not a proper subalgebra of FullPlus(3)" in violations


def test_spin_embedding_rules():
    missing = CanonicalSpec(full(4), TypeLabel(Family.SPIN, 4), 1)
    assert "spin_embedding is required for Spin types" in validate_spec(missing)
    wrong = spec(full(4), Family.SPIN, 4, embedding=Embedding.SECOND)
    assert any("needs dim V odd" in v for v in validate_spec(wrong))
    matrix = spec(full(5), Family.SYM, 3, embedding=Embedding.FIRST)
    assert "spin_embedding only applies to Spin types" in validate_spec(matrix)


def test_spin_inequality_is_named():
    violations = validate_spec(spec(sym(7), Family.SPIN, 4))
    assert "2^(m+1) <= n fails: 8 > 7" in violations


def test_degree_rule_applies_to_builds_only():
    small = spec(full(7), Family.SYM, 2, l=3)
    assert validate_spec(small) == []
    assert "degree < 3" in validate_spec(small, for_build=True)
    with pytest.raises(SpecInvalid) as raised:
        build(spec(symp(4), Family.SYMP, 2))
    assert "degree < 3" in raised.value.violations


def test_embedding_unavailable():
    with pytest.raises(EmbeddingUnavailable) as raised:
        build(spec(sym(4), Family.SPIN, 4))
    assert isinstance(raised.value, SpecInvalid)
    assert any("reversal" in v for v in raised.value.violations)


def test_plain_overflow_is_not_unavailable():
    with pytest.raises(SpecInvalid) as raised:
        build(spec(full(5), Family.FULL, 3, l=1, k=1))
    assert not isinstance(raised.value, EmbeddingUnavailable)


def test_builders_check_the_type_kind():
    with pytest.raises(SpecInvalid):
        build_matrix_canonical(spec(full(4), Family.SPIN, 4))
    with pytest.raises(SpecInvalid):
        build_spin_canonical(spec(full(5), Family.SYM, 3))


@pytest.mark.parametrize("given, expected", [
    (spec(full(9), Family.FULL, 3, l=1, k=2), (2, 1, 0)),
    (spec(sym(7), Family.SYM, 3, l=2), (2, 0, 1)),
    (spec(symp(18), Family.FULL, 3, l=0, k=3), (3, 0, 0)),
    (spec(full(8), Family.SPIN, 3, l=1, k=3), (3, 1, 0)),
])
def test_canonicalize(given, expected):
    result = canonicalize(given)
    assert (result.l, result.k, result.s) == expected
    assert canonicalize(result) == result


@pytest.mark.parametrize("s_spec, rank", [
    (spec(full(5), Family.SYM, 3), 3),
    (spec(full(7), Family.FULL, 3, l=1, k=1), 6),
    (spec(symp(8), Family.SYM, 3), 6),
    (spec(symp(12), Family.SYMP, 3, l=2), 12),
    (spec(sym(12), Family.SYMP, 3), 12),
])
def test_rank_of_spec(s_spec, rank):
    assert rank_of_spec(s_spec) == rank


def test_split_layout_accounting():
    lay = layout(spec(symp(12), Family.SYMP, 3, l=1, k=1))
    assert (lay.used, lay.rank, lay.transposes) == (6, 12, True)
