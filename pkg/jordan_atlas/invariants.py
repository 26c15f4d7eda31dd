"""Conjugacy invariants, the conjugacy test, class enumeration and the
closed-form class counts."""
from __future__ import annotations

import logging
from typing import Optional

from . import matrices as mx
from .automorphisms import AmbientAutomorphism, coordinate_swap
from .catalog import (MIRROR, canonicalize, catalog_form, layout, rank_of_spec,  # noqa: F401
                      spin_fits, spin_maximality, validate_spec)
from .errors import AmbientMismatch, EnvelopeNotSemisimple
from .jordan import Subalgebra, associative_envelope, detect_type, identity_idempotent
from .models import (Ambient, Atlas, AtlasEntry, CanonicalSpec, Discrepancy, Embedding,
                     Family, InvariantCaveat, InvariantVector, TypeLabel)
from .scalar import HALF, scalar_sqrt_if_square

logger = logging.getLogger(__name__)

_TWO_SIDED = (Family.FULL, Family.SYMP)


def k_applies(ambient: Ambient, t: TypeLabel) -> bool:
    """Whether the |l - k| invariant is defined for this (ambient, type) pair."""
    if ambient.family not in _TWO_SIDED:
        return False
    if t.is_spin:
        # second type with m odd: the odd Clifford algebra has two simple ideals
        return t.m % 2 == 1 and (t.m // 2) % 2 == 1
    return t.family in _TWO_SIDED


def k_preserved(ambient: Ambient) -> bool:
    """Whether every automorphism of the ambient keeps |l - k|.

    In SymplecticH(2n) a coordinate swap turns an X block of A into an Xᵗ
    block while keeping the identity rank, so there k_A is a label of the
    canonical form only.
    """
    return ambient.family is not Family.SYMP


def block_unit(t: TypeLabel) -> int:
    if t.is_spin:
        return 1 << (t.m // 2)
    return t.block_order


def rank_of_identity(s: Subalgebra) -> int:
    return mx.mat_rank(identity_idempotent(s))


def k_invariant_spec(spec: CanonicalSpec) -> Optional[int]:
    if not k_applies(spec.ambient, spec.type):
        return None
    return abs(spec.l - spec.k)


def _center(envelope, generators):
    """Elements of the envelope commuting with every generator."""
    basis = envelope.basis()
    block = envelope.ambient_dim
    columns = []
    for z in basis:
        column = {}
        for j, g in enumerate(generators):
            for idx, v in mx.vec(mx.mat_sub(mx.mat_mul(z, g), mx.mat_mul(g, z))).items():
                column[j * block + idx] = v
        columns.append(column)
    kernel = mx.nullspace(columns, block * len(generators))
    return [envelope.combination(c) for c in kernel]


def central_idempotents(s: Subalgebra):
    """(e1, e2) splitting the envelope, or None when it is simple."""
    e = identity_idempotent(s)
    envelope = associative_envelope(s)
    center = _center(envelope, s.basis())
    if len(center) == 1:
        return None
    if len(center) != 2:
        raise EnvelopeNotSemisimple(f"the envelope has a center of dimension {len(center)}")
    line = mx.subspace_from([e])
    z = next(c for c in center if not line.contains(c))
    # z² = αz + βe inside the two-dimensional center
    coeffs = mx.solve([mx.vec(z), mx.vec(e)], mx.vec(mx.mat_mul(z, z)), envelope.ambient_dim)
    if coeffs is None:
        raise EnvelopeNotSemisimple("the center is not closed under products")
    alpha, beta = coeffs
    root = scalar_sqrt_if_square(alpha * alpha + 4 * beta)
    if not root:
        raise EnvelopeNotSemisimple("the center does not split into two idempotents")
    t1, t2 = (alpha + root) * HALF, (alpha - root) * HALF
    e1 = mx.scale(mx.mat_sub(z, mx.scale(e, t2)), 1 / (t1 - t2))
    return e1, mx.mat_sub(e, e1)


def k_invariant_envelope(s: Subalgebra) -> Optional[int]:
    t = detect_type(s)
    if not k_applies(s.ambient, t):
        return None
    if not k_preserved(s.ambient):
        return None
    unit = block_unit(t)
    split = central_idempotents(s)
    if split is None:
        value = rank_of_identity(s)
    else:
        e1, e2 = split
        value = abs(mx.mat_rank(e1) - mx.mat_rank(e2))
    if value % unit:
        raise EnvelopeNotSemisimple(f"rank difference {value} is not a multiple of the block order {unit}")
    logger.debug("envelope k for %s: %d", t.label, value // unit)
    return value // unit


def invariant_vector(spec: CanonicalSpec) -> InvariantVector:
    return InvariantVector(spec.type, rank_of_spec(spec), k_invariant_spec(spec))


def subalgebra_invariants(s: Subalgebra) -> InvariantVector:
    return InvariantVector(detect_type(s), rank_of_identity(s), k_invariant_envelope(s))


def are_conjugate(a: CanonicalSpec, b: CanonicalSpec) -> bool:
    """Equality of invariant vectors. In SymplecticH ambients see ``conjugacy_caveat``."""
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"{a.ambient.label} and {b.ambient.label} differ")
    return a.type == b.type and invariant_vector(a) == invariant_vector(b)


def _k_reason(ambient: Ambient) -> str:
    return (f"k_A = |l - k| is not kept by the automorphisms of {ambient.label}: swapping "
            f"coordinates c and n + c exchanges X and Xᵗ blocks at equal identity rank")


def balancing_automorphism(a: CanonicalSpec, b: CanonicalSpec) -> Optional[AmbientAutomorphism]:
    """Coordinate swap carrying build(a) onto build(b).

    Defined for mirrored forms with transposed blocks (3.1 and spin 3.4) of
    the same type and block count; ``None`` otherwise.
    """
    if a.ambient != b.ambient or a.type != b.type or k_preserved(a.ambient):
        return None
    lay = layout(a)
    if lay.placement != MIRROR or not lay.transposes or a.l + a.k != b.l + b.k:
        return None
    lo, hi = sorted((a.l, b.l))
    return coordinate_swap(a.ambient, lo * lay.block_order, hi * lay.block_order)


def conjugacy_caveat(a: CanonicalSpec, b: CanonicalSpec) -> Optional[InvariantCaveat]:
    """Flag a pair that differs only in k_A inside a SymplecticH ambient."""
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"{a.ambient.label} and {b.ambient.label} differ")
    if a.type != b.type or k_preserved(a.ambient) or not k_applies(a.ambient, a.type):
        return None
    va, vb = invariant_vector(a), invariant_vector(b)
    if va.rank_e != vb.rank_e or va.k_a == vb.k_a:
        return None
    return InvariantCaveat(a.ambient, a.type, _k_reason(a.ambient), [a, b], balancing_automorphism(a, b))


def default_embedding(t: TypeLabel) -> Optional[Embedding]:
    if not t.is_spin:
        return None
    return Embedding.SECOND if t.m % 2 else Embedding.FIRST


def valid_specs(ambient: Ambient, t: TypeLabel):
    """Every valid normalized spec of this type, in (l + k, l) order."""
    embedding = default_embedding(t)
    for total in range(1, ambient.rows + 1):
        for l in range(total, -1, -1):
            spec = CanonicalSpec(ambient, t, l, total - l, embedding=embedding)
            if not validate_spec(spec):
                yield canonicalize(spec)


def enumerate_classes(ambient: Ambient, t: TypeLabel) -> Atlas:
    seen = {}
    for spec in valid_specs(ambient, t):
        vector = invariant_vector(spec)
        if vector not in seen:
            seen[vector] = AtlasEntry(spec, vector, catalog_form(spec))
    entries = sorted(seen.values(), key=lambda entry: entry.invariants.sort_key())
    logger.info("%s in %s: %d classes", t.label, ambient.label, len(entries))
    return Atlas(ambient, t, entries)


def _half_sum(k: int) -> int:
    return sum(j // 2 for j in range(1, k + 1))


def count_classes_formula(ambient: Ambient, t: TypeLabel) -> Optional[int]:
    """Printed closed-form class counts; ``None`` for spin types."""
    if t.is_spin:
        return None
    m = t.m
    if ambient.family is Family.FULL:
        n = ambient.order
        if t.family is Family.SYM:
            return n // m
        if t.family is Family.SYMP:
            return n // (2 * m)
        return _half_sum(n // m)
    if ambient.family is Family.SYM:
        n = ambient.order
        return n // {Family.SYM: m, Family.FULL: 2 * m, Family.SYMP: 4 * m}[t.family]
    h = ambient.rows
    if t.family is Family.SYM:
        return h // m
    return _half_sum(h // m)


def uses_half_sum(ambient: Ambient, t: TypeLabel) -> bool:
    """Whether the printed count of this pair is a sum of ⌊j/2⌋."""
    if t.is_spin:
        return False
    if t.family is Family.FULL:
        return ambient.family in _TWO_SIDED
    return t.family is Family.SYMP and ambient.family is Family.SYMP


def derived_class_count(ambient: Ambient, t: TypeLabel) -> Optional[int]:
    """Count the enumeration must reach.

    The printed count, except for the ⌊j/2⌋ sums: block counts l + k = j
    give ⌊j/2⌋ + 1 values of |l - k|, so the enumeration reaches
    Σ (⌊j/2⌋ + 1) there.
    """
    if not uses_half_sum(ambient, t):
        return count_classes_formula(ambient, t)
    return sum(j // 2 + 1 for j in range(1, ambient.rows // t.m + 1))


def k_caveat(ambient: Ambient, t: TypeLabel, atlas: Optional[Atlas] = None) -> Optional[InvariantCaveat]:
    """Classes of an atlas that share (type, rank_e) and differ only in k_A
    inside a SymplecticH ambient, with a joining automorphism when known."""
    if k_preserved(ambient) or not k_applies(ambient, t):
        return None
    atlas = atlas or enumerate_classes(ambient, t)
    by_rank = {}
    for entry in atlas.entries:
        by_rank.setdefault(entry.invariants.rank_e, []).append(entry.spec)
    shared = next((specs for specs in by_rank.values() if len(specs) > 1), None)
    if shared is None:
        return None
    a, b = shared[:2]
    return InvariantCaveat(ambient, t, _k_reason(ambient), [a, b], balancing_automorphism(a, b),
                           classes_by_invariants=len(atlas), classes_by_rank=len(by_rank))


def discrepancy(ambient: Ambient, t: TypeLabel, atlas: Optional[Atlas] = None) -> Optional[Discrepancy]:
    atlas = atlas or enumerate_classes(ambient, t)
    formula = count_classes_formula(ambient, t)
    if formula is None or formula == len(atlas):
        return None
    witnesses = [e.spec for e in atlas.entries]
    if formula < len(atlas):
        one_sided = [spec for spec in witnesses if spec.l * spec.k == 0]
        witnesses = one_sided or witnesses
    logger.info("class count of %s in %s: formula %d, enumerated %d",
                t.label, ambient.label, formula, len(atlas))
    return Discrepancy(ambient, t, formula, len(atlas), witnesses)
