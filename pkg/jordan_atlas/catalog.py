"""Canonical realizations of simple subalgebras: layouts, validation,
normalization and the builders for matrix and spin types."""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Optional

from . import matrices as mx
from .automorphisms import theta_of
from .clifford import spin_images
from .errors import EmbeddingUnavailable, InvariantViolation, SpecInvalid
from .jordan import Subalgebra, closure_check
from .matrices import subspace_from
from .models import CanonicalSpec, Embedding, Family, Ambient, symmetric_basis, symplectic_basis

logger = logging.getLogger(__name__)

MIN_BUILD_DEGREE = 3

# how one abstract block is placed in the ambient
REPEAT = "repeat"          # diag(X, ..., Xᵗ, ..., 0)
THETA = "theta"            # diag(θ(X), ..., 0)
MIRROR = "mirror"          # [[A, 0], [0, Aᵗ]] with A = diag(X, ..., Xᵗ, ..., 0)
SPLIT = "split"            # [[X_A, X_B], [X_C, X_D]] spread over the four quadrants
SPLIT_WHOLE = "split_whole"  # |l-k| split blocks, then min(l, k) whole blocks inside A


@dataclass(frozen=True)
class Layout:
    form: str
    placement: str
    block_order: int
    used: int
    rank: int
    realization: str = "plain"
    transposes: bool = False


def _matrix_layout(spec: CanonicalSpec) -> Layout:
    ambient, t = spec.ambient, spec.type
    blocks = spec.l + spec.k
    m, b = t.m, t.block_order
    index = {Family.FULL: 1, Family.SYM: 2, Family.SYMP: 3}
    form = f"{index[ambient.family]}.{index[t.family]}"
    if ambient.family is Family.FULL:
        return Layout(form, REPEAT, b, b * blocks, b * blocks, transposes=t.family is Family.FULL)
    if ambient.family is Family.SYM:
        if t.family is Family.SYM:
            return Layout(form, REPEAT, b, b * blocks, b * blocks)
        return Layout(form, THETA, b, 2 * b * blocks, 2 * b * blocks)
    if t.family is Family.SYMP:
        return Layout(form, SPLIT_WHOLE, b, m * blocks, 2 * m * blocks, transposes=True)
    return Layout(form, MIRROR, b, b * blocks, 2 * b * blocks, transposes=t.family is Family.FULL)


def _spin_layout(spec: CanonicalSpec) -> Layout:
    ambient, d = spec.ambient, spec.type.m
    blocks = spec.l + spec.k
    m, odd = d // 2, d % 2 == 1
    b, r = 1 << m, m % 4
    if ambient.family is Family.FULL:
        if odd and m % 2 and spec.k:
            return Layout("spin 1.3", REPEAT, b, b * blocks, b * blocks, transposes=True)
        form = "spin 1.2" if odd else "spin 1.1"
        return Layout(form, REPEAT, b, b * blocks, b * blocks, transposes=odd and m % 2 == 1)
    if ambient.family is Family.SYM:
        if (not odd and r in (0, 1)) or (odd and r == 0):
            form = "spin 2.4" if odd else "spin 2.1"
            return Layout(form, REPEAT, b, b * blocks, b * blocks, realization="symmetric")
        form = "spin 2.3" if odd else "spin 2.2"
        return Layout(form, THETA, b, 2 * b * blocks, 2 * b * blocks)
    if odd and m % 2:
        return Layout("spin 3.4", MIRROR, b, b * blocks, 2 * b * blocks, transposes=True)
    if r in (0, 1):
        return Layout("spin 3.1", MIRROR, b, b * blocks, 2 * b * blocks, realization="symmetric")
    form = "spin 3.3" if odd else "spin 3.2"
    return Layout(form, SPLIT, b, (b // 2) * blocks, b * blocks, realization="symplectic")


def layout(spec: CanonicalSpec) -> Layout:
    if spec.type.is_spin:
        return _spin_layout(spec)
    return _matrix_layout(spec)


def catalog_form(spec: CanonicalSpec) -> str:
    return layout(spec).form


def spin_requirement(ambient: Ambient, d: int) -> int:
    """Smallest ambient order admitting Spin(d): 2^m, or 2^{m+1} in SymmetricH when m ≡ 2, 3 mod 4."""
    m = d // 2
    if ambient.family is Family.SYM and m % 4 in (2, 3):
        return 1 << (m + 1)
    return 1 << m


def spin_fits(ambient: Ambient, d: int) -> bool:
    return spin_requirement(ambient, d) <= ambient.order


def spin_maximality(ambient: Ambient, d: int) -> bool:
    m = d // 2
    if m < 1 or ambient.order != 1 << m:
        return False
    if ambient.family is Family.FULL:
        return d == 2 * m + 1 and m % 2 == 1
    matching = Family.SYM if m % 4 in (0, 1) else Family.SYMP
    if ambient.family is not matching:
        return False
    return (d == 2 * m + 1 and m % 2 == 0) or (d == 2 * m and m % 2 == 1)


def _spin_violations(spec: CanonicalSpec) -> list:
    d = spec.type.m
    if d < 2:
        return [f"Spin({d}) needs dim V >= 2"]
    out = []
    expected = Embedding.SECOND if d % 2 else Embedding.FIRST
    if spec.embedding is None:
        out.append("spin_embedding is required for Spin types")
    elif spec.embedding is not expected:
        parity = "odd" if spec.embedding is Embedding.SECOND else "even"
        out.append(f"an embedding of the {spec.embedding.value} type needs dim V {parity}, got {d}")
    if not spin_fits(spec.ambient, d):
        m = d // 2
        exponent = "m+1" if spin_requirement(spec.ambient, d) > 1 << m else "m"
        out.append(f"2^({exponent}) <= n fails: {spin_requirement(spec.ambient, d)} > {spec.ambient.order}")
    return out


def validate_spec(spec: CanonicalSpec, for_build: bool = False) -> list:
    """Violations of size accounting, applicability and, when building, degree."""
    t, ambient = spec.type, spec.ambient
    violations = []
    if t.is_spin:
        violations.extend(_spin_violations(spec))
        if t.m < 2:
            return violations
    else:
        if spec.embedding is not None:
            violations.append("spin_embedding only applies to Spin types")
        if for_build and t.m < MIN_BUILD_DEGREE:
            violations.append("degree < 3")
    if t.dimension >= ambient.dimension:
        violations.append(f"{t.label} is not a proper subalgebra of {ambient.label}")
    if spec.l < 0 or spec.k < 0:
        violations.append("block counts must be non-negative")
        return violations
    if spec.l + spec.k < 1:
        violations.append("at least one block is required (l + k >= 1)")
    lay = layout(spec)
    if spec.k and not lay.transposes:
        violations.append(f"form {lay.form} has no transposed blocks, k must be 0")
    if lay.used > ambient.rows:
        violations.append(f"size overflow: {lay.used} rows needed, {ambient.rows} available")
    elif spec.s is not None and spec.s != ambient.rows - lay.used:
        violations.append(f"s must be {ambient.rows - lay.used}, got {spec.s}")
    return violations


def canonicalize(spec: CanonicalSpec) -> CanonicalSpec:
    lay = layout(spec)
    l, k = spec.l, spec.k
    if lay.transposes and k > l:
        l, k = k, l
    swapped = replace(spec, l=l, k=k)
    return replace(swapped, s=spec.ambient.rows - layout(swapped).used)


def _unavailable(spec: CanonicalSpec, lay: Layout) -> Optional[str]:
    """Reason the involution type rules out the order-2^m image, if it does."""
    rows = spec.ambient.rows
    blocks = spec.l + spec.k
    if not spec.type.is_spin or lay.used <= rows:
        return None
    if lay.placement == THETA and lay.block_order * blocks <= rows:
        return (f"the reversal of C(V) has the wrong symmetry for an order-{lay.block_order} "
                f"symmetric image, and the theta form needs {lay.used} rows")
    if lay.placement == MIRROR and lay.realization == "symmetric" and (lay.block_order // 2) * blocks <= rows:
        return (f"the reversal of C(V) is symmetric, so no image fixed by j of order "
                f"{lay.block_order} exists, and the mirrored form needs {lay.used} rows")
    return None


def _raise_invalid(spec, violations, lay):
    logger.info("rejecting %s: %s", spec.to_dict(), violations)
    reason = _unavailable(spec, lay)
    if reason is not None:
        raise EmbeddingUnavailable(violations + [reason])
    raise SpecInvalid(violations)


def _type_generators(spec: CanonicalSpec, lay: Layout) -> list:
    t = spec.type
    if t.is_spin:
        return list(spin_images(t.m, lay.realization))
    m = t.m
    if t.family is Family.FULL:
        return [mx.unit(m, i, j) for i in range(m) for j in range(m)]
    if t.family is Family.SYM:
        return symmetric_basis(m)
    return symplectic_basis(m)


def _split_placements(y, offsets, rows):
    half = mx.order(y) // 2
    quadrants = [mx.submatrix(y, r, c, half) for r in (0, half) for c in (0, half)]
    out = []
    for o in offsets:
        corners = ((o, o), (o, rows + o), (rows + o, o), (rows + o, rows + o))
        out.extend(zip(corners, quadrants))
    return out


def _place(y, spec: CanonicalSpec, lay: Layout):
    ambient = spec.ambient
    n, rows = ambient.order, ambient.rows
    l, k = spec.l, spec.k
    if lay.placement == REPEAT:
        return mx.block_diagonal([y] * l + [mx.transpose(y)] * k, n)
    if lay.placement == THETA:
        return mx.block_diagonal([theta_of(y)] * (l + k), n)
    if lay.placement == MIRROR:
        a = mx.block_diagonal([y] * l + [mx.transpose(y)] * k, rows)
        return mx.block_diagonal([a, mx.transpose(a)])
    b = mx.order(y)
    if lay.placement == SPLIT:
        return mx.embed((n, n), _split_placements(y, [t * (b // 2) for t in range(l + k)], rows))
    split, whole = abs(l - k), min(l, k)
    placements = _split_placements(y, [t * (b // 2) for t in range(split)], rows)
    start = split * (b // 2)
    for t in range(whole):
        o = start + t * b
        placements.append(((o, o), y))
        placements.append(((rows + o, rows + o), mx.transpose(y)))
    return mx.embed((n, n), placements)


def _build(spec: CanonicalSpec) -> Subalgebra:
    violations = validate_spec(spec, for_build=True)
    lay = layout(spec)
    if violations:
        _raise_invalid(spec, violations, lay)
    ambient = spec.ambient
    generators = [_place(y, spec, lay) for y in _type_generators(spec, lay)]
    outside = [g for g in generators if not ambient.contains(g)]
    if outside:
        raise InvariantViolation(f"{lay.form} produced {len(outside)} matrices outside {ambient.label}")
    s = Subalgebra(ambient, subspace_from(generators, (ambient.order, ambient.order)))
    if s.dim != spec.type.dimension:
        raise InvariantViolation(f"{lay.form} spans {s.dim} dimensions, expected {spec.type.dimension}")
    if not closure_check(s):
        raise InvariantViolation(f"{lay.form} is not closed under the Jordan product")
    logger.debug("built %s in %s: dim %d", lay.form, ambient.label, s.dim)
    return s


def build_matrix_canonical(spec: CanonicalSpec) -> Subalgebra:
    if spec.type.is_spin:
        raise SpecInvalid([f"{spec.type.label} is a spin type, use the spin builder"])
    return _build(spec)


def build_spin_canonical(spec: CanonicalSpec) -> Subalgebra:
    if not spec.type.is_spin:
        raise SpecInvalid([f"{spec.type.label} is not a spin type"])
    return _build(spec)


def build(spec: CanonicalSpec) -> Subalgebra:
    if spec.type.is_spin:
        return build_spin_canonical(spec)
    return build_matrix_canonical(spec)


def rank_of_spec(spec: CanonicalSpec) -> int:
    return layout(spec).rank
