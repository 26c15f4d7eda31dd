"""Automorphisms of the ambient algebras, held concretely as (kind, q)."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from enum import Enum

from . import codec
from . import matrices as mx
from .errors import (AmbientMismatch, DegenerateSeed, InvariantViolation, NotSkew,
                     NotSymmetric, ParseError, ShapeError, SingularMatrix, UnsupportedAmbient)
from .jordan import Subalgebra
from .matrices import subspace_from
from .models import Ambient, Family
from .scalar import HALF, I, gaussian, scalar_sqrt_if_square

logger = logging.getLogger(__name__)

MAX_SEED_ATTEMPTS = 32
# entries of random generators are drawn from this set, zero-heavy to keep q sparse
_ENTRY_CHOICES = (0, 0, 0, 1, -1, 2, -2)


class AutomorphismKind(str, Enum):
    CONJUGATION = "conjugation"
    CONJUGATION_WITH_TRANSPOSE = "conjugation_with_transpose"


@dataclass(frozen=True)
class AmbientAutomorphism:
    """x ↦ q⁻¹xq, or x ↦ q⁻¹xᵗq for the transpose kind."""

    ambient: Ambient
    kind: AutomorphismKind
    q: object
    q_inverse: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.q.shape != (self.ambient.order, self.ambient.order):
            raise ShapeError(f"q of shape {self.q.shape} does not act on {self.ambient.label}")
        object.__setattr__(self, "q_inverse", mx.mat_inverse(self.q))

    def __call__(self, x):
        if self.kind is AutomorphismKind.CONJUGATION_WITH_TRANSPOSE:
            x = mx.transpose(x)
        return mx.mat_mul(mx.mat_mul(self.q_inverse, x), self.q)

    def to_dict(self) -> dict:
        return {"ambient": self.ambient.to_dict(), "kind": self.kind.value,
                "q": codec.matrix_to_json(self.q)}

    @classmethod
    def from_dict(cls, data) -> "AmbientAutomorphism":
        try:
            phi = cls(Ambient.from_dict(data["ambient"]), AutomorphismKind(data["kind"]),
                      codec.matrix_from_json(data["q"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed automorphism: {e}") from e
        except SingularMatrix as e:
            raise ParseError(f"q is not invertible: {e}") from e
        if not preserves_ambient(phi):
            raise ParseError(f"q does not preserve {phi.ambient.label}")
        return phi


def preserves_ambient(phi: AmbientAutomorphism) -> bool:
    return all(phi.ambient.contains(phi(b)) for b in phi.ambient.basis())


def _checked(phi: AmbientAutomorphism) -> AmbientAutomorphism:
    if not preserves_ambient(phi):
        raise InvariantViolation(f"constructed map leaves {phi.ambient.label}")
    return phi


def theta_embed(a, b):
    """θ(A + iB) = [[A, B], [-B, A]] for A symmetric and B skew."""
    n = mx.order(a)
    if b.shape != (n, n):
        raise ShapeError(f"theta needs equal orders, got {a.shape} and {b.shape}")
    if not mx.is_symmetric(a):
        raise NotSymmetric("the first argument of theta must be symmetric")
    if not mx.is_skew(b):
        raise NotSkew("the second argument of theta must be skew-symmetric")
    return mx.assemble([[a, b], [mx.neg(b), a]])


def theta_of(y):
    """θ of an arbitrary matrix, split as y = A + iB with A = (y+yᵗ)/2."""
    return theta_embed(mx.symmetric_part(y), mx.scale(mx.skew_part(y), -I))


def is_theta_block(x) -> bool:
    """Whether x has the [[A, B], [-B, A]] shape (A, B of half order)."""
    n = mx.order(x)
    if n % 2:
        return False
    h = n // 2
    a, b = mx.submatrix(x, 0, 0, h), mx.submatrix(x, 0, h, h)
    return mx.submatrix(x, h, h, h) == a and mx.submatrix(x, h, 0, h) == mx.neg(b)


def theta_conjugator(half_n: int):
    if half_n < 1:
        raise ShapeError("theta conjugator needs half_n >= 1")
    eye = mx.identity(half_n)
    return mx.assemble([
        [eye, mx.scale(eye, I)],
        [mx.scale(eye, HALF), mx.scale(eye, -I * HALF)],
    ])


def extend_to_symplectic(c) -> AmbientAutomorphism:
    n = mx.order(c)
    q = mx.block_diagonal([c, mx.transpose(mx.mat_inverse(c))])
    return _checked(AmbientAutomorphism(Ambient(Family.SYMP, 2 * n), AutomorphismKind.CONJUGATION, q))


def coordinate_swap(ambient: Ambient, start: int, stop: int) -> AmbientAutomorphism:
    """Symplectic q sending e_c to -e_{n+c} and e_{n+c} to e_c for start <= c < stop.

    Conjugation by q exchanges the A and Aᵗ entries of those coordinates, so
    an X block of A at that position becomes an Xᵗ block.
    """
    if ambient.family is not Family.SYMP:
        raise UnsupportedAmbient(f"coordinate swaps act on SymplecticH ambients, not {ambient.label}")
    rows = ambient.rows
    if not 0 <= start <= stop <= rows:
        raise ShapeError(f"swap range [{start}, {stop}) is outside 0..{rows}")
    entries = {}
    for c in range(rows):
        if start <= c < stop:
            entries[c, rows + c] = 1
            entries[rows + c, c] = -1
        else:
            entries[c, c] = 1
            entries[rows + c, rows + c] = 1
    q = mx.from_entries((ambient.order, ambient.order), entries)
    return _checked(AmbientAutomorphism(ambient, AutomorphismKind.CONJUGATION, q))


def transpose_automorphism(ambient: Ambient) -> AmbientAutomorphism:
    if ambient.family is not Family.FULL:
        raise UnsupportedAmbient(f"x ↦ xᵗ is not an automorphism of {ambient.label} worth recording")
    return AmbientAutomorphism(ambient, AutomorphismKind.CONJUGATION_WITH_TRANSPOSE,
                               mx.identity(ambient.order))


def identity_automorphism(ambient: Ambient) -> AmbientAutomorphism:
    return AmbientAutomorphism(ambient, AutomorphismKind.CONJUGATION, mx.identity(ambient.order))


def _entry(rng):
    return gaussian(rng.choice(_ENTRY_CHOICES), rng.choice(_ENTRY_CHOICES))


def _random_skew(rng, n):
    values = {}
    for i in range(n):
        for j in range(i + 1, n):
            v = _entry(rng)
            values[(i, j)], values[(j, i)] = v, -v
    return mx.from_entries((n, n), values)


def _random_symmetric(rng, n):
    values = {}
    for i in range(n):
        for j in range(i, n):
            values[(i, j)] = values[(j, i)] = _entry(rng)
    return mx.from_entries((n, n), values)


def cayley(k):
    """(I - K)(I + K)⁻¹."""
    eye = mx.identity(mx.order(k))
    return mx.mat_mul(mx.mat_sub(eye, k), mx.mat_inverse(mx.mat_add(eye, k)))


def random_exact_automorphism(ambient: Ambient, seed: int, allow_transpose: bool = True):
    rng = random.Random(seed)
    n = ambient.order
    for attempt in range(MAX_SEED_ATTEMPTS):
        kind = AutomorphismKind.CONJUGATION
        try:
            if ambient.family is Family.SYM:
                q = cayley(_random_skew(rng, n))
            elif ambient.family is Family.SYMP:
                # H = J⁻¹S with S symmetric is Hamiltonian; its Cayley transform is symplectic
                j = mx.symplectic_form(n // 2)
                q = cayley(mx.mat_mul(mx.mat_inverse(j), _random_symmetric(rng, n)))
            else:
                q = mx.from_entries((n, n), {(a, b): _entry(rng) for a in range(n) for b in range(n)})
                if allow_transpose and rng.random() < 0.5:
                    kind = AutomorphismKind.CONJUGATION_WITH_TRANSPOSE
            phi = AmbientAutomorphism(ambient, kind, q)
        except SingularMatrix:
            logger.debug("seed %s attempt %d hit a singular matrix", seed, attempt)
            continue
        return _checked(phi)
    raise DegenerateSeed(f"seed {seed} gave no invertible generator in {MAX_SEED_ATTEMPTS} attempts")


def apply_automorphism(phi: AmbientAutomorphism, s: Subalgebra) -> Subalgebra:
    if phi.ambient != s.ambient:
        raise AmbientMismatch(f"automorphism of {phi.ambient.label} applied inside {s.ambient.label}")
    shape = (s.ambient.order, s.ambient.order)
    return Subalgebra(s.ambient, subspace_from([phi(b) for b in s.basis()], shape))


def normalize_orthogonal(q):
    """Scale q so that qᵗq = I when qᵗq = α·I with α a square.

    Returns ``(q, α)``; α is ``None`` when qᵗq is not scalar.
    """
    n = mx.order(q)
    product = mx.mat_mul(mx.transpose(q), q)
    alpha = mx.entries(product).get((0, 0))
    if alpha is None or product != mx.scale(mx.identity(n), alpha):
        return q, None
    beta = scalar_sqrt_if_square(alpha)
    if beta is None:
        return q, alpha
    return mx.scale(q, 1 / beta), alpha
