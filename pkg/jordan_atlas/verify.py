"""Verification harness: runs every property suite and collects failures
as data, one outcome dict per failed case."""
from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable, Optional

from . import clifford
from . import matrices as mx
from .automorphisms import (apply_automorphism, extend_to_symplectic, is_theta_block,
                            random_exact_automorphism, theta_conjugator, theta_of)
from .catalog import build, canonicalize, catalog_form, rank_of_spec, validate_spec
from .clifford import CliffordElement, cliff_mul, cliff_reverse, gamma_rep
from .invariants import (are_conjugate, derived_class_count, discrepancy, enumerate_classes,
                         invariant_vector, k_applies, k_caveat, k_invariant_envelope,
                         k_invariant_spec, rank_of_identity, uses_half_sum, valid_specs)
from .codec import format_scalar, matrix_to_json
from .jordan import MIN_MATRIX_DEGREE, Subalgebra, detect_type, identity_idempotent, jordan_product
from .models import Ambient, Family, TypeLabel
from .scalar import gaussian

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Level:
    name: str
    max_n: int
    max_clifford_m: int
    automorphisms: int
    invariance_max_n: int
    # None runs every buildable spec
    specs_per_form: Optional[int]
    theta_max_half: int
    theta_pairs: int
    axiom_max_n: int
    axiom_triples: int


LEVELS = {
    "quick": Level("quick", max_n=8, max_clifford_m=2, automorphisms=5, invariance_max_n=8,
                   specs_per_form=1, theta_max_half=2, theta_pairs=10, axiom_max_n=4, axiom_triples=20),
    "full": Level("full", max_n=12, max_clifford_m=4, automorphisms=25, invariance_max_n=10,
                  specs_per_form=None, theta_max_half=4, theta_pairs=100, axiom_max_n=8, axiom_triples=500),
}

SUITES = (
    "catalog-integrity",
    "clifford-dimension-table",
    "clifford-relations",
    "class-counts",
    "k-invariant-agreement",
    "automorphism-invariance",
    "theta-machinery",
    "jordan-axioms",
)


@dataclass
class SuiteResult:
    name: str
    cases_run: int = 0
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"name": self.name, "cases_run": self.cases_run, "failures": self.failures}


@dataclass
class VerifyReport:
    level: str
    seed: int
    suites: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)
    caveats: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not any(s.failures for s in self.suites)

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "seed": self.seed,
            "passed": self.passed,
            "suites": [s.to_dict() for s in self.suites],
            "discrepancies": [d.to_dict() for d in self.discrepancies],
            "caveats": [c.to_dict() for c in self.caveats],
            "wall_time": round(self.wall_time, 3),
        }


def _plain(value):
    """JSON-ready form of a value compared by a suite."""
    if isinstance(value, mx.DomainMatrix):
        return matrix_to_json(value)
    if isinstance(value, CliffordElement):
        return value.to_dict()
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, int, str, float)) or value is None:
        return value
    try:
        return format_scalar(value)
    except Exception:
        return str(value)


def ambients(max_n: int):
    for n in range(1, max_n + 1):
        yield Ambient(Family.FULL, n)
        yield Ambient(Family.SYM, n)
        if n % 2 == 0:
            yield Ambient(Family.SYMP, n)


def type_labels(ambient: Ambient, min_degree: int = MIN_MATRIX_DEGREE):
    """Type labels with at least one valid spec in the ambient."""
    for family in (Family.FULL, Family.SYM, Family.SYMP):
        m = min_degree
        while TypeLabel(family, m).block_order <= ambient.order:
            t = TypeLabel(family, m)
            if next(valid_specs(ambient, t), None) is not None:
                yield t
            m += 1
    d = 2
    # every spin layout needs 2^m <= order
    while (1 << (d // 2)) <= ambient.order:
        t = TypeLabel(Family.SPIN, d)
        if next(valid_specs(ambient, t), None) is not None:
            yield t
        d += 1


class VerificationEngine:
    def __init__(self, level: str = "quick", seed: int = 0,
                 product: Callable = jordan_product):
        if level not in LEVELS:
            raise ValueError(f"unknown level '{level}'")
        self.level = LEVELS[level]
        self.seed = seed
        self.product = product
        self.rng = random.Random(seed)

    def _record(self, result: SuiteResult, case, expected, got):
        if expected == got:
            logger.debug("PASS: %s", case)
            return
        logger.warning("FAIL: %s expected %s, got %s", case, expected, got)
        result.failures.append({"case": case, "expected": _plain(expected), "got": _plain(got)})

    def _run_case(self, result: SuiteResult, case, check):
        result.cases_run += 1
        try:
            for expected, got in check():
                self._record(result, case, expected, got)
        except Exception as e:
            logger.warning("ERROR: %s raised %s", case, e)
            result.failures.append({"case": case, "expected": "no error",
                                    "got": f"{type(e).__name__}: {e}"})

    def _closed(self, s: Subalgebra) -> bool:
        return all(s.span.contains(self.product(x, y))
                   for x, y in combinations_with_replacement(s.basis(), 2))

    def _buildable(self, max_n):
        for ambient in ambients(max_n):
            for t in type_labels(ambient):
                for spec in valid_specs(ambient, t):
                    if not validate_spec(spec, for_build=True):
                        yield spec

    # -- suites -------------------------------------------------------------

    def catalog_integrity(self, result):
        for spec in self._buildable(self.level.max_n):
            case = f"build {spec.type.label} l={spec.l} k={spec.k} in {spec.ambient.label}"

            def check(spec=spec):
                s = build(spec)
                e = identity_idempotent(s)
                yield True, self._closed(s)
                yield True, all(spec.ambient.contains(b) for b in s.basis())
                yield spec.type.dimension, s.dim
                yield spec.type.label, detect_type(s).label
                yield rank_of_spec(spec), mx.mat_rank(e)
                yield True, self.product(e, e) == e
            self._run_case(result, case, check)

    def clifford_dimension_table(self, result):
        for m in range(1, self.level.max_clifford_m + 1):
            def check(m=m):
                yield clifford.clifford_fixed_dim_formula(m), clifford.represented_involution_fixed_dim(m)
                yield m % 4 in (0, 1), clifford.involution_is_symmetric(m)
            self._run_case(result, f"dim H(C(V), -) for m={m}", check)

    def _random_clifford(self, m):
        terms = {bits: gaussian(self.rng.randint(-2, 2), self.rng.randint(-1, 1))
                 for bits in self.rng.sample(range(1 << (2 * m)), min(4, 1 << (2 * m)))}
        return CliffordElement(m, terms)

    def clifford_relations(self, result):
        for m in range(1, self.level.max_clifford_m + 1):
            rep = gamma_rep(m)
            eye = mx.identity(rep.order)

            def gammas(m=m, rep=rep, eye=eye):
                for i, g in enumerate(rep.gammas):
                    yield eye, mx.mat_mul(g, g)
                    for h in rep.gammas[i + 1:]:
                        yield True, mx.is_zero(mx.mat_add(mx.mat_mul(g, h), mx.mat_mul(h, g)))
                chi = clifford.chirality(m)
                yield eye, mx.mat_mul(chi, chi)
                for g in rep.gammas:
                    yield True, mx.is_zero(mx.mat_add(mx.mat_mul(g, chi), mx.mat_mul(chi, g)))
            self._run_case(result, f"gamma relations m={m}", gammas)

            def spin_relation(m=m, eye=eye):
                for d in (2 * m, 2 * m + 1):
                    images = clifford.spin_images(d)[1:]
                    for i, a in enumerate(images):
                        for j, b in enumerate(images):
                            expected = eye if i == j else mx.zeros(1 << m)
                            yield expected, self.product(a, b)
            self._run_case(result, f"spin relation m={m}", spin_relation)

            if m <= 3:
                def multiplicative(m=m, rep=rep):
                    for bits in range(1 << (2 * m)):
                        indices = clifford.blade_indices(bits)[::-1]
                        expected = mx.identity(rep.order)
                        for i in indices:
                            expected = mx.mat_mul(expected, rep.gammas[i - 1])
                        yield expected, rep.image(CliffordElement.monomial(m, indices))
                    a, b, c = (self._random_clifford(m) for _ in range(3))
                    yield cliff_mul(cliff_mul(a, b), c), cliff_mul(a, cliff_mul(b, c))
                    yield cliff_mul(cliff_reverse(b), cliff_reverse(a)), cliff_reverse(cliff_mul(a, b))
                    yield a, cliff_reverse(cliff_reverse(a))
                    yield rep.image(cliff_mul(a, b)), mx.mat_mul(rep.image(a), rep.image(b))
                self._run_case(result, f"gamma map m={m}", multiplicative)

    def class_counts(self, result, report):
        for ambient in ambients(self.level.max_n):
            for t in type_labels(ambient, min_degree=1):
                case = f"classes of {t.label} in {ambient.label}"

                def check(ambient=ambient, t=t):
                    atlas = enumerate_classes(ambient, t)
                    vectors = [e.invariants for e in atlas.entries]
                    yield len(vectors), len(set(vectors))
                    specs = list(valid_specs(ambient, t))
                    yield True, all(invariant_vector(s) in vectors for s in specs)
                    for a, b in combinations(specs, 2):
                        yield canonicalize(a) == canonicalize(b), are_conjugate(a, b)
                    expected = derived_class_count(ambient, t)
                    if expected is not None:
                        yield expected, len(atlas)
                    # only the ⌊j/2⌋ sums may disagree with the enumeration
                    found = discrepancy(ambient, t, atlas)
                    yield uses_half_sum(ambient, t), found is not None
                    if found is not None:
                        report.discrepancies.append(found)
                        for a, b in combinations(found.witness_specs, 2):
                            yield False, are_conjugate(a, b)
                    caveat = k_caveat(ambient, t, atlas)
                    if caveat is not None:
                        report.caveats.append(caveat)
                        a, b = caveat.witness_specs
                        if caveat.witness is not None and not validate_spec(a, for_build=True):
                            yield build(b), apply_automorphism(caveat.witness, build(a))
                self._run_case(result, case, check)

    def k_invariant_agreement(self, result):
        for spec in self._buildable(self.level.max_n):
            if spec.ambient.family is not Family.FULL or not k_applies(spec.ambient, spec.type):
                continue
            case = f"k_A of {spec.type.label} l={spec.l} k={spec.k} in {spec.ambient.label}"
            self._run_case(result, case,
                           lambda spec=spec: [(k_invariant_spec(spec), k_invariant_envelope(build(spec)))])

    def _invariance_specs(self):
        if self.level.specs_per_form is None:
            return list(self._buildable(self.level.invariance_max_n))
        per_form = {}
        for spec in self._buildable(self.level.invariance_max_n):
            form = catalog_form(spec)
            bucket = per_form.setdefault(form, [])
            if len(bucket) < self.level.specs_per_form and (spec.l + spec.k > 1 or not bucket):
                bucket.append(spec)
        return [spec for bucket in per_form.values() for spec in bucket]

    def automorphism_invariance(self, result):
        for spec in self._invariance_specs():
            try:
                s = build(spec)
                baseline = (s.dim, detect_type(s).label, rank_of_identity(s), k_invariant_envelope(s))
            except Exception:
                self._run_case(result, f"baseline of {spec.type.label} in {spec.ambient.label}",
                               lambda spec=spec: [(None, build(spec))])
                continue
            for index in range(self.level.automorphisms):
                seed = self.rng.randrange(1 << 30)
                case = f"{spec.type.label} l={spec.l} k={spec.k} in {spec.ambient.label}, seed {seed}"

                def check(spec=spec, s=s, baseline=baseline, seed=seed):
                    phi = random_exact_automorphism(spec.ambient, seed)
                    image = apply_automorphism(phi, s)
                    yield True, self._closed(image)
                    got = (image.dim, detect_type(image).label, rank_of_identity(image),
                           k_invariant_envelope(image))
                    yield baseline, got
                self._run_case(result, case, check)

    def _random_matrix(self, n):
        return mx.from_entries((n, n), {(i, j): gaussian(self.rng.randint(-3, 3), self.rng.randint(-1, 1))
                                        for i in range(n) for j in range(n)})

    def theta_machinery(self, result):
        for h in range(1, self.level.theta_max_half + 1):
            def check(h=h):
                s = theta_conjugator(h)
                s_inv = mx.mat_inverse(s)
                yield 2 * h, mx.mat_rank(s)
                yield mx.identity(2 * h), mx.mat_mul(s, s_inv)
                forward = [mx.mat_mul(mx.mat_mul(s_inv, mx.block_diagonal([mx.unit(h, i, j), mx.unit(h, j, i)])), s)
                           for i in range(h) for j in range(h)]
                yield True, all(is_theta_block(f) and mx.is_symmetric(f) for f in forward)
                yield h * h, mx.subspace_from(forward).dim
                back = [mx.mat_mul(mx.mat_mul(s, f), s_inv) for f in forward]
                yield True, all(mx.is_zero(mx.submatrix(b, 0, h, h)) and mx.is_zero(mx.submatrix(b, h, 0, h))
                                and mx.submatrix(b, h, h, h) == mx.transpose(mx.submatrix(b, 0, 0, h))
                                for b in back)
                phi = extend_to_symplectic(mx.block_diagonal([mx.scale(mx.identity(1), 2)] + [mx.identity(1)] * (h - 1)))
                yield 2 * h, phi.ambient.order
            self._run_case(result, f"theta conjugator half_n={h}", check)

        for index in range(self.level.theta_pairs):
            h = index % self.level.theta_max_half + 1

            def pair(h=h):
                x, y = self._random_matrix(h), self._random_matrix(h)
                s = theta_conjugator(h)
                image = mx.mat_mul(mx.mat_mul(mx.mat_inverse(s), mx.block_diagonal([x, mx.transpose(x)])), s)
                yield True, is_theta_block(image) and mx.is_symmetric(image)
                yield theta_of(self.product(x, y)), self.product(theta_of(x), theta_of(y))
            self._run_case(result, f"theta pair {index} half_n={h}", pair)

    def _random_member(self, ambient):
        basis = ambient.basis()
        total = mx.zeros(ambient.order)
        for b in basis:
            c = self.rng.randint(-2, 2)
            if c:
                total = mx.mat_add(total, mx.scale(b, c))
        return total

    def jordan_axioms(self, result):
        for family in (Family.FULL, Family.SYM, Family.SYMP):
            orders = [n for n in range(1, self.level.axiom_max_n + 1)
                      if family is not Family.SYMP or n % 2 == 0]
            for index in range(self.level.axiom_triples):
                ambient = Ambient(family, orders[index % len(orders)])

                def check(ambient=ambient):
                    x, y, z = (self._random_member(ambient) for _ in range(3))
                    x2 = self.product(x, x)
                    yield self.product(x, y), self.product(y, x)
                    yield self.product(x2, self.product(y, x)), self.product(self.product(x2, y), x)
                    yield True, ambient.contains(self.product(y, z))
                    yield self.product(x, mx.mat_add(y, z)), mx.mat_add(self.product(x, y), self.product(x, z))
                    yield x, self.product(mx.identity(ambient.order), x)
                self._run_case(result, f"Jordan triple {index} in {ambient.label}", check)

    def run(self, suites=SUITES) -> VerifyReport:
        started = time.perf_counter()
        report = VerifyReport(self.level.name, self.seed)
        for name in suites:
            result = SuiteResult(name)
            logger.info("running %s at level %s", name, self.level.name)
            method = getattr(self, name.replace("-", "_"))
            if name == "class-counts":
                method(result, report)
            else:
                method(result)
            report.suites.append(result)
        report.wall_time = time.perf_counter() - started
        return report


def run_verification(level: str = "quick", seed: int = 0, product: Callable = jordan_product,
                     suites=SUITES) -> VerifyReport:
    return VerificationEngine(level, seed, product).run(suites)
