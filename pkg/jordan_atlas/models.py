"""Records shared across the atlas: ambient algebras, type labels, specs,
invariant vectors and atlases, each with a JSON-ready ``to_dict``."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Optional

from .errors import ParseError
from . import matrices as mx


class Family(str, Enum):
    FULL = "full"
    SYM = "sym"
    SYMP = "symp"
    SPIN = "spin"


class Embedding(str, Enum):
    FIRST = "first"
    SECOND = "second"


AMBIENT_NAMES = {
    Family.FULL: "FullPlus",
    Family.SYM: "SymmetricH",
    Family.SYMP: "SymplecticH",
}
_LABEL_RE = re.compile(r"^\s*(FullPlus|SymmetricH|SymplecticH|Spin)\((\d+)\)\s*$")


def _family(value) -> Family:
    try:
        return Family(value)
    except ValueError:
        raise ParseError(f"unknown kind '{value}'") from None


@dataclass(frozen=True)
class Ambient:
    """FullPlus(n), SymmetricH(n) or SymplecticH(n) with ``order`` = n.

    For SymplecticH the order is the even matrix order 2n'; ``rows`` is the
    order of the A-block that catalog layouts fill.
    """

    family: Family
    order: int

    def __post_init__(self):
        if self.family not in AMBIENT_NAMES:
            raise ParseError(f"'{self.family.value}' is not an ambient kind")
        if self.order < 1:
            raise ParseError("ambient order must be at least 1")
        if self.family is Family.SYMP and self.order % 2:
            raise ParseError(f"SymplecticH needs an even order, got {self.order}")

    @property
    def rows(self) -> int:
        return self.order // 2 if self.family is Family.SYMP else self.order

    @property
    def dimension(self) -> int:
        n = self.order
        if self.family is Family.FULL:
            return n * n
        if self.family is Family.SYM:
            return n * (n + 1) // 2
        h = n // 2
        return 2 * h * h - h

    @property
    def label(self) -> str:
        return f"{AMBIENT_NAMES[self.family]}({self.order})"

    def contains(self, x) -> bool:
        if x.shape != (self.order, self.order):
            return False
        if self.family is Family.FULL:
            return True
        if self.family is Family.SYM:
            return mx.is_symmetric(x)
        return mx.symplectic_transpose(x) == x.to_sparse()

    def basis(self) -> list:
        return list(ambient_basis(self))

    def to_dict(self) -> dict:
        return {"kind": self.family.value, "n": self.order}

    @classmethod
    def from_dict(cls, data) -> "Ambient":
        if not isinstance(data, dict) or "kind" not in data or "n" not in data:
            raise ParseError("ambient must be an object with 'kind' and 'n'")
        return cls(_family(data["kind"]), int(data["n"]))

    def __str__(self):
        return self.label


@lru_cache(maxsize=None)
def ambient_basis(ambient: Ambient) -> tuple:
    n = ambient.order
    if ambient.family is Family.FULL:
        return tuple(mx.unit(n, i, j) for i in range(n) for j in range(n))
    if ambient.family is Family.SYM:
        return tuple(symmetric_basis(n))
    return tuple(symplectic_basis(n // 2))


def symmetric_basis(n) -> list:
    out = []
    for i in range(n):
        for j in range(i, n):
            values = {(i, j): 1, (j, i): 1}
            out.append(mx.from_entries((n, n), values))
    return out


def symplectic_basis(h) -> list:
    """Basis of the [[A, B], [C, A^t]] matrices of order 2h, B and C skew."""
    size = (2 * h, 2 * h)
    out = [mx.from_entries(size, {(i, j): 1, (h + j, h + i): 1})
           for i in range(h) for j in range(h)]
    for i in range(h):
        for j in range(i + 1, h):
            out.append(mx.from_entries(size, {(i, h + j): 1, (j, h + i): -1}))
            out.append(mx.from_entries(size, {(h + i, j): 1, (h + j, i): -1}))
    return out


@dataclass(frozen=True)
class TypeLabel:
    """Isomorphism type of a simple subalgebra.

    ``m`` is the degree for matrix types (SymplecticH(2m) has matrices of
    order 2m) and d = dim V for Spin(d).
    """

    family: Family
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ParseError("type parameter must be at least 1")

    @property
    def is_spin(self) -> bool:
        return self.family is Family.SPIN

    @property
    def dimension(self) -> int:
        m = self.m
        if self.family is Family.FULL:
            return m * m
        if self.family is Family.SYM:
            return m * (m + 1) // 2
        if self.family is Family.SYMP:
            return 2 * m * m - m
        return 1 + m

    @property
    def block_order(self) -> int:
        """Order of one irreducible matrix block X."""
        if self.family is Family.SYMP:
            return 2 * self.m
        return self.m

    @property
    def label(self) -> str:
        if self.family is Family.SPIN:
            return f"Spin({self.m})"
        if self.family is Family.SYMP:
            return f"SymplecticH({2 * self.m})"
        return f"{AMBIENT_NAMES[self.family]}({self.m})"

    @classmethod
    def parse(cls, text: str) -> "TypeLabel":
        match = _LABEL_RE.match(text)
        if not match:
            raise ParseError(f"not a type label: '{text}'")
        name, value = match.group(1), int(match.group(2))
        if name == "Spin":
            return cls(Family.SPIN, value)
        family = {v: k for k, v in AMBIENT_NAMES.items()}[name]
        if family is Family.SYMP:
            if value % 2:
                raise ParseError(f"SymplecticH needs an even order, got {value}")
            value //= 2
        return cls(family, value)

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class CanonicalSpec:
    """Symbolic description of one canonical realization.

    ``l`` and ``k`` count X and X^t blocks, ``s`` the trailing zero rows. ``s``
    is derived from the size accounting when left as ``None``.
    """

    ambient: Ambient
    type: TypeLabel
    l: int
    k: int = 0
    s: Optional[int] = None
    embedding: Optional[Embedding] = None

    @property
    def m(self) -> int:
        return self.type.m

    def to_dict(self) -> dict:
        data = {
            "ambient": self.ambient.to_dict(),
            "type": self.type.family.value,
            "m": self.m,
            "l": self.l,
            "k": self.k,
            "s": self.s,
        }
        if self.embedding is not None:
            data["spin_embedding"] = self.embedding.value
        return data

    @classmethod
    def from_dict(cls, data) -> "CanonicalSpec":
        if not isinstance(data, dict):
            raise ParseError("a spec must be a JSON object")
        missing = [key for key in ("ambient", "type", "m", "l") if key not in data]
        if missing:
            raise ParseError(f"spec is missing {', '.join(missing)}")
        try:
            embedding = data.get("spin_embedding")
            return cls(
                ambient=Ambient.from_dict(data["ambient"]),
                type=TypeLabel(_family(data["type"]), int(data["m"])),
                l=int(data["l"]),
                k=int(data.get("k") or 0),
                s=None if data.get("s") is None else int(data["s"]),
                embedding=None if embedding is None else Embedding(embedding),
            )
        except (TypeError, ValueError) as e:
            raise ParseError(f"malformed spec: {e}") from e


@dataclass(frozen=True)
class InvariantVector:
    type: TypeLabel
    rank_e: int
    k_a: Optional[int] = None

    def to_dict(self) -> dict:
        return {"type": self.type.label, "rank_e": self.rank_e, "k_a": self.k_a}

    def sort_key(self):
        return (self.rank_e, -1 if self.k_a is None else self.k_a)


@dataclass(frozen=True)
class AtlasEntry:
    spec: CanonicalSpec
    invariants: InvariantVector
    form: str

    def to_dict(self) -> dict:
        return {"form": self.form, "spec": self.spec.to_dict(),
                "invariants": self.invariants.to_dict()}


@dataclass
class Atlas:
    ambient: Ambient
    type: TypeLabel
    entries: list = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient.to_dict(),
            "type": self.type.label,
            "entries": [e.to_dict() for e in self.entries],
        }


@dataclass
class Discrepancy:
    ambient: Ambient
    type: TypeLabel
    formula_count: int
    enumerated_count: int
    witness_specs: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient.to_dict(),
            "type": self.type.label,
            "m": self.type.m,
            "formula_count": self.formula_count,
            "enumerated_count": self.enumerated_count,
            "witness_specs": [s.to_dict() for s in self.witness_specs],
        }


@dataclass
class InvariantCaveat:
    """Specs that k_A keeps apart although an ambient automorphism may join them.

    ``witness`` is an automorphism carrying the build of the first witness
    spec onto the build of the second, when one is known.
    """

    ambient: Ambient
    type: TypeLabel
    reason: str
    witness_specs: list = field(default_factory=list)
    witness: object = None
    classes_by_invariants: Optional[int] = None
    classes_by_rank: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient.to_dict(),
            "type": self.type.label,
            "reason": self.reason,
            "witness_specs": [s.to_dict() for s in self.witness_specs],
            "witness": None if self.witness is None else self.witness.to_dict(),
            "classes_by_invariants": self.classes_by_invariants,
            "classes_by_rank": self.classes_by_rank,
        }
