import pytest

from jordan_atlas import matrices as mx
from jordan_atlas.models import Ambient, CanonicalSpec, Embedding, Family, TypeLabel
from jordan_atlas.scalar import gaussian


def full(n):
    return Ambient(Family.FULL, n)


def sym(n):
    return Ambient(Family.SYM, n)


def symp(n):
    return Ambient(Family.SYMP, n)


def spec(ambient, family, m, l=1, k=0, embedding=None):
    if family is Family.SPIN and embedding is None:
        embedding = Embedding.SECOND if m % 2 else Embedding.FIRST
    return CanonicalSpec(ambient, TypeLabel(family, m), l, k, embedding=embedding)


@pytest.fixture
def random_matrix():
    """Deterministic 'random' matrix of order n with small Gaussian entries."""

    def make(n, salt=0):
        return mx.from_entries((n, n), {
            (i, j): gaussian((3 * i + 5 * j + salt) % 7 - 3, (i * j + salt) % 3 - 1)
            for i in range(n) for j in range(n)
        })

    return make
