"""Exact matrices over Q(i) and row-reduced subspaces of matrix spaces.

Matrices are sympy ``DomainMatrix`` objects over ``QQ_I``. Every helper here
returns matrices in the same storage format so that they can be combined
without conversion.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .errors import ShapeError, SingularMatrix
from .scalar import HALF, ONE, as_scalar


def from_entries(shape, entries) -> DomainMatrix:
    """Matrix of the given shape from a ``{(i, j): value}`` mapping."""
    dod = {}
    for (i, j), v in entries.items():
        v = as_scalar(v)
        if v:
            dod.setdefault(i, {})[j] = v
    return DomainMatrix.from_dod(dod, tuple(shape), QQ_I)


def matrix(rows) -> DomainMatrix:
    rows = [list(r) for r in rows]
    cols = len(rows[0]) if rows else 0
    if any(len(r) != cols for r in rows):
        raise ShapeError("rows of unequal length")
    entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}
    return from_entries((len(rows), cols), entries)


def zeros(rows, cols=None) -> DomainMatrix:
    return DomainMatrix.zeros((rows, rows if cols is None else cols), QQ_I)


def identity(n) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ_I)


def unit(n, i, j) -> DomainMatrix:
    """The elementary matrix E_ij of order n (0-based indices)."""
    return from_entries((n, n), {(i, j): ONE})


def entries(a) -> dict:
    return a.to_dok()


def order(a) -> int:
    rows, cols = a.shape
    if rows != cols:
        raise ShapeError(f"expected a square matrix, got {rows}x{cols}")
    return rows


def _same_shape(a, b, what):
    if a.shape != b.shape:
        raise ShapeError(f"cannot {what} {a.shape} and {b.shape}")


def mat_add(a, b) -> DomainMatrix:
    _same_shape(a, b, "add")
    return a.to_sparse().add(b.to_sparse())


def mat_sub(a, b) -> DomainMatrix:
    _same_shape(a, b, "subtract")
    return a.to_sparse().sub(b.to_sparse())


def scale(a, c) -> DomainMatrix:
    return a.to_sparse().scalarmul(as_scalar(c))


def neg(a) -> DomainMatrix:
    return a.to_sparse().neg()


def transpose(a) -> DomainMatrix:
    return a.to_sparse().transpose()


def mat_mul(a, b) -> DomainMatrix:
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a.to_sparse().matmul(b.to_sparse())


def is_zero(a) -> bool:
    return a.is_zero_matrix


def is_symmetric(a) -> bool:
    return a.shape[0] == a.shape[1] and transpose(a) == a.to_sparse()


def is_skew(a) -> bool:
    return a.shape[0] == a.shape[1] and transpose(a) == neg(a)


def trace(a):
    total = as_scalar(0)
    for (i, j), v in entries(a).items():
        if i == j:
            total += v
    return total


def mat_rank(a) -> int:
    # fraction-free Gauss-Jordan keeps the intermediate entries small
    if a.is_zero_matrix:
        return 0
    _, _, pivots = a.to_sparse().rref_den(method="FF")
    return len(pivots)


def mat_inverse(a) -> DomainMatrix:
    order(a)
    try:
        return a.to_sparse().inv().to_sparse()
    except DMNonInvertibleMatrixError as e:
        raise SingularMatrix(str(e)) from e


def is_invertible(a) -> bool:
    return mat_rank(a) == order(a)


def symplectic_form(n) -> DomainMatrix:
    """J = [[0, I_n], [-I_n, 0]] of order 2n."""
    values = {}
    for p in range(n):
        values[(p, n + p)] = 1
        values[(n + p, p)] = -1
    return from_entries((2 * n, 2 * n), values)


def symplectic_transpose(x) -> DomainMatrix:
    size = order(x)
    if size % 2:
        raise ShapeError(f"symplectic transpose needs even order, got {size}")
    j = symplectic_form(size // 2)
    return mat_mul(mat_mul(neg(j), transpose(x)), j)


def kron(a, b) -> DomainMatrix:
    br, bc = b.shape
    values = {}
    b_items = entries(b)
    for (i, j), u in entries(a).items():
        for (k, l), v in b_items.items():
            values[(i * br + k, j * bc + l)] = u * v
    return from_entries((a.shape[0] * br, a.shape[1] * bc), values)


def embed(shape, placements) -> DomainMatrix:
    """Sum of blocks placed at ``(row, col)`` offsets inside a zero matrix."""
    values = {}
    for (r0, c0), block in placements:
        for (i, j), v in entries(block).items():
            key = (r0 + i, c0 + j)
            values[key] = values.get(key, 0) + v
    return from_entries(shape, values)


def block_diagonal(blocks, size=None) -> DomainMatrix:
    """diag(blocks...) padded with trailing zeros up to ``size``."""
    placements = []
    offset = 0
    for block in blocks:
        placements.append(((offset, offset), block))
        offset += order(block)
    size = offset if size is None else size
    if size < offset:
        raise ShapeError(f"blocks of total order {offset} exceed {size}")
    return embed((size, size), placements)


def assemble(grid) -> DomainMatrix:
    """Block matrix from a square grid of equally sized square blocks."""
    k = len(grid)
    b = order(grid[0][0])
    placements = [((r * b, c * b), grid[r][c]) for r in range(k) for c in range(k)]
    return embed((k * b, k * b), placements)


def symmetric_part(y) -> DomainMatrix:
    return scale(mat_add(y, transpose(y)), HALF)


def skew_part(y) -> DomainMatrix:
    return scale(mat_sub(y, transpose(y)), HALF)


def vec(a) -> dict:
    """Row-major flattening as a sparse ``{index: value}`` map."""
    cols = a.shape[1]
    return {i * cols + j: v for (i, j), v in entries(a).items()}


def unvec(vector, shape) -> DomainMatrix:
    cols = shape[1]
    return from_entries(shape, {divmod(k, cols): v for k, v in vector.items()})


def _stack(vectors, width) -> DomainMatrix:
    dod = {i: dict(v) for i, v in enumerate(vectors) if v}
    return DomainMatrix.from_dod(dod, (max(len(vectors), 1), width), QQ_I)


def rref_rows(vectors, width):
    """Reduced row echelon rows (nonzero only) and pivots of a vector list."""
    if not any(vectors):
        return (), ()
    reduced, pivots = _stack(vectors, width).rref()
    dod = reduced.to_dod()
    rows = tuple(dict(dod[i]) for i in range(len(pivots)))
    return rows, tuple(pivots)


def solve(columns, rhs, height):
    """Coefficients c with sum(c_k * columns[k]) == rhs, or None.

    Columns and the right hand side are sparse ``{index: value}`` vectors of
    length ``height``. Free unknowns are set to zero.
    """
    width = len(columns)
    dod = {}
    for k, column in enumerate(columns):
        for idx, v in column.items():
            dod.setdefault(idx, {})[k] = v
    for idx, v in rhs.items():
        dod.setdefault(idx, {})[width] = v
    system = DomainMatrix.from_dod(dod, (max(height, 1), width + 1), QQ_I)
    reduced, pivots = system.rref()
    if width in pivots:
        return None
    solution = [as_scalar(0)] * width
    rows = reduced.to_dod()
    for i, p in enumerate(pivots):
        solution[p] = rows.get(i, {}).get(width, as_scalar(0))
    return solution


def nullspace(columns, height):
    """Basis (in reduced echelon order) of {c : sum(c_k * columns[k]) == 0}."""
    width = len(columns)
    dod = {}
    for k, column in enumerate(columns):
        for idx, v in column.items():
            dod.setdefault(idx, {})[k] = v
    system = DomainMatrix.from_dod(dod, (max(height, 1), width), QQ_I)
    kernel = system.nullspace().to_dod()
    vectors = [dict(kernel[i]) for i in sorted(kernel)]
    rows, _ = rref_rows(vectors, width)
    return [[row.get(k, as_scalar(0)) for k in range(width)] for row in rows]


@dataclass(frozen=True)
class Subspace:
    """A subspace of the matrices of one shape, kept in reduced echelon form.

    Members are flattened row-major; ``rows`` are the echelon rows and
    ``pivots`` their leading positions, which makes two equal subspaces
    compare equal.
    """

    shape: tuple
    rows: tuple = field(default=())
    pivots: tuple = field(default=())

    @property
    def ambient_dim(self) -> int:
        return self.shape[0] * self.shape[1]

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def basis(self) -> list:
        return [unvec(row, self.shape) for row in self.rows]

    def reduce(self, x) -> dict:
        residual = vec(x) if isinstance(x, DomainMatrix) else dict(x)
        for row, p in zip(self.rows, self.pivots):
            c = residual.get(p)
            if not c:
                continue
            for idx, v in row.items():
                value = residual.get(idx, 0) - c * v
                if value:
                    residual[idx] = value
                else:
                    residual.pop(idx, None)
        return residual

    def contains(self, x) -> bool:
        if isinstance(x, DomainMatrix) and x.shape != self.shape:
            return False
        return not self.reduce(x)

    def coordinates(self, x) -> list:
        if not self.contains(x):
            raise ShapeError("element is not in the subspace")
        v = vec(x)
        return [v.get(p, as_scalar(0)) for p in self.pivots]

    def combination(self, coeffs) -> DomainMatrix:
        total = {}
        for c, row in zip(coeffs, self.rows):
            if not c:
                continue
            for idx, v in row.items():
                total[idx] = total.get(idx, 0) + c * v
        return unvec({k: v for k, v in total.items() if v}, self.shape)

    def extend(self, generators) -> "Subspace":
        """Span of this subspace and the generators."""
        fresh = []
        for g in generators:
            residual = self.reduce(g)
            if residual:
                fresh.append(residual)
        if not fresh:
            return self
        rows, pivots = rref_rows(list(self.rows) + fresh, self.ambient_dim)
        return Subspace(self.shape, rows, pivots)


def subspace_from(generators, shape=None) -> Subspace:
    generators = list(generators)
    if shape is None:
        shape = generators[0].shape if generators else (0, 0)
    shape = tuple(shape)
    if any(g.shape != shape for g in generators):
        raise ShapeError("generators of a subspace must share one shape")
    rows, pivots = rref_rows([vec(g) for g in generators], shape[0] * shape[1])
    return Subspace(shape, rows, pivots)


def submatrix(a, r0, c0, rows, cols=None) -> DomainMatrix:
    """The ``rows`` x ``cols`` block of ``a`` whose corner is ``(r0, c0)``."""
    cols = rows if cols is None else cols
    values = {(i - r0, j - c0): v for (i, j), v in entries(a).items()
              if r0 <= i < r0 + rows and c0 <= j < c0 + cols}
    return from_entries((rows, cols), values)
