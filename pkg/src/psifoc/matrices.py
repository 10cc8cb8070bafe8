"""Dense exact matrices, deformed Pascal and Fermat matrices, the twisted
convolution factorization of the Fermat matrix, and a brute-force oracle
counting subspaces of small vector spaces over prime fields.

Matrices with operator-valued binomial entries are materialized only after
choosing an evaluation mode: either a scalar deformation parameter t, or
an eigenvalue of the family mutator at a chosen monomial degree.  The two
are interchangeable because every operator entry is diagonal on monomials.

The Fermat matrix entries come from the factorial-quotient route
(:func:`psifoc.qhat.binomial_eigenvalue`), so the factorization check
pits them against the independent Pascal-recurrence route in
:func:`psifoc.psi.gauss_binomial`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import qhat, scalars
from .errors import DimensionMismatch, SizeTooLarge, UnsupportedField
from .psi import PsiFamily, gauss_binomial
from .scalars import Scalar


class ScalarMatrix:
    """Dense rectangular matrix over exact scalars.

    Entries may mix plain integers with the field elements of one tag;
    equality is entrywise equality of canonical forms.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable[Scalar]]):
        grid = tuple(tuple(row) for row in data)
        if not grid or not grid[0]:
            raise ValueError("matrix needs at least one row and column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ragged rows")
        self.rows = len(grid)
        self.cols = width
        self.data = grid

    @classmethod
    def zeros(cls, rows: int, cols: int, zero: Scalar = 0) -> "ScalarMatrix":
        return cls(((zero,) * cols,) * rows)

    @classmethod
    def identity(cls, n: int, one: Scalar = 1, zero: Scalar = 0) -> "ScalarMatrix":
        return cls(tuple(tuple(one if i == j else zero for j in range(n))
                         for i in range(n)))

    def entry(self, i: int, j: int) -> Scalar:
        return self.data[i][j]

    def __matmul__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by "
                f"{other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc: Scalar = 0
                for k in range(self.cols):
                    a = self.data[i][k]
                    if a:
                        b = other.data[k][j]
                        if b:
                            acc = acc + a * b
                row.append(scalars.normalize(acc))
            out.append(tuple(row))
        return ScalarMatrix(out)

    def _zip(self, other: "ScalarMatrix", op) -> "ScalarMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"shape {self.rows}x{self.cols} vs "
                f"{other.rows}x{other.cols}")
        return ScalarMatrix(tuple(
            tuple(scalars.normalize(op(a, b)) for a, b in zip(ra, rb))
            for ra, rb in zip(self.data, other.data)))

    def __add__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self._zip(other, lambda a, b: a - b)

    def scale(self, factor: Scalar) -> "ScalarMatrix":
        return ScalarMatrix(tuple(
            tuple(scalars.normalize(factor * v) for v in row)
            for row in self.data))

    def scale_rows(self, factors: Sequence[Scalar]) -> "ScalarMatrix":
        """Row i multiplied by factors[i]; the matrix form of composing
        with a diagonal operator on the left."""
        if len(factors) != self.rows:
            raise DimensionMismatch(
                f"{len(factors)} row factors for {self.rows} rows")
        return ScalarMatrix(tuple(
            tuple(scalars.normalize(f * v) for v in row)
            for f, row in zip(factors, self.data)))

    def apply(self, vector: Sequence[Scalar]) -> tuple[Scalar, ...]:
        if len(vector) != self.cols:
            raise DimensionMismatch(
                f"vector of length {len(vector)} for {self.cols} columns")
        out = []
        for row in self.data:
            acc: Scalar = 0
            for a, v in zip(row, vector):
                if a and v:
                    acc = acc + a * v
            out.append(scalars.normalize(acc))
        return tuple(out)

    def transpose(self) -> "ScalarMatrix":
        return ScalarMatrix(tuple(zip(*self.data)))

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.data)

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and all(a == b for ra, rb in zip(self.data, other.data)
                        for a, b in zip(ra, rb)))

    def __repr__(self):
        body = "; ".join(
            ", ".join(scalars.render(v) for v in row) for row in self.data)
        return f"ScalarMatrix[{body}]"


@dataclass(frozen=True)
class ScalarMode:
    """Evaluate binomial entries at a fixed deformation parameter."""
    t: Scalar


@dataclass(frozen=True)
class EigenMode:
    """Evaluate binomial entries at the family mutator eigenvalue of one
    monomial degree."""
    family: PsiFamily
    degree: int


EvalMode = Union[ScalarMode, EigenMode]


def resolve_mode(mode: EvalMode) -> Scalar:
    """The deformation parameter a mode denotes; eigen modes resolve
    through the mutator operator before any matrix is built."""
    if isinstance(mode, ScalarMode):
        return mode.t
    if isinstance(mode, EigenMode):
        op = qhat.qhat_operator(mode.family, mode.degree)
        return qhat.eval_on_monomial(op, mode.degree)
    raise TypeError(f"not an evaluation mode: {mode!r}")


def pascal_matrix(x0: Scalar, size: int, mode: EvalMode) -> ScalarMatrix:
    """Lower-triangular deformed Pascal matrix: entry (i, j) is
    x0^(i-j) times the binomial (i, j) at the mode's parameter."""
    if size < 1:
        raise ValueError("size must be at least 1")
    t = resolve_mode(mode)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            if j > i:
                row.append(0)
            else:
                row.append(scalars.normalize(
                    scalars.powi(x0, i - j) * gauss_binomial(i, j, t)))
        out.append(tuple(row))
    return ScalarMatrix(out)


def fermat_matrix(size: int, mode: EvalMode) -> ScalarMatrix:
    """Symmetric deformed Fermat matrix: entry (i, j) is the binomial
    (i+j, j) at the mode's parameter, computed by the factorial-quotient
    route (so degenerate parameters raise NonInvertibleDenominator)."""
    if size < 1:
        raise ValueError("size must be at least 1")
    t = resolve_mode(mode)
    return ScalarMatrix(tuple(
        tuple(qhat.binomial_eigenvalue(i + j, j, t) for j in range(size))
        for i in range(size)))


def fermat_factorization_mismatches(size: int, mode: EvalMode) -> list[tuple]:
    """Entries where the Fermat matrix differs from its twisted
    convolution: sum over k of t^((i-k)(j-k)) (i, k) (j, k).

    The matrix side uses the factorial quotient, the sum side the
    independent recurrence; an empty list proves the factorization on
    this size at this parameter.  Returned tuples are (i, j, lhs, rhs).
    """
    t = resolve_mode(mode)
    fermat = fermat_matrix(size, mode)
    bad = []
    for i in range(size):
        for j in range(size):
            acc = scalars.zero_like(t)
            for k in range(min(i, j) + 1):
                acc = acc + (scalars.powi(t, (i - k) * (j - k))
                             * gauss_binomial(i, k, t)
                             * gauss_binomial(j, k, t))
            acc = scalars.normalize(acc)
            if acc != fermat.entry(i, j):
                bad.append((i, j, fermat.entry(i, j), acc))
    return bad


def verify_fermat_factorization(size: int, mode: EvalMode) -> bool:
    """True iff the Fermat matrix equals its twisted convolution on every
    entry of the given size, exactly."""
    return not fermat_factorization_mismatches(size, mode)


# ---------------------------------------------------------------------------
# Brute-force subspace counting over GF(2) and GF(3).
# ---------------------------------------------------------------------------

def _rref(rows: Sequence[Sequence[int]], p: int) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form over GF(p): pivots 1, zeros above and
    below, zero rows dropped, rows ordered by pivot column.  Unique per
    row space, so it canonicalizes subspaces."""
    mat = [list(row) for row in rows]
    if not mat:
        return ()
    width = len(mat[0])
    rank = 0
    for col in range(width):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col] % p:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(v * inv) % p for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(a - f * b) % p
                          for a, b in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return tuple(tuple(row) for row in mat[:rank])


def _reduce_vector(v: Sequence[int], basis: Sequence[Sequence[int]],
                   p: int) -> tuple[int, ...]:
    """Residue of v modulo the span of an echelon basis."""
    out = [c % p for c in v]
    for row in basis:
        pivot = next(i for i, c in enumerate(row) if c)
        f = out[pivot]
        if f:
            out = [(a - f * b) % p for a, b in zip(out, row)]
    return tuple(out)


def count_subspaces(qfield: int, n: int, k: int) -> int:
    """Number of k-dimensional subspaces of GF(qfield)^n, by exhaustive
    enumeration.

    Subspaces are grown one independent vector at a time: every vector of
    the space is tried against every subspace of the previous dimension,
    and the results are deduplicated by their reduced-row-echelon bases.
    No binomial formula is consulted, so the count is an independent
    oracle for Gaussian binomial evaluations.
    """
    if qfield not in (2, 3):
        raise UnsupportedField(f"subspace oracle supports GF(2) and GF(3), "
                               f"not GF({qfield})")
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if n > 4:
        raise SizeTooLarge(f"ambient dimension {n} exceeds the enumerable "
                           f"bound 4")
    if k < 0 or k > n:
        return 0
    vectors = list(itertools.product(range(qfield), repeat=n))
    level: set[tuple] = {()}
    for _ in range(k):
        grown: set[tuple] = set()
        for basis in level:
            for v in vectors:
                residue = _reduce_vector(v, basis, qfield)
                if any(residue):
                    grown.add(_rref(basis + (residue,), qfield))
        level = grown
    return len(level)


def export_matrix(matrix: ScalarMatrix, fmt: str) -> str:
    """Render a matrix as csv (one line per row, trailing newline) or as
    a JSON grid of rendered scalars."""
    if fmt == "csv":
        return "".join(
            ",".join(scalars.render(v) for v in row) + "\n"
            for row in matrix.data)
    if fmt == "json":
        return json.dumps([[scalars.render(v) for v in row]
                           for row in matrix.data])
    raise ValueError(f"unknown export format {fmt!r}")
