"""Diagonal mutator operators on the truncated monomial basis.

For a weight family the mutator operator multiplies the degree-m monomial
by lambda_m = ((m+1)_psi - 1) / m_psi.  Every operator built from it here
(operator integers, factorials, binomial symbols) is again diagonal on
monomials, so operators are stored as eigenvalue tables and all algebra is
pointwise.  That makes operator identities exhaustively checkable: an
identity of diagonal operators holds iff it holds at every eigenvalue.

The degree-0 eigenvalue of the defining formula is 0/0; by convention it
is set to the degree-1 eigenvalue, which keeps the Gauss family exactly
constant.  The dilation operator (x^m goes to q0^m x^m) is provided under
its own name; it is a different operator from the mutator and is what the
multiplication-operator realization in :mod:`psifoc.qplane` uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import json

from . import scalars
from .errors import (DegreeOutOfRange, DimensionMismatch,
                     NonInvertibleDenominator)
from .psi import PsiFamily, psi_int
from .scalars import Scalar


@dataclass(frozen=True)
class DiagOperator:
    """Operator sending x^m to eigenvalues[m] * x^m for 0 <= m <= n_trunc.

    Sums add eigenvalues pointwise, composition multiplies them pointwise,
    and powers are pointwise powers; all three stay diagonal.
    """

    eigenvalues: tuple[Scalar, ...]

    @property
    def n_trunc(self) -> int:
        return len(self.eigenvalues) - 1

    def _check_shape(self, other: "DiagOperator") -> None:
        if len(self.eigenvalues) != len(other.eigenvalues):
            raise DimensionMismatch(
                f"operators truncated at degrees {self.n_trunc} and "
                f"{other.n_trunc}")

    def __add__(self, other: "DiagOperator") -> "DiagOperator":
        if not isinstance(other, DiagOperator):
            return NotImplemented
        self._check_shape(other)
        return DiagOperator(tuple(
            scalars.normalize(a + b)
            for a, b in zip(self.eigenvalues, other.eigenvalues)))

    def __mul__(self, other: "DiagOperator") -> "DiagOperator":
        if not isinstance(other, DiagOperator):
            return NotImplemented
        self._check_shape(other)
        return DiagOperator(tuple(
            scalars.normalize(a * b)
            for a, b in zip(self.eigenvalues, other.eigenvalues)))

    def __pow__(self, n: int) -> "DiagOperator":
        if not isinstance(n, int):
            return NotImplemented
        return DiagOperator(tuple(scalars.powi(v, n)
                                  for v in self.eigenvalues))

    def to_json(self, pretty: bool = False) -> str:
        entries = [{"degree": m, "eigenvalue": scalars.render(v)}
                   for m, v in enumerate(self.eigenvalues)]
        return json.dumps(entries, indent=2 if pretty else None)

    def __repr__(self):
        body = ", ".join(scalars.render(v) for v in self.eigenvalues)
        return f"DiagOperator([{body}])"


def identity_like(op: DiagOperator) -> DiagOperator:
    one = scalars.one_like(op.eigenvalues[0])
    return DiagOperator((one,) * len(op.eigenvalues))


def zero_like(op: DiagOperator) -> DiagOperator:
    zero = scalars.zero_like(op.eigenvalues[0])
    return DiagOperator((zero,) * len(op.eigenvalues))


def qhat_operator(fam: PsiFamily, n_trunc: int) -> DiagOperator:
    """Mutator operator of a family, truncated at the given degree."""
    if n_trunc < 0:
        raise ValueError("truncation degree must be nonnegative")
    one = scalars.one_like(psi_int(fam, 1))
    values = []
    for m in range(1, n_trunc + 1):
        values.append(scalars.div(scalars.sub(psi_int(fam, m + 1), one),
                                  psi_int(fam, m)))
    if not values:
        values.append(scalars.div(scalars.sub(psi_int(fam, 2), one),
                                  psi_int(fam, 1)))
        return DiagOperator((values[0],))
    # degree 0 would be 0/0; reuse the degree-1 eigenvalue
    return DiagOperator((values[0],) + tuple(values))


def dilation_operator(q0: Scalar, n_trunc: int) -> DiagOperator:
    """Scaling substitution x -> q0*x on monomials: x^m gets q0^m."""
    if n_trunc < 0:
        raise ValueError("truncation degree must be nonnegative")
    return DiagOperator(tuple(scalars.powi(q0, m) for m in range(n_trunc + 1)))


@lru_cache(maxsize=None)
def geometric_sum(lam: Scalar, n: int) -> Scalar:
    """Sum of lam^j for j < n, evaluated term by term.

    The closed form (1 - lam^n)/(1 - lam) is singular at lam = 1, which
    occurs for every degree of the classical family; the explicit sum is
    total.
    """
    if n < 0:
        raise ValueError("geometric_sum requires n >= 0")
    acc = scalars.zero_like(lam)
    power = scalars.one_like(lam)
    for j in range(n):
        if j:
            power = power * lam
        acc = acc + power
    return scalars.normalize(acc)


@lru_cache(maxsize=None)
def _geometric_factorial(lam: Scalar, n: int) -> Scalar:
    acc = scalars.one_like(lam)
    for j in range(1, n + 1):
        acc = acc * geometric_sum(lam, j)
    return scalars.normalize(acc)


@lru_cache(maxsize=None)
def _binomial_eigenvalue(n: int, k: int, lam: Scalar) -> Scalar | None:
    denominator = _geometric_factorial(lam, k) * _geometric_factorial(lam, n - k)
    if denominator == 0:
        return None
    return scalars.div(_geometric_factorial(lam, n),
                       scalars.normalize(denominator))


def binomial_eigenvalue(n: int, k: int, lam: Scalar) -> Scalar:
    """Operator binomial symbol evaluated at one eigenvalue: the quotient
    of geometric-sum factorials.  Where defined it equals the Gaussian
    binomial at t = lam; where a factorial in the denominator vanishes
    (lam a root of unity pattern) it raises, by design; the recurrence
    form in :func:`psifoc.psi.gauss_binomial` is the total companion."""
    if k < 0 or k > n:
        return scalars.zero_like(lam)
    value = _binomial_eigenvalue(n, k, lam)
    if value is None:
        raise NonInvertibleDenominator(
            f"binomial symbol ({n} {k}) has vanishing denominator at "
            f"eigenvalue {scalars.render(lam)}")
    return value


def op_integer(n: int, op: DiagOperator) -> DiagOperator:
    """Operator integer: geometric sum of the first n powers of op."""
    if n < 0:
        raise ValueError("op_integer requires n >= 0")
    return DiagOperator(tuple(geometric_sum(lam, n)
                              for lam in op.eigenvalues))


def op_factorial(n: int, op: DiagOperator) -> DiagOperator:
    """Pointwise product of op_integer(j, op) for j = 1..n; empty is the
    identity."""
    if n < 0:
        raise ValueError("op_factorial requires n >= 0")
    return DiagOperator(tuple(_geometric_factorial(lam, n)
                              for lam in op.eigenvalues))


def op_binomial(n: int, k: int, op: DiagOperator) -> DiagOperator:
    """Operator binomial symbol: factorial quotient, degree by degree.

    Returns the zero operator outside 0 <= k <= n.  Raises
    NonInvertibleDenominator naming the offending degree when a
    denominator eigenvalue vanishes.
    """
    if n < 0:
        raise ValueError("op_binomial requires n >= 0")
    if k < 0 or k > n:
        return zero_like(op)
    values = []
    for m, lam in enumerate(op.eigenvalues):
        value = _binomial_eigenvalue(n, k, lam)
        if value is None:
            raise NonInvertibleDenominator(
                f"binomial symbol ({n} {k}) has vanishing denominator at "
                f"degree {m} (eigenvalue {scalars.render(lam)})", degree=m)
        values.append(value)
    return DiagOperator(tuple(values))


def eval_on_monomial(op: DiagOperator, m: int) -> Scalar:
    """Eigenvalue of the operator on the degree-m monomial."""
    if m < 0 or m > op.n_trunc:
        raise DegreeOutOfRange(
            f"degree {m} outside truncation 0..{op.n_trunc}")
    return op.eigenvalues[m]


def qhat_mutator(a, b, op: DiagOperator):
    """Mutator combination of two matrices: a@b - op applied after b@a.

    ``a`` and ``b`` are square matrices over the same truncated basis as
    ``op`` (anything exposing rows, cols, __matmul__, __sub__ and
    scale_rows); vanishing of the result says the matrices are muting
    variables for the operator.
    """
    if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
        raise DimensionMismatch(
            f"mutator needs square matrices of equal size, got "
            f"{a.rows}x{a.cols} and {b.rows}x{b.cols}")
    if a.rows != len(op.eigenvalues):
        raise DimensionMismatch(
            f"matrix size {a.rows} does not match operator truncated at "
            f"degree {op.n_trunc}")
    return (a @ b) - (b @ a).scale_rows(op.eigenvalues)
