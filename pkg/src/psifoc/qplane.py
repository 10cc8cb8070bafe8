"""Quantum-plane polynomials and the identity verifiers built on them.

The quantum plane is the algebra generated by x and y with the rewriting
rule y x = t * x y for a deformation scalar t.  Polynomials are stored in
normal form (all x powers left of all y powers), so multiplication is a
bilinear rewrite: y^l x^k becomes t^(k*l) x^k y^l.

Verifiers in this module reduce operator claims to exhaustively checkable
scalar claims through diagonal functional calculus: a diagonal-operator
identity holds iff it holds at every eigenvalue.  Each verifier pairs the
code path under test with an independent oracle:

* the deformed binomial theorem: quantum-plane powers of x + y against
  the recurrence-computed Gaussian binomials;
* the twisted Cauchy convolution, both for a scalar parameter and for a
  family's mutator operator (the operator route goes through factorial
  quotients, the scalar route through the recurrence);
* the multiplication-operator realization of the defining relation;
* the ordered expansion of (A + B)^n for a general weight family, which
  reports coefficient mismatches rather than asserting them away, since
  for non-constant eigenvalue families the two sides genuinely differ.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from . import qhat, scalars
from .errors import DeformationMismatch
from .matrices import ScalarMatrix
from .psi import PsiFamily, family_one, gauss_binomial
from .qhat import (DiagOperator, eval_on_monomial, op_binomial,
                   qhat_operator)
from .scalars import Q, Scalar


class QPlanePoly:
    """Normal-form polynomial over the quantum plane y x = t * x y.

    Immutable by convention; all operations return fresh values.
    """

    __slots__ = ("t", "coeffs")

    def __init__(self, t: Scalar, coeffs: Mapping[tuple[int, int], Scalar]):
        pruned = {}
        for key, value in coeffs.items():
            value = scalars.normalize(value)
            if value != 0:
                pruned[key] = value
        self.t = t
        self.coeffs = pruned

    @classmethod
    def zero(cls, t: Scalar) -> "QPlanePoly":
        return cls(t, {})

    @classmethod
    def one(cls, t: Scalar) -> "QPlanePoly":
        return cls(t, {(0, 0): scalars.one_like(t)})

    @classmethod
    def x(cls, t: Scalar) -> "QPlanePoly":
        return cls(t, {(1, 0): scalars.one_like(t)})

    @classmethod
    def y(cls, t: Scalar) -> "QPlanePoly":
        return cls(t, {(0, 1): scalars.one_like(t)})

    @classmethod
    def x_plus_y(cls, t: Scalar) -> "QPlanePoly":
        one = scalars.one_like(t)
        return cls(t, {(1, 0): one, (0, 1): one})

    def coefficient(self, xdeg: int, ydeg: int) -> Scalar:
        return self.coeffs.get((xdeg, ydeg), 0)

    def terms(self):
        for key in sorted(self.coeffs):
            yield key[0], key[1], self.coeffs[key]

    def _check_t(self, other: "QPlanePoly") -> None:
        if self.t != other.t:
            raise DeformationMismatch(
                f"deformations {scalars.render(self.t)} and "
                f"{scalars.render(other.t)} differ")

    def __add__(self, other: "QPlanePoly") -> "QPlanePoly":
        if not isinstance(other, QPlanePoly):
            return NotImplemented
        self._check_t(other)
        acc = dict(self.coeffs)
        for key, value in other.coeffs.items():
            acc[key] = acc.get(key, 0) + value
        return QPlanePoly(self.t, acc)

    def __mul__(self, other: "QPlanePoly") -> "QPlanePoly":
        if not isinstance(other, QPlanePoly):
            return NotImplemented
        self._check_t(other)
        acc: dict[tuple[int, int], Scalar] = {}
        for (k1, l1), c1 in self.coeffs.items():
            for (k2, l2), c2 in other.coeffs.items():
                # commute y^l1 past x^k2: one factor of t per swap
                twist = scalars.powi(self.t, l1 * k2)
                key = (k1 + k2, l1 + l2)
                acc[key] = acc.get(key, 0) + c1 * c2 * twist
        return QPlanePoly(self.t, acc)

    def __pow__(self, n: int) -> "QPlanePoly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("quantum-plane powers take nonnegative "
                             "exponents")
        result = QPlanePoly.one(self.t)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, QPlanePoly):
            return NotImplemented
        return self.t == other.t and self.coeffs == other.coeffs

    def __repr__(self):
        body = " + ".join(f"({scalars.render(c)})*x^{k}*y^{l}"
                          for k, l, c in self.terms())
        return body or "0"


def qp_mul(a: QPlanePoly, b: QPlanePoly) -> QPlanePoly:
    """Product in the quantum plane; requires equal deformations."""
    return a * b


def qp_power(base: QPlanePoly, n: int) -> QPlanePoly:
    """Repeated quantum-plane product; the empty power is one."""
    return base ** n


@dataclass
class Report:
    """Outcome of a verifier: parameters, verdict, mismatch table."""

    params: dict
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self, pretty: bool = False) -> str:
        payload = {"params": self.params, "verdict": self.verdict,
                   "mismatches": self.mismatches}
        return json.dumps(payload, indent=2 if pretty else None)


def verify_gauss_binomial_theorem(n_max: int) -> Report:
    """Expand (x + y)^n on the symbolic quantum plane for every n up to
    n_max and compare each coefficient of x^k y^(n-k) with the
    independently computed Gaussian binomial."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    report = Report({"check": "binomial-theorem", "n_max": n_max})
    base = QPlanePoly.x_plus_y(Q)
    power = QPlanePoly.one(Q)
    for n in range(n_max + 1):
        expected_keys = {(k, n - k) for k in range(n + 1)}
        for k in range(n + 1):
            lhs = power.coefficient(k, n - k)
            rhs = gauss_binomial(n, k, Q)
            if lhs != rhs:
                report.mismatches.append({
                    "n": n, "monomial": f"x^{k}*y^{n - k}",
                    "lhs": scalars.render(lhs),
                    "rhs": scalars.render(rhs)})
        for key in set(power.coeffs) - expected_keys:
            report.mismatches.append({
                "n": n, "monomial": f"x^{key[0]}*y^{key[1]}",
                "lhs": scalars.render(power.coefficient(*key)),
                "rhs": "0"})
        power = power * base
    return report


def _cauchy_k_range(r: int, s: int, j: int) -> range:
    # outside max(0, j-s) <= k <= min(r, j) a binomial factor vanishes
    return range(max(0, j - s), min(r, j) + 1)


def verify_cauchy_scalar(r: int, s: int, j: int, t: Scalar) -> bool:
    """Twisted convolution identity at a scalar parameter: the sum over k
    of t^((r-k)(j-k)) (r, k) (s, j-k) equals (r+s, j), exactly."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    total = scalars.zero_like(t)
    for k in _cauchy_k_range(r, s, j):
        total = total + (scalars.powi(t, (r - k) * (j - k))
                         * gauss_binomial(r, k, t)
                         * gauss_binomial(s, j - k, t))
    return scalars.normalize(total) == gauss_binomial(r + s, j, t)


def verify_cauchy_operator(fam: PsiFamily, r: int, s: int, j: int,
                           maxdeg: int) -> Report:
    """Twisted convolution identity for a family's mutator operator.

    Both sides are assembled as diagonal operators (powers of the mutator
    and operator binomial symbols) and compared eigenvalue by eigenvalue
    for every monomial degree up to maxdeg.  Degenerate eigenvalues
    propagate NonInvertibleDenominator with the offending degree.
    """
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    mutator = qhat_operator(fam, maxdeg)
    lhs = qhat.zero_like(mutator)
    for k in _cauchy_k_range(r, s, j):
        term = (mutator ** ((r - k) * (j - k))
                * op_binomial(r, k, mutator)
                * op_binomial(s, j - k, mutator))
        lhs = lhs + term
    rhs = op_binomial(r + s, j, mutator)
    report = Report({"check": "cauchy-operator", "family": fam.label,
                     "r": r, "s": s, "j": j, "maxdeg": maxdeg})
    for m in range(maxdeg + 1):
        left = eval_on_monomial(lhs, m)
        right = eval_on_monomial(rhs, m)
        if left != right:
            report.mismatches.append({
                "degree": m, "lhs": scalars.render(left),
                "rhs": scalars.render(right)})
    return report


@dataclass(frozen=True)
class OpRealization:
    """Multiplication-by-x and weighted y-shift operators on the basis of
    monomials x^a y^b with a + b <= n, as matrices.

    Both operators raise total degree by one, so they annihilate the top
    layer; comparisons must restrict to input degrees below n.
    """

    n: int
    basis: tuple[tuple[int, int], ...]
    a: ScalarMatrix
    b: ScalarMatrix

    def index(self, xdeg: int, ydeg: int) -> int:
        return self.basis.index((xdeg, ydeg))


def _graded_basis(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((a, total - a)
                 for total in range(n + 1) for a in range(total + 1))


def _weighted_realization(weights: list[Scalar], n: int) -> OpRealization:
    """A = multiplication by x; B sends x^a y^b to weights[a] x^a y^(b+1).

    With weights[a] equal to the product of the first a mutator
    eigenvalues this is the unique diagonal-weight pair satisfying
    B A = (mutator by x-degree) A B.
    """
    basis = _graded_basis(n)
    pos = {m: i for i, m in enumerate(basis)}
    size = len(basis)
    a_grid = [[0] * size for _ in range(size)]
    b_grid = [[0] * size for _ in range(size)]
    for col, (xd, yd) in enumerate(basis):
        if xd + yd + 1 <= n:
            a_grid[pos[(xd + 1, yd)]][col] = 1
            b_grid[pos[(xd, yd + 1)]][col] = weights[xd]
    return OpRealization(n, basis, ScalarMatrix(a_grid), ScalarMatrix(b_grid))


def realization(q0: Scalar, n: int) -> OpRealization:
    """The dilation realization: B is y times the substitution x -> q0*x,
    so its weight at x-degree a is the dilation eigenvalue q0^a."""
    if n < 1:
        raise ValueError("truncation must be at least 1")
    weights = qhat.dilation_operator(q0, n).eigenvalues
    return _weighted_realization(list(weights), n)


def realization_check(q0: Scalar, n: int) -> bool:
    """Whether B A - q0 A B vanishes on all basis monomials of total
    degree below n, for the dilation realization at parameter q0."""
    if n < 2:
        raise ValueError("need n >= 2 to see a commutation")
    real = realization(q0, n)
    constant = DiagOperator((q0,) * len(real.basis))
    # matrix of B A - q0 A B, via the diagonal-mutator combination
    residual = qhat.qhat_mutator(real.b, real.a, constant)
    for col, (xd, yd) in enumerate(real.basis):
        if xd + yd <= n - 1:
            for row in range(len(real.basis)):
                if residual.entry(row, col) != 0:
                    return False
    return True


def explore_observation1_general(fam: PsiFamily, n: int,
                                 trunc: int | None = None) -> Report:
    """Ordered expansion of (A + B)^n for a general weight family,
    compared against the operator binomial coefficients.

    A is multiplication by x and B the weighted y-shift whose weights make
    B A = (mutator by x-degree) A B hold exactly.  The left side applies
    (A + B)^n to the constant monomial; the right side evaluates each
    operator binomial at the x-degree of its monomial.  For families with
    constant mutator eigenvalues (classical, Gauss) the two agree; for
    non-constant families they need not, and the report carries the
    mismatch table instead of asserting.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    trunc = n if trunc is None else trunc
    if trunc < n:
        raise ValueError("truncation below the expansion degree")
    mutator = qhat_operator(fam, max(trunc, 1))
    one = family_one(fam)
    weights: list[Scalar] = [one]
    for a in range(1, trunc + 1):
        weights.append(scalars.normalize(
            weights[-1] * eval_on_monomial(mutator, a)))
    real = _weighted_realization(weights, trunc)
    combined = real.a + real.b
    vector: list[Scalar] = [0] * len(real.basis)
    vector[real.index(0, 0)] = one
    state = tuple(vector)
    for _ in range(n):
        state = combined.apply(state)
    report = Report({"check": "ordered-expansion", "family": fam.label,
                     "n": n, "trunc": trunc})
    binom_cache = {k: op_binomial(n, k, mutator) for k in range(n + 1)}
    for k in range(n + 1):
        lhs = state[real.index(k, n - k)]
        rhs = eval_on_monomial(binom_cache[k], k)
        if lhs != rhs:
            report.mismatches.append({
                "monomial": f"x^{k}*y^{n - k}",
                "lhs": scalars.render(lhs),
                "rhs": scalars.render(rhs)})
    return report
