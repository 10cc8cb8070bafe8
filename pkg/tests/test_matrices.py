"""Exact matrices, Pascal/Fermat constructions, the factorization check,
and the subspace-counting oracle."""

from fractions import Fraction

import pytest

from psifoc import matrices, psi
from psifoc.errors import (DimensionMismatch, NonInvertibleDenominator,
                           SizeTooLarge, UnsupportedField)
from psifoc.matrices import (EigenMode, ScalarMatrix, ScalarMode,
                             count_subspaces, export_matrix, fermat_matrix,
                             pascal_matrix, resolve_mode,
                             verify_fermat_factorization)
from psifoc.psi import classical, custom, fibonacci, gauss
from psifoc.scalars import Q, RatFunc, eval_ratfunc


def test_matrix_basics():
    m = ScalarMatrix([[1, 2], [3, 4]])
    assert m.entry(1, 0) == 3
    assert (m @ ScalarMatrix.identity(2)) == m
    assert (m - m).is_zero()
    assert m.transpose().data == ((1, 3), (2, 4))
    assert m.scale(2).data == ((2, 4), (6, 8))
    assert m.scale_rows([1, 0]).data == ((1, 2), (0, 0))
    assert m.apply([1, 1]) == (3, 7)
    with pytest.raises(DimensionMismatch):
        m @ ScalarMatrix([[1, 2]])
    with pytest.raises(ValueError):
        ScalarMatrix([[1], [2, 3]])


def test_pascal_classical():
    p = pascal_matrix(1, 3, ScalarMode(1))
    assert p.data == ((1, 0, 0), (1, 1, 0), (1, 2, 1))


def test_pascal_symbolic_entry():
    p = pascal_matrix(1, 3, ScalarMode(Q))
    assert p.entry(2, 1) == RatFunc([1, 1])


def test_pascal_x_powers():
    p = pascal_matrix(2, 3, ScalarMode(1))
    assert p.entry(2, 0) == 4


def test_pascal_row_sums():
    p = pascal_matrix(1, 9, ScalarMode(1))
    for i in range(9):
        assert sum(p.data[i]) == 2 ** i


def test_pascal_product_identity_classical_only():
    # the additive product law P[x] P[y] = P[x+y] is a classical fact;
    # it is checked here at t = 1 only, deformed t makes no such claim
    for x0, y0 in ((1, 1), (2, 3), (Fraction(1, 2), Fraction(3, 2))):
        lhs = (pascal_matrix(x0, 6, ScalarMode(1))
               @ pascal_matrix(y0, 6, ScalarMode(1)))
        assert lhs == pascal_matrix(x0 + y0, 6, ScalarMode(1))


def test_fermat_classical():
    f = fermat_matrix(3, ScalarMode(1))
    assert f.data == ((1, 1, 1), (1, 2, 3), (1, 3, 6))


def test_fermat_symbolic_entry():
    f = fermat_matrix(2, ScalarMode(Q))
    assert f.entry(1, 1) == RatFunc([1, 1])


def test_fermat_eigen_fibonacci():
    # eigenvalue at degree 4 is 4/3, so the (1,1) entry is 1 + 4/3
    f = fermat_matrix(2, EigenMode(fibonacci(), 4))
    assert f.entry(1, 1) == Fraction(7, 3)


def test_fermat_symmetry():
    for size in (2, 5, 10):
        f = fermat_matrix(size, ScalarMode(Q))
        assert f == f.transpose()


def test_resolve_mode():
    assert resolve_mode(ScalarMode(Q)) == Q
    assert resolve_mode(EigenMode(fibonacci(), 4)) == Fraction(4, 3)
    assert resolve_mode(EigenMode(gauss(), 17)) == Q


def test_factorization_small_symbolic():
    # size 2 is the two-term case checkable by hand:
    # t + 1 = (2 1) at the (1,1) entry
    assert verify_fermat_factorization(2, ScalarMode(Q))


def test_factorization_classical():
    assert verify_fermat_factorization(6, ScalarMode(1))


def test_factorization_symbolic_size8():
    assert verify_fermat_factorization(8, ScalarMode(Q))


def test_factorization_eigen_sweep():
    for fam in (classical(), fibonacci(), gauss(Fraction(2))):
        for m in range(9):
            assert verify_fermat_factorization(8, EigenMode(fam, m)), (fam, m)


def test_fermat_degenerate_eigenvalue_raises():
    # custom table 1, 2, -1: eigenvalue -1 at degree 2 kills the
    # factorial quotient for entries needing the 2-factorial
    fam = custom([1, 2, -1, 1])
    with pytest.raises(NonInvertibleDenominator):
        fermat_matrix(3, EigenMode(fam, 2))


def test_count_subspaces_known_values():
    assert count_subspaces(2, 4, 2) == 35
    assert count_subspaces(3, 2, 1) == 4
    for q0 in (2, 3):
        for n in range(5):
            assert count_subspaces(q0, n, 0) == 1
            assert count_subspaces(q0, n, n) == 1
    assert count_subspaces(2, 3, 5) == 0
    assert count_subspaces(2, 3, -1) == 0


def test_count_subspaces_errors():
    with pytest.raises(UnsupportedField):
        count_subspaces(5, 2, 1)
    with pytest.raises(SizeTooLarge):
        count_subspaces(2, 5, 1)
    with pytest.raises(ValueError):
        count_subspaces(2, -1, 0)


def test_oracle_agrees_with_gauss_binomial():
    for q0 in (2, 3):
        for n in range(5):
            for k in range(n + 1):
                counted = count_subspaces(q0, n, k)
                evaluated = eval_ratfunc(psi.psi_binomial(gauss(), n, k), q0)
                assert counted == evaluated, (q0, n, k)


def test_export_csv():
    assert export_matrix(ScalarMatrix.identity(1), "csv") == "1\n"
    assert export_matrix(fermat_matrix(2, ScalarMode(1)), "csv") == "1,1\n1,2\n"


def test_export_json():
    text = export_matrix(fermat_matrix(2, ScalarMode(Q)), "json")
    assert '"1 + q"' in text
    assert text == '[["1", "1"], ["1", "1 + q"]]'


def test_export_unknown_format():
    with pytest.raises(ValueError):
        export_matrix(ScalarMatrix.identity(1), "xml")
