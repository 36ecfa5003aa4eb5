import pytest
from hypothesis import given, strategies as st

from leonard.densemat import (
    Matrix,
    ShapeReport,
    constant_row_sum,
    diag_conjugate,
    mat_ops,
    primitive_idempotents,
    shape,
)
from leonard.errors import NotMultiplicityFree, SizeMismatch, ZeroScale
from leonard.exactfield import QQ, FieldSpec

KRAW_A = Matrix([[0, 2, 0], [1, 0, 1], [0, 2, 0]], QQ)


def test_shape_examples():
    s = shape(KRAW_A)
    assert s.tridiagonal and s.irreducible_tridiagonal and not s.diagonal
    assert shape(Matrix.identity(3, QQ)) == ShapeReport(True, True, True, True, False)
    s = shape(Matrix([[1, 0], [5, 2]], QQ))
    assert s.lower_bidiagonal and not s.upper_bidiagonal and not s.diagonal


def test_constant_row_sum():
    # every row sums to theta_0 = d = 2
    assert constant_row_sum(KRAW_A) == 2
    assert constant_row_sum(Matrix.identity(2, QQ)) == 1
    assert constant_row_sum(Matrix([[1, 0], [0, 2]], QQ)) is None


def test_idempotents_diagonal_case():
    m = Matrix.diag([QQ(2), QQ(0), QQ(-2)])
    es = primitive_idempotents(m, [2, 0, -2])
    for i, e in enumerate(es):
        assert e == Matrix([[1 if r == c == i else 0 for c in range(3)] for r in range(3)], QQ)


def test_idempotents_swap():
    e0, e1 = primitive_idempotents(Matrix([[0, 1], [1, 0]], QQ), [1, -1])
    assert e0 == Matrix([["1/2", "1/2"], ["1/2", "1/2"]], QQ)
    assert e1 == Matrix([["1/2", "-1/2"], ["-1/2", "1/2"]], QQ)


def test_idempotents_reject_wrong_spectrum():
    with pytest.raises(NotMultiplicityFree):
        primitive_idempotents(Matrix([[0, 1], [0, 0]], QQ), [0, 1])
    with pytest.raises(NotMultiplicityFree):
        primitive_idempotents(KRAW_A, [2, 0, 1])
    # 2 is not an eigenvalue: E_1 = 0 satisfies m E_1 = 2 E_1 and the sum is still I
    with pytest.raises(NotMultiplicityFree):
        primitive_idempotents(Matrix.identity(2, QQ), [1, 2])


def test_mat_ops():
    i3 = Matrix.identity(3, QQ)
    assert mat_ops(i3, KRAW_A, "mul") == KRAW_A
    assert mat_ops(KRAW_A, KRAW_A, "sub").is_zero()
    assert mat_ops(KRAW_A, i3, "add")[0, 0] == 1
    with pytest.raises(SizeMismatch):
        mat_ops(i3, Matrix.identity(2, QQ), "add")


def test_diag_conjugate_examples():
    assert diag_conjugate(KRAW_A, [1, 1, 1]) == KRAW_A
    assert diag_conjugate(Matrix([[0, 2], [1, 0]], QQ), [1, 2]) == Matrix([[0, 1], [2, 0]], QQ)
    with pytest.raises(ZeroScale):
        diag_conjugate(KRAW_A, [1, 0, 1])


def test_immutability():
    with pytest.raises(AttributeError):
        KRAW_A.rows = ()


def test_prime_field_matmul():
    f = FieldSpec.prime(7)
    a = Matrix([[3, 4], [5, 6]], f)
    assert (a @ a) == Matrix([[(9 + 20) % 7, (12 + 24) % 7], [(15 + 30) % 7, (20 + 36) % 7]], f)


entries = st.integers(-5, 5)


@st.composite
def tridiagonals(draw):
    n = draw(st.integers(1, 5))
    diag = [draw(entries) for _ in range(n)]
    sub = [draw(entries) for _ in range(n - 1)]
    sup = [draw(entries) for _ in range(n - 1)]
    return Matrix.tridiagonal([QQ(x) for x in diag], sub, sup, QQ)


@given(tridiagonals(), st.lists(st.integers(1, 6), min_size=5, max_size=5))
def test_diag_conjugate_invariants(m, scales):
    c = diag_conjugate(m, scales[: m.size])
    assert c.diagonal() == m.diagonal()
    for i in range(1, m.size):
        assert c[i, i - 1] * c[i - 1, i] == m[i, i - 1] * m[i - 1, i]


@given(tridiagonals())
def test_shape_flags_consistent(m):
    s = shape(m)
    if s.diagonal:
        assert s.lower_bidiagonal and s.upper_bidiagonal
    if s.lower_bidiagonal or s.upper_bidiagonal:
        assert s.tridiagonal
    if s.irreducible_tridiagonal:
        assert s.tridiagonal


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5, unique=True), st.integers(1, 4))
def test_idempotent_identities(eigs, shift):
    # upper-triangular matrix with a distinct known spectrum
    n = len(eigs)
    m = Matrix([[eigs[i] if i == j else (shift if j == i + 1 else 0) for j in range(n)] for i in range(n)], QQ)
    es = primitive_idempotents(m, eigs)
    ident = Matrix.identity(n, QQ)
    total = Matrix.zeros(n, QQ)
    for i, e in enumerate(es):
        assert m @ e == e * eigs[i]
        for j, f in enumerate(es):
            assert e @ f == (e if i == j else Matrix.zeros(n, QQ))
        total = total + e
    assert total == ident
