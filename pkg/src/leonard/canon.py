"""Canonical matrix realizations of a parameter array.

``lb_ub`` gives the lower-bidiagonal / upper-bidiagonal pair and ``td_d``
the tridiagonal / diagonal pair. ``td_diagonal_entry`` and
``td_offdiagonal_product`` are the closed forms recognition checks against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .densemat import Matrix, constant_row_sum, shape
from .errors import InvalidInput
from .exactfield import Scalar
from .parray import ParameterArray, require_valid

LBUB = "lbub"
TDD = "tdd"


@dataclass(frozen=True)
class CanonicalPair:
    a: Matrix
    a_star: Matrix
    form: str
    source: ParameterArray


def lb_matrix(p: ParameterArray) -> Matrix:
    d = p.d
    return Matrix.tridiagonal(list(p.theta), [1] * d, [0] * d, p.field)


def ub_matrix(p: ParameterArray) -> Matrix:
    d = p.d
    return Matrix.tridiagonal(list(p.theta_star), [0] * d, list(p.varphi), p.field)


def lb_ub(p: ParameterArray) -> CanonicalPair:
    require_valid(p)
    return CanonicalPair(lb_matrix(p), ub_matrix(p), LBUB, p)


def td_diagonal_entry(p: ParameterArray, i: int) -> Scalar:
    """theta_i + varphi_i/(ts_i - ts_{i-1}) + varphi_{i+1}/(ts_i - ts_{i+1}), boundary terms dropped."""
    ts = p.theta_star
    out = p.theta[i]
    if i >= 1:
        out += p.vp(i) / (ts[i] - ts[i - 1])
    if i < p.d:
        out += p.vp(i + 1) / (ts[i] - ts[i + 1])
    return out


def _prod(values, one):
    out = one
    for v in values:
        out *= v
    return out


def td_superdiagonal(p: ParameterArray, i: int) -> Scalar:
    """Entry (i-1, i) of the tridiagonal canonical matrix, 1 <= i <= d."""
    ts, one = p.theta_star, p.field.one
    num = _prod((ts[i - 1] - ts[h] for h in range(i - 1)), one)
    den = _prod((ts[i] - ts[h] for h in range(i)), one)
    return p.vp(i) * num / den


def td_subdiagonal(p: ParameterArray, i: int) -> Scalar:
    """Entry (i, i-1) of the tridiagonal canonical matrix, 1 <= i <= d."""
    ts, d, one = p.theta_star, p.d, p.field.one
    num = _prod((ts[i] - ts[h] for h in range(i + 1, d + 1)), one)
    den = _prod((ts[i - 1] - ts[h] for h in range(i, d + 1)), one)
    return p.ph(i) * num / den


def td_offdiagonal_product(p: ParameterArray, i: int) -> Scalar:
    """Right-hand side of the cross-product condition, written out independently
    of the sub/superdiagonal split: varphi_i phi_i times the four theta* products."""
    ts, d, one = p.theta_star, p.d, p.field.one
    left = _prod((ts[i - 1] - ts[h] for h in range(i - 1)), one) / _prod(
        (ts[i] - ts[h] for h in range(i)), one
    )
    right = _prod((ts[i] - ts[h] for h in range(i + 1, d + 1)), one) / _prod(
        (ts[i - 1] - ts[h] for h in range(i, d + 1)), one
    )
    return p.vp(i) * p.ph(i) * left * right


def t_matrix(p: ParameterArray) -> Matrix:
    d = p.d
    return Matrix.tridiagonal(
        [td_diagonal_entry(p, i) for i in range(d + 1)],
        [td_subdiagonal(p, i) for i in range(1, d + 1)],
        [td_superdiagonal(p, i) for i in range(1, d + 1)],
        p.field,
    )


def d_matrix(p: ParameterArray) -> Matrix:
    return Matrix.diag(list(p.theta_star), p.field)


def td_d(p: ParameterArray) -> CanonicalPair:
    require_valid(p)
    return CanonicalPair(t_matrix(p), d_matrix(p), TDD, p)


def is_lbub_canonical(a: Matrix, a_star: Matrix) -> bool:
    """Shape-only test: a lower bidiagonal with unit subdiagonal, a_star upper bidiagonal."""
    if a.size != a_star.size or a.field != a_star.field:
        return False
    if not (shape(a).lower_bidiagonal and shape(a_star).upper_bidiagonal):
        return False
    return all(a[i, i - 1] == 1 for i in range(1, a.size))


def is_tdd_canonical_shape(a: Matrix, a_star: Matrix) -> bool:
    """Shape-only test: a tridiagonal with a constant row sum, a_star diagonal with distinct entries."""
    if a.size != a_star.size or a.field != a_star.field:
        return False
    if not (shape(a).tridiagonal and shape(a_star).diagonal):
        return False
    diag = a_star.diagonal()
    return len(set(diag)) == len(diag) and constant_row_sum(a) is not None


def cross_product_check(p: ParameterArray) -> bool:
    require_valid(p)
    if p.d < 1:
        raise InvalidInput("cross product check needs d >= 1")
    t = t_matrix(p)
    return all(t[i, i - 1] * t[i - 1, i] == td_offdiagonal_product(p, i) for i in range(1, p.d + 1))
