"""Transition matrices between the canonical bases of a Leonard system and its dual.

For a parameter array ``p`` the polynomial values

    P_ij = sum_n (th_i - th_0)...(th_i - th_{n-1}) (ts_j - ts_0)...(ts_j - ts_{n-1}) / (vp_1...vp_n)

give ``P[i][j] = k_j P_ij`` and ``Pstar[i][j] = kstar_j P_ji`` with ``P Pstar = nu I``.
The two example families also have hypergeometric closed forms,
evaluated here directly from (q-)Pochhammer symbols.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import t_matrix
from .densemat import Matrix
from .exactfield import Scalar
from .parray import KrawtchoukParams, ParameterArray, QRacahParams, d4_act, require_valid


def script_p(p: ParameterArray, i: int, j: int, *, full: bool = False) -> Scalar:
    """P_ij. Terms past n = min(i, j) vanish; ``full=True`` sums them anyway."""
    th, ts, f = p.theta, p.theta_star, p.field
    top = p.d if full else min(i, j)
    total = f.zero
    term_num = f.one
    term_den = f.one
    for n in range(top + 1):
        if n > 0:
            term_num *= (th[i] - th[n - 1]) * (ts[j] - ts[n - 1])
            term_den *= p.vp(n)
        total += term_num / term_den
    return total


def script_p_matrix(p: ParameterArray, *, full: bool = False) -> Matrix:
    n = p.d + 1
    return Matrix([[script_p(p, i, j, full=full) for j in range(n)] for i in range(n)], p.field)


def _prod(values, one):
    out = one
    for v in values:
        out *= v
    return out


def weights(p: ParameterArray) -> tuple:
    """Return (k, k_star, nu)."""
    require_valid(p)
    d, th, ts, one = p.d, p.theta, p.theta_star, p.field.one
    ts_top = _prod((ts[0] - ts[h] for h in range(1, d + 1)), one)
    th_top = _prod((th[0] - th[h] for h in range(1, d + 1)), one)
    k, k_star = [], []
    for j in range(d + 1):
        vp = _prod((p.vp(h) for h in range(1, j + 1)), one)
        ph = _prod((p.ph(h) for h in range(1, j + 1)), one)
        ph_rev = _prod((p.ph(d - h + 1) for h in range(1, j + 1)), one)
        ts_bottom = _prod((ts[j] - ts[h] for h in range(d + 1) if h != j), one)
        th_bottom = _prod((th[j] - th[h] for h in range(d + 1) if h != j), one)
        k.append(vp / ph * ts_top / ts_bottom)
        k_star.append(vp / ph_rev * th_top / th_bottom)
    nu = th_top * ts_top / _prod(p.phi, one)
    return tuple(k), tuple(k_star), nu


@dataclass(frozen=True)
class TransitionData:
    p_mat: Matrix
    p_star_mat: Matrix
    k: tuple
    k_star: tuple
    nu: Scalar
    source: ParameterArray


def transition_matrices(p: ParameterArray) -> TransitionData:
    k, k_star, nu = weights(p)
    sp = script_p_matrix(p)
    n = p.d + 1
    pm = Matrix([[k[j] * sp[i, j] for j in range(n)] for i in range(n)], p.field)
    psm = Matrix([[k_star[j] * sp[j, i] for j in range(n)] for i in range(n)], p.field)
    return TransitionData(pm, psm, k, k_star, nu, p)


def intertwine_check(p: ParameterArray) -> bool:
    """diag(theta) P = P T(p) and T(p*) P = P diag(theta*), p* the dual array."""
    data = transition_matrices(p)
    pm = data.p_mat
    a_flat = t_matrix(p)
    a_sharp = Matrix.diag(list(p.theta), p.field)
    a_star_flat = Matrix.diag(list(p.theta_star), p.field)
    a_star_sharp = t_matrix(d4_act(p, "star"))
    return a_sharp @ pm == pm @ a_flat and a_star_sharp @ pm == pm @ a_star_flat


def pochhammer(a: Scalar, n: int) -> Scalar:
    """(a)_n = a (a+1) ... (a+n-1)."""
    out = a.field.one
    for m in range(n):
        out *= a + m
    return out


def q_pochhammer(a: Scalar, q: Scalar, n: int) -> Scalar:
    """(a; q)_n = (1 - a)(1 - a q) ... (1 - a q^{n-1})."""
    out = a.field.one
    aq = a
    for _ in range(n):
        out *= 1 - aq
        aq = aq * q
    return out


def hyper_2f1(params: KrawtchoukParams, i: int, j: int) -> Scalar:
    """2F1(-i, -j; -d | 2) summed term by term to n = d."""
    f, d = params.field, params.d
    params.array()  # raises on a bad characteristic
    total = f.zero
    for n in range(d + 1):
        fact = pochhammer(f.one, n)
        total += pochhammer(f(-i), n) * pochhammer(f(-j), n) * f(2) ** n / (pochhammer(f(-d), n) * fact)
    return total


def hyper_4phi3(params: QRacahParams, i: int, j: int) -> Scalar:
    """4phi3(q^-i, s q^{i+1}, q^-j, s* q^{j+1}; r1 q, r2 q, q^-d | q, q) to n = d."""
    params.array()  # raises ConstraintViolated
    q, s, ss, r1, r2, d = params.q, params.s, params.s_star, params.r1, params.r2, params.d
    total = q.field.zero
    for n in range(d + 1):
        num = (
            q_pochhammer(q ** (-i), q, n)
            * q_pochhammer(s * q ** (i + 1), q, n)
            * q_pochhammer(q ** (-j), q, n)
            * q_pochhammer(ss * q ** (j + 1), q, n)
            * q**n
        )
        den = (
            q_pochhammer(r1 * q, q, n)
            * q_pochhammer(r2 * q, q, n)
            * q_pochhammer(q ** (-d), q, n)
            * q_pochhammer(q, q, n)
        )
        total += num / den
    return total
