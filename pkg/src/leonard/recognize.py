"""Decide whether a matrix pair is a Leonard pair and recover its parameter arrays.

Two input shapes are supported:

* ``recognize_lbub``: ``a`` lower bidiagonal, ``a_star`` upper bidiagonal.
  The array is read straight off the entries.
* ``recognize_tdd``: ``a`` tridiagonal, ``a_star`` diagonal. ``theta_0`` and
  ``theta_d`` are the roots of a quadratic; everything else follows by
  rational recursions. Both root orderings are tried.

``verify_leonard_oracle`` is an independent check built from primitive
idempotents; it shares no code with the recognition procedures beyond
matrix arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .canon import td_diagonal_entry, td_offdiagonal_product
from .densemat import Matrix, constant_row_sum, raw_idempotents, shape
from .errors import FieldMismatch, SizeMismatch
from .exactfield import Scalar, solve_quadratic_in_field
from .parray import ParameterArray, validate, vartheta

BAD_SHAPE = "BadShape"
REPEATED_DUAL_EIGENVALUE = "RepeatedDualEigenvalue"
QUADRATIC_NO_ROOTS = "QuadraticNoRootsInField"
QUADRATIC_DOUBLE_ROOT = "QuadraticDoubleRoot"
RECURSION_INCONSISTENT = "RecursionInconsistent"
VALIDATION_FAILED = "ValidationFailed"
ENTRY_MISMATCH = "EntryMismatch"
ZERO_OFFDIAGONAL = "ZeroOffdiagonal"

# later stages win when the two root orderings fail differently
_STAGE = {RECURSION_INCONSISTENT: 0, VALIDATION_FAILED: 1, ENTRY_MISMATCH: 2}


@dataclass(frozen=True)
class RecognitionReport:
    arrays: tuple = ()
    reject_reason: Optional[str] = None
    detail: str = ""

    @property
    def accepted(self) -> bool:
        return bool(self.arrays)


@dataclass(frozen=True)
class RecognitionWork:
    epsilon: Scalar
    alpha: Scalar
    vartheta: tuple


def _reject(reason, detail=""):
    return RecognitionReport((), reason, detail)


def _check_pair(a: Matrix, a_star: Matrix):
    if a.field != a_star.field:
        raise FieldMismatch(f"{a.field!r} vs {a_star.field!r}")
    if a.size != a_star.size:
        raise SizeMismatch(f"{a.size} vs {a_star.size}")


def recognize_lbub(a: Matrix, a_star: Matrix) -> RecognitionReport:
    _check_pair(a, a_star)
    if not (shape(a).lower_bidiagonal and shape(a_star).upper_bidiagonal):
        return _reject(BAD_SHAPE, "need a lower bidiagonal and a_star upper bidiagonal")
    d = a.d
    theta = a.diagonal()
    theta_star = a_star.diagonal()
    varphi = [a[i, i - 1] * a_star[i - 1, i] for i in range(1, d + 1)]
    for i, v in enumerate(varphi, start=1):
        if v.is_zero():
            return _reject(ZERO_OFFDIAGONAL, f"a[{i},{i-1}] * a_star[{i-1},{i}] = 0")
    if d >= 1 and theta[0] == theta[d]:
        return _reject(VALIDATION_FAILED, "theta_0 = theta_d")
    phi = []
    for i in range(1, d + 1):
        s = sum(((theta[h] - theta[d - h]) / (theta[0] - theta[d]) for h in range(i)), a.field.zero)
        phi.append(varphi[0] * s + (theta_star[i] - theta_star[0]) * (theta[d - i + 1] - theta[0]))
    p = ParameterArray(theta, theta_star, varphi, phi, a.field)
    report = validate(p)
    if not report.valid:
        v = report.violations[0]
        return _reject(VALIDATION_FAILED, f"({v.condition}) {v.detail}")
    return RecognitionReport((p,))


def compute_eps_alpha(a: Matrix, theta_star: Sequence[Scalar]) -> RecognitionWork:
    """The scalars epsilon, alpha defining the quadratic whose roots are theta_0, theta_d."""
    d = a.d
    ts = [a.field(x) for x in theta_star]
    if d < 1:
        raise ValueError("needs d >= 1")
    if len(ts) != d + 1:
        raise SizeMismatch(f"need {d + 1} dual eigenvalues")
    if len(set(ts)) != d + 1:
        raise ValueError(REPEATED_DUAL_EIGENVALUE)
    if d == 1:
        eps, alpha = a.field.one, a[1, 1]
    else:
        eps = a.field.one
        for h in range(2, d + 1):
            eps *= (ts[1] - ts[h]) / (ts[0] - ts[h])
        c = (ts[0] - ts[1]) / ((ts[0] - ts[2]) * (ts[0] - ts[d]))
        alpha = (
            a[1, 1] * (ts[1] - ts[2]) / (ts[0] - ts[2])
            - a[0, 0] * (ts[1] - ts[d]) * c
            + a[d, d] * (ts[d - 1] - ts[d]) * c
        )
    return RecognitionWork(eps, alpha, vartheta(ts))


def quadratic_coefficients(a: Matrix, work: RecognitionWork) -> tuple:
    """(1, b, c) for (x - a00)(x - alpha/eps) - a10 a01 / eps."""
    r = work.alpha / work.epsilon
    a00 = a[0, 0]
    return a.field.one, -(a00 + r), a00 * r - a[1, 0] * a[0, 1] / work.epsilon


def _array_for_ordering(a, ts, work, th0, thd):
    """Run the recovery procedure for one ordering of the two roots.

    Returns (array, None) or (None, (reason, detail)).
    """
    d = a.d
    vt = work.vartheta
    a00, add = a[0, 0], a[d, d]
    vp = [None] * (d + 1)
    ph = [None] * (d + 1)
    vp[1] = (a00 - th0) * (ts[0] - ts[1])
    vp[d] = (add - thd) * (ts[d] - ts[d - 1])
    ph[1] = (a00 - thd) * (ts[0] - ts[1])
    ph[d] = (add - th0) * (ts[d] - ts[d - 1])

    def top(i):
        return (vp[i] - ph[d] * vt[i]) / (ts[i - 1] - ts[d])

    # varphi_{i+1} from varphi_i; the last step (i = d-1) must reproduce varphi_d
    for i in range(1, d):
        nxt = ph[1] * vt[i + 1] + (ts[i + 1] - ts[0]) * (top(i) + th0 - thd)
        if i + 1 < d:
            vp[i + 1] = nxt
        elif nxt != vp[d]:
            return None, (RECURSION_INCONSISTENT, f"recursion gives varphi_{d} = {nxt}, ends give {vp[d]}")

    theta = [th0] + [th0 + top(i) for i in range(1, d)] + [thd]
    for i in range(2, d):
        s = sum(((theta[h] - theta[d - h]) / (th0 - thd) for h in range(i)), a.field.zero)
        ph[i] = vp[1] * s + (ts[i] - ts[0]) * (theta[d - i + 1] - th0)

    p = ParameterArray(theta, ts, vp[1:], ph[1:], a.field)
    report = validate(p)
    if not report.valid:
        v = report.violations[0]
        return None, (VALIDATION_FAILED, f"({v.condition}) {v.detail}")
    for i in range(d + 1):
        if a[i, i] != td_diagonal_entry(p, i):
            return None, (ENTRY_MISMATCH, f"diagonal entry {i}")
    for i in range(1, d + 1):
        if a[i, i - 1] * a[i - 1, i] != td_offdiagonal_product(p, i):
            return None, (ENTRY_MISMATCH, f"off-diagonal product at {i}")
    return p, None


def recognize_tdd(a: Matrix, a_star: Matrix) -> RecognitionReport:
    _check_pair(a, a_star)
    if not (shape(a).tridiagonal and shape(a_star).diagonal):
        return _reject(BAD_SHAPE, "need a tridiagonal and a_star diagonal")
    ts = list(a_star.diagonal())
    if len(set(ts)) != len(ts):
        return _reject(REPEATED_DUAL_EIGENVALUE)
    d = a.d
    if d == 0:
        return RecognitionReport((ParameterArray([a[0, 0]], ts, [], [], a.field),))

    work = compute_eps_alpha(a, ts)
    roots = solve_quadratic_in_field(*quadratic_coefficients(a, work))
    if not roots:
        return _reject(QUADRATIC_NO_ROOTS)
    if len(roots) == 1:
        return _reject(QUADRATIC_DOUBLE_ROOT, f"double root {roots[0]}")

    found, failures = [], []
    r0, r1 = roots
    for th0, thd in ((r0, r1), (r1, r0)):
        p, why = _array_for_ordering(a, ts, work, th0, thd)
        if p is None:
            failures.append(why)
        else:
            found.append(p)
    if found:
        row_sum = constant_row_sum(a)
        found.sort(key=lambda p: p.theta[0] != row_sum)
        return RecognitionReport(tuple(found))
    reason, detail = max(failures, key=lambda f: _STAGE[f[0]])
    return _reject(reason, detail)


def _rank_one(e, p):
    """(u, v) with e = u v^T, for a nonzero rank-one raw matrix e."""
    n = len(e)
    r, c = next((r, c) for r in range(n) for c in range(n) if e[r][c] != 0)
    inv = 1 / e[r][c] if p is None else pow(e[r][c], -1, p)
    u = [e[k][c] for k in range(n)]
    v = [e[r][k] * inv if p is None else e[r][k] * inv % p for k in range(n)]
    return u, v


def _pattern_ok(es, x: Matrix) -> bool:
    # E_i x E_j = u_i (v_i^T x u_j) v_j^T, so only the middle scalar matters
    n, p, xr = len(es), x.field.p, x.raw()
    factors = [_rank_one(e, p) for e in es]
    for i in range(n):
        vx = [sum(factors[i][1][k] * xr[k][c] for k in range(n)) for c in range(n)]
        for j in range(n):
            s = sum(a * b for a, b in zip(vx, factors[j][0]))
            zero = s == 0 if p is None else s % p == 0
            if abs(i - j) > 1 and not zero:
                return False
            if abs(i - j) == 1 and zero:
                return False
    return True


def verify_leonard_oracle(a: Matrix, a_star: Matrix, theta, theta_star) -> bool:
    """Idempotent-sequence test: E_i a_star E_j and E*_i a E*_j vanish iff |i - j| > 1.

    Raises NotMultiplicityFree if ``theta`` / ``theta_star`` are not the spectra.
    """
    _check_pair(a, a_star)
    es = raw_idempotents(a, theta)
    es_star = raw_idempotents(a_star, theta_star)
    return _pattern_ok(es, a_star) and _pattern_ok(es_star, a)
