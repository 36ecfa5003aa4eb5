"""Roundtrip self-test over the built-in fixtures.

Each invariant is checked on every fixture; an exception counts as a failure.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field

from . import fixtures
from .canon import cross_product_check, lb_ub, td_d
from .densemat import Matrix, constant_row_sum
from .errors import LeonardError
from .exactfield import QQ
from .parray import (
    ParameterArray,
    KrawtchoukParams,
    d4_act,
    derived_identities,
    krawtchouk_array,
    orbit,
    theta_recovery_identities,
    validate,
)
from .recognize import recognize_lbub, recognize_tdd, verify_leonard_oracle
from .transition import (
    hyper_2f1,
    hyper_4phi3,
    intertwine_check,
    script_p,
    transition_matrices,
)

D4_RELATIONS = (
    (("star", "star"), ()),
    (("down", "down"), ()),
    (("ddown", "ddown"), ()),
    (("ddown", "star"), ("star", "down")),
    (("down", "star"), ("star", "ddown")),
    (("down", "ddown"), ("ddown", "down")),
)


@dataclass
class InvariantResult:
    name: str
    passed: int = 0
    failed: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failed


def default_fixtures(corrupt: bool = False) -> list:
    """(label, array, family params or None) triples."""
    out = []
    for f in (QQ, fixtures.GF13):
        for d in range(1, 7):
            out.append((f"krawtchouk d={d} {f!r}", krawtchouk_array(d, f), KrawtchoukParams(d, f)))
    qp = fixtures.qracah_params(2, QQ)
    out.append(("qracah d=2 QQ", qp.array(), qp))
    qp13 = fixtures.qracah_params(2, fixtures.GF13)
    out.append(("qracah d=2 GF(13)", qp13.array(), qp13))
    out.append(("qracah scanned d=2 QQ", fixtures.qracah_scanned_d2(), None))
    if corrupt:
        label, p, params = out[1]
        broken = ParameterArray(p.theta, p.theta_star, [0] + list(p.varphi[1:]), p.phi, p.field)
        out[1] = (label + " (corrupted)", broken, params)
    return out


def _d4(p):
    return all(d4_act(p, lhs) == d4_act(p, rhs) for lhs, rhs in D4_RELATIONS)


def _orbit_size(p):
    return len(orbit(p)) == (4 if p.d >= 1 else 1)


def _lbub_roundtrip(p):
    c = lb_ub(p)
    return recognize_lbub(c.a, c.a_star).arrays == (p,)


def _tdd_roundtrip(p):
    c = td_d(p)
    got = set(recognize_tdd(c.a, c.a_star).arrays)
    return got == {p, d4_act(p, "ddown")}


def _oracle(p):
    for c in (lb_ub(p), td_d(p)):
        if not verify_leonard_oracle(c.a, c.a_star, p.theta, p.theta_star):
            return False
    return True


def _row_sum(p):
    return constant_row_sum(td_d(p).a) == p.theta[0]


def _transition(p):
    t = transition_matrices(p)
    n = p.d + 1
    first_col = all(t.p_mat[i, 0] == 1 and t.p_star_mat[i, 0] == 1 for i in range(n))
    return first_col and t.p_mat @ t.p_star_mat == Matrix.identity(n, p.field) * t.nu


def _family(p, params):
    if params is None:
        return True
    ev = hyper_2f1 if isinstance(params, KrawtchoukParams) else hyper_4phi3
    n = p.d + 1
    return all(ev(params, i, j) == script_p(p, i, j) for i in range(n) for j in range(n))


INVARIANTS = OrderedDict(
    [
        ("validate", lambda p, _: validate(p).valid),
        ("d4_relations", lambda p, _: _d4(p)),
        ("orbit_size", lambda p, _: _orbit_size(p)),
        ("derived_identities", lambda p, _: derived_identities(p)),
        ("theta_recovery_identities", lambda p, _: theta_recovery_identities(p)),
        ("lbub_roundtrip", lambda p, _: _lbub_roundtrip(p)),
        ("tdd_roundtrip", lambda p, _: _tdd_roundtrip(p)),
        ("idempotent_oracle", lambda p, _: _oracle(p)),
        ("row_sum_theta0", lambda p, _: _row_sum(p)),
        ("cross_product", lambda p, _: cross_product_check(p)),
        ("transition_pp_star", lambda p, _: _transition(p)),
        ("intertwining", lambda p, _: intertwine_check(p)),
        ("family_evaluator", _family),
    ]
)


def run_selftest(corrupt: bool = False) -> list:
    results = []
    cases = default_fixtures(corrupt)
    for name, check in INVARIANTS.items():
        res = InvariantResult(name)
        for label, p, params in cases:
            try:
                ok = bool(check(p, params))
            except LeonardError as e:
                ok = False
                label = f"{label}: {type(e).__name__}: {e}"
            if ok:
                res.passed += 1
            else:
                res.failed.append(label)
        results.append(res)
    return results
