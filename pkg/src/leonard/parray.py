"""Parameter arrays: validation, the D4 action, affine rescaling, example families.

A parameter array of diameter ``d`` is the data

    theta[0..d], theta_star[0..d], varphi[1..d], phi[1..d]

stored as Python tuples; ``varphi[0]`` in the tuple is the split-sequence
value with index 1. Use :meth:`ParameterArray.vp` / :meth:`ParameterArray.ph`
for 1-based access with the convention that indices 0 and d+1 read as zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Sequence, Union

from .errors import BadCharacteristic, ConstraintViolated, InvalidInput, ZeroScale
from .exactfield import QQ, FieldSpec, Scalar, characteristic_guard

CONDITIONS = ("I", "II", "III", "IV", "V")


@dataclass(frozen=True, eq=False)
class ParameterArray:
    theta: tuple
    theta_star: tuple
    varphi: tuple
    phi: tuple
    field: FieldSpec = QQ

    def __post_init__(self):
        conv = lambda xs: tuple(self.field(x) for x in xs)  # noqa: E731
        for name in ("theta", "theta_star", "varphi", "phi"):
            object.__setattr__(self, name, conv(getattr(self, name)))
        n = len(self.theta)
        if n == 0:
            raise ValueError("theta must be non-empty")
        if len(self.theta_star) != n or len(self.varphi) != n - 1 or len(self.phi) != n - 1:
            raise ValueError(
                f"lengths must be d+1, d+1, d, d; got {len(self.theta)}, "
                f"{len(self.theta_star)}, {len(self.varphi)}, {len(self.phi)}"
            )

    def _key(self):
        return (self.field, self.theta, self.theta_star, self.varphi, self.phi)

    def __eq__(self, other):
        if not isinstance(other, ParameterArray):
            return NotImplemented
        return self.field == other.field and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @property
    def d(self) -> int:
        return len(self.theta) - 1

    def vp(self, i: int) -> Scalar:
        """First split sequence, 1-based; zero outside 1..d."""
        return self.varphi[i - 1] if 1 <= i <= self.d else self.field.zero

    def ph(self, i: int) -> Scalar:
        """Second split sequence, 1-based; zero outside 1..d."""
        return self.phi[i - 1] if 1 <= i <= self.d else self.field.zero

    def to_strings(self) -> dict:
        return {
            "d": self.d,
            "theta": [str(x) for x in self.theta],
            "theta_star": [str(x) for x in self.theta_star],
            "varphi": [str(x) for x in self.varphi],
            "phi": [str(x) for x in self.phi],
        }

    def __repr__(self):
        s = self.to_strings()
        return (
            f"ParameterArray(theta={s['theta']}, theta_star={s['theta_star']}, "
            f"varphi={s['varphi']}, phi={s['phi']}, field={self.field!r})"
        )


@dataclass(frozen=True)
class Violation:
    condition: str
    index: Optional[int]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()
    unevaluated: tuple = dc_field(default=())

    @property
    def valid(self) -> bool:
        return not self.violations


def _telescoping(theta: Sequence[Scalar], i: int) -> Scalar:
    """sum_{h=0}^{i-1} (theta_h - theta_{d-h}) / (theta_0 - theta_d)."""
    d = len(theta) - 1
    denom = theta[0] - theta[d]
    total = theta[0].field.zero
    for h in range(i):
        total += (theta[h] - theta[d - h]) / denom
    return total


def validate(p: ParameterArray) -> ValidationReport:
    d, th, ts = p.d, p.theta, p.theta_star
    out = []
    for i in range(1, d + 1):
        if p.vp(i).is_zero():
            out.append(Violation("I", i, f"varphi_{i} = 0"))
        if p.ph(i).is_zero():
            out.append(Violation("I", i, f"phi_{i} = 0"))
    for name, seq in (("theta", th), ("theta_star", ts)):
        seen = {}
        for j, x in enumerate(seq):
            if x in seen:
                out.append(Violation("II", j, f"{name}_{seen[x]} = {name}_{j}"))
            else:
                seen[x] = j
    if d >= 1 and (th[0] == th[d] or ts[0] == ts[d]):
        return ValidationReport(tuple(out), ("III", "IV", "V"))

    for i in range(1, d + 1):
        s = _telescoping(th, i)
        rhs3 = p.ph(1) * s + (ts[i] - ts[0]) * (th[i - 1] - th[d])
        if p.vp(i) != rhs3:
            out.append(Violation("III", i, f"varphi_{i} = {p.vp(i)}, expected {rhs3}"))
        rhs4 = p.vp(1) * s + (ts[i] - ts[0]) * (th[d - i + 1] - th[0])
        if p.ph(i) != rhs4:
            out.append(Violation("IV", i, f"phi_{i} = {p.ph(i)}, expected {rhs4}"))

    if d >= 3:
        ratios = []
        for i in range(2, d):
            for name, seq in (("theta", th), ("theta_star", ts)):
                den = seq[i - 1] - seq[i]
                if den.is_zero():
                    # already reported under (ii)
                    continue
                ratios.append((i, name, (seq[i - 2] - seq[i + 1]) / den))
        if ratios:
            ref = ratios[0][2]
            for i, name, r in ratios[1:]:
                if r != ref:
                    out.append(Violation("V", i, f"{name} ratio {r} != {ref}"))
    return ValidationReport(tuple(out))


def require_valid(p: ParameterArray) -> None:
    report = validate(p)
    if not report.valid:
        first = report.violations[0]
        raise InvalidInput(f"invalid parameter array: ({first.condition}) {first.detail}", report)


def is_valid(p: ParameterArray) -> bool:
    return validate(p).valid


# --- D4 action -----------------------------------------------------------

def _star(p):
    d = p.d
    return ParameterArray(
        p.theta_star, p.theta, p.varphi, [p.ph(d - j + 1) for j in range(1, d + 1)], p.field
    )


def _down(p):
    d = p.d
    return ParameterArray(
        p.theta,
        [p.theta_star[d - i] for i in range(d + 1)],
        [p.ph(d - j + 1) for j in range(1, d + 1)],
        [p.vp(d - j + 1) for j in range(1, d + 1)],
        p.field,
    )


def _ddown(p):
    d = p.d
    return ParameterArray(
        [p.theta[d - i] for i in range(d + 1)], p.theta_star, p.phi, p.varphi, p.field
    )


GENERATORS = {"star": _star, "down": _down, "ddown": _ddown}

#: The eight elements of D4 as reduced words in the generators.
D4_WORDS = (
    (),
    ("star",),
    ("down",),
    ("ddown",),
    ("down", "ddown"),
    ("star", "down"),
    ("star", "ddown"),
    ("star", "down", "ddown"),
)


def parse_word(word: Union[str, Iterable[str]]) -> tuple:
    if isinstance(word, str):
        word = word.replace(",", " ").split()
    word = tuple(word)
    for g in word:
        if g not in GENERATORS:
            raise ValueError(f"unknown generator {g!r}; use star, down, ddown")
    return word


def d4_act(p: ParameterArray, word, *, check: bool = True) -> ParameterArray:
    """Apply a word in {star, down, ddown}, letters applied left to right."""
    if check:
        require_valid(p)
    for g in parse_word(word):
        p = GENERATORS[g](p)
    return p


def orbit(p: ParameterArray) -> list:
    """The arrays {p, down p, ddown p, down ddown p} with duplicates removed, in that order."""
    require_valid(p)
    out = []
    for w in ((), ("down",), ("ddown",), ("down", "ddown")):
        q = d4_act(p, w, check=False)
        if q not in out:
            out.append(q)
    return out


def affine(p: ParameterArray, alpha, beta, alpha_star, beta_star) -> ParameterArray:
    """Rescale to (alpha theta + beta, alpha* theta* + beta*; alpha alpha* varphi, alpha alpha* phi)."""
    f = p.field
    alpha, beta, alpha_star, beta_star = (f(x) for x in (alpha, beta, alpha_star, beta_star))
    if alpha.is_zero() or alpha_star.is_zero():
        raise ZeroScale("alpha and alpha_star must be nonzero")
    require_valid(p)
    c = alpha * alpha_star
    return ParameterArray(
        [alpha * t + beta for t in p.theta],
        [alpha_star * t + beta_star for t in p.theta_star],
        [c * x for x in p.varphi],
        [c * x for x in p.phi],
        f,
    )


# --- identities implied by validity --------------------------------------

def vartheta(theta_star: Sequence[Scalar]) -> tuple:
    """vartheta_i = sum_{h<i} (theta*_h - theta*_{d-h}) / (theta*_0 - theta*_d), i = 0..d."""
    return tuple(_telescoping(theta_star, i) for i in range(len(theta_star)))


def derived_identities(p: ParameterArray) -> bool:
    """Check the ratio symmetry and the varphi_d / phi_d expansions of the split sequences."""
    require_valid(p)
    d, th, ts = p.d, p.theta, p.theta_star
    if d < 1:
        raise InvalidInput("derived identities need d >= 1")
    for i in range(d + 1):
        if (th[i] - th[d - i]) / (th[0] - th[d]) != (ts[i] - ts[d - i]) / (ts[0] - ts[d]):
            return False
    for i in range(1, d + 1):
        s = _telescoping(th, i)
        if p.vp(i) != p.ph(d) * s + (th[i] - th[0]) * (ts[i - 1] - ts[d]):
            return False
        if p.ph(i) != p.vp(d) * s + (th[d - i] - th[d]) * (ts[i - 1] - ts[d]):
            return False
    return True


def theta_recovery_identities(p: ParameterArray) -> bool:
    """Check the two formulas expressing theta_i via theta_0 / theta_d and their combination.

    These are the relations the tridiagonal recognition procedure runs on.
    """
    require_valid(p)
    d, th, ts = p.d, p.theta, p.theta_star
    if d < 1:
        raise InvalidInput("needs d >= 1")
    vt = vartheta(ts)

    def from_top(i):
        return (p.vp(i) - p.ph(d) * vt[i]) / (ts[i - 1] - ts[d])

    def from_bottom(i):
        return (p.vp(i + 1) - p.ph(1) * vt[i + 1]) / (ts[i + 1] - ts[0])

    for i in range(1, d + 1):
        if th[i] != th[0] + from_top(i):
            return False
    for i in range(d):
        if th[i] != th[d] + from_bottom(i):
            return False
    for i in range(1, d):
        if from_bottom(i) != from_top(i) + th[0] - th[d]:
            return False
    return True


# --- example families ----------------------------------------------------

@dataclass(frozen=True)
class KrawtchoukParams:
    d: int
    field: FieldSpec = QQ

    def array(self) -> ParameterArray:
        return krawtchouk_array(self.d, self.field)


def krawtchouk_array(d: int, field: FieldSpec = QQ) -> ParameterArray:
    """theta_i = theta*_i = d - 2i, varphi_i = -2i(d-i+1), phi_i = 2i(d-i+1)."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if not characteristic_guard(field, d):
        raise BadCharacteristic(f"Krawtchouk array of diameter {d} needs char 0 or odd p > {d}")
    theta = [d - 2 * i for i in range(d + 1)]
    p = ParameterArray(
        theta,
        theta,
        [-2 * i * (d - i + 1) for i in range(1, d + 1)],
        [2 * i * (d - i + 1) for i in range(1, d + 1)],
        field,
    )
    report = validate(p)
    if not report.valid:
        raise BadCharacteristic(f"degenerate over {field!r}: {report.violations[0].detail}")
    return p


@dataclass(frozen=True)
class QRacahParams:
    d: int
    q: Scalar
    s: Scalar
    s_star: Scalar
    r1: Scalar
    r2: Scalar

    @classmethod
    def make(cls, d, q, s, s_star, r1, r2, field: FieldSpec = QQ) -> "QRacahParams":
        return cls(d, *(field(x) for x in (q, s, s_star, r1, r2)))

    @property
    def field(self) -> FieldSpec:
        return self.q.field

    def array(self) -> ParameterArray:
        return qracah_array(self.d, self.q, self.s, self.s_star, self.r1, self.r2)


def _coerce_all(values, field):
    if field is None:
        field = next((v.field for v in values if isinstance(v, Scalar)), QQ)
    out = []
    for v in values:
        if isinstance(v, float):
            raise TypeError("floats are not exact; pass int, Fraction or Scalar")
        out.append(field(v))
    return out


def qracah_array(d: int, q, s, s_star, r1, r2, field: Optional[FieldSpec] = None) -> ParameterArray:
    """The q-Racah parameter array; raises ConstraintViolated naming the failed clause."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    q, s, s_star, r1, r2 = _coerce_all([q, s, s_star, r1, r2], field)
    f = q.field
    for name, v in (("q", q), ("s", s), ("s_star", s_star), ("r1", r1), ("r2", r2)):
        if v.is_zero():
            raise ConstraintViolated(f"{name} != 0")
    if r1 * r2 != s * s_star * q ** (d + 1):
        raise ConstraintViolated("r1 r2 = s s* q^(d+1)", f"{r1 * r2} != {s * s_star * q ** (d + 1)}")
    for i in range(1, d + 1):
        qi = q**i
        for clause, v in (
            ("q^i != 1", qi),
            ("r1 q^i != 1", r1 * qi),
            ("r2 q^i != 1", r2 * qi),
            ("s* q^i / r1 != 1", s_star * qi / r1),
            ("s* q^i / r2 != 1", s_star * qi / r2),
        ):
            if v == 1:
                raise ConstraintViolated(clause, f"fails at i={i}")
    for i in range(2, 2 * d + 1):
        qi = q**i
        if s * qi == 1:
            raise ConstraintViolated("s q^i != 1", f"fails at i={i}")
        if s_star * qi == 1:
            raise ConstraintViolated("s* q^i != 1", f"fails at i={i}")

    theta = [q ** (-i) + s * q ** (i + 1) for i in range(d + 1)]
    theta_star = [q ** (-i) + s_star * q ** (i + 1) for i in range(d + 1)]
    varphi, phi = [], []
    for i in range(1, d + 1):
        common = q ** (1 - 2 * i) * (1 - q**i) * (1 - q ** (i - d - 1))
        varphi.append(common * (1 - r1 * q**i) * (1 - r2 * q**i))
        phi.append(common * (r1 - s_star * q**i) * (r2 - s_star * q**i) / s_star)
    p = ParameterArray(theta, theta_star, varphi, phi, f)
    report = validate(p)
    if not report.valid:
        v = report.violations[0]
        raise ConstraintViolated(f"condition ({v.condition})", v.detail)
    return p
