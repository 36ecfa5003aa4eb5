"""Built-in parameter-array fixtures.

The q-Racah tuples over GF(13) and the d=2 rational tuple come from
``scripts/scan_qracah.py``; GF(13) has none at d=6 because 2 has
multiplicative order 12 there and the clause on s q^i (2 <= i <= 12) rules
out every s.
"""

from fractions import Fraction

from .densemat import Matrix
from .exactfield import QQ, FieldSpec
from .parray import QRacahParams, qracah_array

GF13 = FieldSpec.prime(13)

# (q, s, s*, r1, r2) found by the scan over small rationals at d = 2
QRACAH_SCANNED_D2 = (2, 1, 1, 1, 8)

# first hits of the exhaustive scan over GF(13)
QRACAH_GF13 = {
    1: (2, 1, 1, 1, 4),
    2: (2, 1, 1, 1, 8),
    3: (2, 1, 1, 1, 3),
    4: (2, 1, 1, 1, 6),
    5: (2, 1, 1, 1, 12),
}


def qracah_rational_params(d: int) -> QRacahParams:
    """q=2, s=3, s*=5, r1=7 and r2 fixed by r1 r2 = s s* q^(d+1); valid for every d."""
    return QRacahParams.make(d, 2, 3, 5, 7, Fraction(15 * 2 ** (d + 1), 7), QQ)


def qracah_params(d: int, field: FieldSpec = QQ) -> QRacahParams:
    if field == QQ:
        return qracah_rational_params(d)
    if field == GF13 and d in QRACAH_GF13:
        return QRacahParams.make(d, *QRACAH_GF13[d], field=GF13)
    raise KeyError(f"no q-Racah fixture for d={d} over {field!r}")


def qracah_fixture(d: int = 2, field: FieldSpec = QQ):
    return qracah_params(d, field).array()


def qracah_scanned_d2():
    return qracah_array(2, *QRACAH_SCANNED_D2, field=QQ)


def bidiagonal_krawtchouk_pair(d: int, field: FieldSpec = QQ):
    """Lower/upper bidiagonal pair whose designated array is krawtchouk_array(d).

    a has diagonal d, d-2, ..., -d and subdiagonal -1, ..., -d; a_star has the
    same diagonal and superdiagonal 2d, 2d-2, ..., 2.
    """
    diag = [d - 2 * i for i in range(d + 1)]
    a = Matrix.tridiagonal([field(x) for x in diag], [-i for i in range(1, d + 1)], [0] * d, field)
    a_star = Matrix.tridiagonal([field(x) for x in diag], [0] * d, [2 * (d - i + 1) for i in range(1, d + 1)], field)
    return a, a_star
