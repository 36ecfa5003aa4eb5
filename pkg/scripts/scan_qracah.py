"""Scan small parameter tuples for q-Racah arrays that pass every side condition.

Over QQ: q in {2, 3}, s, s* in 1..5, r1 a positive divisor of s s* q^(d+1).
Over GF(p): every nonzero (q, s, s*, r1). The first hit per (field, d) is printed
in a form ready to paste into ``leonard.fixtures``.

    python scripts/scan_qracah.py --dmax 6 --prime 13
"""

import argparse
import itertools

from leonard.errors import ConstraintViolated
from leonard.exactfield import QQ, FieldSpec
from leonard.parray import qracah_array


def divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def scan_rational(d):
    for q, s, ss in itertools.product((2, 3), range(1, 6), range(1, 6)):
        prod = s * ss * q ** (d + 1)
        for r1 in divisors(prod):
            try:
                qracah_array(d, q, s, ss, r1, prod // r1, QQ)
            except ConstraintViolated:
                continue
            return q, s, ss, r1, prod // r1


def scan_prime(d, p):
    f = FieldSpec.prime(p)
    for q, s, ss, r1 in itertools.product(range(1, p), repeat=4):
        r2 = f(s) * ss * f(q) ** (d + 1) / r1
        try:
            qracah_array(d, q, s, ss, r1, r2, f)
        except ConstraintViolated:
            continue
        return q, s, ss, r1, int(str(r2))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=6)
    ap.add_argument("--prime", type=int, default=13)
    args = ap.parse_args()
    for d in range(0, args.dmax + 1):
        print(f"QQ     d={d}: (q, s, s*, r1, r2) = {scan_rational(d)}")
    for d in range(0, args.dmax + 1):
        print(f"GF({args.prime}) d={d}: (q, s, s*, r1, r2) = {scan_prime(d, args.prime)}")


if __name__ == "__main__":
    main()
