#!/usr/bin/env python3
"""Independent brute-force / closed-form oracle used to freeze expected values.

Nothing here imports the C++ library. Run with `--snapshots DIR` to regenerate
the embedded OEIS b-files under data/oeis/.
"""
import argparse
import itertools
import math
import os
from collections import Counter
from fractions import Fraction


def black_white(word):
    b = w = 0
    for i, h in enumerate(word, start=1):
        hi, lo = (h + 1) // 2, h // 2
        if i % 2:
            b, w = b + hi, w + lo
        else:
            b, w = b + lo, w + hi
    return b, w


def kary_poly(k, n):
    return Counter(black_white(u) for u in itertools.product(range(1, k + 1), repeat=n))


def perm_poly(n):
    return Counter(black_white(p) for p in itertools.permutations(range(1, n + 1)))


def odd_disp(p):
    return sum((i - x) % 2 for i, x in enumerate(p, start=1))


def census(n):
    return Counter(odd_disp(p) for p in itertools.permutations(range(1, n + 1)))


def bal_kary(k, n):
    return sum(c for (b, w), c in kary_poly(k, n).items() if b == w)


def per_r(k, n):
    out = Counter()
    for u in itertools.product(range(1, k + 1), repeat=n):
        b, w = black_white(u)
        if b == w:
            out[sum(1 for i, h in enumerate(u, start=1) if i % 2 and h % 2)] += 1
    return out


def sqrt_series(a, order):
    s = [Fraction(0)] * (order + 1)
    s[0] = Fraction(1)
    for n in range(1, order + 1):
        acc = a[n] if n < len(a) else Fraction(0)
        acc -= sum(s[i] * s[n - i] for i in range(1, n))
        s[n] = acc / 2
    return s


def jacobi_explicit(m, al, be, x):
    return sum(Fraction(math.comb(m + al, m - s) * math.comb(m + be, s)) * ((x - 1) / 2) ** s
               * ((x + 1) / 2) ** (m - s) for s in range(m + 1))


def t_formula(n, m):
    f, c = n // 2, (n + 1) // 2
    return math.factorial(f) * math.factorial(c) * math.comb(f, m - 1) * math.comb(c, m - 1)


def write_bfile(path, seq_id, comment, terms, offset):
    with open(path, "w") as fh:
        fh.write(f"# {seq_id} -- {comment}\n")
        for i, t in enumerate(terms):
            fh.write(f"{i + offset} {t}\n")


def snapshots(outdir):
    os.makedirs(outdir, exist_ok=True)
    write_bfile(os.path.join(outdir, "A001405.txt"), "A001405",
                "a(n) = binomial(n, floor(n/2))",
                [math.comb(n, n // 2) for n in range(30)], 0)
    # a(n) = sum_k C(n,k)^2 4^k, cross-checked against the series 1/sqrt(1-10x+9x^2).
    a084771 = [sum(math.comb(n, j) ** 2 * 4 ** j for j in range(n + 1)) for n in range(30)]
    ser = sqrt_series([Fraction(1), Fraction(-10), Fraction(9)], 29)
    inv = [Fraction(0)] * 30
    inv[0] = 1 / ser[0]
    for n in range(1, 30):
        inv[n] = -sum(ser[i] * inv[n - i] for i in range(1, n + 1)) / ser[0]
    assert all(Fraction(a) == b for a, b in zip(a084771, inv))
    write_bfile(os.path.join(outdir, "A084771.txt"), "A084771",
                "coefficients of 1/sqrt(1-10x+9x^2)", a084771, 0)
    write_bfile(os.path.join(outdir, "A060899.txt"), "A060899",
                "a(n) = 4^n * binomial(2n, n)",
                [4 ** n * math.comb(2 * n, n) for n in range(30)], 0)
    # Triangle read by rows, n >= 1, m = 1..floor(n/2)+1, from an exhaustive census.
    terms = []
    for n in range(1, 11):
        c = census(n)
        for m in range(1, n // 2 + 2):
            terms.append(c.get(2 * m - 2, 0))
    write_bfile(os.path.join(outdir, "A226288.txt"), "A226288",
                "T(n,m) = #permutations of [n] with 2m-2 odd displacements, read by rows",
                terms, 1)


def report():
    print("table1:")
    for k in range(1, 7):
        print(k, [bal_kary(k, n) for n in range(0, 9)])
    print("perm_poly(3):", sorted(perm_poly(3).items()))
    print("perm_poly(4):", sorted(perm_poly(4).items()))
    print("kary_poly(3,2):", sorted(kary_poly(3, 2).items()))
    print("kary_poly(1,3):", sorted(kary_poly(1, 3).items()))
    for k, n in [(2, 4), (3, 4), (4, 5), (3, 6)]:
        print(f"per_r({k},{n}):", sorted(per_r(k, n).items()))
    for n in range(1, 9):
        print("census", n, sorted(census(n).items()))
    print("bal_perm brute:", [sum(c for (b, w), c in perm_poly(n).items() if b == w) for n in range(0, 9)])
    print("sqrt(1-4x^2):", sqrt_series([Fraction(1), 0, Fraction(-4)], 10))
    print("P_1^(0,0)(5/3):", jacobi_explicit(1, 0, 0, Fraction(5, 3)))
    print("P_1^(1,0)(3):", jacobi_explicit(1, 1, 0, Fraction(3)))
    print("P_2^(1,0)(5/3):", jacobi_explicit(2, 1, 0, Fraction(5, 3)))
    egf = [Fraction(sum(c for (b, w), c in perm_poly(n).items() if b == w), math.factorial(n))
           for n in range(0, 9)]
    print("egf:", egf)
    print("T(4,m):", [t_formula(4, m) for m in range(1, 4)])
    print("asymptotics (exact/asym - 1):")
    for n in (8, 40, 200, 1000):
        e2 = Fraction(math.comb(n, n // 2), 2 ** n)
        print(" k=2", n, float(e2) / math.sqrt(2 / (math.pi * n)) - 1)
        for k in (3, 5):
            f, c = n // 2, (n + 1) // 2
            s = sum(math.comb(c, r) * math.comb(f, r) * ((k + 1) // 2) ** (2 * r) * (k // 2) ** (n - 2 * r)
                    for r in range(f + 1))
            print(f" k={k}", n, float(Fraction(s, k ** n)) / (math.sqrt(2 / (math.pi * n)) * math.sqrt(k * k / (k * k - 1))) - 1)
        f, c = n // 2, (n + 1) // 2
        bal = math.factorial(f) * math.factorial(c) * math.comb(c, c // 2) * math.comb(f, c // 2)
        print(" perm", n, float(Fraction(bal, math.factorial(n))) / math.sqrt(8 / (math.pi * n)) - 1)
    for al in (0, 1):
        for m in (10, 50, 250):
            k = 3
            x = Fraction(k * k + 1, 2 * k)
            exact = jacobi_explicit(m, al, 0, x)
            xf = float(x)
            est = ((math.sqrt(xf + 1) + math.sqrt(xf - 1)) ** al * (xf + math.sqrt(xf * xf - 1)) ** (m + 0.5)
                   / (math.sqrt(2 * math.pi * m) * (xf * xf - 1) ** 0.25 * math.sqrt((xf - 1) ** al)))
            print(" szego alpha", al, m, float(exact) / est - 1)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--snapshots")
    args = ap.parse_args()
    if args.snapshots:
        snapshots(args.snapshots)
    else:
        report()
