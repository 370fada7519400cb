"""Shared independent oracles for the test suite.

These deliberately avoid the library's own algorithms: determinants use
Bareiss elimination, Smith data is recomputed from gcds of k-minors, and
congruences are checked by exhaustive scan.
"""

from itertools import combinations
from math import gcd


def det(rows):
    """Exact determinant by Bareiss fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def smith_via_minors(rows, ncols):
    """Invariant factors and free rank from determinantal divisors.

    The k-th divisor is the gcd of all k-by-k minors; factor k is the
    ratio of consecutive divisors.  Exponential in the matrix size, so
    only for small test matrices.
    """
    nrows = len(rows)
    divisors = [1]
    for k in range(1, min(nrows, ncols) + 1):
        g = 0
        for rsel in combinations(range(nrows), k):
            for csel in combinations(range(ncols), k):
                minor = det([[rows[i][j] for j in csel] for i in rsel])
                g = gcd(g, minor)
        if g == 0:
            break
        divisors.append(g)
    factors = tuple(divisors[i] // divisors[i - 1] for i in range(1, len(divisors)))
    return factors, ncols - len(factors)


def crt_by_scan(pairs):
    """Solve a congruence system by scanning 0..lcm-1; None if unsolvable."""
    lcm = 1
    for _, m in pairs:
        lcm = lcm // gcd(lcm, m) * m
    for x in range(lcm):
        if all((x - r) % m == 0 for r, m in pairs):
            return x, lcm
    return None
