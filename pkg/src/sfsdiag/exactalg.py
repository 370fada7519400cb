"""Exact integer primitives: extended gcd, congruence solving, least
positive residues, floor sums, and Smith normal form.

Everything works with arbitrary-precision Python integers; nothing in the
package has an overflow contract.  Floors are always toward minus infinity
(Python's ``//``), which is the convention the Euler-number bookkeeping
depends on.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import Incompatible


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(|a|, |b|) >= 0`` and ``a*x + b*y = g``.

    The degenerate pair ``(0, 0)`` returns ``(0, 0, 0)``.
    """
    if a == 0 and b == 0:
        return (0, 0, 0)
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return (-old_r, -old_s, -old_t)
    return (old_r, old_s, old_t)


def crt(pairs: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Combine congruences ``x = r_i (mod m_i)`` into one ``x = r (mod lcm)``.

    Moduli need not be coprime.  Returns ``(r, lcm)`` with ``0 <= r < lcm``;
    the empty system yields ``(0, 1)``.  Raises :class:`Incompatible` when
    two congruences disagree modulo the gcd of their moduli.
    """
    res, mod = 0, 1
    for r_i, m_i in pairs:
        if m_i < 1:
            raise ValueError(f"modulus must be >= 1, got {m_i}")
        g, u, _ = ext_gcd(mod, m_i)
        if (r_i - res) % g != 0:
            raise Incompatible(
                f"residues {res} (mod {mod}) and {r_i} (mod {m_i}) conflict"
            )
        lcm = mod // g * m_i
        # res + mod*k = r_i (mod m_i), so k = (r_i-res)/g * inv(mod/g) (mod m_i/g)
        k = ((r_i - res) // g * u) % (m_i // g)
        res = (res + mod * k) % lcm
        mod = lcm
    return res, mod


def least_positive_residue(b: int, a: int) -> int:
    """The unique integer in ``[1, a]`` congruent to ``b`` modulo ``a >= 1``.

    When ``a > 1`` and ``gcd(b, a) = 1`` the result lands in ``(0, a)``; the
    value ``a`` itself only appears for ``a = 1`` or non-coprime inputs.
    """
    if a < 1:
        raise ValueError(f"modulus must be >= 1, got {a}")
    r = b % a
    return a if r == 0 else r


def floor_sum(fractions: Iterable[tuple[int, int]]) -> int:
    """Sum of ``floor(beta/alpha)`` over ``(beta, alpha)`` pairs, ``alpha >= 1``."""
    total = 0
    for beta, alpha in fractions:
        if alpha < 1:
            raise ValueError(f"denominator must be >= 1, got {alpha}")
        total += beta // alpha
    return total


@dataclass(frozen=True)
class IntMatrix:
    """An immutable integer matrix stored as a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            if not data:
                raise ValueError("cols is required for an empty matrix")
            cols = len(data[0])
        return cls(len(data), cols, data)


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors and free rank of an integer matrix cokernel.

    ``invariant_factors`` are the nonzero diagonal entries of the Smith
    form: positive, ordered by divisibility, with 1s retained.  The
    cokernel reads columns as generators and rows as relations, so
    ``free_rank = cols - len(invariant_factors)``.  Two results describe
    the same abelian group iff their ``torsion`` and ``free_rank`` agree.
    """

    invariant_factors: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        prev = None
        for d in self.invariant_factors:
            if d <= 0:
                raise ValueError("invariant factors must be positive")
            if prev is not None and d % prev != 0:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = d

    @property
    def torsion(self) -> tuple[int, ...]:
        """Invariant factors greater than one (the torsion coefficients)."""
        return tuple(d for d in self.invariant_factors if d > 1)

    def same_group(self, other: "SnfResult") -> bool:
        """Whether both results present the same abelian group."""
        return self.torsion == other.torsion and self.free_rank == other.free_rank

    def order(self) -> int | None:
        """Group order when finite, else None."""
        if self.free_rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form data of an integer matrix.

    Diagonalizes by elementary row and column operations, then normalizes
    the diagonal with pairwise gcd/lcm exchanges so the factors form the
    canonical divisibility chain.  Deterministic for fixed input.
    """
    a = [list(row) for row in m.entries]
    nr, nc = m.rows, m.cols

    def smallest(t):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = a[i][j]
                if v != 0 and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(nr, nc):
        best = smallest(t)
        if best is None:
            break
        while True:
            bi, bj = best
            if bi != t:
                a[t], a[bi] = a[bi], a[t]
            if bj != t:
                for row in a:
                    row[t], row[bj] = row[bj], row[t]
            p = a[t][t]
            # Euclid passes: leave remainders in place, then restart from
            # the smallest survivor; keeps entry growth tame
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    q = a[i][t] // p
                    if q:
                        for j in range(t, nc):
                            a[i][j] -= q * a[t][j]
                    if a[i][t] != 0:
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, nr):
                            a[i][j] -= q * a[i][t]
                    if a[t][j] != 0:
                        dirty = True
            if not dirty:
                break
            best = smallest(t)
        t += 1
    diag = [abs(a[i][i]) for i in range(min(nr, nc)) if a[i][i] != 0]
    # pairwise (gcd, lcm) exchanges yield the true invariant factors from
    # any diagonal form
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                if diag[j] % diag[i] != 0:
                    g = gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] // g * diag[j]
                    changed = True
    diag.sort()
    return SnfResult(tuple(diag), m.cols - len(diag))
