"""Gaussian (q-binomial) coefficients and the identities built on them.

All values are Python integers; nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import IndexOutOfRange, InvariantViolation


@lru_cache(maxsize=None)
def gaussian(a: int, b: int, q: int) -> int:
    """The q-ary Gaussian coefficient ``[a b]_q``.

    Zero outside ``0 <= b <= a``.  The product formula is evaluated with an
    exact division after every multiplication; each partial quotient is
    itself a Gaussian coefficient, so every division is exact.
    """
    if a < 0 or b < 0 or b > a:
        return 0
    b = min(b, a - b)
    val = 1
    for i in range(b):
        # val == [a-b+i  i] before this step; afterwards [a-b+i+1  i+1]
        num = q ** (a - b + i + 1) - 1
        den = q ** (i + 1) - 1
        val = val * num // den
    return val


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _c2(k: int) -> int:
    return comb(k, 2) if k >= 2 else 0


@dataclass
class IdentityReport:
    passed: bool
    checked: dict[str, int]
    counterexample: tuple[str, tuple[int, ...]] | None = None


def verify_gaussian_identities(a_max: int, q: int) -> IdentityReport:
    """Check the five standard Gaussian-coefficient identities exhaustively.

    1. ``[a 0] = [a a] = 1``
    2. ``[a b] = [a a-b]``
    3. ``[a b][b r] = [a r][a-r a-b]``
    4. ``[a b] = q^b [a-1 b] + [a-1 b-1]``  (a, b >= 1)
    5. ``sum_i (-1)^i q^C(i,2) [a i] = 0``  (a >= 1)

    over ``0 <= r <= b <= a <= a_max``.  Stops at the first failure.
    """
    g = gaussian
    checked = {"1": 0, "2": 0, "3": 0, "4": 0, "5": 0}

    def fail(name, args):
        return IdentityReport(False, checked, (name, args))

    for a in range(a_max + 1):
        checked["1"] += 1
        if not g(a, 0, q) == g(a, a, q) == 1:
            return fail("1", (a,))
        if a >= 1:
            checked["5"] += 1
            if sum(_sign(i) * q ** _c2(i) * g(a, i, q) for i in range(a + 1)) != 0:
                return fail("5", (a,))
        for b in range(a + 1):
            checked["2"] += 1
            if g(a, b, q) != g(a, a - b, q):
                return fail("2", (a, b))
            if a >= 1 and b >= 1:
                checked["4"] += 1
                if g(a, b, q) != q**b * g(a - 1, b, q) + g(a - 1, b - 1, q):
                    return fail("4", (a, b))
            for r in range(b + 1):
                checked["3"] += 1
                if g(a, b, q) * g(b, r, q) != g(a, r, q) * g(a - r, a - b, q):
                    return fail("3", (a, b, r))
    return IdentityReport(True, checked)


def pascal_matrix_pair(a: int, q: int) -> tuple[list[list[int]], list[list[int]]]:
    """The upper-triangular q-Pascal matrix and its explicit inverse.

    ``M[i][j] = [j i]`` and ``N[i][j] = (-1)^(j-i) q^C(j-i,2) [j i]`` with
    zero-based indices.  Both products are checked before returning.
    """
    if a < 1:
        raise IndexOutOfRange("a must be >= 1")
    M = [[gaussian(j, i, q) for j in range(a)] for i in range(a)]
    N = [
        [_sign(j - i) * q ** _c2(j - i) * gaussian(j, i, q) if j >= i else 0 for j in range(a)]
        for i in range(a)
    ]
    eye = [[int(i == j) for j in range(a)] for i in range(a)]
    if _intmul(M, N) != eye or _intmul(N, M) != eye:
        raise InvariantViolation(f"q-Pascal inverse failed at a={a}, q={q}")
    return M, N


def _intmul(A, B):
    cols = list(zip(*B))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in A]


def alternating_partial_sum(a: int, j: int, q: int) -> tuple[int, int]:
    """``sum_{i<=j} (-1)^i q^C(i,2) [a i]`` and its closed form.

    Returns ``(direct, closed)`` where the closed form is
    ``(-1)^j q^C(j+1,2) [a-1 j]``; raises if they differ.
    """
    if a < 1:
        raise IndexOutOfRange("a must be >= 1")
    if not 0 <= j <= a:
        raise IndexOutOfRange(f"j={j} outside 0..{a}")
    direct = sum(_sign(i) * q ** _c2(i) * gaussian(a, i, q) for i in range(j + 1))
    closed = _sign(j) * q ** _c2(j + 1) * gaussian(a - 1, j, q)
    if direct != closed:
        raise InvariantViolation(f"alternating sum mismatch at a={a}, j={j}, q={q}")
    return direct, closed
