"""Counting minimum LD-codes of paths.

``A(n, k)`` is the number of LD*-codes of size k in ``P_n`` and ``C(n)`` the
number of minimum LD-codes of ``P_n``.  C is computed three ways: from the
A recurrence, from closed-form polynomials in ``m = n // 5``, and by brute
force.  Polynomials are kept over a common denominator so evaluation stays
in exact integer arithmetic.
"""
from __future__ import annotations

from .generators import path
from .solver import enumerate_minimum_ld_codes, gamma_ld_star, ld_star_masks

__all__ = [
    "BASE_CASES",
    "SMALL_C",
    "CountTable",
    "a_value",
    "a_closed_form",
    "c_of_n",
    "c_closed_form",
    "brute_count",
    "brute_count_ld_star",
    "A_POLYNOMIALS",
    "C_POLYNOMIALS",
]

BASE_CASES = {(1, 0): 1, (2, 1): 2, (3, 1): 2, (4, 2): 5, (5, 2): 4}
SMALL_C = {1: 1, 2: 2, 3: 3, 4: 4}

# residue r -> (k offset, integer coefficients high to low, denominator);
# A(5m + r, 2m + k_offset) = poly(m) / denominator
A_POLYNOMIALS = {
    1: (0, (1,), 1),
    3: (1, (1, 2), 1),
    0: (0, (1, 5, 2), 2),
    2: (1, (1, 12, 29, 12), 6),
    4: (2, (1, 22, 131, 230, 120), 24),
}

# residue r -> (coefficients, denominator); C(5m + r) = poly(m) / denominator
C_POLYNOMIALS = {
    0: ((1,), 1),
    1: ((1, 12, 29, 6), 6),
    2: ((1, 2), 1),
    3: ((1, 22, 131, 206, 72), 24),
    4: ((1, 7, 8), 2),
}

INT64_MAX = 2**63 - 1


def _horner(coeffs: tuple[int, ...], m: int, den: int) -> int:
    acc = 0
    for c in coeffs:
        acc = acc * m + c
    q, r = divmod(acc, den)
    if r:
        raise ArithmeticError(f"polynomial {coeffs}/{den} not integral at m={m}")
    return q


def brute_count_ld_star(n: int, k: int) -> int:
    """Number of LD*-codes of size k in ``P_n`` by exhaustive enumeration."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > 22:
        raise ValueError("brute_count_ld_star is limited to n <= 22")
    if k < 0 or k > n:
        return 0
    return len(ld_star_masks(n, k))


class CountTable:
    """Memoised ``A(n, k)``.

    Named base cases cover n <= 5; other small entries come from brute-force
    enumeration, and the four-term recurrence takes over from n = 6.
    """

    def __init__(self, base_cases: dict[tuple[int, int], int] | None = None):
        self.base_cases = dict(BASE_CASES if base_cases is None else base_cases)
        self._memo: dict[tuple[int, int], int] = {}

    def __call__(self, n: int, k: int) -> int:
        if n < 1 or k < 0:
            raise ValueError("A(n, k) needs n >= 1 and k >= 0")
        key = (n, k)
        if key in self._memo:
            return self._memo[key]
        if k > n or k < gamma_ld_star(n):
            val = 0
        elif key in self.base_cases:
            val = self.base_cases[key]
        elif n <= 5:
            val = brute_count_ld_star(n, k)
        else:
            val = self(n - 1, k - 1) + self(n - 2, k - 1)
            if k >= 2:
                val += self(n - 4, k - 2) + self(n - 5, k - 2)
        assert val <= INT64_MAX, "count exceeds 64 bits"
        self._memo[key] = val
        return val

    def c(self, n: int) -> int:
        """Minimum LD-codes of ``P_n``: codes ending in v_n, in v_{n-2} v_{n-1},
        or in v_{n-3} v_{n-1}."""
        if n < 1:
            raise ValueError("n must be positive")
        if n in SMALL_C:
            return SMALL_C[n]
        g = -(-2 * n // 5)
        return self(n - 1, g - 1) + self(n - 3, g - 2) + self(n - 4, g - 2)


_TABLE = CountTable()


def a_value(n: int, k: int) -> int:
    return _TABLE(n, k)


def c_of_n(n: int) -> int:
    return _TABLE.c(n)


def a_closed_form(n: int, k: int) -> int | None:
    """Closed-form ``A(n, k)`` for ``(5m + r, 2m + offset)`` with m >= 1."""
    m, r = divmod(n, 5)
    offset, coeffs, den = A_POLYNOMIALS[r]
    if m < 1 or k != 2 * m + offset:
        return None
    return _horner(coeffs, m, den)


def c_closed_form(n: int) -> int:
    if n < 5:
        raise ValueError("closed forms start at n = 5")
    m, r = divmod(n, 5)
    coeffs, den = C_POLYNOMIALS[r]
    return _horner(coeffs, m, den)


def brute_count(n: int) -> int:
    """Number of minimum LD-codes of ``P_n`` by full enumeration."""
    if n > 25:
        raise ValueError("brute_count is limited to n <= 25")
    return enumerate_minimum_ld_codes(path(n)).count
