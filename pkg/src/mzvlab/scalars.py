"""Exact rational scalars and the classical constants used everywhere else.

All arithmetic is over `fractions.Fraction` (kept reduced, positive
denominator, never rounded). Rationals serialize as "p/q", or "p" when the
denominator is 1.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ContractViolation

Rational = Fraction

# Triangular binomial memo. Lookups dominate the coefficient kernels, so the
# table is built once at import and read-only afterwards.
BINOM_TABLE_BOUND = 128

_BINOM: list[list[int]] = []
for _n in range(BINOM_TABLE_BOUND + 1):
    _row = [1] * (_n + 1)
    for _k in range(1, _n):
        _row[_k] = _BINOM[_n - 1][_k - 1] + _BINOM[_n - 1][_k]
    _BINOM.append(_row)


def binom(m: int, n: int) -> int:
    """Binomial coefficient with C(m, n) = 0 for n < 0 and for m < n."""
    if n < 0 or m < n:
        return 0
    if m <= BINOM_TABLE_BOUND:
        return _BINOM[m][n]
    return math.comb(m, n)


_bernoulli_cache: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n, convention B_1 = -1/2."""
    if n < 0:
        raise ContractViolation(f"bernoulli: n must be >= 0, got {n}")
    while len(_bernoulli_cache) <= n:
        m = len(_bernoulli_cache)
        if m % 2 == 1:
            _bernoulli_cache.append(Fraction(0))
            continue
        # sum_{k=0}^{m} C(m+1,k) B_k = 0
        s = sum(math.comb(m + 1, k) * _bernoulli_cache[k] for k in range(m))
        _bernoulli_cache.append(Fraction(-s, m + 1))
    return _bernoulli_cache[n]


def beta(k: int) -> Fraction:
    """Normalized Bernoulli number: -B_k/(2*k!) for even k, 0 for odd k."""
    if k < 0:
        raise ContractViolation(f"beta: k must be >= 0, got {k}")
    if k % 2 == 1:
        return Fraction(0)
    return -bernoulli(k) / (2 * math.factorial(k))


# ---------------------------------------------------------------------------
# Generating series O(x) = x^3/(1-x^2), E(x) = x^2/(1-x^2),
# S(x) = x^12/((1-x^4)(1-x^6))  (cusp form dimensions).
# Coefficients are tiny integers; closed forms below, convolution helpers for
# the composite sweep targets.


def odd_series_coeff(k: int) -> int:
    """Coefficient of x^k in x^3/(1-x^2): 1 for odd k >= 3."""
    return 1 if k >= 3 and k % 2 == 1 else 0


def even_series_coeff(k: int) -> int:
    """Coefficient of x^k in x^2/(1-x^2): 1 for even k >= 2."""
    return 1 if k >= 2 and k % 2 == 0 else 0


def dim_cusp(k: int) -> int:
    """Coefficient of x^k in x^12/((1-x^4)(1-x^6)): dim of weight-k cusp forms."""
    if k < 1:
        raise ContractViolation(f"dim_cusp: k must be >= 1, got {k}")
    if k < 12 or k % 2 == 1:
        return 0
    count = 0
    for a in range(0, (k - 12) // 4 + 1):
        if (k - 12 - 4 * a) % 6 == 0:
            count += 1
    return count


def series_coeffs(name: str, kmax: int) -> list[int]:
    """Coefficient list [x^0 .. x^kmax] of one of the named series O, E, S."""
    table = {
        "O": odd_series_coeff,
        "E": even_series_coeff,
        "S": lambda k: dim_cusp(k) if k >= 1 else 0,
    }
    if name not in table:
        raise ContractViolation(f"series_coeffs: unknown series {name!r}")
    fn = table[name]
    return [fn(k) for k in range(kmax + 1)]


def convolve(a: list[int], b: list[int]) -> list[int]:
    """Truncated product of two coefficient lists (same truncation order)."""
    n = min(len(a), len(b))
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if ai == 0:
            continue
        for j in range(n - i):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def laurent_combo_coeff(combo: str, k: int) -> int:
    """Coefficient of x^k in a named Laurent combination of O, E, S.

    Known combos:
      "SE/x^2"            S*E shifted down two
      "SE"                S*E
      "SE/x^2+(x+1/x)SO"  S*E/x^2 + (x + 1/x)*S*O
      "(x+1/x)OS"         (x + 1/x)*O*S
      "EO^2-ES"           E*O^2 - E*S
      "SO/x"              S*O shifted down one
      "SO*x"              S*O shifted up one
    """
    top = k + 4  # enough slack for the /x^2 shifts
    S = series_coeffs("S", top)
    E = series_coeffs("E", top)
    O = series_coeffs("O", top)

    def at(lst: list[int], i: int) -> int:
        return lst[i] if 0 <= i < len(lst) else 0

    if combo == "SE":
        return at(convolve(S, E), k)
    if combo == "SE/x^2":
        return at(convolve(S, E), k + 2)
    if combo == "SE/x^2+(x+1/x)SO":
        so = convolve(S, O)
        return at(convolve(S, E), k + 2) + at(so, k - 1) + at(so, k + 1)
    if combo == "(x+1/x)OS":
        os_ = convolve(O, S)
        return at(os_, k - 1) + at(os_, k + 1)
    if combo == "EO^2-ES":
        eoo = convolve(convolve(E, O), O)
        es = convolve(E, S)
        return at(eoo, k) - at(es, k)
    if combo == "SO/x":
        return at(convolve(S, O), k + 1)
    if combo == "SO*x":
        return at(convolve(S, O), k - 1)
    raise ContractViolation(f"laurent_combo_coeff: unknown combo {combo!r}")


def hal_series(depth: int, kmax: int) -> list[int]:
    """Coefficient row of y^depth in E(x)y / (1 - O(x)y + S(x)y^2), depth 1..3.

    Reference dimensions for products of one even zeta with a totally odd
    depth-(r-1) block: depth 1 -> E, depth 2 -> E*O, depth 3 -> E*O^2 - E*S.
    """
    if depth not in (1, 2, 3):
        raise ContractViolation(f"hal_series: depth must be 1..3, got {depth}")
    E = series_coeffs("E", kmax)
    O = series_coeffs("O", kmax)
    S = series_coeffs("S", kmax)
    if depth == 1:
        return E
    if depth == 2:
        return convolve(E, O)
    eoo = convolve(convolve(E, O), O)
    es = convolve(E, S)
    return [a - b for a, b in zip(eoo, es)]


# ---------------------------------------------------------------------------
# Rational serialization ("p/q", or "p" when q == 1).


def rat_str(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))
