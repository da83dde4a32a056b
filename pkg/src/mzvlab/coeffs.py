"""Index sets and the scalar coefficient families (b, e, c, h, tau, lambda).

Indices are plain tuples of ints. An IndexSet enumerates, in ascending
lexicographic order, all tuples of a given weight matching a parity pattern.
Pattern slots:

    "o"   odd integer  > 1
    "e"   even integer > 1
    "a"   any integer  > 1
    "e0"  even integer >= 0

Pattern strings concatenate slot codes ("ooe", "aae", "oe0", ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ContractViolation
from .scalars import beta, binom

Index = tuple[int, ...]

_SLOTS = {"o", "e", "a", "e0"}


def parse_pattern(pattern: str | tuple[str, ...]) -> tuple[str, ...]:
    """Split a pattern string into slot codes ("oe0" -> ("o", "e0"))."""
    if isinstance(pattern, tuple):
        slots = pattern
    else:
        slots: list[str] = []
        i = 0
        while i < len(pattern):
            c = pattern[i]
            if i + 1 < len(pattern) and pattern[i + 1] == "0":
                c += "0"
                i += 1
            slots.append(c)
            i += 1
        slots = tuple(slots)
    if not slots or len(slots) > 3 or any(s not in _SLOTS for s in slots):
        raise ContractViolation(f"bad parity pattern {pattern!r}")
    return tuple(slots)


def _slot_values(slot: str, lo: int, hi: int) -> list[int]:
    if slot == "o":
        start, step = 3, 2
    elif slot == "e":
        start, step = 2, 2
    elif slot == "e0":
        start, step = 0, 2
    else:  # "a"
        return list(range(max(lo, 2), hi + 1))
    return list(range(max(start, lo), hi + 1, step))


@dataclass(frozen=True)
class IndexSet:
    """All weight-`weight` tuples matching `pattern`, sorted ascending lex."""

    weight: int
    pattern: tuple[str, ...]
    members: tuple[Index, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def position(self, idx: Index) -> int:
        try:
            return self.members.index(tuple(idx))
        except ValueError:
            raise ContractViolation(f"{idx} not in I_{self.weight}({''.join(self.pattern)})")

    def label(self) -> str:
        return f"I_{self.weight}({''.join(self.pattern)})"


@lru_cache(maxsize=None)
def index_set(weight: int, pattern: str | tuple[str, ...]) -> IndexSet:
    """Enumerate the index set of the given weight and parity pattern."""
    slots = parse_pattern(pattern)
    if weight < 2:
        raise ContractViolation(f"index_set: weight must be >= 2, got {weight}")
    members: list[Index] = []

    def rec(pos: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if pos == len(slots) - 1:
            vals = _slot_values(slots[pos], 0, remaining)
            if remaining in vals:
                members.append(prefix + (remaining,))
            return
        for v in _slot_values(slots[pos], 0, remaining):
            rec(pos + 1, remaining - v, prefix + (v,))

    rec(0, weight, ())
    members.sort()
    return IndexSet(weight, slots, tuple(members))


def j_pattern(j: int) -> str:
    """Pattern of the depth-3 sets with the even slot in position j."""
    if j not in (1, 2, 3):
        raise ContractViolation(f"j must be 1, 2 or 3, got {j}")
    return {1: "eoo", 2: "oeo", 3: "ooe"}[j]


def delta(m: Index, n: Index) -> int:
    return 1 if tuple(m) == tuple(n) else 0


def b_coeff(n: int, n2: int, m: int) -> int:
    """(-1)^n C(m-1, n-1) + (-1)^(n2-m) C(m-1, n2-1)."""
    if m < 1:
        raise ContractViolation(f"b_coeff: m must be >= 1, got {m}")
    return (-1) ** (n & 1) * binom(m - 1, n - 1) + (-1) ** ((n2 - m) & 1) * binom(m - 1, n2 - 1)


def e_coeff(m: Index, n: Index) -> int:
    """Depth-r derivation coefficient: delta(m,n) plus shifted-tuple b terms.

    Defined for tuples of equal length r in {1,2,3}. Parts may be 0 (the
    extended index sets need the n3=0 and (k,0) cases); negatives rejected.
    """
    m = tuple(m)
    n = tuple(n)
    if len(m) != len(n) or len(m) not in (1, 2, 3):
        raise ContractViolation(f"e_coeff: bad tuple lengths {m} vs {n}")
    if any(x < 0 for x in m + n):
        raise ContractViolation(f"e_coeff: negative part in {m}, {n}")
    r = len(m)
    if r == 1:
        return delta(m, n)
    if r == 2:
        return delta(m, n) + b_coeff(n[0], n[1], m[0])
    return (
        delta(m, n)
        + delta((m[2],), (n[2],)) * b_coeff(n[0], n[1], m[0])
        + delta((m[1],), (n[0],)) * b_coeff(n[1], n[2], m[0])
    )


def c_coeff(m: Index, n: Index) -> int:
    """Composite depth-3 coefficient, summed over middle decompositions.

    c(m, n) = sum over k1+k2+k3 = N, k_i >= 1, of
    delta(m1,k1) * e((m2,m3),(k2,k3)) * e((k1,k2,k3), n).
    Requires m1, m2 odd >= 3, m3 >= 2, and equal weights.
    """
    m = tuple(m)
    n = tuple(n)
    if len(m) != 3 or len(n) != 3:
        raise ContractViolation(f"c_coeff: need length-3 tuples, got {m}, {n}")
    N = sum(m)
    if N != sum(n):
        raise ContractViolation(f"c_coeff: weight mismatch {m} vs {n}")
    if m[0] < 3 or m[0] % 2 == 0 or m[1] < 3 or m[1] % 2 == 0 or m[2] < 2:
        raise ContractViolation(f"c_coeff: m must be (odd>=3, odd>=3, >=2), got {m}")
    k1 = m[0]  # delta(m1, k1) kills every other k1
    total = 0
    for k2 in range(1, N - k1):
        k3 = N - k1 - k2
        e2 = e_coeff((m[1], m[2]), (k2, k3))
        if e2:
            total += e2 * e_coeff((k1, k2, k3), n)
    return total


def h_coeff(m: Index, n: Index) -> int:
    """Five-term depth-3 parity coefficient."""
    m = tuple(m)
    n = tuple(n)
    if len(m) != 3 or len(n) != 3:
        raise ContractViolation(f"h_coeff: need length-3 tuples, got {m}, {n}")
    if any(x < 1 for x in m):
        raise ContractViolation(f"h_coeff: m parts must be >= 1, got {m}")
    if sum(m) != sum(n):
        raise ContractViolation(f"h_coeff: weight mismatch {m} vs {n}")
    m1, m2, m3 = m
    n1, n2, n3 = n
    sgn = lambda a: (-1) ** (a & 1)
    val = delta(m, n)
    val += delta((m2,), (n1,)) * b_coeff(n2, n3, m1)
    val += delta((m1,), (n1,)) * b_coeff(n2, n3, m2)
    val += (
        sgn(m1 + m2 + n3)
        * binom(m2 - 1, n3 - 1)
        * (sgn(n2) * binom(m1 - 1, n2 - 1) - sgn(n1) * binom(m1 - 1, n1 - 1))
    )
    val += (
        sgn(n1)
        * binom(m2 - 1, n1 - 1)
        * (sgn(n2) * binom(m1 - 1, n2 - 1) - sgn(n3) * binom(m1 - 1, n3 - 1))
    )
    return val


def tau(n1: int, n2: int) -> Fraction:
    """Rational weight coefficient of the depth-2 reduction.

    Even total weight: the Bernoulli-realization solution of the double
    shuffle system. Odd total weight: the closed parity-theorem form.
    """
    if n1 < 1 or n2 < 1:
        raise ContractViolation(f"tau: arguments must be >= 1, got ({n1}, {n2})")
    N = n1 + n2
    if N % 2 == 1:
        sgn = (-1) ** ((n1 + 1) & 1)
        return Fraction(sgn, 2) * (
            (-1) ** (n1 & 1) + binom(N - 1, n1 - 1) + binom(N - 1, n2 - 1)
        )
    s2 = (-1) ** (n2 & 1)
    bN = beta(N)
    val = Fraction(-1, 12) * (5 + s2 * binom(N - 1, n2 - 1) - s2 * binom(N - 1, n2))
    val += beta(n1) * beta(n2) / (3 * bN)
    conv = sum(binom(j - 1, n2 - 1) * beta(j) * beta(N - j) for j in range(2, N + 1))
    val += Fraction(s2) * conv / (3 * bN)
    return val


def lambda_coeff(r: int, s: int) -> Fraction:
    """Kohnen-Zagier linear-form coefficient on critical values, r+s even."""
    if r < 1 or s < 1:
        raise ContractViolation(f"lambda_coeff: arguments must be >= 1, got ({r}, {s})")
    k = r + s
    if k % 2 == 1:
        raise ContractViolation(f"lambda_coeff: r+s must be even, got {r}+{s}")
    ss = (-1) ** (s & 1)
    val = Fraction(-1, 12) * (1 - ss * binom(k - 1, s - 1) + ss * binom(k - 1, s))
    conv = sum(binom(j - 1, s - 1) * beta(j) * beta(k - j) for j in range(2, k + 1))
    val -= Fraction(ss) * conv / (3 * beta(k))
    return val
