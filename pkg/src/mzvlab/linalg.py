"""Exact rational linear algebra: fraction-free elimination and kernels.

Row reduction over the integers follows the Bareiss scheme (divisions by the
previous pivot are exact), with deterministic first-nonzero pivoting so every
downstream basis is canonical. Kernel bases are returned in reduced echelon
form, scaled to primitive integer vectors with positive leading entry.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

FracRow = tuple[Fraction, ...]


def clear_denominators(rows: list[list[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (kernel preserved)."""
    out = []
    for row in rows:
        mult = 1
        for x in row:
            d = Fraction(x).denominator
            mult = mult * d // gcd(mult, d)
        out.append([int(Fraction(x) * mult) for x in row])
    return out


def bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form. Returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            for j in range(c + 1, ncols):
                num = m[i][j] * piv - mic * m[r][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss exact-division invariant broken"
                m[i][j] = q
            m[i][c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def rank_int(rows: list[list[int]]) -> int:
    _, pivots = bareiss_echelon(rows)
    return len(pivots)


def rank_frac(rows: list[list[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    return rank_int(clear_denominators(rows))


def rref_frac(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form over Q; zero rows dropped."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return []
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return [row for row in m if any(row)]


def primitive_row(row: list[Fraction]) -> tuple[int, ...]:
    """Scale to coprime integers with positive first nonzero entry."""
    mult = 1
    for x in row:
        d = x.denominator
        mult = mult * d // gcd(mult, d)
    ints = [int(x * mult) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def canonical_basis(rows: list[list[Fraction]]) -> list[tuple[int, ...]]:
    """Reduced-echelon, primitive-integer, sign-fixed basis of a row span."""
    return [primitive_row(r) for r in rref_frac(rows)]


def right_kernel_frac(rows: list[list[Fraction]], ncols: int) -> list[tuple[int, ...]]:
    """Canonical basis of {x : rows . x = 0}."""
    if not rows:
        basis = [[Fraction(i == j) for j in range(ncols)] for i in range(ncols)]
        return [primitive_row(r) for r in basis]
    ech, pivots = bareiss_echelon(clear_denominators(rows))
    free = [c for c in range(ncols) if c not in pivots]
    vectors: list[list[Fraction]] = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            p = pivots[i]
            s = sum((Fraction(ech[i][j]) * x[j] for j in range(p + 1, ncols)), Fraction(0))
            x[p] = -s / ech[i][p]
        vectors.append(x)
    return canonical_basis(vectors)


def matvec(rows: list[list[Fraction]], x: list[Fraction]) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in rows]


def matmul_frac(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    if a and b:
        assert len(a[0]) == len(b)
    bt = list(zip(*b)) if b else []
    return [
        [sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a
    ]


def solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]):
    """One exact solution of rows . x = rhs, or None. Free variables get 0."""
    if not rows:
        return [] if not any(rhs) else None
    ncols = len(rows[0])
    aug = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    red = rref_frac(aug)
    x = [Fraction(0)] * ncols
    for row in red:
        lead = next((j for j, v in enumerate(row) if v), None)
        if lead is None:
            continue
        if lead == ncols:
            return None  # 0 = nonzero
        x[lead] = row[ncols] - sum(
            (row[j] * x[j] for j in range(lead + 1, ncols)), Fraction(0)
        )
    # back-substitution above assumed reduced form: leading 1, zeros elsewhere
    # in pivot columns, so x is consistent; verify defensively.
    for row, r in zip(rows, rhs):
        if sum((a * b for a, b in zip(row, x)), Fraction(0)) != r:
            return None
    return x


def intersect_row_spaces(
    a: list[list[Fraction]], b: list[list[Fraction]], ncols: int
) -> list[tuple[int, ...]]:
    """Canonical basis of span(a) & span(b)."""
    if not a or not b:
        return []
    # x = alpha.a = beta.b  <=>  (alpha, beta) in right kernel of [a^T | -b^T]
    stacked = [
        [a[i][c] for i in range(len(a))] + [-b[i][c] for i in range(len(b))]
        for c in range(ncols)
    ]
    combos = right_kernel_frac(stacked, len(a) + len(b))
    vecs = []
    for combo in combos:
        alpha = combo[: len(a)]
        vec = [
            sum((Fraction(alpha[i]) * a[i][c] for i in range(len(a))), Fraction(0))
            for c in range(ncols)
        ]
        if any(vec):
            vecs.append(vec)
    return canonical_basis(vecs)


def spans_equal(a: list[list[Fraction]], b: list[list[Fraction]]) -> bool:
    ra, rb = rank_frac(a), rank_frac(b)
    if ra != rb:
        return False
    return rank_frac(a + b) == ra
