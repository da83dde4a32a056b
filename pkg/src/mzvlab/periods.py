"""Rational period-polynomial bases and critical-value coefficient maps.

The bases are exact solution spaces of the defining linear systems, kept in
canonical form: reduced echelon w.r.t. descending lexicographic monomial
order, primitive integer coefficients, positive leading coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .coeffs import index_set, lambda_coeff
from .errors import ContractViolation
from .poly import LabeledVector, LaurentPoly, bi_poly, pgl2_apply, tri_poly
from .scalars import beta, binom

# (x1, x2) -> (x1+x2, x2) and (x1, x2) -> (x1+x2, x1)
_T = ((1, 1), (0, 1))
_U = ((1, 1), (1, 0))

PERIOD_KINDS = ("W+0", "W-", "W+full", "cusp-even")
LIFT_FAMILIES = ("P+", "Q+", "Q-", "Phat+")


@dataclass(frozen=True)
class PeriodBasis:
    kind: str
    weight: int
    basis: tuple[LaurentPoly, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "weight": self.weight,
            "dim": self.dim,
            "basis": [p.to_json_list() for p in self.basis],
        }


@dataclass(frozen=True)
class LiftedBasis:
    family: str
    weight: int
    basis: tuple[LaurentPoly, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "weight": self.weight,
            "dim": self.dim,
            "basis": [p.to_json_list() for p in self.basis],
        }


def _support(weight: int, parity: str) -> list[tuple[int, int]]:
    """Degree-(weight-2) exponent pairs of the given x1-parity, descending."""
    deg = weight - 2
    rem = 0 if parity == "even" else 1
    return [(a, deg - a) for a in range(deg, -1, -1) if a % 2 == rem]


def _solve_relation_space(weight: int, parity: str, sign: int, restricted: bool):
    """Kernel of p -> p - p(x1+x2, x2) + sign*p(x1+x2, x1) on parity monomials.

    With `restricted`, also impose p(x1, 0) = 0. Returns (support, vectors)
    with vectors canonical primitive-integer rows over the support order.
    """
    support = _support(weight, parity)
    if not support:
        return support, []
    constraints: dict[tuple[int, int], dict[int, Fraction]] = {}
    for col, (a, b) in enumerate(support):
        mono = bi_poly({(a, b): 1})
        img = mono - pgl2_apply(mono, _T) + sign * pgl2_apply(mono, _U)
        for exps, coef in img.sorted_terms():
            constraints.setdefault(exps, {})[col] = coef
    rows = [
        [cmap.get(col, Fraction(0)) for col in range(len(support))]
        for _, cmap in sorted(constraints.items())
    ]
    if restricted:
        deg = weight - 2
        if (deg, 0) in support:
            row = [Fraction(0)] * len(support)
            row[support.index((deg, 0))] = Fraction(1)
            rows.append(row)
    vectors = linalg.right_kernel_frac(rows, len(support))
    return support, [list(map(Fraction, v)) for v in vectors]


def _vectors_to_polys(support, vectors) -> tuple[LaurentPoly, ...]:
    out = []
    for v in linalg.canonical_basis([list(map(Fraction, vec)) for vec in vectors]):
        out.append(bi_poly({support[i]: c for i, c in enumerate(v) if c}))
    return tuple(out)


def _kz_functional_row(weight: int, support) -> list[Fraction]:
    """Linear form whose kernel keeps exactly the cusp-form period combos.

    Reads off the normalized critical-value extraction at each odd s and
    pairs it with the Eisenstein-orthogonality coefficients lambda(k-s, s).
    """
    k = weight
    pos = {exps: i for i, exps in enumerate(support)}
    coeffs = [Fraction(0)] * len(support)
    for s in range(1, k, 2):
        exps = (k - s - 1, s - 1)
        if exps in pos:
            coeffs[pos[exps]] += lambda_coeff(k - s, s) / binom(k - 2, s - 1)
    return coeffs


@lru_cache(maxsize=None)
def period_basis(kind: str, weight: int) -> PeriodBasis:
    """Canonical basis of one of the period-polynomial solution spaces.

    W+0: even in x1, plus-relation, vanishing at x2 = 0.
    W-: odd in x1, minus-relation.
    W+full: even in x1, plus-relation (no vanishing condition).
    cusp-even: W+full cut by the Eisenstein-orthogonality functional.
    """
    if kind not in PERIOD_KINDS:
        raise ContractViolation(f"unknown period basis kind {kind!r}")
    if weight % 2 == 1 or weight < 4:
        raise ContractViolation(f"period_basis: weight must be even >= 4, got {weight}")
    if kind == "W+0":
        support, vecs = _solve_relation_space(weight, "even", +1, restricted=True)
    elif kind == "W-":
        support, vecs = _solve_relation_space(weight, "odd", -1, restricted=False)
    elif kind == "W+full":
        support, vecs = _solve_relation_space(weight, "even", +1, restricted=False)
    else:  # cusp-even
        support, vecs = _solve_relation_space(weight, "even", +1, restricted=False)
        if vecs:
            functional = _kz_functional_row(weight, support)
            fvals = [
                sum((functional[i] * v[i] for i in range(len(support))), Fraction(0))
                for v in vecs
            ]
            combos = linalg.right_kernel_frac([list(fvals)], len(vecs))
            vecs = [
                [
                    sum((Fraction(c[t]) * vecs[t][i] for t in range(len(vecs))), Fraction(0))
                    for i in range(len(support))
                ]
                for c in combos
            ]
    return PeriodBasis(kind, weight, _vectors_to_polys(support, vecs))


@lru_cache(maxsize=None)
def lifted_basis(family: str, weight: int) -> LiftedBasis:
    """Trivariate bases assembled from period-space layers.

    P+:    p(x1,x2) * x3^(k-n-1), p in W+0_n, 0 < n < k even.
    Q+:    x1^(n-1) * p(x2,x3),   p in W+0_{k-n+1}, 1 < n < k odd.
    Q-:    x1^(n-1) * p(x2,x3),   p in W-_{k-n-1},  1 < n < k odd.
    Phat+: p(x1,x2) * x3^(k-n-1), p in W+0_n, 0 < n <= k even (x3^-1 layer).
    """
    if family not in LIFT_FAMILIES:
        raise ContractViolation(f"unknown lifted basis family {family!r}")
    if weight % 2 == 1:
        raise ContractViolation(f"lifted_basis: weight must be even, got {weight}")
    k = weight
    polys: list[LaurentPoly] = []
    if family in ("P+", "Phat+"):
        top = k + 1 if family == "Phat+" else k
        for n in range(4, top, 2):
            e3 = k - n - 1
            for p in period_basis("W+0", n).basis:
                polys.append(
                    tri_poly({(a, b, e3): c for (a, b), c in p.sorted_terms()})
                )
    elif family == "Q+":
        for n in range(3, k, 2):
            if k - n + 1 < 4:
                continue
            for p in period_basis("W+0", k - n + 1).basis:
                polys.append(
                    tri_poly({(n - 1, a, b): c for (a, b), c in p.sorted_terms()})
                )
    else:  # Q-
        for n in range(3, k, 2):
            if k - n - 1 < 4:
                continue
            for p in period_basis("W-", k - n - 1).basis:
                polys.append(
                    tri_poly({(n - 1, a, b): c for (a, b), c in p.sorted_terms()})
                )
    return LiftedBasis(family, weight, tuple(polys))


def _check_homogeneous(p: LaurentPoly, degree: int, what: str) -> None:
    degs = p.total_degrees()
    if degs and degs != {degree}:
        raise ContractViolation(f"{what}: input not homogeneous of degree {degree}")


def cusp_coeffs(kind: str, p: LaurentPoly, weight: int) -> dict[tuple[int, int], Fraction]:
    """Normalized coefficient extraction from a period polynomial.

    even-a: expand p(x1+x2, x1), divide by C(k-2, i-1); keys i+j = k.
    odd-b:  expand p(x1+x2, x2) - (x1/x2) p(x1+x2, x1), divide by C(k-1, i-1).
    even-c: expand d/dx1 p(x1+x2, x2) - d/dx2 p(x1+x2, x1), divide by
            C(k-3, i-1); keys i+j = k-1.
    """
    k = weight
    if kind not in ("even-a", "odd-b", "even-c"):
        raise ContractViolation(f"unknown cusp coefficient kind {kind!r}")
    if p.nvars != 2 or not p.is_polynomial():
        raise ContractViolation("cusp_coeffs: bivariate polynomial required")
    _check_homogeneous(p, k - 2, "cusp_coeffs")
    out: dict[tuple[int, int], Fraction] = {}
    if kind == "even-a":
        q = pgl2_apply(p, _U)
        for i in range(1, k):
            out[(i, k - i)] = q.coeff((i - 1, k - i - 1)) / binom(k - 2, i - 1)
        return out
    if kind == "odd-b":
        qa = pgl2_apply(p, _T)
        qb = pgl2_apply(p, _U)
        # (x1/x2) * qb; its 1/x2 layer is p(x1, x1), which must vanish
        shifted = {(e1 + 1, e2 - 1): c for (e1, e2), c in qb.sorted_terms()}
        if any(e[1] < 0 and c for e, c in shifted.items()):
            raise ContractViolation(
                "odd-b: combination has a nonvanishing 1/x2 layer; "
                "input is not an odd period polynomial"
            )
        q = qa - LaurentPoly(2, {e: c for e, c in shifted.items() if e[1] >= 0})
        for i in range(1, k):
            out[(i, k - i)] = q.coeff((i - 1, k - i - 1)) / binom(k - 1, i - 1)
        return out
    # even-c
    qa = pgl2_apply(p, _T).partial(0)
    qb = pgl2_apply(p, _U).partial(1)
    q = qa - qb
    for i in range(1, k - 1):
        out[(i, k - 1 - i)] = q.coeff((i - 1, k - 2 - i)) / binom(k - 3, i - 1)
    return out


def eisenstein_kernel_vector(weight: int) -> LabeledVector:
    """Left annihilator of the extended depth-2 matrix at odd weight.

    Coefficients of x1 * Ghat_{weight-1} with the x1^0 layer removed: entry
    4*beta_{n1-1}*beta_{n2} at each (n1, n2), nonzero at (weight, 0).
    """
    k = weight
    if k % 2 == 0 or k < 3:
        raise ContractViolation(f"weight must be odd >= 3, got {k}")
    labels = index_set(k, "oe0")
    values = tuple(4 * beta(n1 - 1) * beta(n2) for n1, n2 in labels.members)
    return LabeledVector(labels, values)
