"""Sparse bi/tri-variate Laurent polynomials over Q and their operators.

Terms live in a dict mapping exponent tuples to nonzero Fractions. Exponents
are capped below at -1 (only single x_i^-1 layers ever occur); anything lower
is rejected at construction. All operations are exact and return new objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .coeffs import IndexSet, index_set
from .errors import ContractViolation
from .scalars import beta, binom, rat_str, parse_rat

Exps = tuple[int, ...]


class LaurentPoly:
    """Sparse Laurent polynomial in `nvars` variables (2 or 3)."""

    __slots__ = ("nvars", "_t")

    def __init__(self, nvars: int, terms: Mapping[Exps, Fraction] | None = None):
        if nvars not in (2, 3):
            raise ContractViolation(f"LaurentPoly: nvars must be 2 or 3, got {nvars}")
        self.nvars = nvars
        t: dict[Exps, Fraction] = {}
        if terms:
            for exps, coef in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ContractViolation(f"exponent tuple {exps} has wrong arity")
                if any(e < -1 for e in exps):
                    raise ContractViolation(f"exponent below -1 in {exps}")
                c = Fraction(coef)
                if c:
                    t[exps] = t.get(exps, Fraction(0)) + c
                    if not t[exps]:
                        del t[exps]
        self._t = t

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "LaurentPoly":
        return LaurentPoly(nvars)

    @staticmethod
    def monomial(nvars: int, exps: Exps, coef: Fraction | int = 1) -> "LaurentPoly":
        return LaurentPoly(nvars, {tuple(exps): Fraction(coef)})

    # -- queries ---------------------------------------------------------------

    def coeff(self, exps: Exps) -> Fraction:
        return self._t.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._t

    def is_polynomial(self) -> bool:
        return all(e >= 0 for exps in self._t for e in exps)

    def sorted_terms(self) -> list[tuple[Exps, Fraction]]:
        return sorted(self._t.items())

    def support(self) -> list[Exps]:
        return sorted(self._t)

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self._t}

    def __len__(self) -> int:
        return len(self._t)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self._t == other._t
        )

    def __hash__(self):
        return hash((self.nvars, tuple(self.sorted_terms())))

    def __repr__(self) -> str:
        if not self._t:
            return "0"
        names = "xyz" if self.nvars == 3 else "xy"
        bits = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"{names[i]}^{e}" for i, e in enumerate(exps) if e
            ) or "1"
            bits.append(f"({rat_str(c)})*{mono}")
        return " + ".join(bits)

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compat(other)
        t = dict(self._t)
        for exps, c in other._t.items():
            s = t.get(exps, Fraction(0)) + c
            if s:
                t[exps] = s
            else:
                t.pop(exps, None)
        out = LaurentPoly(self.nvars)
        out._t = t
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly(self.nvars)
        out._t = {e: -c for e, c in self._t.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            out = LaurentPoly(self.nvars)
            if c:
                out._t = {e: v * c for e, v in self._t.items()}
            return out
        self._check_compat(other)
        t: dict[Exps, Fraction] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(x < -1 for x in e):
                    raise ContractViolation(f"product exponent below -1: {e}")
                s = t.get(e, Fraction(0)) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        out = LaurentPoly(self.nvars)
        out._t = t
        return out

    __rmul__ = __mul__

    def _check_compat(self, other: "LaurentPoly") -> None:
        if not isinstance(other, LaurentPoly) or other.nvars != self.nvars:
            raise ContractViolation("arity mismatch in polynomial operation")

    # -- calculus / reindexing -----------------------------------------------------

    def partial(self, var: int) -> "LaurentPoly":
        """Formal partial derivative; input must be polynomial in `var`."""
        t: dict[Exps, Fraction] = {}
        for exps, c in self._t.items():
            e = exps[var]
            if e < 0:
                raise ContractViolation("derivative of a negative-exponent term")
            if e == 0:
                continue
            ne = exps[:var] + (e - 1,) + exps[var + 1 :]
            t[ne] = t.get(ne, Fraction(0)) + c * e
        out = LaurentPoly(self.nvars)
        out._t = {e: c for e, c in t.items() if c}
        return out

    def permute_vars(self, perm: tuple[int, ...]) -> "LaurentPoly":
        """Relabel variables: new exponent i comes from old slot perm[i]."""
        out = LaurentPoly(self.nvars)
        out._t = {tuple(e[p] for p in perm): c for e, c in self._t.items()}
        return out

    def swap(self) -> "LaurentPoly":
        """Exchange the two variables of a bivariate polynomial."""
        if self.nvars != 2:
            raise ContractViolation("swap is for bivariate polynomials")
        return self.permute_vars((1, 0))

    def eval_at_zero(self, var: int) -> "LaurentPoly":
        """Substitute 0 for one variable (keeps the arity)."""
        t: dict[Exps, Fraction] = {}
        for exps, c in self._t.items():
            if exps[var] == 0:
                t[exps] = c
            elif exps[var] < 0:
                raise ContractViolation("cannot set a pole variable to 0")
        out = LaurentPoly(self.nvars)
        out._t = t
        return out

    # -- serialization -----------------------------------------------------------

    def to_json_list(self) -> list[dict]:
        return [
            {"exp": list(exps), "coef": rat_str(c)} for exps, c in self.sorted_terms()
        ]

    @staticmethod
    def from_json_list(nvars: int, items: Iterable[dict]) -> "LaurentPoly":
        return LaurentPoly(
            nvars, {tuple(it["exp"]): parse_rat(it["coef"]) for it in items}
        )


def bi_poly(terms: Mapping[Exps, Fraction | int] | None = None) -> LaurentPoly:
    return LaurentPoly(2, {k: Fraction(v) for k, v in (terms or {}).items()})


def tri_poly(terms: Mapping[Exps, Fraction | int] | None = None) -> LaurentPoly:
    return LaurentPoly(3, {k: Fraction(v) for k, v in (terms or {}).items()})


# Aliases matching the two domain shapes.
BiLaurentPoly = LaurentPoly
TriLaurentPoly = LaurentPoly


# ---------------------------------------------------------------------------
# Substitution machinery. A "form" is a signed sum of at most two variables,
# encoded as ((var, sign), ...). A substitution assigns a form to each slot.

Form = tuple[tuple[int, int], ...]
Subst = tuple[Form, Form, Form]


def _form_power(form: Form, e: int) -> list[tuple[Exps, int]]:
    """Expand form^e into (exponent delta, integer coefficient) pairs."""
    if len(form) == 1:
        (v, s) = form[0]
        d = [0, 0, 0]
        d[v] = e
        return [(tuple(d), s**e)]
    (u, su), (v, sv) = form
    out = []
    for i in range(e + 1):
        d = [0, 0, 0]
        d[u] = e - i
        d[v] = i
        coef = binom(e, i) * (su ** (e - i)) * (sv**i)
        out.append((tuple(d), coef))
    return out


def _apply_subst(f: LaurentPoly, sub: Subst) -> LaurentPoly:
    t: dict[Exps, Fraction] = {}
    for exps, c in f._t.items():
        acc: dict[Exps, Fraction] = {(0, 0, 0): c}
        for slot, e in enumerate(exps):
            expansion = _form_power(sub[slot], e)
            nxt: dict[Exps, Fraction] = {}
            for base, bc in acc.items():
                for delta, dc in expansion:
                    ne = tuple(a + b for a, b in zip(base, delta))
                    s = nxt.get(ne, Fraction(0)) + bc * dc
                    if s:
                        nxt[ne] = s
                    else:
                        nxt.pop(ne, None)
            acc = nxt
        for e2, c2 in acc.items():
            s = t.get(e2, Fraction(0)) + c2
            if s:
                t[e2] = s
            else:
                t.pop(e2, None)
    out = LaurentPoly(3)
    out._t = t
    return out


def _v(i: int) -> Form:
    return ((i, 1),)


def _d(i: int, j: int) -> Form:
    """x_i - x_j."""
    return ((i, 1), (j, -1))


# The five substitution operators, each a difference of two slot assignments.
# The middle argument of operator 3 is x3 - x2: on inputs even in the second
# variable this matches the x2 - x3 variant, and it is the reading that makes
# the two-route exchange identity (lemma71_defect == 0) hold exactly and the
# coefficient extractions parity-robust on intermediate images.
_SIGMA: dict[int, tuple[Subst, Subst]] = {
    1: ((_d(1, 0), _v(0), _v(2)), (_d(1, 0), _v(1), _v(2))),
    2: ((_d(2, 1), _v(0), _v(1)), (_d(2, 1), _v(0), _v(2))),
    3: ((_v(0), _d(2, 1), _v(1)), (_v(0), _d(2, 1), _v(2))),
    4: ((_d(1, 0), _d(2, 0), _v(0)), (_d(0, 1), _d(2, 1), _v(1))),
    5: ((_d(2, 1), _d(2, 0), _v(2)), (_d(1, 2), _d(1, 0), _v(1))),
}


def sigma_apply(i: int, f: LaurentPoly) -> LaurentPoly:
    """Apply the i-th substitution operator (difference of two images)."""
    if i not in _SIGMA:
        raise ContractViolation(f"sigma_apply: operator index must be 1..5, got {i}")
    if f.nvars != 3:
        raise ContractViolation("sigma_apply: trivariate input required")
    if not f.is_polynomial():
        raise ContractViolation("sigma_apply: negative exponent present")
    sub_a, sub_b = _SIGMA[i]
    return _apply_subst(f, sub_a) - _apply_subst(f, sub_b)


def sigma_sum(f: LaurentPoly, ids: Iterable[int]) -> LaurentPoly:
    """f + sum of sigma_i(f) over the listed operator indices."""
    out = f
    for i in ids:
        out = out + sigma_apply(i, f)
    return out


def lemma71_defect(f: LaurentPoly) -> LaurentPoly:
    """Difference of the two substitution routes; zero on even-even inputs.

    Requires f(+-x1, +-x2, x3) = f, i.e. every monomial has even exponents
    in the first two slots.
    """
    if f.nvars != 3 or not f.is_polynomial():
        raise ContractViolation("lemma71_defect: trivariate polynomial required")
    for exps in f._t:
        if exps[0] % 2 or exps[1] % 2:
            raise ContractViolation(
                f"lemma71_defect: monomial {exps} is not even in x1, x2"
            )
    lhs = sigma_sum(sigma_sum(f, (3,)), (1, 2))
    rhs = sigma_sum(sigma_sum(f, (1,)), (2, 3, 4, 5))
    return lhs - rhs


def pgl2_apply(F: LaurentPoly, g) -> LaurentPoly:
    """Linear change of variables F(x, y) -> F(a x + b y, c x + d y)."""
    if F.nvars != 2:
        raise ContractViolation("pgl2_apply: bivariate input required")
    if not F.is_polynomial():
        raise ContractViolation("pgl2_apply: polynomial input required")
    (a, b), (c, d) = g
    t: dict[Exps, Fraction] = {}
    for (e1, e2), coef in F._t.items():
        # (a x + b y)^e1 * (c x + d y)^e2
        first = [
            (e1 - i, i, binom(e1, i) * a ** (e1 - i) * b**i) for i in range(e1 + 1)
        ]
        second = [
            (e2 - j, j, binom(e2, j) * c ** (e2 - j) * d**j) for j in range(e2 + 1)
        ]
        for xi, yi, ci in first:
            if ci == 0:
                continue
            for xj, yj, cj in second:
                if cj == 0:
                    continue
                e = (xi + xj, yi + yj)
                s = t.get(e, Fraction(0)) + coef * ci * cj
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
    out = LaurentPoly(2)
    out._t = t
    return out


# ---------------------------------------------------------------------------
# Vectorization against canonical index sets, and the Eisenstein-type series.


@dataclass(frozen=True)
class LabeledVector:
    """Coefficient vector aligned with the members of an IndexSet."""

    labels: IndexSet
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(self.labels):
            raise ContractViolation("labeled vector length mismatch")

    def as_dict(self) -> dict:
        return {idx: v for idx, v in zip(self.labels.members, self.values) if v}

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)


def vectorize(f: LaurentPoly, weight: int, pattern: str = "ooe0") -> LabeledVector:
    """Coefficient vector of f over the index set of the given pattern.

    Monomial x^(n1-1) ... maps to index (n1, ...). Every monomial of f must
    land inside the set; strays raise with the offending exponent.
    """
    if f.nvars != 3:
        raise ContractViolation("vectorize: trivariate input required")
    labels = index_set(weight, pattern)
    pos = {idx: i for i, idx in enumerate(labels.members)}
    values = [Fraction(0)] * len(labels)
    for exps, c in f._t.items():
        idx = tuple(e + 1 for e in exps)
        if idx not in pos:
            raise ContractViolation(
                f"vectorize: monomial with exponents {exps} (index {idx}) "
                f"is outside {labels.label()}"
            )
        values[pos[idx]] = c
    return LabeledVector(labels, tuple(values))


def devectorize(vec: LabeledVector) -> LaurentPoly:
    """Inverse of vectorize (always produces a trivariate polynomial)."""
    t = {
        tuple(n - 1 for n in idx): v
        for idx, v in zip(vec.labels.members, vec.values)
        if v
    }
    return LaurentPoly(3, t)


def ghat(k: int) -> LaurentPoly:
    """Eisenstein extended period polynomial: 4 * sum beta*beta monomials."""
    if k % 2 == 1 or k < 4:
        raise ContractViolation(f"ghat: k must be even >= 4, got {k}")
    t: dict[Exps, Fraction] = {}
    for n1 in range(0, k + 1):
        c = 4 * beta(n1) * beta(k - n1)
        if c:
            t[(n1 - 1, k - n1 - 1)] = c
    return LaurentPoly(2, t)
