"""Construction of the matrix families and exact rank/kernel computations.

Matrices are dense, exact, and carry their row/column index sets. Kernels are
always returned in canonical form: reduced echelon basis, primitive integer
vectors, positive leading entry. "Left kernel" means row vectors v with
v.M = 0; "right kernel" means columns x with M.x = 0.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .coeffs import (
    IndexSet,
    Index,
    b_coeff,
    c_coeff,
    delta,
    e_coeff,
    h_coeff,
    index_set,
    j_pattern,
)
from .errors import ContractViolation
from .poly import LabeledVector
from .scalars import parse_rat, rat_str


def idx_str(idx: Index) -> str:
    return "(" + ",".join(str(n) for n in idx) + ")"


def parse_idx(s: str) -> Index:
    s = s.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ContractViolation(f"bad index label {s!r}")
    return tuple(int(p) for p in s[1:-1].split(",") if p != "")


@dataclass(frozen=True)
class QMatrix:
    """Dense exact matrix with labelled rows and columns."""

    rows: IndexSet
    cols: IndexSet
    entries: tuple[tuple[Fraction, ...], ...]
    family: str = ""
    weight: int = 0
    j: int | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def entry(self, m: Index, n: Index) -> Fraction:
        return self.entries[self.rows.position(m)][self.cols.position(n)]

    def entry_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def transpose_lists(self) -> list[list[Fraction]]:
        return [list(col) for col in zip(*self.entries)] if self.entries else []

    def id_str(self) -> str:
        jj = f",j={self.j}" if self.j is not None else ""
        return f"{self.family or 'matrix'}[k={self.weight}{jj}]"

    # -- serialization ---------------------------------------------------------

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + [idx_str(n) for n in self.cols])
        for m, row in zip(self.rows, self.entries):
            writer.writerow([idx_str(m)] + [rat_str(x) for x in row])
        return buf.getvalue()

    @staticmethod
    def from_csv(text: str) -> "QMatrix":
        reader = csv.reader(io.StringIO(text))
        lines = [row for row in reader if row]
        cols = tuple(parse_idx(c) for c in lines[0][1:])
        rows = []
        entries = []
        for cells in lines[1:]:
            rows.append(parse_idx(cells[0]))
            entries.append(tuple(parse_rat(x) for x in cells[1:]))
        weight = sum(rows[0]) if rows else 0
        return QMatrix(
            _synthetic_indexset(weight, rows),
            _synthetic_indexset(sum(cols[0]) if cols else 0, list(cols)),
            tuple(entries),
        )

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "weight": self.weight,
            "j": self.j,
            "rows": [idx_str(m) for m in self.rows],
            "cols": [idx_str(n) for n in self.cols],
            "entries": [[rat_str(x) for x in row] for row in self.entries],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "QMatrix":
        rows = [parse_idx(s) for s in d["rows"]]
        cols = [parse_idx(s) for s in d["cols"]]
        entries = tuple(tuple(parse_rat(x) for x in row) for row in d["entries"])
        return QMatrix(
            _synthetic_indexset(sum(rows[0]) if rows else d["weight"], rows),
            _synthetic_indexset(sum(cols[0]) if cols else d["weight"], cols),
            entries,
            family=d.get("family", ""),
            weight=d.get("weight", 0),
            j=d.get("j"),
        )


def _synthetic_indexset(weight: int, members: list[Index]) -> IndexSet:
    """IndexSet wrapper for labels parsed back from a serialized matrix."""
    arity = len(members[0]) if members else 1
    return IndexSet(max(weight, 2), ("a",) * arity, tuple(members))


@dataclass(frozen=True)
class KernelBasis:
    """Canonical basis of a one-sided kernel, as primitive integer vectors."""

    side: str  # "left" or "right"
    labels: IndexSet
    vectors: tuple[tuple[int, ...], ...]
    matrix_id: str

    @property
    def dim(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class Membership:
    member: bool
    witness: LabeledVector | None


# ---------------------------------------------------------------------------
# Families

_EVEN_FAMILIES = {
    "C3",
    "B3",
    "E3",
    "B3hat",
    "E3hat",
    "L",
    "C2depth2",
    "Ceee",
    "H3",
}
_ODD_FAMILIES = {"B2", "B2hat"}


def _b3_entry(m: Index, n: Index) -> int:
    return delta((m[0],), (n[0],)) * e_coeff((m[1], m[2]), (n[1], n[2]))


@lru_cache(maxsize=None)
def build_matrix(family: str, weight: int, j: int | None = None) -> QMatrix:
    """Build one of the named coefficient matrices at the given weight.

    Families: C3, B3, E3, B3hat, E3hat, L (even weight, depth 3);
    C2depth2 (even, depth 2); Ceee, H3 (even); B2, B2hat (odd weight).
    C3 and H3 take the column-pattern selector j (default 3).
    """
    if family not in _EVEN_FAMILIES | _ODD_FAMILIES:
        raise ContractViolation(f"unknown matrix family {family!r}")
    if family in _EVEN_FAMILIES and weight % 2 == 1:
        raise ContractViolation(f"family {family} needs even weight, got {weight}")
    if family in _ODD_FAMILIES and weight % 2 == 0:
        raise ContractViolation(f"family {family} needs odd weight, got {weight}")

    if family in ("C3", "H3"):
        jj = 3 if j is None else j
        cols = index_set(weight, j_pattern(jj))
    else:
        jj = None

    if family == "C3":
        rows = index_set(weight, "ooe")
        fn = c_coeff
    elif family == "H3":
        rows = index_set(weight, "aae")
        fn = h_coeff
    elif family == "B3":
        rows = cols = index_set(weight, "ooe")
        fn = _b3_entry
    elif family == "E3":
        rows = cols = index_set(weight, "ooe")
        fn = e_coeff
    elif family == "B3hat":
        rows = cols = index_set(weight, "ooe0")
        fn = _b3_entry
    elif family == "E3hat":
        rows = cols = index_set(weight, "ooe0")
        fn = e_coeff
    elif family == "L":
        rows = cols = index_set(weight, "ooe0")
        fn = lambda m, n: e_coeff(m, n) - delta(m, n)
    elif family == "C2depth2":
        rows = index_set(weight, "oo")
        cols = index_set(weight, "aa")
        fn = e_coeff
    elif family == "Ceee":
        rows = index_set(weight, "ooe")
        cols = index_set(weight, "eee")
        fn = c_coeff
    elif family == "B2":
        rows = cols = index_set(weight, "oe")
        fn = e_coeff
    else:  # B2hat
        rows = cols = index_set(weight, "oe0")
        fn = e_coeff

    entries = tuple(
        tuple(Fraction(fn(m, n)) for n in cols.members) for m in rows.members
    )
    return QMatrix(rows, cols, entries, family=family, weight=weight, j=jj)


def cor72_left_factor(weight: int) -> QMatrix:
    """Depth-2 block factor: e on the first pair, delta on the last slot."""
    rows = index_set(weight, "ooe")
    cols = index_set(weight, "aae")
    entries = tuple(
        tuple(
            Fraction(delta((m[2],), (n[2],)) * e_coeff((m[0], m[1]), (n[0], n[1])))
            for n in cols.members
        )
        for m in rows.members
    )
    return QMatrix(rows, cols, entries, family="cor72-left", weight=weight)


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    if a.cols.members != b.rows.members:
        raise ContractViolation("matmul: inner labels do not match")
    prod = linalg.matmul_frac(a.entry_lists(), b.entry_lists())
    return QMatrix(
        a.rows,
        b.cols,
        tuple(tuple(row) for row in prod),
        family=f"{a.family}*{b.family}",
        weight=a.weight,
    )


# ---------------------------------------------------------------------------
# Rank and kernels


def rank(M: QMatrix) -> int:
    """Exact rank via fraction-free elimination."""
    return linalg.rank_frac(M.entry_lists())


def right_kernel(M: QMatrix) -> KernelBasis:
    vecs = linalg.right_kernel_frac(M.entry_lists(), len(M.cols))
    return KernelBasis("right", M.cols, tuple(vecs), M.id_str())


def left_kernel(M: QMatrix) -> KernelBasis:
    vecs = linalg.right_kernel_frac(M.transpose_lists(), len(M.rows))
    return KernelBasis("left", M.rows, tuple(vecs), M.id_str())


def annihilates(vector, M: QMatrix, side: str) -> bool:
    """Exact check that vector . M = 0 (left) or M . vector = 0 (right)."""
    vals = [Fraction(x) for x in vector]
    if side == "left":
        if len(vals) != len(M.rows):
            raise ContractViolation("left annihilation: length mismatch")
        rows = M.transpose_lists()
    else:
        if len(vals) != len(M.cols):
            raise ContractViolation("right annihilation: length mismatch")
        rows = M.entry_lists()
    return all(v == 0 for v in linalg.matvec(rows, vals))


def row_space_membership(M: QMatrix, v: LabeledVector) -> Membership:
    """Is v in the row space of M? If so, return one witness w with w.M = v."""
    if v.labels.members != M.cols.members:
        raise ContractViolation(
            f"row_space_membership: vector labelled by {v.labels.label()}, "
            f"matrix columns are {M.cols.label()}"
        )
    sol = linalg.solve_linear(M.transpose_lists(), [Fraction(x) for x in v.values])
    if sol is None:
        return Membership(False, None)
    return Membership(True, LabeledVector(M.rows, tuple(sol)))
