"""Exact linear algebra over the rationals and prime fields.

Matrices are dense at the API level (:class:`ExactMatrix`), but elimination
runs on sparse dict rows: every boundary map in this package has entries in
{-1, 0, 1} and very few nonzeros per column. Reduced row echelon form is
unique, so results do not depend on the order rows are fed in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "FieldSpec",
    "QQ",
    "GF2",
    "parse_field",
    "ExactMatrix",
    "Echelon",
    "rank",
    "rref",
    "nullspace_basis",
    "solve_affine",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``kind`` is ``"rational"`` or ``"prime"``."""

    kind: str = "rational"
    p: int = 0

    def __post_init__(self):
        if self.kind == "rational":
            if self.p != 0:
                raise ValueError("rational field takes no modulus")
        elif self.kind == "prime":
            if not (2 <= self.p < 2**31 and _is_prime(self.p)):
                raise ValueError(f"modulus must be a prime in [2, 2^31), got {self.p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    @property
    def characteristic(self) -> int:
        return self.p

    def coerce(self, x):
        if self.is_rational:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return x
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.is_rational:
            return 1 / Fraction(x)
        return pow(x, -1, self.p)

    def norm(self, x):
        return x if self.is_rational else x % self.p

    def __str__(self) -> str:
        return "rational" if self.is_rational else f"gf:{self.p}"


QQ = FieldSpec()
GF2 = FieldSpec.gf(2)


def parse_field(text: str) -> FieldSpec:
    """Parse ``rational`` or ``gf:p``."""
    text = text.strip().lower()
    if text in ("rational", "q", "qq"):
        return QQ
    if text.startswith("gf:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad field {text!r}") from None
        return FieldSpec.gf(p)
    raise ValueError(f"bad field {text!r}; expected 'rational' or 'gf:p'")


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major tuple of row tuples
    field: FieldSpec = QQ

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec = QQ, cols: Optional[int] = None):
        rows = [tuple(field.coerce(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, tuple(rows), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec = QQ) -> "ExactMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> "ExactMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), field)

    @classmethod
    def from_sparse(cls, rows: int, cols: int, items: dict, field: FieldSpec = QQ) -> "ExactMatrix":
        """Build from ``{(i, j): value}``."""
        grid = [[0] * cols for _ in range(rows)]
        for (i, j), v in items.items():
            grid[i][j] = field.coerce(v)
        return cls(rows, cols, tuple(tuple(r) for r in grid), field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)), self.field)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        f = self.field
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for r in self.entries:
            nz = [(k, x) for k, x in enumerate(r) if x != 0]
            out.append(tuple(f.norm(sum(x * c[k] for k, x in nz)) for c in cols))
        return ExactMatrix(self.rows, other.cols, tuple(out), f)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        f = self.field
        nz = [(k, x) for k, x in enumerate(v) if x != 0]
        return tuple(f.norm(sum(r[k] * x for k, x in nz)) for r in self.entries)

    def sparse_rows(self) -> list[dict]:
        return [{j: x for j, x in enumerate(r) if x != 0} for r in self.entries]


class Echelon:
    """Incrementally maintained reduced row echelon form.

    ``pivots`` maps a pivot column to its row; each pivot row is 1 at its
    pivot column and 0 at every other pivot column.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.pivots: dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        f = self.field
        out = dict(row)
        # Pivot rows are mutually reduced, so one pass over the original
        # pivot-column coefficients is enough.
        for c in [c for c in row if c in self.pivots]:
            a = out.get(c, 0)
            if a == 0:
                continue
            for j, y in self.pivots[c].items():
                v = f.norm(out.get(j, 0) - a * y)
                if v == 0:
                    out.pop(j, None)
                else:
                    out[j] = v
        return out

    def add(self, row: dict) -> bool:
        """Insert ``row``; return whether it was independent."""
        f = self.field
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        inv = f.inv(r[c])
        r = {j: f.norm(x * inv) for j, x in r.items()}
        for prow in self.pivots.values():
            a = prow.get(c, 0)
            if a == 0:
                continue
            for j, y in r.items():
                v = f.norm(prow.get(j, 0) - a * y)
                if v == 0:
                    prow.pop(j, None)
                else:
                    prow[j] = v
        self.pivots[c] = r
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def rows(self) -> list[tuple[int, dict]]:
        return sorted(self.pivots.items())


def _echelon_of(rows: Iterable[dict], field: FieldSpec) -> Echelon:
    e = Echelon(field)
    for r in rows:
        if r:
            e.add(r)
    return e


def rank(M: ExactMatrix) -> int:
    # Eliminate along the shorter side; rank is transpose-invariant.
    rows = M.sparse_rows() if M.rows <= M.cols else M.transpose().sparse_rows()
    return len(_echelon_of(rows, M.field))


def rref(M: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    e = _echelon_of(M.sparse_rows(), M.field)
    pivots = tuple(c for c, _ in e.rows())
    grid = tuple(tuple(r.get(j, 0) for j in range(M.cols)) for _, r in e.rows())
    return ExactMatrix(len(grid), M.cols, grid, M.field), pivots


def nullspace_basis(M: ExactMatrix) -> list[tuple]:
    """Kernel basis read off the RREF: one vector per free column, in column order."""
    e = _echelon_of(M.sparse_rows(), M.field)
    f = M.field
    free = [j for j in range(M.cols) if j not in e.pivots]
    basis = []
    for j in free:
        v = [0] * M.cols
        v[j] = 1
        for c, r in e.pivots.items():
            a = r.get(j, 0)
            if a:
                v[c] = f.norm(-a)
        basis.append(tuple(v))
    return basis


def solve_affine(M: ExactMatrix, v: Sequence) -> Optional[tuple]:
    """Some ``x`` with ``M x = v`` (free variables zero), or ``None``."""
    if len(v) != M.rows:
        raise ValueError(f"right-hand side has length {len(v)}, expected {M.rows}")
    f = M.field
    n = M.cols
    aug = []
    for r, b in zip(M.sparse_rows(), v):
        b = f.coerce(b)
        if b != 0:
            r = dict(r)
            r[n] = b
        aug.append(r)
    e = _echelon_of(aug, f)
    if n in e.pivots:
        return None
    x = [0] * n
    for c, r in e.pivots.items():
        x[c] = r.get(n, 0)
    return tuple(x)
