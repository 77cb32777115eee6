"""Finite chain complexes over a field with labelled bases.

One engine serves Taylor strands, the wedge-complex strands and simplicial
cochain complexes. Labels are opaque; all algebra is positional.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass, field
from typing import Hashable, Iterator, Mapping, Optional, Sequence

from .linalg import Echelon, ExactMatrix, FieldSpec, nullspace_basis, rank, solve_affine

__all__ = [
    "ChainComplex",
    "HomologyBasis",
    "homology_dims",
    "homology_representatives",
    "express_in_homology",
    "audit",
    "AuditLog",
]


@dataclass
class AuditLog:
    eager_euler: bool = False
    complexes: int = 0
    dd_checks: int = 0
    euler_checks: int = 0


_AUDITS: list[AuditLog] = []


@contextlib.contextmanager
def audit(eager_euler: bool = False) -> Iterator[AuditLog]:
    """Count structural checks performed while the context is open.

    With ``eager_euler`` every complex built inside the context also gets
    its Euler balance checked at construction. Failures are never counted:
    a failing d∘d or Euler check raises.
    """
    log = AuditLog(eager_euler)
    _AUDITS.append(log)
    try:
        yield log
    finally:
        _AUDITS.remove(log)


def _note(attr: str) -> None:
    for log in _AUDITS:
        setattr(log, attr, getattr(log, attr) + 1)


class ChainComplex:
    """Graded vector space with a differential of degree ``direction``.

    ``direction=-1`` is a chain complex (``d_q: C_q -> C_{q-1}``);
    ``direction=+1`` is a cochain complex (``d^q: C^q -> C^{q+1}``).
    ``boundaries[q]`` is the map *out of* degree ``q``; missing maps are zero.
    ``d∘d = 0`` is checked on construction.
    """

    def __init__(
        self,
        field: FieldSpec,
        bases: Mapping[int, Sequence[Hashable]],
        boundaries: Optional[Mapping[int, ExactMatrix]] = None,
        direction: int = -1,
    ):
        if direction not in (-1, 1):
            raise ValueError("direction must be -1 or +1")
        self.field = field
        self.direction = direction
        degs = sorted(q for q, b in bases.items() if len(b))
        if degs:
            self.lo, self.hi = degs[0], degs[-1]
        else:
            self.lo, self.hi = 0, -1
        self._bases = {q: tuple(bases.get(q, ())) for q in range(self.lo, self.hi + 1)}
        self._index = {q: {lab: i for i, lab in enumerate(b)} for q, b in self._bases.items()}
        for q, b in self._bases.items():
            if len(self._index[q]) != len(b):
                raise ValueError(f"duplicate basis labels in degree {q}")
        self._d: dict[int, ExactMatrix] = {}
        for q, M in (boundaries or {}).items():
            src, tgt = self.dim(q), self.dim(q + direction)
            if M.shape != (tgt, src):
                raise ValueError(f"boundary out of degree {q} has shape {M.shape}, expected {(tgt, src)}")
            if M.field != field:
                raise ValueError("boundary matrix field does not match complex field")
            if src and tgt:
                self._d[q] = M
        self._ranks: dict[int, int] = {}
        self._validate()
        _note("complexes")
        if any(log.eager_euler for log in _AUDITS):
            homology_dims(self)

    @property
    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def basis(self, q: int) -> tuple:
        return self._bases.get(q, ())

    def index(self, q: int, label) -> int:
        return self._index[q][label]

    def dim(self, q: int) -> int:
        return len(self._bases.get(q, ()))

    def d(self, q: int) -> ExactMatrix:
        M = self._d.get(q)
        if M is None:
            return ExactMatrix.zeros(self.dim(q + self.direction), self.dim(q), self.field)
        return M

    def boundary_rank(self, q: int) -> int:
        if q not in self._ranks:
            M = self._d.get(q)
            self._ranks[q] = 0 if M is None else rank(M)
        return self._ranks[q]

    def _validate(self) -> None:
        for q in list(self._d):
            nxt = self._d.get(q + self.direction)
            if nxt is not None and not (nxt @ self._d[q]).is_zero():
                raise ValueError(f"d∘d != 0 starting in degree {q}")
        _note("dd_checks")

    def euler_characteristic(self) -> int:
        return sum((-1) ** (q % 2) * self.dim(q) for q in self.degrees)

    def __repr__(self) -> str:
        dims = {q: self.dim(q) for q in self.degrees}
        return f"ChainComplex({self.field}, dims={dims}, direction={self.direction:+d})"


def homology_dims(C: ChainComplex) -> dict[int, int]:
    """``dim H_q = dim C_q - rank(out of q) - rank(into q)`` for every degree."""
    dims = {}
    for q in C.degrees:
        dims[q] = C.dim(q) - C.boundary_rank(q) - C.boundary_rank(q - C.direction)
        if dims[q] < 0:
            raise AssertionError(f"negative homology in degree {q}")
    chi_h = sum((-1) ** (q % 2) * h for q, h in dims.items())
    if chi_h != C.euler_characteristic():
        raise AssertionError("Euler characteristic of homology does not match the chains")
    _note("euler_checks")
    return dims


@dataclass(frozen=True)
class HomologyBasis:
    """Cycle representatives per degree, linearly independent modulo boundaries."""

    complex: ChainComplex = field(repr=False)
    representatives: Mapping[int, tuple]

    def reps(self, q: int) -> tuple:
        return self.representatives.get(q, ())

    def express(self, z: Sequence, q: int) -> tuple:
        return express_in_homology(self.complex, self, z, q)


def _incoming_columns(C: ChainComplex, q: int) -> list[dict]:
    M = C.d(q - C.direction)
    return M.transpose().sparse_rows()


def homology_representatives(C: ChainComplex) -> HomologyBasis:
    """Extend a basis of the boundaries by kernel vectors, taken in echelon order."""
    reps = {}
    for q in C.degrees:
        span = Echelon(C.field)
        for col in _incoming_columns(C, q):
            if col:
                span.add(col)
        chosen = []
        for v in nullspace_basis(C.d(q)):
            if span.add({j: x for j, x in enumerate(v) if x != 0}):
                chosen.append(v)
        reps[q] = tuple(chosen)
    H = HomologyBasis(C, reps)
    dims = homology_dims(C)
    assert all(len(H.reps(q)) == dims[q] for q in C.degrees)
    return H


def express_in_homology(C: ChainComplex, H: HomologyBasis, z: Sequence, q: int) -> tuple:
    """Coordinates ``c`` with ``z - sum(c_i rep_i)`` a boundary."""
    if len(z) != C.dim(q):
        raise ValueError(f"vector length {len(z)} does not match dim C_{q} = {C.dim(q)}")
    z = tuple(C.field.coerce(x) for x in z)
    if any(C.d(q).apply(z)):
        raise ValueError("not a cycle")
    reps = H.reps(q)
    if not reps:
        return ()
    incoming = C.d(q - C.direction)
    cols = [list(r) for r in reps] + [list(incoming.column(j)) for j in range(incoming.cols)]
    M = ExactMatrix(C.dim(q), len(cols), tuple(zip(*cols)), C.field)
    x = solve_affine(M, z)
    if x is None:
        raise AssertionError("cycle not expressible in homology basis")
    return x[: len(reps)]
