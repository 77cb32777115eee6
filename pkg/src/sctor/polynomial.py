"""Single-variable integer polynomials used for Poincaré series."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

__all__ = ["PoincarePolynomial"]


@dataclass(frozen=True)
class PoincarePolynomial:
    """Coefficients in ascending degree; trailing zeros are trimmed."""

    coefficients: tuple = ()

    def __post_init__(self):
        c = [int(x) for x in self.coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "PoincarePolynomial":
        if degree < 0:
            raise ValueError("negative degree")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def one(cls) -> "PoincarePolynomial":
        return cls((1,))

    @classmethod
    def zero(cls) -> "PoincarePolynomial":
        return cls(())

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> "PoincarePolynomial":
        """Sum of ``coeff * x^degree`` over ``(degree, coeff)`` pairs."""
        acc: dict[int, int] = {}
        for d, c in terms:
            if d < 0:
                raise ValueError(f"negative degree {d}")
            acc[d] = acc.get(d, 0) + c
        top = max(acc, default=-1)
        return cls(tuple(acc.get(i, 0) for i in range(top + 1)))

    @classmethod
    def parse(cls, text: str, var: str = "x") -> "PoincarePolynomial":
        """Inverse of :meth:`format` (ascending or not, ``+`` separated)."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls.zero()
        terms = []
        pat = re.compile(rf"^(\d*)(?:{re.escape(var)}(?:\^(\d+))?)?$")
        for tok in text.split("+"):
            mt = pat.match(tok)
            if not tok or not mt:
                raise ValueError(f"cannot parse term {tok!r}")
            coeff, power = mt.groups()
            if var in tok:
                deg = int(power) if power else 1
                c = int(coeff) if coeff else 1
            else:
                deg, c = 0, int(coeff)
            terms.append((deg, c))
        return cls.from_terms(terms)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coeff(self, d: int) -> int:
        return self.coefficients[d] if 0 <= d < len(self.coefficients) else 0

    def total(self) -> int:
        """Value at 1; the total Betti number for a dimension series."""
        return sum(self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def shift(self, k: int) -> "PoincarePolynomial":
        if self.is_zero():
            return self
        if k < 0 and any(self.coefficients[:-k]):
            raise ValueError("shift would produce a negative degree")
        if k < 0:
            return PoincarePolynomial(self.coefficients[-k:])
        return PoincarePolynomial((0,) * k + self.coefficients)

    def __add__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return PoincarePolynomial(tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        ))

    def __mul__(self, other):
        if isinstance(other, int):
            return PoincarePolynomial(tuple(other * c for c in self.coefficients))
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return PoincarePolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PoincarePolynomial(tuple(out))

    __rmul__ = __mul__

    def format(self, var: str = "x") -> str:
        parts = []
        for d, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
                continue
            mono = var if d == 1 else f"{var}^{d}"
            parts.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.format()

    def to_list(self) -> list[int]:
        return list(self.coefficients)
