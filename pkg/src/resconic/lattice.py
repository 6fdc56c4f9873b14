"""Néron-Severi lattice of a plane blown up at nine points.

A class is stored as ``(a, b1, ..., b9)`` and stands for ``a*l - sum(bi*ei)``,
where ``l`` is the pullback of a line and ``ei`` are total-transform exceptional
classes.  The pairing is diagonal: ``l.l = 1``, ``ei.ei = -1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

RANK = 10
N_POINTS = 9


@dataclass(frozen=True, order=True)
class DivisorClass:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != RANK:
            raise ValueError(f"a divisor class needs {RANK} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def of(cls, degree: int, mults: Sequence[int] = ()) -> DivisorClass:
        """``degree*l - sum(mults[i]*e_{i+1})``; missing multiplicities are zero."""
        mults = list(mults) + [0] * (N_POINTS - len(mults))
        return cls((degree, *mults))

    @property
    def degree(self) -> int:
        return self.coeffs[0]

    @property
    def mults(self) -> tuple[int, ...]:
        return self.coeffs[1:]

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-x for x in self.coeffs))

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(tuple(k * x for x in self.coeffs))

    __rmul__ = __mul__

    def __matmul__(self, other: DivisorClass) -> int:
        return intersect(self, other)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        parts = []
        if self.degree:
            parts.append(f"{self.degree}l" if self.degree != 1 else "l")
        for i, b in enumerate(self.mults, start=1):
            if b == 0:
                continue
            sign = "-" if b > 0 else "+"
            mag = "" if abs(b) == 1 else str(abs(b))
            parts.append(f"{sign}{mag}e{i}")
        if not parts:
            return "0"
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s


ZERO = DivisorClass((0,) * RANK)
LINE = DivisorClass.of(1)
CANONICAL = DivisorClass((-3,) + (-1,) * N_POINTS)
ANTICANONICAL = -CANONICAL


def exceptional(i: int) -> DivisorClass:
    """Total transform ``e_i`` (1-based)."""
    if not 1 <= i <= N_POINTS:
        raise ValueError(f"point index must be in 1..{N_POINTS}, got {i}")
    c = [0] * RANK
    c[i] = -1
    return DivisorClass(tuple(c))


def total(terms: Iterable[tuple[DivisorClass, int]]) -> DivisorClass:
    acc = ZERO
    for cls, m in terms:
        acc = acc + m * cls
    return acc


def gram_matrix() -> list[list[int]]:
    return [[(1 if i == 0 else -1) if i == j else 0 for j in range(RANK)] for i in range(RANK)]


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    a, b = d1.coeffs, d2.coeffs
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


def self_intersection(d: DivisorClass) -> int:
    return intersect(d, d)


def anticanonical_degree(d: DivisorClass) -> int:
    """``D.(-K)``; for ``a*l - sum bi*ei`` this is ``3a - sum bi``."""
    return intersect(d, ANTICANONICAL)


def arithmetic_genus(d: DivisorClass) -> Fraction:
    # adjunction: 2p_a - 2 = D^2 + D.K
    return 1 + Fraction(self_intersection(d) + intersect(d, CANONICAL), 2)


def riemann_roch_chi(d: DivisorClass) -> int:
    """Euler characteristic ``chi(O_X(D)) = 1 + (D^2 - D.K)/2``.

    ``D^2 - D.K`` is always even on this lattice (``K`` is characteristic),
    so the value is an integer.
    """
    num = self_intersection(d) - intersect(d, CANONICAL)
    assert num % 2 == 0
    return 1 + num // 2


def is_conic_class_numeric(d: DivisorClass) -> bool:
    """``D^2 == 0`` and ``D.(-K) == 2``. Nefness is not checked here."""
    return self_intersection(d) == 0 and anticanonical_degree(d) == 2
