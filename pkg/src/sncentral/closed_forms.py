"""Closed-form multiplicities of two-row characters in ``phi``, and a checker.

The checker compares every formula against :func:`decompose_phi` at the
corresponding partition of ``2n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb, gcd

from .centralizer import decompose_phi
from .characters import MemoCache
from .errors import DomainError, IntegralityError
from .partitions import Partition

__all__ = [
    "Family",
    "ClosedFormResult",
    "CheckRow",
    "VerificationReport",
    "mult_trivial",
    "mult_hook_one",
    "mult_square",
    "mult_two_row_k2",
    "mult_two_row",
    "closed_form",
    "family_partition",
    "verify_closed_forms",
]


class Family(str, Enum):
    TRIVIAL_TOP = "TrivialTop"
    HOOK_ONE = "HookOne"
    SQUARE_NN = "SquareNN"
    TWO_ROW_K2 = "TwoRowK2"
    TWO_ROW_GENERAL = "TwoRowGeneral"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def mult_trivial(n: int) -> int:
    """Multiplicity of ``(2n)``; the trivial character occurs once."""
    _require(n >= 1, f"n must be >= 1, got {n}")
    return 1


def mult_hook_one(n: int) -> int:
    """Multiplicity of ``(2n-1, 1)``."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    return 1


def mult_square(n: int) -> int:
    """Multiplicity of ``(n, n)``."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    return 1


def mult_two_row_k2(n: int) -> int:
    """Multiplicity of ``(2n-2, 2)``: ``n/2`` for even ``n``, ``(n-1)/2`` for odd."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    return n // 2


def mult_two_row(n: int, k: int) -> int:
    """Multiplicity of ``(2n-k, k)`` for ``1 <= k`` and ``n >= 2k``.

    ``(1/n) * [C(n, k) + sum C(d, k*d/n)]`` where the sum runs over
    ``1 < h < n`` with ``d = gcd(n, h) != 1`` and ``(n/d) | k``.

    >>> mult_two_row(6, 3)
    4
    """
    _require(k >= 1, f"k must be >= 1, got {k}")
    _require(n >= 2 * k, f"need n >= 2k, got n={n}, k={k}")
    total = comb(n, k)
    for h in range(2, n):
        d = gcd(n, h)
        if d == 1 or k % (n // d):
            continue
        l, rem = divmod(k * d, n)
        assert rem == 0 and 0 <= l <= d, (n, h, k)
        total += comb(d, l)
    q, r = divmod(total, n)
    if r:
        raise IntegralityError(f"bracket {total} not divisible by n={n} (k={k})")
    return q


def family_partition(family: Family, n: int, k: int = 0) -> Partition:
    """The partition of ``2n`` whose multiplicity ``family`` describes."""
    if family is Family.TRIVIAL_TOP:
        return Partition((2 * n,))
    if family is Family.HOOK_ONE:
        return Partition((2 * n - 1, 1))
    if family is Family.SQUARE_NN:
        return Partition((n, n))
    if family is Family.TWO_ROW_K2:
        return Partition((2 * n - 2, 2))
    return Partition((2 * n - k, k))


@dataclass(frozen=True)
class ClosedFormResult:
    family: Family
    n: int
    k: int
    value: int

    @property
    def partition(self) -> Partition:
        return family_partition(self.family, self.n, self.k)


def closed_form(family: Family, n: int, k: int = 0) -> ClosedFormResult:
    if family is Family.TWO_ROW_GENERAL:
        value = mult_two_row(n, k)
    else:
        value = {
            Family.TRIVIAL_TOP: mult_trivial,
            Family.HOOK_ONE: mult_hook_one,
            Family.SQUARE_NN: mult_square,
            Family.TWO_ROW_K2: mult_two_row_k2,
        }[family](n)
        k = 0
    return ClosedFormResult(family, n, k, value)


@dataclass(frozen=True)
class CheckRow:
    n: int
    family: str
    k: int
    expected: int
    engine: int

    @property
    def passed(self) -> bool:
        return self.expected == self.engine

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "k": self.k,
            "expected": str(self.expected),
            "engine": str(self.engine),
            "pass": self.passed,
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        mu = family_partition(Family(self.family), self.n, self.k)
        return (
            f"{status}  n={self.n:<3d} {self.family:<14s} k={self.k:<3d} {str(mu):<9s} "
            f"expected={self.expected} engine={self.engine}"
        )


@dataclass
class VerificationReport:
    rows: list[CheckRow]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.rows)

    def lines(self) -> list[str]:
        return [r.line() for r in self.rows]


def _cases(n: int) -> list[tuple[Family, int]]:
    cases: list[tuple[Family, int]] = [(Family.TRIVIAL_TOP, 0)]
    if n >= 2:
        cases += [(Family.HOOK_ONE, 0), (Family.SQUARE_NN, 0), (Family.TWO_ROW_K2, 0)]
        cases += [(Family.TWO_ROW_GENERAL, k) for k in range(1, n // 2 + 1)]
    return cases


def verify_closed_forms(n_max: int, cache: MemoCache | None = None) -> VerificationReport:
    """Compare each closed form with the engine for ``2 <= n <= n_max``."""
    _require(n_max >= 2, f"n_max must be >= 2, got {n_max}")
    rows = []
    for n in range(2, n_max + 1):
        dec = decompose_phi(n, cache)
        for family, k in _cases(n):
            result = closed_form(family, n, k)
            rows.append(CheckRow(n, family.value, k, result.value, dec[result.partition]))
    return VerificationReport(rows)
