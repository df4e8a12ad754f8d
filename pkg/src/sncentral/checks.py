"""Invariant checks run by ``sncentral verify`` alongside the closed forms."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .centralizer import (
    brute_force_decompose,
    centralizer_order_of_cycle,
    centralizer_type_counts,
    decompose_phi,
)
from .characters import MemoCache, character_table, degree, inner_product, mn_value, restrict
from .partitions import Partition, centralizer_order, enumerate_partitions

__all__ = ["InvariantCheck", "run_invariant_checks"]


@dataclass(frozen=True)
class InvariantCheck:
    name: str
    scope: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.name, "scope": self.scope, "pass": self.passed, "detail": self.detail}

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{status}  {self.name:<22s} {self.scope}{tail}"


def _orthogonality(m: int, cache: MemoCache) -> tuple[bool, bool]:
    table = character_table(m, cache)
    shapes = list(table)
    rows = all(
        inner_product(table[a], table[b]) == (a == b) for a in shapes for b in shapes
    )
    classes = enumerate_partitions(m)
    cols = all(
        sum(table[s][nu] * table[s][rho] for s in shapes)
        == (centralizer_order(nu) if nu == rho else 0)
        for nu in classes
        for rho in classes
    )
    return rows, cols


def _branching(m: int, cache: MemoCache) -> bool:
    for lam in enumerate_partitions(m):
        down = restrict(lam)
        for mu in enumerate_partitions(m - 1):
            lhs = sum(c * mn_value(sub, mu, cache) for sub, c in down.items())
            if lhs != mn_value(lam, Partition(mu.parts + (1,)), cache):
                return False
    return True


def run_invariant_checks(n_max: int, cache: MemoCache | None = None) -> list[InvariantCheck]:
    """Character-table and decomposition invariants up to ``n_max``.

    Table checks cover ``S_m`` for ``m <= min(8, 2 n_max)``.
    """
    cache = cache if cache is not None else MemoCache()
    out: list[InvariantCheck] = []

    for m in range(1, min(8, 2 * n_max) + 1):
        rows, cols = _orthogonality(m, cache)
        out.append(InvariantCheck("row orthonormality", f"m={m}", rows))
        out.append(InvariantCheck("column orthogonality", f"m={m}", cols))
        if m >= 2:
            out.append(InvariantCheck("branching", f"m={m}", _branching(m, cache)))
        total = sum(degree(lam, cache) ** 2 for lam in enumerate_partitions(m))
        out.append(InvariantCheck("sum of squared degrees", f"m={m}", total == factorial(m)))

    for n in range(1, n_max + 1):
        by_mult = decompose_phi(n, cache)
        by_ip = decompose_phi(n, cache, method="inner_product")
        out.append(InvariantCheck("two-path agreement", f"n={n}", by_mult == by_ip))
        dim = by_mult.dimension(cache)
        out.append(
            InvariantCheck("dimension identity", f"n={n}", dim == by_mult.index,
                           f"{dim} vs index {by_mult.index}")
        )
        trivial = by_mult[Partition((2 * n,))]
        out.append(InvariantCheck("trivial occurs once", f"n={n}", trivial == 1))
        count = sum(centralizer_type_counts(n).values())
        out.append(InvariantCheck("element count", f"n={n}", count == centralizer_order_of_cycle(n)))
        if n <= 3:
            out.append(InvariantCheck("brute-force oracle", f"n={n}", brute_force_decompose(n) == by_mult))
    return out
