"""Integer partitions, Young diagram corners, rim hooks and class sizes.

A :class:`Partition` serves both as the label of an irreducible character of
``S_n`` and as a cycle type labelling a conjugacy class.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import total_ordering
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple

from .errors import ContractViolation

__all__ = [
    "Partition",
    "RimHookRemoval",
    "parse_partition",
    "enumerate_partitions",
    "class_size",
    "centralizer_order",
    "inner_corners",
    "outer_corners",
    "beta_numbers",
    "from_beta_numbers",
    "rim_hooks",
]


@total_ordering
@dataclass(frozen=True, eq=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Ordering is lexicographic on the parts, so ``sorted(..., reverse=True)``
    yields the descending lexicographic order used for all output.

    >>> Partition((3, 1)).weight
    4
    >>> Partition.of(2, 2, 1)
    Partition(2, 2, 1)
    """

    parts: tuple[int, ...]
    weight: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ContractViolation(f"parts must be positive integers, got {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ContractViolation(f"parts must be weakly decreasing, got {parts!r}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Build a partition from parts in any order, dropping zeros."""
        return cls(tuple(sorted((p for p in parts if p != 0), reverse=True)))

    @classmethod
    def single_column(cls, n: int) -> Partition:
        """The partition ``(1^n)``."""
        return cls((1,) * n)

    def __lt__(self, other: Partition) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts < other.parts

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self.parts))})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def to_string(self) -> str:
        """Comma-separated form used on the command line, e.g. ``"5,3,2,2,1"``."""
        return ",".join(map(str, self.parts))

    def multiplicities(self) -> Counter[int]:
        return Counter(self.parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"5,3,2,2,1"`` into a partition.

    Non-descending input is rejected rather than sorted. The empty string and
    ``"()"`` denote the empty partition.
    """
    text = text.strip()
    if text in ("", "()"):
        return Partition(())
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ContractViolation(f"not a comma-separated list of integers: {text!r}") from None
    return Partition(parts)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order.

    >>> [p.parts for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ContractViolation(f"n must be nonnegative, got {n}")

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(parts) for parts in gen(n, n)]


def centralizer_order(lam: Partition) -> int:
    """``z_lam = prod_i i^{m_i} * m_i!`` where ``m_i`` counts parts equal to ``i``."""
    return prod(i**m * factorial(m) for i, m in lam.multiplicities().items())


def class_size(lam: Partition) -> int:
    """Number of permutations of ``S_{|lam|}`` with cycle type ``lam``."""
    return factorial(lam.weight) // centralizer_order(lam)


def inner_corners(lam: Partition) -> list[Partition]:
    """Shapes obtained by deleting one removable node, by row of that node."""
    if lam.weight < 1:
        raise ContractViolation("the empty partition has no inner corners")
    parts = lam.parts
    out = []
    for i, p in enumerate(parts):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if p > below:
            out.append(Partition.from_parts(parts[:i] + (p - 1,) + parts[i + 1 :]))
    return out


def outer_corners(lam: Partition) -> list[Partition]:
    """Shapes obtained by adding one addable node, by row of that node."""
    parts = lam.parts
    out = []
    for i in range(len(parts) + 1):
        above = parts[i - 1] if i > 0 else None
        cur = parts[i] if i < len(parts) else 0
        if above is None or above > cur:
            out.append(Partition(parts[:i] + (cur + 1,) + parts[i + 1 :]))
    return out


class RimHookRemoval(NamedTuple):
    """One legal removal of a rim hook: the remaining shape and the hook's leg length."""

    result: Partition
    leg_length: int


def beta_numbers(lam: Partition) -> list[int]:
    """First-column hook lengths ``lam_i + (r - i)``, strictly decreasing."""
    r = len(lam)
    return [p + r - 1 - i for i, p in enumerate(lam.parts)]


def from_beta_numbers(betas: Iterable[int]) -> Partition:
    """Inverse of :func:`beta_numbers` for any set of distinct nonnegative integers."""
    bs = sorted(betas, reverse=True)
    r = len(bs)
    return Partition.from_parts(b - (r - 1 - i) for i, b in enumerate(bs))


def rim_hooks(lam: Partition, k: int) -> list[RimHookRemoval]:
    """Every removal of a rim ``k``-hook from ``lam``.

    Removing a ``k``-hook whose top node lies in row ``i`` moves bead ``i`` on
    the abacus from ``beta_i`` to ``beta_i - k``; this is legal iff the target
    is nonnegative and unoccupied, and the leg length is the number of beads
    strictly between the two positions. Results are ordered by the row of the
    hook's top node.
    """
    if k < 1:
        raise ContractViolation(f"hook size must be positive, got {k}")
    betas = beta_numbers(lam)
    occupied = set(betas)
    out = []
    for b in betas:
        target = b - k
        if target < 0 or target in occupied:
            continue
        leg = sum(1 for c in betas if target < c < b)
        moved = [target if c == b else c for c in betas]
        out.append(RimHookRemoval(from_beta_numbers(moved), leg))
    return out
