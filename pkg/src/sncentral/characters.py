"""Irreducible characters of symmetric groups via the Murnaghan-Nakayama rule.

Values are exact Python integers throughout. Recursion always strips the
largest remaining part of the cycle type, so every recursive call sees a
suffix of the original class and the memo cache is shared across shapes.
"""

from __future__ import annotations

import threading
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Mapping

from .errors import CacheConsistencyError, ContractViolation, IntegralityError
from .partitions import (
    Partition,
    class_size,
    enumerate_partitions,
    inner_corners,
    outer_corners,
    rim_hooks,
)

__all__ = [
    "MemoCache",
    "default_cache",
    "ClassFunction",
    "mn_value",
    "character",
    "character_table",
    "inner_product",
    "restrict",
    "induce",
    "degree",
    "exact_div",
]


class MemoCache:
    """Thread-safe write-once map from ``(shape, class)`` to a character value.

    A key may be written more than once (two threads racing on the same
    subproblem) but every write must carry the same value.
    """

    def __init__(self) -> None:
        self._data: dict[tuple[Partition, Partition], int] = {}
        self._lock = threading.Lock()

    def get(self, key: tuple[Partition, Partition]) -> int | None:
        return self._data.get(key)

    def put(self, key: tuple[Partition, Partition], value: int) -> int:
        with self._lock:
            existing = self._data.setdefault(key, value)
        if existing != value:
            raise CacheConsistencyError(
                f"memo key {key[0]}/{key[1]} holds {existing}, attempted write {value}"
            )
        return existing

    def __contains__(self, key: object) -> bool:
        return key in self._data

    def __len__(self) -> int:
        return len(self._data)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


_DEFAULT_CACHE = MemoCache()


def default_cache() -> MemoCache:
    """The process-wide cache used when callers do not pass their own."""
    return _DEFAULT_CACHE


def exact_div(num: int, den: int, what: str = "quotient") -> int:
    """Divide exactly, raising :class:`IntegralityError` on a remainder."""
    q, r = divmod(num, den)
    if r:
        raise IntegralityError(f"{what}: {num} is not divisible by {den}")
    return q


def mn_value(shape: Partition, class_type: Partition, cache: MemoCache | None = None) -> int:
    """The character value ``chi^shape`` on the class of cycle type ``class_type``."""
    if shape.weight != class_type.weight:
        raise ContractViolation(
            f"shape {shape} has weight {shape.weight} but class {class_type} "
            f"has weight {class_type.weight}"
        )
    if cache is None:
        cache = _DEFAULT_CACHE
    return _mn(shape, class_type, cache)


def _mn(shape: Partition, class_type: Partition, cache: MemoCache) -> int:
    if not class_type.parts:
        return 1
    key = (shape, class_type)
    hit = cache.get(key)
    if hit is not None:
        return hit
    first = class_type.parts[0]
    rest = Partition(class_type.parts[1:])
    total = 0
    for removal in rim_hooks(shape, first):
        term = _mn(removal.result, rest, cache)
        total += -term if removal.leg_length % 2 else term
    return cache.put(key, total)


@dataclass(frozen=True)
class ClassFunction:
    """An integer-valued function on the conjugacy classes of ``S_m``."""

    degree_n: int
    values: Mapping[Partition, int]

    def __post_init__(self) -> None:
        expected = set(enumerate_partitions(self.degree_n))
        if set(self.values) != expected:
            raise ContractViolation(
                f"class function on S_{self.degree_n} must be defined on exactly "
                f"the {len(expected)} partitions of {self.degree_n}"
            )

    @classmethod
    def from_callable(cls, m: int, fn) -> ClassFunction:
        return cls(m, {nu: fn(nu) for nu in enumerate_partitions(m)})

    def __getitem__(self, nu: Partition) -> int:
        return self.values[nu]

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self.values, reverse=True))

    def items(self) -> list[tuple[Partition, int]]:
        return [(nu, self.values[nu]) for nu in self]

    def _check_same(self, other: ClassFunction) -> None:
        if self.degree_n != other.degree_n:
            raise ContractViolation(
                f"class functions live on S_{self.degree_n} and S_{other.degree_n}"
            )

    def __add__(self, other: ClassFunction) -> ClassFunction:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        self._check_same(other)
        return ClassFunction(self.degree_n, {nu: v + other[nu] for nu, v in self.values.items()})

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        return self + (-1) * other

    def __mul__(self, scalar: int) -> ClassFunction:
        if not isinstance(scalar, int):
            return NotImplemented
        return ClassFunction(self.degree_n, {nu: scalar * v for nu, v in self.values.items()})

    __rmul__ = __mul__

    def to_json(self) -> list[dict]:
        return [{"class": list(nu.parts), "value": str(v)} for nu, v in self.items()]


def character(shape: Partition, cache: MemoCache | None = None) -> ClassFunction:
    """``chi^shape`` as a class function."""
    return ClassFunction.from_callable(shape.weight, lambda nu: mn_value(shape, nu, cache))


def character_table(
    m: int, cache: MemoCache | None = None, workers: int | None = None
) -> dict[Partition, ClassFunction]:
    """Every irreducible character of ``S_m``, keyed by shape in descending order.

    With ``workers > 1`` shapes are evaluated on a thread pool sharing the cache;
    the result does not depend on scheduling.
    """
    if m < 1:
        raise ContractViolation(f"m must be positive, got {m}")
    if cache is None:
        cache = _DEFAULT_CACHE
    shapes = enumerate_partitions(m)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chars = list(pool.map(lambda s: character(s, cache), shapes))
    else:
        chars = [character(s, cache) for s in shapes]
    return dict(zip(shapes, chars))


def inner_product(f: ClassFunction, g: ClassFunction) -> int:
    """``(1/m!) * sum_nu |K_nu| f(nu) g(nu)``, with the division checked."""
    f._check_same(g)
    total = sum(class_size(nu) * f[nu] * g[nu] for nu in f.values)
    return exact_div(total, factorial(f.degree_n), "inner product")


def restrict(shape: Partition) -> Counter[Partition]:
    """Constituents of ``chi^shape`` restricted to ``S_{n-1}`` (branching rule)."""
    return Counter(inner_corners(shape))


def induce(shape: Partition) -> Counter[Partition]:
    """Constituents of ``chi^shape`` induced to ``S_{n+1}`` (branching rule)."""
    return Counter(outer_corners(shape))


def degree(shape: Partition, cache: MemoCache | None = None) -> int:
    """Dimension of the irreducible representation labelled by ``shape``."""
    return mn_value(shape, Partition.single_column(shape.weight), cache)
