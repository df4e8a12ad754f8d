"""The permutation character of ``S_2n`` on the cosets of ``C = <sigma> x S_n``.

``sigma = (1 2 ... n)`` acts on points ``1..n`` and the ``S_n`` factor on
points ``n+1..2n``. ``phi`` denotes the character induced from the trivial
character of ``C``; its multiplicities are computed by Frobenius reciprocity
as ``<1_C, chi|_C>_C``, grouping the ``n * n!`` elements of ``C`` by
``(k, cycle type of pi)``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial, gcd
from typing import Iterator, Mapping, NamedTuple

from .characters import (
    ClassFunction,
    MemoCache,
    character,
    character_table,
    degree,
    exact_div,
    inner_product,
    mn_value,
)
from .errors import ContractViolation, IntegralityError
from .partitions import (
    Partition,
    centralizer_order,
    class_size,
    enumerate_partitions,
)

__all__ = [
    "CentralizerElementType",
    "Decomposition",
    "centralizer_order_of_cycle",
    "sigma_power_type",
    "merge_types",
    "centralizer_type_counts",
    "phi_class_function",
    "multiplicity",
    "decompose_phi",
    "brute_force_decompose",
    "coset_index",
]


class CentralizerElementType(NamedTuple):
    """The conjugacy data of ``(sigma^k, pi)``: the power ``k`` and the cycle type of ``pi``."""

    k: int
    pi_type: Partition

    def cycle_type(self, n: int) -> Partition:
        return merge_types(sigma_power_type(n, self.k), self.pi_type)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ContractViolation(f"n must be a positive integer, got {n!r}")


def centralizer_order_of_cycle(n: int) -> int:
    """``|C| = n * n!``."""
    _check_n(n)
    return n * factorial(n)


def coset_index(n: int) -> int:
    """``[S_2n : C] = (2n)! / (n * n!)``, the degree of ``phi``."""
    return exact_div(factorial(2 * n), centralizer_order_of_cycle(n), "coset index")


def sigma_power_type(n: int, k: int) -> Partition:
    """Cycle type of ``sigma^k`` on ``n`` points: ``d`` cycles of length ``n/d``, ``d = gcd(n, k)``.

    >>> sigma_power_type(6, 4)
    Partition(3, 3)
    """
    _check_n(n)
    if not 0 <= k < n:
        raise ContractViolation(f"k must lie in [0, {n}), got {k}")
    if k == 0:
        return Partition.single_column(n)
    d = gcd(n, k)
    return Partition((n // d,) * d)


def merge_types(alpha: Partition, beta: Partition) -> Partition:
    """Cycle type of a disjoint product: the sorted multiset union of the parts."""
    return Partition(tuple(sorted(alpha.parts + beta.parts, reverse=True)))


def _element_types(n: int) -> Iterator[tuple[CentralizerElementType, int]]:
    for k in range(n):
        for lam in enumerate_partitions(n):
            yield CentralizerElementType(k, lam), class_size(lam)


def centralizer_type_counts(n: int) -> dict[Partition, int]:
    """Number of elements of ``C`` in each ``S_2n`` conjugacy class (zeros omitted)."""
    _check_n(n)
    sigma_types = [sigma_power_type(n, k) for k in range(n)]
    counts: dict[Partition, int] = defaultdict(int)
    for et, size in _element_types(n):
        counts[merge_types(sigma_types[et.k], et.pi_type)] += size
    return dict(counts)


def phi_class_function(n: int, cache: MemoCache | None = None) -> ClassFunction:
    """Values of ``phi`` on every class of ``S_2n``.

    Uses ``phi(nu) = z_nu * |C cap K_nu| / |C|``. ``cache`` is accepted for
    interface symmetry; no character values are needed here.
    """
    counts = centralizer_type_counts(n)
    order = centralizer_order_of_cycle(n)

    def value(nu: Partition) -> int:
        return exact_div(centralizer_order(nu) * counts.get(nu, 0), order, f"phi at {nu}")

    return ClassFunction.from_callable(2 * n, value)


def multiplicity(n: int, mu: Partition, cache: MemoCache | None = None) -> int:
    """``<phi, chi^mu>`` computed as ``<1_C, chi^mu|_C>_C``."""
    _check_n(n)
    if mu.weight != 2 * n:
        raise ContractViolation(f"mu = {mu} must be a partition of {2 * n}")
    sigma_types = [sigma_power_type(n, k) for k in range(n)]
    total = 0
    for et, size in _element_types(n):
        total += size * mn_value(mu, merge_types(sigma_types[et.k], et.pi_type), cache)
    m = exact_div(total, centralizer_order_of_cycle(n), f"multiplicity of {mu}")
    if m < 0:
        raise IntegralityError(f"negative multiplicity {m} for {mu} at n={n}")
    return m


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities of every irreducible character of ``S_2n`` in ``phi``."""

    n: int
    multiplicities: Mapping[Partition, int]

    def __post_init__(self) -> None:
        for mu, m in self.multiplicities.items():
            if mu.weight != 2 * self.n:
                raise ContractViolation(f"{mu} is not a partition of {2 * self.n}")
            if not isinstance(m, int) or m < 0:
                raise IntegralityError(f"multiplicity of {mu} is {m!r}")

    def __getitem__(self, mu: Partition) -> int:
        return self.multiplicities.get(mu, 0)

    @property
    def index(self) -> int:
        return coset_index(self.n)

    def terms(self, show_zeros: bool = True) -> list[tuple[Partition, int]]:
        """``(mu, mult)`` pairs in descending lexicographic order of ``mu``."""
        return [
            (mu, self[mu])
            for mu in enumerate_partitions(2 * self.n)
            if show_zeros or self[mu]
        ]

    def nonzero(self) -> dict[Partition, int]:
        return {mu: m for mu, m in self.terms(show_zeros=False)}

    def dimension(self, cache: MemoCache | None = None) -> int:
        """``sum_mu mult(mu) * degree(mu)``; equals :attr:`index` when consistent."""
        return sum(m * degree(mu, cache) for mu, m in self.terms(show_zeros=False))

    def to_json(self, show_zeros: bool = True) -> dict:
        return {
            "n": self.n,
            "index": str(self.index),
            "terms": [{"mu": list(mu.parts), "mult": str(m)} for mu, m in self.terms(show_zeros)],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.n == other.n and self.nonzero() == other.nonzero()

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.nonzero().items())))


def decompose_phi(
    n: int,
    cache: MemoCache | None = None,
    *,
    method: str = "multiplicity",
    workers: int | None = None,
) -> Decomposition:
    """Full decomposition of ``phi`` into irreducibles of ``S_2n``.

    ``method="multiplicity"`` sums character values over element types of
    ``C``; ``method="inner_product"`` builds ``phi`` as a class function and
    takes inner products with each irreducible. Both must agree.
    """
    _check_n(n)
    shapes = enumerate_partitions(2 * n)
    if method == "multiplicity":
        fn = lambda mu: multiplicity(n, mu, cache)  # noqa: E731
    elif method == "inner_product":
        phi = phi_class_function(n, cache)

        def fn(mu: Partition) -> int:
            m = inner_product(phi, character(mu, cache))
            if m < 0:
                raise IntegralityError(f"negative multiplicity {m} for {mu} at n={n}")
            return m
    else:
        raise ContractViolation(f"unknown method {method!r}")

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            mults = list(pool.map(fn, shapes))
    else:
        mults = [fn(mu) for mu in shapes]
    return Decomposition(n, dict(zip(shapes, mults)))


# -- brute-force oracle -------------------------------------------------------

Perm = tuple[int, ...]


def _compose(p: Perm, q: Perm) -> Perm:
    """``p o q`` (apply ``q`` first) on points ``0..len-1``."""
    return tuple(p[i] for i in q)


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _cycle_type(p: Perm) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        lengths.append(length)
    return Partition.from_parts(lengths)


def product_subgroup(n: int) -> set[Perm]:
    """``<sigma> x S_n`` as explicit permutations of ``0..2n-1``."""
    sigma = tuple((i + 1) % n for i in range(n))
    powers = [tuple(range(n))]
    for _ in range(n - 1):
        powers.append(_compose(sigma, powers[-1]))
    return {
        power + tuple(n + x for x in pi)
        for power in powers
        for pi in itertools.permutations(range(n))
    }


def brute_force_decompose(n: int) -> Decomposition:
    """Decompose ``phi`` by literally conjugating inside ``S_2n``.

    For each class representative ``g`` counts ``x`` with ``x g x^-1`` in
    ``C`` and divides by ``|C|``, then takes inner products against the
    character table. Limited to ``n <= 3`` (``|S_6| = 720``).
    """
    _check_n(n)
    if n > 3:
        raise ContractViolation(f"brute force is limited to n <= 3, got {n}")
    group = list(itertools.permutations(range(2 * n)))
    sub = product_subgroup(n)
    reps: dict[Partition, Perm] = {}
    for g in group:
        reps.setdefault(_cycle_type(g), g)
    inverses = {x: _inverse(x) for x in group}

    values = {}
    for nu, g in reps.items():
        hits = sum(1 for x in group if _compose(_compose(x, g), inverses[x]) in sub)
        values[nu] = exact_div(hits, len(sub), f"brute-force phi at {nu}")
    phi = ClassFunction(2 * n, values)
    table = character_table(2 * n, MemoCache())
    return Decomposition(n, {mu: inner_product(phi, chi) for mu, chi in table.items()})
