import itertools
import threading
from collections import Counter
from math import factorial

import pytest
from hypothesis import given, settings

from helpers import P, partitions
from oracles import conjugate, cycle_type, hook_length_degree, perm_sign, young_rule_table
from sncentral.characters import (
    ClassFunction,
    MemoCache,
    character,
    character_table,
    degree,
    induce,
    inner_product,
    mn_value,
    restrict,
)
from sncentral.errors import CacheConsistencyError, ContractViolation, IntegralityError
from sncentral.partitions import Partition, centralizer_order, enumerate_partitions


class TestMurnaghanNakayama:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_trivial_character(self, n, cache):
        for mu in enumerate_partitions(n):
            assert mn_value(P(n), mu, cache) == 1

    def test_fixed_points_minus_one(self, cache):
        assert mn_value(P(3, 1), P(2, 1, 1), cache) == 1

    @pytest.mark.parametrize("n", range(1, 7))
    def test_sign_character_against_permutations(self, n, cache):
        signs = {}
        for g in itertools.permutations(range(n)):
            signs.setdefault(cycle_type(g), perm_sign(g))
        for mu, s in signs.items():
            assert mn_value(Partition.single_column(n), mu, cache) == s
            assert s == (-1) ** (n - len(mu))

    def test_no_four_hook_in_square(self, cache):
        assert mn_value(P(2, 2), P(4), cache) == 0

    def test_empty(self, cache):
        assert mn_value(P(), P(), cache) == 1

    def test_weight_mismatch(self, cache):
        with pytest.raises(ContractViolation, match="weight"):
            mn_value(P(3, 1), P(2, 1), cache)

    @pytest.mark.parametrize("m", range(1, 6))
    def test_table_matches_young_rule(self, m, cache):
        oracle = young_rule_table(m, enumerate_partitions(m))
        table = character_table(m, cache)
        for lam, chi in table.items():
            assert dict(chi.values) == oracle[lam], lam

    def test_large_values_are_exact(self, cache):
        # staircase of weight 21; the degree exceeds 2**30
        lam = P(6, 5, 4, 3, 2, 1)
        assert degree(lam, cache) == hook_length_degree(lam) == 1100742656


class TestCharacterTable:
    def test_m1(self, cache):
        table = character_table(1, cache)
        assert list(table) == [P(1)]
        assert table[P(1)][P(1)] == 1

    def test_s4_square(self, cache):
        chi = character_table(4, cache)[P(2, 2)]
        classes = [P(1, 1, 1, 1), P(2, 1, 1), P(2, 2), P(3, 1), P(4)]
        assert [chi[c] for c in classes] == [2, 0, 2, -1, 0]

    def test_bad_m(self, cache):
        with pytest.raises(ContractViolation):
            character_table(0, cache)

    @pytest.mark.parametrize("m", range(1, 9))
    def test_row_orthonormality(self, m, cache):
        table = character_table(m, cache)
        for a, b in itertools.product(table, repeat=2):
            assert inner_product(table[a], table[b]) == (1 if a == b else 0)

    @pytest.mark.parametrize("m", range(1, 9))
    def test_column_orthogonality(self, m, cache):
        table = character_table(m, cache)
        for nu, rho in itertools.product(enumerate_partitions(m), repeat=2):
            s = sum(chi[nu] * chi[rho] for chi in table.values())
            assert s == (centralizer_order(nu) if nu == rho else 0)

    def test_parallel_matches_serial(self):
        serial = character_table(9, MemoCache())
        parallel = character_table(9, MemoCache(), workers=8)
        assert list(serial) == list(parallel)
        assert all(serial[s] == parallel[s] for s in serial)


class TestInnerProduct:
    def test_distinct_irreducibles(self, cache):
        for n in range(2, 9):
            assert inner_product(character(P(n), cache), character(P(n - 1, 1), cache)) == 0

    def test_square_by_hand(self, cache):
        chi = character(P(2, 2), cache)
        # (1*4 + 6*0 + 3*4 + 8*1 + 6*0) / 24
        assert inner_product(chi, chi) == 1

    def test_degree_mismatch(self, cache):
        with pytest.raises(ContractViolation):
            inner_product(character(P(2), cache), character(P(3), cache))

    def test_non_integral(self):
        f = ClassFunction.from_callable(3, lambda nu: 1 if nu == P(1, 1, 1) else 0)
        with pytest.raises(IntegralityError):
            inner_product(f, f)


class TestClassFunction:
    def test_must_be_total(self):
        with pytest.raises(ContractViolation):
            ClassFunction(3, {P(3): 1})

    def test_arithmetic(self, cache):
        a, b = character(P(3), cache), character(P(2, 1), cache)
        s = a + b
        assert s[P(1, 1, 1)] == 3
        assert (2 * a)[P(3)] == 2
        assert (a - a) == ClassFunction.from_callable(3, lambda nu: 0)

    def test_json(self, cache):
        assert character(P(2, 1), cache).to_json() == [
            {"class": [3], "value": "-1"},
            {"class": [2, 1], "value": "0"},
            {"class": [1, 1, 1], "value": "2"},
        ]


class TestBranching:
    def test_worked_examples(self):
        assert restrict(P(3, 3, 2)) == Counter({P(3, 2, 2): 1, P(3, 3, 1): 1})
        assert induce(P(5, 2)) == Counter({P(6, 2): 1, P(5, 3): 1, P(5, 2, 1): 1})

    def test_small(self):
        assert restrict(P(6)) == Counter({P(5): 1})
        assert restrict(P(2, 2, 1)) == Counter({P(2, 2): 1, P(2, 1, 1): 1})
        assert induce(P()) == Counter({P(1): 1})
        assert induce(P(1, 1)) == Counter({P(2, 1): 1, P(1, 1, 1): 1})

    @pytest.mark.parametrize("m", range(2, 9))
    def test_restriction_consistency(self, m, cache):
        for lam in enumerate_partitions(m):
            for mu in enumerate_partitions(m - 1):
                lhs = sum(c * mn_value(sub, mu, cache) for sub, c in restrict(lam).items())
                assert lhs == mn_value(lam, Partition(mu.parts + (1,)), cache)

    @pytest.mark.parametrize("m", range(1, 8))
    def test_frobenius_reciprocity_for_induce(self, m, cache):
        # <Ind chi^mu, chi^lam> = <chi^mu, Res chi^lam>
        for mu in enumerate_partitions(m):
            up = induce(mu)
            for lam in enumerate_partitions(m + 1):
                assert up[lam] == restrict(lam)[mu]


class TestDegree:
    def test_examples(self, cache):
        assert degree(P(5), cache) == 1
        assert degree(P(3, 1), cache) == 3
        assert degree(P(2, 2), cache) == 2

    @pytest.mark.parametrize("m", range(1, 13))
    def test_hook_length_formula(self, m, cache):
        total = 0
        for lam in enumerate_partitions(m):
            d = degree(lam, cache)
            assert d == hook_length_degree(lam), lam
            total += d * d
        assert total == factorial(m)


class TestMemoCache:
    def test_write_once_conflict(self):
        c = MemoCache()
        key = (P(2), P(2))
        assert c.put(key, 1) == 1
        assert c.put(key, 1) == 1
        with pytest.raises(CacheConsistencyError):
            c.put(key, 2)

    @settings(max_examples=60, deadline=None)
    @given(partitions(max_n=10, min_n=1), partitions(max_n=10, min_n=1))
    def test_cold_equals_warm(self, lam, mu):
        if lam.weight != mu.weight:
            return
        warm = MemoCache()
        character_table(lam.weight, warm)
        assert mn_value(lam, mu, MemoCache()) == mn_value(lam, mu, warm)

    def test_cached_values_match_recomputation(self):
        c = MemoCache()
        character_table(7, c)
        for (shape, cls), v in list(c._data.items()):
            assert mn_value(shape, cls, MemoCache()) == v

    def test_concurrent_writers_agree(self):
        shared = MemoCache()
        shapes = enumerate_partitions(10)
        results: dict[int, list[int]] = {}

        def work(i: int) -> None:
            results[i] = [mn_value(s, P(3, 3, 2, 1, 1), shared) for s in shapes]

        threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        expected = [mn_value(s, P(3, 3, 2, 1, 1), MemoCache()) for s in shapes]
        assert all(r == expected for r in results.values())


@pytest.mark.parametrize("m", range(1, 9))
def test_sign_twist(m, cache):
    for lam in enumerate_partitions(m):
        for mu in enumerate_partitions(m):
            sign = (-1) ** (m - len(mu))
            assert mn_value(conjugate(lam), mu, cache) == sign * mn_value(lam, mu, cache)
