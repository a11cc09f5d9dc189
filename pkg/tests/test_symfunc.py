from math import factorial

import pytest

from specht_invariants.characters import character, dimension
from specht_invariants.errors import DomainError
from specht_invariants.expansion import SchurExpansion
from specht_invariants.partitions import (
    Partition,
    enumerate_partitions,
    is_even_permutation,
    one_column,
    order_of,
    power_cycle_type,
)
from specht_invariants.symfunc import (
    dominates_expansion,
    expansion_product,
    frobenius_f,
    multiplicity,
    power_sum_to_schur,
)

P = Partition


def expansion(pairs):
    pairs = [(P(lam), c) for lam, c in pairs]
    return SchurExpansion(pairs[0][0].n, pairs)


class TestPowerSums:
    def test_examples(self):
        assert power_sum_to_schur(P((1,))) == expansion([((1,), 1)])
        assert power_sum_to_schur(P((1, 1))) == expansion([((2,), 1), ((1, 1), 1)])
        assert power_sum_to_schur(P((2,))) == expansion([((2,), 1), ((1, 1), -1)])

    @pytest.mark.parametrize("n", range(1, 8))
    def test_coefficients_are_characters(self, n):
        for mu in enumerate_partitions(n):
            p = power_sum_to_schur(mu)
            for lam in enumerate_partitions(n):
                assert p[lam] == character(lam, mu)


class TestFrobenius:
    def test_11(self):
        assert frobenius_f(P((1, 1))) == expansion([((2,), 1), ((1, 1), 1)])

    def test_22(self):
        assert frobenius_f(P((2, 2))) == expansion(
            [((4,), 1), ((3, 1), 1), ((2, 2), 2), ((2, 1, 1), 1), ((1, 1, 1, 1), 1)]
        )

    def test_33_dimension_count(self):
        f = frobenius_f(P((3, 3)))
        assert sum(c * dimension(lam) for lam, c in f.items()) == factorial(6) // 3
        assert f[P((3, 3))] == f[P((2, 2, 2))] == 3

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            frobenius_f(P())

    @pytest.mark.parametrize("n", range(1, 12))
    def test_two_paths_agree(self, n):
        parts = enumerate_partitions(n)
        for mu in parts:
            f = frobenius_f(mu)
            for lam in parts:
                assert f[lam] == multiplicity(lam, mu)

    @pytest.mark.parametrize("n", range(1, 12))
    def test_sign_and_trivial_coefficients(self, n):
        for mu in enumerate_partitions(n):
            f = frobenius_f(mu)
            assert f[one_column(n)] == (1 if is_even_permutation(mu) else 0)
            assert f[P((n,))] == 1
            assert all(c > 0 for _, c in f.items())

    @pytest.mark.parametrize("n", range(1, 11))
    def test_total_dimension(self, n):
        for mu in enumerate_partitions(n):
            f = frobenius_f(mu)
            assert sum(c * dimension(lam) for lam, c in f.items()) == factorial(n) // order_of(mu)


class TestMultiplicity:
    def test_examples(self):
        for mu in enumerate_partitions(7):
            assert multiplicity(P((7,)), mu) == 1
        assert multiplicity(P((2, 2)), P((3, 1))) == 0
        assert multiplicity(P((2, 2)), P((2, 2))) == 2
        assert multiplicity(P((4, 4)), P((5, 3))) == 0

    def test_size_mismatch(self):
        with pytest.raises(DomainError):
            multiplicity(P((2,)), P((3,)))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_all_powers_cross_check(self, n):
        for mu in enumerate_partitions(n):
            m = order_of(mu)
            types = [power_cycle_type(mu, j) for j in range(m)]
            for lam in enumerate_partitions(n):
                total = sum(character(lam, t) for t in types)
                assert total % m == 0
                assert total // m == multiplicity(lam, mu)


class TestOrder:
    def test_examples(self):
        f22 = frobenius_f(P((2, 2)))
        assert dominates_expansion(f22, SchurExpansion.schur(P((2, 2))))
        f33 = frobenius_f(P((3, 3)))
        assert dominates_expansion(f33, f33)
        assert not dominates_expansion(frobenius_f(P((3, 1))), SchurExpansion.schur(P((2, 2))))

    def test_degree_mismatch(self):
        with pytest.raises(DomainError):
            dominates_expansion(frobenius_f(P((2,))), frobenius_f(P((3,))))


class TestProducts:
    def test_f1_squared(self):
        f1 = frobenius_f(P((1,)))
        assert expansion_product(f1, f1) == expansion([((2,), 1), ((1, 1), 1)])

    def test_f3_f1(self):
        assert dominates_expansion(frobenius_f(P((3, 1))), expansion_product(frobenius_f(P((3,))), frobenius_f(P((1,)))))

    def test_f5_f3(self):
        prod = expansion_product(frobenius_f(P((5,))), frobenius_f(P((3,))))
        f53 = frobenius_f(P((5, 3)))
        for lam in (P((2, 2, 2, 2)), P((4, 4))):
            assert prod[lam] == 0 and f53[lam] == 0
        assert dominates_expansion(f53, prod)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_product_lower_bound(self, n):
        for mu in enumerate_partitions(n):
            prod = SchurExpansion.schur(P())
            for part in mu:
                prod = expansion_product(prod, frobenius_f(P((part,))))
            assert dominates_expansion(frobenius_f(mu), prod)


class TestSerialisation:
    def test_tsv(self):
        f = frobenius_f(P((2, 2)))
        text = f.to_tsv()
        assert text.splitlines()[2] == "2\t2,2"
        assert text.endswith("\n") and "\r" not in text
        assert SchurExpansion.from_tsv(text) == f

    def test_json_round_trip(self):
        f = power_sum_to_schur(P((2, 1, 1)))
        obj = f.to_json_obj()
        assert all(isinstance(t["coeff"], str) for t in obj["terms"])
        assert SchurExpansion.from_json_obj(obj) == f

    def test_no_zero_terms_and_order(self):
        e = SchurExpansion(2, [(P((1, 1)), 1), (P((2,)), 3), (P((1, 1)), -1)])
        assert e.support() == [P((2,))]
        e = SchurExpansion(3, [(P((1, 1, 1)), 1), (P((3,)), 1)])
        assert e.support() == [P((3,)), P((1, 1, 1))]

    def test_arithmetic(self):
        a = SchurExpansion.schur(P((2,)))
        b = SchurExpansion.schur(P((1, 1)))
        assert (a + b) - b == a
        assert str(a - b.scale(2)) == "s(2) - 2*s(1,1)"
        with pytest.raises(ArithmeticError):
            (a.scale(3)).exact_div(2)
        with pytest.raises(DomainError):
            SchurExpansion(2, {P((3,)): 1})
