"""Exact linear algebra: rank, kernels, determinants, Smith form, mod-q kernels."""

import random
from fractions import Fraction

import pytest

from gtdata import FAMILY2_MATRIX, GOLDEN_N6_MATRIX, WORKED_MATRIX
from gtpoly import InputError
from gtpoly.linalg import (
    determinant,
    kernel_basis,
    kernel_mod_q,
    matvec,
    primitive_integer,
    rank,
    smith_normal_form,
    solve,
)


def random_int_matrix(rng, rows, cols, lo=-4, hi=4):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


class TestRank:
    def test_worked_matrix(self):
        assert rank(WORKED_MATRIX) == 3

    def test_zero_matrix(self):
        assert rank([[0, 0], [0, 0]]) == 0

    def test_identity(self):
        assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3

    def test_empty_shapes(self):
        assert rank([], cols=0) == 0
        assert rank([], cols=5) == 0
        assert rank([[], []], cols=0) == 0


class TestKernelBasis:
    def test_worked_matrix_kernel_span(self):
        basis = kernel_basis(WORKED_MATRIX)
        assert len(basis) == 2
        expected = [(0, 0, -1, 1, 0), (1, -1, 1, 0, 1)]
        # same span: appending either set to the other does not raise the rank
        assert rank([list(v) for v in basis] + [list(v) for v in expected]) == 2
        for v in basis:
            assert all(x == 0 for x in matvec(WORKED_MATRIX, v))

    def test_identity_trivial(self):
        assert kernel_basis([[1, 0], [0, 1]]) == []

    def test_golden_size6_matrix_trivial_kernel(self):
        assert kernel_basis(GOLDEN_N6_MATRIX) == []
        assert rank(GOLDEN_N6_MATRIX) == 3

    def test_zero_row_matrix_kernel_is_everything(self):
        basis = kernel_basis([], cols=3)
        assert len(basis) == 3

    def test_primitive_and_sign_normalized(self):
        basis = kernel_basis([[Fraction(1, 2), Fraction(1, 3), 0]])
        for v in basis:
            assert all(isinstance(x, int) for x in v)
            lead = next(x for x in v if x != 0)
            assert lead > 0

    def test_rank_nullity_randomized(self):
        rng = random.Random(7)
        for _ in range(40):
            r, c = rng.randint(0, 5), rng.randint(1, 5)
            m = random_int_matrix(rng, r, c)
            basis = kernel_basis(m, cols=c)
            assert rank(m, cols=c) + len(basis) == c
            for v in basis:
                assert all(x == 0 for x in matvec(m, v))
            if basis:
                assert rank([list(v) for v in basis]) == len(basis)


class TestDeterminant:
    def test_family_matrix(self):
        assert abs(determinant(FAMILY2_MATRIX)) == 2

    def test_identity(self):
        assert determinant([[1, 0], [0, 1]]) == 1

    def test_repeated_row(self):
        assert determinant([[1, 2, 3], [4, 5, 6], [1, 2, 3]]) == 0

    def test_non_square_rejected(self):
        with pytest.raises(InputError):
            determinant([[1, 2, 3], [4, 5, 6]])

    def test_integer_matrix_has_integer_determinant(self):
        rng = random.Random(13)
        for _ in range(30):
            size = rng.randint(0, 5)
            m = random_int_matrix(rng, size, size)
            assert determinant(m).denominator == 1

    def test_empty_matrix(self):
        assert determinant([]) == 1


class TestSolve:
    def test_unique_solution(self):
        x = solve([[2, 0], [0, 4]], [Fraction(1), Fraction(1)])
        assert x == [Fraction(1, 2), Fraction(1, 4)]

    def test_inconsistent(self):
        assert solve([[1, 1], [1, 1]], [Fraction(0), Fraction(1)]) is None

    def test_underdetermined_solution_satisfies_system(self):
        rng = random.Random(3)
        for _ in range(30):
            r, c = rng.randint(1, 4), rng.randint(1, 5)
            m = random_int_matrix(rng, r, c)
            target = [Fraction(v) for v in matvec(m, [rng.randint(-3, 3) for _ in range(c)])]
            x = solve(m, target, cols=c)
            assert x is not None
            assert matvec(m, x) == target


class TestSmithNormalForm:
    def check(self, m, rows, cols):
        u, s, v = smith_normal_form(m, cols=cols)
        assert abs(determinant(u)) == 1
        assert abs(determinant(v)) == 1
        # U m V == S
        prod = [[sum(u[i][k] * m[k][j] for k in range(rows)) for j in range(cols)]
                for i in range(rows)]
        prod = [[sum(prod[i][k] * v[k][j] for k in range(cols)) for j in range(cols)]
                for i in range(rows)]
        assert prod == s
        diag = [s[i][i] for i in range(min(rows, cols))]
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert s[i][j] == 0
        assert all(d >= 0 for d in diag)
        nonzero = [d for d in diag if d]
        assert diag[:len(nonzero)] == nonzero, "zero entries must come last"
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        return diag

    def test_family_matrix_invariants(self):
        diag = self.check(FAMILY2_MATRIX, 3, 3)
        assert diag == [1, 1, 2]

    def test_randomized(self):
        rng = random.Random(23)
        for _ in range(40):
            rows, cols = rng.randint(0, 5), rng.randint(0, 5)
            m = random_int_matrix(rng, rows, cols)
            self.check(m, rows, cols)

    def test_rational_input_rejected(self):
        with pytest.raises(InputError):
            smith_normal_form([[Fraction(1, 2)]])


class TestKernelModQ:
    def test_family_matrix_mod_2(self):
        result = kernel_mod_q(FAMILY2_MATRIX, 2)
        assert result.has_unit_witness
        xi = result.witness
        assert all(sum(a * b for a, b in zip(row, xi)) % 2 == 0 for row in FAMILY2_MATRIX)
        assert any(x % 2 == 1 for x in xi)
        # only kernel elements mod 2 are 0 and (1,1,1)
        assert xi == (1, 1, 1)

    def test_identity_has_no_witness(self):
        for q in (2, 3, 5, 12):
            result = kernel_mod_q([[1, 0], [0, 1]], q)
            assert result.generators == ()
            assert not result.has_unit_witness

    def test_worked_matrix_mod_3(self):
        result = kernel_mod_q(WORKED_MATRIX, 3)
        assert result.has_unit_witness
        xi = result.witness
        assert all(sum(a * b for a, b in zip(row, xi)) % 3 == 0 for row in WORKED_MATRIX)
        from math import gcd
        assert gcd(xi[result.unit_index], 3) == 1

    def test_modulus_below_two_rejected(self):
        with pytest.raises(InputError):
            kernel_mod_q(FAMILY2_MATRIX, 1)

    def test_generators_are_kernel_elements_randomized(self):
        rng = random.Random(31)
        for _ in range(40):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            q = rng.choice((2, 3, 4, 6, 9))
            m = random_int_matrix(rng, rows, cols)
            result = kernel_mod_q(m, q)
            for gen in result.generators:
                assert all(sum(a * b for a, b in zip(row, gen)) % q == 0 for row in m)
            if result.has_unit_witness:
                xi = result.witness
                assert all(0 <= x < q for x in xi)
                assert all(sum(a * b for a, b in zip(row, xi)) % q == 0 for row in m)
                assert xi[result.unit_index] % q == 1

    def test_exhaustive_cross_check_small(self):
        # brute-force the kernel subgroup and compare witness existence
        from itertools import product
        from math import gcd
        rng = random.Random(17)
        for _ in range(25):
            rows, cols, q = rng.randint(1, 3), rng.randint(1, 3), rng.choice((2, 3, 4, 6))
            m = random_int_matrix(rng, rows, cols, -3, 3)
            brute = [xi for xi in product(range(q), repeat=cols)
                     if all(sum(a * b for a, b in zip(row, xi)) % q == 0 for row in m)]
            brute_has_unit = any(
                any(gcd(x, q) == 1 for x in xi) for xi in brute)
            result = kernel_mod_q(m, q)
            assert result.has_unit_witness == brute_has_unit
            # generated subgroup equals the brute kernel
            span = {tuple([0] * cols)}
            frontier = [tuple([0] * cols)]
            while frontier:
                base = frontier.pop()
                for gen in result.generators:
                    nxt = tuple((a + b) % q for a, b in zip(base, gen))
                    if nxt not in span:
                        span.add(nxt)
                        frontier.append(nxt)
            assert span == set(brute)


class TestPrimitiveInteger:
    def test_scaling(self):
        assert primitive_integer([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
        assert primitive_integer([Fraction(-2), Fraction(4)]) == (1, -2)
        assert primitive_integer([Fraction(-2), Fraction(4)], fix_sign=False) == (-1, 2)

    def test_zero_vector(self):
        assert primitive_integer([Fraction(0), Fraction(0)]) == (0, 0)
