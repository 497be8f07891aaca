import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from affgebra.errors import Infeasible
from affgebra.matrix import Matrix
from affgebra.scalars import GF, QI, QQ, GaussianRational
from affgebra.solve import solve_affine_system


def row_col_sum_constraints(m, value):
    out = []
    for l in range(m):
        out.append(({(l, k): 1 for k in range(m)}, value))
        out.append(({(k, l): 1 for k in range(m)}, value))
    return out


def evaluate(coeffs, mat, realify=False):
    if not realify:
        acc = mat.field.zero()
        for (i, j), c in coeffs.items():
            acc = acc + mat.field.coerce(c) * mat.entry(i, j)
        return acc
    acc = Fraction(0)
    for (i, j, part), c in coeffs.items():
        entry = mat.entry(i, j)
        acc += Fraction(c) * (Fraction(entry.re) if part == 0 else Fraction(entry.im))
    return acc


class TestSumSystems:
    def test_zero_sum_direction_count(self):
        # row and column sums zero on 3x3: rank 5, nullity 4
        space = solve_affine_system(row_col_sum_constraints(3, 0), 3, QQ)
        assert space.dimension == 4
        assert space.particular == Matrix.zeros(QQ, 3)

    def test_antisymmetric_unit_diagonal(self):
        # sums 1 + unit diagonal + antisymmetry on 3x3 leaves one parameter
        m = 3
        constraints = row_col_sum_constraints(m, 1)
        for k in range(m):
            constraints.append(({(k, k): 1}, 1))
            for l in range(k + 1, m):
                constraints.append(({(k, l): 1, (l, k): 1}, 0))
        space = solve_affine_system(constraints, m, QQ)
        assert space.dimension == 1

    def test_infeasible(self):
        with pytest.raises(Infeasible):
            solve_affine_system([({(0, 0): 1}, 0), ({(0, 0): 1}, 1)], 2, QQ)

    def test_empty_system_is_full_space(self):
        space = solve_affine_system([], 2, QQ)
        assert space.dimension == 4

    def test_over_prime_field(self):
        space = solve_affine_system(row_col_sum_constraints(3, 1), 3, GF(7))
        assert space.dimension == 4
        assert space.particular.field is GF(7)


class TestSolutionProperties:
    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 2**32))
    def test_particular_and_directions_satisfy(self, seed):
        m = 3
        constraints = row_col_sum_constraints(m, 1)
        space = solve_affine_system(constraints, m, QQ)
        for coeffs, rhs in constraints:
            assert evaluate(coeffs, space.particular) == rhs
            for d in space.directions:
                assert evaluate(coeffs, d) == 0
        rng = random.Random(seed)
        combo = space.particular
        for d in space.directions:
            combo = combo + d.scale(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        for coeffs, rhs in constraints:
            assert evaluate(coeffs, combo) == rhs

    def test_dimension_is_unknowns_minus_rank(self):
        # 2(m) sum equations with one dependency: rank 2m-1
        for m in (2, 3, 4):
            space = solve_affine_system(row_col_sum_constraints(m, 0), m, QQ)
            assert space.dimension == m * m - (2 * m - 1)


class TestRealified:
    def _anti_hermitian_system(self, m):
        constraints = []
        for l in range(m):
            constraints.append(({(l, k, 0): 1 for k in range(m)}, 0))
            constraints.append(({(l, k, 1): 1 for k in range(m)}, 1))
            constraints.append(({(k, l, 0): 1 for k in range(m)}, 0))
            constraints.append(({(k, l, 1): 1 for k in range(m)}, 1))
        for k in range(m):
            constraints.append(({(k, k, 0): 1}, 0))
            for l in range(k + 1, m):
                constraints.append(({(k, l, 0): 1, (l, k, 0): 1}, 0))
                constraints.append(({(k, l, 1): 1, (l, k, 1): -1}, 0))
        return constraints

    def test_anti_hermitian_sum_i_dimensions(self):
        # real dimension of the direction space is n^2 for ambient n+1
        for n in (1, 2, 3):
            m = n + 1
            space = solve_affine_system(self._anti_hermitian_system(m), m, QI, realify=True)
            assert space.realified
            assert space.dimension == n * n

    def test_realified_solution_is_anti_hermitian(self):
        m = 3
        space = solve_affine_system(self._anti_hermitian_system(m), m, QI, realify=True)
        combos = [space.particular]
        rng = random.Random(11)
        combo = space.particular
        for d in space.directions:
            combo = combo + d.scale(GaussianRational(Fraction(rng.randint(-5, 5), rng.randint(1, 5))))
        combos.append(combo)
        for mat in combos:
            assert mat.dagger() == -mat
            for l in range(m):
                row = sum((mat.entry(l, k) for k in range(m)), start=QI.zero())
                assert row == QI.imaginary_unit()

    def test_realify_requires_gaussian_field(self):
        from affgebra.errors import FieldMismatch

        with pytest.raises(FieldMismatch):
            solve_affine_system([], 2, QQ, realify=True)
