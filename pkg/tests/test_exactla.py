import numpy as np
import pytest

from algmod.exactla import field
from algmod.exactla import matrix
from algmod.exactla import poly
from algmod.exactla import subspace
from algmod.exactla import textio
from algmod.globals import errors


class TestField(object):
    def test_prime_field(self, gf2):
        assert gf2.order == 2
        assert gf2.k == 1
        assert gf2.header() == "field=2^1"

    @pytest.mark.parametrize(
        "p, k, coeffs", [(3, 2, (1, 0, 1)), (2, 2, (1, 1, 1)), (5, 2, (2, 0, 1))]
    )
    def test_extension_field(self, p, k, coeffs):
        f = field.field_make(p, k, coeffs)
        assert f.order == p ** k
        nonzero = range(1, f.order)
        assert all(f.smul(a, f.sinv(a)) == 1 for a in nonzero)

    def test_reducible_polynomial(self):
        with pytest.raises(errors.ReduciblePoly):
            field.field_make(2, 2, (1, 0, 1))

    def test_no_prime(self):
        with pytest.raises(errors.NotPrime):
            field.field_make(6)

    def test_too_large(self):
        with pytest.raises(errors.SizeOverflow):
            field.field_default(2, 17)

    def test_default_polynomial(self, gf9):
        assert gf9.poly == (1, 0, 1)
        assert gf9.header() == "field=3^2 poly=1,0,1"
        # x is the element with code p and x^2 = -1
        assert gf9.smul(3, 3) == gf9.sneg(1)

    def test_fields_are_cached(self):
        assert field.field_make(3, 2, (1, 0, 1)) is field.field_default(3, 2)

    def test_frobenius_is_pth_power(self, gf9):
        elements = np.arange(9)
        expected = [gf9.spow(int(a), 3) for a in elements]
        assert gf9.frobenius(elements).tolist() == expected
        assert all(gf9.sfrobenius_inverse(e) == a for a, e in enumerate(expected))

    def test_vectorised_matches_scalar(self, gf9):
        a = np.arange(9)
        b = (a * 5 + 2) % 9
        assert gf9.mul(a, b).tolist() == [gf9.smul(int(x), int(y)) for x, y in zip(a, b)]
        assert gf9.add(a, b).tolist() == [gf9.sadd(int(x), int(y)) for x, y in zip(a, b)]

    def test_rng_is_reproducible(self):
        a = field.make_rng(7).integers(0, 100, 10)
        b = field.make_rng(7).integers(0, 100, 10)
        assert a.tolist() == b.tolist()


class TestMatrix(object):
    def test_rref_identity(self, gf3):
        reduction = matrix.rref(matrix.Matrix.identity(gf3, 3))
        assert reduction.rank == 3
        assert reduction.transform == matrix.Matrix.identity(gf3, 3)

    def test_rref_zero(self, gf3):
        reduced, rank, _ = matrix.rref(matrix.Matrix.zero(gf3, 2, 3))
        assert rank == 0
        assert reduced.is_zero()

    def test_rref_equal_rows(self, gf2):
        m = matrix.Matrix(gf2, [[1, 1], [1, 1]])
        reduced, rank, transform = matrix.rref(m)
        assert rank == 1
        assert transform @ m == reduced
        assert reduced.tolist() == [[1, 1], [0, 0]]

    def test_rref_transform_over_extension(self, gf9):
        m = matrix.Matrix(gf9, [[3, 1, 0], [4, 2, 7], [1, 5, 7]])
        reduced, rank, transform = matrix.rref(m)
        assert transform @ m == reduced
        assert transform.rank() == 3
        assert rank == m.rank()

    def test_nullspace(self, gf2):
        assert matrix.nullspace(matrix.Matrix.identity(gf2, 3)).rows == 0
        assert matrix.nullspace(matrix.Matrix.zero(gf2, 3, 3)) == matrix.Matrix.identity(gf2, 3)
        m = matrix.Matrix(gf2, [[1, 1], [1, 1]])
        assert matrix.nullspace(m).tolist() == [[1, 1]]

    def test_nullspace_annihilates(self, gf5):
        m = matrix.Matrix(gf5, [[1, 2, 3], [2, 4, 1], [3, 1, 4], [4, 3, 0]])
        kernel = matrix.nullspace(m)
        assert kernel.rows == 4 - m.rank()
        assert (kernel @ m).is_zero()

    def test_kron(self, gf3):
        a = matrix.Matrix(gf3, [[1, 2], [0, 1]])
        b = matrix.Matrix.identity(gf3, 3)
        assert matrix.kron(a, b).shape == (6, 6)
        assert matrix.kron(matrix.Matrix.identity(gf3, 2), b) == matrix.Matrix.identity(gf3, 6)

    def test_kron_is_multiplicative(self, gf3):
        a = matrix.Matrix(gf3, [[1, 2], [0, 1]])
        b = matrix.Matrix(gf3, [[2, 1], [1, 1]])
        assert matrix.kron(a, b) @ matrix.kron(b, a) == matrix.kron(a @ b, b @ a)

    def test_inverse(self, gf5):
        m = matrix.Matrix(gf5, [[1, 2], [3, 4]])
        assert m @ m.inverse() == matrix.Matrix.identity(gf5, 2)
        with pytest.raises(ZeroDivisionError):
            matrix.Matrix(gf5, [[1, 2], [2, 4]]).inverse()

    def test_power(self, gf3):
        m = matrix.Matrix(gf3, [[1, 1], [0, 1]])
        assert m ** 3 == matrix.Matrix.identity(gf3, 2)
        assert m ** -1 == m.inverse()

    def test_entries_checked(self, gf3):
        with pytest.raises(errors.FieldMismatch):
            matrix.Matrix(gf3, [[3]])
        with pytest.raises(errors.FieldMismatch):
            matrix.Matrix(gf3, [[1]]) @ matrix.Matrix(field.field_make(5), [[1]])

    def test_solve(self, gf5):
        a = matrix.Matrix(gf5, [[1, 2, 0], [0, 1, 1]])
        x = matrix.Matrix(gf5, [[3, 4], [1, 1]])
        solution = matrix.solve(a, x @ a)
        assert solution @ a == x @ a
        assert matrix.solve(a, matrix.Matrix(gf5, [[0, 0, 1]])) is None

    def test_block_diagonal(self, gf2):
        blocks = [matrix.Matrix.identity(gf2, 1), matrix.Matrix(gf2, [[0, 1], [1, 0]])]
        assert matrix.block_diagonal(blocks).tolist() == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]


class TestMinpoly(object):
    def test_identity(self, gf5):
        assert matrix.minpoly(matrix.Matrix.identity(gf5, 3)) == poly.Poly(gf5, (4, 1))

    def test_nilpotent(self, gf3):
        m = matrix.Matrix(gf3, [[0, 1], [0, 0]])
        assert matrix.minpoly(m) == poly.Poly(gf3, (0, 0, 1))

    def test_companion(self, gf5):
        # x^3 + 2x + 3
        f = poly.Poly(gf5, (3, 2, 0, 1))
        companion = matrix.Matrix(gf5, [[0, 1, 0], [0, 0, 1], [2, 3, 0]])
        assert matrix.minpoly(companion) == f

    def test_annihilates(self, gf9):
        m = matrix.Matrix(gf9, [[3, 1, 0], [0, 3, 0], [0, 0, 5]])
        f = matrix.minpoly(m)
        assert matrix.poly_at(m, f).is_zero()
        assert f.degree == 3


class TestFactor(object):
    def test_split_quadratic(self, gf5):
        factors = poly.factor_poly(poly.Poly(gf5, (4, 0, 1)))
        assert factors == [(poly.Poly(gf5, (1, 1)), 1), (poly.Poly(gf5, (4, 1)), 1)]

    def test_irreducible_quadratic(self, gf3):
        f = poly.Poly(gf3, (1, 0, 1))
        assert poly.factor_poly(f) == [(f, 1)]
        assert f.is_irreducible()

    def test_field_polynomial(self, gf3):
        # x^9 - x is the product of all monic irreducibles of degree 1 and 2
        f = poly.Poly(gf3, (0, 2) + (0,) * 7 + (1,))
        factors = poly.factor_poly(f)
        assert [g.coeffs for g, _ in factors] == [
            (0, 1),
            (1, 1),
            (2, 1),
            (1, 0, 1),
            (2, 1, 1),
            (2, 2, 1),
        ]
        assert all(e == 1 for _, e in factors)

    def test_multiplicities(self, gf3):
        # (x + 1)^3 (x^2 + 1)^2
        f = poly.Poly(gf3, (1, 1)) ** 3 * poly.Poly(gf3, (1, 0, 1)) ** 2
        factors = poly.factor_poly(f)
        assert factors == [(poly.Poly(gf3, (1, 1)), 3), (poly.Poly(gf3, (1, 0, 1)), 2)]
        assert poly.product(factors, gf3) == f

    def test_leading_coefficient_is_dropped(self, gf3):
        # factors are monic; their product is the monic form of f
        f = poly.Poly(gf3, (1, 1)) ** 2 * poly.Poly.constant(gf3, 2)
        factors = poly.factor_poly(f)
        assert factors == [(poly.Poly(gf3, (1, 1)), 2)]
        assert poly.product(factors, gf3) == f.monic()
        assert poly.product(factors, gf3) != f

    def test_over_extension_field(self, gf9):
        # x^2 + 1 splits over GF(9): its roots are the codes 3 and 6
        factors = poly.factor_poly(poly.Poly(gf9, (1, 0, 1)))
        assert [g.degree for g, _ in factors] == [1, 1]
        roots = sorted(gf9.sneg(g.coeffs[0]) for g, _ in factors)
        assert roots == [3, 6]

    def test_seed_does_not_matter(self, gf5):
        f = poly.Poly(gf5, (1, 3, 0, 2, 4, 1, 1))
        assert poly.factor_poly(f, seed=1) == poly.factor_poly(f, seed=99)

    def test_zero(self, gf5):
        with pytest.raises(errors.ZeroPoly):
            poly.factor_poly(poly.Poly(gf5))


class TestEchelon(object):
    def test_insert_and_relation(self, gf3):
        space = subspace.Echelon(gf3, 3, track=True)
        assert space.insert(np.array([1, 2, 0])) is None
        assert space.insert(np.array([0, 1, 1])) is None
        relation = space.insert(np.array([1, 0, 1]))
        # w2 = w0 + w1
        assert relation.tolist() == [2, 2, 1]
        assert space.rank == 2

    def test_reduced_basis(self, gf2):
        space = subspace.Echelon(gf2, 3)
        assert space.extend(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]])) == 2
        assert space.basis().tolist() == [[1, 0, 1], [0, 1, 1]]
        assert space.contains(np.array([1, 1, 0]))
        assert not space.contains(np.array([0, 0, 1]))

    def test_complement(self):
        assert subspace.complement_columns([0, 2], 4) == [1, 3]


class TestText(object):
    def test_matrices(self, gf9):
        m = matrix.Matrix(gf9, [[1, 3], [8, 0]])
        text = textio.format_matrices([m, m.T])
        assert text.splitlines()[0] == "matrix field=3^2 poly=1,0,1 rows=2 cols=2"
        assert textio.parse_matrices(text) == [m, m.T]

    def test_comments_and_blank_lines(self):
        text = "# a comment\n\nmatrix field=5^1 rows=1 cols=2\n1 4\n"
        (m,) = textio.parse_matrices(text)
        assert m.tolist() == [[1, 4]]

    @pytest.mark.parametrize(
        "text, line",
        [
            ("matrix field=5^1 rows=1 cols=2\n1 5\n", 2),
            ("matrix field=5^1 rows=1 cols=2\n1\n", 2),
            ("matrix field=6^1 rows=1 cols=1\n1\n", 1),
            ("matrix rows=1 cols=1\n1\n", 1),
            ("matrices field=5^1 rows=1 cols=1\n1\n", 1),
        ],
    )
    def test_errors_name_the_line(self, text, line):
        with pytest.raises(errors.ParseError) as info:
            textio.parse_matrices(text)
        assert info.value.line == line
