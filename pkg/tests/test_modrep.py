import numpy as np
import pytest

from algmod.exactla import field
from algmod.exactla import matrix
from algmod.globals import errors
from algmod.modrep import groups
from algmod.modrep import modules
from algmod.modrep import textio

from conftest import fixture_path


def _identity_action(m):
    eye = matrix.Matrix.identity(m.field, m.dim)
    return all(a == eye for a in m.action)


class TestWords(object):
    def test_parse_and_format(self):
        word = groups.parse_word("1 2^-1 3")
        assert word == ((0, 1), (1, -1), (2, 1))
        assert groups.format_word(word) == "1 2^-1 3"

    @pytest.mark.parametrize("text", ["0", "a", "1^x"])
    def test_bad_tokens(self, text):
        with pytest.raises(errors.BadWord):
            groups.parse_word(text)

    def test_validation(self):
        with pytest.raises(errors.BadWord):
            groups.validate_word(((2, 1),), 2)
        with pytest.raises(errors.BadWord):
            groups.validate_word(((0, 2),), 2)
        with pytest.raises(errors.BadWord):
            groups.SubgroupSpec([((3, 1),)], 3)


class TestGroups(object):
    @pytest.mark.parametrize(
        "name, order",
        [("c2.perm", 2), ("v4.perm", 4), ("c9.perm", 9), ("c3c3.perm", 9), ("c5c5.perm", 25)],
    )
    def test_orders(self, name, order):
        assert textio.load_permutations(fixture_path(name)).order() == order

    def test_enumeration_tree(self, c3c3):
        enumeration = c3c3.enumerate()
        assert enumeration.elements[0] == c3c3.identity()
        for i in range(1, enumeration.size):
            assert c3c3.evaluate(enumeration.word(i)) == enumeration.elements[i]

    def test_enumeration_cap(self, c5c5):
        with pytest.raises(errors.OrderCapExceeded):
            groups.Enumeration(c5c5, cap=10)

    def test_unrealized(self):
        with pytest.raises(errors.NoRealization):
            groups.GroupSpec(2).order()

    def test_subgroup(self, c3c3):
        h = groups.SubgroupSpec([((0, 1),)], 2)
        assert h.group(c3c3).order() == 3
        assert h.group(c3c3) is c3c3.subgroup(h.words)

    def test_matrix_group(self, gf3):
        x = matrix.Matrix(gf3, [[1, 1], [0, 1]])
        y = matrix.Matrix(gf3, [[1, 0], [1, 1]])
        # SL2(3)
        assert groups.GroupSpec.from_matrices([x, y]).order() == 24

    def test_prime_power_exponent(self):
        assert groups.prime_power_exponent(9, 3) == 2
        assert groups.prime_power_exponent(1, 5) == 0
        assert groups.prime_power_exponent(12, 3) is None

    def test_perm_arithmetic(self):
        p = (1, 2, 0)
        assert groups.perm_compose(p, groups.perm_inverse(p)) == groups.perm_identity(3)
        assert groups.perm_order(p) == 3
        assert groups.perm_order((1, 0, 3, 4, 2)) == 6

    def test_m11_sylow_words(self):
        m11 = textio.load_permutations(fixture_path("m11_11.perm"))
        ngens, sylow = textio.load_words(fixture_path("m11_sylow2.words"))
        assert ngens == m11.ngens
        # |M11| = 7920 = 16 * 495
        assert sylow.group(m11).order() == 16


class TestModules(object):
    def test_relations(self, m2_c3c3):
        relations = [((0, 1),) * 3, ((1, 1),) * 3, ((0, 1), (1, 1), (0, -1), (1, -1))]
        assert modules.check_words(m2_c3c3, relations)
        assert not modules.check_words(m2_c3c3, [((0, 1),)])

    def test_action_checked(self, c3c3, gf3):
        with pytest.raises(errors.GroupMismatch):
            modules.ModuleRep(c3c3, [matrix.Matrix.identity(gf3, 2)])
        with pytest.raises(errors.SizeMismatch):
            modules.ModuleRep(
                c3c3, [matrix.Matrix.identity(gf3, 2), matrix.Matrix.identity(gf3, 3)]
            )

    def test_tensor_and_sum_dims(self, c3c3, gf3):
        a = modules.trivial(c3c3, gf3, 3)
        b = modules.trivial(c3c3, gf3, 4)
        assert modules.tensor(a, b).dim == 12
        assert modules.direct_sum(a, b).dim == 7

    def test_sum_of_trivials(self, c3c3, gf3):
        k = modules.trivial(c3c3, gf3)
        s = modules.direct_sum(k, k)
        assert s.dim == 2
        assert _identity_action(s)

    def test_tensor_with_trivial(self, m2_c3c3):
        k = modules.trivial(m2_c3c3.group, m2_c3c3.field)
        assert modules.tensor(k, m2_c3c3) == m2_c3c3

    def test_incompatible(self, m2_c3c3, sl32):
        with pytest.raises(errors.AlgmodError):
            modules.tensor(m2_c3c3, sl32)

    def test_dual(self, m2_c3c3):
        d = modules.dual(m2_c3c3)
        assert modules.dual(d) == m2_c3c3
        # the dual satisfies the same relations
        assert modules.check_words(d, [((0, 1),) * 3, ((0, 1), (1, 1), (0, -1), (1, -1))])

    def test_dual_of_trivial(self, c3c3, gf3):
        k = modules.trivial(c3c3, gf3)
        assert modules.dual(k) == k

    def test_restrict(self, sl32):
        _, v4 = textio.load_words(fixture_path("sl32_v4.words"))
        restricted = modules.restrict(sl32, v4)
        assert restricted.dim == 3
        assert restricted.group.order() == 4

    def test_sym_power(self, m2_c3c3):
        assert modules.sym_power(m2_c3c3, 1) == m2_c3c3
        assert modules.sym_power(m2_c3c3, 2).dim == 6
        with pytest.raises(errors.ExponentTooLarge):
            modules.sym_power(m2_c3c3, 3)

    def test_sym_power_of_trivial(self, c5c5, gf5):
        s = modules.sym_power(modules.trivial(c5c5, gf5, 2), 4)
        assert s.dim == 5
        assert _identity_action(s)

    def test_ext_square(self, gf9):
        m = textio.load_module(fixture_path("sl2_9.mod"))
        # determinant
        assert _identity_action(modules.ext_square(m))
        four = modules.direct_sum(m, m)
        assert modules.ext_square(four).dim == 6

    def test_frobenius_twist(self):
        m = textio.load_module(fixture_path("sl2_9.mod"))
        twisted = modules.frobenius_twist(m)
        assert twisted != m
        assert modules.frobenius_twist(twisted) == m

    def test_twist_over_prime_field(self, m2_c3c3):
        assert modules.frobenius_twist(m2_c3c3) == m2_c3c3

    def test_perm_module(self, c3, gf3):
        m = modules.perm_module(c3, gf3)
        assert m.dim == 3
        assert m.action[0].tolist() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
        assert modules.check_words(m, [((0, 1),) * 3])

    def test_pair_module(self, v4, gf2):
        assert modules.pair_module(v4, gf2).dim == 6

    def test_perm_heart(self, c3, gf2, gf3):
        assert modules.perm_heart(c3, gf3).dim == 1
        assert modules.perm_heart(c3, gf2).dim == 2

    def test_perm_module_needs_permutations(self, m2_c3c3, gf3):
        with pytest.raises(errors.NoRealization):
            modules.perm_module(m2_c3c3.group, gf3)

    def test_submodule_and_quotient(self, m2_c3c3):
        socle = np.array([[0, 1, 0], [0, 0, 1]])
        sub = modules.submodule(m2_c3c3, socle, check=True)
        assert sub.dim == 2
        assert _identity_action(sub)
        top = modules.quotient(m2_c3c3, socle)
        assert top.dim == 1
        assert _identity_action(top)

    def test_not_invariant(self, m2_c3c3):
        with pytest.raises(errors.SizeMismatch):
            modules.submodule(m2_c3c3, np.array([[1, 0, 0]]), check=True)

    def test_quotient_map(self, gf3):
        basis = np.array([[0, 1, 0]])
        projection = modules.quotient_map(3, gf3, basis)
        assert projection.shape == (3, 2)
        assert not np.any(gf3.matmul(basis, projection))


class TestText(object):
    @pytest.mark.parametrize("name", ["m2_c3c3.mod", "sl32.mod", "sl2_9.mod"])
    def test_module_files(self, name):
        text = textio.read_text(fixture_path(name))
        m = textio.parse_module(text)
        assert textio.parse_module(textio.format_module(m)) == m

    def test_permutation_files(self, c3c3):
        assert textio.parse_permutations(textio.format_permutations(c3c3)) == c3c3
        assert c3c3.realization[0] == (1, 2, 0, 3, 4, 5)

    def test_word_files(self):
        ngens, h = textio.load_words(fixture_path("alt8_sl32.words"))
        assert ngens == 3
        assert textio.parse_words(textio.format_words(ngens, h)) == (ngens, h)

    def test_singular_action(self):
        text = "module field=2^1 dim=1 gens=1\nmatrix field=2^1 rows=1 cols=1\n0\n"
        with pytest.raises(errors.ParseError) as info:
            textio.parse_module(text)
        assert info.value.line == 2

    def test_field_of_blocks(self):
        text = "module field=2^1 dim=1 gens=1\nmatrix field=3^1 rows=1 cols=1\n1\n"
        with pytest.raises(errors.ParseError):
            textio.parse_module(text)

    def test_missing_matrix(self):
        text = "module field=2^1 dim=1 gens=2\nmatrix field=2^1 rows=1 cols=1\n1\n"
        with pytest.raises(errors.ParseError):
            textio.parse_module(text)

    def test_bad_permutation(self):
        with pytest.raises(errors.ParseError) as info:
            textio.parse_permutations("perm degree=3 gens=1\n1 1 2\n")
        assert info.value.line == 2

    def test_word_out_of_range(self):
        with pytest.raises(errors.ParseError) as info:
            textio.parse_words("words gens=2 count=1\n3\n")
        assert info.value.line == 2
