import pytest

from algmod.algtest import closure as algtest_closure
from algmod.globals import errors
from algmod.meataxe import series
from algmod.modrep import modules
from algmod.sl2tilt import characters
from algmod.sl2tilt import closure
from algmod.sl2tilt import tensor
from algmod.sl2tilt import words


def _sum(p, *weights):
    return words.FormalSum.of_symbols([words.symbol(w, p) for w in weights], p)


class TestCharacters(object):
    def test_weyl(self):
        assert characters.weyl(0) == characters.CharPoly.monomial(0)
        w = characters.weyl(3)
        assert w.coefficients == {3: 1, 1: 1, -1: 1, -3: 1}
        assert w.dim == 4
        assert w.is_palindromic()

    def test_arithmetic(self):
        a = characters.weyl(1)
        assert (a * a).dim == 4
        assert a * a == characters.weyl(2) + characters.weyl(0)
        assert (a - a).is_zero()
        assert (a * 3).dim == 6
        assert a.twist(3).coefficients == {3: 1, -3: 1}

    def test_steinberg_digits(self):
        assert characters.steinberg_decompose(7, 3, 2) == (1, 2)
        assert characters.steinberg_decompose(0, 5, 3) == (0, 0, 0)
        assert characters.steinberg_decompose(24, 5, 2) == (4, 4)
        with pytest.raises(errors.OutOfRange):
            characters.steinberg_decompose(9, 3, 2)
        with pytest.raises(errors.OutOfRange):
            characters.steinberg_decompose(-1, 3, 2)

    def test_simple(self):
        assert characters.simple(2, 3) == characters.weyl(2)
        # L(7) = L(1) (x) L(2)^sigma for p = 3
        assert characters.simple(7, 3).dim == 6
        assert characters.simple(7, 3).top == 7

    @pytest.mark.parametrize("m, p, dim", [(5, 5, 10), (9, 5, 10), (4, 5, 5), (3, 3, 6), (5, 3, 6)])
    def test_tilting_dims(self, m, p, dim):
        assert characters.tilting(m, p).dim == dim
        assert characters.tilting(m, p).top == m

    def test_tilting_is_weyl_filtered(self):
        # T(m) = chi(m) + chi(2p - 2 - m) in the second alcove
        assert characters.tilting(6, 5) == characters.weyl(6) + characters.weyl(2)


class TestWords(object):
    def test_symbol(self):
        assert words.symbol(2, 3) == words.Symbol("L", 2)
        assert words.symbol(3, 3) == words.Symbol("T", 3)
        with pytest.raises(errors.OutOfRange):
            words.symbol(6, 3)

    def test_rotate(self):
        w = words.TiltingWord([words.Symbol("T", 3), words.Symbol("L", 1)], 3)
        assert w.rotate(1).symbols == (words.Symbol("L", 1), words.Symbol("T", 3))
        assert w.rotate(2) == w
        assert w.rotate(1).dim == w.dim == 12

    def test_render(self):
        w = words.TiltingWord([words.Symbol("T", 3), words.Symbol("L", 1)], 3)
        assert w.render() == "T(3)⊗L(1)^σ"
        trivial = words.TiltingWord([words.TRIVIAL, words.TRIVIAL], 3)
        assert trivial.render() == "L(0)"

    def test_bad_symbols(self):
        with pytest.raises(errors.OutOfRange):
            words.TiltingWord([words.Symbol("L", 3)], 3)
        with pytest.raises(errors.OutOfRange):
            words.TiltingWord([words.Symbol("T", 2)], 3)

    def test_char_matches_tilting(self):
        # T(9) for p = 5 is T(4) (x) T(1)^sigma
        w = words.tilting_word(9, 5)
        assert w.render() == "L(4)⊗L(1)^σ"
        assert w.char == characters.tilting(9, 5)

    def test_simple_label(self):
        label = words.SimpleLabel(7, 3, 2)
        assert label.digits == (1, 2)
        assert words.char_of(label) == characters.simple(7, 3)
        assert label.word().char == words.char_of(label)

    def test_levels(self):
        assert words.tilting_word(2, 3, 3).n == 3
        with pytest.raises(errors.OutOfRange):
            words.tilting_word(9, 3, 1)

    def test_formal_sum(self):
        s = _sum(5, 4, 0, 4)
        assert s.render() == "L(0) ⊕ 2·L(4)"
        assert s.dim == 11
        assert (s * 2).dim == 22
        assert len(s + s) == 2


class TestDecomposeByChar(object):
    def test_square_of_l3(self):
        c = characters.weyl(3) * characters.weyl(3)
        assert words.tilting_decompose_by_char(c, 5) == _sum(5, 0, 4, 6)

    def test_not_tilting(self):
        with pytest.raises(errors.NegativeCoefficient):
            words.tilting_decompose_by_char(characters.CharPoly.monomial(1), 5)


class TestFundamentalTensor(object):
    def test_below_p(self):
        assert tensor.fundamental_tensor(1, 1, 5) == _sum(5, 0, 2)

    def test_steinberg_times_l1(self):
        for p in (3, 5, 7):
            assert tensor.fundamental_tensor(p - 1, 1, p) == _sum(p, p)

    def test_mixed(self):
        assert tensor.fundamental_tensor(3, 3, 5) == _sum(5, 0, 4, 6)
        assert tensor.fundamental_tensor(3, 3, 5).render() == "L(0) ⊕ L(4) ⊕ T(6)"

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_all_pairs(self, p):
        for lam in range(p):
            for mu in range(lam + 1):
                result = tensor.fundamental_tensor(lam, mu, p)
                assert result.char == characters.weyl(lam) * characters.weyl(mu)
                assert result.dim == (lam + 1) * (mu + 1)

    def test_range(self):
        with pytest.raises(errors.OutOfRange):
            tensor.fundamental_tensor(1, 2, 5)
        with pytest.raises(errors.OutOfRange):
            tensor.fundamental_tensor(5, 0, 5)

    def test_parity_rule_differs(self):
        found = tensor.rule_discrepancies(5)
        assert {"lambda": 3, "mu": 2} in [{k: d[k] for k in ("lambda", "mu")} for d in found]
        assert not any(d["printed_char_ok"] for d in found)


class TestRewrites(object):
    def test_p3(self):
        rewrite = tensor.threeistwo_rewrite(3)
        assert rewrite.char.dim == 18
        assert rewrite.tilting_form.dim == 18
        assert [count for _, count in rewrite.tilting_form] == [1, 2]
        assert rewrite.pair_form == ((2, 2, 1), (1, 2, 0))

    @pytest.mark.parametrize("p", [5, 7])
    def test_char(self, p):
        rewrite = tensor.threeistwo_rewrite(p)
        assert rewrite.tilting_form.char == rewrite.char
        assert rewrite.char.dim == 2 * p * p

    def test_small_p(self):
        with pytest.raises(errors.OutOfRange):
            tensor.threeistwo_rewrite(2)

    def test_l1_expansion(self):
        top = tensor.l1_pair_expansion(4, 4, 5)
        assert top.b == 4
        assert top.pairs == {(4, 3): 2}
        assert tensor.l1_pair_expansion(2, 3, 5) == ({(3, 1): 1, (3, 3): 1}, None)
        assert tensor.l1_pair_expansion(0, 4, 5) == ({(4, 1): 1}, None)

    @pytest.mark.parametrize("p", [3, 5])
    def test_b_only_at_the_corner(self, p):
        for lam in range(p):
            for mu in range(p):
                expansion = tensor.l1_pair_expansion(lam, mu, p)
                assert (expansion.b is not None) == (lam == mu == p - 1)


class TestSymbolicClosure(object):
    def test_state_operations(self):
        s = ((2, 1), (1, 0))
        assert closure.state_dim(s) == 12
        assert closure.rotate_state(s) == ((1, 0), (2, 1))
        assert closure.initial_state(3) == ((1, 0), (0, 0), (0, 0))

    def test_tensor_v1_dims(self):
        expanded = closure.tensor_v1(((2, 2), (2, 1)), 3)
        total = sum(closure.state_dim(s) * c for s, c in expanded.items())
        assert total == 2 * 9 * 6

    @pytest.mark.parametrize("p, n", [(3, 2), (3, 3), (5, 2), (7, 2)])
    def test_closes(self, p, n):
        result = closure.v1_closure(p, n)
        assert result.closed
        assert result.is_rotation_closed()
        assert set(result.tight_classes) <= set(result.classes)
        v1 = words.TiltingWord.single(words.Symbol("L", 1), p, n)
        assert v1 in result.tight_classes
        for s in result.states:
            assert closure.state_words(s, p).dim == closure.state_dim(s)

    def test_report(self):
        result = closure.v1_closure(3, 2)
        d = result.to_dict()
        assert d["rotation_closed"]
        assert len(d["classes"]) == len(result.classes)
        assert result.render().startswith("SL2(9) natural module: closed")

    def test_arguments(self):
        with pytest.raises(errors.OutOfRange):
            closure.v1_closure(3, 1)
        with pytest.raises(errors.NotPrime):
            closure.v1_closure(4, 2)
        with pytest.raises(errors.BudgetExceeded):
            closure.v1_closure(5, 2, state_budget=1)

    def test_partial(self):
        result = closure.v1_closure(5, 2, state_budget=1, partial=True)
        assert not result.closed
        assert not result.to_dict()["closed"]
        assert result.render().startswith("SL2(25) natural module: open")
        assert closure.v1_closure(5, 2).closed

    def test_power_words(self):
        v1 = words.TiltingWord.single(words.Symbol("L", 1), 3, 2)
        assert closure.power_words(3, 2, 1) == {v1: 1}
        for k in range(1, 6):
            counted = closure.power_words(3, 2, k)
            assert sum(w.dim * c for w, c in counted.items()) == 2 ** k


class TestMatrixSide(object):
    def test_realization(self):
        m = closure.realize_on_matrices(2, 2)
        assert m.dim == 2
        assert m.group.order() == 60
        assert closure.sylow(2).group(m.group).order() == 4

    def test_sl2_9(self):
        assert closure.realize_on_matrices(3, 2).group.order() == 720

    def test_cap(self):
        with pytest.raises(errors.SizeCap):
            closure.realize_on_matrices(5, 3)

    @staticmethod
    def _state(c3, gf3, classes, seeds, products, depth):
        state = algtest_closure.ClosureState(algtest_closure.Budgets(), True)
        for dim, first in classes:
            m = modules.trivial(c3, gf3, dim)
            state.add(m, series.fingerprint(m, True), first)
        state.seeds = seeds
        state.products = products
        state.depth = depth
        return state

    def test_crosscheck_rejects_unmatched_dims(self, c3, gf3):
        symbolic = closure.v1_closure(3, 2)
        classes = [(1, 1), (7, 1), (11, 1), (13, 1)]
        seeds = [(i, 1) for i in range(4)]
        state = self._state(c3, gf3, classes, seeds, {}, 1)
        result = closure.crosscheck(symbolic, state)
        assert not result["passed"]
        assert {7, 11, 13} <= {row["dim"] for row in result["unmatched"]}
        assert result["powers"][0]["assigned"] is False

    def test_crosscheck_single_class(self, c3, gf3):
        symbolic = closure.v1_closure(3, 2)
        state = self._state(c3, gf3, [(50, 1)], [(0, 1)], {}, 1)
        result = closure.crosscheck(symbolic, state)
        assert not result["passed"]
        assert result["unmatched"] == [{"class": 0, "dim": 50, "power": 1}]

    def test_crosscheck_consistent_bookkeeping(self, c3, gf3):
        # V1 (x) V1 = L(0) + L(2) for p = 3
        symbolic = closure.v1_closure(3, 2)
        classes = [(2, 1), (1, 2), (3, 2)]
        state = self._state(c3, gf3, classes, [(0, 1)], {0: [(1, 1), (2, 1)]}, 2)
        result = closure.crosscheck(symbolic, state)
        assert result["unmatched"] == []
        assert [row["assigned"] for row in result["powers"]] == [True, True]
        assert result["passed"]

    def test_crosscheck_needs_a_whole_split(self, c3, gf3):
        # each class fits a word of V1 (x) V1 on its own, the total does not
        symbolic = closure.v1_closure(3, 2)
        classes = [(2, 1), (1, 2), (2, 2)]
        state = self._state(c3, gf3, classes, [(0, 1)], {0: [(1, 1), (2, 1)]}, 2)
        result = closure.crosscheck(symbolic, state)
        assert result["unmatched"] == []
        assert result["powers"][1] == {
            "power": 2,
            "word_dim": 4,
            "matrix_dim": 3,
            "assigned": False,
        }
        assert not result["passed"]

    @pytest.mark.slow
    def test_crosscheck(self):
        symbolic = closure.v1_closure(2, 2)
        state, verdict = closure.matrix_closure(2, 2)
        assert verdict.is_algebraic
        assert closure.crosscheck(symbolic, state)["passed"]
