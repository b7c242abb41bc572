import pytest

from algmod.globals import errors
from algmod.homalg import pgroups
from algmod.homalg import syzygy
from algmod.meataxe import isotest
from algmod.modrep import groups
from algmod.modrep import modules
from algmod.modrep import textio

from conftest import fixture_path


@pytest.fixture
def pims_c3c3(c3c3, gf3):
    return pgroups.pims_for_pgroup(c3c3, gf3)


class TestRegular(object):
    def test_dims(self, v4, gf2):
        c2 = textio.load_permutations(fixture_path("c2.perm"))
        assert pgroups.regular_module(c2, gf2).dim == 2
        assert pgroups.regular_module(v4, gf2).dim == 4

    def test_radical_layers(self, c3c3, gf3):
        regular = pgroups.regular_module(c3c3, gf3)
        layers, _ = syzygy.radical_series(regular, pgroup=True)
        assert layers == (1, 2, 3, 2, 1)
        socle_layers, _ = syzygy.socle_series(regular, pgroup=True)
        assert socle_layers == (1, 2, 3, 2, 1)

    def test_order_cap(self, c5c5, gf5):
        with pytest.raises(errors.OrderCapExceeded):
            pgroups.regular_module(c5c5, gf5, cap=10)


class TestJennings(object):
    def test_elementary_abelian(self, c3c3, gf3):
        basis = pgroups.jennings(c3c3, gf3)
        assert basis.layer_dims == (1, 2, 3, 2, 1)
        assert basis.loewy_length == 2 * 3 - 1
        assert len(basis.representatives) == 2

    def test_c5c5(self, c5c5, gf5):
        basis = pgroups.jennings(c5c5, gf5)
        assert basis.layer_dims == (1, 2, 3, 4, 5, 4, 3, 2, 1)

    def test_cyclic(self, gf3):
        c9 = textio.load_permutations(fixture_path("c9.perm"))
        basis = pgroups.jennings(c9, gf3)
        assert basis.layer_dims == (1,) * 9
        assert [w for w, _ in basis.representatives] == [1, 3]

    def test_klein_four(self, v4, gf2):
        assert pgroups.jennings(v4, gf2).layer_dims == (1, 2, 1)

    def test_radical_powers(self, c3c3, gf3):
        basis = pgroups.jennings(c3c3, gf3)
        regular = pgroups.regular_module(c3c3, gf3)
        _, bases = syzygy.radical_series(regular, pgroup=True)
        for w in range(6):
            assert len(basis.radical_power(w)) == len(bases[w])

    def test_not_a_pgroup(self, sl32):
        with pytest.raises(errors.NotPGroup):
            pgroups.jennings(sl32.group, sl32.field)


class TestQuotients(object):
    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_dims_p3(self, c3c3, gf3, i):
        assert pgroups.quotient_mod_radpower(c3c3, gf3, i).dim == i * (i + 1) // 2

    @pytest.mark.parametrize("i", [1, 2, 3, 4, 5])
    def test_dims_p5(self, c5c5, gf5, i):
        assert pgroups.quotient_mod_radpower(c5c5, gf5, i).dim == i * (i + 1) // 2

    def test_first_is_trivial(self, c3c3, gf3):
        assert pgroups.quotient_mod_radpower(c3c3, gf3, 1) == modules.trivial(c3c3, gf3)

    def test_last_is_regular(self, c3c3, gf3):
        m = pgroups.quotient_mod_radpower(c3c3, gf3, 5)
        assert m.dim == 9
        regular = pgroups.regular_module(c3c3, gf3)
        assert isotest.iso_test(m, regular, pgroup=True) is not None

    def test_m4(self, c3c3, gf3):
        assert pgroups.quotient_mod_radpower(c3c3, gf3, 4).dim == 8

    def test_fixture_is_m2(self, c3c3, gf3, m2_c3c3):
        m2 = pgroups.quotient_mod_radpower(c3c3, gf3, 2)
        fixture = modules.ModuleRep(c3c3, m2_c3c3.action)
        assert isotest.iso_test(m2, fixture, pgroup=True) is not None

    def test_level_range(self, c3c3, gf3):
        with pytest.raises(errors.LevelOutOfRange):
            pgroups.quotient_mod_radpower(c3c3, gf3, 6)
        with pytest.raises(errors.LevelOutOfRange):
            pgroups.quotient_mod_radpower(c3c3, gf3, 0)


class TestHeart(object):
    def test_dims(self, c3c3, gf3, c5c5, gf5):
        assert pgroups.heart(c3c3, gf3).dim == 7
        assert pgroups.heart(c5c5, gf5).dim == 23

    def test_self_dual(self, c3c3, gf3):
        h = pgroups.heart(c3c3, gf3)
        assert isotest.iso_test(h, modules.dual(h), pgroup=True) is not None


class TestCover(object):
    def test_cover_of_trivial(self, c3c3, gf3, pims_c3c3):
        k = modules.trivial(c3c3, gf3)
        cover, surjection = syzygy.projective_cover(k, pims_c3c3, pgroup=True)
        assert cover.dim == 9
        assert surjection.shape == (9, 1)
        for a, b in zip(cover.action, k.action):
            assert a @ surjection == surjection @ b

    def test_general_path(self, c3c3, gf3, pims_c3c3):
        k = modules.trivial(c3c3, gf3)
        cover, surjection = syzygy.projective_cover(k, pims_c3c3)
        assert cover.dim == 9
        assert surjection.rank() == 1

    def test_cover_of_m2(self, c3c3, gf3, pims_c3c3):
        m2 = pgroups.quotient_mod_radpower(c3c3, gf3, 2)
        cover, surjection = syzygy.projective_cover(m2, pims_c3c3, pgroup=True)
        assert cover.dim == 9
        assert surjection.rank() == 3

    def test_cover_of_projective(self, c3c3, gf3, pims_c3c3):
        regular = pims_c3c3[0][1]
        cover, surjection = syzygy.projective_cover(regular, pims_c3c3, pgroup=True)
        assert cover.dim == 9
        assert surjection.rank() == 9

    def test_missing_pims(self, c3c3, gf3):
        k = modules.trivial(c3c3, gf3)
        with pytest.raises(errors.MissingPIM):
            syzygy.projective_cover(k, [])

    def test_top(self, c3c3, gf3):
        m2 = pgroups.quotient_mod_radpower(c3c3, gf3, 2)
        assert syzygy.top(m2, pgroup=True).dim == 1
        assert syzygy.loewy_length(m2, pgroup=True) == 2


class TestOmega(object):
    def test_omega_of_trivial(self, c3c3, gf3, pims_c3c3):
        k = modules.trivial(c3c3, gf3)
        assert syzygy.omega(k, 1, pims_c3c3, pgroup=True).dim == 8
        assert syzygy.omega(k, -1, pims_c3c3, pgroup=True).dim == 8
        assert syzygy.omega(k, 0, pims_c3c3, pgroup=True).module == k

    def test_omega_is_not_projective(self, c3c3, gf3, pims_c3c3):
        k = modules.trivial(c3c3, gf3)
        shifted = syzygy.omega(k, 1, pims_c3c3, pgroup=True).module
        assert not isotest.is_projective(shifted, groups.SubgroupSpec.generators(2))

    def test_omega_of_projective(self, c3c3, gf3, pims_c3c3):
        result = syzygy.omega(pims_c3c3[0][1], 1, pims_c3c3, pgroup=True)
        assert result.dim == 0
        assert result.projective_multiplicity_removed == 1

    def test_strip_projectives(self, c3c3, gf3, pims_c3c3):
        k = modules.trivial(c3c3, gf3)
        m = modules.direct_sum(k, pims_c3c3[0][1])
        stripped, removed = syzygy.strip_projectives(m, groups.SubgroupSpec.generators(2))
        assert removed == 1
        assert stripped.dim == 1

    def test_klein_four_syzygies(self, v4, gf2):
        pims = pgroups.pims_for_pgroup(v4, gf2)
        k = modules.trivial(v4, gf2)
        dims = [syzygy.omega(k, n, pims, pgroup=True).dim for n in range(-2, 3)]
        assert dims == [5, 3, 1, 3, 5]


class TestProbe(object):
    def test_cyclic_is_periodic(self, c3, gf3):
        pims = pgroups.pims_for_pgroup(c3, gf3)
        probe = syzygy.periodicity_probe(modules.trivial(c3, gf3), pims, window=2)
        assert probe.is_periodic
        assert probe.period == 2
        assert probe.dims == (1, 2, 1)

    def test_klein_four_is_not_periodic(self, v4, gf2):
        pims = pgroups.pims_for_pgroup(v4, gf2)
        probe = syzygy.periodicity_probe(modules.trivial(v4, gf2), pims, window=3)
        assert probe.is_non_periodic
        assert probe.dims[:4] == (1, 3, 5, 7)
        assert probe.to_dict()["kind"] == "non-periodic"

    def test_projective_is_inconclusive(self, c3c3, gf3, pims_c3c3):
        probe = syzygy.periodicity_probe(pims_c3c3[0][1], pims_c3c3, window=2)
        assert probe.kind == syzygy.ProbeResult.INCONCLUSIVE
        assert probe.dims == (0,)
