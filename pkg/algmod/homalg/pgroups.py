"""Group algebras of p-groups: regular modules and Jennings bases.

The dimension subgroups follow the recursion

    D_1 = P,  D_i = [P, D_(i-1)] * D_ceil(i/p) ^ p

and the elements x_ij chosen from D_i \\ D_(i+1) give X_ij = x_ij - 1 of
weight i. Products of the X_ij with exponents below p, ordered by weight,
form a basis of kP in which every power of the radical is spanned by a tail.
Within one weight, monomials are ordered by decreasing exponent vectors, so
the weight-one part starts with X_11, X_12, ...
"""

import itertools
import logging
import typing

import numpy as np

from algmod.exactla import matrix
from algmod.globals import errors
from algmod.globals import globals
from algmod.modrep import groups
from algmod.modrep import modules

logger = logging.getLogger(__name__)


def regular_module(
    group: groups.GroupSpec, field, cap: int = globals.ORDER_CAP
) -> modules.ModuleRep:
    """kG on the element basis; e_x . g = e_(x g)."""
    enumeration = group.enumerate(max(cap, 1))
    if enumeration.size > cap:
        msg = "Group order {} exceeds the cap of {}.".format(enumeration.size, cap)
        raise errors.OrderCapExceeded(msg)
    size = enumeration.size
    action = []
    for g in range(group.ngens):
        entries = np.zeros((size, size), dtype=np.int64)
        entries[np.arange(size), np.array(enumeration.right_translation(g))] = 1
        action.append(matrix.Matrix(field, entries))
    return modules.ModuleRep(group, action, check=False, field=field, dim=size)


def pims_for_pgroup(
    group: groups.GroupSpec, field
) -> typing.List[typing.Tuple[modules.ModuleRep, modules.ModuleRep]]:
    """The single (simple, projective cover) pair of a p-group: (k, kP)."""
    return [(modules.trivial(group, field), regular_module(group, field))]


def _subgroup_product(enumeration: groups.Enumeration, *parts: frozenset) -> frozenset:
    return enumeration.closure(set().union(*parts))


def dimension_subgroups(
    enumeration: groups.Enumeration, p: int
) -> typing.List[frozenset]:
    """[D_1, D_2, ...] as sets of element indices, down to the trivial group
    (included once)."""
    whole = frozenset(range(enumeration.size))
    chain = [whole]
    trivial = frozenset([0])
    i = 1
    while chain[-1] != trivial:
        i += 1
        previous = chain[-1]
        commutators = {
            enumeration.commutator(g, h) for g in whole for h in previous
        }
        source = chain[-(-i // p) - 1]
        powers = {enumeration.power(h, p) for h in source}
        chain.append(_subgroup_product(enumeration, frozenset(commutators), frozenset(powers)))
        assert chain[-1] <= previous
    return chain


class JenningsBasis(object):
    def __init__(self, group: groups.GroupSpec, field) -> None:
        enumeration = group.enumerate()
        p = field.p
        exponent = groups.prime_power_exponent(enumeration.size, p)
        if exponent is None:
            msg = "Group of order {} is no {}-group.".format(enumeration.size, p)
            raise errors.NotPGroup(msg)

        chain = dimension_subgroups(enumeration, p)
        representatives = []
        for weight, (upper, lower) in enumerate(zip(chain, chain[1:]), start=1):
            reached = lower
            for x in sorted(upper):
                if reached == upper:
                    break
                if x in reached:
                    continue
                representatives.append((weight, x))
                reached = _subgroup_product(enumeration, reached, frozenset([x]))

        exponents = list(itertools.product(range(p), repeat=len(representatives)))
        weights = [
            sum(alpha_i * w for alpha_i, (w, _) in zip(alpha, representatives))
            for alpha in exponents
        ]
        order = sorted(
            range(len(exponents)),
            key=lambda n: (weights[n], tuple(-a for a in exponents[n])),
        )
        self.__group = group
        self.__field = field
        self.__enumeration = enumeration
        self.__chain = chain
        self.__representatives = tuple(representatives)
        self.__exponents = tuple(exponents[n] for n in order)
        self.__weights = tuple(weights[n] for n in order)
        self.__basis = self.__make_basis()
        logger.debug(
            "Jennings basis of a group of order %d: weights %s",
            enumeration.size,
            self.layer_dims,
        )

    def __translate(self, vector: np.ndarray, x: int) -> np.ndarray:
        """vector * (x - 1) in kP."""
        enumeration = self.__enumeration
        moved = np.zeros_like(vector)
        targets = [enumeration.multiply(g, x) for g in range(enumeration.size)]
        moved[targets] = vector
        return self.__field.sub(moved, vector)

    def __make_basis(self) -> np.ndarray:
        size = self.__enumeration.size
        rows = np.zeros((size, size), dtype=np.int64)
        for n, alpha in enumerate(self.__exponents):
            vector = np.zeros(size, dtype=np.int64)
            vector[0] = 1
            for a, (_, x) in zip(alpha, self.__representatives):
                for _ in range(a):
                    vector = self.__translate(vector, x)
            rows[n] = vector
        return rows

    @property
    def group(self) -> groups.GroupSpec:
        return self.__group

    @property
    def field(self):
        return self.__field

    @property
    def dimension_subgroups(self) -> typing.List[frozenset]:
        return list(self.__chain)

    @property
    def representatives(self) -> typing.Tuple[typing.Tuple[int, int], ...]:
        """(weight, element index) of every x_ij."""
        return self.__representatives

    @property
    def exponents(self) -> tuple:
        return self.__exponents

    @property
    def weights(self) -> tuple:
        return self.__weights

    @property
    def basis(self) -> np.ndarray:
        """Monomials as rows in the element basis of kP."""
        return self.__basis

    @property
    def layer_dims(self) -> typing.Tuple[int, ...]:
        """Number of monomials of every weight 0, 1, ..."""
        top = max(self.__weights)
        return tuple(self.__weights.count(w) for w in range(top + 1))

    @property
    def loewy_length(self) -> int:
        return len(self.layer_dims)

    def radical_power(self, w: int) -> np.ndarray:
        """Basis of rad^w(kP): the monomials of weight >= w."""
        return self.__basis[[n for n, weight in enumerate(self.__weights) if weight >= w]]


def jennings(group: groups.GroupSpec, field) -> JenningsBasis:
    return JenningsBasis(group, field)


def quotient_mod_radpower(group: groups.GroupSpec, field, i: int) -> modules.ModuleRep:
    """M_i = kP / rad^i(kP) on the monomials of weight < i."""
    basis = jennings(group, field)
    if not 1 <= i <= basis.loewy_length:
        msg = "Level {} is out of range 1..{}.".format(i, basis.loewy_length)
        raise errors.LevelOutOfRange(msg)
    regular = regular_module(group, field, max(globals.ORDER_CAP, len(basis.basis)))
    change = matrix.Matrix(field, basis.basis)
    inverse = change.inverse()
    keep = sum(1 for w in basis.weights if w < i)
    action = []
    for a in regular.action:
        in_monomials = change @ a @ inverse
        action.append(matrix.Matrix(field, in_monomials.entries[:keep, :keep]))
    return modules.ModuleRep(group, action, check=False, field=field, dim=keep)


def heart(group: groups.GroupSpec, field) -> modules.ModuleRep:
    """rad(kP) / soc(kP)."""
    regular = regular_module(group, field)
    size = regular.dim
    radical = jennings(group, field).radical_power(1)
    norm = np.ones((1, size), dtype=np.int64)
    if size == 1:
        return modules.submodule(regular, np.zeros((0, 1), dtype=np.int64))
    return modules.subquotient(regular, radical, norm)
