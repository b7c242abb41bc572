"""Composition series of modules and of matrix algebras acting on row vectors.

Irreducibility is certified by the Norton criterion in the Holt-Rees form:
for a random algebra element a and an irreducible factor f of its minimal
polynomial with nullity(f(a)) == deg f, the module is irreducible as soon as
a kernel vector of f(a) spins to everything and a kernel vector of f(a)^T
spins to everything under the transposed generators.
"""

import logging
import typing

import numpy as np

from algmod.exactla import field as field_module
from algmod.exactla import matrix
from algmod.exactla import poly
from algmod.exactla import subspace
from algmod.globals import errors
from algmod.globals import globals
from algmod.meataxe import spin
from algmod.modrep import modules

logger = logging.getLogger(__name__)


class _AlgebraSampler(object):
    """Random elements of the algebra generated by some matrices: products
    of pool members grow the pool, elements are random combinations of it."""

    def __init__(self, field, mats: typing.Sequence[np.ndarray], rng) -> None:
        self.__field = field
        self.__pool = [np.asarray(a, dtype=np.int64) for a in mats]
        self.__rng = rng

    def __call__(self) -> np.ndarray:
        field = self.__field
        rng = self.__rng
        if len(self.__pool) < 12:
            i, j = rng.integers(0, len(self.__pool), size=2)
            self.__pool.append(field.matmul(self.__pool[i], self.__pool[j]))
        else:
            i, j = rng.integers(0, len(self.__pool), size=2)
            self.__pool[int(rng.integers(0, len(self.__pool)))] = field.matmul(
                self.__pool[i], self.__pool[j]
            )
        coefficients = field.random_elements(rng, len(self.__pool))
        element = np.zeros_like(self.__pool[0])
        for c, a in zip(coefficients.tolist(), self.__pool):
            if c:
                element = field.add(element, field.mul(a, c))
        return element


def find_submodule(
    field,
    mats: typing.Sequence[np.ndarray],
    dim: int,
    rng=globals.DEFAULT_SEED,
    trials: int = globals.NORTON_TRIALS,
) -> typing.Optional[np.ndarray]:
    """RREF basis of a proper non-zero invariant subspace, or None when the
    action is certified irreducible."""
    if dim <= 1:
        return None
    if not mats:
        unit = np.zeros((1, dim), dtype=np.int64)
        unit[0, 0] = 1
        return unit
    rng = field_module.make_rng(rng)
    transposed = [np.ascontiguousarray(np.asarray(a).T) for a in mats]
    sampler = _AlgebraSampler(field, mats, rng)
    for trial in range(trials):
        a = matrix.Matrix(field, sampler())
        for f, _ in poly.factor_poly(matrix.minpoly(a), rng):
            kernel_map = matrix.poly_at(a, f).entries
            kernel = matrix.nullspace_array(field, kernel_map)
            generated = spin.spin(field, kernel[:1], mats)
            if len(generated) < dim:
                logger.debug("submodule of dimension %d after %d trials", len(generated), trial + 1)
                return generated
            if len(kernel) != f.degree:
                continue
            dual_kernel = matrix.nullspace_array(field, kernel_map.T)
            dual_generated = spin.spin(field, dual_kernel[:1], transposed)
            if len(dual_generated) < dim:
                annihilator = matrix.nullspace_array(field, dual_generated.T)
                logger.debug("submodule from the dual after %d trials", trial + 1)
                return matrix.row_space_array(field, annihilator)
            return None
    msg = "Norton test found neither a submodule nor a certificate in {} trials.".format(
        trials
    )
    raise errors.CertificationFailed(msg)


class CompositionFlag(object):
    """0 < V_1 < ... < V_r = V with simple quotients.

    flag: RREF bases of V_1 .. V_r in the coordinates of V.
    factors: for each i the action of the generators on V_i / V_{i-1}.
    """

    def __init__(self, flag: list, factors: list, dims: list) -> None:
        self.flag = flag
        self.factors = factors
        self.dims = tuple(dims)

    def __len__(self) -> int:
        return len(self.flag)


def _lift_quotient(field, rows: np.ndarray, free: list, dim: int, q: np.ndarray) -> np.ndarray:
    lifted = np.zeros((len(q), dim), dtype=np.int64)
    lifted[:, free] = q
    return matrix.row_space_array(field, np.vstack([rows, lifted]))


def composition_flag(
    field,
    mats: typing.Sequence[np.ndarray],
    dim: int,
    rng=globals.DEFAULT_SEED,
    trials: int = globals.NORTON_TRIALS,
) -> CompositionFlag:
    rng = field_module.make_rng(rng)
    mats = [np.asarray(a, dtype=np.int64) for a in mats]
    if dim == 0:
        return CompositionFlag([], [], [])
    sub = find_submodule(field, mats, dim, rng, trials)
    if sub is None:
        return CompositionFlag([np.eye(dim, dtype=np.int64)], [mats], [dim])

    pivots = [int(np.flatnonzero(row)[0]) for row in sub]
    free = subspace.complement_columns(pivots, dim)
    sub_mats = [field.matmul(sub, a)[:, pivots] for a in mats]
    quotient_mats = []
    for a in mats:
        images = a[free]
        images = field.sub(images, field.matmul(images[:, pivots], sub))
        quotient_mats.append(images[:, free])

    lower = composition_flag(field, sub_mats, len(sub), rng, trials)
    upper = composition_flag(field, quotient_mats, len(free), rng, trials)
    flag = [matrix.row_space_array(field, field.matmul(f, sub)) for f in lower.flag]
    flag.extend(_lift_quotient(field, sub, free, dim, q) for q in upper.flag)
    return CompositionFlag(
        flag, lower.factors + upper.factors, lower.dims + upper.dims
    )


def chop(
    m: modules.ModuleRep, seed=globals.DEFAULT_SEED
) -> typing.List[typing.Tuple[modules.ModuleRep, int]]:
    """Composition factors with multiplicities, isomorphic factors merged;
    sorted by dimension and then by first appearance in the series."""
    field = m.field
    flag = composition_flag(field, [a.entries for a in m.action], m.dim, seed)
    classes = []
    for factor, dim in zip(flag.factors, flag.dims):
        simple = modules.ModuleRep(
            m.group,
            [matrix.Matrix(field, a) for a in factor],
            check=False,
            field=field,
            dim=dim,
        )
        for entry in classes:
            # simple modules are isomorphic iff there is a non-zero hom
            if entry[0].dim == simple.dim and spin.hom_space(entry[0], simple):
                entry[1] += 1
                break
        else:
            classes.append([simple, 1])
    logger.debug(
        "chop: dimension %d into factors %s",
        m.dim,
        [(entry[0].dim, entry[1]) for entry in classes],
    )
    return [
        (simple, count)
        for simple, count in sorted(classes, key=lambda entry: entry[0].dim)
    ]


def is_irreducible(m: modules.ModuleRep, seed=globals.DEFAULT_SEED) -> bool:
    return find_submodule(m.field, [a.entries for a in m.action], m.dim, seed) is None
