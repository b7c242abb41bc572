"""Radical layers, projective covers and Heller shifts.

Omega(M) is the kernel of a projective cover P(M) -> M. Negative shifts go
through duals, Omega^-1(M) = Omega(M*)*, since projective kG-modules are
injective. Every shift is taken up to projective summands, which are stripped
and counted.
"""

import logging
import typing

import numpy as np

from algmod.exactla import field as field_module
from algmod.exactla import matrix
from algmod.exactla import subspace
from algmod.globals import errors
from algmod.globals import globals
from algmod.meataxe import decompose
from algmod.meataxe import isotest
from algmod.meataxe import series
from algmod.meataxe import spin
from algmod.modrep import groups
from algmod.modrep import modules

logger = logging.getLogger(__name__)

Pims = typing.Sequence[typing.Tuple[modules.ModuleRep, modules.ModuleRep]]


def radical_series(
    m: modules.ModuleRep, pgroup: bool = False, seed=globals.DEFAULT_SEED
) -> typing.Tuple[typing.Tuple[int, ...], typing.List[np.ndarray]]:
    """(layer dimensions, bases of rad^0(m) > rad^1(m) > ... > 0)."""
    bases = series.radical_series(m, pgroup, seed)
    return series.layer_dims(bases), bases


def socle_series(
    m: modules.ModuleRep, pgroup: bool = False, seed=globals.DEFAULT_SEED
) -> typing.Tuple[typing.Tuple[int, ...], typing.List[np.ndarray]]:
    """(layer dimensions, bases of 0 < soc^1(m) < ... < m)."""
    bases = series.socle_series(m, pgroup, seed)
    return series.layer_dims(bases), bases


def top(m: modules.ModuleRep, pgroup: bool = False, seed=globals.DEFAULT_SEED) -> modules.ModuleRep:
    return modules.quotient(m, series.radical(m, pgroup, seed).reshape(-1, m.dim))


def loewy_length(m: modules.ModuleRep, pgroup: bool = False, seed=globals.DEFAULT_SEED) -> int:
    return len(radical_series(m, pgroup, seed)[0])


class SyzygyResult(object):
    def __init__(self, module: modules.ModuleRep, projective_multiplicity_removed: int) -> None:
        self.__module = module
        self.__removed = projective_multiplicity_removed

    @property
    def module(self) -> modules.ModuleRep:
        return self.__module

    @property
    def projective_multiplicity_removed(self) -> int:
        return self.__removed

    @property
    def dim(self) -> int:
        return self.__module.dim

    def __repr__(self) -> str:
        return "SyzygyResult(dim={}, removed={})".format(self.dim, self.__removed)


def _zero_module(m: modules.ModuleRep) -> modules.ModuleRep:
    return modules.trivial(m.group, m.field, 0)


def strip_projectives(
    m: modules.ModuleRep,
    sylow: groups.SubgroupSpec,
    seed=globals.DEFAULT_SEED,
    fitting_trials: int = globals.FITTING_TRIALS,
) -> typing.Tuple[modules.ModuleRep, int]:
    """(m without its projective summands, number of indecomposable
    projective summands removed)."""
    if m.dim == 0:
        return m, 0
    # projective summands contribute to the rank of the norm element
    rank, _ = isotest.norm_rank(m, sylow)
    if rank == 0:
        return m, 0
    kept = []
    removed = 0
    for rows in decompose.indecomposable_parts(m, seed, fitting_trials):
        if isotest.is_projective(modules.submodule(m, rows), sylow):
            removed += 1
        else:
            kept.append(rows)
    if not removed:
        return m, 0
    logger.debug("stripped %d projective summands off dimension %d", removed, m.dim)
    if not kept:
        return _zero_module(m), removed
    return modules.submodule(m, np.vstack(kept)), removed


def _pgroup_cover(
    m: modules.ModuleRep, regular: modules.ModuleRep, radical: np.ndarray
) -> typing.Tuple[modules.ModuleRep, matrix.Matrix]:
    # lifts of a basis of top(m) generate m; e_x of the j-th copy of kP goes
    # to the j-th lift times x
    field = m.field
    pivots = [int(np.flatnonzero(row)[0]) for row in radical]
    free = subspace.complement_columns(pivots, m.dim)
    generators = np.eye(m.dim, dtype=np.int64)[free]
    enumeration = m.group.enumerate()
    if enumeration.size != regular.dim:
        msg = "Regular module of dimension {} for a group of order {}.".format(
            regular.dim, enumeration.size
        )
        raise errors.MissingPIM(msg)
    images = np.stack(
        [field.matmul(generators, e.entries) for e in m.element_matrices(enumeration)],
        axis=1,
    )
    surjection = images.reshape(len(free) * enumeration.size, m.dim)
    cover = modules.direct_sum_all([regular] * len(free))
    return cover, matrix.Matrix(field, surjection)


def projective_cover(
    m: modules.ModuleRep,
    pims: Pims,
    pgroup: bool = False,
    seed=globals.DEFAULT_SEED,
) -> typing.Tuple[modules.ModuleRep, matrix.Matrix]:
    """(cover, surjection) with surjection a cover.dim x m.dim intertwiner.

    Homomorphisms out of the PIMs are kept as long as their images add to
    the image in top(m); by Nakayama they generate m once top(m) is reached.
    """
    field = m.field
    if m.dim == 0:
        return _zero_module(m), matrix.Matrix.zero(field, 0, 0)
    radical = series.radical(m, pgroup, seed).reshape(-1, m.dim)
    if pgroup:
        if len(pims) != 1:
            msg = "A p-group has one PIM, got {}.".format(len(pims))
            raise errors.MissingPIM(msg)
        return _pgroup_cover(m, pims[0][1], radical)

    projection = modules.quotient_map(m.dim, field, radical)
    reached = subspace.Echelon(field, projection.shape[1])
    chosen = []
    for _, pim in pims:
        if reached.is_full():
            break
        for h in spin.hom_space(pim, m):
            if reached.extend(field.matmul(h.entries, projection)):
                chosen.append((pim, h))
            if reached.is_full():
                break
    if not reached.is_full():
        msg = "The PIMs cover {} of {} dimensions of the top.".format(
            reached.rank, reached.ncols
        )
        raise errors.MissingPIM(msg)
    cover = modules.direct_sum_all([pim for pim, _ in chosen])
    surjection = matrix.vstack([h for _, h in chosen])
    logger.debug("projective cover of dimension %d for dimension %d", cover.dim, m.dim)
    return cover, surjection


def _kernel(
    cover: modules.ModuleRep, surjection: matrix.Matrix
) -> modules.ModuleRep:
    kernel = matrix.nullspace_array(cover.field, surjection.entries)
    if len(kernel) == 0:
        return _zero_module(cover)
    return modules.submodule(cover, kernel)


def omega(
    m: modules.ModuleRep,
    n: int,
    pims: Pims,
    sylow: groups.SubgroupSpec = None,
    pgroup: bool = False,
    seed=globals.DEFAULT_SEED,
    fitting_trials: int = globals.FITTING_TRIALS,
) -> SyzygyResult:
    """Omega^n(m) without projective summands.

    sylow: a Sylow p-subgroup for the projectivity checks; the whole group
        when omitted.
    """
    if sylow is None:
        sylow = groups.SubgroupSpec.generators(m.group.ngens)
    rng = field_module.make_rng(seed)
    current, removed = strip_projectives(m, sylow, rng, fitting_trials)
    if current.dim == 0:
        return SyzygyResult(current, removed)
    if n < 0:
        shifted = omega(modules.dual(current), -n, pims, sylow, pgroup, rng, fitting_trials)
        dual = modules.dual(shifted.module) if shifted.dim else shifted.module
        return SyzygyResult(dual, removed + shifted.projective_multiplicity_removed)
    for step in range(n):
        if current.dim == 0:
            break
        cover, surjection = projective_cover(current, pims, pgroup, rng)
        current, count = strip_projectives(_kernel(cover, surjection), sylow, rng, fitting_trials)
        removed += count
        logger.debug("Omega^%d: dimension %d", step + 1, current.dim)
    return SyzygyResult(current, removed)


class ProbeResult(object):
    PERIODIC = "periodic"
    NON_PERIODIC = "non-periodic"
    INCONCLUSIVE = "inconclusive"

    def __init__(self, kind: str, dims: typing.Sequence[int], period: int = None) -> None:
        assert kind in (self.PERIODIC, self.NON_PERIODIC, self.INCONCLUSIVE)
        self.__kind = kind
        self.__dims = tuple(dims)
        self.__period = period

    @property
    def kind(self) -> str:
        return self.__kind

    @property
    def dims(self) -> typing.Tuple[int, ...]:
        """Dimensions of Omega^0 .. Omega^s as far as the probe went."""
        return self.__dims

    @property
    def period(self) -> typing.Optional[int]:
        return self.__period

    @property
    def is_periodic(self) -> bool:
        return self.__kind == self.PERIODIC

    @property
    def is_non_periodic(self) -> bool:
        return self.__kind == self.NON_PERIODIC

    def __repr__(self) -> str:
        if self.__period:
            return "ProbeResult({}, period={})".format(self.__kind, self.__period)
        return "ProbeResult({}, dims={})".format(self.__kind, self.__dims)

    def to_dict(self) -> dict:
        return {"kind": self.__kind, "period": self.__period, "dims": list(self.__dims)}


def periodicity_probe(
    m: modules.ModuleRep,
    pims: Pims,
    sylow: groups.SubgroupSpec = None,
    window: int = globals.PROBE_WINDOW,
    pgroup: bool = True,
    seed=globals.DEFAULT_SEED,
    iso_trials: int = globals.ISO_TRIALS,
) -> ProbeResult:
    """Iterate Omega up to 2 * window times.

    Periodic when some Omega^j(m) is isomorphic to m. Non-periodic is only
    certified when the dimensions grow strictly over the first window steps
    and m does not return within the 2 * window steps.
    """
    if sylow is None:
        sylow = groups.SubgroupSpec.generators(m.group.ngens)
    rng = field_module.make_rng(seed)
    start, _ = strip_projectives(m, sylow, rng)
    dims = [start.dim]
    if start.dim == 0:
        return ProbeResult(ProbeResult.INCONCLUSIVE, dims)
    current = start
    unknown = False
    for step in range(1, 2 * window + 1):
        current = omega(current, 1, pims, sylow, pgroup, rng).module
        dims.append(current.dim)
        if current.dim != start.dim:
            continue
        try:
            found = isotest.iso_test(start, current, iso_trials, rng, pgroup)
        except errors.IsoUnknown:
            unknown = True
            continue
        if found is not None:
            logger.debug("periodic of period %d", step)
            return ProbeResult(ProbeResult.PERIODIC, dims, step)
    growing = all(a < b for a, b in zip(dims[:window], dims[1 : window + 1]))
    if growing and not unknown:
        logger.debug("certified non-periodic: dimensions %s", dims)
        return ProbeResult(ProbeResult.NON_PERIODIC, dims)
    return ProbeResult(ProbeResult.INCONCLUSIVE, dims)
