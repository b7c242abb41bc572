"""Isomorphism and projectivity tests."""

import logging
import typing

import numpy as np

from algmod.exactla import field as field_module
from algmod.exactla import matrix
from algmod.globals import errors
from algmod.globals import globals
from algmod.meataxe import series
from algmod.meataxe import spin
from algmod.modrep import groups
from algmod.modrep import modules

logger = logging.getLogger(__name__)


def iso_test(
    m: modules.ModuleRep,
    n: modules.ModuleRep,
    trials: int = globals.ISO_TRIALS,
    seed=globals.DEFAULT_SEED,
    pgroup: bool = False,
    fingerprints: typing.Tuple[series.Fingerprint, series.Fingerprint] = None,
) -> typing.Optional[matrix.Matrix]:
    """An invertible intertwiner m -> n, or None when m and n are not isomorphic.

    Raises IsoUnknown when the random search fails although the hom space is
    as large as End(m).
    """
    if m.group.ngens != n.group.ngens:
        raise errors.GroupMismatch("Isomorphism tests need modules for the same group.")
    if m.field != n.field:
        raise errors.FieldMismatch("Isomorphism tests need modules over the same field.")
    if m.dim != n.dim:
        return None
    if m == n:
        return matrix.Matrix.identity(m.field, m.dim)
    if fingerprints is None:
        fingerprints = (
            series.fingerprint(m, pgroup, seed),
            series.fingerprint(n, pgroup, seed),
        )
    if fingerprints[0] != fingerprints[1]:
        return None

    field = m.field
    homs = spin.hom_space(m, n)
    if not homs:
        return None
    for h in homs:
        if h.rank() == m.dim:
            return h
    rng = field_module.make_rng(seed)
    stacked = np.stack([h.entries for h in homs])
    for _ in range(trials):
        coefficients = field.random_elements(rng, len(homs))
        candidate = np.zeros((m.dim, m.dim), dtype=np.int64)
        for c, h in zip(coefficients.tolist(), stacked):
            if c:
                candidate = field.add(candidate, field.mul(h, c))
        if matrix.rank_of(field, candidate) == m.dim:
            return matrix.Matrix(field, candidate)
    end_dim = fingerprints[0].end_dim
    if len(homs) < end_dim:
        return None
    msg = "No invertible homomorphism among {} random trials (dim Hom = {}).".format(
        trials, len(homs)
    )
    logger.warning(msg)
    raise errors.IsoUnknown(msg)


def norm_rank(m: modules.ModuleRep, sylow: groups.SubgroupSpec) -> typing.Tuple[int, int]:
    """(rank of the sum of all sylow elements on m, order of sylow)."""
    restricted = modules.restrict(m, sylow)
    enumeration = restricted.group.enumerate()
    order = enumeration.size
    if groups.prime_power_exponent(order, m.field.p) is None:
        msg = "Subgroup of order {} is no {}-group.".format(order, m.field.p)
        raise errors.NotPGroup(msg)
    field = m.field
    norm = np.zeros((m.dim, m.dim), dtype=np.int64)
    for element in restricted.element_matrices(enumeration):
        norm = field.add(norm, element.entries)
    return matrix.rank_of(field, norm), order


def is_projective(m: modules.ModuleRep, sylow: groups.SubgroupSpec) -> bool:
    """m is projective iff it is free over a Sylow p-subgroup P, i.e. iff the
    norm element of kP acts with rank dim(m) / |P|."""
    if m.dim == 0:
        return True
    rank, order = norm_rank(m, sylow)
    if m.dim % order:
        return False
    return rank == m.dim // order
