"""Socles, radicals, their series and module fingerprints.

Over a p-group in characteristic p the only simple module is k: the socle is
the common fixed space of the generators and the radical is the submodule
spun from the images of g - 1. Other groups go through composition factors:
the socle is the sum of the images of all homomorphisms from simple factors,
the radical the annihilator of the socle of the dual.
"""

import functools
import logging
import typing

import numpy as np

from algmod.exactla import matrix
from algmod.exactla import subspace
from algmod.globals import globals
from algmod.meataxe import chop
from algmod.meataxe import spin
from algmod.modrep import modules

logger = logging.getLogger(__name__)


def _minus_identity(field, a: np.ndarray) -> np.ndarray:
    return field.sub(a, np.eye(a.shape[0], dtype=np.int64))


def pgroup_socle(m: modules.ModuleRep) -> np.ndarray:
    field = m.field
    if not m.action:
        return np.eye(m.dim, dtype=np.int64)
    stacked = np.hstack([_minus_identity(field, a.entries) for a in m.action])
    return matrix.row_space_array(field, matrix.nullspace_array(field, stacked))


def pgroup_radical(m: modules.ModuleRep) -> np.ndarray:
    field = m.field
    if not m.action:
        return np.zeros((0, m.dim), dtype=np.int64)
    images = np.vstack([_minus_identity(field, a.entries) for a in m.action])
    return spin.spin(field, matrix.row_space_array(field, images), [a.entries for a in m.action])


def socle(m: modules.ModuleRep, pgroup: bool = False, seed=globals.DEFAULT_SEED) -> np.ndarray:
    """RREF basis of soc(m)."""
    if m.dim == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if pgroup:
        return pgroup_socle(m)
    images = [
        h.entries
        for simple, _ in chop.chop(m, seed)
        for h in spin.hom_space(simple, m)
    ]
    return matrix.row_space_array(m.field, np.vstack(images))


def radical(m: modules.ModuleRep, pgroup: bool = False, seed=globals.DEFAULT_SEED) -> np.ndarray:
    """RREF basis of rad(m)."""
    if m.dim == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if pgroup:
        return pgroup_radical(m)
    dual_socle = socle(modules.dual(m), False, seed)
    if len(dual_socle) == 0:
        return np.eye(m.dim, dtype=np.int64)
    annihilator = matrix.nullspace_array(m.field, dual_socle.T)
    return matrix.row_space_array(m.field, annihilator)


def radical_series(
    m: modules.ModuleRep, pgroup: bool = False, seed=globals.DEFAULT_SEED
) -> typing.List[np.ndarray]:
    """Bases of m = rad^0 > rad^1 > ... > rad^l = 0 (the last one empty)."""
    field = m.field
    series = [np.eye(m.dim, dtype=np.int64)]
    current, rows = m, series[0]
    while len(rows):
        inner = radical(current, pgroup, seed)
        assert len(inner) < current.dim
        rows = field.matmul(inner, rows) if len(inner) else np.zeros((0, m.dim), dtype=np.int64)
        series.append(matrix.row_space_array(field, rows) if len(rows) else rows)
        if len(inner):
            current = modules.submodule(current, inner)
    return series


def socle_series(
    m: modules.ModuleRep, pgroup: bool = False, seed=globals.DEFAULT_SEED
) -> typing.List[np.ndarray]:
    """Bases of 0 = soc^0 < soc^1 < ... < soc^l = m."""
    field = m.field
    series = [np.zeros((0, m.dim), dtype=np.int64)]
    current_rows = series[0]
    while len(current_rows) < m.dim:
        pivots = _pivots(current_rows)
        quotient = modules.quotient(m, current_rows) if pivots else m
        free = subspace.complement_columns(pivots, m.dim)
        layer = socle(quotient, pgroup, seed)
        lifted = np.zeros((len(layer), m.dim), dtype=np.int64)
        lifted[:, free] = layer
        current_rows = matrix.row_space_array(field, np.vstack([current_rows, lifted]))
        series.append(current_rows)
    return series


def _pivots(rows: np.ndarray) -> typing.List[int]:
    return [int(np.flatnonzero(row)[0]) for row in rows]


def layer_dims(series: typing.Sequence[np.ndarray]) -> typing.Tuple[int, ...]:
    """Dimensions of the successive quotients of a monotone series."""
    dims = [len(rows) for rows in series]
    return tuple(abs(a - b) for a, b in zip(dims, dims[1:]))


@functools.total_ordering
class Fingerprint(object):
    """Isomorphism invariants of a module, used as a cheap prefilter."""

    def __init__(
        self,
        dim: int,
        socle_dims: tuple,
        radical_dims: tuple,
        factor_dims: tuple,
        end_dim: int,
    ) -> None:
        self.__key = (
            dim,
            tuple(socle_dims),
            tuple(radical_dims),
            tuple(sorted(factor_dims)),
            end_dim,
        )

    @property
    def dim(self) -> int:
        return self.__key[0]

    @property
    def socle_dims(self) -> tuple:
        return self.__key[1]

    @property
    def radical_dims(self) -> tuple:
        return self.__key[2]

    @property
    def factor_dims(self) -> tuple:
        return self.__key[3]

    @property
    def end_dim(self) -> int:
        return self.__key[4]

    @property
    def key(self) -> tuple:
        return self.__key

    def __repr__(self) -> str:
        return "Fingerprint(dim={}, soc={}, rad={}, factors={}, end={})".format(*self.__key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fingerprint):
            return NotImplemented
        return self.__key == other.key

    def __lt__(self, other: "Fingerprint") -> bool:
        return self.__key < other.key

    def __hash__(self) -> int:
        return hash(self.__key)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "socle_layers": list(self.socle_dims),
            "radical_layers": list(self.radical_dims),
            "composition_factors": list(self.factor_dims),
            "end_dim": self.end_dim,
        }


def fingerprint(
    m: modules.ModuleRep, pgroup: bool = False, seed=globals.DEFAULT_SEED
) -> Fingerprint:
    if pgroup:
        factor_dims = (1,) * m.dim
    else:
        factor_dims = tuple(
            simple.dim for simple, count in chop.chop(m, seed) for _ in range(count)
        )
    end_dim = len(spin.commutant_arrays(m.field, [a.entries for a in m.action], m.dim))
    return Fingerprint(
        m.dim,
        layer_dims(socle_series(m, pgroup, seed)),
        layer_dims(radical_series(m, pgroup, seed)),
        factor_dims,
        end_dim,
    )
