"""Direct-sum decomposition into certified indecomposable summands.

A module splits along the Fitting decomposition of any endomorphism whose
minimal polynomial has two coprime factors. A module is indecomposable iff
its endomorphism ring E is local; this is certified either by an element
generating E as a field, or by computing the radical J(E) and exhibiting an
element whose minimal polynomial is a power of an irreducible of degree
dim E/J(E). Idempotents modulo J(E) found on the way are lifted by q-power
iteration and split the module.
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
from algmod.meataxe import chop
from algmod.meataxe import isotest
from algmod.meataxe import series
from algmod.meataxe import spin
from algmod.modrep import modules

logger = logging.getLogger(__name__)

# random elements tried before the radical of E is computed
_EARLY_TRIALS = 8


class Summand(object):
    """One isomorphism class of summands with its multiplicity.

    bases: for every copy, an RREF basis of its image inside the decomposed
        module.
    """

    def __init__(
        self,
        module: modules.ModuleRep,
        bases: typing.List[np.ndarray],
        fingerprint: series.Fingerprint,
    ) -> None:
        self.module = module
        self.bases = bases
        self.fingerprint = fingerprint

    @property
    def multiplicity(self) -> int:
        return len(self.bases)

    @property
    def dim(self) -> int:
        return self.module.dim

    def __repr__(self) -> str:
        return "Summand(dim={}, multiplicity={})".format(self.dim, self.multiplicity)


class Decomposition(object):
    def __init__(self, summands: typing.List[Summand], events: typing.List[str]) -> None:
        self.__summands = summands
        self.__events = events

    @property
    def summands(self) -> typing.List[Summand]:
        return self.__summands

    @property
    def events(self) -> typing.List[str]:
        """Isomorphism tests that ended Unknown (classes kept apart)."""
        return self.__events

    def __iter__(self):
        return iter(self.__summands)

    def __len__(self) -> int:
        return len(self.__summands)

    @property
    def dim(self) -> int:
        return sum(s.dim * s.multiplicity for s in self.__summands)

    def dims(self) -> typing.List[int]:
        """Summand dimensions with multiplicity, ascending."""
        return sorted(s.dim for s in self.__summands for _ in range(s.multiplicity))

    def summand_modules(self) -> typing.List[modules.ModuleRep]:
        return [s.module for s in self.__summands]

    def __repr__(self) -> str:
        return "Decomposition({})".format(
            " + ".join(
                "{}x{}".format(s.multiplicity, s.dim) if s.multiplicity > 1 else str(s.dim)
                for s in self.__summands
            )
        )


# ------------------------------------------------------------ endomorphisms


def _combination(field, basis: np.ndarray, coefficients: np.ndarray) -> np.ndarray:
    result = np.zeros(basis.shape[1:], dtype=np.int64)
    for c, b in zip(coefficients.tolist(), basis):
        if c:
            result = field.add(result, field.mul(b, c))
    return result


def algebra_radical(
    field, basis: np.ndarray, dim: int, rng=globals.DEFAULT_SEED
) -> np.ndarray:
    """Basis (as (j, dim, dim) array) of the Jacobson radical of the matrix
    algebra spanned by basis, acting faithfully on row vectors of length dim.

    J is the set of x with V_i x <= V_{i-1} along a composition series of the
    natural module, since a faithful module has every simple module of the
    algebra as a composition factor.
    """
    flag = chop.composition_flag(field, list(basis), dim, rng)
    columns = []
    previous = np.zeros((0, dim), dtype=np.int64)
    for current in flag.flag:
        previous_pivots = [int(np.flatnonzero(row)[0]) for row in previous]
        chosen = set(previous_pivots)
        fresh = np.array(
            [row for row in current if int(np.flatnonzero(row)[0]) not in chosen],
            dtype=np.int64,
        ).reshape(-1, dim)
        free = subspace.complement_columns(previous_pivots, dim)
        for x in basis:
            images = field.matmul(fresh, x)
            if previous_pivots:
                images = field.sub(images, field.matmul(images[:, previous_pivots], previous))
            columns.append(images[:, free].reshape(-1))
        previous = current
    per_element = len(flag.flag)
    conditions = np.array(
        [
            np.concatenate([columns[i * len(basis) + l] for i in range(per_element)])
            for l in range(len(basis))
        ],
        dtype=np.int64,
    )
    coefficients = matrix.nullspace_array(field, conditions)
    flat = basis.reshape(len(basis), dim * dim)
    radical = field.matmul(coefficients, flat) if len(coefficients) else flat[:0]
    return matrix.row_space_array(field, radical).reshape(-1, dim, dim)


def lift_idempotent(field, x: np.ndarray) -> np.ndarray:
    """The idempotent y = x^(q^t) with q^t >= dim, for x idempotent modulo
    the radical of an algebra containing it."""
    dim = x.shape[0]
    y = matrix.Matrix(field, x)
    power = 1
    while power < dim:
        y = y ** field.order
        power *= field.order
    assert y @ y == y
    return y.entries


def _in_span(field, flat_basis: np.ndarray, vector: np.ndarray) -> bool:
    if len(flat_basis) == 0:
        return not np.any(vector)
    return matrix.rank_of(field, np.vstack([flat_basis, vector[None, :]])) == len(flat_basis)


def _fitting_split(field, e: matrix.Matrix, f: poly.Poly, multiplicity: int) -> tuple:
    power = matrix.poly_at(e, f) ** multiplicity
    kernel = matrix.row_space_array(field, matrix.nullspace_array(field, power.entries))
    image = matrix.row_space_array(field, power.entries)
    return kernel, image


def _split(
    m: modules.ModuleRep, rng: np.random.Generator, trials: int
) -> typing.Optional[typing.Tuple[np.ndarray, np.ndarray]]:
    """Bases of a decomposition m = U + W, or None when m is certified
    indecomposable."""
    field = m.field
    n = m.dim
    if n <= 1:
        return None
    basis = spin.commutant_arrays(field, [a.entries for a in m.action], n)
    if len(basis) == 1:
        return None

    degrees = []
    samples = []

    def attempt() -> typing.Optional[tuple]:
        e = matrix.Matrix(field, _combination(field, basis, field.random_elements(rng, len(basis))))
        factors = poly.factor_poly(matrix.minpoly(e), rng)
        if len(factors) > 1:
            f, multiplicity = factors[0]
            logger.debug("Fitting split of dimension %d along %s", n, f)
            return _fitting_split(field, e, f, multiplicity)
        degrees.append(factors[0][0].degree)
        samples.append(e.entries)
        return None

    for _ in range(min(_EARLY_TRIALS, trials)):
        parts = attempt()
        if parts is not None:
            return parts
        if degrees[-1] == len(basis):
            return None

    radical = algebra_radical(field, basis, n, rng)
    top = len(basis) - len(radical)
    logger.debug("End of dimension %d has radical of dimension %d", len(basis), len(radical))
    if top == 1 or top in degrees:
        return None
    for _ in range(max(0, trials - _EARLY_TRIALS)):
        parts = attempt()
        if parts is not None:
            return parts
        if degrees[-1] == top:
            return None

    flat_radical = radical.reshape(len(radical), n * n)
    identity = np.eye(n, dtype=np.int64)
    for x in list(basis) + samples:
        square = field.matmul(x, x)
        if not _in_span(field, flat_radical, field.sub(square, x).reshape(-1)):
            continue
        if _in_span(field, flat_radical, x.reshape(-1)):
            continue
        if _in_span(field, flat_radical, field.sub(identity, x).reshape(-1)):
            continue
        y = lift_idempotent(field, x)
        logger.debug("lifted an idempotent modulo the radical")
        return (
            matrix.row_space_array(field, y),
            matrix.row_space_array(field, field.sub(identity, y)),
        )

    msg = "Could neither split nor certify a module of dimension {} in {} trials.".format(
        n, trials
    )
    raise errors.CertificationFailed(msg)


def indecomposable_parts(
    m: modules.ModuleRep,
    seed=globals.DEFAULT_SEED,
    fitting_trials: int = globals.FITTING_TRIALS,
) -> typing.List[np.ndarray]:
    """RREF bases (in the coordinates of m) of indecomposable summands whose
    direct sum is m, in the order found."""
    rng = field_module.make_rng(seed)
    field = m.field
    result = []
    stack = [np.eye(m.dim, dtype=np.int64)]
    while stack:
        rows = stack.pop()
        part = modules.submodule(m, rows)
        split = _split(part, rng, fitting_trials)
        if split is None:
            result.append(rows)
            continue
        for piece in reversed(split):
            stack.append(matrix.row_space_array(field, field.matmul(piece, rows)))
    return result


def decompose(
    m: modules.ModuleRep,
    seed=globals.DEFAULT_SEED,
    fitting_trials: int = globals.FITTING_TRIALS,
    iso_trials: int = globals.ISO_TRIALS,
    pgroup: bool = False,
) -> Decomposition:
    """Complete decomposition; the summand list holds pairwise non-isomorphic
    classes with multiplicities, sorted by (dim, Fingerprint).

    pgroup: the acting group is a p-group (faster radicals and socles).
    """
    if m.dim == 0:
        return Decomposition([], [])
    rng = field_module.make_rng(seed)
    parts = []
    for rows in indecomposable_parts(m, rng, fitting_trials):
        module = modules.submodule(m, rows)
        parts.append((module, rows, series.fingerprint(module, pgroup, rng)))
    parts.sort(key=lambda item: (item[0].dim, item[2]))

    summands = []
    events = []
    for module, rows, fingerprint in parts:
        for summand in summands:
            if summand.fingerprint != fingerprint:
                continue
            try:
                found = isotest.iso_test(
                    summand.module,
                    module,
                    iso_trials,
                    rng,
                    pgroup,
                    (summand.fingerprint, fingerprint),
                )
            except errors.IsoUnknown as error:
                events.append(str(error))
                continue
            if found is not None:
                summand.bases.append(rows)
                break
        else:
            summands.append(Summand(module, [rows], fingerprint))
    decomposition = Decomposition(summands, events)
    logger.debug("decomposed dimension %d as %s", m.dim, decomposition)
    return decomposition
