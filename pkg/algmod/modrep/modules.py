"""kG-modules as one matrix per group generator, and the functors on them.

The action is on row vectors: v . g = v @ action[g]. Tensor bases are ordered
lexicographically by (i_m, i_n), symmetric powers by non-decreasing index
tuples and exterior squares by pairs i < j.
"""

import functools
import itertools
import logging
import typing

import numpy as np

from algmod.exactla import matrix
from algmod.exactla import subspace
from algmod.globals import errors
from algmod.modrep import groups

logger = logging.getLogger(__name__)


class ModuleRep(object):
    def __init__(
        self,
        group: groups.GroupSpec,
        action: typing.Sequence[matrix.Matrix],
        check: bool = True,
        field=None,
        dim: int = 0,
    ) -> None:
        """A module for ``group`` with one square matrix per generator.

        check: verify shapes, fields and invertibility. Constructions whose
            matrices are invertible by design switch it off.
        field, dim: required only for groups without generators.
        """
        action = tuple(action)
        if len(action) != group.ngens:
            msg = "Got {} matrices for {} generators.".format(len(action), group.ngens)
            raise errors.GroupMismatch(msg)
        if not action and field is None:
            raise errors.GroupMismatch("Modules of trivial groups need a field.")
        field = action[0].field if action else field
        dim = action[0].rows if action else dim
        if check:
            for m in action:
                if m.field != field:
                    raise errors.FieldMismatch("Action matrices over different fields.")
                if not m.is_square() or m.rows != dim:
                    msg = "Action matrices have to be {0}x{0} and not {1}x{2}.".format(
                        dim, m.rows, m.cols
                    )
                    raise errors.SizeMismatch(msg)
                if m.rank() != dim:
                    raise errors.NotSquare("Action matrices have to be invertible.")
        self.__group = group
        self.__action = action
        self.__field = field
        self.__dim = dim
        self.__inverses = {}

    @property
    def group(self) -> groups.GroupSpec:
        return self.__group

    @property
    def action(self) -> tuple:
        return self.__action

    @property
    def field(self):
        return self.__field

    @property
    def dim(self) -> int:
        return self.__dim

    def __repr__(self) -> str:
        return "ModuleRep(dim={}, {}, gens={})".format(
            self.__dim, self.__field, self.__group.ngens
        )

    def __eq__(self, other: object) -> bool:
        """Entrywise equality (the same matrices), not isomorphism."""
        if not isinstance(other, ModuleRep):
            return NotImplemented
        return (
            self.__field == other.field
            and self.__group == other.group
            and self.__action == other.action
        )

    def __hash__(self) -> int:
        return hash((self.__field, self.__action))

    def inverse(self, g: int) -> matrix.Matrix:
        if g not in self.__inverses:
            self.__inverses[g] = self.__action[g].inverse()
        return self.__inverses[g]

    def evaluate(self, word: groups.Word) -> matrix.Matrix:
        word = groups.validate_word(word, self.__group.ngens)
        result = matrix.Matrix.identity(self.__field, self.__dim)
        for g, e in word:
            result = result @ (self.__action[g] if e == 1 else self.inverse(g))
        return result

    def element_matrices(self, enumeration: groups.Enumeration) -> typing.List[matrix.Matrix]:
        """Matrices of all enumerated elements, in enumeration order."""
        if enumeration.group != self.__group:
            raise errors.GroupMismatch("Enumeration belongs to another group.")
        mats = [matrix.Matrix.identity(self.__field, self.__dim)]
        for i in range(1, enumeration.size):
            parent = enumeration.parent[i]
            mats.append(mats[parent] @ self.__action[enumeration.generator[i]])
        return mats

    def stacked(self) -> np.ndarray:
        """(ngens, dim, dim) array of the action."""
        if not self.__action:
            return np.zeros((0, self.__dim, self.__dim), dtype=np.int64)
        return np.stack([m.entries for m in self.__action])


def _check_compatible(m: ModuleRep, n: ModuleRep) -> None:
    if m.group != n.group:
        msg = "Modules for different groups: {} and {}.".format(m.group, n.group)
        raise errors.GroupMismatch(msg)
    if m.field != n.field:
        msg = "Modules over different fields: {} and {}.".format(m.field, n.field)
        raise errors.FieldMismatch(msg)


# -------------------------------------------------------------------- functors


def trivial(group: groups.GroupSpec, field, dim: int = 1) -> ModuleRep:
    eye = matrix.Matrix.identity(field, dim)
    return ModuleRep(group, [eye] * group.ngens, check=False, field=field, dim=dim)


def tensor(m: ModuleRep, n: ModuleRep) -> ModuleRep:
    _check_compatible(m, n)
    action = [matrix.kron(a, b) for a, b in zip(m.action, n.action)]
    return ModuleRep(m.group, action, check=False, field=m.field)


def tensor_power(m: ModuleRep, i: int) -> ModuleRep:
    assert i >= 1
    return functools.reduce(tensor, [m] * i)


def dual(m: ModuleRep) -> ModuleRep:
    action = [m.inverse(g).T for g in range(m.group.ngens)]
    return ModuleRep(m.group, action, check=False, field=m.field)


def direct_sum(m: ModuleRep, n: ModuleRep) -> ModuleRep:
    _check_compatible(m, n)
    action = [matrix.block_diagonal([a, b]) for a, b in zip(m.action, n.action)]
    return ModuleRep(m.group, action, check=False, field=m.field)


def direct_sum_all(modules: typing.Sequence[ModuleRep]) -> ModuleRep:
    return functools.reduce(direct_sum, modules)


def restrict(m: ModuleRep, h: groups.SubgroupSpec) -> ModuleRep:
    """Module for the subgroup generated by the words of h."""
    words = [groups.validate_word(word, m.group.ngens) for word in h.words]
    action = [m.evaluate(word) for word in words]
    return ModuleRep(h.group(m.group), action, check=False, field=m.field)


def frobenius_twist(m: ModuleRep) -> ModuleRep:
    action = [a.frobenius() for a in m.action]
    return ModuleRep(m.group, action, check=False, field=m.field)


@functools.lru_cache(maxsize=64)
def _monomials(n: int, i: int) -> tuple:
    return tuple(itertools.combinations_with_replacement(range(n), i))


@functools.lru_cache(maxsize=64)
def _multiplication(n: int, i: int) -> np.ndarray:
    """0/1 matrix of (degree i-1 monomial) x (variable) -> degree i monomial."""
    lower = _monomials(n, i - 1)
    upper = {mono: c for c, mono in enumerate(_monomials(n, i))}
    mu = np.zeros((len(lower) * n, len(upper)), dtype=np.int64)
    for r, mono in enumerate(lower):
        for l in range(n):
            mu[r * n + l, upper[tuple(sorted(mono + (l,)))]] = 1
    return mu


def _sym_matrix(a: matrix.Matrix, i: int) -> matrix.Matrix:
    field = a.field
    n = a.rows
    current = a.entries
    for j in range(2, i + 1):
        monomials = _monomials(n, j)
        lower = {mono: c for c, mono in enumerate(_monomials(n, j - 1))}
        heads = np.array([lower[mono[:-1]] for mono in monomials], dtype=np.int64)
        tails = np.array([mono[-1] for mono in monomials], dtype=np.int64)
        # row of x_m' * x_a is (row of x_m') times (row of x_a) as polynomials
        products = field.mul(
            current[heads][:, :, None], a.entries[tails][:, None, :]
        ).reshape(len(monomials), -1)
        current = field.matmul(products, _multiplication(n, j))
    return matrix.Matrix(field, current)


def sym_power(m: ModuleRep, i: int) -> ModuleRep:
    """S^i(m) on the monomial basis (non-decreasing index tuples)."""
    if i < 1:
        raise errors.ExponentTooLarge("Symmetric powers start at 1.")
    if i >= m.field.p:
        msg = "Symmetric power {} needs characteristic > {}, not {}.".format(
            i, i, m.field.p
        )
        raise errors.ExponentTooLarge(msg)
    action = [_sym_matrix(a, i) for a in m.action]
    return ModuleRep(m.group, action, check=False, field=m.field)


def _wedge_matrix(a: matrix.Matrix) -> matrix.Matrix:
    field = a.field
    pairs = np.array(list(itertools.combinations(range(a.rows), 2)), dtype=np.int64)
    rows_i, rows_j = a.entries[pairs[:, 0]], a.entries[pairs[:, 1]]
    # 2x2 minors of the row pairs
    first = field.mul(rows_i[:, pairs[:, 0]], rows_j[:, pairs[:, 1]])
    second = field.mul(rows_i[:, pairs[:, 1]], rows_j[:, pairs[:, 0]])
    return matrix.Matrix(field, field.sub(first, second))


def ext_square(m: ModuleRep) -> ModuleRep:
    """Lambda^2(m) on e_i ^ e_j, i < j; in characteristic 2 this is the
    quotient of m (x) m by the span of all v (x) v."""
    if m.dim < 2:
        raise errors.SizeMismatch("Exterior squares need dimension at least 2.")
    action = [_wedge_matrix(a) for a in m.action]
    return ModuleRep(m.group, action, check=False, field=m.field)


def perm_module(g: groups.GroupSpec, field) -> ModuleRep:
    """Permutation module: e_i . g = e_{g(i)}."""
    if not g.is_permutation_group:
        raise errors.NoRealization("Permutation modules need a permutation realization.")
    degree = g.degree
    action = []
    for perm in g.realization:
        entries = np.zeros((degree, degree), dtype=np.int64)
        entries[np.arange(degree), np.array(perm, dtype=np.int64)] = 1
        action.append(matrix.Matrix(field, entries))
    return ModuleRep(g, action, check=False, field=field)


def pair_module(g: groups.GroupSpec, field) -> ModuleRep:
    """Permutation module of the action on unordered pairs of points."""
    if not g.is_permutation_group:
        raise errors.NoRealization("Pair actions need a permutation realization.")
    _, images = groups.pair_action(g.realization)
    degree = len(images[0])
    action = []
    for perm in images:
        entries = np.zeros((degree, degree), dtype=np.int64)
        entries[np.arange(degree), np.array(perm, dtype=np.int64)] = 1
        action.append(matrix.Matrix(field, entries))
    return ModuleRep(g, action, check=False, field=field)


def check_words(m: ModuleRep, relations: typing.Iterable[groups.Word]) -> bool:
    """True when every relation word acts as the identity on m."""
    eye = matrix.Matrix.identity(m.field, m.dim)
    for word in relations:
        if m.evaluate(word) != eye:
            logger.debug("relation %s fails", groups.format_word(word))
            return False
    return True


# ------------------------------------------------------- invariant subspaces


def _echelon(m: ModuleRep, basis) -> tuple:
    entries = basis.entries if isinstance(basis, matrix.Matrix) else basis
    entries = np.asarray(entries, dtype=np.int64).reshape(-1, m.dim)
    reduced, pivots = matrix.rref_array(m.field, entries)
    return reduced[: len(pivots)], list(pivots)


def submodule(m: ModuleRep, basis, check: bool = False) -> ModuleRep:
    """Action on the invariant subspace spanned by the rows of basis,
    written in its RREF basis."""
    rows, pivots = _echelon(m, basis)
    field = m.field
    action = []
    for a in m.action:
        image = field.matmul(rows, a.entries)
        coordinates = image[:, pivots]
        if check and not np.array_equal(field.matmul(coordinates, rows), image):
            raise errors.SizeMismatch("Subspace is not invariant.")
        action.append(matrix.Matrix(field, coordinates.reshape(len(pivots), len(pivots))))
    return ModuleRep(m.group, action, check=False, field=field, dim=len(pivots))


def quotient(m: ModuleRep, basis) -> ModuleRep:
    """Action on m / span(basis); the quotient basis is the images of the unit
    vectors on the non-pivot columns of the RREF basis."""
    rows, pivots = _echelon(m, basis)
    field = m.field
    free = subspace.complement_columns(pivots, m.dim)
    action = []
    for a in m.action:
        images = a.entries[free]
        if pivots:
            images = field.sub(images, field.matmul(images[:, pivots], rows))
        action.append(matrix.Matrix(field, images[:, free].reshape(len(free), len(free))))
    return ModuleRep(m.group, action, check=False, field=field, dim=len(free))


def subquotient(m: ModuleRep, upper, lower) -> ModuleRep:
    """upper / lower for invariant subspaces lower <= upper."""
    upper_rows, upper_pivots = _echelon(m, upper)
    lower_rows, _ = _echelon(m, lower)
    inner = submodule(m, upper_rows)
    # coordinates of lower in the RREF basis of upper
    return quotient(inner, lower_rows[:, upper_pivots])


def quotient_map(dim: int, field, basis: np.ndarray) -> np.ndarray:
    """Matrix of the projection v -> v + span(basis) in the quotient basis."""
    reduced, pivots = matrix.rref_array(field, np.asarray(basis).reshape(-1, dim))
    rows = reduced[: len(pivots)]
    free = subspace.complement_columns(pivots, dim)
    eye = np.eye(dim, dtype=np.int64)
    if pivots:
        eye = field.sub(eye, field.matmul(eye[:, pivots], rows))
    return eye[:, free]


def perm_heart(g: groups.GroupSpec, field) -> ModuleRep:
    """Sum-zero vectors modulo the all-ones vector of the permutation module
    (only the sum-zero submodule when p does not divide the degree)."""
    m = perm_module(g, field)
    degree = m.dim
    sum_zero = np.zeros((degree - 1, degree), dtype=np.int64)
    sum_zero[:, 0] = field.neg(np.ones(degree - 1, dtype=np.int64))
    sum_zero[np.arange(degree - 1), np.arange(1, degree)] = 1
    if degree % field.p:
        return submodule(m, sum_zero)
    ones = np.ones((1, degree), dtype=np.int64)
    return subquotient(m, sum_zero, ones)
