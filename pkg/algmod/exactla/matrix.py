"""Dense matrices over GF(p^k).

Matrices are immutable; the entry array is read-only. Row vectors are the
convention everywhere: a matrix acts on the right of a vector, v -> v * m.
Over GF(2) row reduction packs rows into 64 bit words; the packing never
leaves this module.
"""

import logging
import typing

import numpy as np

from algmod.exactla import poly as poly_module
from algmod.exactla import subspace
from algmod.globals import errors

logger = logging.getLogger(__name__)


class Matrix(object):
    def __init__(self, field, entries) -> None:
        array = np.array(entries, dtype=np.int64)
        if array.ndim == 1 and array.size == 0:
            array = array.reshape(0, 0)
        if array.ndim != 2:
            msg = "Matrix entries have to be 2-dimensional, not {}.".format(
                array.ndim
            )
            raise errors.SizeMismatch(msg)
        if array.size and (array.min() < 0 or array.max() >= field.order):
            msg = "Matrix entries have to be elements of {}.".format(field)
            raise errors.FieldMismatch(msg)
        array.flags.writeable = False
        self.__field = field
        self.__entries = array

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zero(cls, field, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def scalar(cls, field, n: int, c: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64) * c)

    # -------------------------------------------------------------- properties

    @property
    def field(self):
        return self.__field

    @property
    def entries(self) -> np.ndarray:
        return self.__entries

    @property
    def rows(self) -> int:
        return self.__entries.shape[0]

    @property
    def cols(self) -> int:
        return self.__entries.shape[1]

    @property
    def shape(self) -> tuple:
        return self.__entries.shape

    @property
    def T(self) -> "Matrix":
        return Matrix(self.__field, self.__entries.T)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not np.any(self.__entries)

    def tolist(self) -> list:
        return self.__entries.tolist()

    def __repr__(self) -> str:
        return "Matrix({}, {}x{})".format(self.__field, self.rows, self.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.__field == other.field
            and self.shape == other.shape
            and np.array_equal(self.__entries, other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.__field, self.shape, self.__entries.tobytes()))

    # -------------------------------------------------------------- arithmetic

    def __check(self, other: "Matrix") -> None:
        if self.__field != other.field:
            msg = "Matrices over {} and {} can't be combined.".format(
                self.__field, other.field
            )
            raise errors.FieldMismatch(msg)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self.__check(other)
        if self.cols != other.rows:
            msg = "Can't multiply {}x{} by {}x{}.".format(
                self.rows, self.cols, other.rows, other.cols
            )
            raise errors.SizeMismatch(msg)
        return Matrix(
            self.__field, self.__field.matmul(self.__entries, other.entries)
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        self.__check(other)
        if self.shape != other.shape:
            raise errors.SizeMismatch("Can't add matrices of different shapes.")
        return Matrix(self.__field, self.__field.add(self.__entries, other.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self.__check(other)
        if self.shape != other.shape:
            raise errors.SizeMismatch("Can't subtract matrices of different shapes.")
        return Matrix(self.__field, self.__field.sub(self.__entries, other.entries))

    def __neg__(self) -> "Matrix":
        return Matrix(self.__field, self.__field.neg(self.__entries))

    def scale(self, c: int) -> "Matrix":
        return Matrix(self.__field, self.__field.mul(self.__entries, c))

    def __pow__(self, e: int) -> "Matrix":
        if not self.is_square():
            raise errors.NotSquare("Only square matrices have powers.")
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.__field, self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def frobenius(self) -> "Matrix":
        return Matrix(self.__field, self.__field.frobenius(self.__entries))

    def rank(self) -> int:
        return rref(self).rank

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise errors.NotSquare("Only square matrices can be inverted.")
        reduction = rref(self)
        if reduction.rank != self.rows:
            raise ZeroDivisionError("Matrix is singular.")
        return reduction.transform


class RowReduction(object):
    """Result of rref: iterates as (reduced, rank, transform)."""

    def __init__(
        self, reduced: Matrix, rank: int, transform: Matrix, pivots: tuple
    ) -> None:
        self.reduced = reduced
        self.rank = rank
        self.transform = transform
        self.pivots = pivots

    def __iter__(self):
        return iter((self.reduced, self.rank, self.transform))


# ------------------------------------------------------------ row reduction


def _rref_gf2(array: np.ndarray, limit: int) -> tuple:
    rows, cols = array.shape
    words = max(1, (cols + 63) // 64)
    padded = np.zeros((rows, words * 64), dtype=np.uint8)
    padded[:, :cols] = array
    packed = np.packbits(padded, axis=1, bitorder="little").view("<u8").copy()
    pivots = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        word, bit = divmod(c, 64)
        mask = np.uint64(1) << np.uint64(bit)
        hits = np.flatnonzero(packed[r:, word] & mask)
        if hits.size == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            packed[[r, i]] = packed[[i, r]]
        others = (packed[:, word] & mask) != 0
        others[r] = False
        packed[others] ^= packed[r]
        pivots.append(c)
        r += 1
    unpacked = np.unpackbits(packed.view(np.uint8), axis=1, bitorder="little")
    return unpacked[:, :cols].astype(np.int64), pivots


def _rref_generic(field, array: np.ndarray, limit: int) -> tuple:
    a = array.copy()
    rows = a.shape[0]
    pivots = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        hits = np.flatnonzero(a[r:, c])
        if hits.size == 0:
            continue
        i = r + int(hits[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r, c:] = field.mul(a[r, c:], field.sinv(lead))
        factors = a[:, c].copy()
        factors[r] = 0
        touched = np.flatnonzero(factors)
        if touched.size:
            a[touched, c:] = field.sub(
                a[touched, c:], field.mul(factors[touched, None], a[r, c:][None, :])
            )
        pivots.append(c)
        r += 1
    return a, pivots


def rref_array(field, array: np.ndarray, limit: int = None) -> tuple:
    """Reduced echelon form of an element array, pivots searched in the
    first ``limit`` columns (all by default). Returns (array, pivots)."""
    array = np.asarray(array, dtype=np.int64)
    if limit is None:
        limit = array.shape[1]
    if array.size == 0:
        return array.copy(), []
    if field.order == 2:
        return _rref_gf2(array, limit)
    return _rref_generic(field, array, limit)


def rref(m: Matrix) -> RowReduction:
    """Row reduced echelon form with the transform: transform @ m == reduced.

    Pivots are chosen left to right, pivot rows are the first rows (in index
    order) with a non-zero entry in the pivot column.
    """
    field = m.field
    augmented = np.hstack([m.entries, np.eye(m.rows, dtype=np.int64)])
    reduced, pivots = rref_array(field, augmented, m.cols)
    return RowReduction(
        Matrix(field, reduced[:, : m.cols]),
        len(pivots),
        Matrix(field, reduced[:, m.cols :]),
        tuple(pivots),
    )


def rank_of(field, array: np.ndarray) -> int:
    return len(rref_array(field, array)[1])


def row_space_array(field, array: np.ndarray) -> np.ndarray:
    """Canonical basis (non-zero RREF rows) of the row space."""
    reduced, pivots = rref_array(field, array)
    return reduced[: len(pivots)]


def row_space(m: Matrix) -> Matrix:
    return Matrix(m.field, row_space_array(m.field, m.entries).reshape(-1, m.cols))


def nullspace_array(field, array: np.ndarray) -> np.ndarray:
    """Basis of {v : v . array = 0}, one row per non-pivot column of the
    reduced transpose (the canonical echelon-complement basis)."""
    array = np.asarray(array, dtype=np.int64)
    rows = array.shape[0]
    if array.shape[1] == 0:
        return np.eye(rows, dtype=np.int64)
    reduced, pivots = rref_array(field, array.T)
    free = subspace.complement_columns(pivots, rows)
    basis = np.zeros((len(free), rows), dtype=np.int64)
    for index, column in enumerate(free):
        basis[index, column] = 1
        for r, pivot in enumerate(pivots):
            basis[index, pivot] = field.sneg(int(reduced[r, column]))
    return basis


def nullspace(m: Matrix) -> Matrix:
    return Matrix(m.field, nullspace_array(m.field, m.entries).reshape(-1, m.rows))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row (i_a, i_b) is row i_a * rows(b) + i_b."""
    if a.field != b.field:
        msg = "Can't take the Kronecker product of matrices over {} and {}.".format(
            a.field, b.field
        )
        raise errors.FieldMismatch(msg)
    product = a.field.mul(
        a.entries[:, None, :, None], b.entries[None, :, None, :]
    ).reshape(a.rows * b.rows, a.cols * b.cols)
    return Matrix(a.field, product)


def block_diagonal(blocks: typing.Sequence[Matrix]) -> Matrix:
    field = blocks[0].field
    rows = sum(block.rows for block in blocks)
    cols = sum(block.cols for block in blocks)
    result = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for block in blocks:
        result[r : r + block.rows, c : c + block.cols] = block.entries
        r += block.rows
        c += block.cols
    return Matrix(field, result)


def vstack(blocks: typing.Sequence[Matrix]) -> Matrix:
    return Matrix(blocks[0].field, np.vstack([block.entries for block in blocks]))


def solve(a: Matrix, b: Matrix) -> typing.Optional[Matrix]:
    """Some x with x @ a == b, or None if the rows of b leave the row space."""
    field = a.field
    reduction = rref(a)
    pivots = reduction.pivots
    reduced = reduction.reduced.entries[: reduction.rank]
    coefficients = b.entries[:, list(pivots)] if pivots else b.entries[:, :0]
    if not np.array_equal(field.matmul(coefficients, reduced), b.entries):
        return None
    # reduced = transform[:rank] @ a
    transform = reduction.transform.entries[: reduction.rank]
    return Matrix(field, field.matmul(coefficients, transform))


# ---------------------------------------------------------------- polynomials


def poly_at(m: Matrix, f: poly_module.Poly) -> Matrix:
    """f(m) by Horner's rule."""
    if not m.is_square():
        raise errors.NotSquare("Polynomials can only be evaluated at square matrices.")
    field = m.field
    n = m.rows
    result = np.zeros((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for c in reversed(f.coeffs):
        result = field.matmul(result, m.entries)
        if c:
            result = field.add(result, eye * c)
    return Matrix(field, result)


def _lcm(f: poly_module.Poly, g: poly_module.Poly) -> poly_module.Poly:
    return ((f * g) // poly_module.gcd(f, g)).monic()


def minpoly(m: Matrix) -> poly_module.Poly:
    """Minimal polynomial by Krylov spinning of unit vectors e_0, e_1, ...

    Unit vectors inside the sum of the cyclic subspaces found so far are
    skipped; the result is the lcm of the local minimal polynomials.
    """
    if not m.is_square():
        raise errors.NotSquare("Only square matrices have a minimal polynomial.")
    field = m.field
    n = m.rows
    result = poly_module.Poly.constant(field, 1)
    spanned = subspace.Echelon(field, n)
    for i in range(n):
        if spanned.is_full():
            break
        vector = np.zeros(n, dtype=np.int64)
        vector[i] = 1
        if spanned.contains(vector):
            continue
        krylov = subspace.Echelon(field, n, track=True)
        while True:
            relation = krylov.insert(vector)
            if relation is not None:
                break
            spanned.insert(vector)
            vector = field.matmul(vector[None, :], m.entries)[0]
        result = _lcm(result, poly_module.Poly(field, relation.tolist()))
    return result
