"""Spinning: submodules generated by vectors, and homomorphism spaces.

Hom(M, N) is found by the standard basis method. M is spun from unit vectors;
the images of the seeds are the unknowns, the image of every other spun
vector follows from the tree, and every closing relation of the spinning
(a product b_t * g that is already in the span) cuts the unknowns down by one
nullspace computation.
"""

import logging
import typing

import numpy as np

from algmod.exactla import matrix
from algmod.exactla import subspace
from algmod.globals import errors
from algmod.globals import globals

logger = logging.getLogger(__name__)


def spin(field, vectors: np.ndarray, mats: typing.Sequence[np.ndarray]) -> np.ndarray:
    """RREF basis of the smallest subspace containing the vectors and
    invariant under right multiplication by every matrix."""
    vectors = np.asarray(vectors, dtype=np.int64)
    ncols = vectors.shape[-1]
    echelon = subspace.Echelon(field, ncols)
    queue = [v for v in vectors.reshape(-1, ncols) if echelon.insert(v) is None]
    while queue and not echelon.is_full():
        block = np.array(queue)
        queue = []
        for a in mats:
            for w in field.matmul(block, a):
                if echelon.insert(w) is None:
                    queue.append(w)
                    if echelon.is_full():
                        break
    return echelon.basis()


def _hom_arrays(
    field,
    m_mats: typing.Sequence[np.ndarray],
    n_mats: typing.Sequence[np.ndarray],
    dim_m: int,
    dim_n: int,
) -> np.ndarray:
    """Hom basis as an (h, dim_m, dim_n) array, canonical (flattened RREF)."""
    if dim_m == 0 or dim_n == 0:
        return np.zeros((0, dim_m, dim_n), dtype=np.int64)

    echelon = subspace.Echelon(field, dim_m, track=True)
    # candidates[j]: position in ``basis`` of the j-th inserted vector, or -1
    candidates = []
    basis = []
    # images[z, t] = image of basis[t] under the z-th candidate homomorphism
    images = np.zeros((0, 0, dim_n), dtype=np.int64)
    identity_n = np.eye(dim_n, dtype=np.int64)

    def accept(vector: np.ndarray, image: np.ndarray) -> None:
        nonlocal images
        candidates.append(len(basis))
        basis.append(vector)
        images = np.concatenate([images, image[:, None, :]], axis=1)

    def restrict_to(relation: np.ndarray, image: np.ndarray) -> None:
        nonlocal images
        # image + sum_u c_u images[:, u] == 0 has to hold
        residual = image.copy()
        for j, c in enumerate(relation[:-1].tolist()):
            if c:
                t = candidates[j]
                residual = field.add(residual, field.mul(images[:, t, :], c))
        if not np.any(residual):
            return
        kernel = matrix.nullspace_array(field, residual)
        r, t, _ = images.shape
        images = field.matmul(kernel, images.reshape(r, t * dim_n)).reshape(
            kernel.shape[0], t, dim_n
        )

    pointer = 0
    for i in range(dim_m):
        if echelon.is_full():
            break
        unit = np.zeros(dim_m, dtype=np.int64)
        unit[i] = 1
        relation = echelon.insert(unit)
        if relation is not None:
            candidates.append(-1)
            continue
        # fresh unknowns: the image of the seed is free
        r, t, _ = images.shape
        grown = np.zeros((r + dim_n, t, dim_n), dtype=np.int64)
        grown[:r] = images
        images = grown
        seed_image = np.zeros((r + dim_n, dim_n), dtype=np.int64)
        seed_image[r:] = identity_n
        accept(unit, seed_image)
        while pointer < len(basis):
            for a, b in zip(m_mats, n_mats):
                vector = field.matmul(basis[pointer][None, :], a)[0]
                image = field.matmul(images[:, pointer, :], b)
                relation = echelon.insert(vector)
                if relation is None:
                    accept(vector, image)
                else:
                    restrict_to(relation, image)
                    candidates.append(-1)
            pointer += 1

    spun = np.array(basis, dtype=np.int64)
    inverse = matrix.rref(matrix.Matrix(field, spun)).transform.entries
    homs = np.stack([field.matmul(inverse, z) for z in images]) if len(images) else images
    flat = matrix.row_space_array(field, homs.reshape(len(homs), dim_m * dim_n))
    logger.debug("hom space %dx%d: dimension %d", dim_m, dim_n, len(flat))
    return flat.reshape(len(flat), dim_m, dim_n)


def hom_space(m, n) -> typing.List[matrix.Matrix]:
    """Basis of Hom_kG(m, n): matrices phi with rho_m(g) phi = phi rho_n(g)."""
    if m.group.ngens != n.group.ngens:
        raise errors.GroupMismatch("Hom spaces need modules for the same group.")
    if m.field != n.field:
        raise errors.FieldMismatch("Hom spaces need modules over the same field.")
    arrays = _hom_arrays(
        m.field,
        [a.entries for a in m.action],
        [a.entries for a in n.action],
        m.dim,
        n.dim,
    )
    return [matrix.Matrix(m.field, h) for h in arrays]


def _sylvester_arrays(field, mats: typing.Sequence[np.ndarray], n: int) -> np.ndarray:
    eye = np.eye(n, dtype=np.int64)
    blocks = []
    for a in mats:
        left = field.mul(a.T[:, None, :, None], eye[None, :, None, :]).reshape(n * n, n * n)
        right = field.mul(eye[:, None, :, None], a[None, :, None, :]).reshape(n * n, n * n)
        blocks.append(field.sub(left, right))
    if not blocks:
        return np.eye(n * n, dtype=np.int64)
    solutions = matrix.nullspace_array(field, np.hstack(blocks))
    return matrix.row_space_array(field, solutions)


def commutant_arrays(
    field, mats: typing.Sequence[np.ndarray], n: int
) -> np.ndarray:
    if n * n <= globals.SYLVESTER_UNKNOWNS:
        flat = _sylvester_arrays(field, mats, n)
        return flat.reshape(len(flat), n, n)
    return _hom_arrays(field, mats, mats, n, n)


def commutant(ms: typing.Sequence[matrix.Matrix]) -> typing.List[matrix.Matrix]:
    """Basis of all X with X a = a X for every a in ms, in canonical echelon form.

    Small sizes solve the stacked Sylvester system in one nullspace call,
    larger ones spin; both return the same basis.
    """
    if not ms:
        raise errors.SizeMismatch("The commutant needs at least one matrix.")
    field = ms[0].field
    n = ms[0].rows
    for a in ms:
        if a.field != field:
            raise errors.FieldMismatch("Commutant of matrices over different fields.")
        if a.shape != (n, n):
            msg = "Commutant needs {0}x{0} matrices, not {1}x{2}.".format(
                n, a.rows, a.cols
            )
            raise errors.SizeMismatch(msg)
    arrays = commutant_arrays(field, [a.entries for a in ms], n)
    return [matrix.Matrix(field, x) for x in arrays]
