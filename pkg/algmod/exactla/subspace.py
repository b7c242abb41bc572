"""Incrementally grown subspaces of row vectors.

An Echelon keeps its basis fully reduced (every pivot column holds a single
one), so reducing a vector against it is one product: subtract the vector's
pivot entries times the basis.
"""

import typing

import numpy as np


class Echelon(object):
    def __init__(self, field, ncols: int, track: bool = False) -> None:
        """Empty subspace of field ** ncols.

        track: record for every basis row its coefficients with respect to the
            inserted vectors, so that insert can report linear dependencies.
        """
        self.__field = field
        self.__ncols = ncols
        self.__basis = np.zeros((0, ncols), dtype=np.int64)
        self.__pivots = []
        self.__track = track
        self.__inserted = 0
        self.__combinations = np.zeros((0, 0), dtype=np.int64)

    @property
    def rank(self) -> int:
        return len(self.__pivots)

    @property
    def ncols(self) -> int:
        return self.__ncols

    @property
    def pivots(self) -> tuple:
        return tuple(sorted(self.__pivots))

    def is_full(self) -> bool:
        return self.rank == self.__ncols

    def basis(self) -> np.ndarray:
        """The reduced basis, rows sorted by pivot column (canonical RREF)."""
        order = np.argsort(self.__pivots, kind="stable")
        return self.__basis[order].copy()

    def __coefficients(self, vector: np.ndarray) -> np.ndarray:
        return vector[self.__pivots] if self.__pivots else vector[:0]

    def reduce(self, vector: np.ndarray) -> np.ndarray:
        vector = np.asarray(vector, dtype=np.int64)
        if not self.__pivots:
            return vector.copy()
        coefficients = self.__coefficients(vector)
        return self.__field.sub(
            vector, self.__field.matmul(coefficients[None, :], self.__basis)[0]
        )

    def contains(self, vector: np.ndarray) -> bool:
        return not np.any(self.reduce(vector))

    def coordinates(self, vector: np.ndarray) -> np.ndarray:
        """Coefficients of a member vector w.r.t. basis() (pivot order)."""
        order = np.argsort(self.__pivots, kind="stable")
        pivots = np.array(self.__pivots, dtype=np.int64)[order]
        return np.asarray(vector, dtype=np.int64)[pivots]

    def insert(self, vector: np.ndarray) -> typing.Optional[np.ndarray]:
        """Add vector; return None when it extends the space.

        Otherwise (vector already in the span) the space is unchanged and the
        result is a relation: with track=True the coefficients c_0 .. c_t over
        all inserted vectors w_0 .. w_t (c_t = 1) such that sum c_j w_j = 0,
        without tracking an empty array.
        """
        field = self.__field
        vector = np.asarray(vector, dtype=np.int64)
        coefficients = self.__coefficients(vector)
        residual = self.reduce(vector)
        index = self.__inserted
        self.__inserted += 1

        if self.__track:
            # residual = w_t - coefficients . combinations . W
            combination = np.zeros(self.__inserted, dtype=np.int64)
            combination[index] = 1
            if self.__pivots:
                spent = field.matmul(coefficients[None, :], self.__combinations)[0]
                combination[:index] = field.neg(spent)
            self.__combinations = np.hstack(
                [
                    self.__combinations,
                    np.zeros((self.__combinations.shape[0], 1), dtype=np.int64),
                ]
            )
        else:
            combination = None

        nonzero = np.flatnonzero(residual)
        if nonzero.size == 0:
            if self.__track:
                return combination
            return np.zeros(0, dtype=np.int64)

        pivot = int(nonzero[0])
        inverse = field.sinv(int(residual[pivot]))
        row = field.mul(residual, inverse)
        column = self.__basis[:, pivot].copy()
        touched = np.flatnonzero(column)
        if touched.size:
            self.__basis[touched] = field.sub(
                self.__basis[touched], field.mul(column[touched, None], row[None, :])
            )
        self.__basis = np.vstack([self.__basis, row[None, :]])
        self.__pivots.append(pivot)

        if self.__track:
            tracked = field.mul(combination, inverse)
            if touched.size:
                self.__combinations[touched] = field.sub(
                    self.__combinations[touched],
                    field.mul(column[touched, None], tracked[None, :]),
                )
            self.__combinations = np.vstack([self.__combinations, tracked[None, :]])
        return None

    def extend(self, vectors: np.ndarray) -> int:
        """Insert every row; return how many extended the space."""
        before = self.rank
        for vector in np.asarray(vectors, dtype=np.int64):
            if self.rank == self.__ncols:
                break
            self.insert(vector)
        return self.rank - before


def complement_columns(pivots: typing.Iterable[int], ncols: int) -> typing.List[int]:
    """Columns that are not pivots; their unit vectors complement the span."""
    chosen = set(pivots)
    return [c for c in range(ncols) if c not in chosen]
