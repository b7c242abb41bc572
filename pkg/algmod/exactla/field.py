"""Small finite fields GF(p^k).

Elements are integers in [0, p^k); the base-p digits of an element are the
coefficients (lowest degree first) of its residue modulo the defining
polynomial. All vectorised methods accept numpy integer arrays (or python
ints) and return int64 arrays; the ``s``-prefixed methods work on python ints
and are meant for the scalar loops of polynomial arithmetic.
"""

import functools
import logging
import typing

import numpy as np

from algmod.globals import errors
from algmod.globals import globals

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    divisor = 3
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 2
    return True


class FieldSpec(object):
    def __init__(self, p: int, k: int = 1, poly: typing.Sequence[int] = None) -> None:
        """A finite field of order p ** k.

        p: prime characteristic, 2 <= p <= MAX_PRIME
        k: extension degree
        poly: k + 1 coefficients (lowest degree first) of a monic polynomial of
            degree k over GF(p). Required when k > 1, ignored when k == 1.

        Irreducibility of poly is checked by factor_poly-style gcd tests over the
        prime field; the check raises ReduciblePoly.
        """
        if not is_prime(p) or p > globals.MAX_PRIME:
            msg = "Characteristic has to be a prime <= {} and not {}.".format(
                globals.MAX_PRIME, p
            )
            raise errors.NotPrime(msg)

        if k < 1:
            msg = "Extension degree has to be positive and not {}.".format(k)
            raise errors.SizeOverflow(msg)

        if p ** k > globals.MAX_FIELD_ORDER:
            msg = "Field order {}^{} exceeds the maximum of {}.".format(
                p, k, globals.MAX_FIELD_ORDER
            )
            raise errors.SizeOverflow(msg)

        if k == 1:
            poly = None
        else:
            if poly is None:
                msg = "Extension fields need a defining polynomial."
                raise errors.ReduciblePoly(msg)
            poly = tuple(int(c) % p for c in poly)
            if len(poly) != k + 1 or poly[-1] != 1:
                msg = "Defining polynomial {} is not monic of degree {}.".format(
                    poly, k
                )
                raise errors.ReduciblePoly(msg)
            if not _is_irreducible_over_prime_field(p, poly):
                msg = "Defining polynomial {} is reducible over GF({}).".format(
                    poly, p
                )
                raise errors.ReduciblePoly(msg)

        self.__p = p
        self.__k = k
        self.__poly = poly
        self.__order = p ** k
        self.__powers = np.array([p ** i for i in range(k)], dtype=np.int64)
        self.__power_list = [p ** i for i in range(k)]
        self.__digits = self.__make_digits()
        self.__digit_lists = tuple(tuple(int(d) for d in row) for row in self.__digits)

        if k == 1:
            self.__log = None
            self.__exp = None
            self.__inv = np.zeros(p, dtype=np.int64)
            for x in range(1, p):
                self.__inv[x] = pow(x, p - 2, p)
            self.__frobenius = np.arange(p, dtype=np.int64)
            self.__reduction = None
        else:
            self.__reduction = self.__make_reduction()
            self.__exp, self.__log = self.__make_log_tables()
            nonzero = np.arange(1, self.__order)
            self.__inv = np.zeros(self.__order, dtype=np.int64)
            self.__inv[nonzero] = self.__exp[
                (self.__order - 1 - self.__log[nonzero]) % (self.__order - 1)
            ]
            self.__frobenius = np.zeros(self.__order, dtype=np.int64)
            self.__frobenius[nonzero] = self.__exp[
                (self.__log[nonzero] * p) % (self.__order - 1)
            ]

        self.__exp_list = None if self.__exp is None else self.__exp.tolist()
        self.__log_list = None if self.__log is None else self.__log.tolist()
        self.__inv_list = self.__inv.tolist()

    # ------------------------------------------------------------ construction

    def __make_digits(self) -> np.ndarray:
        elements = np.arange(self.__order, dtype=np.int64)
        return (elements[:, None] // self.__powers[None, :]) % self.__p

    def __make_reduction(self) -> np.ndarray:
        """Row t holds the digits of x ** t modulo the defining polynomial."""
        p, k = self.__p, self.__k
        rows = []
        current = [0] * k
        current[0] = 1
        for _ in range(2 * k - 1):
            rows.append(list(current))
            # multiply by x
            top = current[-1]
            current = [0] + current[:-1]
            for i in range(k):
                current[i] = (current[i] - top * self.__poly[i]) % p
        return np.array(rows, dtype=np.int64)

    def __mul_digits(self, a: list, b: list) -> list:
        p, k = self.__p, self.__k
        product = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    product[i + j] += x * y
        result = [0] * k
        for t, c in enumerate(product):
            if c:
                row = self.__reduction[t]
                for i in range(k):
                    result[i] += c * int(row[i])
        return [c % p for c in result]

    def __make_log_tables(self) -> tuple:
        q = self.__order
        for candidate in range(2, q):
            generator = self.__digit_lists[candidate]
            powers = [1]
            current = list(self.__digit_lists[1])
            while True:
                current = self.__mul_digits(current, generator)
                code = sum(c * w for c, w in zip(current, self.__power_list))
                if code == 1:
                    break
                powers.append(code)
            if len(powers) == q - 1:
                exp = np.array(powers + powers, dtype=np.int64)
                log = np.zeros(q, dtype=np.int64)
                log[np.array(powers, dtype=np.int64)] = np.arange(q - 1)
                logger.debug(
                    "GF(%d^%d): primitive element %d", self.__p, self.__k, candidate
                )
                return exp, log
        # the irreducibility test above makes this unreachable
        msg = "No primitive element found for GF({}^{}).".format(self.__p, self.__k)
        raise errors.ReduciblePoly(msg)

    # -------------------------------------------------------------- properties

    @property
    def p(self) -> int:
        return self.__p

    @property
    def k(self) -> int:
        return self.__k

    @property
    def order(self) -> int:
        return self.__order

    @property
    def poly(self) -> tuple:
        return self.__poly

    @property
    def generator(self) -> int:
        """The element x (code p) for extension fields, 1 otherwise."""
        return self.__p if self.__k > 1 else 1

    def __repr__(self) -> str:
        if self.__k == 1:
            return "GF({})".format(self.__p)
        return "GF({}^{}, poly={})".format(self.__p, self.__k, self.__poly)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.__p, self.__k, self.__poly) == (other.p, other.k, other.poly)

    def __hash__(self) -> int:
        return hash((self.__p, self.__k, self.__poly))

    def header(self) -> str:
        """Field part of the text file headers."""
        text = "field={}^{}".format(self.__p, self.__k)
        if self.__k > 1:
            text += " poly={}".format(",".join(str(c) for c in self.__poly))
        return text

    # ----------------------------------------------------- vectorised arithmetic

    def digits(self, a) -> np.ndarray:
        return self.__digits[np.asarray(a, dtype=np.int64)]

    def encode(self, digits: np.ndarray) -> np.ndarray:
        return np.asarray(digits, dtype=np.int64) @ self.__powers

    def add(self, a, b) -> np.ndarray:
        if self.__k == 1:
            return (np.asarray(a, dtype=np.int64) + b) % self.__p
        return self.encode((self.digits(a) + self.digits(b)) % self.__p)

    def neg(self, a) -> np.ndarray:
        if self.__k == 1:
            return (-np.asarray(a, dtype=np.int64)) % self.__p
        return self.encode((-self.digits(a)) % self.__p)

    def sub(self, a, b) -> np.ndarray:
        if self.__k == 1:
            return (np.asarray(a, dtype=np.int64) - b) % self.__p
        return self.encode((self.digits(a) - self.digits(b)) % self.__p)

    def mul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.__k == 1:
            return (a * b) % self.__p
        product = self.__exp[self.__log[a] + self.__log[b]]
        return np.where((a == 0) | (b == 0), 0, product)

    def inv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("Zero has no inverse.")
        return self.__inv[a]

    def frobenius(self, a) -> np.ndarray:
        """The element map x -> x ** p."""
        return self.__frobenius[np.asarray(a, dtype=np.int64)]

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Matrix product of two element arrays (2-dimensional)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape[1] == 0:
            return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        if self.__k == 1:
            return (a @ b) % self.__p
        p, k = self.__p, self.__k
        da = self.__digits[a]
        db = self.__digits[b]
        planes = np.zeros((a.shape[0], b.shape[1], 2 * k - 1), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                planes[:, :, i + j] += da[:, :, i] @ db[:, :, j]
        planes %= p
        return self.encode((planes @ self.__reduction) % p)

    def convolve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Coefficients of the product of two polynomials (lowest degree first)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.size == 0 or b.size == 0:
            return np.zeros(0, dtype=np.int64)
        if self.__k == 1:
            return np.convolve(a, b) % self.__p
        p, k = self.__p, self.__k
        da = self.__digits[a]
        db = self.__digits[b]
        planes = np.zeros((a.size + b.size - 1, 2 * k - 1), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                planes[:, i + j] += np.convolve(da[:, i], db[:, j])
        planes %= p
        return self.encode((planes @ self.__reduction) % p)

    # ----------------------------------------------------------- scalar helpers

    def sadd(self, a: int, b: int) -> int:
        if self.__k == 1:
            return (a + b) % self.__p
        p = self.__p
        return sum(
            ((x + y) % p) * w
            for x, y, w in zip(
                self.__digit_lists[a], self.__digit_lists[b], self.__power_list
            )
        )

    def sneg(self, a: int) -> int:
        if self.__k == 1:
            return (-a) % self.__p
        p = self.__p
        return sum(
            ((-x) % p) * w
            for x, w in zip(self.__digit_lists[a], self.__power_list)
        )

    def ssub(self, a: int, b: int) -> int:
        return self.sadd(a, self.sneg(b))

    def smul(self, a: int, b: int) -> int:
        if self.__k == 1:
            return (a * b) % self.__p
        if a == 0 or b == 0:
            return 0
        return self.__exp_list[self.__log_list[a] + self.__log_list[b]]

    def sinv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("Zero has no inverse.")
        return self.__inv_list[a]

    def spow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.sinv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.smul(result, a)
            a = self.smul(a, a)
            e >>= 1
        return result

    def sfrobenius_inverse(self, a: int) -> int:
        """The p-th root of a (the inverse of the Frobenius map)."""
        return self.spow(a, self.__p ** (self.__k - 1))

    def random_elements(self, rng: np.random.Generator, size) -> np.ndarray:
        return rng.integers(0, self.__order, size=size, dtype=np.int64)


def _is_irreducible_over_prime_field(p: int, coeffs: tuple) -> bool:
    from algmod.exactla import poly as poly_module

    return poly_module.Poly(field_make(p), coeffs).is_irreducible()


@functools.lru_cache(maxsize=None)
def field_make(p: int, k: int = 1, poly: tuple = None) -> FieldSpec:
    """Validated, cached field construction.

    Fields are immutable, so equal arguments share one instance (and its
    tables).
    """
    if poly is not None:
        poly = tuple(int(c) for c in poly)
    return FieldSpec(p, k, poly)


@functools.lru_cache(maxsize=None)
def field_default(p: int, k: int = 1) -> FieldSpec:
    """GF(p^k) on the lexicographically least monic irreducible polynomial.

    Candidates are ordered by the integer code sum(c_i * p ** i) of their
    non-leading coefficients.
    """
    if k == 1:
        return field_make(p)
    if not is_prime(p):
        msg = "Characteristic has to be a prime and not {}.".format(p)
        raise errors.NotPrime(msg)
    if p ** k > globals.MAX_FIELD_ORDER:
        msg = "Field order {}^{} exceeds the maximum of {}.".format(
            p, k, globals.MAX_FIELD_ORDER
        )
        raise errors.SizeOverflow(msg)
    for code in range(p ** k):
        coeffs = tuple((code // p ** i) % p for i in range(k)) + (1,)
        if coeffs[0] == 0:
            continue
        if _is_irreducible_over_prime_field(p, coeffs):
            return field_make(p, k, coeffs)
    raise AssertionError("Every degree has an irreducible polynomial.")


def make_rng(
    seed: typing.Union[int, np.random.Generator] = globals.DEFAULT_SEED
) -> np.random.Generator:
    """A PCG64 generator for a seed; generators are passed through."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)
