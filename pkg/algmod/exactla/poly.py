"""Univariate polynomials over GF(p^k) and their factorization.

The factorization follows the classical three stages: squarefree
decomposition (with p-th roots in characteristic p), distinct-degree
factorization and the Cantor-Zassenhaus equal-degree splitting. The last
stage is randomised; it draws from a seeded numpy Generator and the output
is sorted canonically, so results do not depend on the seed.
"""

import functools
import logging
import typing

import numpy as np

from algmod.exactla import field as field_module
from algmod.globals import errors
from algmod.globals import globals

logger = logging.getLogger(__name__)


def _trim(a: np.ndarray) -> np.ndarray:
    nonzero = np.flatnonzero(a)
    if nonzero.size == 0:
        return a[:0]
    return a[: nonzero[-1] + 1]


class Poly(object):
    def __init__(self, field, coeffs: typing.Sequence[int] = ()) -> None:
        array = np.asarray(tuple(int(c) for c in coeffs), dtype=np.int64)
        if array.size and (array.min() < 0 or array.max() >= field.order):
            msg = "Coefficients {} are not elements of {}.".format(
                tuple(coeffs), field
            )
            raise ValueError(msg)
        self.__field = field
        self.__array = _trim(array)
        self.__array.flags.writeable = False
        self.__coeffs = tuple(int(c) for c in self.__array)

    @classmethod
    def from_array(cls, field, array: np.ndarray) -> "Poly":
        return cls(field, np.asarray(array, dtype=np.int64).tolist())

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, c: int) -> "Poly":
        return cls(field, (c,))

    # -------------------------------------------------------------- properties

    @property
    def field(self):
        return self.__field

    @property
    def coeffs(self) -> tuple:
        return self.__coeffs

    @property
    def array(self) -> np.ndarray:
        return self.__array

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.__coeffs) - 1

    @property
    def lead(self) -> int:
        return self.__coeffs[-1] if self.__coeffs else 0

    def is_zero(self) -> bool:
        return not self.__coeffs

    def is_one(self) -> bool:
        return self.__coeffs == (1,)

    def __repr__(self) -> str:
        if not self.__coeffs:
            return "0"
        terms = []
        for i, c in reversed(tuple(enumerate(self.__coeffs))):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = "x" if i == 1 else "x^{}".format(i)
                terms.append(power if c == 1 else "{}*{}".format(c, power))
        return " + ".join(terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.__field == other.field and self.__coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.__field, self.__coeffs))

    def sort_key(self) -> tuple:
        return (self.degree, self.__coeffs)

    # -------------------------------------------------------------- arithmetic

    def __check(self, other: "Poly") -> None:
        if self.__field != other.field:
            msg = "Polynomials over {} and {} can't be combined.".format(
                self.__field, other.field
            )
            raise errors.FieldMismatch(msg)

    def __padded(self, other: "Poly") -> tuple:
        size = max(len(self.__coeffs), len(other.coeffs))
        a = np.zeros(size, dtype=np.int64)
        b = np.zeros(size, dtype=np.int64)
        a[: self.__array.size] = self.__array
        b[: other.array.size] = other.array
        return a, b

    def __add__(self, other: "Poly") -> "Poly":
        self.__check(other)
        a, b = self.__padded(other)
        return Poly.from_array(self.__field, self.__field.add(a, b))

    def __sub__(self, other: "Poly") -> "Poly":
        self.__check(other)
        a, b = self.__padded(other)
        return Poly.from_array(self.__field, self.__field.sub(a, b))

    def __neg__(self) -> "Poly":
        return Poly.from_array(self.__field, self.__field.neg(self.__array))

    def __mul__(self, other: "Poly") -> "Poly":
        self.__check(other)
        return Poly.from_array(
            self.__field, self.__field.convolve(self.__array, other.array)
        )

    def scale(self, c: int) -> "Poly":
        return Poly.from_array(self.__field, self.__field.mul(self.__array, c))

    def monic(self) -> "Poly":
        if self.is_zero():
            raise errors.ZeroPoly("The zero polynomial has no monic form.")
        return self.scale(self.__field.sinv(self.lead))

    def __divmod__(self, other: "Poly") -> tuple:
        self.__check(other)
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial.")
        field = self.__field
        divisor = other.array
        shift = self.degree - other.degree
        if shift < 0:
            return Poly(field), self
        remainder = self.__array.copy()
        quotient = np.zeros(shift + 1, dtype=np.int64)
        inverse_lead = field.sinv(other.lead)
        width = divisor.size
        for i in range(shift, -1, -1):
            c = field.smul(int(remainder[i + width - 1]), inverse_lead)
            if c == 0:
                continue
            quotient[i] = c
            remainder[i : i + width] = field.sub(
                remainder[i : i + width], field.mul(divisor, c)
            )
        return (
            Poly.from_array(field, quotient),
            Poly.from_array(field, remainder[: width - 1]),
        )

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        result = Poly.constant(self.__field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        result = Poly.constant(self.__field, 1) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def derivative(self) -> "Poly":
        field = self.__field
        coeffs = [
            field.smul(c, i % field.p) for i, c in enumerate(self.__coeffs) if i > 0
        ]
        return Poly(field, coeffs)

    def pth_root(self) -> "Poly":
        """g with g(x) ** p == self, for polynomials in x ** p."""
        field = self.__field
        p = field.p
        assert all(c == 0 for i, c in enumerate(self.__coeffs) if i % p)
        return Poly(
            field, [field.sfrobenius_inverse(c) for c in self.__coeffs[::p]]
        )

    def __call__(self, a: int) -> int:
        field = self.__field
        result = 0
        for c in reversed(self.__coeffs):
            result = field.sadd(field.smul(result, a), c)
        return result

    def is_irreducible(self) -> bool:
        n = self.degree
        if n < 1:
            return False
        if n == 1:
            return True
        f = self.monic()
        x = Poly.x(self.__field)
        h = x
        for _ in range(n // 2):
            h = h.powmod(self.__field.order, f)
            if not gcd(f, h - x).is_one():
                return False
        return True


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def squarefree_decomposition(f: Poly) -> typing.List[typing.Tuple[Poly, int]]:
    """Pairs (g_i, e_i), g_i monic squarefree and pairwise coprime, with
    f = lead(f) * prod g_i ** e_i."""
    field = f.field
    factors = []
    f = f.monic()
    multiplier = 1
    while f.degree > 0:
        derivative = f.derivative()
        if derivative.is_zero():
            f = f.pth_root()
            multiplier *= field.p
            continue
        g = gcd(f, derivative)
        h = f // g
        i = 1
        while not h.is_one():
            common = gcd(g, h)
            part = h // common
            if part.degree > 0:
                factors.append((part, i * multiplier))
            g, h, i = g // common, common, i + 1
        if g.is_one():
            break
        # what is left is a polynomial in x ** p
        f = g.pth_root()
        multiplier *= field.p
    return factors


def distinct_degree_factorization(f: Poly) -> typing.List[typing.Tuple[Poly, int]]:
    field = f.field
    x = Poly.x(field)
    h = x
    factors = []
    i = 1
    while 2 * i <= f.degree:
        h = h.powmod(field.order, f)
        g = gcd(f, h - x)
        if not g.is_one():
            factors.append((g, i))
            f = f // g
            h = h % f
        i += 1
    if f.degree > 0:
        factors.append((f, f.degree))
    return factors


def equal_degree_factorization(
    f: Poly, d: int, rng: np.random.Generator
) -> typing.List[Poly]:
    """Cantor-Zassenhaus splitting of a product of irreducibles of degree d."""
    if f.degree <= d:
        return [f]
    field = f.field
    while True:
        a = Poly.from_array(field, field.random_elements(rng, f.degree))
        if a.degree < 1:
            continue
        if field.p == 2:
            # trace map a + a^2 + ... + a^(2^(kd - 1))
            trace = a
            power = a
            for _ in range(field.k * d - 1):
                power = (power * power) % f
                trace = trace + power
            candidate = gcd(f, trace)
        else:
            exponent = (field.order ** d - 1) // 2
            candidate = gcd(f, a.powmod(exponent, f) - Poly.constant(field, 1))
        if 0 < candidate.degree < f.degree:
            break
    return equal_degree_factorization(
        candidate, d, rng
    ) + equal_degree_factorization(f // candidate, d, rng)


def factor_poly(
    f: Poly, seed: typing.Union[int, np.random.Generator] = globals.DEFAULT_SEED
) -> typing.List[typing.Tuple[Poly, int]]:
    """Complete factorization into monic irreducibles with multiplicities.

    The result is sorted by (degree, coefficients); the product of the factors
    (with multiplicities) equals the monic form of f.
    """
    if f.is_zero():
        raise errors.ZeroPoly("The zero polynomial can't be factored.")
    rng = field_module.make_rng(seed)
    result = {}
    for part, multiplicity in squarefree_decomposition(f):
        for product, d in distinct_degree_factorization(part):
            for irreducible in equal_degree_factorization(product, d, rng):
                irreducible = irreducible.monic()
                result[irreducible] = result.get(irreducible, 0) + multiplicity
    factors = sorted(result.items(), key=lambda item: item[0].sort_key())
    logger.debug("factored degree %d polynomial into %d factors", f.degree, len(factors))
    return factors


def product(factors: typing.Iterable[typing.Tuple[Poly, int]], field) -> Poly:
    return functools.reduce(
        lambda acc, item: acc * item[0] ** item[1],
        factors,
        Poly.constant(field, 1),
    )
