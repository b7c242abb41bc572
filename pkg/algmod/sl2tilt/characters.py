"""Characters of SL2 as symmetric Laurent polynomials in one variable v.

The Weyl character of weight m is v^m + v^(m-2) + ... + v^-m. Restricted
simples L(a), 0 <= a <= p - 1, have Weyl characters; by Steinberg's theorem
L(l) is the product of the L(l_i) twisted by v -> v^(p^i) over the base-p
digits l_i of l. Indecomposable tilting modules T(m) satisfy

    T(m) = L(m)                            m <= p - 1
    ch T(m) = chi(m) + chi(2p - 2 - m)     p <= m <= 2p - 2
    T(m) = T(p - 1 + a) (x) T(b)^sigma      m = p - 1 + a + p b, 0 <= a < p
"""

import functools
import typing

from algmod.globals import errors


class CharPoly(object):
    """Laurent polynomial with integer coefficients, zero terms dropped."""

    def __init__(self, coefficients: typing.Mapping[int, int] = None) -> None:
        self.__coefficients = {
            int(e): int(c) for e, c in (coefficients or {}).items() if c
        }

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "CharPoly":
        return cls({exponent: coefficient})

    @property
    def coefficients(self) -> typing.Dict[int, int]:
        return dict(self.__coefficients)

    def __getitem__(self, exponent: int) -> int:
        return self.__coefficients.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self.__coefficients

    @property
    def top(self) -> int:
        """Largest exponent with a non-zero coefficient."""
        assert self.__coefficients
        return max(self.__coefficients)

    @property
    def dim(self) -> int:
        """Value at v = 1."""
        return sum(self.__coefficients.values())

    def is_palindromic(self) -> bool:
        return all(self[-e] == c for e, c in self.__coefficients.items())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.__coefficients.values())

    def twist(self, factor: int) -> "CharPoly":
        """v -> v^factor."""
        return CharPoly({e * factor: c for e, c in self.__coefficients.items()})

    def __add__(self, other: "CharPoly") -> "CharPoly":
        result = dict(self.__coefficients)
        for e, c in other.coefficients.items():
            result[e] = result.get(e, 0) + c
        return CharPoly(result)

    def __neg__(self) -> "CharPoly":
        return CharPoly({e: -c for e, c in self.__coefficients.items()})

    def __sub__(self, other: "CharPoly") -> "CharPoly":
        return self + (-other)

    def __mul__(self, other: typing.Union["CharPoly", int]) -> "CharPoly":
        if isinstance(other, int):
            return CharPoly({e: c * other for e, c in self.__coefficients.items()})
        result = {}
        for e, c in self.__coefficients.items():
            for f, d in other.coefficients.items():
                result[e + f] = result.get(e + f, 0) + c * d
        return CharPoly(result)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.__coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.__coefficients.items())))

    def __repr__(self) -> str:
        if not self.__coefficients:
            return "0"
        return " + ".join(
            "{}v^{}".format("" if c == 1 else c, e)
            for e, c in sorted(self.__coefficients.items(), reverse=True)
        )

    def to_dict(self) -> dict:
        return {str(e): c for e, c in sorted(self.__coefficients.items())}


def total(chars: typing.Iterable[CharPoly]) -> CharPoly:
    return functools.reduce(lambda a, b: a + b, chars, CharPoly())


def product(chars: typing.Iterable[CharPoly]) -> CharPoly:
    return functools.reduce(lambda a, b: a * b, chars, CharPoly.monomial(0))


@functools.lru_cache(maxsize=None)
def weyl(m: int) -> CharPoly:
    assert m >= 0
    return CharPoly({e: 1 for e in range(-m, m + 1, 2)})


def steinberg_decompose(weight: int, p: int, n: int) -> typing.Tuple[int, ...]:
    """Base-p digits (l_0, ..., l_(n-1)) of weight."""
    if not 0 <= weight <= p ** n - 1:
        msg = "Weight {} is out of range 0..{}.".format(weight, p ** n - 1)
        raise errors.OutOfRange(msg)
    return tuple((weight // p ** i) % p for i in range(n))


def simple(weight: int, p: int) -> CharPoly:
    """ch L(weight) by Steinberg's tensor product theorem."""
    n = 1
    while p ** n <= weight:
        n += 1
    return product(
        weyl(digit).twist(p ** i)
        for i, digit in enumerate(steinberg_decompose(weight, p, n))
    )


@functools.lru_cache(maxsize=None)
def tilting(m: int, p: int) -> CharPoly:
    """ch T(m)."""
    assert m >= 0
    if m <= p - 1:
        return weyl(m)
    if m <= 2 * p - 2:
        return weyl(m) + weyl(2 * p - 2 - m)
    b, a = divmod(m - p + 1, p)
    return tilting(p - 1 + a, p) * tilting(b, p).twist(p)
