"""Finite groups given by generators, words in them, and element enumeration.

Permutations are 0-based tuples acting on the right: i ** (p * q) is
q[p[i]]. Matrix realisations act on row vectors, so the product of two group
elements is the matrix product in the same order.
"""

import collections
import itertools
import logging
import math
import typing

from algmod.exactla import matrix
from algmod.globals import errors
from algmod.globals import globals

logger = logging.getLogger(__name__)

Word = typing.Tuple[typing.Tuple[int, int], ...]


# ---------------------------------------------------------------- permutations


def perm_identity(degree: int) -> tuple:
    return tuple(range(degree))


def perm_compose(p: tuple, q: tuple) -> tuple:
    """p first, then q."""
    return tuple(q[i] for i in p)


def perm_inverse(p: tuple) -> tuple:
    inverse = [0] * len(p)
    for i, image in enumerate(p):
        inverse[image] = i
    return tuple(inverse)


def perm_order(p: tuple) -> int:
    seen = set()
    order = 1
    for start in range(len(p)):
        if start in seen:
            continue
        length = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = p[i]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def is_permutation(p: typing.Sequence[int], degree: int) -> bool:
    return len(p) == degree and sorted(p) == list(range(degree))


def pair_action(
    perms: typing.Sequence[tuple],
) -> typing.Tuple[typing.List[tuple], typing.List[tuple]]:
    """Induced action on the unordered pairs {i, j}, i < j, in lexicographic
    order. Returns the pair list and one permutation of pair indices per
    generator."""
    degree = len(perms[0])
    pairs = list(itertools.combinations(range(degree), 2))
    index = {pair: n for n, pair in enumerate(pairs)}
    images = []
    for p in perms:
        images.append(
            tuple(index[tuple(sorted((p[i], p[j])))] for i, j in pairs)
        )
    return pairs, images


# ----------------------------------------------------------------------- words


def validate_word(word: Word, ngens: int) -> Word:
    word = tuple((int(g), int(e)) for g, e in word)
    for g, e in word:
        if not 0 <= g < ngens:
            msg = "Generator index {} is out of range for {} generators.".format(
                g, ngens
            )
            raise errors.BadWord(msg)
        if e not in (1, -1):
            msg = "Word exponents have to be 1 or -1 and not {}.".format(e)
            raise errors.BadWord(msg)
    return word


def parse_word(text: str) -> Word:
    """'1 2^-1 3' (1-based generators) -> ((0, 1), (1, -1), (2, 1))."""
    word = []
    for token in text.split():
        base, sep, exponent = token.partition("^")
        try:
            g = int(base) - 1
            e = int(exponent) if sep else 1
        except ValueError:
            msg = "Malformed word token '{}'.".format(token)
            raise errors.BadWord(msg)
        if g < 0:
            msg = "Generators are numbered from 1, not {}.".format(base)
            raise errors.BadWord(msg)
        word.append((g, e))
    return tuple(word)


def format_word(word: Word) -> str:
    return " ".join(
        str(g + 1) if e == 1 else "{}^{}".format(g + 1, e) for g, e in word
    )


# ---------------------------------------------------------------------- groups


class GroupSpec(object):
    def __init__(self, ngens: int, realization: typing.Sequence = None) -> None:
        """A group given by ngens abstract generators.

        realization: one permutation (0-based tuple) or one invertible Matrix per
            generator; needed for element enumeration only.
        """
        if realization is not None:
            realization = tuple(
                tuple(int(i) for i in r) if not isinstance(r, matrix.Matrix) else r
                for r in realization
            )
            if len(realization) != ngens:
                msg = "Got {} realizing elements for {} generators.".format(
                    len(realization), ngens
                )
                raise errors.GroupMismatch(msg)
            kinds = set(isinstance(r, matrix.Matrix) for r in realization)
            if len(kinds) > 1:
                raise errors.GroupMismatch("Realizations can't mix permutations and matrices.")
            if realization and not kinds.pop():
                degree = len(realization[0])
                for r in realization:
                    if not is_permutation(r, degree):
                        msg = "{} is not a permutation of degree {}.".format(r, degree)
                        raise errors.GroupMismatch(msg)
        self.__ngens = ngens
        self.__realization = realization
        self.__enumeration = None
        self.__subgroups = {}

    @classmethod
    def from_permutations(cls, perms: typing.Sequence[typing.Sequence[int]]) -> "GroupSpec":
        return cls(len(perms), [tuple(p) for p in perms])

    @classmethod
    def from_matrices(cls, mats: typing.Sequence[matrix.Matrix]) -> "GroupSpec":
        return cls(len(mats), list(mats))

    @property
    def ngens(self) -> int:
        return self.__ngens

    @property
    def realization(self) -> typing.Optional[tuple]:
        return self.__realization

    @property
    def is_permutation_group(self) -> bool:
        return bool(self.__realization) and not isinstance(
            self.__realization[0], matrix.Matrix
        )

    @property
    def degree(self) -> int:
        if not self.is_permutation_group:
            raise errors.NoRealization("Group has no permutation realization.")
        return len(self.__realization[0])

    def __repr__(self) -> str:
        if self.__realization is None:
            return "GroupSpec(ngens={})".format(self.__ngens)
        kind = "perm" if self.is_permutation_group else "matrix"
        return "GroupSpec(ngens={}, {})".format(self.__ngens, kind)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupSpec):
            return NotImplemented
        return self is other or (
            self.__ngens == other.ngens and self.__realization == other.realization
        )

    def __hash__(self) -> int:
        return hash((self.__ngens, self.__realization))

    # ----------------------------------------------------------- element ops

    def identity(self):
        self.__require_realization()
        first = self.__realization[0]
        if isinstance(first, matrix.Matrix):
            return matrix.Matrix.identity(first.field, first.rows)
        return perm_identity(len(first))

    def multiply(self, a, b):
        if isinstance(a, matrix.Matrix):
            return a @ b
        return perm_compose(a, b)

    def invert(self, a):
        if isinstance(a, matrix.Matrix):
            return a.inverse()
        return perm_inverse(a)

    def evaluate(self, word: Word):
        """The realized element of a word."""
        self.__require_realization()
        word = validate_word(word, self.__ngens)
        element = self.identity()
        for g, e in word:
            factor = self.__realization[g]
            if e == -1:
                factor = self.invert(factor)
            element = self.multiply(element, factor)
        return element

    def __require_realization(self) -> None:
        if not self.__realization:
            raise errors.NoRealization("Group has no realization to compute with.")

    def enumerate(self, cap: int = globals.ENUMERATION_CAP) -> "Enumeration":
        if self.__enumeration is None or self.__enumeration.size > cap:
            self.__enumeration = Enumeration(self, cap)
        return self.__enumeration

    def order(self, cap: int = globals.ENUMERATION_CAP) -> int:
        return self.enumerate(cap).size

    def subgroup(self, words: typing.Sequence[Word]) -> "GroupSpec":
        """The subgroup generated by words, as a group in its own right."""
        words = tuple(validate_word(word, self.__ngens) for word in words)
        if words not in self.__subgroups:
            if self.__realization:
                realization = [self.evaluate(word) for word in words]
                self.__subgroups[words] = GroupSpec(len(words), realization)
            else:
                self.__subgroups[words] = GroupSpec(len(words))
        return self.__subgroups[words]


class Enumeration(object):
    """All elements of a realized group, found breadth first.

    Element 0 is the identity and element i > 0 is parent[i] * gen[i]; this
    spanning tree lets callers build the matrices of every element with one
    product each.
    """

    def __init__(self, group: GroupSpec, cap: int = globals.ENUMERATION_CAP) -> None:
        if not group.realization:
            raise errors.NoRealization("Only realized groups can be enumerated.")
        identity = group.identity()
        elements = [identity]
        index = {identity: 0}
        parent = [-1]
        generator = [-1]
        queue = collections.deque([0])
        while queue:
            i = queue.popleft()
            for g, factor in enumerate(group.realization):
                element = group.multiply(elements[i], factor)
                if element in index:
                    continue
                if len(elements) >= cap:
                    msg = "Group has more than {} elements.".format(cap)
                    raise errors.OrderCapExceeded(msg)
                index[element] = len(elements)
                elements.append(element)
                parent.append(i)
                generator.append(g)
                queue.append(len(elements) - 1)
        logger.debug("enumerated %d elements of %s", len(elements), group)
        self.__group = group
        self.__elements = tuple(elements)
        self.__index = index
        self.__parent = tuple(parent)
        self.__generator = tuple(generator)

    @property
    def group(self) -> GroupSpec:
        return self.__group

    @property
    def size(self) -> int:
        return len(self.__elements)

    @property
    def elements(self) -> tuple:
        return self.__elements

    @property
    def parent(self) -> tuple:
        return self.__parent

    @property
    def generator(self) -> tuple:
        return self.__generator

    def index(self, element) -> int:
        return self.__index[element]

    def word(self, i: int) -> Word:
        letters = []
        while i > 0:
            letters.append((self.__generator[i], 1))
            i = self.__parent[i]
        return tuple(reversed(letters))

    def multiply(self, i: int, j: int) -> int:
        return self.__index[self.__group.multiply(self.__elements[i], self.__elements[j])]

    def inverse(self, i: int) -> int:
        return self.__index[self.__group.invert(self.__elements[i])]

    def power(self, i: int, e: int) -> int:
        result = 0
        for _ in range(e):
            result = self.multiply(result, i)
        return result

    def commutator(self, i: int, j: int) -> int:
        """i^-1 j^-1 i j"""
        return self.multiply(
            self.multiply(self.inverse(i), self.inverse(j)), self.multiply(i, j)
        )

    def right_translation(self, g: int) -> tuple:
        """Permutation x -> x * gen_g of the element indices."""
        factor = self.__group.realization[g]
        return tuple(
            self.__index[self.__group.multiply(element, factor)]
            for element in self.__elements
        )

    def closure(self, generators: typing.Iterable[int]) -> frozenset:
        """Element indices of the subgroup generated by the given elements."""
        generators = [g for g in set(generators) if g != 0]
        members = {0}
        queue = collections.deque([0])
        while queue:
            i = queue.popleft()
            for g in generators:
                j = self.multiply(i, g)
                if j not in members:
                    members.add(j)
                    queue.append(j)
        return frozenset(members)


def prime_power_exponent(n: int, p: int) -> typing.Optional[int]:
    """e with n == p ** e, None when n is no power of p."""
    e = 0
    while n > 1 and n % p == 0:
        n //= p
        e += 1
    return e if n == 1 else None


class SubgroupSpec(object):
    """A subgroup of an ambient group, given by words in its generators."""

    def __init__(self, words: typing.Sequence[Word], ngens: int = None) -> None:
        if ngens is not None:
            words = [validate_word(word, ngens) for word in words]
        self.__words = tuple(tuple((int(g), int(e)) for g, e in word) for word in words)

    @classmethod
    def generators(cls, ngens: int) -> "SubgroupSpec":
        """The whole group: every generator on its own."""
        return cls([((g, 1),) for g in range(ngens)], ngens)

    @property
    def words(self) -> tuple:
        return self.__words

    def __len__(self) -> int:
        return len(self.__words)

    def __repr__(self) -> str:
        return "SubgroupSpec({})".format(
            ", ".join("[{}]".format(format_word(word)) for word in self.__words)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubgroupSpec):
            return NotImplemented
        return self.__words == other.words

    def __hash__(self) -> int:
        return hash(self.__words)

    def group(self, ambient: GroupSpec) -> GroupSpec:
        return ambient.subgroup(self.__words)

    def enumerate(
        self, ambient: GroupSpec, cap: int = globals.ENUMERATION_CAP
    ) -> Enumeration:
        return self.group(ambient).enumerate(cap)

