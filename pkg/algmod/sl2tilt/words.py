"""Twisted tensor words of restricted simples and small tilting modules."""

import typing

from algmod.globals import errors
from algmod.sl2tilt import characters


class Symbol(typing.NamedTuple):
    """L(a) for 0 <= a <= p - 1 or T(b) for p <= b <= 2p - 1."""

    kind: str
    weight: int

    def render(self) -> str:
        return "{}({})".format(self.kind, self.weight)


def symbol(weight: int, p: int) -> Symbol:
    """The symbol of T(weight); restricted weights give L."""
    if not 0 <= weight <= 2 * p - 1:
        msg = "Weight {} has no single-level symbol for p = {}.".format(weight, p)
        raise errors.OutOfRange(msg)
    return Symbol("L" if weight <= p - 1 else "T", weight)


TRIVIAL = Symbol("L", 0)


def _twist_suffix(level: int) -> str:
    if level == 0:
        return ""
    if level == 1:
        return "^σ"
    return "^σ^{}".format(level)


class SimpleLabel(typing.NamedTuple):
    weight: int
    p: int
    n: int

    @property
    def digits(self) -> typing.Tuple[int, ...]:
        return characters.steinberg_decompose(self.weight, self.p, self.n)

    def word(self) -> "TiltingWord":
        return TiltingWord([Symbol("L", d) for d in self.digits], self.p)


class TiltingWord(object):
    """One symbol per twist level 0 .. n - 1."""

    def __init__(self, symbols: typing.Sequence[Symbol], p: int) -> None:
        symbols = tuple(Symbol(*s) for s in symbols)
        for s in symbols:
            if s.kind == "L" and not 0 <= s.weight <= p - 1:
                raise errors.OutOfRange("L({}) is not restricted for p = {}.".format(s.weight, p))
            if s.kind == "T" and not p <= s.weight <= 2 * p - 1:
                raise errors.OutOfRange("T({}) is out of range for p = {}.".format(s.weight, p))
        self.__symbols = symbols
        self.__p = p

    @classmethod
    def single(cls, s: Symbol, p: int, n: int = 1) -> "TiltingWord":
        return cls((s,) + (TRIVIAL,) * (n - 1), p)

    @property
    def symbols(self) -> typing.Tuple[Symbol, ...]:
        return self.__symbols

    @property
    def p(self) -> int:
        return self.__p

    @property
    def n(self) -> int:
        return len(self.__symbols)

    def rotate(self, steps: int = 1) -> "TiltingWord":
        """Twist by sigma^steps with levels taken mod n."""
        n = self.n
        symbols = [None] * n
        for level, s in enumerate(self.__symbols):
            symbols[(level + steps) % n] = s
        return TiltingWord(symbols, self.__p)

    @property
    def char(self) -> characters.CharPoly:
        return characters.product(
            characters.tilting(s.weight, self.__p).twist(self.__p ** level)
            for level, s in enumerate(self.__symbols)
        )

    @property
    def dim(self) -> int:
        result = 1
        for s in self.__symbols:
            result *= characters.tilting(s.weight, self.__p).dim
        return result

    @property
    def key(self) -> tuple:
        return tuple((s.kind, s.weight) for s in self.__symbols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TiltingWord):
            return NotImplemented
        return self.__p == other.p and self.key == other.key

    def __lt__(self, other: "TiltingWord") -> bool:
        return self.key < other.key

    def __hash__(self) -> int:
        return hash((self.__p, self.key))

    def render(self) -> str:
        parts = [
            s.render() + _twist_suffix(level)
            for level, s in enumerate(self.__symbols)
            if s != TRIVIAL
        ]
        return "⊗".join(parts) if parts else TRIVIAL.render()

    def __repr__(self) -> str:
        return self.render()


def char_of(w: typing.Union[TiltingWord, SimpleLabel]) -> characters.CharPoly:
    if isinstance(w, SimpleLabel):
        return characters.product(
            characters.weyl(d).twist(w.p ** i) for i, d in enumerate(w.digits)
        )
    return w.char


class FormalSum(object):
    """Direct sum of words with positive multiplicities, kept in canonical
    (lexicographic) order."""

    def __init__(self, terms: typing.Iterable[typing.Tuple[TiltingWord, int]] = ()) -> None:
        counts = {}
        for word, count in terms:
            assert count >= 0
            if count:
                counts[word] = counts.get(word, 0) + count
        self.__terms = tuple(sorted(counts.items(), key=lambda item: item[0].key))

    @classmethod
    def of_symbols(cls, symbols: typing.Iterable[Symbol], p: int, n: int = 1) -> "FormalSum":
        return cls((TiltingWord.single(s, p, n), 1) for s in symbols)

    @property
    def terms(self) -> typing.Tuple[typing.Tuple[TiltingWord, int], ...]:
        return self.__terms

    def words(self) -> typing.List[TiltingWord]:
        return [word for word, _ in self.__terms]

    def __iter__(self):
        return iter(self.__terms)

    def __len__(self) -> int:
        return len(self.__terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum(self.__terms + other.terms)

    def __mul__(self, factor: int) -> "FormalSum":
        return FormalSum((word, count * factor) for word, count in self.__terms)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.__terms == other.terms

    def __hash__(self) -> int:
        return hash(self.__terms)

    @property
    def char(self) -> characters.CharPoly:
        return characters.total(word.char * count for word, count in self.__terms)

    @property
    def dim(self) -> int:
        return sum(word.dim * count for word, count in self.__terms)

    def render(self) -> str:
        if not self.__terms:
            return "0"
        return " ⊕ ".join(
            word.render() if count == 1 else "{}·{}".format(count, word.render())
            for word, count in self.__terms
        )

    def __repr__(self) -> str:
        return self.render()

    def to_list(self) -> list:
        return [{"word": word.render(), "multiplicity": count} for word, count in self.__terms]


def tilting_word(m: int, p: int, n: int = None) -> TiltingWord:
    """T(m) as a word: m = p - 1 + a + p b gives T(p - 1 + a) (x) T(b)^sigma.

    n: the number of levels; by default as many as T(m) needs.
    """
    weight = m
    symbols = []
    while m > 2 * p - 2:
        b, a = divmod(m - p + 1, p)
        symbols.append(symbol(p - 1 + a, p))
        m = b
    symbols.append(symbol(m, p))
    if n is not None:
        if len(symbols) > n:
            msg = "T({}) needs more than {} levels.".format(weight, n)
            raise errors.OutOfRange(msg)
        symbols.extend([TRIVIAL] * (n - len(symbols)))
    return TiltingWord(symbols, p)


def tilting_decompose_by_char(c: characters.CharPoly, p: int, n: int = None) -> FormalSum:
    """Greedy: strip the tilting module of the top weight until nothing is
    left. Raises NegativeCoefficient when c is no tilting character."""
    remainder = c
    terms = []
    while not remainder.is_zero():
        top = remainder.top
        count = remainder[top]
        if count < 0 or top < 0:
            msg = "Negative coefficient {} at weight {}.".format(count, top)
            raise errors.NegativeCoefficient(msg)
        remainder = remainder - characters.tilting(top, p) * count
        if any(coefficient < 0 for coefficient in remainder.coefficients.values()):
            msg = "Character is no sum of tilting characters (weight {}).".format(top)
            raise errors.NegativeCoefficient(msg)
        terms.append((tilting_word(top, p, n), count))
    return FormalSum(terms)
