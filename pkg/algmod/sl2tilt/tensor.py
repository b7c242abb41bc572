"""Tensor products of restricted simples of SL2 in characteristic p.

For 0 <= mu <= lam <= p - 1:

    lam + mu <= p - 1:  L(lam - mu) + L(lam - mu + 2) + ... + L(lam + mu)
    otherwise:          L(lam - mu) + ... + L(2p - lam - mu - 4)
                        + T(p) + T(p + 2) + ... + T(lam + mu)        lam + mu = p mod 2
                        + L(p - 1) + T(p + 1) + ... + T(lam + mu)    otherwise

with no L-chain when lam = p - 1. Every result is checked against the product
of characters.
"""

import logging
import typing

from algmod.globals import errors
from algmod.sl2tilt import characters
from algmod.sl2tilt import words

logger = logging.getLogger(__name__)


def _check_pair(lam: int, mu: int, p: int) -> None:
    if not 0 <= mu <= lam <= p - 1:
        msg = "Need 0 <= mu <= lambda <= p - 1, got lambda={}, mu={}, p={}.".format(lam, mu, p)
        raise errors.OutOfRange(msg)


def _validate(result: words.FormalSum, expected: characters.CharPoly, what: str) -> None:
    if result.char != expected:
        msg = "{}: {} does not have the expected character.".format(what, result.render())
        raise errors.CharMismatch(msg)


def _tilting_chain(start: int, stop: int, p: int) -> typing.List[words.Symbol]:
    return [words.symbol(b, p) for b in range(start, stop + 1, 2)]


def _weights(lam: int, mu: int, p: int, top_parity_from: int) -> typing.List[int]:
    if lam + mu <= p - 1:
        return list(range(lam - mu, lam + mu + 1, 2))
    weights = []
    if lam < p - 1:
        weights.extend(range(lam - mu, 2 * p - (lam + mu + 4) + 1, 2))
    start = p if (top_parity_from - p) % 2 == 0 else p - 1
    weights.extend(range(start, lam + mu + 1, 2))
    return weights


def fundamental_tensor(lam: int, mu: int, p: int) -> words.FormalSum:
    """L(lam) (x) L(mu) as a sum of single-level tilting symbols."""
    _check_pair(lam, mu, p)
    weights = _weights(lam, mu, p, lam + mu)
    result = words.FormalSum.of_symbols([words.symbol(w, p) for w in weights], p)
    _validate(
        result,
        characters.weyl(lam) * characters.weyl(mu),
        "L({}) (x) L({})".format(lam, mu),
    )
    return result


def printed_fundamental_tensor(lam: int, mu: int, p: int) -> words.FormalSum:
    """The same rule with the tilting chain chosen by the parity of mu
    (T(p) first for odd mu), without validation."""
    _check_pair(lam, mu, p)
    weights = _weights(lam, mu, p, p if mu % 2 == 1 else p + 1)
    return words.FormalSum.of_symbols([words.symbol(w, p) for w in weights], p)


def rule_discrepancies(p: int) -> typing.List[dict]:
    """Pairs where the mu-parity rule and the validated rule differ."""
    result = []
    for lam in range(p):
        for mu in range(lam + 1):
            validated = fundamental_tensor(lam, mu, p)
            printed = printed_fundamental_tensor(lam, mu, p)
            if printed != validated:
                result.append(
                    {
                        "lambda": lam,
                        "mu": mu,
                        "printed": printed.render(),
                        "validated": validated.render(),
                        "printed_char_ok": printed.char == validated.char,
                    }
                )
    logger.debug("p=%d: %d pairs differ under the mu-parity rule", p, len(result))
    return result


class Rewrite(typing.NamedTuple):
    """T(p) (x) L(p - 1) = 2 (T(p) + T(p + 2) + ... + T(2p - 3)) + L(2p - 1)
    = 2 L(p - 1) (x) L(p - 2) + L(p - 1) (x) L(1)^sigma."""

    p: int
    lhs: typing.Tuple[words.Symbol, words.Symbol]
    tilting_form: words.FormalSum
    pair_form: typing.Tuple[typing.Tuple[int, int, int], ...]
    char: characters.CharPoly


def threeistwo_rewrite(p: int) -> Rewrite:
    if p < 3:
        msg = "The T(p) (x) L(p - 1) rewrite needs p >= 3, got {}.".format(p)
        raise errors.OutOfRange(msg)
    lhs_char = characters.tilting(p, p) * characters.weyl(p - 1)
    chain = words.FormalSum.of_symbols(_tilting_chain(p, 2 * p - 3, p), p, 2)
    steinberg_like = words.FormalSum([(words.tilting_word(2 * p - 1, p, 2), 1)])
    tilting_form = chain * 2 + steinberg_like
    _validate(tilting_form, lhs_char, "T(p) (x) L(p - 1)")
    # (count, lambda, mu) at level 0 plus L(1)^sigma for the last entry
    pair_form = ((2, p - 1, p - 2), (1, p - 1, 0))
    pair_char = (
        characters.weyl(p - 1) * characters.weyl(p - 2) * 2
        + characters.weyl(p - 1) * characters.weyl(1).twist(p)
    )
    if pair_char != lhs_char:
        raise errors.CharMismatch("T(p) (x) L(p - 1) pair form")
    return Rewrite(p, (words.symbol(p, p), words.symbol(p - 1, p)), tilting_form, pair_form, lhs_char)


class L1Expansion(typing.NamedTuple):
    """L(1) (x) L(lam) (x) L(mu) = A + B (x) L(1)^sigma.

    pairs: A as {(i, j): multiplicity} with i >= j.
    b: the weight of B = L(b), None when B = 0.
    """

    pairs: typing.Dict[typing.Tuple[int, int], int]
    b: typing.Optional[int]


def _pair(i: int, j: int) -> typing.Tuple[int, int]:
    return (i, j) if i >= j else (j, i)


def l1_pair_expansion(lam: int, mu: int, p: int) -> L1Expansion:
    for weight in (lam, mu):
        if not 0 <= weight <= p - 1:
            raise errors.OutOfRange("Weight {} is not restricted for p = {}.".format(weight, p))
    pairs = {}
    b = None

    def add(i: int, j: int, count: int = 1) -> None:
        key = _pair(i, j)
        pairs[key] = pairs.get(key, 0) + count

    if lam < p - 1 or mu < p - 1:
        # move L(1) onto a factor below p - 1
        moving, other = (lam, mu) if lam < p - 1 else (mu, lam)
        if moving == 0:
            add(1, other)
        else:
            add(moving - 1, other)
            add(moving + 1, other)
    else:
        add(p - 1, p - 2, 2)
        b = p - 1

    expected = characters.weyl(1) * characters.weyl(lam) * characters.weyl(mu)
    found = characters.total(
        characters.weyl(i) * characters.weyl(j) * count for (i, j), count in pairs.items()
    )
    if b is not None:
        found = found + characters.weyl(b) * characters.weyl(1).twist(p)
    if found != expected:
        msg = "L(1) (x) L({}) (x) L({}) expansion does not match.".format(lam, mu)
        raise errors.CharMismatch(msg)
    return L1Expansion(pairs, b)
