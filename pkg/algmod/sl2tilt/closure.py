"""The tensor closure of the natural module V1 of SL2(p^n), symbolically.

A state is a product M (x) N of two simple modules, stored as one unordered
pair (i, j), i >= j, of restricted weights per twist level: the module
(L(i_0) (x) L(j_0)) (x) (L(i_1) (x) L(j_1))^sigma (x) ... Multiplying a
state by V1 only touches level 0:

    L(1) (x) L(i) (x) L(j) = A + B (x) L(1)^sigma

A is a sum of level-0 pairs; B is L(p - 1) when i = j = p - 1 and 0
otherwise. For the B part the whole product is untwisted once, multiplied by
V1 again and twisted back. Every tensor power of V1 is a sum of reachable
states, and every state is a sum of tilting words, one fundamental tensor
product per level.
"""

import itertools
import logging
import typing

from algmod.algtest import closure as algtest_closure
from algmod.exactla import field as field_module
from algmod.exactla import matrix
from algmod.globals import errors
from algmod.globals import globals
from algmod.modrep import groups
from algmod.modrep import modules
from algmod.sl2tilt import tensor
from algmod.sl2tilt import words

logger = logging.getLogger(__name__)

Pair = typing.Tuple[int, int]
State = typing.Tuple[Pair, ...]


def state_dim(state: State) -> int:
    result = 1
    for i, j in state:
        result *= (i + 1) * (j + 1)
    return result


def rotate_state(state: State, steps: int = 1) -> State:
    """Twist by sigma^steps: level i moves to level i + steps mod n."""
    n = len(state)
    result = [None] * n
    for level, pair in enumerate(state):
        result[(level + steps) % n] = pair
    return tuple(result)


def tensor_v1(state: State, p: int) -> typing.Dict[State, int]:
    """V1 (x) state as states with multiplicities."""
    result = {}

    def add(s: State, count: int) -> None:
        result[s] = result.get(s, 0) + count

    i, j = state[0]
    expansion = tensor.l1_pair_expansion(i, j, p)
    for pair, count in expansion.pairs.items():
        add((pair,) + state[1:], count)
    if expansion.b is not None:
        # B sits at level 0 next to V1^sigma; untwisting moves it to level n - 1
        untwisted = state[1:] + ((expansion.b, 0),)
        for s, count in tensor_v1(untwisted, p).items():
            add(rotate_state(s, 1), count)
    assert sum(state_dim(s) * c for s, c in result.items()) == 2 * state_dim(state)
    return result


def state_words(state: State, p: int) -> words.FormalSum:
    """The decomposition of a state into tilting words."""
    per_level = [tensor.fundamental_tensor(i, j, p).terms for i, j in state]
    terms = []
    for combination in itertools.product(*per_level):
        symbols = [word.symbols[0] for word, _ in combination]
        count = 1
        for _, c in combination:
            count *= c
        terms.append((words.TiltingWord(symbols, p), count))
    return words.FormalSum(terms)


def initial_state(n: int) -> State:
    return ((1, 0),) + ((0, 0),) * (n - 1)


class V1Closure(object):
    """Reachable states and tilting word classes of the tensor powers of V1.

    tight_classes: words of the states reachable from V1.
    classes: words of all twists of reachable states; closed under sigma.
    closed: False when the search stopped on its state budget.
    """

    def __init__(
        self, p: int, n: int, states: typing.Sequence[State], closed: bool = True
    ) -> None:
        self.__p = p
        self.__n = n
        self.__closed = closed
        self.__states = tuple(sorted(states))
        twisted = {rotate_state(s, k) for s in states for k in range(n)}
        self.__twisted_states = tuple(sorted(twisted))
        self.__tight_classes = self.__collect(self.__states)
        self.__classes = self.__collect(self.__twisted_states)

    def __collect(self, states: typing.Iterable[State]) -> typing.Tuple[words.TiltingWord, ...]:
        found = set()
        for s in states:
            found.update(state_words(s, self.__p).words())
        return tuple(sorted(found, key=lambda w: w.key))

    @property
    def p(self) -> int:
        return self.__p

    @property
    def n(self) -> int:
        return self.__n

    @property
    def q(self) -> int:
        return self.__p ** self.__n

    @property
    def closed(self) -> bool:
        return self.__closed

    @property
    def states(self) -> typing.Tuple[State, ...]:
        return self.__states

    @property
    def twisted_states(self) -> typing.Tuple[State, ...]:
        return self.__twisted_states

    @property
    def classes(self) -> typing.Tuple[words.TiltingWord, ...]:
        return self.__classes

    @property
    def tight_classes(self) -> typing.Tuple[words.TiltingWord, ...]:
        return self.__tight_classes

    def is_rotation_closed(self) -> bool:
        classes = set(self.__classes)
        return all(w.rotate(1) in classes for w in classes)

    def __repr__(self) -> str:
        return "V1Closure(p={}, n={}, states={}, classes={})".format(
            self.__p, self.__n, len(self.__states), len(self.__classes)
        )

    def render(self) -> str:
        lines = [
            "SL2({}) natural module: {}, {} reachable states, {} word classes ({} without twists)".format(
                self.q,
                "closed" if self.__closed else "open",
                len(self.__states),
                len(self.__classes),
                len(self.__tight_classes),
            )
        ]
        tight = set(self.__tight_classes)
        for w in self.__classes:
            lines.append("  {}{}  dim {}".format(w.render(), "" if w in tight else " *", w.dim))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        tight = set(self.__tight_classes)
        return {
            "p": self.__p,
            "n": self.__n,
            "closed": self.closed,
            "states": [[list(pair) for pair in s] for s in self.__states],
            "classes": [
                {"word": w.render(), "dim": w.dim, "reachable": w in tight}
                for w in self.__classes
            ],
            "rotation_closed": self.is_rotation_closed(),
        }


def v1_closure(
    p: int, n: int, state_budget: int = globals.SYMBOLIC_STATE_BUDGET, partial: bool = False
) -> V1Closure:
    """Reachable states of the tensor powers of V1.

    Raises BudgetExceeded past state_budget states, or returns an open
    V1Closure of the states seen so far when partial is set.
    """
    if not field_module.is_prime(p):
        raise errors.NotPrime("Characteristic has to be a prime and not {}.".format(p))
    if n < 2:
        msg = "SL2({}) has cyclic Sylow subgroups; the closure needs n >= 2.".format(p ** n)
        raise errors.OutOfRange(msg)
    start = initial_state(n)
    seen = {start}
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        following = []
        for s in frontier:
            for t in tensor_v1(s, p):
                if t not in seen:
                    seen.add(t)
                    following.append(t)
        if len(seen) > state_budget:
            msg = "More than {} states for p={}, n={}.".format(state_budget, p, n)
            if not partial:
                raise errors.BudgetExceeded(msg)
            logger.warning("%s Returning the open closure.", msg)
            return V1Closure(p, n, seen, closed=False)
        frontier = sorted(following)
        logger.debug("depth %d: %d states, %d new", depth, len(seen), len(frontier))
    result = V1Closure(p, n, seen)
    logger.info("%s", result)
    return result


# ------------------------------------------------------------- matrix side


def realize_on_matrices(p: int, n: int) -> modules.ModuleRep:
    """V1 over GF(p^n) on the generators x(w^0), ..., x(w^(n-1)), y(1) with

        x(t) = [[1, t], [0, 1]]   y(t) = [[1, 0], [t, 1]]

    The first n generators span the upper unitriangular Sylow p-subgroup.
    """
    q = p ** n
    if q > globals.SL2_REALIZE_CAP:
        msg = "SL2({}) exceeds the realization cap of {}.".format(q, globals.SL2_REALIZE_CAP)
        raise errors.SizeCap(msg)
    field = field_module.field_default(p, n)
    action = [matrix.Matrix(field, [[1, p ** i], [0, 1]]) for i in range(n)]
    action.append(matrix.Matrix(field, [[1, 0], [1, 1]]))
    group = groups.GroupSpec.from_matrices(action)
    m = modules.ModuleRep(group, action)
    relations = [((i, 1),) * p for i in range(n + 1)]
    relations.extend(((i, 1), (j, 1), (i, -1), (j, -1)) for i in range(n) for j in range(i))
    if not modules.check_words(m, relations):
        raise errors.CertificationFailed("Transvections of SL2({}) fail their relations.".format(q))
    return m


def sylow(n: int) -> groups.SubgroupSpec:
    """The upper unitriangular subgroup of the realization."""
    return groups.SubgroupSpec([((i, 1),) for i in range(n)], n + 1)


def matrix_closure(
    p: int,
    n: int,
    budgets: algtest_closure.Budgets = algtest_closure.Budgets(),
    seed=globals.DEFAULT_SEED,
    iso_trials: int = globals.ISO_TRIALS,
    fitting_trials: int = globals.FITTING_TRIALS,
) -> tuple:
    """tensor_closure of the realized V1 with the unitriangular Sylow subgroup."""
    m = realize_on_matrices(p, n)
    return algtest_closure.tensor_closure(
        m,
        sylow(n),
        budgets=budgets,
        seed=seed,
        iso_trials=iso_trials,
        fitting_trials=fitting_trials,
    )


def power_words(p: int, n: int, power: int) -> typing.Dict[words.TiltingWord, int]:
    """Tilting words of the power-th tensor power of V1 with multiplicities."""
    states = {initial_state(n): 1}
    for _ in range(power - 1):
        following = {}
        for s, count in states.items():
            for t, c in tensor_v1(s, p).items():
                following[t] = following.get(t, 0) + count * c
        states = following
    result = {}
    for s, count in states.items():
        for word, c in state_words(s, p):
            result[word] = result.get(word, 0) + count * c
    return result


def _subset_sums(counts: typing.Dict[int, int], limit: int) -> typing.Set[int]:
    """Sums of sub-multisets of counts (dimension -> multiplicity) up to limit."""
    sums = {0}
    for dim, count in counts.items():
        for _ in range(min(count, limit // dim)):
            sums |= {s + dim for s in sums if s + dim <= limit}
    return sums


class _Undecided(Exception):
    pass


def _assignable(
    items: typing.List[int], bins: typing.List[int], q: int, node_budget: int
) -> typing.Optional[bool]:
    """Whether items (matrix class dimensions) can be split among bins (word
    dimensions) so that every bin keeps a non-negative multiple of q for its
    projective part; None when the search ran out of nodes."""
    items = sorted(items, reverse=True)
    excess = sum(bins) - sum(items)
    if excess < 0 or excess % q:
        return False
    suffix = [0] * (len(items) + 1)
    for i in range(len(items) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + items[i]
    failed = set()
    nodes = [0]

    def search(i: int, residuals: typing.Tuple[int, ...]) -> bool:
        if (i, residuals) in failed:
            return False
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise _Undecided()
        if i == len(items):
            return all(r % q == 0 for r in residuals)
        if sum(r % q for r in residuals) > suffix[i]:
            failed.add((i, residuals))
            return False
        d = items[i]
        for r in sorted(set(residuals), reverse=True):
            if r < d:
                break
            rest = list(residuals)
            rest.remove(r)
            rest.append(r - d)
            if search(i + 1, tuple(sorted(rest))):
                return True
        failed.add((i, residuals))
        return False

    try:
        return search(0, tuple(sorted(bins)))
    except _Undecided:
        return None


def crosscheck(
    symbolic: V1Closure,
    state: algtest_closure.ClosureState,
    node_budget: int = globals.CROSSCHECK_NODE_BUDGET,
) -> dict:
    """Dimension bookkeeping between the symbolic and the matrix closure.

    For every tensor power V1^k reached by the matrix closure, the restriction
    of each tilting word of V1^k splits into matrix classes plus projectives,
    whose dimensions are multiples of q. So:

    - every matrix class first met in V1^k fits into one word w of V1^k,
      w - d being covered by other classes of V1^k (each copy used once) and
      a multiple of q; a class that fits nowhere is unmatched;
    - the whole non-projective part of V1^k can be split among the words of
      V1^k in that way.
    """
    p, n, q = symbolic.p, symbolic.n, symbolic.q
    registry_dims = state.dims()
    depths = [entry.depth for entry in state.registry]
    last = max([state.depth] + depths)
    powers = []
    word_dims = {}
    matrix_counts = {}
    for k in range(1, last + 1):
        counted = power_words(p, n, k)
        word_dims[k] = [w.dim for w, c in counted.items() for _ in range(c)]
        matrix_counts[k] = state.power_classes(k)
        if matrix_counts[k] is None:
            assigned = None
        else:
            items = [registry_dims[i] for i, c in matrix_counts[k].items() for _ in range(c)]
            assigned = _assignable(items, word_dims[k], q, node_budget)
        powers.append(
            {
                "power": k,
                "word_dim": 2 ** k,
                "matrix_dim": None
                if matrix_counts[k] is None
                else sum(registry_dims[i] * c for i, c in matrix_counts[k].items()),
                "assigned": assigned,
            }
        )
        logger.debug("crosscheck power %d: assigned %s", k, assigned)

    unmatched = []
    for index, d in enumerate(registry_dims):
        k = depths[index]
        counts = dict(matrix_counts.get(k) or {})
        if counts.get(index):
            counts[index] -= 1
        rest = {}
        for i, c in counts.items():
            rest[registry_dims[i]] = rest.get(registry_dims[i], 0) + c
        candidates = sorted(set(word_dims.get(k, [])))
        sums = _subset_sums(rest, max(candidates, default=0))
        fits = False
        for w in candidates:
            slack = w - d
            if slack >= 0 and any((slack - s) % q == 0 for s in sums if s <= slack):
                fits = True
                break
        if not fits:
            unmatched.append({"class": index, "dim": d, "power": k})

    passed = (
        state.closed
        and symbolic.closed
        and not unmatched
        and all(row["assigned"] is True for row in powers)
    )
    logger.info(
        "crosscheck: %d matrix classes over %d powers, %d unmatched",
        len(registry_dims),
        len(powers),
        len(unmatched),
    )
    return {
        "matrix_classes": len(registry_dims),
        "matrix_dims": list(registry_dims),
        "matrix_closed": state.closed,
        "symbolic_classes": len(symbolic.classes),
        "word_dims": sorted(set(w.dim for w in symbolic.classes)),
        "powers": powers,
        "unmatched": unmatched,
        "passed": passed,
    }
