"""Breadth-first computation of the indecomposable summands of tensor powers.

Classes of summands of M, M (x) M, ... are collected in a registry. Every
class is multiplied by M once; the summands of the product are merged into
the registry in a canonical order (dimension, then fingerprint, then
isomorphism tests against the registry in insertion order), so the result
does not depend on how the products were scheduled. Projective summands are
dropped since projectives form an ideal of the Green ring.
"""

import logging
import typing

from algmod.algtest import verdicts
from algmod.exactla import field as field_module
from algmod.globals import errors
from algmod.globals import globals
from algmod.homalg import syzygy
from algmod.meataxe import decompose
from algmod.meataxe import isotest
from algmod.meataxe import series
from algmod.modrep import groups
from algmod.modrep import modules

logger = logging.getLogger(__name__)


class Budgets(typing.NamedTuple):
    max_classes: int = globals.MAX_CLASSES
    max_dim: int = globals.MAX_DIM
    max_depth: int = globals.MAX_DEPTH

    def to_dict(self) -> dict:
        return dict(self._asdict())


class RegistryEntry(object):
    def __init__(
        self, module: modules.ModuleRep, fingerprint: series.Fingerprint, depth: int
    ) -> None:
        self.module = module
        self.fingerprint = fingerprint
        self.depth = depth

    @property
    def dim(self) -> int:
        return self.module.dim

    def __repr__(self) -> str:
        return "RegistryEntry(dim={}, depth={})".format(self.dim, self.depth)

    def to_dict(self) -> dict:
        return {"dim": self.dim, "fingerprint": self.fingerprint.to_dict(), "depth": self.depth}


class ClosureState(object):
    """Registry, frontier and bookkeeping of a tensor closure.

    seeds: the classes of the non-projective summands of M with their
        multiplicities.
    products: for every class that was multiplied by M, the classes of the
        non-projective summands of the product with their multiplicities.
    growth: per depth the largest dimension of a non-projective summand.
    exceeded: the name of the exhausted budget, None while within budget.
    verified: result of the fixed-point sweep of a closed registry, None
        while not swept.
    """

    def __init__(self, budgets: Budgets, pgroup: bool) -> None:
        self.budgets = budgets
        self.pgroup = pgroup
        self.registry = []
        self.frontier = []
        self.events = []
        self.growth = []
        self.seeds = []
        self.products = {}
        self.exceeded = None
        self.verified = None
        self.depth = 0

    @property
    def closed(self) -> bool:
        return self.exceeded is None and not self.frontier

    def __len__(self) -> int:
        return len(self.registry)

    def class_modules(self) -> typing.List[modules.ModuleRep]:
        return [entry.module for entry in self.registry]

    def dims(self) -> typing.List[int]:
        return [entry.dim for entry in self.registry]

    def lookup(
        self,
        module: modules.ModuleRep,
        fingerprint: series.Fingerprint,
        rng,
        iso_trials: int,
    ) -> typing.Optional[int]:
        for index, entry in enumerate(self.registry):
            if entry.fingerprint != fingerprint:
                continue
            try:
                found = isotest.iso_test(
                    entry.module,
                    module,
                    iso_trials,
                    rng,
                    self.pgroup,
                    (entry.fingerprint, fingerprint),
                )
            except errors.IsoUnknown as error:
                self.events.append("class {}: {}".format(index, error))
                continue
            if found is not None:
                return index
        return None

    def add(self, module: modules.ModuleRep, fingerprint: series.Fingerprint, depth: int) -> int:
        self.registry.append(RegistryEntry(module, fingerprint, depth))
        return len(self.registry) - 1

    def power_classes(self, power: int) -> typing.Optional[typing.Dict[int, int]]:
        """Multiplicities of the classes in the non-projective part of the
        power-th tensor power of M; None when a needed product is missing."""
        counts = {}
        for target, count in self.seeds:
            counts[target] = counts.get(target, 0) + count
        for _ in range(power - 1):
            following = {}
            for index, count in counts.items():
                if index not in self.products:
                    return None
                for target, c in self.products[index]:
                    following[target] = following.get(target, 0) + count * c
            counts = following
        return counts

    def to_dict(self) -> dict:
        return {
            "budgets": self.budgets.to_dict(),
            "closed": self.closed,
            "exceeded": self.exceeded,
            "verified": self.verified,
            "depth": self.depth,
            "registry": [entry.to_dict() for entry in self.registry],
            "growth": list(self.growth),
            "seeds": [[target, count] for target, count in self.seeds],
            "products": {
                str(index): [[target, count] for target, count in targets]
                for index, targets in sorted(self.products.items())
            },
            "events": list(self.events),
        }


def _classes(
    module: modules.ModuleRep,
    state: ClosureState,
    sylow: groups.SubgroupSpec,
    rng,
    fitting_trials: int,
    iso_trials: int,
) -> typing.List[typing.Tuple[modules.ModuleRep, series.Fingerprint, int]]:
    """Non-projective summand classes of module with multiplicities."""
    decomposition = decompose.decompose(module, rng, fitting_trials, iso_trials, state.pgroup)
    state.events.extend(decomposition.events)
    return [
        (summand.module, summand.fingerprint, summand.multiplicity)
        for summand in decomposition
        if not isotest.is_projective(summand.module, sylow)
    ]


def _merge(
    candidates: typing.List[tuple],
    state: ClosureState,
    depth: int,
    rng,
    iso_trials: int,
) -> typing.Tuple[typing.List[int], typing.List[int]]:
    """(registry index of every candidate, indices added)."""
    order = sorted(
        range(len(candidates)),
        key=lambda n: (candidates[n][0].dim, candidates[n][1]),
    )
    indices = [0] * len(candidates)
    added = []
    for n in order:
        module, fingerprint = candidates[n][:2]
        index = state.lookup(module, fingerprint, rng, iso_trials)
        if index is None:
            index = state.add(module, fingerprint, depth)
            added.append(index)
        indices[n] = index
    return indices, added


def tensor_closure(
    m: modules.ModuleRep,
    sylow: groups.SubgroupSpec = None,
    budgets: Budgets = Budgets(),
    seed=globals.DEFAULT_SEED,
    iso_trials: int = globals.ISO_TRIALS,
    fitting_trials: int = globals.FITTING_TRIALS,
    pgroup: bool = False,
    verify: bool = True,
) -> typing.Tuple[ClosureState, verdicts.Verdict]:
    """Classes of indecomposable non-projective summands of all tensor powers
    of m, within the budgets.

    sylow: Sylow p-subgroup for the projectivity checks; the whole group
        when omitted.
    verify: sweep a closed registry once more before calling it Algebraic.
    """
    if sylow is None:
        sylow = groups.SubgroupSpec.generators(m.group.ngens)
    rng = field_module.make_rng(seed)
    state = ClosureState(budgets, pgroup)

    state.depth = 1
    seeds = _classes(m, state, sylow, rng, fitting_trials, iso_trials)
    targets, state.frontier = _merge(seeds, state, 1, rng, iso_trials)
    state.seeds = [(target, c[2]) for target, c in zip(targets, seeds)]
    state.growth.append(max((c[0].dim for c in seeds), default=0))

    while state.frontier:
        if state.depth >= budgets.max_depth:
            state.exceeded = "max_depth"
            break
        largest = max(state.registry[index].dim for index in state.frontier) * m.dim
        if largest > budgets.max_dim:
            state.exceeded = "max_dim"
            break
        candidates = []
        owners = []
        for index in state.frontier:
            product = modules.tensor(state.registry[index].module, m)
            for candidate in _classes(product, state, sylow, rng, fitting_trials, iso_trials):
                candidates.append(candidate)
                owners.append(index)
        state.depth += 1
        targets, added = _merge(candidates, state, state.depth, rng, iso_trials)
        for index in state.frontier:
            state.products[index] = []
        for owner, target, candidate in zip(owners, targets, candidates):
            state.products[owner].append((target, candidate[2]))
        state.growth.append(max((c[0].dim for c in candidates), default=0))
        state.frontier = added
        logger.debug(
            "closure depth %d: %d classes, %d new, largest summand %d",
            state.depth,
            len(state.registry),
            len(added),
            state.growth[-1],
        )
        if len(state.registry) > budgets.max_classes:
            state.exceeded = "max_classes"
            break

    if state.closed and verify:
        state.verified = verify_fixed_point(
            state, m, sylow, rng, iso_trials=iso_trials, fitting_trials=fitting_trials
        )

    if state.closed and state.verified is False:
        logger.warning("closure closed but the verification sweep left the registry")
        verdict = verdicts.Verdict(
            verdicts.INCONCLUSIVE,
            verdicts.UNVERIFIED,
            witness={"classes": len(state.registry), "events": list(state.events)},
        )
    elif state.closed:
        logger.info("closure closed with %d classes", len(state.registry))
        verdict = verdicts.Verdict(
            verdicts.ALGEBRAIC,
            verdicts.CLOSED,
            witness={"classes": len(state.registry), "dims": state.dims()},
        )
    else:
        logger.info(
            "closure stopped by %s at depth %d with %d classes",
            state.exceeded,
            state.depth,
            len(state.registry),
        )
        verdict = verdicts.Verdict(
            verdicts.INCONCLUSIVE,
            verdicts.BUDGET,
            witness={"exceeded": state.exceeded, "growth": list(state.growth)},
        )
    return state, verdict


def verify_fixed_point(
    state: ClosureState,
    m: modules.ModuleRep,
    sylow: groups.SubgroupSpec = None,
    seed=globals.DEFAULT_SEED,
    iso_trials: int = globals.ISO_TRIALS,
    fitting_trials: int = globals.FITTING_TRIALS,
) -> bool:
    """Multiply every registered class by m once more and check that each
    non-projective summand of the product is already registered.

    The registry is left untouched; an Unknown isomorphism test counts as
    a failure.
    """
    if sylow is None:
        sylow = groups.SubgroupSpec.generators(m.group.ngens)
    rng = field_module.make_rng(seed)
    size = len(state.registry)
    for index in range(size):
        product = modules.tensor(state.registry[index].module, m)
        for module, fingerprint, _ in _classes(
            product, state, sylow, rng, fitting_trials, iso_trials
        ):
            found = state.lookup(module, fingerprint, rng, iso_trials)
            if found is None or found >= size:
                logger.debug("class %d (x) M leaves the registry", index)
                return False
    return True


def omega_shift_rule(
    state: ClosureState,
    pims: syzygy.Pims,
    sylow: groups.SubgroupSpec = None,
    shift_budget: int = globals.SHIFT_BUDGET,
    window: int = globals.PROBE_WINDOW,
    seed=globals.DEFAULT_SEED,
    iso_trials: int = globals.ISO_TRIALS,
    fitting_trials: int = globals.FITTING_TRIALS,
) -> typing.Optional[verdicts.Verdict]:
    """Evidence from a pair A, B = Omega^i(A) of registry classes with A
    certified non-periodic; None when no such pair is found."""
    if not state.registry:
        return None
    if sylow is None:
        sylow = groups.SubgroupSpec.generators(state.registry[0].module.group.ngens)
    rng = field_module.make_rng(seed)
    shifts = [s for i in range(1, shift_budget + 1) for s in (i, -i)]
    for a, entry in enumerate(state.registry):
        probe = None
        for shift in shifts:
            shifted = syzygy.omega(
                entry.module, shift, pims, sylow, state.pgroup, rng, fitting_trials
            ).module
            matches = [
                b for b, other in enumerate(state.registry) if other.dim == shifted.dim
            ]
            if not matches:
                continue
            fingerprint = series.fingerprint(shifted, state.pgroup, rng)
            hit = None
            for b in matches:
                other = state.registry[b]
                if other.fingerprint != fingerprint:
                    continue
                try:
                    found = isotest.iso_test(
                        other.module,
                        shifted,
                        iso_trials,
                        rng,
                        state.pgroup,
                        (other.fingerprint, fingerprint),
                    )
                except errors.IsoUnknown as error:
                    state.events.append("omega shift of class {}: {}".format(a, error))
                    continue
                if found is not None:
                    hit = b
                    break
            if hit is None:
                continue
            if hit == a:
                logger.debug("class %d is periodic (shift %d)", a, shift)
                break
            if probe is None:
                probe = syzygy.periodicity_probe(
                    entry.module, pims, sylow, window, state.pgroup, rng, iso_trials
                )
            if not probe.is_non_periodic:
                logger.debug("class %d: probe %s, no verdict", a, probe)
                break
            logger.info("Omega^%d of class %d is class %d", shift, a, hit)
            return verdicts.Verdict(
                verdicts.NON_ALGEBRAIC_EVIDENCE,
                verdicts.OMEGA_SHIFT,
                witness={
                    "class": a,
                    "shifted_class": hit,
                    "shift": shift,
                    "dims": [entry.dim, state.registry[hit].dim],
                    "probe": probe.to_dict(),
                },
            )
    return None
