"""Theorem-backed shortcuts to algebraicity verdicts."""

import logging
import typing

import numpy as np

from algmod.algtest import closure
from algmod.algtest import verdicts
from algmod.exactla import field as field_module
from algmod.exactla import matrix
from algmod.globals import errors
from algmod.globals import globals
from algmod.homalg import pgroups
from algmod.homalg import syzygy
from algmod.meataxe import decompose
from algmod.meataxe import isotest
from algmod.meataxe import spin
from algmod.modrep import groups
from algmod.modrep import modules

logger = logging.getLogger(__name__)


# --------------------------------------------------------- 2-group restriction


def _element_order(enumeration: groups.Enumeration, x: int) -> int:
    order, y = 1, x
    while y != 0:
        y = enumeration.multiply(y, x)
        order += 1
    return order


def is_dihedral(enumeration: groups.Enumeration) -> bool:
    """Order 2^a >= 4 with a cyclic subgroup of index 2 inverted by an
    involution outside of it (Klein-four included)."""
    size = enumeration.size
    if size < 4 or groups.prime_power_exponent(size, 2) is None:
        return False
    for r in range(1, size):
        if _element_order(enumeration, r) != size // 2:
            continue
        rotations = enumeration.closure([r])
        inverse = enumeration.inverse(r)
        for s in range(1, size):
            if s in rotations or enumeration.multiply(s, s) != 0:
                continue
            if enumeration.multiply(enumeration.multiply(s, r), s) == inverse:
                return True
    return False


def _restriction_group(m: modules.ModuleRep, q: groups.SubgroupSpec, dihedral: bool):
    if m.field.p != 2:
        msg = "Klein-four tests need characteristic 2, not {}.".format(m.field.p)
        raise errors.NotKleinFour(msg)
    restricted = modules.restrict(m, q)
    enumeration = restricted.group.enumerate()
    if dihedral:
        if not is_dihedral(enumeration):
            msg = "Subgroup of order {} is not dihedral.".format(enumeration.size)
            raise errors.NotKleinFour(msg)
    else:
        involutions = all(
            enumeration.multiply(x, x) == 0 for x in range(enumeration.size)
        )
        if enumeration.size != 4 or not involutions:
            msg = "Subgroup of order {} is no Klein-four group.".format(enumeration.size)
            raise errors.NotKleinFour(msg)
    return restricted


def v4_test(
    m: modules.ModuleRep,
    q: groups.SubgroupSpec,
    dihedral: bool = False,
    seed=globals.DEFAULT_SEED,
    iso_trials: int = globals.ISO_TRIALS,
    fitting_trials: int = globals.FITTING_TRIALS,
) -> verdicts.Verdict:
    """Restrict to q and look for odd-dimensional summands other than k.

    Odd summands are matched against Omega^i(k) for |i| <= (dim - 1) / 2.
    """
    rng = field_module.make_rng(seed)
    restricted = _restriction_group(m, q, dihedral)
    decomposition = decompose.decompose(restricted, rng, fitting_trials, iso_trials, True)
    odd = [s for s in decomposition if s.dim % 2 == 1 and s.dim > 1]
    if not odd:
        return verdicts.Verdict(
            verdicts.INCONCLUSIVE,
            verdicts.V4_NO_ODD_SUMMAND,
            witness={"summands": decomposition.dims()},
        )

    pims = pgroups.pims_for_pgroup(restricted.group, m.field)
    k = modules.trivial(restricted.group, m.field)
    shifted = {}

    def omega_of_k(i: int) -> modules.ModuleRep:
        if i not in shifted:
            shifted[i] = syzygy.omega(k, i, pims, pgroup=True, seed=rng).module
        return shifted[i]

    found_shifts = []
    for summand in odd:
        identified = None
        reach = (summand.dim - 1) // 2
        for i in sorted(range(-reach, reach + 1), key=lambda i: (abs(i), -i)):
            if i == 0:
                continue
            candidate = omega_of_k(i)
            if candidate.dim != summand.dim:
                continue
            try:
                found = isotest.iso_test(candidate, summand.module, iso_trials, rng, True)
            except errors.IsoUnknown:
                continue
            if found is not None:
                identified = i
                break
        if identified is None:
            logger.warning(
                "odd summand of dimension %d is not an Omega shift of k", summand.dim
            )
        else:
            logger.info("odd summand of dimension %d, Omega shift %d", summand.dim, identified)
        found_shifts.append(
            {"dim": summand.dim, "multiplicity": summand.multiplicity, "omega_shift": identified}
        )
    return verdicts.Verdict(
        verdicts.NON_ALGEBRAIC_EVIDENCE,
        verdicts.V4_ODD_SUMMAND,
        witness={
            "summand_dim": found_shifts[0]["dim"],
            "omega_shift": found_shifts[0]["omega_shift"],
            "odd_summands": found_shifts,
            "unidentified": [s["dim"] for s in found_shifts if s["omega_shift"] is None],
            "summands": decomposition.dims(),
        },
    )


# ------------------------------------------------------------ square of m


def mplus_check(
    m: modules.ModuleRep,
    known_algebraic: typing.Sequence[modules.ModuleRep] = (),
    sylow: groups.SubgroupSpec = None,
    budgets: closure.Budgets = closure.Budgets(),
    seed=globals.DEFAULT_SEED,
    iso_trials: int = globals.ISO_TRIALS,
    fitting_trials: int = globals.FITTING_TRIALS,
    pgroup: bool = False,
) -> typing.Optional[verdicts.Verdict]:
    """Algebraic when m (x) m = m + X and every class in X is projective,
    known to be algebraic or closes within the budgets."""
    if m.dim == 1:
        return verdicts.Verdict(verdicts.ALGEBRAIC, verdicts.ONE_DIMENSIONAL)
    if sylow is None:
        sylow = groups.SubgroupSpec.generators(m.group.ngens)
    rng = field_module.make_rng(seed)
    square = decompose.decompose(
        modules.tensor(m, m), rng, fitting_trials, iso_trials, pgroup
    )

    def iso(a: modules.ModuleRep, b: modules.ModuleRep) -> bool:
        try:
            return isotest.iso_test(a, b, iso_trials, rng, pgroup) is not None
        except errors.IsoUnknown:
            return False

    rest = []
    found_m = False
    for summand in square:
        count = summand.multiplicity
        if not found_m and summand.dim == m.dim and iso(m, summand.module):
            found_m = True
            count -= 1
        if count:
            rest.append(summand.module)
    if not found_m:
        return None

    for x in rest:
        if isotest.is_projective(x, sylow):
            continue
        if any(a.dim == x.dim and iso(a, x) for a in known_algebraic):
            continue
        _, verdict = closure.tensor_closure(
            x, sylow, budgets, rng, iso_trials, fitting_trials, pgroup
        )
        if not verdict.is_algebraic:
            logger.debug("summand of dimension %d does not close", x.dim)
            return None
    return verdicts.Verdict(
        verdicts.ALGEBRAIC,
        verdicts.MPLUS,
        witness={"square": square.dims()},
    )


class SquareSplit(typing.NamedTuple):
    sym: modules.ModuleRep
    ext: modules.ModuleRep
    # m (x) m = S^2 + L^2 was certified; None when the test was Unknown
    splits: typing.Optional[bool]


def square_split(
    m: modules.ModuleRep,
    seed=globals.DEFAULT_SEED,
    iso_trials: int = globals.ISO_TRIALS,
    pgroup: bool = False,
) -> SquareSplit:
    """S^2(m) and L^2(m); p = 2 raises ExponentTooLarge."""
    sym = modules.sym_power(m, 2)
    ext = modules.ext_square(m)
    try:
        found = isotest.iso_test(
            modules.tensor(m, m), modules.direct_sum(sym, ext), iso_trials, seed, pgroup
        )
    except errors.IsoUnknown:
        return SquareSplit(sym, ext, None)
    return SquareSplit(sym, ext, found is not None)


def square_transfer(
    split: SquareSplit,
    sym_verdict: verdicts.Verdict = None,
    ext_verdict: verdicts.Verdict = None,
) -> typing.Optional[verdicts.Verdict]:
    """Verdict for m from verdicts on its symmetric and exterior square."""
    if not split.splits:
        return None
    for name, verdict in (("sym", sym_verdict), ("ext", ext_verdict)):
        if verdict is not None and verdict.is_non_algebraic:
            return verdicts.Verdict(
                verdicts.NON_ALGEBRAIC_EVIDENCE,
                verdicts.SQUARE_TRANSFER,
                witness={"from": name, "reason": verdict.reason},
                proof_backed=verdict.proof_backed,
            )
    return None


def square_inherit(
    split: SquareSplit, m_verdict: verdicts.Verdict
) -> typing.Tuple[typing.Optional[verdicts.Verdict], typing.Optional[verdicts.Verdict]]:
    """Verdicts for (S^2(m), L^2(m)) from an Algebraic verdict on m."""
    if not split.splits or not m_verdict.is_algebraic:
        return None, None
    inherited = verdicts.Verdict(
        verdicts.ALGEBRAIC,
        verdicts.SQUARE_TRANSFER,
        witness={"from": "m", "reason": m_verdict.reason},
    )
    return inherited, inherited


# -------------------------------------------------------------- trivial source


def _orbit_modules(perm: modules.ModuleRep) -> typing.List[modules.ModuleRep]:
    """Transitive permutation modules, one per orbit of a permutation module."""
    images = []
    for a in perm.action:
        entries = a.entries
        if not (np.count_nonzero(entries, axis=1) == 1).all() or (entries > 1).any():
            raise errors.NoRealization("Action matrices are no permutation matrices.")
        images.append(np.argmax(entries, axis=1))
    seen = np.zeros(perm.dim, dtype=bool)
    result = []
    for start in range(perm.dim):
        if seen[start]:
            continue
        orbit = {start}
        queue = [start]
        while queue:
            i = queue.pop()
            for image in images:
                j = int(image[i])
                if j not in orbit:
                    orbit.add(j)
                    queue.append(j)
        orbit = sorted(orbit)
        seen[orbit] = True
        action = [matrix.Matrix(perm.field, a.entries[np.ix_(orbit, orbit)]) for a in perm.action]
        result.append(
            modules.ModuleRep(perm.group, action, check=False, field=perm.field, dim=len(orbit))
        )
    return result


def trivial_source_rule(
    m: modules.ModuleRep,
    sylow: groups.SubgroupSpec,
    permutation: modules.ModuleRep,
    seed=globals.DEFAULT_SEED,
    iso_trials: int = globals.ISO_TRIALS,
    fitting_trials: int = globals.FITTING_TRIALS,
) -> typing.Optional[verdicts.Verdict]:
    """Algebraic when every indecomposable summand of m restricted to the
    Sylow subgroup is one of the transitive permutation modules cut out by
    the orbits of that subgroup on the basis of permutation.

    None when a summand matches no orbit module.
    """
    if m.group != permutation.group:
        raise errors.GroupMismatch("The permutation module belongs to another group.")
    rng = field_module.make_rng(seed)
    orbits = _orbit_modules(modules.restrict(permutation, sylow))
    restricted = modules.restrict(m, sylow)
    decomposition = decompose.decompose(restricted, rng, fitting_trials, iso_trials, True)
    for summand in decomposition:
        matched = False
        for orbit in orbits:
            if orbit.dim != summand.dim:
                continue
            try:
                found = isotest.iso_test(orbit, summand.module, iso_trials, rng, True)
            except errors.IsoUnknown:
                continue
            if found is not None:
                matched = True
                break
        if not matched:
            logger.debug("summand of dimension %d is no orbit module", summand.dim)
            return None
    return verdicts.Verdict(
        verdicts.ALGEBRAIC,
        verdicts.TRIVIAL_SOURCE,
        witness={
            "sylow_order": restricted.group.order(),
            "summands": decomposition.dims(),
            "orbits": sorted(orbit.dim for orbit in orbits),
        },
    )


# ------------------------------------------------------------- p-group rules


def _odd_noncyclic(group: groups.GroupSpec, p: int) -> bool:
    enumeration = group.enumerate()
    if p == 2 or groups.prime_power_exponent(enumeration.size, p) is None:
        return False
    return all(
        _element_order(enumeration, x) < enumeration.size
        for x in range(enumeration.size)
    )


def heart_rules(
    m: modules.ModuleRep,
    group: groups.GroupSpec,
    tracked: typing.Sequence[typing.Tuple[modules.ModuleRep, bool]] = (),
    seed=globals.DEFAULT_SEED,
    iso_trials: int = globals.ISO_TRIALS,
    fitting_trials: int = globals.FITTING_TRIALS,
) -> typing.Optional[verdicts.Verdict]:
    """Rules for the heart E = rad(kP)/soc(kP), p odd, P non-cyclic.

    tracked: modules N with a flag telling whether N is known to be
        algebraic; m is flagged when it is E, E (x) N for p not dividing
        dim N, or the unique non-projective p'-dimensional summand of
        E (x) N with N algebraic.
    """
    field = m.field
    p = field.p
    if not _odd_noncyclic(group, p):
        logger.debug("heart rules need an odd non-cyclic p-group")
        return None
    rng = field_module.make_rng(seed)
    sylow = groups.SubgroupSpec.generators(group.ngens)
    heart = pgroups.heart(group, field)

    def iso(a: modules.ModuleRep, b: modules.ModuleRep) -> bool:
        if a.dim != b.dim:
            return False
        try:
            return isotest.iso_test(a, b, iso_trials, rng, True) is not None
        except errors.IsoUnknown:
            return False

    if iso(heart, m):
        return verdicts.Verdict(
            verdicts.NON_ALGEBRAIC_EVIDENCE, verdicts.HEART, witness={"dim": m.dim}
        )
    for index, (n, algebraic) in enumerate(tracked):
        if n.dim % p == 0:
            continue
        product = modules.tensor(heart, n)
        if iso(product, m):
            return verdicts.Verdict(
                verdicts.NON_ALGEBRAIC_EVIDENCE,
                verdicts.HEART_TENSOR,
                witness={"tracked": index, "dim": m.dim},
            )
        if not algebraic:
            continue
        coprime = [
            s
            for s in decompose.decompose(product, rng, fitting_trials, iso_trials, True)
            if s.dim % p and not isotest.is_projective(s.module, sylow)
        ]
        if len(coprime) == 1 and coprime[0].multiplicity == 1 and iso(coprime[0].module, m):
            return verdicts.Verdict(
                verdicts.NON_ALGEBRAIC_EVIDENCE,
                verdicts.HEART_TENSOR_SUMMAND,
                witness={"tracked": index, "dim": m.dim},
            )
    return None


def small_periodic_rule(
    m: modules.ModuleRep,
    pims: syzygy.Pims = None,
    sylow: groups.SubgroupSpec = None,
    seed=globals.DEFAULT_SEED,
    window: int = globals.PROBE_WINDOW,
    iso_trials: int = globals.ISO_TRIALS,
) -> typing.Optional[verdicts.Verdict]:
    """Periodic iff algebraic for absolutely indecomposable modules of
    dimension 3 or 6 for C3 x C3 over F3."""
    field = m.field
    if field.order != 3 or m.dim not in (3, 6):
        return None
    enumeration = m.group.enumerate()
    if enumeration.size != 9 or not _odd_noncyclic(m.group, 3):
        return None
    rng = field_module.make_rng(seed)
    basis = spin.commutant_arrays(field, [a.entries for a in m.action], m.dim)
    top = 1
    if len(basis) > 1:
        top = len(basis) - len(decompose.algebra_radical(field, basis, m.dim, rng))
    if top != 1:
        logger.debug("End(m)/J has dimension %d", top)
        return None
    if pims is None:
        pims = pgroups.pims_for_pgroup(m.group, field)
    probe = syzygy.periodicity_probe(m, pims, sylow, window, True, rng, iso_trials)
    if probe.is_periodic:
        return verdicts.Verdict(
            verdicts.ALGEBRAIC, verdicts.SMALL_PERIODIC, witness={"probe": probe.to_dict()}
        )
    if probe.is_non_periodic:
        return verdicts.Verdict(
            verdicts.NON_ALGEBRAIC_EVIDENCE,
            verdicts.SMALL_NON_PERIODIC,
            witness={"probe": probe.to_dict()},
        )
    return None
