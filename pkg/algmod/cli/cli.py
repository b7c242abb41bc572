"""Command line of algmod.

    algmod [command] [options]

Every command prints a text summary or, with ``--format json``, a report
that embeds the configuration, the seed, the package version and the
citation of any verdict. Exit status: 0 on success, 2 when a requested
verdict is Inconclusive, 1 on errors.
"""

import argparse
import logging
import os
import sys
import time
import typing

import natsort

import algmod
from algmod.algtest import closure
from algmod.algtest import report
from algmod.algtest import rules
from algmod.algtest import verdicts
from algmod.exactla import field as field_module
from algmod.globals import errors
from algmod.globals import globals
from algmod.homalg import pgroups
from algmod.homalg import syzygy
from algmod.meataxe import chop
from algmod.meataxe import decompose
from algmod.meataxe import isotest
from algmod.modrep import groups
from algmod.modrep import modules
from algmod.modrep import textio
from algmod.sl2tilt import closure as sl2_closure
from algmod.sl2tilt import tensor as sl2_tensor

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


class RunConfig(typing.NamedTuple):
    seed: int = globals.DEFAULT_SEED
    max_classes: int = globals.MAX_CLASSES
    max_dim: int = globals.MAX_DIM
    max_depth: int = globals.MAX_DEPTH
    iso_trials: int = globals.ISO_TRIALS
    fitting_trials: int = globals.FITTING_TRIALS
    format: str = "text"
    inputs: typing.Tuple[str, ...] = ()

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        inputs = tuple(
            getattr(args, name)
            for name in ("module", "other", "group", "words", "sylow")
            if getattr(args, name, None)
        )
        return cls(
            args.seed,
            args.budget_classes,
            args.budget_dim,
            args.budget_depth,
            args.budget_iso,
            args.budget_fitting,
            args.format,
            inputs,
        )

    @property
    def budgets(self) -> closure.Budgets:
        return closure.Budgets(self.max_classes, self.max_dim, self.max_depth)

    def to_dict(self) -> dict:
        result = dict(self._asdict())
        result["inputs"] = list(self.inputs)
        return result


class Outcome(typing.NamedTuple):
    text: str
    extra: dict
    verdict: typing.Optional[verdicts.Verdict] = None
    state: typing.Optional[closure.ClosureState] = None
    status: int = EXIT_OK


# ------------------------------------------------------------------ loading


def parse_field(text: str) -> field_module.FieldSpec:
    p, sep, k = text.partition("^")
    try:
        return field_module.field_default(int(p), int(k) if sep else 1)
    except ValueError:
        raise errors.ParseError("Malformed field '{}'; use p or p^k.".format(text))


def _with_path(path: str, loader: typing.Callable):
    try:
        return loader(path)
    except errors.ParseError as error:
        raise errors.ParseError("{}: {}".format(path, error))


def _load_module(path: str) -> modules.ModuleRep:
    return _with_path(path, textio.load_module)


def _load_subgroup(path: str, ngens: int) -> groups.SubgroupSpec:
    ambient, h = _with_path(path, textio.load_words)
    if ambient != ngens:
        msg = "{} refers to {} generators and not {}.".format(path, ambient, ngens)
        raise errors.GroupMismatch(msg)
    return h


def _sylow(args: argparse.Namespace, m: modules.ModuleRep) -> typing.Optional[groups.SubgroupSpec]:
    if getattr(args, "sylow", None):
        return _load_subgroup(args.sylow, m.group.ngens)
    return None


def _is_pgroup(group: groups.GroupSpec, p: int) -> bool:
    return groups.prime_power_exponent(group.order(), p) is not None


def _group_field(args: argparse.Namespace, group: groups.GroupSpec) -> field_module.FieldSpec:
    """--field, or the prime field of the smallest prime dividing |group|."""
    if args.field:
        return parse_field(args.field)
    order = group.order()
    for p in range(2, order + 1):
        if order % p == 0:
            return field_module.field_default(p)
    raise errors.NotPGroup("The trivial group has no characteristic.")


def _module_text(m: modules.ModuleRep) -> str:
    return textio.format_module(m).rstrip("\n")


def _module_extra(m: modules.ModuleRep) -> dict:
    return {"dim": m.dim, "field": m.field.header(), "module": textio.format_module(m)}


# ----------------------------------------------------------------- rep ...


def _rep(args: argparse.Namespace, config: RunConfig) -> Outcome:
    op = args.op
    if op == "perm":
        group = _with_path(args.group, textio.load_permutations)
        field = _group_field(args, group)
        if args.heart:
            result = modules.perm_heart(group, field)
        elif args.pairs:
            result = modules.pair_module(group, field)
        else:
            result = modules.perm_module(group, field)
        return Outcome(_module_text(result), _module_extra(result))

    m = _load_module(args.module)
    if op == "info":
        extra = {"dim": m.dim, "field": m.field.header(), "gens": m.group.ngens}
        if args.order:
            extra["order"] = m.group.order()
        text = "module over {}: dim {}, {} generators".format(
            m.field.header(), m.dim, m.group.ngens
        )
        if args.order:
            text += ", group order {}".format(extra["order"])
        return Outcome(text, extra)
    if op in ("tensor", "sum"):
        other = _load_module(args.other)
        other = modules.ModuleRep(m.group, other.action)
        result = modules.tensor(m, other) if op == "tensor" else modules.direct_sum(m, other)
    elif op == "dual":
        result = modules.dual(m)
    elif op == "restrict":
        result = modules.restrict(m, _load_subgroup(args.words, m.group.ngens))
    elif op == "sym":
        result = modules.sym_power(m, args.power)
    elif op == "ext":
        result = modules.ext_square(m)
    else:
        result = modules.frobenius_twist(m)
    return Outcome(_module_text(result), _module_extra(result))


# ------------------------------------------------------------ meataxe cmds


def _chop(args: argparse.Namespace, config: RunConfig) -> Outcome:
    m = _load_module(args.module)
    factors = chop.chop(m, config.seed)
    rows = [{"dim": f.dim, "multiplicity": count} for f, count in factors]
    text = "composition factors: " + ", ".join(
        "{}x{}".format(row["multiplicity"], row["dim"]) for row in rows
    )
    return Outcome(text, {"factors": rows})


def _decompose(args: argparse.Namespace, config: RunConfig) -> Outcome:
    m = _load_module(args.module)
    pgroup = _is_pgroup(m.group, m.field.p)
    result = decompose.decompose(
        m, config.seed, config.fitting_trials, config.iso_trials, pgroup
    )
    sylow = _sylow(args, m) or groups.SubgroupSpec.generators(m.group.ngens)
    rows = [
        {
            "dim": s.dim,
            "multiplicity": s.multiplicity,
            "projective": isotest.is_projective(s.module, sylow),
            "fingerprint": s.fingerprint.to_dict(),
        }
        for s in result
    ]
    lines = ["{}: dims {}".format(result, result.dims())]
    lines.extend(
        "  {}x dim {}{}".format(row["multiplicity"], row["dim"], " (projective)" if row["projective"] else "")
        for row in rows
    )
    return Outcome("\n".join(lines), {"summands": rows, "events": list(result.events)})


def _isotest(args: argparse.Namespace, config: RunConfig) -> Outcome:
    m = _load_module(args.module)
    other = _load_module(args.other)
    other = modules.ModuleRep(m.group, other.action)
    pgroup = _is_pgroup(m.group, m.field.p)
    try:
        found = isotest.iso_test(m, other, config.iso_trials, config.seed, pgroup)
        result = "isomorphic" if found is not None else "not isomorphic"
    except errors.IsoUnknown as error:
        logger.warning("%s", error)
        result = "unknown"
    return Outcome(result, {"result": result})


def _projtest(args: argparse.Namespace, config: RunConfig) -> Outcome:
    m = _load_module(args.module)
    sylow = _sylow(args, m) or groups.SubgroupSpec.generators(m.group.ngens)
    rank, order = isotest.norm_rank(m, sylow)
    projective = isotest.is_projective(m, sylow)
    text = "{}projective (norm rank {}, |Sylow| = {})".format(
        "" if projective else "not ", rank, order
    )
    return Outcome(text, {"projective": projective, "norm_rank": rank, "sylow_order": order})


# ------------------------------------------------------------- homalg cmds


def _pims(args: argparse.Namespace, m: modules.ModuleRep) -> typing.Tuple[syzygy.Pims, bool]:
    """Given PIM files (general group) or k and kP for a p-group."""
    if getattr(args, "pim", None):
        pims = []
        for path in args.pim:
            pim = _load_module(path)
            pim = modules.ModuleRep(m.group, pim.action)
            pims.append((syzygy.top(pim, seed=args.seed), pim))
        return pims, False
    if not _is_pgroup(m.group, m.field.p):
        raise errors.MissingPIM("Groups of order divisible by other primes need --pim files.")
    return pgroups.pims_for_pgroup(m.group, m.field), True


def _omega(args: argparse.Namespace, config: RunConfig) -> Outcome:
    m = _load_module(args.module)
    pims, pgroup = _pims(args, m)
    sylow = _sylow(args, m)
    result = syzygy.omega(m, args.n, pims, sylow, pgroup, config.seed, config.fitting_trials)
    extra = _module_extra(result.module)
    extra["projective_multiplicity_removed"] = result.projective_multiplicity_removed
    if args.probe:
        probe = syzygy.periodicity_probe(
            m, pims, sylow, args.window, pgroup, config.seed, config.iso_trials
        )
        extra["probe"] = probe.to_dict()
    text = "Omega^{}: dim {} ({} projective summands removed)".format(
        args.n, result.dim, result.projective_multiplicity_removed
    )
    if args.probe:
        text += "\nperiodicity: {} {}".format(probe.kind, list(probe.dims))
    return Outcome(text, extra)


def _jennings(args: argparse.Namespace, config: RunConfig) -> Outcome:
    group = _with_path(args.group, textio.load_permutations)
    field = _group_field(args, group)
    basis = pgroups.jennings(group, field)
    extra = {
        "layer_dims": list(basis.layer_dims),
        "loewy_length": basis.loewy_length,
        "representatives": [list(r) for r in basis.representatives],
    }
    text = "radical layers: {}".format(" ".join(str(d) for d in basis.layer_dims))
    if args.level:
        quotient = pgroups.quotient_mod_radpower(group, field, args.level)
        extra["quotient"] = _module_extra(quotient)
        text += "\nM_{}: dim {}".format(args.level, quotient.dim)
    return Outcome(text, extra)


def _heart(args: argparse.Namespace, config: RunConfig) -> Outcome:
    group = _with_path(args.group, textio.load_permutations)
    field = _group_field(args, group)
    e = pgroups.heart(group, field)
    self_dual = e.dim == 0 or isotest.iso_test(
        e, modules.dual(e), config.iso_trials, config.seed, True
    ) is not None
    parts = decompose.decompose(e, config.seed, config.fitting_trials, config.iso_trials, True)
    verdict = rules.heart_rules(
        e, group, (), config.seed, config.iso_trials, config.fitting_trials
    )
    extra = _module_extra(e)
    extra.update({"self_dual": self_dual, "summands": parts.dims()})
    text = "heart: dim {}, {}self-dual, summands {}".format(
        e.dim, "" if self_dual else "not ", parts.dims()
    )
    if verdict is None:
        verdict = verdicts.Verdict(verdicts.INCONCLUSIVE, verdicts.NO_RULE)
    return Outcome(text, extra, verdict)


# ------------------------------------------------------------ algtest cmds


def _closure(args: argparse.Namespace, config: RunConfig) -> Outcome:
    m = _load_module(args.module)
    sylow = _sylow(args, m)
    pgroup = _is_pgroup(m.group, m.field.p)
    state, verdict = closure.tensor_closure(
        m,
        sylow,
        config.budgets,
        config.seed,
        config.iso_trials,
        config.fitting_trials,
        pgroup,
    )
    extra = {"closure_verdict": verdict.to_dict()}
    lines = ["{} ({})".format(verdict.kind, verdict.reason)]
    lines.append("classes: {}".format(state.dims()))
    lines.append("growth: {}".format(" ".join(str(g) for g in state.growth)))
    if state.exceeded:
        lines.append("budget exhausted: {}".format(state.exceeded))
    if args.omega_shift and not state.closed:
        pims, _ = _pims(args, m)
        shifted = closure.omega_shift_rule(
            state,
            pims,
            sylow,
            args.shift_budget,
            globals.PROBE_WINDOW,
            config.seed,
            config.iso_trials,
            config.fitting_trials,
        )
        extra["omega_shift"] = shifted.to_dict() if shifted else None
        if shifted is not None:
            lines.append("{} ({}): {}".format(shifted.kind, shifted.reason, shifted.citation))
            verdict = shifted
    return Outcome("\n".join(lines), extra, verdict, state)


def _v4test(args: argparse.Namespace, config: RunConfig) -> Outcome:
    m = _load_module(args.module)
    q = _load_subgroup(args.words, m.group.ngens)
    verdict = rules.v4_test(
        m, q, args.dihedral, config.seed, config.iso_trials, config.fitting_trials
    )
    text = "{} ({}): {}".format(verdict.kind, verdict.reason, verdict.citation)
    return Outcome(text, {}, verdict)


def _automatic(m: modules.ModuleRep, config: RunConfig) -> typing.List[verdicts.Verdict]:
    fired = []
    if m.dim == 1:
        fired.append(verdicts.Verdict(verdicts.ALGEBRAIC, verdicts.ONE_DIMENSIONAL))
    elif m.dim == 2:
        fired.append(verdicts.Verdict(verdicts.ALGEBRAIC, verdicts.TWO_DIMENSIONAL))
    if _is_pgroup(m.group, m.field.p):
        for verdict in (
            rules.small_periodic_rule(m, seed=config.seed, iso_trials=config.iso_trials),
            rules.heart_rules(
                m, m.group, (), config.seed, config.iso_trials, config.fitting_trials
            ),
        ):
            if verdict is not None:
                fired.append(verdict)
    return fired


def _rules(args: argparse.Namespace, config: RunConfig) -> Outcome:
    registry = [rule._asdict() for rule in verdicts.rule_registry()]
    if not args.module:
        lines = ["{}: {} [{}]".format(r["predicate"], r["verdict"], r["citation"]) for r in registry]
        return Outcome("\n".join(lines), {"registry": registry})

    m = _load_module(args.module)
    fired = _automatic(m, config)
    extra = {"registry": registry}
    if not fired and m.field.p != 2:
        split = rules.square_split(m, config.seed, config.iso_trials)
        extra["square"] = {"sym": split.sym.dim, "ext": split.ext.dim, "splits": split.splits}
        transferred = rules.square_transfer(
            split,
            next(iter(_automatic(split.sym, config)), None),
            next(iter(_automatic(split.ext, config)), None),
        )
        if transferred is not None:
            fired.append(transferred)
    verdict = fired[0] if fired else verdicts.Verdict(verdicts.INCONCLUSIVE, verdicts.NO_RULE)
    extra["fired"] = [v.to_dict() for v in fired]
    lines = ["{} ({}): {}".format(v.kind, v.reason, v.citation) for v in fired]
    return Outcome("\n".join(lines) or "no rule applies", extra, verdict)


# ---------------------------------------------------------------- sl2 cmds


def _sl2(args: argparse.Namespace, config: RunConfig) -> Outcome:
    p = args.p
    if args.op == "tensor":
        if args.pair:
            lam, mu = max(args.pair), min(args.pair)
            result = sl2_tensor.fundamental_tensor(lam, mu, p)
            text = "L({}) ⊗ L({}) = {}".format(lam, mu, result.render())
            return Outcome(text, {"lambda": lam, "mu": mu, "sum": result.to_list(), "dim": result.dim})
        table = []
        for lam in range(p):
            for mu in range(lam + 1):
                result = sl2_tensor.fundamental_tensor(lam, mu, p)
                table.append({"lambda": lam, "mu": mu, "sum": result.render()})
        rewrite = sl2_tensor.threeistwo_rewrite(p) if p >= 3 else None
        discrepancies = sl2_tensor.rule_discrepancies(p)
        lines = ["L({}) ⊗ L({}) = {}".format(r["lambda"], r["mu"], r["sum"]) for r in table]
        if rewrite is not None:
            lines.append("T({0}) ⊗ L({1}) = {2}".format(p, p - 1, rewrite.tilting_form.render()))
        lines.append("pairs differing under the mu-parity rule: {}".format(len(discrepancies)))
        extra = {
            "table": table,
            "rewrite": rewrite.tilting_form.to_list() if rewrite else None,
            "discrepancies": discrepancies,
        }
        return Outcome("\n".join(lines), extra)
    if args.op == "realize":
        m = sl2_closure.realize_on_matrices(p, args.n)
        extra = _module_extra(m)
        extra["order"] = m.group.order()
        return Outcome("{}\n# group order {}".format(_module_text(m), extra["order"]), extra)

    symbolic = sl2_closure.v1_closure(p, args.n)
    extra = {"symbolic": symbolic.to_dict()}
    lines = [symbolic.render()]
    verdict = verdicts.Verdict(
        verdicts.ALGEBRAIC,
        verdicts.CLOSED,
        witness={"words": len(symbolic.classes), "states": len(symbolic.states)},
    )
    state = None
    status = EXIT_OK
    if args.crosscheck:
        state, matrix_verdict = sl2_closure.matrix_closure(
            p, args.n, config.budgets, config.seed, config.iso_trials, config.fitting_trials
        )
        check = sl2_closure.crosscheck(symbolic, state)
        extra["crosscheck"] = check
        lines.append(
            "matrix closure: {}, {} classes; crosscheck {}".format(
                matrix_verdict.kind, check["matrix_classes"], "pass" if check["passed"] else "FAIL"
            )
        )
        if not check["passed"]:
            status = EXIT_ERROR
    return Outcome("\n".join(lines), extra, verdict, state, status)


# ------------------------------------------------------------------ fixtures

_LOADERS = {
    ".mod": (textio.parse_module, textio.format_module),
    ".perm": (textio.parse_permutations, textio.format_permutations),
    ".words": (textio.parse_words, lambda parsed: textio.format_words(*parsed)),
}


def _fixtures(args: argparse.Namespace, config: RunConfig) -> Outcome:
    directory = args.dir or globals.FIXTURE_DIR
    rows = []
    for name in natsort.natsorted(os.listdir(directory)):
        extension = os.path.splitext(name)[1]
        if extension not in _LOADERS:
            continue
        parse, serialize = _LOADERS[extension]
        try:
            text = serialize(parse(textio.read_text(os.path.join(directory, name))))
            ok = serialize(parse(text)) == text
            error = None if ok else "serialization is no fixed point"
        except errors.AlgmodError as exception:
            ok, error = False, str(exception)
        rows.append({"file": name, "ok": ok, "error": error})
    lines = ["{:24} {}".format(r["file"], "ok" if r["ok"] else r["error"]) for r in rows]
    status = EXIT_OK if all(r["ok"] for r in rows) else EXIT_ERROR
    return Outcome("\n".join(lines), {"fixtures": rows}, status=status)


# -------------------------------------------------------------------- parser


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=globals.DEFAULT_SEED)
    parser.add_argument("--budget-classes", type=int, default=globals.MAX_CLASSES)
    parser.add_argument("--budget-dim", type=int, default=globals.MAX_DIM)
    parser.add_argument("--budget-depth", type=int, default=globals.MAX_DEPTH)
    parser.add_argument("--budget-iso", type=int, default=globals.ISO_TRIALS)
    parser.add_argument("--budget-fitting", type=int, default=globals.FITTING_TRIALS)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("-v", "--verbose", action="count", default=0)


def _command(subparsers, name: str, handler: typing.Callable, help_: str) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(name, help=help_)
    _common(parser)
    parser.set_defaults(handler=handler)
    return parser


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algmod", description="Algebraicity of modules for finite groups."
    )
    parser.add_argument("--version", action="version", version=algmod.__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    rep = commands.add_parser("rep", help="build and transform modules")
    rep_ops = rep.add_subparsers(dest="op", required=True)
    for op, help_ in (
        ("info", "dimension, field and generators"),
        ("tensor", "tensor product of two modules"),
        ("dual", "contragredient module"),
        ("sum", "direct sum of two modules"),
        ("restrict", "restriction along a subgroup words file"),
        ("sym", "symmetric power"),
        ("ext", "exterior square"),
        ("twist", "Frobenius twist"),
        ("perm", "permutation module of a permutation group"),
    ):
        sub = _command(rep_ops, op, _rep, help_)
        if op == "perm":
            sub.add_argument("--group", required=True)
            sub.add_argument("--field")
            sub.add_argument("--heart", action="store_true", help="augmentation modulo the all-ones vector")
            sub.add_argument("--pairs", action="store_true", help="action on unordered pairs")
            continue
        sub.add_argument("--module", required=True)
        if op in ("tensor", "sum"):
            sub.add_argument("--other", required=True)
        elif op == "restrict":
            sub.add_argument("--words", required=True)
        elif op == "sym":
            sub.add_argument("--power", type=int, required=True)
        elif op == "info":
            sub.add_argument("--order", action="store_true", help="enumerate the group")

    sub = _command(commands, "chop", _chop, "composition factors")
    sub.add_argument("--module", required=True)
    sub = _command(commands, "decompose", _decompose, "indecomposable summands")
    sub.add_argument("--module", required=True)
    sub.add_argument("--sylow")
    sub = _command(commands, "isotest", _isotest, "isomorphism test")
    sub.add_argument("--module", required=True)
    sub.add_argument("--other", required=True)
    sub = _command(commands, "projtest", _projtest, "projectivity test")
    sub.add_argument("--module", required=True)
    sub.add_argument("--sylow")

    sub = _command(commands, "omega", _omega, "Heller shifts")
    sub.add_argument("--module", required=True)
    sub.add_argument("-n", type=int, default=1)
    sub.add_argument("--sylow")
    sub.add_argument("--pim", action="append", help="projective indecomposable module file")
    sub.add_argument("--probe", action="store_true", help="run the periodicity probe")
    sub.add_argument("--window", type=int, default=globals.PROBE_WINDOW)
    sub = _command(commands, "heart", _heart, "heart of the regular module of a p-group")
    sub.add_argument("--group", required=True)
    sub.add_argument("--field")
    sub = _command(commands, "jennings", _jennings, "Jennings basis and radical layers")
    sub.add_argument("--group", required=True)
    sub.add_argument("--field")
    sub.add_argument("--level", type=int, help="also build kP / rad^level")

    sub = _command(commands, "closure", _closure, "tensor closure")
    sub.add_argument("--module", required=True)
    sub.add_argument("--sylow")
    sub.add_argument("--pim", action="append")
    sub.add_argument("--omega-shift", action="store_true", help="try the Omega shift rule")
    sub.add_argument("--shift-budget", type=int, default=globals.SHIFT_BUDGET)
    sub = _command(commands, "v4test", _v4test, "Klein-four restriction test")
    sub.add_argument("--module", required=True)
    sub.add_argument("--words", required=True)
    sub.add_argument("--dihedral", action="store_true")
    sub = _command(commands, "rules", _rules, "rule registry, or the rules firing on a module")
    sub.add_argument("--module")

    sl2 = commands.add_parser("sl2", help="tilting modules of SL2")
    sl2_ops = sl2.add_subparsers(dest="op", required=True)
    for op, help_ in (
        ("tensor", "tensor products of restricted simples"),
        ("closure", "symbolic closure of the natural module"),
        ("realize", "natural module on matrices"),
    ):
        sub = _command(sl2_ops, op, _sl2, help_)
        sub.add_argument("-p", type=int, required=True)
        if op == "tensor":
            sub.add_argument("--pair", type=int, nargs=2, metavar=("LAMBDA", "MU"))
        else:
            sub.add_argument("-n", type=int, required=True)
        if op == "closure":
            sub.add_argument("--crosscheck", action="store_true")

    sub = _command(commands, "fixtures", _fixtures, "check the shipped fixture files")
    sub.add_argument("--dir")
    return parser


def _configure_logging(verbose: int) -> None:
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr, format="%(name)s: %(message)s")


def run(argv: typing.Sequence[str] = None) -> typing.Tuple[int, typing.Optional[dict]]:
    """Exit status and report of one command."""
    args = make_parser().parse_args(argv)
    _configure_logging(args.verbose)
    config = RunConfig.from_args(args)
    started = time.perf_counter()
    try:
        outcome = args.handler(args, config)
    except (errors.AlgmodError, OSError) as error:
        sys.stderr.write("algmod: {}\n".format(error))
        return EXIT_ERROR, None
    timings = {"total": time.perf_counter() - started}

    command = args.command if not getattr(args, "op", None) else "{} {}".format(args.command, args.op)
    result = report.build(
        {"command": command, "files": list(config.inputs)},
        config.seed,
        config.budgets,
        outcome.verdict,
        outcome.state,
        timings,
        config=config.to_dict(),
        **outcome.extra
    )
    if config.format == "json":
        sys.stdout.write(report.dumps(result) + "\n")
    else:
        sys.stdout.write(outcome.text + "\n")

    status = outcome.status
    if status == EXIT_OK and outcome.verdict is not None and outcome.verdict.is_inconclusive:
        status = EXIT_INCONCLUSIVE
    return status, result


def main(argv: typing.Sequence[str] = None) -> int:
    status, _ = run(argv)
    return status


if __name__ == "__main__":
    sys.exit(main())
