"""JSON verdict reports.

Two runs with the same input, seed and budgets produce the same report apart
from the ``timings`` entry.
"""

import json
import typing

import algmod
from algmod.algtest import closure
from algmod.algtest import verdicts


def build(
    input_: typing.Any,
    seed: int,
    budgets: typing.Union[closure.Budgets, dict, None],
    verdict: typing.Optional[verdicts.Verdict],
    state: closure.ClosureState = None,
    timings: dict = None,
    **extra
) -> dict:
    if isinstance(budgets, closure.Budgets):
        budgets = budgets.to_dict()
    report = {
        "version": algmod.__version__,
        "input": input_,
        "seed": seed,
        "budgets": budgets,
        "verdict": verdict.kind if verdict else None,
        "reason": verdict.reason if verdict else None,
        "citation": verdict.citation if verdict else None,
        "proof_backed": verdict.proof_backed if verdict else None,
        "witness": verdict.witness if verdict else None,
        "registry": [],
        "events": [],
        "timings": dict(timings or {}),
    }
    if state is not None:
        report["registry"] = [entry.to_dict() for entry in state.registry]
        report["events"] = list(state.events)
        report["closure"] = {
            "closed": state.closed,
            "exceeded": state.exceeded,
            "depth": state.depth,
            "growth": list(state.growth),
        }
    report.update(extra)
    return report


def reproducible(report: dict) -> dict:
    """The report without the fields that may differ between runs."""
    return {key: value for key, value in report.items() if key != "timings"}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
