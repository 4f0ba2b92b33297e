"""Text and structured rendering of evaluation results.

The table layout mirrors the usual presentation of fixpoint runs: atoms as
sorted rows, iterations as columns.  Interpretation traces start their columns
at the first application (the all-bottom start is omitted); pair traces keep
the starting pair as a ``bot_p`` column.  The final confirming iterate, equal
to its predecessor, is dropped from the columns.
"""

from __future__ import annotations

from .interpretations import ApproximationPair, Interpretation, interp_to_doc
from .semantics import FixpointTrace, SemanticsResult
from .semirings import SemiringSpec


def _cell(spec: SemiringSpec, value) -> str:
    if isinstance(value, ApproximationPair):
        raise TypeError("cells are per-atom values, not pairs")
    return spec.format_value(value)


def _columns(trace: FixpointTrace):
    steps = list(trace.steps)
    if trace.converged and len(steps) >= 2 and steps[-1] == steps[-2]:
        steps = steps[:-1]
    if not steps:
        return [], []
    if isinstance(steps[0], ApproximationPair):
        labels = ["bot_p"] + [f"A_{i}" for i in range(1, len(steps))]
        return labels, steps
    # interpretation chain: omit the bottom start
    steps = steps[1:] or steps
    labels = [f"I_{i}" for i in range(1, len(steps) + 1)]
    return labels, steps


def emit_table(spec: SemiringSpec, result: SemanticsResult) -> str:
    """Atoms-by-iterations table; pair values print as (lower,upper)."""
    if result.kind == "stable_set":
        return "\n".join(
            f"stable fixpoint {i + 1}{' (exact)' if pair.is_exact else ''}:\n"
            + emit_value(spec, pair)
            for i, pair in enumerate(result.value)
        ) or "no stable fixpoints\n"
    if result.kind == "stable_check":
        return ("stable fixpoint: yes\n" if result.value else "stable fixpoint: no\n")
    if result.trace.steps:
        labels, steps = _columns(result.trace)
    else:
        labels, steps = ["value"], [result.value]
    atoms = _atoms_of(steps[0])
    rows = []
    for atom in atoms:
        cells = []
        for step in steps:
            if isinstance(step, ApproximationPair):
                cells.append(f"({_cell(spec, step.lower[atom])},{_cell(spec, step.upper[atom])})")
            else:
                cells.append(_cell(spec, step[atom]))
        rows.append([str(atom)] + cells)
    widths = [max(len(r[i]) for r in rows + [["atom"] + labels]) for i in range(len(labels) + 1)]
    header = "  ".join(s.ljust(w) for s, w in zip(["atom"] + labels, widths))
    lines = [header, "-" * len(header)]
    for row in rows:
        lines.append("  ".join(s.ljust(w) for s, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def _atoms_of(step):
    if isinstance(step, ApproximationPair):
        return step.lower.atoms
    return step.atoms


def emit_value(spec: SemiringSpec, value) -> str:
    """Plain one-line-per-atom rendering of an interpretation or pair."""
    if isinstance(value, ApproximationPair):
        return "".join(
            f"{atom} = ({_cell(spec, value.lower[atom])},{_cell(spec, value.upper[atom])})\n"
            for atom in value.lower.atoms
        )
    return "".join(f"{atom} = {_cell(spec, value[atom])}\n" for atom in value.atoms)


def pair_to_doc(spec: SemiringSpec, pair: ApproximationPair) -> dict:
    return {
        "lower": interp_to_doc(spec, pair.lower),
        "upper": interp_to_doc(spec, pair.upper),
        "exact": pair.is_exact,
    }


def result_to_doc(spec: SemiringSpec, result: SemanticsResult, include_trace: bool = False) -> dict:
    """Single self-describing document for one evaluation."""
    doc = {
        "kind": result.kind,
        "approximator": result.approximator,
        "semiring": spec.name,
        "exact": result.exact,
        "notes": list(result.notes),
    }
    value = result.value
    if isinstance(value, Interpretation):
        doc["interpretation"] = interp_to_doc(spec, value)
    elif isinstance(value, ApproximationPair):
        doc["pair"] = pair_to_doc(spec, value)
    elif isinstance(value, bool):
        doc["stable"] = value
    else:
        doc["pairs"] = [pair_to_doc(spec, p) for p in value]
    if include_trace:
        labels, steps = _columns(result.trace)
        trace_steps = []
        for label, step in zip(labels, steps):
            if isinstance(step, ApproximationPair):
                trace_steps.append({"label": label, **pair_to_doc(spec, step)})
            else:
                trace_steps.append({"label": label, "interpretation": interp_to_doc(spec, step)})
        doc["trace"] = {
            "converged": result.trace.converged,
            "iterations_used": result.trace.iterations_used,
            "cap": result.trace.cap,
            "steps": trace_steps,
        }
    return doc
