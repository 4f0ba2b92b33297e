"""Fixpoint engines: least fixpoint of tp, Kripke-Kleene, stable operator,
well-founded fixpoint, and stable-fixpoint checking and enumeration.

All equality checks are exact; convergence means two consecutive iterates are
equal.  Chains that do not stabilize within the iteration cap raise, with a
divergence note when a value kept strictly climbing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import operators
from .errors import (
    InconsistentPair,
    IterationCapExceeded,
    NonAscendingChain,
    NotCompleteLattice,
    NotEnumerable,
    NotPositiveProgram,
    NotPositivelyOrdered,
    SearchSpaceTooLarge,
)
from .interpretations import (
    ApproximationPair,
    Interpretation,
    bottom_interpretation,
    bottom_pair,
    interp_leq,
    pair_leq_precision,
)
from .program import Program
from .semirings import SemiringSpec, Tri, Value

DEFAULT_ITERATION_CAP = 10_000
DEFAULT_SEARCH_CAP = 200_000
DIVERGENCE_STREAK = 50

FITTING = "fitting"
ULTIMATE = "ultimate"


@dataclass
class FixpointTrace:
    steps: list
    converged: bool
    iterations_used: int
    cap: int


@dataclass
class SemanticsResult:
    kind: str  # minimal_model | kripke_kleene | well_founded | stable_set | stable_check
    approximator: str  # fitting | ultimate | none
    value: object
    exact: bool
    trace: FixpointTrace
    notes: list = field(default_factory=list)
    details: dict = field(default_factory=dict)


def _kleene(op, start, leq, cap, watch_divergence=False):
    """Iterate ``op`` from ``start`` until two consecutive iterates are equal.

    Asserts the chain ascends under ``leq``; tracks per-atom strict-increase
    streaks when watching for divergence on interpretation chains.
    """
    steps = [start]
    streaks: dict = {}
    divergence = False
    current = start
    for iteration in range(1, cap + 1):
        nxt = op(current)
        steps.append(nxt)
        if nxt == current:
            return current, FixpointTrace(steps, True, iteration, cap)
        if not leq(current, nxt):
            raise NonAscendingChain(
                f"iterate {iteration} is not above its predecessor; "
                "the iterated operator is not monotone on this chain"
            )
        if watch_divergence and not divergence:
            for atom, value in nxt.items:
                if value != current[atom]:
                    streaks[atom] = streaks.get(atom, 0) + 1
                    if streaks[atom] >= DIVERGENCE_STREAK:
                        divergence = True
                else:
                    streaks[atom] = 0
        current = nxt
    raise IterationCapExceeded(cap, divergence_suspected=divergence)


def lfp(
    op: Callable[[Interpretation], Interpretation],
    bottom: Interpretation,
    spec: SemiringSpec,
    cap: int = DEFAULT_ITERATION_CAP,
):
    """Kleene iteration of an interpretation operator from ``bottom``."""
    return _kleene(
        op,
        bottom,
        lambda a, b: interp_leq(spec, a, b),
        cap,
        watch_divergence=True,
    )


def minimal_model(program: Program, cap: int = DEFAULT_ITERATION_CAP) -> SemanticsResult:
    """Least fixpoint of tp from all-bottom; equals the glb of all semiring models."""
    spec = program.semiring
    if not program.is_positive:
        raise NotPositiveProgram("minimal-model semantics requires a negation-free program")
    if spec.flags.declared_complete_lattice is not Tri.ASSERTED:
        raise NotCompleteLattice(
            f"semiring '{spec.name}' does not declare a complete lattice order"
        )
    bottom = bottom_interpretation(spec, program.atoms)
    value, trace = lfp(lambda i: operators.tp(program, i), bottom, spec, cap)
    return SemanticsResult("minimal_model", "none", value, True, trace)


def _pair_operator(program: Program, approximator: str, unsafe_fitting: bool, interval_cap: int):
    """Resolve the approximator name to a pair operator, enforcing preconditions."""
    spec = program.semiring
    notes: list = []
    if approximator == FITTING:
        if spec.flags.positively_ordered is not Tri.ASSERTED:
            if not unsafe_fitting:
                raise NotPositivelyOrdered(
                    f"the four-valued approximator is only an approximator on positively "
                    f"ordered semirings; '{spec.name}' is not (pass unsafe_fitting to force)"
                )
            notes.append("not an approximator: semiring is not positively ordered")
        return (lambda pair: operators.phi(program, pair)), notes
    if approximator == ULTIMATE:
        if spec.elements is None and spec.interval_values is None:
            raise NotEnumerable(
                f"the ultimate approximator needs an enumerable semiring; '{spec.name}' is not"
            )
        return (lambda pair: operators.ultimate(program, pair, interval_cap)), notes
    raise ValueError(f"unknown approximator {approximator!r}")


def kripke_kleene(
    program: Program,
    approximator: str = FITTING,
    cap: int = DEFAULT_ITERATION_CAP,
    unsafe_fitting: bool = False,
    interval_cap: int = operators.DEFAULT_INTERVAL_CAP,
) -> SemanticsResult:
    """Precision-least fixpoint of the chosen approximator, from (all-bottom, all-top)."""
    spec = program.semiring
    op, notes = _pair_operator(program, approximator, unsafe_fitting, interval_cap)
    start = bottom_pair(spec, program.atoms)
    value, trace = _kleene(op, start, lambda p, q: pair_leq_precision(spec, p, q), cap)
    return SemanticsResult("kripke_kleene", approximator, value, value.is_exact, trace, notes)


def stable_op(
    program: Program,
    approximator: str,
    pair: ApproximationPair,
    cap: int = DEFAULT_ITERATION_CAP,
    unsafe_fitting: bool = False,
    interval_cap: int = operators.DEFAULT_INTERVAL_CAP,
) -> ApproximationPair:
    """One application of the stable operator.

    Lower: least fixpoint, from all-bottom, of the lower revision with negated
    atoms frozen at the pair's upper bound.  Upper: symmetric, frozen at the
    lower bound.  With the ultimate approximator the upper revision iterates
    inside the sublattice above the frozen lower bound (its bottom element).
    """
    spec = program.semiring
    _pair_operator(program, approximator, unsafe_fitting, interval_cap)  # precondition check
    bottom = bottom_interpretation(spec, program.atoms)
    if approximator == FITTING:
        lower, _ = lfp(
            lambda j: operators._consequence(program, j, pair.upper), bottom, spec, cap
        )
        upper, _ = lfp(
            lambda j: operators._consequence(program, j, pair.lower), bottom, spec, cap
        )
        return ApproximationPair(lower, upper)

    def lower_step(j):
        return operators.ultimate(
            program, ApproximationPair(j, pair.upper), interval_cap
        ).lower

    def upper_step(j):
        return operators.ultimate(
            program, ApproximationPair(pair.lower, j), interval_cap
        ).upper

    lower, _ = lfp(lower_step, bottom, spec, cap)
    upper, _ = _kleene(
        upper_step, pair.lower, lambda a, b: interp_leq(spec, a, b), cap
    )
    return ApproximationPair(lower, upper)


def well_founded(
    program: Program,
    approximator: str = FITTING,
    cap: int = DEFAULT_ITERATION_CAP,
    unsafe_fitting: bool = False,
    interval_cap: int = operators.DEFAULT_INTERVAL_CAP,
) -> SemanticsResult:
    """Precision-least fixpoint of the stable operator, from (all-bottom, all-top)."""
    spec = program.semiring
    _, notes = _pair_operator(program, approximator, unsafe_fitting, interval_cap)
    start = bottom_pair(spec, program.atoms)
    value, trace = _kleene(
        lambda p: stable_op(program, approximator, p, cap, unsafe_fitting, interval_cap),
        start,
        lambda p, q: pair_leq_precision(spec, p, q),
        cap,
    )
    return SemanticsResult("well_founded", approximator, value, value.is_exact, trace, notes)


def is_stable_fixpoint(
    program: Program,
    approximator: str,
    pair: ApproximationPair,
    cap: int = DEFAULT_ITERATION_CAP,
    unsafe_fitting: bool = False,
    interval_cap: int = operators.DEFAULT_INTERVAL_CAP,
) -> bool:
    """True iff the stable operator maps the pair to itself.

    Pairs on which the ultimate stable revision is undefined (the inner chain
    leaves its interval) cannot be stable and report False.
    """
    try:
        return stable_op(program, approximator, pair, cap, unsafe_fitting, interval_cap) == pair
    except (InconsistentPair, NonAscendingChain):
        if approximator == ULTIMATE:
            return False
        raise


def value_closure(spec: SemiringSpec, seeds: Iterable[Value], rounds: int = 4) -> list:
    """Closure of the seeds plus {0, 1} under + and x, capped at ``rounds``."""
    values = {spec.zero, spec.one}
    values.update(seeds)
    for _ in range(rounds):
        new = set()
        for x, y in itertools.product(values, repeat=2):
            new.add(spec.add(x, y))
            new.add(spec.mul(x, y))
        if new <= values:
            break
        values |= new
    return sorted(values, key=spec.format_value)


def enumerate_stable_fixpoints(
    program: Program,
    approximator: str = FITTING,
    cap: int = DEFAULT_ITERATION_CAP,
    search_cap: int = DEFAULT_SEARCH_CAP,
    unsafe_fitting: bool = False,
    interval_cap: int = operators.DEFAULT_INTERVAL_CAP,
) -> SemanticsResult:
    """All consistent pairs over the program's value closure that are stable.

    tp and the approximators only ever produce values in the closure of the
    program's constants under + and x, so stable fixpoints live there; on
    finite semirings with a saturating closure this is a full enumeration.
    """
    spec = program.semiring
    _, notes = _pair_operator(program, approximator, unsafe_fitting, interval_cap)
    candidates = value_closure(spec, program.constants)
    bound_pairs = [
        (lo, hi)
        for lo, hi in itertools.product(candidates, repeat=2)
        if spec.leq(lo, hi)
    ]
    atoms = program.atoms
    total = len(bound_pairs) ** len(atoms)
    if total > search_cap:
        raise SearchSpaceTooLarge(
            f"{total} candidate pairs exceed the search cap {search_cap}"
        )
    found = []
    for combo in itertools.product(bound_pairs, repeat=len(atoms)):
        pair = ApproximationPair(
            Interpretation({a: c[0] for a, c in zip(atoms, combo)}),
            Interpretation({a: c[1] for a, c in zip(atoms, combo)}),
        )
        if is_stable_fixpoint(program, approximator, pair, cap, unsafe_fitting, interval_cap):
            found.append(pair)
    trace = FixpointTrace([], True, 0, cap)
    result = SemanticsResult(
        "stable_set",
        approximator,
        tuple(found),
        all(p.is_exact for p in found),
        trace,
        notes,
    )
    result.details["exact_flags"] = [p.is_exact for p in found]
    result.details["candidate_values"] = [spec.format_value(v) for v in candidates]
    return result
