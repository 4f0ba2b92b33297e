"""Immediate consequence operator, its two approximators, and model checks.

Evaluation is two-sided throughout: positive atoms and constants read from one
interpretation, negated atoms from another.  The two-valued case passes the
same interpretation on both sides.  Negation maps the 0-element to the
1-element and everything else to the 0-element.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

from .errors import InconsistentPair, IntervalTooLarge, NoGlb, NotEnumerable
from .interpretations import (
    ApproximationPair,
    Interpretation,
    interp_leq,
    is_consistent,
)
from .program import Atom, Constant, NegatedAtom, PositiveAtom, Program
from .semirings import SemiringSpec, Value

DEFAULT_INTERVAL_CAP = 10**6


def eval_gatom(spec: SemiringSpec, pos: Interpretation, neg: Interpretation, g) -> Value:
    """Evaluate one generalized atom; negated atoms read from ``neg``."""
    if isinstance(g, Constant):
        return g.value
    if isinstance(g, PositiveAtom):
        return pos[g.atom]
    if isinstance(g, NegatedAtom):
        return spec.one if neg[g.atom] == spec.zero else spec.zero
    raise TypeError(f"not a generalized atom: {g!r}")


def eval_body(spec: SemiringSpec, pos: Interpretation, neg: Interpretation, body) -> Value:
    """Left-to-right product over the body; the empty body is the 1-element."""
    return spec.product(eval_gatom(spec, pos, neg, g) for g in body)


def _consequence(program: Program, pos: Interpretation, neg: Interpretation) -> Interpretation:
    spec = program.semiring
    values = {}
    for atom in program.atoms:
        values[atom] = spec.sum(
            eval_body(spec, pos, neg, clause.body) for clause in program.clauses_for(atom)
        )
    return Interpretation(values)


def tp(program: Program, interp: Interpretation) -> Interpretation:
    """Per head: the +-sum over defining clauses of the body products.

    Atoms with no defining clause get the empty sum, the 0-element.
    """
    return _consequence(program, interp, interp)


def phi(program: Program, pair: ApproximationPair) -> ApproximationPair:
    """Four-valued approximator: each bound evaluates negation from the other."""
    lower = _consequence(program, pair.lower, pair.upper)
    upper = _consequence(program, pair.upper, pair.lower)
    return ApproximationPair(lower, upper)


def _interval_values(spec: SemiringSpec, lo: Value, hi: Value) -> list:
    if spec.interval_values is not None:
        return list(spec.interval_values(lo, hi))
    if spec.elements is not None:
        return [v for v in spec.elements if spec.leq(lo, v) and spec.leq(v, hi)]
    if lo == hi:
        return [lo]
    raise NotEnumerable(
        f"semiring '{spec.name}' cannot enumerate the interval "
        f"[{spec.format_value(lo)}, {spec.format_value(hi)}]"
    )


def interval_interpretations(
    spec: SemiringSpec, pair: ApproximationPair, cap: int = DEFAULT_INTERVAL_CAP
) -> Iterable[Interpretation]:
    """All interpretations between the pair's bounds, as the per-atom product."""
    if not is_consistent(spec, pair):
        raise InconsistentPair("pair bounds are not pointwise ordered")
    atoms = pair.lower.atoms
    ranges = [_interval_values(spec, pair.lower[a], pair.upper[a]) for a in atoms]
    count = 1
    for r in ranges:
        count *= len(r)
    if count > cap:
        raise IntervalTooLarge(count, cap)
    for combo in itertools.product(*ranges):
        yield Interpretation(dict(zip(atoms, combo)))


def ultimate(
    program: Program, pair: ApproximationPair, cap: int = DEFAULT_INTERVAL_CAP
) -> ApproximationPair:
    """Most precise approximator: pointwise glb/lub of tp over the interval."""
    spec = program.semiring
    lattice = spec.require_lattice()
    atoms = program.atoms
    glb: Optional[dict] = None
    lub: Optional[dict] = None
    for interp in interval_interpretations(spec, pair, cap):
        image = tp(program, interp)
        if glb is None:
            glb = image.to_dict()
            lub = image.to_dict()
        else:
            for a in atoms:
                glb[a] = lattice.glb2(glb[a], image[a])
                lub[a] = lattice.lub2(lub[a], image[a])
    assert glb is not None  # interval of a consistent pair is never empty
    return ApproximationPair(Interpretation(glb), Interpretation(lub))


def is_semiring_model(program: Program, interp: Interpretation) -> bool:
    """tp(I) pointwise below I.

    For programs with negation this evaluates negated atoms with the same I on
    both sides (a two-valued extension; flag it in user-facing output).
    """
    return interp_leq(program.semiring, tp(program, interp), interp)


def is_traditional_model(program: Program, interp: Interpretation) -> bool:
    """Every clause individually satisfies body <= head."""
    spec = program.semiring
    return all(
        spec.leq(eval_body(spec, interp, interp, c.body), interp[c.head])
        for c in program.clauses
    )


def model_intersection(
    spec: SemiringSpec, models: Iterable[Interpretation], universe: Iterable[Atom]
) -> Interpretation:
    """Pointwise glb over a set of interpretations; empty set yields all-top."""
    lattice = spec.require_lattice()
    universe = tuple(universe)
    values = {a: lattice.top for a in universe}
    for model in models:
        for a in universe:
            values[a] = lattice.glb2(values[a], model[a])
    return Interpretation(values)
