"""Derived semiring orders (natural order and c-order) and property checkers.

The declared order on a spec drives evaluation; everything here is diagnostic:
it derives the natural order ``x <= y iff exists z. x+z = y`` and the c-order
``x <= y iff x+y = y`` and checks the lattice-theoretic facts that connect
them (additive inverses vs antisymmetry, monotonicity, least element 0,
absorbing top, coincidence for idempotent addition, completeness).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Optional

from .errors import NotEnumerable
from .semirings import SemiringSpec, Tri


@dataclass
class CheckReport:
    check: str
    semiring: str
    passed: Optional[bool]  # None means skipped
    reason: str = ""
    counterexample: Optional[tuple] = None
    details: dict = field(default_factory=dict)

    @property
    def skipped(self) -> bool:
        return self.passed is None

    def to_doc(self) -> dict:
        return {
            "check": self.check,
            "semiring": self.semiring,
            "passed": self.passed,
            "reason": self.reason,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "details": self.details,
        }


def natural_leq(spec: SemiringSpec, x: Any, y: Any) -> bool:
    """exists z. x + z = y; by registered closed form or exhaustive witness search."""
    if spec.natural_leq_witness is not None:
        return spec.natural_leq_witness(x, y)
    elements = spec.require_elements()
    return any(spec.add(x, z) == y for z in elements)


def c_leq(spec: SemiringSpec, x: Any, y: Any) -> bool:
    """x + y = y."""
    return spec.add(x, y) == y


def check_orders_coincide(spec: SemiringSpec) -> CheckReport:
    """Natural order and c-order agree on all pairs of an idempotent semiring."""
    report = CheckReport("orders-coincide", spec.name, None)
    elements = spec.require_elements()
    if not all(spec.add(x, x) == x for x in elements):
        report.reason = "precondition idempotent_add not met"
        return report
    for x, y in itertools.product(elements, repeat=2):
        if natural_leq(spec, x, y) != c_leq(spec, x, y):
            report.passed = False
            report.counterexample = (x, y)
            report.reason = "natural order and c-order disagree"
            return report
    report.passed = True
    return report


def check_no_additive_inverses(spec: SemiringSpec) -> CheckReport:
    """No x != 0 with x + y = 0; cross-checked against natural-order antisymmetry."""
    report = CheckReport("no-additive-inverses", spec.name, None)
    elements = spec.require_elements()
    inverse_pair = next(
        (
            (x, y)
            for x, y in itertools.product(elements, repeat=2)
            if x != spec.zero and spec.add(x, y) == spec.zero
        ),
        None,
    )
    antisym_violation = next(
        (
            (x, y)
            for x, y in itertools.combinations(elements, 2)
            if natural_leq(spec, x, y) and natural_leq(spec, y, x)
        ),
        None,
    )
    report.passed = inverse_pair is None
    report.counterexample = inverse_pair
    report.details = {
        "naturally_ordered": antisym_violation is None,
        "antisymmetry_violation": antisym_violation,
    }
    # the two findings must agree: inverses exist iff antisymmetry fails
    if (inverse_pair is None) != (antisym_violation is None):
        report.passed = False
        report.reason = "inverse finding and antisymmetry cross-check disagree"
    return report


def check_monotone_ops(spec: SemiringSpec) -> CheckReport:
    """+ and x are monotone in each argument, under declared and natural orders."""
    report = CheckReport("monotone-ops", spec.name, None)
    elements = spec.require_elements()
    orders = {"declared": spec.leq, "natural": lambda x, y: natural_leq(spec, x, y)}
    for order_name, leq in orders.items():
        for x, xp, b in itertools.product(elements, repeat=3):
            if not leq(x, xp):
                continue
            for op_name, op in (("add", spec.add), ("mul", spec.mul)):
                if not leq(op(x, b), op(xp, b)) or not leq(op(b, x), op(b, xp)):
                    report.passed = False
                    report.counterexample = (x, xp, b)
                    report.reason = f"{op_name} not monotone under the {order_name} order"
                    return report
    report.passed = True
    return report


def check_positively_ordered(spec: SemiringSpec) -> CheckReport:
    """0 is least under the declared order and both operations are monotone."""
    report = CheckReport("positively-ordered", spec.name, None)
    if spec.elements is None:
        if spec.flags.positively_ordered is Tri.UNKNOWN:
            raise NotEnumerable(f"semiring '{spec.name}': no enumerator and no asserted flag")
        report.passed = spec.flags.positively_ordered is Tri.ASSERTED
        report.reason = "decided by the built-in's registered flag"
        return report
    elements = spec.elements
    below_zero = next((x for x in elements if not spec.leq(spec.zero, x)), None)
    if below_zero is not None:
        report.passed = False
        report.counterexample = (below_zero,)
        report.reason = "an element is not above 0 in the declared order"
        return report
    mono = check_monotone_ops(spec)
    if mono.passed is False and "declared" in mono.reason:
        report.passed = False
        report.counterexample = mono.counterexample
        report.reason = mono.reason
        return report
    report.passed = True
    return report


def check_complete_lattice(spec: SemiringSpec, subset_cap_elems: int = 12, seed: int = 7) -> CheckReport:
    """Every subset (sampled past the cap, but always all pairs) has glb and lub.

    Also reports the +-absorbing top witness when one exists.
    """
    report = CheckReport("complete-lattice", spec.name, None)
    elements = list(spec.require_elements())
    if len(elements) <= subset_cap_elems:
        families = [
            list(c) for n in range(len(elements) + 1) for c in itertools.combinations(elements, n)
        ]
        report.details["subset_family"] = "exhaustive"
    else:
        rng = random.Random(seed)
        families = [[], elements] + [list(p) for p in itertools.combinations(elements, 2)]
        families += [rng.sample(elements, rng.randint(1, len(elements))) for _ in range(200)]
        report.details["subset_family"] = "all pairs plus seeded samples"
    for sub in families:
        lowers = [c for c in elements if all(spec.leq(c, x) for x in sub)]
        uppers = [c for c in elements if all(spec.leq(x, c) for x in sub)]
        has_glb = any(all(spec.leq(d, c) for d in lowers) for c in lowers)
        has_lub = any(all(spec.leq(c, d) for d in uppers) for c in uppers)
        if not has_glb or not has_lub:
            report.passed = False
            report.counterexample = tuple(sub)
            report.reason = "a subset lacks a glb" if not has_glb else "a subset lacks a lub"
            break
    else:
        report.passed = True
    absorbing = next(
        (t for t in elements if all(spec.add(t, x) == t and spec.add(x, t) == t for x in elements)),
        None,
    )
    report.details["absorbing_top"] = spec.format_value(absorbing) if absorbing is not None else None
    return report


ALL_CHECKS = {
    "orders-coincide": check_orders_coincide,
    "no-additive-inverses": check_no_additive_inverses,
    "monotone-ops": check_monotone_ops,
    "positively-ordered": check_positively_ordered,
    "complete-lattice": check_complete_lattice,
}


def run_checks(spec: SemiringSpec, names=None) -> list[CheckReport]:
    reports = []
    for name in names or sorted(ALL_CHECKS):
        try:
            reports.append(ALL_CHECKS[name](spec))
        except NotEnumerable as exc:
            reports.append(CheckReport(name, spec.name, None, reason=str(exc)))
    return reports
