"""Semiring abstraction, the built-in catalog, and table-defined semirings.

A semiring here is a value-level description: carrier membership test, the two
operations, the distinguished elements, a declared partial order, and optional
extras (finite enumerator, closed-form natural-order witness, interval
enumerator, lattice operations).  Values are plain Python objects chosen per
semiring so that equality is exact: ``bool``, non-negative ``int`` plus a
float-infinity mark, ``Fraction``, ``frozenset`` of symbols, or bare symbol
strings for table semirings.  No floating-point carriers exist anywhere.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Any, Callable, Iterable, Optional, Sequence

from .errors import NoGlb, NotEnumerable, TableFormatError, ValueNotInCarrier

INF = float("inf")
NEG_INF = float("-inf")

Value = Any


class Tri(Enum):
    """Tri-state property flag."""

    ASSERTED = "asserted"
    DENIED = "denied"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SemiringFlags:
    commutative_mul: Tri = Tri.UNKNOWN
    idempotent_add: Tri = Tri.UNKNOWN
    declared_complete_lattice: Tri = Tri.UNKNOWN
    positively_ordered: Tri = Tri.UNKNOWN


@dataclass(frozen=True)
class LatticeOps:
    """Finite glb/lub plus the lattice bounds under the declared order."""

    glb2: Callable[[Value, Value], Value]
    lub2: Callable[[Value, Value], Value]
    bottom: Value
    top: Value

    def glb(self, values: Iterable[Value]) -> Value:
        return reduce(self.glb2, values, self.top)

    def lub(self, values: Iterable[Value]) -> Value:
        return reduce(self.lub2, values, self.bottom)


@dataclass(frozen=True)
class SemiringSpec:
    name: str
    add: Callable[[Value, Value], Value]
    mul: Callable[[Value, Value], Value]
    zero: Value
    one: Value
    leq: Callable[[Value, Value], bool]  # the declared order
    contains: Callable[[Value], bool]
    parse_literal: Callable[[str], Value]
    format_value: Callable[[Value], str]
    flags: SemiringFlags = SemiringFlags()
    elements: Optional[tuple] = None  # finite carrier enumerator, if any
    sample: Optional[Callable[[random.Random], Value]] = None
    natural_leq_witness: Optional[Callable[[Value, Value], bool]] = None
    interval_values: Optional[Callable[[Value, Value], Sequence[Value]]] = None
    lattice: Optional[LatticeOps] = None
    literal_words: frozenset = frozenset()  # bare identifiers that denote values

    @property
    def is_finite(self) -> bool:
        return self.elements is not None

    def require_elements(self) -> tuple:
        if self.elements is None:
            raise NotEnumerable(f"semiring '{self.name}' has no finite enumerator")
        return self.elements

    def require_lattice(self) -> LatticeOps:
        if self.lattice is None:
            raise NoGlb(f"semiring '{self.name}' declares no lattice operations")
        return self.lattice

    def sum(self, values: Iterable[Value]) -> Value:
        return reduce(self.add, values, self.zero)

    def product(self, values: Iterable[Value]) -> Value:
        return reduce(self.mul, values, self.one)

    def check_value(self, v: Value) -> Value:
        if not self.contains(v):
            raise ValueNotInCarrier(v, self.name)
        return v


# ---------------------------------------------------------------------------
# literal helpers

_INT_RE = re.compile(r"-?\d+$")
_FRACTION_RE = re.compile(r"(\d+)/(\d+)$")
_SET_RE = re.compile(r"\{\s*([A-Za-z0-9_,\s]*)\s*\}$")


def _parse_nonneg_int_or_inf(text: str) -> Value:
    if text == "inf":
        return INF
    if _INT_RE.match(text) and not text.startswith("-"):
        return int(text)
    raise ValueNotInCarrier(text)


def format_extended_int(v: Value) -> str:
    if v == INF:
        return "inf"
    if v == NEG_INF:
        return "-inf"
    return str(v)


# ---------------------------------------------------------------------------
# built-in semirings


def boolean_semiring() -> SemiringSpec:
    """B = <{false,true}, or, and, false, true>, ordered false < true."""

    def parse(text):
        if text == "true":
            return True
        if text == "false":
            return False
        raise ValueNotInCarrier(text, "bool")

    return SemiringSpec(
        name="bool",
        add=lambda x, y: x or y,
        mul=lambda x, y: x and y,
        zero=False,
        one=True,
        leq=lambda x, y: (not x) or y,
        contains=lambda v: isinstance(v, bool),
        parse_literal=parse,
        format_value=lambda v: "true" if v else "false",
        flags=SemiringFlags(Tri.ASSERTED, Tri.ASSERTED, Tri.ASSERTED, Tri.ASSERTED),
        elements=(False, True),
        natural_leq_witness=lambda x, y: (not x) or y,
        interval_values=lambda lo, hi: [v for v in (False, True) if lo <= v <= hi],
        lattice=LatticeOps(lambda x, y: x and y, lambda x, y: x or y, False, True),
        literal_words=frozenset({"true", "false"}),
    )


def fuzzy_semiring() -> SemiringSpec:
    """F = <[0,1], max, min, 0, 1> over exact rationals."""

    def contains(v):
        return isinstance(v, Fraction) and 0 <= v <= 1

    def parse(text):
        m = _FRACTION_RE.match(text)
        if m:
            v = Fraction(int(m.group(1)), int(m.group(2)))
        elif _INT_RE.match(text):
            v = Fraction(int(text))
        else:
            raise ValueNotInCarrier(text, "fuzzy")
        if not 0 <= v <= 1:
            raise ValueNotInCarrier(text, "fuzzy")
        return v

    def fmt(v):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    return SemiringSpec(
        name="fuzzy",
        add=max,
        mul=min,
        zero=Fraction(0),
        one=Fraction(1),
        leq=lambda x, y: x <= y,
        contains=contains,
        parse_literal=parse,
        format_value=fmt,
        flags=SemiringFlags(Tri.ASSERTED, Tri.ASSERTED, Tri.ASSERTED, Tri.ASSERTED),
        sample=lambda rng: Fraction(rng.randint(0, 24), 24),
        natural_leq_witness=lambda x, y: x <= y,
        lattice=LatticeOps(min, max, Fraction(0), Fraction(1)),
    )


def nat_inf_semiring() -> SemiringSpec:
    """N-inf = <N u {inf}, +, *, 0, 1> with the usual order; 0*inf = 0."""

    def add(x, y):
        return INF if x == INF or y == INF else x + y

    def mul(x, y):
        if x == 0 or y == 0:
            return 0
        if x == INF or y == INF:
            return INF
        return x * y

    def contains(v):
        return v == INF or (isinstance(v, int) and not isinstance(v, bool) and v >= 0)

    def interval(lo, hi):
        if lo == hi:
            return [lo]
        if hi == INF:
            raise NotEnumerable("interval up to inf in nat-inf is infinite")
        return list(range(lo, hi + 1))

    return SemiringSpec(
        name="nat-inf",
        add=add,
        mul=mul,
        zero=0,
        one=1,
        leq=lambda x, y: x <= y,
        contains=contains,
        parse_literal=lambda t: _parse_nonneg_int_or_inf(t),
        format_value=format_extended_int,
        flags=SemiringFlags(Tri.ASSERTED, Tri.DENIED, Tri.ASSERTED, Tri.ASSERTED),
        sample=lambda rng: INF if rng.random() < 0.05 else rng.randint(0, 50),
        natural_leq_witness=lambda x, y: x <= y,
        interval_values=interval,
        lattice=LatticeOps(min, max, 0, INF),
        literal_words=frozenset({"inf"}),
    )


def opt_semiring() -> SemiringSpec:
    """O = <N u {inf}, min, +, inf, 0>, declared order >= on costs."""

    def mul(x, y):
        return INF if x == INF or y == INF else x + y

    def contains(v):
        return v == INF or (isinstance(v, int) and not isinstance(v, bool) and v >= 0)

    def interval(lo, hi):
        # declared order is >=: lo <= v <= hi means hi <= v <= lo numerically
        if lo == hi:
            return [lo]
        if lo == INF:
            raise NotEnumerable("interval down from cost inf in opt is infinite")
        return list(range(hi, lo + 1))

    return SemiringSpec(
        name="opt",
        add=min,
        mul=mul,
        zero=INF,
        one=0,
        leq=lambda x, y: x >= y,  # higher costs are lesser
        contains=contains,
        parse_literal=lambda t: _parse_nonneg_int_or_inf(t),
        format_value=format_extended_int,
        flags=SemiringFlags(Tri.ASSERTED, Tri.ASSERTED, Tri.ASSERTED, Tri.ASSERTED),
        sample=lambda rng: INF if rng.random() < 0.05 else rng.randint(0, 50),
        natural_leq_witness=lambda x, y: y <= x,  # min(x,z)=y solvable iff y <= x
        interval_values=interval,
        lattice=LatticeOps(max, min, INF, 0),
        literal_words=frozenset({"inf"}),
    )


def powerset_semiring(symbols: Sequence[str]) -> SemiringSpec:
    """P(A) = <2^A, union, intersection, {}, A> ordered by inclusion."""
    universe = frozenset(symbols)
    if not all(re.match(r"[a-z][A-Za-z0-9_]*$", s) for s in universe):
        raise ValueNotInCarrier(sorted(universe), "powerset")
    elements = tuple(
        frozenset(c)
        for n in range(len(universe) + 1)
        for c in itertools.combinations(sorted(universe), n)
    )

    def parse(text):
        m = _SET_RE.match(text)
        if not m:
            raise ValueNotInCarrier(text, "powerset")
        names = [s.strip() for s in m.group(1).split(",") if s.strip()]
        v = frozenset(names)
        if not v <= universe:
            raise ValueNotInCarrier(text, "powerset")
        return v

    def interval(lo, hi):
        extra = sorted(hi - lo)
        return [
            lo | frozenset(c)
            for n in range(len(extra) + 1)
            for c in itertools.combinations(extra, n)
        ]

    name = "powerset:" + ",".join(sorted(universe))
    return SemiringSpec(
        name=name,
        add=lambda x, y: x | y,
        mul=lambda x, y: x & y,
        zero=frozenset(),
        one=universe,
        leq=lambda x, y: x <= y,
        contains=lambda v: isinstance(v, frozenset) and v <= universe,
        parse_literal=parse,
        format_value=lambda v: "{" + ",".join(sorted(v)) + "}",
        flags=SemiringFlags(Tri.ASSERTED, Tri.ASSERTED, Tri.ASSERTED, Tri.ASSERTED),
        elements=elements,
        natural_leq_witness=lambda x, y: x <= y,
        interval_values=interval,
        lattice=LatticeOps(lambda x, y: x & y, lambda x, y: x | y, frozenset(), universe),
    )


def int_inf_semiring() -> SemiringSpec:
    """Z u {-inf,+inf} with + and *, ordered by <= as usual.

    The infinities are adjoined as lattice bounds; mixed-infinity arithmetic
    follows +inf-absorbs-for-add and sign rules for mul.  The semiring laws
    hold on the finite fragment (which is what the sampler draws from);
    distributivity has the usual corner failures once both infinities meet.
    Not positively ordered: elements below 0 exist.
    """

    def add(x, y):
        if x == INF or y == INF:
            return INF
        if x == NEG_INF or y == NEG_INF:
            return NEG_INF
        return x + y

    def mul(x, y):
        if x == 0 or y == 0:
            return 0
        if x in (INF, NEG_INF) or y in (INF, NEG_INF):
            neg = (x < 0) != (y < 0)
            return NEG_INF if neg else INF
        return x * y

    def contains(v):
        return v in (INF, NEG_INF) or (isinstance(v, int) and not isinstance(v, bool))

    def parse(text):
        if text == "inf":
            return INF
        if text == "-inf":
            return NEG_INF
        if _INT_RE.match(text):
            return int(text)
        raise ValueNotInCarrier(text, "int-inf")

    def natural_witness(x, y):
        # x + z = y: solvable for any finite x; from +inf only +inf is
        # reachable; from -inf only -inf and +inf are reachable.
        if x == INF:
            return y == INF
        if x == NEG_INF:
            return y in (NEG_INF, INF)
        return True

    def interval(lo, hi):
        if lo == hi:
            return [lo]
        if lo in (INF, NEG_INF) or hi in (INF, NEG_INF):
            raise NotEnumerable("unbounded interval in int-inf")
        return list(range(lo, hi + 1))

    return SemiringSpec(
        name="int-inf",
        add=add,
        mul=mul,
        zero=0,
        one=1,
        leq=lambda x, y: x <= y,
        contains=contains,
        parse_literal=parse,
        format_value=format_extended_int,
        flags=SemiringFlags(Tri.ASSERTED, Tri.DENIED, Tri.ASSERTED, Tri.DENIED),
        sample=lambda rng: rng.randint(-50, 50),
        natural_leq_witness=natural_witness,
        interval_values=interval,
        lattice=LatticeOps(min, max, NEG_INF, INF),
    )


# ---------------------------------------------------------------------------
# finite truncations used by the exhaustive property checkers


def fuzzy_grid(values: Sequence[Fraction] = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))) -> SemiringSpec:
    """Finite sub-semiring of the fuzzy semiring on an explicit value grid."""
    grid = tuple(sorted(Fraction(v) for v in values))
    if grid[0] != 0 or grid[-1] != 1:
        raise ValueNotInCarrier(values, "fuzzy-grid")
    base = fuzzy_semiring()
    return replace(
        base,
        name="fuzzy-grid",
        contains=lambda v: v in grid,
        elements=grid,
        sample=None,
        interval_values=lambda lo, hi: [v for v in grid if lo <= v <= hi],
    )


def opt_truncation(max_cost: int = 5) -> SemiringSpec:
    """O restricted to {0..max_cost, inf}; cost sums beyond the bound collapse to inf."""
    carrier = tuple(range(max_cost + 1)) + (INF,)

    def mul(x, y):
        if x == INF or y == INF:
            return INF
        s = x + y
        return s if s <= max_cost else INF

    base = opt_semiring()
    return replace(
        base,
        name=f"opt-trunc:{max_cost}",
        mul=mul,
        contains=lambda v: v in carrier,
        elements=carrier,
        sample=None,
        interval_values=lambda lo, hi: [v for v in carrier if base.leq(lo, v) and base.leq(v, hi)],
    )


# ---------------------------------------------------------------------------
# table-defined semirings

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")


def _derived_lattice(elements, leq) -> Optional[LatticeOps]:
    """Bounds-search lattice over a finite declared order; None if not a lattice."""

    def bound(pair_set, lower_side):
        if lower_side:
            cands = [c for c in elements if all(leq(c, x) for x in pair_set)]
            best = [c for c in cands if all(leq(d, c) for d in cands)]
        else:
            cands = [c for c in elements if all(leq(x, c) for x in pair_set)]
            best = [c for c in cands if all(leq(c, d) for d in cands)]
        return best[0] if len(best) == 1 else None

    bottom = bound(list(elements), True)
    top = bound(list(elements), False)
    if bottom is None or top is None:
        return None
    for x, y in itertools.combinations(elements, 2):
        if bound([x, y], True) is None or bound([x, y], False) is None:
            return None
    return LatticeOps(
        glb2=lambda x, y: bound([x, y], True),
        lub2=lambda x, y: bound([x, y], False),
        bottom=bottom,
        top=top,
    )


def validate_spec(spec: SemiringSpec, samples: int = 1000, seed: int = 20240801) -> list[str]:
    """Check the semiring axioms exhaustively (finite) or on sampled triples.

    Returns a list of human-readable violations; empty means all checks passed.
    """
    problems: list[str] = []
    if spec.is_finite:
        elems = list(spec.elements)
        triples = itertools.product(elems, repeat=3)
        pairs = list(itertools.product(elems, repeat=2))
    else:
        if spec.sample is None:
            raise NotEnumerable(f"semiring '{spec.name}' has neither enumerator nor sampler")
        rng = random.Random(seed)
        triples = [tuple(spec.sample(rng) for _ in range(3)) for _ in range(samples)]
        pairs = [(x, y) for x, y, _ in triples]
        elems = sorted({v for t in triples for v in t}, key=spec.format_value)

    fmt = spec.format_value
    for x, y, z in triples:
        if spec.add(x, y) != spec.add(y, x):
            problems.append(f"+ not commutative on ({fmt(x)},{fmt(y)})")
        if spec.add(spec.add(x, y), z) != spec.add(x, spec.add(y, z)):
            problems.append(f"+ not associative on ({fmt(x)},{fmt(y)},{fmt(z)})")
        if spec.mul(spec.mul(x, y), z) != spec.mul(x, spec.mul(y, z)):
            problems.append(f"x not associative on ({fmt(x)},{fmt(y)},{fmt(z)})")
        if spec.mul(x, spec.add(y, z)) != spec.add(spec.mul(x, y), spec.mul(x, z)):
            problems.append(f"x does not left-distribute on ({fmt(x)},{fmt(y)},{fmt(z)})")
        if spec.mul(spec.add(y, z), x) != spec.add(spec.mul(y, x), spec.mul(z, x)):
            problems.append(f"x does not right-distribute on ({fmt(x)},{fmt(y)},{fmt(z)})")
        if problems:
            break
    for x in elems:
        if spec.add(x, spec.zero) != x:
            problems.append(f"0 is not neutral for + on {fmt(x)}")
        if spec.mul(x, spec.one) != x or spec.mul(spec.one, x) != x:
            problems.append(f"1 is not neutral for x on {fmt(x)}")
        if spec.mul(x, spec.zero) != spec.zero or spec.mul(spec.zero, x) != spec.zero:
            problems.append(f"0 is not absorbing for x on {fmt(x)}")
        if not spec.leq(x, x):
            problems.append(f"declared order not reflexive on {fmt(x)}")
    for x, y in pairs:
        if x != y and spec.leq(x, y) and spec.leq(y, x):
            problems.append(f"declared order not antisymmetric on ({fmt(x)},{fmt(y)})")
    if spec.is_finite:
        for x, y, z in itertools.product(elems, repeat=3):
            if spec.leq(x, y) and spec.leq(y, z) and not spec.leq(x, z):
                problems.append(f"declared order not transitive on ({fmt(x)},{fmt(y)},{fmt(z)})")
                break
    return problems


def load_table_semiring(text: str, source: str = "<table>") -> SemiringSpec:
    """Parse and eagerly validate a table-semiring file.

    Format: ``semiring NAME``, ``elements e1 e2 ...``, ``zero e``, ``one e``,
    then ``add a b = c`` / ``mul a b = c`` lines covering all ordered pairs and
    ``leq a b`` lines for the declared order (reflexive pairs implicit).
    """
    name = None
    elements: list[str] = []
    zero = one = None
    add_table: dict = {}
    mul_table: dict = {}
    leq_pairs: set = set()

    def fail(lineno, msg):
        raise TableFormatError(f"{source}:{lineno}: {msg}")

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "semiring":
            if len(parts) != 2 or not _IDENT_RE.match(parts[1]):
                fail(lineno, "expected 'semiring NAME'")
            name = parts[1]
        elif kind == "elements":
            elements = parts[1:]
            if not elements or len(set(elements)) != len(elements):
                fail(lineno, "elements must be distinct and non-empty")
            for e in elements:
                if not _IDENT_RE.match(e):
                    fail(lineno, f"bad element name {e!r}")
        elif kind in ("zero", "one"):
            if len(parts) != 2 or parts[1] not in elements:
                fail(lineno, f"'{kind}' must name a declared element")
            if kind == "zero":
                zero = parts[1]
            else:
                one = parts[1]
        elif kind in ("add", "mul"):
            if len(parts) != 5 or parts[3] != "=":
                fail(lineno, f"expected '{kind} A B = C'")
            a, b, c = parts[1], parts[2], parts[4]
            for e in (a, b, c):
                if e not in elements:
                    fail(lineno, f"unknown element {e!r}")
            (add_table if kind == "add" else mul_table)[(a, b)] = c
        elif kind == "leq":
            if len(parts) != 3 or parts[1] not in elements or parts[2] not in elements:
                fail(lineno, "expected 'leq A B' over declared elements")
            leq_pairs.add((parts[1], parts[2]))
        else:
            fail(lineno, f"unknown directive {kind!r}")

    if name is None:
        raise TableFormatError(f"{source}: missing 'semiring' header")
    if not elements:
        raise TableFormatError(f"{source}: missing 'elements' line")
    if zero is None or one is None:
        raise TableFormatError(f"{source}: 'zero' and 'one' are required")
    for table, label in ((add_table, "add"), (mul_table, "mul")):
        missing = [(a, b) for a in elements for b in elements if (a, b) not in table]
        if missing:
            raise TableFormatError(
                f"{source}: missing {label} entries, e.g. {label} {missing[0][0]} {missing[0][1]}"
            )

    leq_pairs |= {(e, e) for e in elements}
    elems = tuple(elements)
    spec = SemiringSpec(
        name=name,
        add=lambda x, y: add_table[(x, y)],
        mul=lambda x, y: mul_table[(x, y)],
        zero=zero,
        one=one,
        leq=lambda x, y: (x, y) in leq_pairs,
        contains=lambda v: v in elems,
        parse_literal=lambda t: t if t in elems else _raise_vnc(t, name),
        format_value=str,
        elements=elems,
        literal_words=frozenset(elems),
    )
    problems = validate_spec(spec)
    if problems:
        raise TableFormatError(f"{source}: not a semiring: {problems[0]}")

    lattice = _derived_lattice(elems, spec.leq)
    flags = SemiringFlags(
        commutative_mul=_tri(all(mul_table[(a, b)] == mul_table[(b, a)] for a in elems for b in elems)),
        idempotent_add=_tri(all(add_table[(e, e)] == e for e in elems)),
        declared_complete_lattice=_tri(lattice is not None and _complete_under(elems, spec.leq, lattice)),
        positively_ordered=_tri(
            all(spec.leq(zero, e) for e in elems) and _ops_monotone(spec, elems)
        ),
    )
    return replace(spec, flags=flags, lattice=lattice)


def _raise_vnc(t, name):
    raise ValueNotInCarrier(t, name)


def _tri(b: bool) -> Tri:
    return Tri.ASSERTED if b else Tri.DENIED


def _ops_monotone(spec, elems) -> bool:
    for x, xp, b in itertools.product(elems, repeat=3):
        if spec.leq(x, xp):
            if not spec.leq(spec.add(x, b), spec.add(xp, b)):
                return False
            if not spec.leq(spec.mul(x, b), spec.mul(xp, b)):
                return False
            if not spec.leq(spec.mul(b, x), spec.mul(b, xp)):
                return False
    return True


def _complete_under(elems, leq, lattice, subset_cap_elems: int = 12, seed: int = 7) -> bool:
    """Every subset has glb and lub.  Past the cap: all pairs plus sampled subsets."""
    elems = list(elems)
    if len(elems) <= subset_cap_elems:
        families = [list(c) for n in range(len(elems) + 1) for c in itertools.combinations(elems, n)]
    else:
        rng = random.Random(seed)
        families = [[], elems] + [list(p) for p in itertools.combinations(elems, 2)]
        families += [rng.sample(elems, rng.randint(1, len(elems))) for _ in range(200)]
    for sub in families:
        lowers = [c for c in elems if all(leq(c, x) for x in sub)]
        uppers = [c for c in elems if all(leq(x, c) for x in sub)]
        if not any(all(leq(d, c) for d in lowers) for c in lowers):
            return False
        if not any(all(leq(c, d) for d in uppers) for c in uppers):
            return False
    return True


# ---------------------------------------------------------------------------
# registry

_BUILTINS: dict[str, Callable[[], SemiringSpec]] = {
    "bool": boolean_semiring,
    "fuzzy": fuzzy_semiring,
    "nat-inf": nat_inf_semiring,
    "opt": opt_semiring,
    "int-inf": int_inf_semiring,
}


def builtin_names() -> list[str]:
    return sorted(_BUILTINS) + ["powerset:<syms>", "table:<path>"]


def get_semiring(name: str) -> SemiringSpec:
    """Resolve a registry name: builtin, ``powerset:a,b,c`` or ``table:<path>``."""
    if name in _BUILTINS:
        return _BUILTINS[name]()
    if name.startswith("powerset:"):
        syms = [s.strip() for s in name.split(":", 1)[1].split(",") if s.strip()]
        if not syms:
            raise ValueNotInCarrier(name, "powerset")
        return powerset_semiring(syms)
    if name.startswith("table:"):
        path = name.split(":", 1)[1]
        with open(path, encoding="utf-8") as fh:
            return load_table_semiring(fh.read(), source=path)
    raise KeyError(f"unknown semiring {name!r}; known: {', '.join(builtin_names())}")
