"""Interpretations (total atom-to-value maps) and approximation pairs.

An interpretation is total over a program's atom universe.  Approximation
pairs (lower, upper) live on the bilattice: the precision order compares
lower bounds upward and upper bounds downward, the truth order compares both
upward.  Consistency (lower pointwise below upper) is checked on demand, not
enforced, because the four-valued operator is defined on all pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping

from .errors import ParseError, UniverseMismatch, ValueNotInCarrier
from .program import Atom, parse_atom_text
from .semirings import SemiringSpec, Value


class Interpretation:
    """Immutable total map from atoms to semiring values."""

    __slots__ = ("_map", "_items", "_hash")

    def __init__(self, mapping: Mapping[Atom, Value]):
        self._map: Dict[Atom, Value] = dict(mapping)
        self._items = tuple(sorted(self._map.items(), key=lambda kv: kv[0]))
        self._hash = hash(self._items)

    @classmethod
    def uniform(cls, atoms: Iterable[Atom], value: Value) -> "Interpretation":
        return cls({a: value for a in atoms})

    def __getitem__(self, atom: Atom) -> Value:
        try:
            return self._map[atom]
        except KeyError:
            raise UniverseMismatch(f"atom {atom} is outside this interpretation's universe")

    @property
    def atoms(self) -> tuple:
        return tuple(a for a, _ in self._items)

    @property
    def items(self) -> tuple:
        return self._items

    def to_dict(self) -> Dict[Atom, Value]:
        return dict(self._map)

    def with_value(self, atom: Atom, value: Value) -> "Interpretation":
        updated = dict(self._map)
        updated[atom] = value
        return Interpretation(updated)

    def __eq__(self, other):
        return isinstance(other, Interpretation) and self._items == other._items

    def __hash__(self):
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{a}: {v}" for a, v in self._items)
        return f"Interpretation({{{inner}}})"


@dataclass(frozen=True)
class ApproximationPair:
    lower: Interpretation
    upper: Interpretation

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper


def _require_same_universe(a: Interpretation, b: Interpretation):
    if a.atoms != b.atoms:
        raise UniverseMismatch("interpretations range over different atom universes")


def interp_leq(spec: SemiringSpec, a: Interpretation, b: Interpretation) -> bool:
    """Pointwise comparison under the declared order."""
    _require_same_universe(a, b)
    return all(spec.leq(v, b[atom]) for atom, v in a.items)


def pair_leq_precision(spec: SemiringSpec, p: ApproximationPair, q: ApproximationPair) -> bool:
    return interp_leq(spec, p.lower, q.lower) and interp_leq(spec, q.upper, p.upper)


def pair_leq_truth(spec: SemiringSpec, p: ApproximationPair, q: ApproximationPair) -> bool:
    return interp_leq(spec, p.lower, q.lower) and interp_leq(spec, p.upper, q.upper)


def is_consistent(spec: SemiringSpec, pair: ApproximationPair) -> bool:
    return interp_leq(spec, pair.lower, pair.upper)


def bottom_interpretation(spec: SemiringSpec, atoms: Iterable[Atom]) -> Interpretation:
    return Interpretation.uniform(atoms, spec.require_lattice().bottom)


def top_interpretation(spec: SemiringSpec, atoms: Iterable[Atom]) -> Interpretation:
    return Interpretation.uniform(atoms, spec.require_lattice().top)


def bottom_pair(spec: SemiringSpec, atoms: Iterable[Atom]) -> ApproximationPair:
    """The least precise pair: (all-bottom, all-top)."""
    atoms = tuple(atoms)
    return ApproximationPair(bottom_interpretation(spec, atoms), top_interpretation(spec, atoms))


# ---------------------------------------------------------------------------
# serialization


def interp_to_text(spec: SemiringSpec, interp: Interpretation) -> str:
    """Canonical ``atom = value`` lines, sorted by atom."""
    return "\n".join(f"{atom} = {spec.format_value(v)}" for atom, v in interp.items) + "\n"


def interp_to_doc(spec: SemiringSpec, interp: Interpretation) -> list:
    return [
        {"atom": str(atom), "value": spec.format_value(v), "semiring": spec.name}
        for atom, v in interp.items
    ]


def interp_from_text(spec: SemiringSpec, text: str, universe: Iterable[Atom]) -> Interpretation:
    """Parse ``atom = value`` lines; the result must be total on ``universe``."""
    universe = tuple(universe)
    values: Dict[Atom, Value] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(lineno, 1, f"expected 'atom = value', got {line!r}")
        left, right = line.split("=", 1)
        atom = parse_atom_text(left)
        try:
            value = spec.parse_literal(right.strip())
        except ValueNotInCarrier:
            raise ParseError(lineno, 1, f"value {right.strip()!r} is not in semiring '{spec.name}'")
        values[atom] = value
    missing = [a for a in universe if a not in values]
    extra = [a for a in values if a not in universe]
    if missing or extra:
        raise UniverseMismatch(
            f"interpretation not total on the atom universe (missing: {missing}, extra: {extra})"
        )
    return Interpretation(values)


def pair_to_text(spec: SemiringSpec, pair: ApproximationPair) -> str:
    return (
        "[lower]\n"
        + interp_to_text(spec, pair.lower)
        + "[upper]\n"
        + interp_to_text(spec, pair.upper)
    )


def pair_from_text(spec: SemiringSpec, text: str, universe: Iterable[Atom]) -> ApproximationPair:
    """Two-section text file: ``[lower]`` lines then ``[upper]`` lines."""
    universe = tuple(universe)
    sections: Dict[str, list] = {}
    current = None
    for raw in text.splitlines():
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        if line in ("[lower]", "[upper]"):
            current = line[1:-1]
            sections[current] = []
        elif current is None:
            raise ParseError(1, 1, "pair file must start with a [lower] or [upper] section")
        else:
            sections[current].append(line)
    if set(sections) != {"lower", "upper"}:
        raise ParseError(1, 1, "pair file needs exactly the sections [lower] and [upper]")
    lower = interp_from_text(spec, "\n".join(sections["lower"]), universe)
    upper = interp_from_text(spec, "\n".join(sections["upper"]), universe)
    return ApproximationPair(lower, upper)
