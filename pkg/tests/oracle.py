"""Independent three-valued oracle for boolean normal logic programs.

Implements partial stable models and the well-founded model from first
principles (quotient construction plus three-valued least-model iteration,
partial stable models by exhaustive search), with no imports from the package
under test.  Used as the ground truth for the boolean faithfulness tests.

Programs are lists of clauses ``(head, body)`` where ``head`` is an atom name
and ``body`` is a list of ``(atom, positive)`` literals.  Truth values are the
strings "f" < "u" < "t" (truth order).
"""

from __future__ import annotations

import itertools

F, U, T = "f", "u", "t"
_RANK = {F: 0, U: 1, T: 2}


def _tmin(values):
    return min(values, key=_RANK.get, default=T)


def _tmax(values):
    return max(values, key=_RANK.get, default=F)


def atoms_of(program):
    seen = set()
    for head, body in program:
        seen.add(head)
        seen.update(a for a, _ in body)
    return sorted(seen)


def least_model_of_quotient(program, interp, atoms):
    """Least three-valued model of P/I: negative literals are frozen to their
    value under ``interp`` (t/u/f constants), then the positive remainder is
    iterated to its least fixpoint from all-false."""
    current = {a: F for a in atoms}
    while True:
        nxt = {}
        for a in atoms:
            values = []
            for head, body in program:
                if head != a:
                    continue
                parts = []
                for atom, positive in body:
                    if positive:
                        parts.append(current[atom])
                    else:
                        parts.append({T: F, U: U, F: T}[interp[atom]])
                values.append(_tmin(parts))
            nxt[a] = _tmax(values)
        if nxt == current:
            return current
        current = nxt


def partial_stable_models(program):
    """All three-valued interpretations I with least_model(P/I) = I."""
    atoms = atoms_of(program)
    models = []
    for combo in itertools.product((F, U, T), repeat=len(atoms)):
        interp = dict(zip(atoms, combo))
        if least_model_of_quotient(program, interp, atoms) == interp:
            models.append(interp)
    return models


def _knowledge_leq(a, b, atoms):
    """a <=_k b: a's true atoms stay true in b and a's false atoms stay false."""
    for atom in atoms:
        if a[atom] == T and b[atom] != T:
            return False
        if a[atom] == F and b[atom] != F:
            return False
    return True


def well_founded_model(program):
    """The knowledge-least partial stable model (exists and is unique)."""
    atoms = atoms_of(program)
    models = partial_stable_models(program)
    least = [m for m in models if all(_knowledge_leq(m, other, atoms) for other in models)]
    assert len(least) == 1, "well-founded model must exist and be unique"
    return least[0]


def to_pair(interp, atoms):
    """Three-valued interpretation as (true-set, true-or-undefined-set)."""
    lower = frozenset(a for a in atoms if interp[a] == T)
    upper = frozenset(a for a in atoms if interp[a] != F)
    return lower, upper
