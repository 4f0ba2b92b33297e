from pathlib import Path

import pytest

from semiclp.errors import InconsistentPair, IntervalTooLarge, NotEnumerable
from semiclp.interpretations import ApproximationPair, Interpretation, interp_leq
from semiclp.operators import (
    eval_body,
    eval_gatom,
    interval_interpretations,
    is_semiring_model,
    is_traditional_model,
    model_intersection,
    phi,
    tp,
    ultimate,
)
from semiclp.program import Atom, Constant, NegatedAtom, PositiveAtom, parse_program
from semiclp.semirings import INF, get_semiring

OPT = get_semiring("opt")
BOOL = get_semiring("bool")


def _travel(neg=False):
    name = "travel_neg.sclp" if neg else "travel.sclp"
    text = Path("data/programs", name).read_text()
    return parse_program(text, OPT)


def _interp(program, values):
    return Interpretation({a: values[str(a)] for a in program.atoms})


# --- immediate consequence on the travel program -------------------------

TRAVEL_COLUMNS = [
    # iterates of tp from all-bottom, transcribed independently
    {"train(a)": 2, "car(a)": 3, "mass_transit(a)": INF, "path(a,c)": INF, "path(a,b)": INF, "solution(a)": INF},
    {"train(a)": 2, "car(a)": 3, "mass_transit(a)": 2, "path(a,c)": 3, "path(a,b)": INF, "solution(a)": INF},
    {"train(a)": 2, "car(a)": 3, "mass_transit(a)": 2, "path(a,c)": 3, "path(a,b)": 2, "solution(a)": 3},
    {"train(a)": 2, "car(a)": 3, "mass_transit(a)": 2, "path(a,c)": 3, "path(a,b)": 2, "solution(a)": 2},
]


def test_tp_iterates_reproduce_travel_columns():
    program = _travel()
    current = Interpretation.uniform(program.atoms, INF)
    for column in TRAVEL_COLUMNS:
        current = tp(program, current)
        assert current == _interp(program, column)
    assert tp(program, current) == current  # fixpoint at the fourth iterate


def test_tp_undefined_atom_gets_zero():
    program = parse_program("p :- q.", OPT)
    image = tp(program, Interpretation.uniform(program.atoms, 7))
    assert image[Atom("q")] == INF  # no defining clause: empty sum = 0-element


def test_negation_evaluates_through_zero_one():
    i4 = _interp(_travel(), TRAVEL_COLUMNS[3])
    assert eval_gatom(OPT, i4, i4, NegatedAtom(Atom("car", ("a",)))) == INF
    rain = Interpretation({Atom("rain", ("a",)): INF})
    assert eval_gatom(OPT, rain, rain, NegatedAtom(Atom("rain", ("a",)))) == 0


def test_eval_body_left_to_right_product_and_empty_one():
    i = Interpretation({Atom("p"): 2})
    assert eval_body(OPT, i, i, ()) == 0  # the 1-element of opt
    body = (Constant(1), PositiveAtom(Atom("p")))
    assert eval_body(OPT, i, i, body) == 3


# --- four-valued operator on the extended travel program ------------------

PAIR_COLUMNS = [
    {"rain(a)": (INF, INF), "train(a)": (2, 2), "car(a)": (3, 3), "bicycle(a)": (INF, 1),
     "mass_transit(a)": (INF, 0), "path(a,d)": (INF, 0), "path(a,c)": (INF, 0),
     "path(a,b)": (INF, 0), "solution(a)": (INF, 0)},
    {"rain(a)": (INF, INF), "train(a)": (2, 2), "car(a)": (3, 3), "bicycle(a)": (1, 1),
     "mass_transit(a)": (2, 2), "path(a,d)": (INF, 1), "path(a,c)": (3, 3),
     "path(a,b)": (INF, 0), "solution(a)": (INF, 0)},
    {"rain(a)": (INF, INF), "train(a)": (2, 2), "car(a)": (3, 3), "bicycle(a)": (1, 1),
     "mass_transit(a)": (2, 2), "path(a,d)": (1, 1), "path(a,c)": (3, 3),
     "path(a,b)": (2, 2), "solution(a)": (3, 0)},
    {"rain(a)": (INF, INF), "train(a)": (2, 2), "car(a)": (3, 3), "bicycle(a)": (1, 1),
     "mass_transit(a)": (2, 2), "path(a,d)": (1, 1), "path(a,c)": (3, 3),
     "path(a,b)": (2, 2), "solution(a)": (1, 1)},
]


def _pair(program, column):
    lower = Interpretation({a: column[str(a)][0] for a in program.atoms})
    upper = Interpretation({a: column[str(a)][1] for a in program.atoms})
    return ApproximationPair(lower, upper)


def test_phi_iterates_reproduce_pair_columns():
    program = _travel(neg=True)
    current = ApproximationPair(
        Interpretation.uniform(program.atoms, INF), Interpretation.uniform(program.atoms, 0)
    )
    for column in PAIR_COLUMNS:
        current = phi(program, current)
        assert current == _pair(program, column)
    assert phi(program, current) == current


def test_phi_on_exact_pair_is_tp_twice():
    program = _travel(neg=True)
    i = Interpretation.uniform(program.atoms, 4)
    pair = phi(program, ApproximationPair(i, i))
    assert pair.lower == tp(program, i) == pair.upper


# --- the integer counterexample -------------------------------------------

def _z_setup():
    z = get_semiring("int-inf")
    program = parse_program("p :- not q, r.", z)
    atoms = program.atoms

    def mk(v1, v2, v3):
        return Interpretation(dict(zip(atoms, (v1, v2, v3))))  # atoms sorted: p,q,r

    return z, program, mk


def test_phi_is_not_precision_monotone_on_integers():
    from semiclp.interpretations import pair_leq_precision

    z, program, mk = _z_setup()
    a1 = ApproximationPair(mk(-1, -1, -1), mk(1, 1, 1))
    a2 = ApproximationPair(mk(-1, -1, -1), mk(0, 0, 0))
    assert pair_leq_precision(z, a1, a2)
    out1 = phi(program, a1)
    out2 = phi(program, a2)
    assert out1 == ApproximationPair(mk(0, 0, 0), mk(0, 0, 0))
    assert out2 == ApproximationPair(mk(-1, 0, 0), mk(0, 0, 0))
    assert not pair_leq_precision(z, out1, out2)
    assert pair_leq_precision(z, out2, out1)  # the outputs flipped strictly


def test_ultimate_is_precision_monotone_on_the_same_pairs():
    from semiclp.interpretations import pair_leq_precision

    z, program, mk = _z_setup()
    a1 = ApproximationPair(mk(-1, -1, -1), mk(1, 1, 1))
    a2 = ApproximationPair(mk(-1, -1, -1), mk(0, 0, 0))
    out1 = ultimate(program, a1)
    out2 = ultimate(program, a2)
    assert out1 == ApproximationPair(mk(-1, 0, 0), mk(1, 0, 0))
    assert out2 == ApproximationPair(mk(-1, 0, 0), mk(0, 0, 0))
    assert pair_leq_precision(z, out1, out2)


# --- traditional vs semiring models ---------------------------------------

def test_traditional_model_need_not_be_semiring_model():
    nat = get_semiring("nat-inf")
    program = parse_program("h :- b1.\nh :- b2.\n", nat)
    all5 = Interpretation.uniform(program.atoms, 5)
    assert tp(program, all5)[Atom("h")] == 10  # 5 + 5
    assert is_traditional_model(program, all5)
    assert not is_semiring_model(program, all5)


def test_semiring_model_iff_tp_prefixpoint():
    program = _travel()
    model = _interp(program, TRAVEL_COLUMNS[3])
    assert is_semiring_model(program, model)
    assert interp_leq(OPT, tp(program, model), model)
    not_model = model.with_value(Atom("solution", ("a",)), INF)
    assert not is_semiring_model(program, not_model)


# --- interval enumeration and intersections --------------------------------

def test_interval_interpretations_counts():
    pair = ApproximationPair(
        Interpretation({Atom("p"): 5, Atom("q"): 3}),
        Interpretation({Atom("p"): 3, Atom("q"): 3}),
    )
    interps = list(interval_interpretations(OPT, pair))
    assert len(interps) == 3  # p in {3,4,5}, q fixed


def test_interval_rejects_inconsistent_pairs():
    pair = ApproximationPair(Interpretation({Atom("p"): 1}), Interpretation({Atom("p"): 4}))
    with pytest.raises(InconsistentPair):
        list(interval_interpretations(OPT, pair))


def test_interval_cap_enforced():
    pair = ApproximationPair(Interpretation({Atom("p"): 100}), Interpretation({Atom("p"): 0}))
    with pytest.raises(IntervalTooLarge):
        list(interval_interpretations(OPT, pair, cap=50))


def test_interval_not_enumerable_without_bounds():
    fuzzy = get_semiring("fuzzy")
    from fractions import Fraction

    pair = ApproximationPair(
        Interpretation({Atom("p"): Fraction(0)}), Interpretation({Atom("p"): Fraction(1)})
    )
    with pytest.raises(NotEnumerable):
        list(interval_interpretations(fuzzy, pair))


def test_model_intersection_is_pointwise_glb():
    ps = get_semiring("powerset:a,b")
    atoms = (Atom("p"),)
    models = [
        Interpretation({Atom("p"): frozenset({"a", "b"})}),
        Interpretation({Atom("p"): frozenset({"a"})}),
    ]
    glb = model_intersection(ps, models, atoms)
    assert glb[Atom("p")] == frozenset({"a"})
    assert model_intersection(ps, [], atoms)[Atom("p")] == frozenset({"a", "b"})


def test_model_intersection_of_travel_models_is_a_model():
    program = _travel()
    minimal = _interp(program, TRAVEL_COLUMNS[3])
    looser = Interpretation({a: 0 for a in program.atoms})  # top: everything free
    glb = model_intersection(OPT, [minimal, looser], program.atoms)
    assert is_semiring_model(program, glb)
