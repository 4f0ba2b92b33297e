"""Self-checks for the independent three-valued oracle on textbook programs."""

import oracle


def test_stratified_program():
    program = [("p", [("q", False)]), ("r", [])]
    wf = oracle.well_founded_model(program)
    assert wf == {"p": "t", "q": "f", "r": "t"}
    assert oracle.partial_stable_models(program) == [wf]


def test_self_support_is_resolved():
    program = [("p", [("q", False)]), ("q", [("q", True)])]
    wf = oracle.well_founded_model(program)
    assert wf == {"p": "t", "q": "f"}
    assert len(oracle.partial_stable_models(program)) == 1


def test_even_negation_loop():
    program = [("p", [("q", False)]), ("q", [("p", False)])]
    models = oracle.partial_stable_models(program)
    assert len(models) == 3
    wf = oracle.well_founded_model(program)
    assert wf == {"p": "u", "q": "u"}
    assert {frozenset(m.items()) for m in models} == {
        frozenset({("p", "t"), ("q", "f")}),
        frozenset({("p", "f"), ("q", "t")}),
        frozenset({("p", "u"), ("q", "u")}),
    }


def test_odd_negation_loop():
    program = [("p", [("p", False)])]
    models = oracle.partial_stable_models(program)
    assert models == [{"p": "u"}]


def test_double_negation_chooses_false_in_wf():
    # p :- not q. q :- not p. r :- p. r :- q.
    program = [
        ("p", [("q", False)]),
        ("q", [("p", False)]),
        ("r", [("p", True)]),
        ("r", [("q", True)]),
    ]
    wf = oracle.well_founded_model(program)
    assert wf == {"p": "u", "q": "u", "r": "u"}


def test_to_pair():
    interp = {"p": "t", "q": "u", "r": "f"}
    lower, upper = oracle.to_pair(interp, ["p", "q", "r"])
    assert lower == frozenset({"p"})
    assert upper == frozenset({"p", "q"})
