import pytest

from semiclp.errors import ParseError
from semiclp.program import (
    Atom,
    Clause,
    Constant,
    NegatedAtom,
    PositiveAtom,
    format_program,
    parse_atom_text,
    parse_program,
)
from semiclp.semirings import INF, get_semiring

OPT = get_semiring("opt")
BOOL = get_semiring("bool")


def test_parse_simple_clause():
    program = parse_program("solution(a) :- path(a,b).", OPT)
    assert program.clauses == (
        Clause(Atom("solution", ("a",)), (PositiveAtom(Atom("path", ("a", "b"))),)),
    )


def test_parse_constants_negation_and_facts():
    program = parse_program("bicycle(a) :- 1, not rain(a).\np.\n", OPT)
    c1, c2 = program.clauses
    assert c1.body == (Constant(1), NegatedAtom(Atom("rain", ("a",))))
    assert c2 == Clause(Atom("p"), ())


def test_comments_and_whitespace_ignored():
    text = "% header\n  p :- q.  % trailing\n\n% done\n"
    program = parse_program(text, BOOL)
    assert len(program.clauses) == 1


def test_atoms_sorted_and_universe_includes_body_only_atoms():
    program = parse_program("p :- not q, r.", BOOL)
    assert [str(a) for a in program.atoms] == ["p", "q", "r"]
    assert not program.is_positive


def test_duplicate_clauses_are_kept_and_dedup_drops_them():
    text = "h :- 2.\nh :- 2.\n"
    program = parse_program(text, get_semiring("nat-inf"))
    assert len(program.clauses) == 2
    assert len(program.dedup().clauses) == 1
    assert len(parse_program(text, get_semiring("nat-inf"), dedup=True).clauses) == 1


def test_constants_in_document_order():
    program = parse_program("h :- 3, 2.\ng :- 2.\n", OPT)
    assert program.constants == (3, 2)


def test_round_trip_through_formatter():
    text = "solution(a) :- path(a,b).\nbicycle(a) :- 1, not rain(a).\ntrain(a) :- 2.\n"
    program = parse_program(text, OPT)
    assert format_program(program) == text
    assert parse_program(format_program(program), OPT) == program


def test_literal_words_parse_as_constants():
    program = parse_program("p :- true, not q.", BOOL)
    assert program.clauses[0].body[0] == Constant(True)
    program = parse_program("h :- inf.", OPT)
    assert program.clauses[0].body[0] == Constant(INF)


def test_int_inf_negative_literals():
    z = get_semiring("int-inf")
    program = parse_program("p :- -3.\nq :- -inf.\n", z)
    assert program.clauses[0].body[0] == Constant(-3)
    assert program.clauses[1].body[0] == Constant(float("-inf"))


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("p :- not 3.", "negation applies only to atoms"),
        ("p :- not true.", "negation applies only to atoms"),
        ("true :- p.", "clause head must be an atom"),
        ("3 :- p.", "clause head must be an atom"),
        ("p :- q", "expected"),
        ("p :- .", "unexpected"),
        ("p :- q r.", "expected ',' or '.'"),
        ("P :- q.", "identifier"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_program(text, BOOL)


def test_parse_error_carries_location():
    with pytest.raises(ParseError) as err:
        parse_program("p :- q.\nx :- @.", BOOL)
    assert err.value.line == 2
    assert err.value.column == 6


def test_literal_outside_carrier_is_a_parse_error_with_location():
    with pytest.raises(ParseError, match="carrier"):
        parse_program("p :- 2.", BOOL)


def test_parse_atom_text():
    assert parse_atom_text("path(a, b)") == Atom("path", ("a", "b"))
    assert parse_atom_text("p") == Atom("p")
    with pytest.raises(ParseError):
        parse_atom_text("not p")
