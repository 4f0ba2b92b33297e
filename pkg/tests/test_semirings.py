from fractions import Fraction

import pytest

from semiclp.errors import NotEnumerable, TableFormatError, ValueNotInCarrier
from semiclp.semirings import (
    INF,
    Tri,
    boolean_semiring,
    fuzzy_grid,
    fuzzy_semiring,
    get_semiring,
    int_inf_semiring,
    load_table_semiring,
    nat_inf_semiring,
    opt_semiring,
    opt_truncation,
    powerset_semiring,
    validate_spec,
)

FINITE_SPECS = [
    boolean_semiring(),
    powerset_semiring(["a", "b"]),
    powerset_semiring(["a", "b", "c"]),
    fuzzy_grid(),
    opt_truncation(5),
]


@pytest.mark.parametrize("spec", FINITE_SPECS, ids=lambda s: s.name)
def test_finite_builtins_satisfy_axioms_exhaustively(spec):
    assert validate_spec(spec) == []


@pytest.mark.parametrize(
    "spec", [fuzzy_semiring(), nat_inf_semiring(), opt_semiring(), int_inf_semiring()],
    ids=lambda s: s.name,
)
def test_infinite_builtins_satisfy_axioms_on_samples(spec):
    assert validate_spec(spec, samples=2000) == []


def test_opt_distinguished_elements():
    opt = opt_semiring()
    assert opt.zero == INF and opt.one == 0
    assert opt.add(2, 3) == 2  # min
    assert opt.mul(2, 3) == 5  # plus
    assert opt.leq(INF, 0)  # higher cost is lesser


def test_nat_inf_zero_times_inf_is_zero():
    nat = nat_inf_semiring()
    assert nat.mul(0, INF) == 0
    assert nat.mul(INF, 0) == 0
    assert nat.add(INF, 7) == INF


def test_int_inf_mixed_infinity_arithmetic():
    z = int_inf_semiring()
    assert z.add(INF, -3) == INF
    assert z.add(float("-inf"), 3) == float("-inf")
    assert z.mul(float("-inf"), -2) == INF
    assert z.mul(0, INF) == 0
    assert z.flags.positively_ordered is Tri.DENIED


@pytest.mark.parametrize(
    "name,literal,printed",
    [
        ("bool", "true", "true"),
        ("fuzzy", "3/4", "3/4"),
        ("fuzzy", "1", "1"),
        ("nat-inf", "inf", "inf"),
        ("opt", "42", "42"),
        ("int-inf", "-7", "-7"),
        ("int-inf", "-inf", "-inf"),
        ("powerset:a,b", "{a}", "{a}"),
        ("powerset:a,b", "{}", "{}"),
    ],
)
def test_literal_round_trip(name, literal, printed):
    spec = get_semiring(name)
    assert spec.format_value(spec.parse_literal(literal)) == printed


@pytest.mark.parametrize(
    "name,literal",
    [("bool", "2"), ("fuzzy", "5/4"), ("nat-inf", "-1"), ("powerset:a,b", "{c}"), ("opt", "x")],
)
def test_bad_literals_rejected(name, literal):
    with pytest.raises(ValueNotInCarrier):
        get_semiring(name).parse_literal(literal)


def test_fuzzy_values_are_exact_fractions():
    fz = fuzzy_semiring()
    assert fz.parse_literal("1/3") == Fraction(1, 3)
    assert fz.add(Fraction(1, 3), Fraction(1, 2)) == Fraction(1, 2)
    assert fz.mul(Fraction(1, 3), Fraction(1, 2)) == Fraction(1, 3)


def test_powerset_name_is_sorted_and_universe_checked():
    spec = powerset_semiring(["b", "a"])
    assert spec.name == "powerset:a,b"
    assert spec.one == frozenset({"a", "b"})
    assert len(spec.elements) == 4


def test_opt_truncation_is_a_genuine_semiring():
    spec = opt_truncation(5)
    assert validate_spec(spec) == []
    assert spec.mul(3, 4) == INF  # saturates past the bound
    assert spec.mul(2, 3) == 5


def test_registry_unknown_name():
    with pytest.raises(KeyError):
        get_semiring("frobnicate")


def test_registry_reads_table_file(tmp_path):
    spec = get_semiring("table:data/semirings/int_mod5.sr")
    assert spec.name == "int_mod5"
    assert spec.add("p2", "p2") == "n1"  # 2 + 2 = 4 = -1 (mod 5)


MINI_TABLE = """
semiring tiny
elements o i
zero o
one i
add o o = o
add o i = i
add i o = i
add i i = i
mul o o = o
mul o i = o
mul i o = o
mul i i = i
leq o i
"""


def test_table_loader_happy_path():
    spec = load_table_semiring(MINI_TABLE)
    assert spec.name == "tiny"
    assert spec.flags.idempotent_add is Tri.ASSERTED
    assert spec.flags.declared_complete_lattice is Tri.ASSERTED
    assert spec.lattice.bottom == "o" and spec.lattice.top == "i"


def test_table_loader_rejects_missing_entries():
    broken = MINI_TABLE.replace("mul i i = i\n", "")
    with pytest.raises(TableFormatError, match="missing mul"):
        load_table_semiring(broken)


def test_table_loader_rejects_unknown_directive():
    with pytest.raises(TableFormatError, match="unknown directive"):
        load_table_semiring(MINI_TABLE + "frob o i\n")


def test_table_loader_rejects_non_semirings():
    # saturating addition on -2..2 breaks distributivity, so loading must fail
    reps = [-2, -1, 0, 1, 2]
    name = {-2: "n2", -1: "n1", 0: "z", 1: "p1", 2: "p2"}
    sat = lambda v: max(-2, min(2, v))
    lines = ["semiring satz", "elements n2 n1 z p1 p2", "zero z", "one p1"]
    for a in reps:
        for b in reps:
            lines.append(f"add {name[a]} {name[b]} = {name[sat(a + b)]}")
            lines.append(f"mul {name[a]} {name[b]} = {name[sat(a * b)]}")
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            lines.append(f"leq {name[a]} {name[b]}")
    with pytest.raises(TableFormatError, match="not a semiring"):
        load_table_semiring("\n".join(lines))


def test_validate_spec_needs_enumerator_or_sampler():
    from dataclasses import replace

    spec = replace(fuzzy_grid(), elements=None, sample=None)
    with pytest.raises(NotEnumerable):
        validate_spec(spec)


def test_lattice_ops_empty_folds():
    b = boolean_semiring()
    assert b.lattice.glb([]) is True  # glb of nothing is top
    assert b.lattice.lub([]) is False  # lub of nothing is bottom
