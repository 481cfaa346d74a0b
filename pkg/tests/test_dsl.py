import json
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import hnums
from triprod import (
    BINARY64,
    EXACT,
    ParseError,
    acomm2,
    acomm3,
    assoc3,
    basis,
    check_identity,
    check_identity_basis,
    conj,
    cross2,
    cross3,
    evaluate,
    imaginary_part,
    inner,
    norm_sq,
    parse,
    pretty,
    real_coeff,
)
from triprod.dsl import Add, Basis, EvalError, Mul, Num, Sub, Unit, Var, report_json_obj
from triprod.suite import builtin_lines

DECOMPOSITION_LINE = "(u1*conj(u2))*u3 == acomm3(u1,u2,u3) + cross3(u1,u2,u3) + assoc(u1,u2,u3)"


# --- parsing -----------------------------------------------------------------


def test_parse_free_vars_and_sort():
    ident = parse("cross3(u1,i0,u3) == cross(u1,u3)")
    assert ident.free_vars == ("u1", "u3")
    assert ident.sort == "vector"


def test_parse_decomposition_line():
    ident = parse(DECOMPOSITION_LINE)
    assert ident.free_vars == ("u1", "u2", "u3")
    assert isinstance(ident.lhs, Mul)
    assert isinstance(ident.rhs, Add)


def test_parse_scalar_identity():
    ident = parse("inner(u1,u2) == inner(u2,u1)")
    assert ident.sort == "scalar"


def test_parse_atoms():
    ident = parse("1/2*i0 + e3 - v == v")
    num = ident.lhs.left.left  # ((1/2*i0) + e3) - v
    assert isinstance(ident.lhs, Sub)
    assert isinstance(num, Mul)
    assert num.left == Num(Fraction(1, 2))
    assert num.right == Unit()
    assert ident.lhs.left.right == Basis(3)
    assert ident.lhs.right == Var("v")


def test_multiplication_is_left_associative_and_never_reassociated():
    chained = parse("u1*u2*u3 == u1*u2*u3").lhs
    explicit = parse("(u1*u2)*u3 == u1".replace(" == u1", " == u1")).lhs
    assert chained == explicit
    other = parse("u1*(u2*u3) == u1").lhs
    assert chained != other


@pytest.mark.parametrize("text,col_hint", [
    ("inner(u1,", 10),
    ("u1 +", 5),
    ("(u1*u2 == u1", 8),
    ("u1 ** u2 == u1", 5),
    ("u1 = u2", 4),
    ("u1 == u2 extra", 10),
    ("u1 @ u2 == u1", 4),
])
def test_syntax_errors_carry_column(text, col_hint):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.col == col_hint


def test_arity_errors():
    with pytest.raises(ParseError, match="3 arguments"):
        parse("cross3(u1,u2) == u1")
    with pytest.raises(ParseError, match="2 arguments"):
        parse("inner(u1) == 0")
    with pytest.raises(ParseError, match="1 argument,"):
        parse("conj(u1,u2) == u1")


def test_sort_errors():
    with pytest.raises(ParseError, match="add/subtract"):
        parse("u1 + inner(u1,u2) == u1")
    with pytest.raises(ParseError, match="left operand"):
        parse("u1*2 == u1")
    with pytest.raises(ParseError, match="vector arguments"):
        parse("conj(inner(u1,u2)) == u1")
    with pytest.raises(ParseError, match="scalar-valued"):
        parse("u1 == inner(u1,u2)")


def test_function_name_requires_call():
    with pytest.raises(ParseError):
        parse("conj == u1")


def test_unknown_basis_element():
    with pytest.raises(ParseError, match="e0..e7"):
        parse("e8 == i0")


def test_zero_denominator():
    with pytest.raises(ParseError, match="zero denominator"):
        parse("1/0*i0 == i0")


# --- pretty printing ---------------------------------------------------------


def test_pretty_preserves_parenthesization():
    ident = parse("u1*(u2*u3) == (u1*u2)*u3")
    assert pretty(ident.lhs) == "u1*(u2*u3)"
    assert pretty(ident.rhs) == "u1*u2*u3"  # left association needs no parens


@pytest.mark.parametrize("line", builtin_lines(8))
def test_round_trip_builtin_suite(line):
    ident = parse(line)
    reparsed = parse(f"{pretty(ident.lhs)} == {pretty(ident.rhs)}")
    assert reparsed.lhs == ident.lhs
    assert reparsed.rhs == ident.rhs


def test_round_trip_tricky_forms():
    for text in [
        "-(u1 - u2) - -u3 == 0*i0",
        "1/2*(u1 + u2)*u3 == u3",
        "inner(-u1,u2) - -inner(u1,u2) == 0",
        "cross(u1,acomm(u2,e7)) == i0 - u1*(u2 - e1)*e2",
    ]:
        ident = parse(text)
        reparsed = parse(f"{pretty(ident.lhs)} == {pretty(ident.rhs)}")
        assert (reparsed.lhs, reparsed.rhs) == (ident.lhs, ident.rhs)


# --- evaluation --------------------------------------------------------------


def test_evaluate_examples():
    e5 = basis(8, 5)
    ident = parse("i0*u == u")
    assert evaluate(ident.lhs, {"u": e5}, 8, EXACT) == e5
    expr = parse("assoc(e1,e2,e4) == i0").lhs
    assert evaluate(expr, {}, 8, EXACT) == assoc3(basis(8, 1), basis(8, 2), basis(8, 4))
    assert evaluate(parse("normsq(e3) == 1").lhs, {}, 8, EXACT) == 1


def test_evaluate_unbound_variable():
    expr = parse("u1 == u1").lhs
    with pytest.raises(EvalError, match="unbound"):
        evaluate(expr, {}, 8, EXACT)


def test_evaluate_basis_beyond_dimension():
    expr = parse("e5 == e5").lhs
    with pytest.raises(EvalError, match="dimension 4"):
        evaluate(expr, {}, 4, EXACT)


def test_evaluate_source_order_multiplication():
    # (e1*e2)*e4 differs from e1*(e2*e4) for octonions; the evaluator must
    # follow the written order exactly.
    left = evaluate(parse("(e1*e2)*e4 == i0").lhs, {}, 8, EXACT)
    right = evaluate(parse("e1*(e2*e4) == i0").lhs, {}, 8, EXACT)
    assert left != right


@given(hnums(8), hnums(8), hnums(8))
def test_evaluate_delegates_to_library(u1, u2, u3):
    env = {"u1": u1, "u2": u2, "u3": u3}
    cases = {
        "conj(u1)": conj(u1),
        "im(u1)": imaginary_part(u1),
        "acomm(u1,u2)": acomm2(u1, u2),
        "cross(u1,u2)": cross2(u1, u2),
        "acomm3(u1,u2,u3)": acomm3(u1, u2, u3),
        "cross3(u1,u2,u3)": cross3(u1, u2, u3),
        "assoc(u1,u2,u3)": assoc3(u1, u2, u3),
    }
    for text, expected in cases.items():
        assert evaluate(parse(f"{text} == i0").lhs, env, 8, EXACT) == expected
    assert evaluate(parse("re(u1) == 0").lhs, env, 8, EXACT) == real_coeff(u1)
    assert evaluate(parse("inner(u1,u2) == 0").lhs, env, 8, EXACT) == inner(u1, u2)
    assert evaluate(parse("normsq(u1) == 0").lhs, env, 8, EXACT) == norm_sq(u1)


# --- checking ----------------------------------------------------------------


def test_check_decomposition_identity_passes():
    report = check_identity(DECOMPOSITION_LINE, dim=8, backend=EXACT, trials=1000, seed=42)
    assert report.status == "PASS"
    assert report.failures == 0
    assert report.max_deviation == 0
    assert report.witness is None


def test_check_associativity_fails_at_dim8():
    report = check_identity("(u1*u2)*u3 == u1*(u2*u3)", dim=8, trials=100, seed=42)
    assert report.status == "FAIL"
    assert report.failures > 0
    assert set(report.witness) == {"u1", "u2", "u3"}
    # the witness really is a counterexample
    env = report.witness
    lhs = evaluate(parse("(u1*u2)*u3 == u1").lhs, env, 8, EXACT)
    rhs = evaluate(parse("u1*(u2*u3) == u1").lhs, env, 8, EXACT)
    assert lhs != rhs


def test_check_associativity_passes_at_dim4():
    report = check_identity("(u1*u2)*u3 == u1*(u2*u3)", dim=4, trials=200, seed=42)
    assert report.status == "PASS"


def test_check_is_deterministic():
    kwargs = dict(dim=8, backend=EXACT, trials=50, seed=7, coeff_range=5)
    a = check_identity(DECOMPOSITION_LINE, **kwargs)
    b = check_identity(DECOMPOSITION_LINE, **kwargs)
    assert a == b
    assert json.dumps(report_json_obj(a)) == json.dumps(report_json_obj(b))
    c = check_identity(DECOMPOSITION_LINE, dim=8, backend=EXACT, trials=50, seed=8, coeff_range=5)
    assert c.status == "PASS"


def test_check_binary64_requires_tolerance():
    with pytest.raises(ValueError, match="tolerance"):
        check_identity(DECOMPOSITION_LINE, dim=8, backend=BINARY64, trials=10)
    with pytest.raises(ValueError, match="exact"):
        check_identity(DECOMPOSITION_LINE, dim=8, backend=EXACT, trials=10, tolerance=1e-9)


def test_check_binary64_reports_deviation():
    report = check_identity(
        "normsq(u1*u2) == normsq(u1)*normsq(u2)",
        dim=8, backend=BINARY64, trials=200, seed=42, tolerance=1e-9,
    )
    assert report.status == "PASS"
    assert isinstance(report.max_deviation, float)


def test_check_parse_error_status():
    report = check_identity("inner(u1,", dim=8)
    assert report.status == "PARSE_ERROR"
    assert report.trials == 0
    assert "col 10" in report.message


def test_check_basis_index_beyond_dim_is_static_error():
    report = check_identity("e7*e7 == -i0", dim=4)
    assert report.status == "PARSE_ERROR"
    assert "dimension 4" in report.message


def test_check_scalar_identity():
    report = check_identity("inner(cross3(u1,u2,u3),u4) == -inner(cross3(u4,u2,u3),u1)",
                            dim=8, trials=300, seed=42)
    assert report.status == "PASS"


def test_check_identity_rejects_bad_trials():
    with pytest.raises(ValueError):
        check_identity(DECOMPOSITION_LINE, trials=0)


def test_exhaustive_basis_mode():
    report = check_identity_basis(DECOMPOSITION_LINE, dim=8)
    assert report.status == "PASS"
    assert report.trials == 512
    two_var = check_identity_basis("u1*u2 == acomm(u1,u2) + cross(u1,u2)", dim=4)
    assert two_var.trials == 16
    assert two_var.status == "PASS"


def test_exhaustive_basis_mode_finds_failures():
    report = check_identity_basis("(u1*u2)*u3 == u1*(u2*u3)", dim=8)
    assert report.status == "FAIL"
    assert report.witness is not None


# --- report rendering --------------------------------------------------------


def test_report_text_wording():
    from triprod.dsl import report_text

    passing = check_identity("i0*u1 == u1", dim=8, trials=5, seed=1)
    assert "no counterexample found" in report_text(passing)
    failing = check_identity("u1 == conj(u1)", dim=8, trials=20, seed=1)
    text = report_text(failing)
    assert text.startswith("FAIL")
    assert "witness:" in text


def test_report_json_schema():
    report = check_identity("i0*u1 == u1", dim=8, trials=5, seed=1)
    obj = report_json_obj(report)
    assert list(obj) == [
        "identity", "status", "trials", "failures", "max_deviation",
        "witness", "dim", "backend", "seed",
    ]
    assert obj["witness"] is None
    assert obj["max_deviation"] == "0"
    failing = check_identity("u1 == conj(u1)", dim=8, trials=20, seed=1)
    fobj = report_json_obj(failing)
    assert isinstance(fobj["witness"], dict)
    for coeffs in fobj["witness"].values():
        assert len(coeffs) == 8
        assert all(isinstance(c, str) for c in coeffs)


def test_exact_max_deviation_serializes_as_rational():
    report = check_identity("u1 == 1/3*u1", dim=8, trials=3, seed=1, coeff_range=1)
    obj = report_json_obj(report)
    assert report.status == "FAIL"
    assert "/" in obj["max_deviation"]


def test_json_witness_round_trips_to_a_counterexample():
    from triprod import hnum, mul

    text = "(u1*u2)*u3 == u1*(u2*u3)"
    report = check_identity(text, dim=8, trials=50, seed=42)
    obj = report_json_obj(check_identity(text, dim=8, trials=50, seed=42))
    assert obj == report_json_obj(report)
    env = {name: hnum(coeffs) for name, coeffs in obj["witness"].items()}
    left = mul(mul(env["u1"], env["u2"]), env["u3"])
    right = mul(env["u1"], mul(env["u2"], env["u3"]))
    assert left != right
