"""A small textual language for stating and checking hypercomplex identities.

Grammar (one identity per string):

    identity := expr "==" expr
    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := rational | name | function "(" expr ("," expr)* ")"
              | "(" expr ")" | "-" factor

`rational` is an integer or p/q pair ("3", "1/2").  `i0` is the multiplicative
unit, `e0`..`e7` are basis elements, and every other identifier is a free
variable.  Functions: conj, im, re, inner, normsq, cross, acomm (pair ops),
cross3, acomm3, assoc (triple ops, central factor conjugated internally).

`*` is left-associative and the evaluator never reassociates it: octonion
multiplication is not associative, so parenthesization is semantically
significant at dim 8.  Expressions are sorted into scalar-valued (rational
literals, re, inner, normsq and their sums/products) and vector-valued
everything else; a scalar may multiply a vector only from the left.  Sort and
arity errors are reported at parse time with a column number.

Checking an identity samples each free variable with integer coefficients
from a seeded generator and compares the two sides: exactly on the exact
backend, within a tolerance on binary64.  A PASS is a property-check verdict
("no counterexample found"), not a proof.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import decomp
from .core import (
    ABS_TOL,
    BINARY64,
    EXACT,
    HNum,
    basis,
    coeff_str,
    coerce_scalar,
    conj,
    hnum,
    imaginary_part,
    inner,
    mul,
    negate,
    norm_sq,
    real_coeff,
    scalar_str,
    scale,
    unit,
)

SCALAR = "scalar"
VECTOR = "vector"

PASS = "PASS"
FAIL = "FAIL"
PARSE_ERROR = "PARSE_ERROR"

# name -> (arity, result sort, implementation)
FUNCTIONS = {
    "conj": (1, VECTOR, conj),
    "im": (1, VECTOR, imaginary_part),
    "re": (1, SCALAR, real_coeff),
    "inner": (2, SCALAR, inner),
    "normsq": (1, SCALAR, norm_sq),
    "cross": (2, VECTOR, decomp.cross2),
    "acomm": (2, VECTOR, decomp.acomm2),
    "cross3": (3, VECTOR, decomp.cross3),
    "acomm3": (3, VECTOR, decomp.acomm3),
    "assoc": (3, VECTOR, decomp.assoc3),
}


class ParseError(ValueError):
    """Syntax, arity or sort error, with a 1-based column number."""

    def __init__(self, message: str, col: int):
        super().__init__(f"col {col}: {message}")
        self.message = message
        self.col = col


class EvalError(ValueError):
    """Evaluation-time failure (unbound variable, basis index beyond dim)."""


# ---------------------------------------------------------------------------
# Abstract syntax


@dataclass(frozen=True)
class Var:
    name: str
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Num:
    value: Fraction
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Unit:
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Basis:
    index: int
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    col: int = field(default=0, compare=False)


Expr = Var | Num | Unit | Basis | Neg | Add | Sub | Mul | Call


@dataclass(frozen=True)
class Identity:
    """Parsed identity: two expressions of equal sort plus their free variables."""

    text: str
    lhs: Expr
    rhs: Expr
    free_vars: tuple
    sort: str


# ---------------------------------------------------------------------------
# Lexer

_SYMBOLS = ("==", "+", "-", "*", "(", ")", ",")


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        col = i + 1
        if ch.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/" and j + 1 < n and text[j + 1].isdigit():
                j += 2
                while j < n and text[j].isdigit():
                    j += 1
            tokens.append(("NUMBER", text[i:j], col))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], col))
            i = j
            continue
        if text.startswith("==", i):
            tokens.append(("OP", "==", col))
            i += 2
            continue
        if ch in "+-*(),":
            tokens.append(("OP", ch, col))
            i += 1
            continue
        if ch == "=":
            raise ParseError("single '=' (use '==')", col)
        raise ParseError(f"unexpected character {ch!r}", col)
    tokens.append(("EOF", "", n + 1))
    return tokens


# ---------------------------------------------------------------------------
# Parser (recursive descent)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, text, col = self.peek()
        if kind == "OP" and text == value:
            return self.next()
        shown = text if kind != "EOF" else "end of input"
        raise ParseError(f"expected {value!r}, found {shown!r}", col)

    def parse_identity(self) -> tuple:
        lhs = self.parse_expr()
        self.expect("==")
        eq_col = self.tokens[self.pos - 1][2]
        rhs = self.parse_expr()
        kind, text, col = self.peek()
        if kind != "EOF":
            raise ParseError(f"unexpected trailing input {text!r}", col)
        return lhs, rhs, eq_col

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while True:
            kind, text, col = self.peek()
            if kind == "OP" and text in ("+", "-"):
                self.next()
                right = self.parse_term()
                node = (Add if text == "+" else Sub)(node, right, col)
            else:
                return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while True:
            kind, text, col = self.peek()
            if kind == "OP" and text == "*":
                self.next()
                node = Mul(node, self.parse_factor(), col)
            else:
                return node

    def parse_factor(self) -> Expr:
        kind, text, col = self.next()
        if kind == "OP" and text == "-":
            return Neg(self.parse_factor(), col)
        if kind == "OP" and text == "(":
            node = self.parse_expr()
            self.expect(")")
            return node
        if kind == "NUMBER":
            try:
                value = Fraction(text)
            except ZeroDivisionError:
                raise ParseError("zero denominator", col) from None
            return Num(value, col)
        if kind == "NAME":
            return self.parse_name(text, col)
        shown = text if kind != "EOF" else "end of input"
        raise ParseError(f"expected expression, found {shown!r}", col)

    def parse_name(self, name: str, col: int) -> Expr:
        if name in FUNCTIONS:
            arity = FUNCTIONS[name][0]
            self.expect("(")
            args = [self.parse_expr()]
            while True:
                kind, text, tcol = self.peek()
                if kind == "OP" and text == ",":
                    self.next()
                    args.append(self.parse_expr())
                else:
                    break
            self.expect(")")
            if len(args) != arity:
                raise ParseError(
                    f"{name} takes {arity} argument{'s' if arity != 1 else ''}, got {len(args)}",
                    col,
                )
            return Call(name, tuple(args), col)
        if name == "i0":
            return Unit(col)
        if name[0] == "e" and name[1:].isdigit():
            index = int(name[1:])
            if index > 7:
                raise ParseError(f"no basis element {name} (e0..e7)", col)
            return Basis(index, col)
        return Var(name, col)


def _sort_of(expr: Expr) -> str:
    """Sort of an expression; raises ParseError on sort violations."""
    if isinstance(expr, Num):
        return SCALAR
    if isinstance(expr, (Var, Unit, Basis)):
        return VECTOR
    if isinstance(expr, Neg):
        return _sort_of(expr.operand)
    if isinstance(expr, (Add, Sub)):
        ls, rs = _sort_of(expr.left), _sort_of(expr.right)
        if ls != rs:
            raise ParseError(f"cannot add/subtract {ls} and {rs} values", expr.col)
        return ls
    if isinstance(expr, Mul):
        ls, rs = _sort_of(expr.left), _sort_of(expr.right)
        if ls == VECTOR and rs == SCALAR:
            raise ParseError("scalar factor must be the left operand of '*'", expr.col)
        return SCALAR if (ls, rs) == (SCALAR, SCALAR) else VECTOR
    if isinstance(expr, Call):
        for arg in expr.args:
            if _sort_of(arg) != VECTOR:
                raise ParseError(f"{expr.func} takes vector arguments", expr.col)
        return FUNCTIONS[expr.func][1]
    raise TypeError(f"unknown node {expr!r}")


def _walk(expr: Expr):
    yield expr
    for attr in ("operand", "left", "right"):
        child = getattr(expr, attr, None)
        if child is not None:
            yield from _walk(child)
    for arg in getattr(expr, "args", ()):
        yield from _walk(arg)


def _free_vars(lhs: Expr, rhs: Expr) -> tuple:
    seen = []
    for node in itertools.chain(_walk(lhs), _walk(rhs)):
        if isinstance(node, Var) and node.name not in seen:
            seen.append(node.name)
    return tuple(seen)


def parse(text: str) -> Identity:
    """Parse one identity line; sort-checks both sides and records free variables."""
    lhs, rhs, eq_col = _Parser(text).parse_identity()
    ls = _sort_of(lhs)
    rs = _sort_of(rhs)
    if ls != rs:
        raise ParseError(f"left side is {ls}-valued but right side is {rs}-valued", eq_col)
    return Identity(text=text, lhs=lhs, rhs=rhs, free_vars=_free_vars(lhs, rhs), sort=ls)


def pretty(expr: Expr) -> str:
    """Render an expression; parse(pretty(e)) reproduces e."""
    return _render(expr, 0)


def _render(expr: Expr, parent_prec: int) -> str:
    if isinstance(expr, Num):
        return str(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Unit):
        return "i0"
    if isinstance(expr, Basis):
        return f"e{expr.index}"
    if isinstance(expr, Call):
        return f"{expr.func}({', '.join(_render(a, 0) for a in expr.args)})"
    if isinstance(expr, Neg):
        body = f"-{_render(expr.operand, 3)}"
        return f"({body})" if parent_prec > 3 else body
    if isinstance(expr, (Add, Sub)):
        op = " + " if isinstance(expr, Add) else " - "
        body = f"{_render(expr.left, 1)}{op}{_render(expr.right, 2)}"
        return f"({body})" if parent_prec > 1 else body
    if isinstance(expr, Mul):
        body = f"{_render(expr.left, 2)}*{_render(expr.right, 3)}"
        return f"({body})" if parent_prec > 2 else body
    raise TypeError(f"unknown node {expr!r}")


# ---------------------------------------------------------------------------
# Evaluation


def evaluate(expr: Expr, env: dict, dim: int, backend: str = EXACT):
    """Evaluate to an HNum or a scalar.

    Multiplication follows source order; chains are evaluated left to right
    exactly as parsed.  All free variables must be bound in `env` to HNums of
    the requested dimension and backend.
    """
    if isinstance(expr, Num):
        return coerce_scalar(expr.value, backend)
    if isinstance(expr, Var):
        try:
            return env[expr.name]
        except KeyError:
            raise EvalError(f"unbound variable {expr.name!r}") from None
    if isinstance(expr, Unit):
        return unit(dim, backend)
    if isinstance(expr, Basis):
        if expr.index >= dim:
            raise EvalError(f"basis element e{expr.index} does not exist at dimension {dim}")
        return basis(dim, expr.index, backend)
    if isinstance(expr, Neg):
        value = evaluate(expr.operand, env, dim, backend)
        return negate(value) if isinstance(value, HNum) else -value
    if isinstance(expr, (Add, Sub)):
        left = evaluate(expr.left, env, dim, backend)
        right = evaluate(expr.right, env, dim, backend)
        return left - right if isinstance(expr, Sub) else left + right
    if isinstance(expr, Mul):
        left = evaluate(expr.left, env, dim, backend)
        right = evaluate(expr.right, env, dim, backend)
        if isinstance(left, HNum):
            return mul(left, right)
        if isinstance(right, HNum):
            return scale(left, right)
        return left * right
    if isinstance(expr, Call):
        impl = FUNCTIONS[expr.func][2]
        return impl(*(evaluate(a, env, dim, backend) for a in expr.args))
    raise TypeError(f"unknown node {expr!r}")


# ---------------------------------------------------------------------------
# Identity checking


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check.

    On the exact backend a PASS means no counterexample was found over the
    sample; max_deviation is 0 there.  `witness` holds the variable assignment
    of the first failing trial, if any.
    """

    identity: str
    dim: int
    backend: str
    trials: int
    failures: int
    max_deviation: object
    witness: dict | None
    status: str
    seed: int
    message: str = ""


def _deviation(left, right):
    """Largest absolute coefficient difference between two same-sort values."""
    if isinstance(left, HNum):
        return max(abs(x - y) for x, y in zip(left.coeffs, right.coeffs))
    return abs(left - right)


def _input_scale(env: dict) -> float:
    mags = [abs(c) for u in env.values() for c in u.coeffs]
    return max(mags, default=0.0)


def _parse_error_report(text, dim, backend, seed, err: ParseError) -> CheckReport:
    return CheckReport(
        identity=text, dim=dim, backend=backend, trials=0, failures=0,
        max_deviation=0, witness=None, status=PARSE_ERROR, seed=seed,
        message=str(err),
    )


def _run_check(identity: Identity, envs, dim, backend, tolerance, seed) -> CheckReport:
    trials = 0
    failures = 0
    max_dev = coerce_scalar(0, backend)
    witness = None
    for env in envs:
        trials += 1
        left = evaluate(identity.lhs, env, dim, backend)
        right = evaluate(identity.rhs, env, dim, backend)
        dev = _deviation(left, right)
        if dev > max_dev:
            max_dev = dev
        if backend == EXACT:
            failed = dev != 0
        else:
            bound = max(ABS_TOL, tolerance * _input_scale(env))
            failed = dev > bound
        if failed:
            failures += 1
            if witness is None:
                witness = dict(env)
    status = PASS if failures == 0 else FAIL
    return CheckReport(
        identity=identity.text, dim=dim, backend=backend, trials=trials,
        failures=failures, max_deviation=max_dev, witness=witness,
        status=status, seed=seed,
    )


def _validate(identity: Identity, dim: int, backend: str, tolerance):
    if backend == BINARY64 and tolerance is None:
        raise ValueError("binary64 checks require a tolerance")
    if backend == EXACT and tolerance is not None:
        raise ValueError("tolerance is meaningless on the exact backend")
    for node in itertools.chain(_walk(identity.lhs), _walk(identity.rhs)):
        if isinstance(node, Basis) and node.index >= dim:
            raise ParseError(
                f"basis element e{node.index} does not exist at dimension {dim}",
                node.col,
            )


def check_identity(identity, dim: int = 8, backend: str = EXACT, trials: int = 1000,
                   seed: int = 42, coeff_range: int = 9,
                   tolerance: float | None = None) -> CheckReport:
    """Randomized check: free variables get integer coefficients in
    [-coeff_range, coeff_range] from a generator seeded with `seed`.

    Deterministic: identical (identity, dim, backend, trials, seed,
    coeff_range) inputs produce identical reports.  `identity` may be an
    Identity or a source string; parse failures yield a PARSE_ERROR report
    rather than raising.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if isinstance(identity, str):
        try:
            identity = parse(identity)
        except ParseError as err:
            return _parse_error_report(identity, dim, backend, seed, err)
    try:
        _validate(identity, dim, backend, tolerance)
    except ParseError as err:
        return _parse_error_report(identity.text, dim, backend, seed, err)

    rng = random.Random(seed)
    names = identity.free_vars

    def envs():
        for _ in range(trials):
            yield {
                name: hnum([rng.randint(-coeff_range, coeff_range) for _ in range(dim)], backend)
                for name in names
            }

    return _run_check(identity, envs(), dim, backend, tolerance, seed)


def check_identity_basis(identity, dim: int = 8, backend: str = EXACT,
                         tolerance: float | None = None, seed: int = 0) -> CheckReport:
    """Exhaustive check over single basis elements: every assignment of
    e0..e(dim-1) to every free variable, dim**nvars trials in total.

    For low-degree polynomial identities this complements the randomized
    check; `seed` is only recorded in the report.
    """
    if isinstance(identity, str):
        try:
            identity = parse(identity)
        except ParseError as err:
            return _parse_error_report(identity, dim, backend, seed, err)
    try:
        _validate(identity, dim, backend, tolerance)
    except ParseError as err:
        return _parse_error_report(identity.text, dim, backend, seed, err)

    names = identity.free_vars

    def envs():
        for combo in itertools.product(range(dim), repeat=len(names)):
            yield {name: basis(dim, k, backend) for name, k in zip(names, combo)}

    return _run_check(identity, envs(), dim, backend, tolerance, seed)


# ---------------------------------------------------------------------------
# Report rendering


def report_json_obj(report: CheckReport) -> dict:
    """The stable JSON schema for one report (deviations as decimal strings)."""
    witness = None
    if report.witness is not None:
        witness = {
            name: [scalar_str(c) for c in value.coeffs]
            for name, value in report.witness.items()
        }
    return {
        "identity": report.identity,
        "status": report.status,
        "trials": report.trials,
        "failures": report.failures,
        "max_deviation": scalar_str(report.max_deviation),
        "witness": witness,
        "dim": report.dim,
        "backend": report.backend,
        "seed": report.seed,
    }


def report_text(report: CheckReport) -> str:
    if report.status == PARSE_ERROR:
        return f"PARSE_ERROR | {report.identity} | {report.message}"
    head = (
        f"{report.status} | {report.identity} | trials={report.trials} "
        f"failures={report.failures} max_deviation={scalar_str(report.max_deviation)}"
    )
    if report.status == PASS:
        return f"{head} | no counterexample found"
    parts = "; ".join(f"{name}={coeff_str(value)}" for name, value in report.witness.items())
    return f"{head} | witness: {parts}"
