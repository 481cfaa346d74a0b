"""Hypercomplex arithmetic in dimensions 1, 2, 4 and 8.

Multiplication is built by doubling from the reals: a dim-2n value is a pair
(a1, a2) of dim-n values, and

    (a1, a2) * (b1, b2) = (a1*b1 - conj(b2)*a2,  b2*a1 + a2*conj(b1))

which yields the complex numbers, the quaternions and the octonions in turn.
Index 0 of the coefficient vector is the multiplicative unit i0, and the first
half of the coefficients of a dim-2n value is a dim-n subalgebra (so the
quaternions sit inside the octonions as coordinates 0..3).

Two scalar backends are supported.  The "exact" backend keeps coefficients as
rationals (int or Fraction), so identities can be checked with exact equality.
The "binary64" backend keeps float coefficients; binary64 values must be
compared with `allclose`, never with `==`.

Values are immutable and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

EXACT = "exact"
BINARY64 = "binary64"
BACKENDS = (EXACT, BINARY64)

DIMS = (1, 2, 4, 8)

# Default binary64 comparison bounds: relative tolerance against the largest
# coefficient magnitude in play, with an absolute floor for near-zero data.
REL_TOL = 1e-9
ABS_TOL = 1e-12

Scalar = Union[int, Fraction, float]


def _canon(x):
    """Collapse integer-valued Fractions to int.

    Purely a fast path: int arithmetic is much cheaper than Fraction
    arithmetic and the two compare equal, so this never changes semantics.
    """
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def coerce_scalar(value, backend: str) -> Scalar:
    """Convert `value` (int, Fraction, or string like "-3/4") to a backend scalar.

    Floats are accepted only on the binary64 backend; silently turning a float
    into an "exact" rational hides rounding that already happened.
    """
    if backend == EXACT:
        if isinstance(value, float):
            raise TypeError("float coefficient not allowed on the exact backend")
        return _canon(value if isinstance(value, int) else Fraction(value))
    if backend == BINARY64:
        if isinstance(value, str):
            value = Fraction(value)
        return float(value)
    raise ValueError(f"unknown backend {backend!r}")


def scalar_str(x: Scalar) -> str:
    """Lossless decimal string: "p/q" for rationals, shortest round-trip for floats."""
    return repr(x) if isinstance(x, float) else str(x)


@dataclass(frozen=True, slots=True)
class HNum:
    """A hypercomplex number: `dim` coefficients over a single scalar backend."""

    dim: int
    coeffs: tuple
    backend: str

    def __post_init__(self):
        if self.dim not in DIMS:
            raise ValueError(f"dimension must be one of {DIMS}, got {self.dim}")
        if len(self.coeffs) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(self.coeffs)}")
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}")

    # Operators are conveniences; the module-level functions are the API.
    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, HNum):
            return mul(self, other)
        return scale(other, self)

    def __rmul__(self, s):
        return scale(s, self)

    def __repr__(self):
        body = ", ".join(scalar_str(c) for c in self.coeffs)
        return f"HNum([{body}], backend={self.backend!r})"


def hnum(values, backend: str = EXACT) -> HNum:
    """Build an HNum from a sequence of coefficients (length fixes the dimension)."""
    coeffs = tuple(coerce_scalar(v, backend) for v in values)
    return HNum(len(coeffs), coeffs, backend)


def zero(dim: int, backend: str = EXACT) -> HNum:
    z = coerce_scalar(0, backend)
    return HNum(dim, (z,) * dim, backend)


def unit(dim: int, backend: str = EXACT) -> HNum:
    """The multiplicative unit i0: coefficient 1 at index 0, 0 elsewhere."""
    return basis(dim, 0, backend)


def basis(dim: int, k: int, backend: str = EXACT) -> HNum:
    """Canonical basis element e_k (e0 is the unit i0)."""
    if dim not in DIMS:
        raise ValueError(f"dimension must be one of {DIMS}, got {dim}")
    if not 0 <= k < dim:
        raise ValueError(f"basis index {k} out of range for dimension {dim}")
    one = coerce_scalar(1, backend)
    z = coerce_scalar(0, backend)
    return HNum(dim, tuple(one if i == k else z for i in range(dim)), backend)


def embed(u: HNum, dim: int) -> HNum:
    """Widen `u` into a larger algebra by zero-padding (explicit, never implicit)."""
    if dim not in DIMS or dim < u.dim:
        raise ValueError(f"cannot embed dimension {u.dim} into {dim}")
    if dim == u.dim:
        return u
    z = coerce_scalar(0, u.backend)
    return HNum(dim, u.coeffs + (z,) * (dim - u.dim), u.backend)


def _check_same(a: HNum, b: HNum):
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if a.backend != b.backend:
        raise ValueError(f"backend mismatch: {a.backend} vs {b.backend}")


def add(a: HNum, b: HNum) -> HNum:
    _check_same(a, b)
    return HNum(a.dim, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.backend)


def sub(a: HNum, b: HNum) -> HNum:
    _check_same(a, b)
    return HNum(a.dim, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.backend)


def negate(u: HNum) -> HNum:
    return HNum(u.dim, tuple(-x for x in u.coeffs), u.backend)


def scale(s, u: HNum) -> HNum:
    s = coerce_scalar(s, u.backend)
    return HNum(u.dim, tuple(_canon(s * x) for x in u.coeffs), u.backend)


def _t_conj(t):
    return (t[0],) + tuple(-x for x in t[1:])


def _t_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _t_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _t_mul(a, b):
    # Doubling recursion on raw coefficient tuples; base case is the reals.
    # The two lowest levels are the same recursion expanded in place, which
    # matters: identity checking multiplies millions of times per run.
    n = len(a)
    if n == 4:
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return (
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    if n == 2:
        a0, a1 = a
        b0, b1 = b
        return (a0 * b0 - a1 * b1, a0 * b1 + a1 * b0)
    if n == 1:
        return (a[0] * b[0],)
    h = n // 2
    a1, a2 = a[:h], a[h:]
    b1, b2 = b[:h], b[h:]
    lo = _t_sub(_t_mul(a1, b1), _t_mul(_t_conj(b2), a2))
    hi = _t_add(_t_mul(b2, a1), _t_mul(a2, _t_conj(b1)))
    return lo + hi


def mul(a: HNum, b: HNum) -> HNum:
    """The algebra product.

    Associative for dim <= 4.  For dim 8 the product is alternative,
    (aa)b = a(ab) and (ab)b = a(bb), but not associative, so parenthesization
    matters everywhere octonions are involved.
    """
    _check_same(a, b)
    return HNum(a.dim, _t_mul(a.coeffs, b.coeffs), a.backend)


def conj(u: HNum) -> HNum:
    """Conjugate: negate every coefficient except the unit's (index 0)."""
    return HNum(u.dim, _t_conj(u.coeffs), u.backend)


def inner(a: HNum, b: HNum) -> Scalar:
    """Euclidean inner product of the coefficient vectors.

    Coincides with the unit coefficient of (a*conj(b) + b*conj(a)) / 2.
    """
    _check_same(a, b)
    return sum(x * y for x, y in zip(a.coeffs, b.coeffs))


def norm_sq(u: HNum) -> Scalar:
    """Squared length (u, u); also the unit coefficient of u * conj(u)."""
    return sum(x * x for x in u.coeffs)


def imaginary_part(u: HNum) -> HNum:
    """u with its unit coefficient zeroed."""
    return HNum(u.dim, (coerce_scalar(0, u.backend),) + u.coeffs[1:], u.backend)


def real_coeff(u: HNum) -> Scalar:
    """The coefficient of the unit, equal to (u, i0)."""
    return u.coeffs[0]


def scalar_close(x, y, rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL,
                 scale: float | None = None) -> bool:
    """Tolerance comparison for binary64 scalars.

    `scale` is the reference magnitude for the relative part; by default the
    larger magnitude of the two operands.
    """
    if scale is None:
        scale = max(abs(x), abs(y))
    return abs(x - y) <= max(abs_tol, rel_tol * scale)


def allclose(a: HNum, b: HNum, rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL,
             scale: float | None = None) -> bool:
    """Coefficient-wise tolerance comparison (the only valid binary64 equality)."""
    _check_same(a, b)
    if scale is None:
        scale = max((abs(c) for c in a.coeffs + b.coeffs), default=0.0)
    bound = max(abs_tol, rel_tol * scale)
    return all(abs(x - y) <= bound for x, y in zip(a.coeffs, b.coeffs))


def coeff_str(u: HNum) -> str:
    """Comma-joined coefficient string, the same syntax the CLI accepts as input."""
    return ",".join(scalar_str(c) for c in u.coeffs)


@dataclass(frozen=True, slots=True)
class GramMatrix:
    """Symmetric 3x3 matrix of pairwise inner products."""

    entries: tuple  # three rows of three scalars

    def __post_init__(self):
        if len(self.entries) != 3 or any(len(row) != 3 for row in self.entries):
            raise ValueError("GramMatrix needs 3 rows of 3 entries")
