"""Coefficient rings: conjugation-closed subrings of the complex numbers.

Four rings are supported: the integers Z, the Gaussian integers Zi, the
dyadic rationals Z_half, and the rationals Q.  Real scalars are Python ints
and Fractions (exact, arbitrary precision); Gaussian integers get their own
two-int class.  A ring is *kind* when lambda_0 = sum |lambda_i|^2 forces
every lambda_i (i >= 1) to vanish; Z and Zi are kind, Z_half and Q are not
(witness 1/2 = 1/4 + 1/4).
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import CoefficientError, TheoremViolationError


class GaussianInt:
    """a + bi with integer a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0):
        self.a = a
        self.b = b

    def __add__(self, other):
        if isinstance(other, GaussianInt):
            return GaussianInt(self.a + other.a, self.b + other.b)
        if isinstance(other, int):
            return GaussianInt(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianInt):
            return GaussianInt(self.a - other.a, self.b - other.b)
        if isinstance(other, int):
            return GaussianInt(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GaussianInt(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianInt):
            return GaussianInt(self.a * other.a - self.b * other.b,
                               self.a * other.b + self.b * other.a)
        if isinstance(other, int):
            return GaussianInt(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.a, -self.b)

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        if isinstance(other, GaussianInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.a, -self.b)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        imag = {1: "i", -1: "-i"}.get(self.b, f"{self.b}i")
        if self.a == 0:
            return imag
        return f"{self.a}{imag}" if self.b < 0 else f"{self.a}+{imag}"

    def __repr__(self):
        return f"GaussianInt({self.a}, {self.b})"


Scalar = Union[int, Fraction, GaussianInt]


class StarRing:
    """One of the supported coefficient rings, with its star structure."""

    def __init__(self, name: str, kind: bool,
                 check: Callable[[Scalar], Scalar],
                 conj: Callable[[Scalar], Scalar]):
        self.name = name
        self.kind = kind
        self._check = check
        self._conj = conj

    def __repr__(self):
        return f"StarRing({self.name})"

    def check(self, x) -> Scalar:
        """Coerce x into this ring or raise CoefficientError."""
        return self._check(x)

    def contains(self, x) -> bool:
        try:
            self._check(x)
            return True
        except CoefficientError:
            return False

    def conj(self, x: Scalar) -> Scalar:
        return self._conj(x)

    def abs_sq(self, x: Scalar) -> Scalar:
        """x * conj(x), a nonnegative real element of the ring."""
        return x * self._conj(x)

    def add(self, x, y) -> Scalar:
        return self.check(x) + self.check(y)

    def mul(self, x, y) -> Scalar:
        return self.check(x) * self.check(y)

    def neg(self, x) -> Scalar:
        return -self.check(x)

    def parse(self, text: str) -> Scalar:
        return parse_scalar(self, text)

    @property
    def zero(self) -> Scalar:
        return self.check(0)

    @property
    def one(self) -> Scalar:
        return self.check(1)


def _is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return d & (d - 1) == 0


def _check_int(x) -> int:
    if isinstance(x, bool):
        raise CoefficientError(f"not an integer scalar: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, GaussianInt) and x.b == 0:
        return x.a
    raise CoefficientError(f"outside ring Z: {x}")


def _check_gauss(x) -> GaussianInt:
    if isinstance(x, GaussianInt):
        return x
    if isinstance(x, bool):
        raise CoefficientError(f"not a Gaussian integer: {x!r}")
    if isinstance(x, int):
        return GaussianInt(x, 0)
    if isinstance(x, Fraction) and x.denominator == 1:
        return GaussianInt(x.numerator, 0)
    raise CoefficientError(f"outside ring Zi: {x}")


def _check_dyadic(x) -> Scalar:
    if isinstance(x, bool):
        raise CoefficientError(f"not a dyadic scalar: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        if _is_dyadic(x):
            return x
        raise CoefficientError(f"outside ring Z_half: {x}")
    if isinstance(x, GaussianInt) and x.b == 0:
        return x.a
    raise CoefficientError(f"outside ring Z_half: {x}")


def _check_rat(x) -> Scalar:
    if isinstance(x, bool):
        raise CoefficientError(f"not a rational scalar: {x!r}")
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, GaussianInt) and x.b == 0:
        return x.a
    raise CoefficientError(f"outside ring Q: {x}")


def _conj_real(x: Scalar) -> Scalar:
    return x


def _conj_gauss(x: Scalar) -> Scalar:
    return x.conjugate() if isinstance(x, GaussianInt) else x


INTEGERS = StarRing("Z", True, _check_int, _conj_real)
GAUSSIAN_INTEGERS = StarRing("Zi", True, _check_gauss, _conj_gauss)
DYADIC_RATIONALS = StarRing("Z_half", False, _check_dyadic, _conj_real)
RATIONALS = StarRing("Q", False, _check_rat, _conj_real)

RINGS: dict[str, StarRing] = {
    r.name: r for r in (INTEGERS, GAUSSIAN_INTEGERS, DYADIC_RATIONALS, RATIONALS)
}

_INT_RE = _re.compile(r"[+-]?\d+\Z")
_RAT_RE = _re.compile(r"[+-]?\d+/\d+\Z")
_IMAG_RE = _re.compile(r"([+-]?)(\d*)i\Z")
_GAUSS_RE = _re.compile(r"([+-]?\d+)([+-])(\d*)i\Z")


def looks_like_scalar(text: str) -> bool:
    return bool(_INT_RE.match(text) or _RAT_RE.match(text)
                or _IMAG_RE.match(text) or _GAUSS_RE.match(text))


def parse_scalar(ring: StarRing, text: str) -> Scalar:
    """Parse "-3", "1/2", "1+2i", "i", "-i", ... into a ring element."""
    if _INT_RE.match(text):
        return ring.check(int(text))
    if _RAT_RE.match(text):
        return ring.check(Fraction(text))
    m = _IMAG_RE.match(text) or _GAUSS_RE.match(text)
    if m:
        if ring is not GAUSSIAN_INTEGERS:
            raise CoefficientError(f"outside ring {ring.name}: {text}")
        if m.re is _IMAG_RE:
            sign, digits = m.groups()
            b = int(digits) if digits else 1
            return GaussianInt(0, -b if sign == "-" else b)
        a, sign, digits = m.groups()
        b = int(digits) if digits else 1
        return GaussianInt(int(a), -b if sign == "-" else b)
    raise CoefficientError(f"not a scalar literal: {text!r}")


def format_scalar(x: Scalar) -> str:
    return str(x)


def is_display_negative(x: Scalar) -> bool:
    """Whether canonical printing pulls a minus sign out of x."""
    if isinstance(x, GaussianInt):
        return x.a < 0 or (x.a == 0 and x.b < 0)
    return x < 0


@dataclass(frozen=True)
class KindVerdict:
    status: str  # "consistent" | "kindness-violated" | "hypothesis-not-met"
    witness_index: int | None = None
    witness_value: Scalar | None = None


def kind_instance_check(ring: StarRing, lambdas: Sequence[Scalar]) -> KindVerdict:
    """Test one instance of the kindness property on (lambda_0, ..., lambda_n).

    Hypothesis: lambda_0 equals the sum of all |lambda_i|^2 (i = 0..n).
    Consistent: hypothesis holds and lambda_1..lambda_n all vanish.
    A violation in a ring flagged kind is a contradiction and raises.
    """
    values = [ring.check(x) for x in lambdas]
    if not values:
        raise CoefficientError("empty tuple")
    total = ring.zero
    for x in values:
        total = total + ring.abs_sq(x)
    if values[0] != total:
        return KindVerdict("hypothesis-not-met")
    for i, x in enumerate(values[1:], start=1):
        if x:
            if ring.kind:
                raise TheoremViolationError(
                    f"ring {ring.name} is flagged kind but lambda_{i}={x} "
                    f"survives lambda_0 = sum |lambda_i|^2")
            return KindVerdict("kindness-violated", i, x)
    return KindVerdict("consistent")
