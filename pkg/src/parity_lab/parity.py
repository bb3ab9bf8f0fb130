"""Which polynomials p admit a non-constant entire f with f(p(z)) even or odd.

A polynomial p has such an even-making f exactly when

* p is even, or
* p = s + k with s odd, or
* p = (s + d)^2 + k with s odd and d != 0,

and an odd-making f exactly when p is odd or has the third shape.  The
third shape is decided without radicals: writing E, O for the even and odd
parts of p, it holds iff deg E = 2 deg O and E - lam*O^2 is constant for
lam = lc(E)/lc(O)^2, in which case d^2 = 1/(4 lam) and k = (E - lam*O^2) - d^2.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .outcomes import VerificationReport, relative_gap, unit_circle
from .poly import Rational, UniPoly, as_rational, eval_complex, format_rational


class Target(enum.Enum):
    EVEN = "even"
    ODD = "odd"


class Case(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    ODD_PLUS_CONSTANT = "odd_plus_constant"
    SHIFTED_ODD_SQUARED = "shifted_odd_squared"
    NONE = "none"


_LABELS = {
    (Target.EVEN, Case.EVEN): "A",
    (Target.EVEN, Case.ODD_PLUS_CONSTANT): "B",
    (Target.EVEN, Case.SHIFTED_ODD_SQUARED): "C",
    (Target.ODD, Case.ODD): "A",
    (Target.ODD, Case.SHIFTED_ODD_SQUARED): "B",
}


class NoWitness(ValueError):
    pass


@dataclass(frozen=True)
class Classification:
    """Result of :func:`classify_rpe` or :func:`classify_rpo`.

    For the odd-plus-constant case ``odd_part`` is s in p = s + k.  For the
    shifted-odd-squared case ``odd_part`` is the odd part O = 2ds of p, and
    d is only known through ``d_squared`` (it may be irrational).
    """

    target: Target
    case: Case
    odd_part: UniPoly | None = None
    d_squared: Rational | None = None
    k: Rational | None = None

    @property
    def label(self) -> str | None:
        return _LABELS.get((self.target, self.case))

    @property
    def admits_witness(self) -> bool:
        return self.case is not Case.NONE

    @property
    def s(self) -> UniPoly | None:
        """The odd polynomial s, when it has rational coefficients."""
        if self.case is Case.ODD_PLUS_CONSTANT:
            return self.odd_part
        if self.case is Case.SHIFTED_ODD_SQUARED:
            d = rational_sqrt(self.d_squared)
            if d is not None:
                return self.odd_part.scale(Fraction(1) / (2 * d))
        return None

    def describe(self) -> str:
        if self.case is Case.NONE:
            return "not RPE" if self.target is Target.EVEN else "not RPO"
        text = f"case {self.label} ({self.case.value})"
        if self.case is Case.ODD_PLUS_CONSTANT:
            text += f": s = {self.s}, k = {format_rational(self.k)}"
        elif self.case is Case.SHIFTED_ODD_SQUARED:
            s = self.s
            s_text = str(s) if s is not None else f"({self.odd_part})/(2*d)"
            text += (
                f": s = {s_text}, d^2 = {format_rational(self.d_squared)},"
                f" k = {format_rational(self.k)}"
            )
        return text

    def to_dict(self) -> dict:
        s = self.s
        if s is None and self.case is Case.SHIFTED_ODD_SQUARED:
            s_text = f"({self.odd_part})/(2*d)"
        else:
            s_text = None if s is None else str(s)
        return {
            "target": self.target.value,
            "variant": self.case.value,
            "label": self.label,
            "s": s_text,
            "d_squared": None if self.d_squared is None else format_rational(self.d_squared),
            "k": None if self.k is None else format_rational(self.k),
        }


def rational_sqrt(q: Rational) -> Fraction | None:
    """Positive rational square root of q, or None if q is not a rational square."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def _shifted_odd_squared(even: UniPoly, odd: UniPoly):
    """Return (d_squared, k) if even + odd == (s + d)^2 + k for some odd s, d != 0."""
    if odd.is_zero() or even.is_constant():
        return None
    if even.degree != 2 * odd.degree:
        return None
    lam = Fraction(even.leading_coefficient()) / Fraction(odd.leading_coefficient()) ** 2
    rest = even - (odd * odd).scale(lam)
    if not rest.is_constant():
        return None
    d_squared = as_rational(1 / (4 * lam))
    return d_squared, as_rational(rest.at_zero() - d_squared)


def classify_rpe(p: UniPoly) -> Classification:
    """Decide whether some non-constant entire f makes f(p(z)) even."""
    even, odd = p.even_part(), p.odd_part()
    if odd.is_zero():
        return Classification(Target.EVEN, Case.EVEN)
    if even.is_constant():
        return Classification(Target.EVEN, Case.ODD_PLUS_CONSTANT, odd_part=odd, k=even.at_zero())
    found = _shifted_odd_squared(even, odd)
    if found is None:
        return Classification(Target.EVEN, Case.NONE)
    d_squared, k = found
    return Classification(Target.EVEN, Case.SHIFTED_ODD_SQUARED, odd, d_squared, k)


def classify_rpo(p: UniPoly) -> Classification:
    """Decide whether some non-constant entire f makes f(p(z)) odd."""
    even, odd = p.even_part(), p.odd_part()
    if even.is_zero():
        return Classification(Target.ODD, Case.ODD)
    found = _shifted_odd_squared(even, odd)
    if found is None:
        return Classification(Target.ODD, Case.NONE)
    d_squared, k = found
    return Classification(Target.ODD, Case.SHIFTED_ODD_SQUARED, odd, d_squared, k)


# -- witnesses --------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    def __call__(self, u: complex) -> complex:
        return u

    def as_poly(self) -> UniPoly:
        return UniPoly.z()

    def describe(self) -> str:
        return "z"

    def to_dict(self) -> dict:
        return {"kind": "identity", "f": self.describe()}


@dataclass(frozen=True)
class ShiftedSquare:
    """f(z) = (z - k)^2; turns s + k into s^2."""

    k: Rational

    def __call__(self, u: complex) -> complex:
        return (u - float(self.k)) ** 2

    def as_poly(self) -> UniPoly:
        return (UniPoly.z() - self.k) ** 2

    def describe(self) -> str:
        return f"({UniPoly.z() - self.k})^2"

    def to_dict(self) -> dict:
        return {"kind": "shifted_square", "f": self.describe(), "k": format_rational(self.k)}


@dataclass(frozen=True)
class CosSqrt:
    """f(z) = cos(alpha * sqrt(z - k)), alpha = 2 pi/d (even) or pi/(2d) (odd).

    cos is even, so the branch of either square root does not matter and f is
    entire in z.
    """

    target: Target
    d_squared: Rational
    k: Rational

    @property
    def alpha(self) -> complex:
        d = cmath.sqrt(float(self.d_squared))
        if self.target is Target.EVEN:
            return 2 * math.pi / d
        return math.pi / (2 * d)

    def __call__(self, u: complex) -> complex:
        return cmath.cos(self.alpha * cmath.sqrt(u - float(self.k)))

    def as_poly(self) -> None:
        return None

    def describe(self) -> str:
        d = rational_sqrt(self.d_squared)
        if d is not None:
            c = 2 / d if self.target is Target.EVEN else 1 / (2 * d)
            alpha = "pi" if c == 1 else f"{format_rational(c)}*pi"
        else:
            root = f"sqrt({format_rational(self.d_squared)})"
            alpha = f"2*pi/{root}" if self.target is Target.EVEN else f"pi/(2*{root})"
        return f"cos({alpha}*sqrt({UniPoly.z() - self.k}))"

    def to_dict(self) -> dict:
        return {
            "kind": "cos_sqrt",
            "f": self.describe(),
            "maker": self.target.value,
            "d_squared": format_rational(self.d_squared),
            "k": format_rational(self.k),
        }


@dataclass(frozen=True)
class PowerShift:
    """f(z) = (z - c)^N."""

    c: Rational
    modulus: int

    def __call__(self, u: complex) -> complex:
        return (u - float(self.c)) ** self.modulus

    def as_poly(self) -> UniPoly:
        return (UniPoly.z() - self.c) ** self.modulus

    def describe(self) -> str:
        return f"({UniPoly.z() - self.c})^{self.modulus}"

    def to_dict(self) -> dict:
        return {
            "kind": "power_shift",
            "f": self.describe(),
            "c": format_rational(self.c),
            "N": self.modulus,
        }


Witness = Identity | ShiftedSquare | CosSqrt | PowerShift


def build_witness(c: Classification) -> Witness:
    if c.case in (Case.EVEN, Case.ODD):
        return Identity()
    if c.case is Case.ODD_PLUS_CONSTANT:
        return ShiftedSquare(c.k)
    if c.case is Case.SHIFTED_ODD_SQUARED:
        return CosSqrt(c.target, c.d_squared, c.k)
    raise NoWitness(f"{c.describe()}: no non-constant entire witness exists")


def verify_witness_numeric(
    w: Witness,
    p: UniPoly,
    target: Target,
    samples: int = 64,
    tol: float = 1e-9,
) -> VerificationReport:
    """Check f(p(x)) -/+ f(p(-x)) ~ 0 on unit-circle samples.

    Residuals are relative: |a -/+ b| / max(1, |a|, |b|).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    sign = -1 if target is Target.EVEN else 1
    worst = 0.0
    for x in unit_circle(samples):
        try:
            a = w(eval_complex(p, x))
            b = w(eval_complex(p, -x))
        except (OverflowError, ValueError) as exc:
            return VerificationReport(math.inf, tol, samples, False, f"evaluation failed at x={x}: {exc}")
        if not (cmath.isfinite(a) and cmath.isfinite(b)):
            return VerificationReport(math.inf, tol, samples, False, f"non-finite value at x={x}")
        worst = max(worst, relative_gap(a, -sign * b))
    return VerificationReport(worst, tol, samples, worst <= tol)


# -- powers -------------------------------------------------------------------


@dataclass(frozen=True)
class PowerParity:
    """Whether f^n is even, and if so the parity f itself must have.

    ``f_parity`` is None with ``power_even`` True only if f^n is even while f
    is neither even nor odd, which cannot happen for a correct arithmetic
    layer.
    """

    power_even: bool
    f_parity: Target | None = None


def power_parity_check(f: UniPoly, n: int) -> PowerParity:
    if n < 1:
        raise ValueError("n must be >= 1")
    if not (f**n).is_even():
        return PowerParity(False)
    if f.is_even():
        return PowerParity(True, Target.EVEN)
    if f.is_odd():
        return PowerParity(True, Target.ODD)
    return PowerParity(True, None)


# -- E^2 + O^2 = 1 demo ---------------------------------------------------------


@dataclass(frozen=True)
class EoDemoReport:
    evenness: VerificationReport
    closed_form: VerificationReport
    shifted_oddness: VerificationReport

    @property
    def passed(self) -> bool:
        return self.evenness.passed and self.closed_form.passed and self.shifted_oddness.passed

    def to_dict(self) -> dict:
        return {
            "evenness": self.evenness.to_dict(),
            "closed_form": self.closed_form.to_dict(),
            "shifted_oddness": self.shifted_oddness.to_dict(),
            "pass": self.passed,
        }


EO_QUARTIC = UniPoly({4: 1, 2: -2})
EO_QUADRATIC = UniPoly({2: 1, 1: 2})


def theorem_eo_demo(samples: int = 64, tol: float = 1e-9) -> EoDemoReport:
    """z^4 - 2z^2 composed with cos + sin is even, and z^2 + 2z with cos + sin - 1 is odd."""

    def f(x):
        return cmath.cos(x) + cmath.sin(x)

    def report(residuals):
        worst = max(residuals)
        return VerificationReport(worst, tol, samples, worst <= tol)

    xs = unit_circle(samples)
    even_res, closed_res, odd_res = [], [], []
    for x in xs:
        a = eval_complex(EO_QUARTIC, f(x))
        b = eval_complex(EO_QUARTIC, f(-x))
        c = cmath.cos(x)
        even_res.append(relative_gap(a, b))
        closed_res.append(relative_gap(a, -4 * c**4 + 4 * c**2 - 1))
        u = eval_complex(EO_QUADRATIC, f(x) - 1)
        v = eval_complex(EO_QUADRATIC, f(-x) - 1)
        odd_res.append(relative_gap(u, -v))
    return EoDemoReport(report(even_res), report(closed_res), report(odd_res))
