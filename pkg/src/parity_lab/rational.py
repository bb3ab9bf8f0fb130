"""Quotients of polynomials in lowest terms, with composition and cyclic classes."""

from __future__ import annotations

from fractions import Fraction

from .poly import (
    CyclicClass,
    CyclicKind,
    InvalidModulus,
    UniPoly,
    as_rational,
    eval_complex,
    poly_gcd,
    residue_class,
)


class DegenerateComposition(ArithmeticError):
    pass


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic. Immutable."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None):
        if den is None:
            den = UniPoly.constant(1)
        if not isinstance(num, UniPoly):
            num = UniPoly.constant(num)
        if not isinstance(den, UniPoly):
            den = UniPoly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = num, UniPoly.constant(1)
        else:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num, den = num // g, den // g
            lc = Fraction(den.leading_coefficient())
            if lc != 1:
                num, den = num.scale(1 / lc), den.scale(1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def z(cls) -> "RationalFunction":
        return cls(UniPoly.z())

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def analytic_at_zero(self) -> bool:
        return self.den.at_zero() != 0

    def at_zero(self):
        """f(0), or None at a pole."""
        d = self.den.at_zero()
        if d == 0:
            return None
        return as_rational(Fraction(self.num.at_zero()) / d)

    def eval_complex(self, x: complex) -> complex:
        return eval_complex(self.num, x) / eval_complex(self.den, x)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _lift(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other if isinstance(other, UniPoly) else UniPoly.constant(other))

    def __add__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("power must be a non-negative int")
        return RationalFunction(self.num**n, self.den**n)

    def compose(self, g: "RationalFunction") -> "RationalFunction":
        return rf_compose(self, g)

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, UniPoly, int, Fraction)):
            o = self._lift(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction('{self}')"

    def __reduce__(self):
        return (RationalFunction, (self.num, self.den))


def rf_new(num: UniPoly, den: UniPoly) -> RationalFunction:
    return RationalFunction(num, den)


def _homogenized(p: UniPoly, a: UniPoly, b: UniPoly, n: int) -> UniPoly:
    # sum_i p_i a^i b^(n-i), i.e. b^n * p(a/b)
    out = UniPoly()
    a_pows = [UniPoly.constant(1)]
    b_pows = [UniPoly.constant(1)]
    for _ in range(n):
        a_pows.append(a_pows[-1] * a)
        b_pows.append(b_pows[-1] * b)
    for e, c in p.terms():
        out = out + (a_pows[e] * b_pows[n - e]).scale(c)
    return out


def rf_compose(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    """f(g(z)) with denominators cleared over den(g)^n, n = max(deg num f, deg den f)."""
    n = max(f.num.degree if not f.num.is_zero() else 0, f.den.degree)
    num = _homogenized(f.num, g.num, g.den, n)
    den = _homogenized(f.den, g.num, g.den, n)
    if den.is_zero():
        raise DegenerateComposition(f"denominator of ({f}) vanishes identically at g = {g}")
    return RationalFunction(num, den)


def rf_cyclic_class(f: RationalFunction, modulus: int) -> CyclicClass:
    """Exact test of f(wz) = w^k f(z).

    In lowest terms with den monic, f(wz) = w^k f(z) forces den(wz) = w^j den(z)
    and num(wz) = w^(j+k) num(z) for one j, i.e. den in C_j and num in C_(j+k).
    Both are exponent-residue scans, so no cyclotomic arithmetic is needed.
    """
    if not isinstance(modulus, int) or modulus < 2:
        raise InvalidModulus(f"modulus must be an integer >= 2, got {modulus!r}")
    if f.is_zero():
        return CyclicClass(modulus, CyclicKind.ZERO)
    nc = residue_class(f.num.exponents(), modulus)
    dc = residue_class(f.den.exponents(), modulus)
    if not (nc.in_c and dc.in_c):
        return CyclicClass(modulus, CyclicKind.NOT_CYCLIC)
    return CyclicClass(modulus, CyclicKind.CLASS, (nc.residue - dc.residue) % modulus)


def parity_by_cross_multiplication(f: RationalFunction) -> str | None:
    """N = 2 route: 'even' if P(z)Q(-z) = Q(z)P(-z), 'odd' if = -Q(z)P(-z)."""
    lhs = f.num * f.den.reflect()
    rhs = f.den * f.num.reflect()
    if lhs == rhs:
        return "even"
    if lhs == -rhs:
        return "odd"
    return None
