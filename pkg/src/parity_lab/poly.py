"""Exact sparse univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` values, except that integral
coefficients are stored as plain ``int`` (they compare and hash equal, and
integer arithmetic is much cheaper in the exhaustive sweeps).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Iterator, Mapping, Union

Rational = Union[int, Fraction]


class _ZeroDegree:
    """Degree of the zero polynomial. Deliberately not a number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO_DEGREE"

    def __reduce__(self):
        return (_ZeroDegree, ())


ZERO_DEGREE = _ZeroDegree()


def as_rational(value) -> Rational:
    """Coerce ``value`` to an exact rational; integral values come back as int."""
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return as_rational(Fraction(value))
    if isinstance(value, _RationalABC):
        return as_rational(Fraction(value.numerator, value.denominator))
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def format_rational(c: Rational) -> str:
    c = as_rational(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(coeff: Rational, powers: Iterable[tuple[str, int]]) -> str:
    """Render ``coeff * var^e * ...`` without the sign of ``coeff``."""
    factors = []
    for var, e in powers:
        if e == 1:
            factors.append(var)
        elif e > 1:
            factors.append(f"{var}^{e}")
    mag = abs(coeff)
    if not factors:
        return format_rational(mag)
    if mag == 1:
        return "*".join(factors)
    return "*".join([format_rational(mag)] + factors)


def join_signed(pieces: Iterable[tuple[Rational, str]]) -> str:
    out = []
    for coeff, body in pieces:
        if not out:
            out.append(body if coeff > 0 else "-" + body)
        else:
            out.append((" + " if coeff > 0 else " - ") + body)
    return "".join(out) if out else "0"


class UniPoly:
    """Immutable sparse polynomial in ``z`` with exact rational coefficients.

    >>> z = UniPoly.z()
    >>> str((z + 1) * (z - 1))
    'z^2 - 1'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                    raise ValueError(f"exponent must be a non-negative int, got {e!r}")
                c = as_rational(c)
                if c:
                    clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "UniPoly":
        # terms must already be clean: int exponents, normalized nonzero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def z(cls) -> "UniPoly":
        return cls._wrap({1: 1})

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e: int) -> "UniPoly":
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "UniPoly":
        """Build from coefficients in ascending exponent order."""
        return cls(dict(enumerate(coeffs)))

    # -- inspection -------------------------------------------------------

    def terms(self) -> Iterator[tuple[int, Rational]]:
        """(exponent, coefficient) pairs in decreasing exponent order."""
        for e in sorted(self._terms, reverse=True):
            yield e, self._terms[e]

    def exponents(self):
        return self._terms.keys()

    def coeff(self, e: int) -> Rational:
        return self._terms.get(e, 0)

    @property
    def degree(self):
        if not self._terms:
            return ZERO_DEGREE
        return max(self._terms)

    def leading_coefficient(self) -> Rational:
        if not self._terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._terms[max(self._terms)]

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def at_zero(self) -> Rational:
        return self._terms.get(0, 0)

    def __len__(self):
        return len(self._terms)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly({0: other})

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = as_rational(s)
            else:
                out.pop(e, None)
        return UniPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._wrap({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "UniPoly":
        c = as_rational(c)
        if not c:
            return UniPoly._wrap({})
        return UniPoly._wrap({e: as_rational(v * c) for e, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return UniPoly._wrap({e: as_rational(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError(f"power must be a non-negative int, got {n!r}")
        result = UniPoly._wrap({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: "UniPoly"):
        if not isinstance(other, UniPoly):
            other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dq, lc = other.degree, Fraction(other.leading_coefficient())
        rem = dict(self._terms)
        quo = {}
        while rem:
            dr = max(rem)
            if dr < dq:
                break
            c = as_rational(rem[dr] / lc)
            shift = dr - dq
            quo[shift] = c
            for e, v in other._terms.items():
                k = e + shift
                s = rem.get(k, 0) - c * v
                if s:
                    rem[k] = as_rational(s)
                else:
                    rem.pop(k, None)
        return UniPoly._wrap(quo), UniPoly._wrap(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(Fraction(1) / Fraction(self.leading_coefficient()))

    # -- structure --------------------------------------------------------

    def compose(self, q: "UniPoly") -> "UniPoly":
        """Return self(q(z)) exactly (Horner with cached powers for gaps)."""
        if not self._terms:
            return self
        exps = sorted(self._terms, reverse=True)
        powers = {1: q}

        def q_pow(k):
            if k not in powers:
                powers[k] = q ** k
            return powers[k]

        result = UniPoly._wrap({0: self._terms[exps[0]]})
        for prev, e in zip(exps, exps[1:]):
            result = result * q_pow(prev - e) + self._terms[e]
        if exps[-1]:
            result = result * q_pow(exps[-1])
        return result

    def reflect(self) -> "UniPoly":
        """p(-z)."""
        return UniPoly._wrap({e: (-c if e & 1 else c) for e, c in self._terms.items()})

    def even_part(self) -> "UniPoly":
        return UniPoly._wrap({e: c for e, c in self._terms.items() if not e & 1})

    def odd_part(self) -> "UniPoly":
        return UniPoly._wrap({e: c for e, c in self._terms.items() if e & 1})

    def derivative(self) -> "UniPoly":
        return UniPoly._wrap({e - 1: e * c for e, c in self._terms.items() if e})

    def is_even(self) -> bool:
        return all(not e & 1 for e in self._terms)

    def is_odd(self) -> bool:
        return all(e & 1 for e in self._terms)

    def __call__(self, x):
        if isinstance(x, UniPoly):
            return self.compose(x)
        if isinstance(x, complex) or isinstance(x, float):
            return eval_complex(self, x)
        x = as_rational(x)
        return as_rational(sum((c * x**e for e, c in self._terms.items()), 0))

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self._terms == other._terms
        try:
            return self._terms == self._coerce(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        return join_signed(
            (c, format_monomial(c, [("z", e)])) for e, c in self.terms()
        )

    def __repr__(self):
        return f"UniPoly('{self}')"

    def __reduce__(self):
        return (UniPoly, (self._terms,))


def compose(p: UniPoly, q: UniPoly) -> UniPoly:
    return p.compose(q)


def reflect(p: UniPoly) -> UniPoly:
    return p.reflect()


@dataclass(frozen=True)
class EvenOddParts:
    even: UniPoly
    odd: UniPoly


def even_odd_parts(p: UniPoly) -> EvenOddParts:
    """Split p into E(z) = (p(z)+p(-z))/2 and O(z) = (p(z)-p(-z))/2."""
    return EvenOddParts(p.even_part(), p.odd_part())


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the rationals (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def eval_complex(p: UniPoly, x: complex) -> complex:
    """Horner evaluation in double-precision complex arithmetic."""
    x = complex(x)
    acc = 0j
    prev = None
    for e, c in p.terms():
        if prev is not None:
            acc *= x ** (prev - e)
        acc += float(c)
        prev = e
    if prev:
        acc *= x**prev
    return acc


class CyclicKind(enum.Enum):
    ZERO = "zero"
    NOT_CYCLIC = "not_cyclic"
    CLASS = "class"


@dataclass(frozen=True)
class CyclicClass:
    """Membership of a polynomial in C_k = {f : f(wz) = w^k f(z)} mod N."""

    modulus: int
    kind: CyclicKind
    residue: int | None = None

    @property
    def in_c(self) -> bool:
        # the zero function lies in every C_k
        return self.kind is not CyclicKind.NOT_CYCLIC

    @property
    def in_c0(self) -> bool:
        return self.kind is CyclicKind.ZERO or self.residue == 0

    def is_class(self, k: int) -> bool:
        return self.kind is CyclicKind.CLASS and self.residue == k % self.modulus

    def __str__(self):
        if self.kind is CyclicKind.ZERO:
            return "zero"
        if self.kind is CyclicKind.NOT_CYCLIC:
            return f"not cyclic (mod {self.modulus})"
        return f"C_{self.residue} (mod {self.modulus})"

    def to_dict(self) -> dict:
        return {"modulus": self.modulus, "kind": self.kind.value, "residue": self.residue}


class InvalidModulus(ValueError):
    pass


def residue_class(exponents: Iterable[int], modulus: int) -> CyclicClass:
    residues = {e % modulus for e in exponents}
    if not residues:
        return CyclicClass(modulus, CyclicKind.ZERO)
    if len(residues) > 1:
        return CyclicClass(modulus, CyclicKind.NOT_CYCLIC)
    return CyclicClass(modulus, CyclicKind.CLASS, residues.pop())


def cyclic_class(p: UniPoly, modulus: int) -> CyclicClass:
    """Exponent-residue test; primality of ``modulus`` is not required here."""
    if not isinstance(modulus, int) or modulus < 2:
        raise InvalidModulus(f"modulus must be an integer >= 2, got {modulus!r}")
    return residue_class(p.exponents(), modulus)
