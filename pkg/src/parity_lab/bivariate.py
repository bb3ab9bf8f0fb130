"""Sparse polynomials in z and w, and compositions P(Q(z, w)), P(Q(z), R(z))."""

from __future__ import annotations

from typing import Iterator, Mapping

from .outcomes import Verdict
from .poly import (
    ZERO_DEGREE,
    Rational,
    UniPoly,
    as_rational,
    format_monomial,
    join_signed,
)


class BiPoly:
    """Immutable sparse polynomial; keys are (z exponent, w exponent)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError("exponents must be non-negative")
                c = as_rational(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "BiPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def z(cls) -> "BiPoly":
        return cls._wrap({(1, 0): 1})

    @classmethod
    def w(cls) -> "BiPoly":
        return cls._wrap({(0, 1): 1})

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def from_unipoly(cls, p: UniPoly) -> "BiPoly":
        return cls._wrap({(e, 0): c for e, c in p.terms()})

    def terms(self) -> Iterator[tuple[tuple[int, int], Rational]]:
        """Terms in graded-lex order: total degree descending, then z exponent descending."""
        for key in sorted(self._terms, key=lambda ij: (ij[0] + ij[1], ij[0]), reverse=True):
            yield key, self._terms[key]

    def coeff(self, i: int, j: int) -> Rational:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def at_origin(self) -> Rational:
        return self._terms.get((0, 0), 0)

    def uses_w(self) -> bool:
        return any(j for _, j in self._terms)

    def to_unipoly(self) -> UniPoly:
        if self.uses_w():
            raise ValueError(f"{self} depends on w")
        return UniPoly({i: c for (i, _), c in self._terms.items()})

    @property
    def total_degree(self):
        if not self._terms:
            return ZERO_DEGREE
        return max(i + j for i, j in self._terms)

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = as_rational(s)
            else:
                out.pop(k, None)
        return BiPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly._wrap({k: as_rational(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("power must be a non-negative int")
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        return join_signed(
            (c, format_monomial(c, [("z", i), ("w", j)])) for (i, j), c in self.terms()
        )

    def __repr__(self):
        return f"BiPoly('{self}')"

    def __reduce__(self):
        return (BiPoly, (self._terms,))


def _lift(other) -> BiPoly | None:
    if isinstance(other, BiPoly):
        return other
    if isinstance(other, UniPoly):
        return BiPoly.from_unipoly(other)
    try:
        return BiPoly.constant(other)
    except TypeError:
        return None


def bipoly_is_even(P: BiPoly) -> bool:
    """P(-z, -w) = P(z, w): every term has even total degree."""
    return all((i + j) % 2 == 0 for i, j in P._terms)


def bipoly_is_even_each_variable(P: BiPoly) -> bool:
    """Even in z and in w separately."""
    return all(i % 2 == 0 and j % 2 == 0 for i, j in P._terms)


def restrict_line(P: BiPoly, a, b) -> UniPoly:
    """P(a z, b z)."""
    a, b = as_rational(a), as_rational(b)
    out: dict = {}
    for (i, j), c in P._terms.items():
        out[i + j] = out.get(i + j, 0) + c * a**i * b**j
    return UniPoly(out)


def homogeneous_components(P: BiPoly) -> dict[int, BiPoly]:
    groups: dict[int, dict] = {}
    for (i, j), c in P._terms.items():
        groups.setdefault(i + j, {})[(i, j)] = c
    return {k: BiPoly._wrap(v) for k, v in sorted(groups.items())}


def odd_homogeneous_components(P: BiPoly) -> list[tuple[int, BiPoly]]:
    """Odd-degree homogeneous components, highest degree first."""
    comps = homogeneous_components(P)
    return [(k, comps[k]) for k in sorted(comps, reverse=True) if k % 2]


def subst_uni(P: BiPoly, Q: UniPoly, R: UniPoly) -> UniPoly:
    """P(Q(z), R(z))."""
    q_pows = {0: UniPoly.constant(1)}
    r_pows = {0: UniPoly.constant(1)}

    def pw(cache, base, n):
        if n not in cache:
            cache[n] = base**n
        return cache[n]

    out = UniPoly()
    for (i, j), c in P._terms.items():
        out = out + (pw(q_pows, Q, i) * pw(r_pows, R, j)).scale(c)
    return out


def compose_into(P: UniPoly, Q: BiPoly) -> BiPoly:
    """P(Q(z, w)) by Horner."""
    result = BiPoly()
    for e in range(P.degree if not P.is_zero() else -1, -1, -1):
        result = result * Q + P.coeff(e)
    return result


def is_homogeneous(P: BiPoly):
    """Common total degree of all terms, ZERO_DEGREE for 0, None if mixed."""
    degrees = {i + j for i, j in P._terms}
    if not degrees:
        return ZERO_DEGREE
    if len(degrees) == 1:
        return degrees.pop()
    return None


def is_symmetric(P: BiPoly) -> bool:
    return all(P._terms.get((j, i)) == c for (i, j), c in P._terms.items())


def theorem_pqr_assert(P: UniPoly, Q: BiPoly) -> Verdict:
    """Q(0,0) = 0 and P(Q) even imply P even or Q even."""
    if Q.at_origin() != 0:
        return Verdict.unmet("Q(0,0) != 0")
    R = compose_into(P, Q)
    if not bipoly_is_even(R):
        return Verdict.unmet("P(Q) not even")
    if P.is_even() or bipoly_is_even(Q):
        return Verdict.holds()
    return Verdict.violation("P(Q) even but neither P nor Q even", P=str(P), Q=str(Q), R=str(R))


def homogeneous_pqr_assert(P: UniPoly, Q: BiPoly) -> Verdict:
    """Q(0,0) = 0 and P(Q) homogeneous imply P or Q homogeneous.

    A univariate P counts as homogeneous when it is a single monomial (or 0).
    """
    if Q.at_origin() != 0:
        return Verdict.unmet("Q(0,0) != 0")
    R = compose_into(P, Q)
    if is_homogeneous(R) is None:
        return Verdict.unmet("P(Q) not homogeneous")
    if len(P) <= 1 or is_homogeneous(Q) is not None:
        return Verdict.holds()
    return Verdict.violation(
        "P(Q) homogeneous but neither P nor Q homogeneous", P=str(P), Q=str(Q), R=str(R)
    )
