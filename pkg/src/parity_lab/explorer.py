"""Bounded enumeration of small instances, theorem sweeps and open-question searches.

Families are enumerated in a fixed order: graded by degree, then
lexicographically on the coefficient tuple (leading coefficient first) with
the coefficient set sorted ascending.  Any instance can be decoded from its
index, so sweeps split into disjoint index ranges and run concurrently.
"""

from __future__ import annotations

import enum
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator

from .bivariate import (
    BiPoly,
    homogeneous_pqr_assert,
    compose_into,
    is_symmetric,
    theorem_pqr_assert,
)
from .cyclic import (
    PrimeModulus,
    is_prime,
    lemma_mod_holds,
    proposition_c_assert,
    self_composition_assert,
    shift_decompose,
    theorem_f_a_assert,
)
from .outcomes import Status, Verdict
from .parity import power_parity_check
from .poly import CyclicKind, UniPoly, as_rational, format_rational
from .rational import DegenerateComposition, RationalFunction, rf_compose, rf_cyclic_class

DEFAULT_CEILING = 10**8
DEFAULT_COEFFS = (-2, -1, 0, 1, 2)


def default_ceiling() -> int:
    raw = os.environ.get("PARITY_LAB_CEILING")
    return int(raw) if raw else DEFAULT_CEILING


class SizeLimitExceeded(ValueError):
    def __init__(self, size: int, ceiling: int):
        self.size = size
        self.ceiling = ceiling
        super().__init__(f"family has {size} instances, above the ceiling {ceiling}")


class Family(enum.Enum):
    POLYNOMIAL = "polynomial"
    RATIONAL_FUNCTION = "rational"
    BIVARIATE = "bivariate"


@dataclass(frozen=True)
class SearchConfig:
    max_degree: int = 3
    coefficient_set: tuple = DEFAULT_COEFFS
    modulus: PrimeModulus | None = None
    family: Family = Family.POLYNOMIAL
    parallelism: int = 1
    max_power: int = 4
    bivariate_degree: int = 2
    ceiling: int = field(default_factory=default_ceiling)

    def __post_init__(self):
        if self.max_degree < 1:
            raise ValueError("max_degree must be >= 1")
        coeffs = tuple(sorted({as_rational(c) for c in self.coefficient_set}))
        if not coeffs:
            raise ValueError("coefficient set is empty")
        if 0 not in coeffs:
            raise ValueError("coefficient set must contain 0")
        object.__setattr__(self, "coefficient_set", coeffs)
        if isinstance(self.modulus, int):
            object.__setattr__(self, "modulus", PrimeModulus(self.modulus))
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")

    def describe(self) -> dict:
        return {
            "family": self.family.value,
            "max_degree": self.max_degree,
            "coefficients": [format_rational(c) for c in self.coefficient_set],
            "modulus": None if self.modulus is None else self.modulus.N,
            "max_power": self.max_power,
            "bivariate_degree": self.bivariate_degree,
        }


# -- enumeration ---------------------------------------------------------------


class CoefficientFamily:
    """Nonzero coefficient vectors over ``slots`` positions, indexable.

    Vectors are graded by their highest nonzero slot; within a grade the
    order is lexicographic from the highest slot down.
    """

    def __init__(self, coeffs: tuple, slots: int):
        self.coeffs = coeffs
        self.nonzero = tuple(c for c in coeffs if c != 0)
        self.slots = slots
        base = len(coeffs)
        self.blocks = [len(self.nonzero) * base**d for d in range(slots)]

    def __len__(self):
        return sum(self.blocks)

    def vector_at(self, index: int) -> list:
        if not 0 <= index < len(self):
            raise IndexError(index)
        top = 0
        while index >= self.blocks[top]:
            index -= self.blocks[top]
            top += 1
        base = len(self.coeffs)
        vec = [0] * self.slots
        for pos in range(top):
            index, digit = divmod(index, base)
            vec[pos] = self.coeffs[digit]
        vec[top] = self.nonzero[index]
        return vec


def poly_family(config: SearchConfig) -> CoefficientFamily:
    return CoefficientFamily(config.coefficient_set, config.max_degree + 1)


def bivariate_monomials(total_degree: int) -> list[tuple[int, int]]:
    return [(d - j, j) for d in range(total_degree + 1) for j in range(d + 1)]


def family_size(config: SearchConfig) -> int:
    n = len(poly_family(config))
    if config.family is Family.RATIONAL_FUNCTION:
        return n * n
    if config.family is Family.BIVARIATE:
        return len(CoefficientFamily(config.coefficient_set, len(bivariate_monomials(config.max_degree))))
    return n


def _check_size(size: int, config: SearchConfig):
    if size > config.ceiling:
        raise SizeLimitExceeded(size, config.ceiling)


def polynomial_at(family: CoefficientFamily, index: int) -> UniPoly:
    return UniPoly(dict(enumerate(family.vector_at(index))))


def bipoly_at(family: CoefficientFamily, monomials, index: int) -> BiPoly:
    return BiPoly(dict(zip(monomials, family.vector_at(index))))


def enumerate_family(config: SearchConfig, start: int = 0, stop: int | None = None) -> Iterator:
    """Instances of ``config.family`` with indices in [start, stop).

    Rational functions are yielded as (num, den) pairs, numerator index major;
    canonicalize with :class:`RationalFunction` (pairs sharing a gcd or a
    denominator scale collapse to the same function).
    """
    size = family_size(config)
    _check_size(size, config)
    stop = size if stop is None else min(stop, size)
    if config.family is Family.POLYNOMIAL:
        fam = poly_family(config)
        for i in range(start, stop):
            yield polynomial_at(fam, i)
    elif config.family is Family.BIVARIATE:
        monos = bivariate_monomials(config.max_degree)
        fam = CoefficientFamily(config.coefficient_set, len(monos))
        for i in range(start, stop):
            yield bipoly_at(fam, monos, i)
    else:
        fam = poly_family(config)
        n = len(fam)
        for i in range(start, stop):
            a, b = divmod(i, n)
            yield polynomial_at(fam, a), polynomial_at(fam, b)


# -- reports -------------------------------------------------------------------


@dataclass
class SearchReport:
    name: str
    kind: str  # "theorem" or "open_question"
    scope: dict
    instances_checked: int
    expected_instances: int
    hypotheses_met: int = 0
    violations: list = field(default_factory=list)
    supporting_examples: list = field(default_factory=list)
    distinct_functions: int | None = None
    elapsed: float = 0.0

    @property
    def consistent(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        if self.kind == "theorem":
            if self.consistent:
                return "consistent with the theorem"
            return "VIOLATION: the theorem is proved, so this indicates an implementation bug"
        if self.consistent:
            return (
                f"{len(self.supporting_examples)} hits in the searched range"
                " (evidence only, question not resolved)"
            )
        return "counterexample shape found in the searched range"

    def to_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "name": self.name,
            "kind": self.kind,
            "scope": self.scope,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "expected_instances": self.expected_instances,
            "hypotheses_met": self.hypotheses_met,
            "violations": self.violations,
            "supporting_examples": self.supporting_examples,
            "distinct_functions": self.distinct_functions,
        }
        if include_elapsed:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out

    def summary(self) -> str:
        lines = [
            f"{self.name}: {self.status}",
            f"  instances checked: {self.instances_checked} (expected {self.expected_instances})",
            f"  hypotheses met:    {self.hypotheses_met}",
            f"  violations:        {len(self.violations)}",
            f"  examples:          {len(self.supporting_examples)}",
        ]
        if self.distinct_functions is not None:
            lines.append(f"  distinct functions: {self.distinct_functions}")
        lines.append(f"  elapsed:           {self.elapsed:.2f}s")
        for v in self.violations[:10]:
            lines.append(f"  ! {v}")
        return "\n".join(lines)


# -- theorem suites ------------------------------------------------------------


class Theorem(enum.Enum):
    PROP_C = "prop-c"
    THM_F_A = "thm-f-a"
    THM_F_B = "thm-f-b"
    SELF_COMP = "self-comp"
    LEMMA_B = "lemma-b"
    PQR = "pqr"
    HOMOG_PQR = "homog-pqr"
    BOREL_POLY = "borel-poly"
    LEMMA_MOD = "lemma-mod"


CYCLIC_THEOREMS = {Theorem.PROP_C, Theorem.THM_F_A, Theorem.THM_F_B, Theorem.SELF_COMP}


def _odd_plus_constant(f: UniPoly) -> bool:
    return f.even_part().is_constant()


def borel_poly_assert(f: UniPoly, p: UniPoly) -> Verdict:
    """For polynomial f: neither even nor odd + const gives p(f) not even;
    not odd + const gives p(f) not odd (p non-constant)."""
    if p.is_constant():
        return Verdict.unmet("p constant")
    if _odd_plus_constant(f):
        return Verdict.unmet("f is odd plus a constant")
    pf = p.compose(f)
    if not f.is_even() and pf.is_even():
        return Verdict.violation("p(f) even", f=str(f), p=str(p), pf=str(pf))
    if pf.is_odd():
        return Verdict.violation("p(f) odd", f=str(f), p=str(p), pf=str(pf))
    return Verdict.holds()


def lemma_b_assert(f: UniPoly, n: int) -> Verdict:
    res = power_parity_check(f, n)
    if not res.power_even:
        return Verdict.unmet("f^n not even")
    if res.f_parity is None:
        return Verdict.violation("f^n even but f neither even nor odd", f=str(f), n=n)
    return Verdict.holds(parity=res.f_parity.value)


class _Suite:
    """Index space and per-instance check for one theorem."""

    def __init__(self, theorem: Theorem, config: SearchConfig):
        self.theorem = theorem
        self.config = config
        fam = poly_family(config)
        self.polys = [polynomial_at(fam, i) for i in range(len(fam))]
        m = config.modulus
        if theorem in CYCLIC_THEOREMS and m is None:
            raise ValueError(f"{theorem.value} needs a prime modulus")
        n = len(self.polys)
        if theorem in (Theorem.PQR, Theorem.HOMOG_PQR):
            monos = bivariate_monomials(config.bivariate_degree)
            bfam = CoefficientFamily(config.coefficient_set, len(monos))
            self.bipolys = [bipoly_at(bfam, monos, i) for i in range(len(bfam))]
            self.size = n * len(self.bipolys)
        elif theorem is Theorem.SELF_COMP:
            self.size = n
        elif theorem is Theorem.LEMMA_B:
            self.size = n * config.max_power
        else:
            self.size = n * n

    def check(self, i: int) -> tuple[Verdict, dict | None]:
        t, m, n = self.theorem, self.config.modulus, len(self.polys)
        if t is Theorem.SELF_COMP:
            return self_composition_assert(self.polys[i], m), None
        if t is Theorem.LEMMA_B:
            a, b = divmod(i, self.config.max_power)
            return lemma_b_assert(self.polys[a], b + 1), None
        if t in (Theorem.PQR, Theorem.HOMOG_PQR):
            a, b = divmod(i, len(self.bipolys))
            fn = theorem_pqr_assert if t is Theorem.PQR else homogeneous_pqr_assert
            return fn(self.polys[a], self.bipolys[b]), None
        a, b = divmod(i, n)
        p, q = self.polys[a], self.polys[b]
        if t is Theorem.PROP_C:
            return proposition_c_assert(p, q, m), None
        if t is Theorem.THM_F_A:
            return theorem_f_a_assert(p, q, m), None
        if t is Theorem.THM_F_B:
            dec = shift_decompose(p, q, m)
            example = None
            if dec.verdict.status is Status.HOLDS and not dec.r_class.in_c0:
                example = {
                    "p": str(p), "q": str(q), "r": str(dec.r), "s": str(dec.s),
                    "r_class": str(dec.r_class), "s_class": str(dec.s_class),
                }
            return dec.verdict, example
        return borel_poly_assert(p, q), None


@dataclass
class _Partial:
    instances: int = 0
    met: int = 0
    violations: list = field(default_factory=list)
    examples: list = field(default_factory=list)


def _run_suite_chunk(theorem: Theorem, config: SearchConfig, start: int, stop: int) -> _Partial:
    suite = _Suite(theorem, config)
    out = _Partial()
    for i in range(start, stop):
        verdict, example = suite.check(i)
        out.instances += 1
        if verdict.status is Status.HYPOTHESES_UNMET:
            continue
        out.met += 1
        if verdict.status is Status.VIOLATION:
            out.violations.append({"index": i, "reason": verdict.reason, **verdict.details})
        elif example is not None:
            out.examples.append({"index": i, **example})
    return out


def _chunks(size: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, size))
    step = -(-size // parts)
    return [(s, min(s + step, size)) for s in range(0, size, step)]


def _map_chunks(fn: Callable, args: tuple, size: int, parallelism: int) -> list:
    ranges = _chunks(size, parallelism) if size else []
    if parallelism <= 1 or len(ranges) <= 1:
        return [fn(*args, a, b) for a, b in ranges]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        futures = [pool.submit(fn, *args, a, b) for a, b in ranges]
        return [f.result() for f in futures]


def lemma_mod_sweep(primes=(2, 3, 5, 7, 11, 13)) -> SearchReport:
    """Integer check over 1 <= m, n, r <= 3N for each prime N."""
    t0 = time.perf_counter()
    checked = met = 0
    violations = []
    for N in primes:
        if not is_prime(N):
            raise ValueError(f"{N} is not prime")
        top = 3 * N
        for m in range(1, top + 1):
            for n in range(1, top + 1):
                for r in range(1, top + 1):
                    checked += 1
                    ok = lemma_mod_holds(N, m, n, r)
                    if ok is None:
                        continue
                    met += 1
                    if not ok:
                        violations.append({"N": N, "m": m, "n": n, "r": r})
    expected = sum((3 * N) ** 3 for N in primes)
    return SearchReport(
        Theorem.LEMMA_MOD.value, "theorem", {"primes": list(primes)},
        checked, expected, met, violations, [], None, time.perf_counter() - t0,
    )


def run_theorem_suite(theorem: Theorem | str, config: SearchConfig) -> SearchReport:
    theorem = Theorem(theorem)
    if theorem is Theorem.LEMMA_MOD:
        return lemma_mod_sweep()
    t0 = time.perf_counter()
    suite = _Suite(theorem, config)
    _check_size(suite.size, config)
    parts = _map_chunks(_run_suite_chunk, (theorem, config), suite.size, config.parallelism)
    violations = sorted((v for p in parts for v in p.violations), key=lambda d: d["index"])
    examples = sorted((e for p in parts for e in p.examples), key=lambda d: d["index"])
    return SearchReport(
        theorem.value,
        "theorem",
        config.describe(),
        sum(p.instances for p in parts),
        suite.size,
        sum(p.met for p in parts),
        violations,
        examples,
        None,
        time.perf_counter() - t0,
    )


# -- open questions ----------------------------------------------------------------


def _rf_key(f: RationalFunction) -> str:
    return str(f)


def _q1_poly(f: UniPoly) -> dict | None:
    if f.at_zero() == 0 or f.is_even():
        return None
    if not f.compose(f).is_even():
        return None
    return {"f": str(f), "odd_plus_constant": _odd_plus_constant(f), "scope": "polynomial"}


def _q1_rational(f: RationalFunction) -> dict | None:
    f0 = f.at_zero()
    if f0 is None or f0 == 0:
        return None
    if rf_cyclic_class(f, 2).in_c0:
        return None
    try:
        ff = rf_compose(f, f)
    except DegenerateComposition:
        return None
    if not rf_cyclic_class(ff, 2).in_c0:
        return None
    shifted = rf_cyclic_class(f - f0, 2)
    return {
        "f": str(f),
        "f_of_f": str(ff),
        "f(0)": format_rational(f0),
        "odd_plus_constant": shifted.kind is CyclicKind.ZERO or shifted.is_class(1),
        "scope": "rational, outside question's entire scope",
    }


def _q2_rational(f: RationalFunction, N: int) -> dict | None:
    if rf_cyclic_class(f, N).in_c0:
        return None
    try:
        ff = rf_compose(f, f)
    except DegenerateComposition:
        return None
    if not rf_cyclic_class(ff, N).in_c0:
        return None
    return {
        "R": str(f),
        "R_of_R": str(ff),
        "class_R": str(rf_cyclic_class(f, N)),
        "analytic_at_0": f.analytic_at_zero(),
    }


def _q_chunk(question: str, config: SearchConfig, start: int, stop: int) -> tuple[int, dict]:
    """Evaluate instances in [start, stop).

    Returns the number of instances visited and key -> (first index, hit or None).
    """
    seen: dict = {}
    visited = 0
    N = config.modulus.N if config.modulus else None
    for offset, inst in enumerate(enumerate_family(config, start, stop)):
        i = start + offset
        visited += 1
        if config.family is Family.POLYNOMIAL:
            f = inst
            key = str(f)
            if key in seen:
                continue
            rf = RationalFunction(f)
        else:
            num, den = inst
            if den.is_zero():
                continue
            rf = RationalFunction(num, den)
            key = _rf_key(rf)
            if key in seen:
                continue
        if question == "q1":
            hit = _q1_poly(inst) if config.family is Family.POLYNOMIAL else _q1_rational(rf)
        else:
            hit = _q2_rational(rf, N)
        seen[key] = (i, hit)
    return visited, seen


def _search(question: str, name: str, config: SearchConfig, violation: Callable) -> SearchReport:
    t0 = time.perf_counter()
    size = family_size(config)
    _check_size(size, config)
    parts = _map_chunks(_q_chunk, (question, config), size, config.parallelism)
    merged: dict = {}
    for _, part in parts:
        for key, (i, hit) in part.items():
            if key not in merged or i < merged[key][0]:
                merged[key] = (i, hit)
    hits = sorted(
        ({"index": i, **hit} for i, hit in merged.values() if hit is not None),
        key=lambda d: d["index"],
    )
    return SearchReport(
        name,
        "open_question",
        config.describe(),
        sum(visited for visited, _ in parts),
        size,
        len(hits),
        [h for h in hits if violation(h)],
        hits,
        len(merged),
        time.perf_counter() - t0,
    )


def search_open_q1(config: SearchConfig) -> SearchReport:
    """Look for f with f(f) even, f not even, f(0) != 0, and record whether f = odd + c.

    Only polynomial hits that are not odd + c count as violations; rational
    hits are reported but lie outside the question, which concerns entire f.
    """
    if config.family is Family.BIVARIATE:
        raise ValueError("open question 1 needs a polynomial or rational family")
    return _search(
        "q1", "open-q1", config,
        lambda h: h["scope"] == "polynomial" and not h["odd_plus_constant"],
    )


def search_open_q2(modulus: PrimeModulus | int, config: SearchConfig) -> SearchReport:
    """Look for R not in C_0 with R(R) in C_0, for a prime N >= 3."""
    if not isinstance(modulus, PrimeModulus):
        modulus = PrimeModulus(modulus)
    if modulus.N < 3:
        raise ValueError("open question 2 is posed for primes N >= 3")
    if config.family is Family.BIVARIATE:
        raise ValueError("open question 2 needs a polynomial or rational family")
    config = replace(config, modulus=modulus)
    return _search("q2", "open-q2", config, lambda h: False)


def search_symmetric_remark(config: SearchConfig) -> SearchReport:
    """Pairs (P, Q), Q(0,0) = 0, with P(Q) symmetric but Q not symmetric."""
    t0 = time.perf_counter()
    fam = poly_family(config)
    polys = [polynomial_at(fam, i) for i in range(len(fam))]
    monos = bivariate_monomials(config.bivariate_degree)
    bfam = CoefficientFamily(config.coefficient_set, len(monos))
    size = len(polys) * len(bfam)
    _check_size(size, config)
    hits, met = [], 0
    for b in range(len(bfam)):
        Q = bipoly_at(bfam, monos, b)
        if Q.at_origin() != 0 or is_symmetric(Q):
            continue
        for a, P in enumerate(polys):
            if P.is_constant():
                continue
            met += 1
            R = compose_into(P, Q)
            if is_symmetric(R):
                hits.append({"index": a * len(bfam) + b, "P": str(P), "Q": str(Q), "R": str(R)})
    hits.sort(key=lambda d: d["index"])
    return SearchReport(
        "symmetric-remark", "open_question", config.describe(), size, size, met, [], hits,
        None, time.perf_counter() - t0,
    )
