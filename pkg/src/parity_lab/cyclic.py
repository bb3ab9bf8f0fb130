"""Cyclic compositions mod a prime N.

All exact tests are exponent-residue scans; the root of unity only appears
in :func:`numeric_omega_check`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .outcomes import Verdict, VerificationReport, relative_gap, unit_circle
from .parity import PowerShift
from .poly import CyclicClass, InvalidModulus, UniPoly, cyclic_class, eval_complex


_WITNESS_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set; deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for b in _WITNESS_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESS_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeModulus:
    N: int

    def __post_init__(self):
        if not isinstance(self.N, int) or isinstance(self.N, bool):
            raise InvalidModulus(f"modulus must be an int, got {self.N!r}")
        if not 2 <= self.N < 2**64:
            raise InvalidModulus(f"modulus must lie in [2, 2^64), got {self.N}")
        if not is_prime(self.N):
            raise InvalidModulus(f"modulus {self.N} is not prime")

    @property
    def omega(self) -> complex:
        return cmath.exp(2j * cmath.pi / self.N)

    def __int__(self):
        return self.N


class UseParityModule(ValueError):
    """Raised for N = 2, where the even/odd classifiers apply instead."""


@dataclass(frozen=True)
class RightCyclicResult:
    """Whether some non-constant entire f puts f(p(z)) in C.

    When it does, ``residue`` is the class of p - p(0) (0 for constant p) and
    ``witness`` is f(z) = (z - p(0))^N.
    """

    exists: bool
    modulus: int
    residue: int | None = None
    witness: PowerShift | None = None

    def to_dict(self) -> dict:
        return {
            "exists": self.exists,
            "modulus": self.modulus,
            "residue": self.residue,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def right_cyclic_classify(p: UniPoly, m: PrimeModulus) -> RightCyclicResult:
    N = m.N
    if N == 2:
        raise UseParityModule("N = 2: use classify_rpe / classify_rpo")
    c = p.at_zero()
    shifted = cyclic_class(p - c, N)
    if not shifted.in_c:
        return RightCyclicResult(False, N)
    witness = PowerShift(c, N)
    composed = cyclic_class(witness.as_poly().compose(p), N)
    if not composed.in_c0:
        raise AssertionError(f"witness {witness.describe()} failed on {p}: {composed}")
    return RightCyclicResult(True, N, shifted.residue or 0, witness)


def composition_class(p: UniPoly, q: UniPoly, m: PrimeModulus) -> CyclicClass:
    return cyclic_class(p.compose(q), m.N)


def proposition_c_assert(p: UniPoly, q: UniPoly, m: PrimeModulus) -> Verdict:
    """p non-constant, q(0) = 0 and q not cyclic imply p(q) not cyclic."""
    if p.is_constant():
        return Verdict.unmet("p constant")
    if q.at_zero() != 0:
        return Verdict.unmet("q(0) != 0")
    if cyclic_class(q, m.N).in_c:
        return Verdict.unmet("q cyclic")
    pq = composition_class(p, q, m)
    if pq.in_c:
        return Verdict.violation("p(q) cyclic", p=str(p), q=str(q), N=m.N, class_pq=str(pq))
    return Verdict.holds()


def theorem_f_a_assert(p: UniPoly, q: UniPoly, m: PrimeModulus) -> Verdict:
    """Decomposition of a cyclic p(q) when q(0) = 0."""
    N = m.N
    if q.at_zero() != 0:
        return Verdict.unmet("q(0) != 0")
    pq = composition_class(p, q, m)
    if not pq.in_c:
        return Verdict.unmet("p(q) not cyclic")
    cp, cq = cyclic_class(p, N), cyclic_class(q, N)
    details = dict(p=str(p), q=str(q), N=N, class_p=str(cp), class_q=str(cq), class_pq=str(pq))
    if not (cp.in_c or cq.in_c):
        return Verdict.violation("neither p nor q cyclic", **details)
    if not p.is_constant() and not cq.in_c0 and not (cp.in_c and cq.in_c):
        return Verdict.violation("p non-constant, q not in C_0, but not both cyclic", **details)
    if pq.in_c0 and not (cp.in_c0 or cq.in_c0):
        return Verdict.violation("p(q) in C_0 but neither p nor q in C_0", **details)
    return Verdict.holds()


@dataclass(frozen=True)
class ShiftDecomposition:
    verdict: Verdict
    r: UniPoly | None = None
    s: UniPoly | None = None
    r_class: CyclicClass | None = None
    s_class: CyclicClass | None = None
    conclusion_ok: bool | None = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.to_dict(),
            "r": None if self.r is None else str(self.r),
            "s": None if self.s is None else str(self.s),
            "r_class": None if self.r_class is None else str(self.r_class),
            "s_class": None if self.s_class is None else str(self.s_class),
            "conclusion_ok": self.conclusion_ok,
        }


def shift_decompose(p: UniPoly, q: UniPoly, m: PrimeModulus) -> ShiftDecomposition:
    """Write q = r + q(0), p = s(z - q(0)) and check r, s cyclic when r not in C_0."""
    N = m.N
    c = q.at_zero()
    if c == 0:
        return ShiftDecomposition(Verdict.unmet("q(0) = 0"))
    if p.is_constant():
        return ShiftDecomposition(Verdict.unmet("p constant"))
    pq = composition_class(p, q, m)
    if not pq.in_c:
        return ShiftDecomposition(Verdict.unmet("p(q) not cyclic"))
    r = q - c
    s = p.compose(UniPoly({1: 1, 0: c}))
    rc, sc = cyclic_class(r, N), cyclic_class(s, N)
    ok = rc.in_c0 or (rc.in_c and sc.in_c)
    if ok:
        verdict = Verdict.holds()
    else:
        verdict = Verdict.violation(
            "r not in C_0 but r, s not both cyclic",
            p=str(p), q=str(q), N=N, r=str(r), s=str(s), class_r=str(rc), class_s=str(sc),
        )
    return ShiftDecomposition(verdict, r, s, rc, sc, ok)


def self_composition_assert(p: UniPoly, m: PrimeModulus) -> Verdict:
    """p(p) in C with p(0) = 0 gives p in C; p(p) in C_0 gives p in C_0."""
    N = m.N
    pp = composition_class(p, p, m)
    cp = cyclic_class(p, N)
    claim_a = p.at_zero() == 0 and pp.in_c
    claim_b = pp.in_c0
    if not (claim_a or claim_b):
        reasons = []
        if p.at_zero() != 0:
            reasons.append("p(0) != 0")
        if not pp.in_c:
            reasons.append("p(p) not cyclic")
        elif not pp.in_c0:
            reasons.append("p(p) not in C_0")
        return Verdict.unmet("; ".join(reasons))
    details = dict(p=str(p), N=N, class_p=str(cp), class_pp=str(pp))
    if claim_a and not cp.in_c:
        return Verdict.violation("p(0) = 0 and p(p) cyclic but p not cyclic", **details)
    if claim_b and not cp.in_c0:
        return Verdict.violation("p(p) in C_0 but p not in C_0", **details)
    return Verdict.holds()


def numeric_omega_check(
    p: UniPoly, k: int, m: PrimeModulus, samples: int = 64, tol: float = 1e-9
) -> VerificationReport:
    """Floating-point check of p(w x) = w^k p(x) with w = exp(2 pi i/N)."""
    w = m.omega
    wk = w**k
    worst = 0.0
    for x in unit_circle(samples):
        worst = max(worst, relative_gap(eval_complex(p, w * x), wk * eval_complex(p, x)))
    return VerificationReport(worst, tol, samples, worst <= tol)


def lemma_mod_holds(N: int, m: int, n: int, r: int) -> bool | None:
    """n = 0 and r != m (mod N) imply m(n-1) + r != 0 (mod N); None if hypotheses fail."""
    if n % N != 0 or (r - m) % N == 0:
        return None
    return (m * (n - 1) + r) % N != 0
