"""Acceptance criteria, one PASS/FAIL line per check.

Lines are collected in ``RESULTS`` and printed in the pytest terminal summary
(see conftest.py). Run directly with ``python3 tests/test_acceptance.py`` to
print them without pytest.
"""

import random
import sys
import time
from fractions import Fraction

import pytest

from parity_lab.bivariate import BiPoly, subst_uni
from parity_lab.cyclic import PrimeModulus, composition_class, right_cyclic_classify
from parity_lab.explorer import (
    Family,
    SearchConfig,
    lemma_mod_sweep,
    run_theorem_suite,
    search_open_q1,
    search_open_q2,
)
from parity_lab.parity import (
    Case,
    CosSqrt,
    Target,
    build_witness,
    classify_rpe,
    classify_rpo,
    theorem_eo_demo,
    verify_witness_numeric,
)
from parity_lab.parser import parse_bipoly, parse_expr, parse_rational_function
from parity_lab.poly import CyclicKind, UniPoly, cyclic_class
from parity_lab.rational import RationalFunction, rf_compose, rf_cyclic_class, rf_new

RESULTS: list[str] = []

z = UniPoly.z()
SEED = 20240601
PROPERTY_CASES = 10_000


def record(criterion: str, name: str, ok: bool, detail: str = "") -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion} {name}"
    if detail:
        line += f" | {detail}"
    RESULTS.append(line)
    return ok


# -- criterion 1: worked examples, exact, < 1 s in total ------------------------------


def _examples() -> list[tuple[str, bool, str]]:
    out = []
    p = z**2 + 2 * z
    c = classify_rpe(p)
    w = build_witness(c)
    rep = verify_witness_numeric(w, p, Target.EVEN, samples=64, tol=1e-9)
    out.append((
        "classify_rpe(z^2+2z) case C, cos(2 pi sqrt(z+1)), residual <= 1e-9",
        c.case is Case.SHIFTED_ODD_SQUARED and w == CosSqrt(Target.EVEN, 1, -1) and rep.passed,
        f"residual={rep.max_residual:.2e}",
    ))

    q = z**4 + z
    out.append((
        "z^4+z is neither RPE nor RPO",
        classify_rpe(q).case is Case.NONE and classify_rpo(q).case is Case.NONE,
        "",
    ))

    f = rf_new(z, z - 1)
    fg = rf_compose(f, f)
    f2g = rf_compose(f * f, f)
    e = rf_new(z**2 + z + 1, z**2 - z + 1)
    ee = rf_compose(e, e)
    ok = (
        fg == RationalFunction(z) and rf_cyclic_class(fg, 2).is_class(1)
        and f2g == RationalFunction(z**2) and rf_cyclic_class(f2g, 2).is_class(0)
        and ee.num == 3 * z**4 + 7 * z**2 + 3 and ee.den == z**4 + 5 * z**2 + 1
        and rf_cyclic_class(ee, 2).is_class(0)
        and rf_cyclic_class(e, 2).kind is CyclicKind.NOT_CYCLIC and e.at_zero() == 1
    )
    out.append(("rational compositions z/(z-1), its square, (z^2+z+1)/(z^2-z+1)", ok, f"f(f)={ee}"))

    s = subst_uni(BiPoly.z() - BiPoly.w() ** 2, z**6 + z**4 + 2 * z**3 + z**2, z**2 + z)
    out.append(("subst_uni(z-w^2, z^6+z^4+2z^3+z^2, z^2+z) = z^6", s == z**6, f"got {s}"))

    m3 = PrimeModulus(3)
    rc = right_cyclic_classify((z + 1) ** 3, m3)
    cc = composition_class((z + 1) ** 3, z - 1, m3)
    out.append((
        "right_cyclic((z+1)^3, 3) = No; class of (z+1)^3 o (z-1) = C_0",
        not rc.exists and cc.is_class(0),
        "",
    ))

    demo = theorem_eo_demo(samples=64, tol=1e-9)
    worst = max(demo.evenness.max_residual, demo.closed_form.max_residual)
    out.append(("z^4-2z^2 of cos+sin: evenness and closed form <= 1e-9", demo.passed, f"max residual={worst:.2e}"))
    return out


def test_criterion_1_worked_examples():
    t0 = time.perf_counter()
    checks = _examples()
    elapsed = time.perf_counter() - t0
    for name, ok, detail in checks:
        record("1", name, ok, detail)
    all_ok = all(ok for _, ok, _ in checks)
    record("1", "worked examples total time < 1 s", elapsed < 1.0, f"{elapsed:.3f}s")
    assert all_ok and elapsed < 1.0


# -- criterion 2: exhaustive theorem sweeps, each <= 5 minutes ----------------------

LIMIT = 300.0
DESK = dict(max_degree=3, coefficient_set=(-2, -1, 0, 1, 2))

SWEEPS = [
    *[(f"prop-c N={N}", "prop-c", SearchConfig(modulus=N, **DESK)) for N in (2, 3, 5)],
    *[(f"thm-f-a N={N}", "thm-f-a", SearchConfig(modulus=N, **DESK)) for N in (2, 3, 5)],
    *[(f"thm-f-b N={N}", "thm-f-b", SearchConfig(modulus=N, **DESK)) for N in (2, 3, 5)],
    *[(f"self-comp N={N}", "self-comp", SearchConfig(modulus=N, **DESK)) for N in (2, 3, 5)],
    ("lemma-b deg<=6 n<=4", "lemma-b", SearchConfig(max_degree=6, max_power=4)),
    ("pqr P deg<=3, Q deg<=2, {-1,0,1}", "pqr",
     SearchConfig(max_degree=3, coefficient_set=(-1, 0, 1), bivariate_degree=2)),
    ("borel-poly f,p deg<=3", "borel-poly", SearchConfig(**DESK)),
]


@pytest.mark.slow
@pytest.mark.parametrize("label, theorem, config", SWEEPS, ids=[s[0] for s in SWEEPS])
def test_criterion_2_theorem_sweeps(label, theorem, config):
    rep = run_theorem_suite(theorem, config)
    ok = (
        rep.consistent
        and rep.instances_checked == rep.expected_instances
        and rep.elapsed <= LIMIT
    )
    record(
        "2", label, ok,
        f"{rep.instances_checked} instances, {rep.hypotheses_met} met, "
        f"{len(rep.violations)} violations, {rep.elapsed:.1f}s",
    )
    assert ok, rep.violations[:3]


def test_criterion_2_residue_arithmetic():
    rep = lemma_mod_sweep((2, 3, 5, 7, 11, 13))
    ok = rep.consistent and rep.hypotheses_met > 0
    record("2", "lemma-mod N in {2,3,5,7,11,13}, params <= 3N", ok,
           f"{rep.hypotheses_met} checks, {len(rep.violations)} violations")
    assert ok


# -- criterion 3: seeded property suites, >= 10^4 cases, < 1 minute each ------------


def _rand_rational(rng, lo=-6, hi=6, den=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def _rand_poly(rng, max_degree, lo=-3, hi=3):
    return UniPoly({e: rng.randint(lo, hi) for e in range(rng.randint(0, max_degree) + 1)})


def _rand_odd(rng, max_degree=7):
    p = UniPoly({e: _rand_rational(rng) for e in range(1, max_degree + 1, 2)})
    return p if not p.is_zero() else z


def prop_square_shape_completeness(rng):
    s = _rand_odd(rng)
    d = Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 5))
    k = _rand_rational(rng)
    c = classify_rpe((s + d) ** 2 + k)
    return c.case is Case.SHIFTED_ODD_SQUARED and c.d_squared == d * d and c.k == k


def prop_even_odd_parts(rng):
    p = UniPoly({e: _rand_rational(rng) for e in range(rng.randint(0, 10))})
    E, O = p.even_part(), p.odd_part()
    return E + O == p and E.reflect() == E and O.reflect() == -O


def prop_compose_associative(rng):
    p, q, r = (_rand_poly(rng, 3) for _ in range(3))
    return p.compose(q.compose(r)) == p.compose(q).compose(r)


def prop_cyclic_multiplicative(rng):
    N = rng.choice((2, 3, 5, 7))
    j, k = rng.randrange(N), rng.randrange(N)
    p = UniPoly({j + N * t: rng.randint(-3, 3) for t in range(3)})
    q = UniPoly({k + N * t: rng.randint(-3, 3) for t in range(3)})
    pq = p * q
    if pq.is_zero():
        return True
    return cyclic_class(pq, N).is_class(j + k)


def prop_parser_round_trip(rng):
    kind = rng.randrange(3)
    if kind == 0:
        x = UniPoly({e: _rand_rational(rng) for e in range(rng.randint(0, 8))})
        return parse_expr(str(x)) == x
    if kind == 1:
        x = BiPoly({(rng.randint(0, 4), rng.randint(0, 4)): _rand_rational(rng) for _ in range(rng.randint(0, 6))})
        return parse_bipoly(str(x)) == x
    den = _rand_poly(rng, 3)
    if den.is_zero():
        den = UniPoly.constant(1)
    x = rf_new(_rand_poly(rng, 3), den)
    return parse_rational_function(str(x)) == x


def prop_right_cyclic_witness(rng):
    N = rng.choice((3, 5, 7))
    if rng.random() < 0.5:
        k = rng.randrange(N)
        shifted = UniPoly({k + N * t: rng.randint(-3, 3) for t in range(3) if k + N * t > 0})
        p = shifted + rng.randint(-5, 5)
    else:
        p = _rand_poly(rng, 6)
    res = right_cyclic_classify(p, PrimeModulus(N))
    if not res.exists:
        return cyclic_class(p - p.at_zero(), N).kind is CyclicKind.NOT_CYCLIC
    return cyclic_class(res.witness.as_poly().compose(p), N).in_c0


PROPERTIES = [
    ("completeness of (s+d)^2+k recovery", prop_square_shape_completeness),
    ("even/odd part reconstruction", prop_even_odd_parts),
    ("composition associativity", prop_compose_associative),
    ("cyclic class additive under products", prop_cyclic_multiplicative),
    ("parser round trip (uni, bi, rational)", prop_parser_round_trip),
    ("right-cyclic witness lands in C_0", prop_right_cyclic_witness),
]


@pytest.mark.parametrize("label, prop", PROPERTIES, ids=[p[0] for p in PROPERTIES])
def test_criterion_3_properties(label, prop):
    rng = random.Random(SEED)
    t0 = time.perf_counter()
    failures = [i for i in range(PROPERTY_CASES) if not prop(rng)]
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60.0
    record("3", label, ok, f"{PROPERTY_CASES} cases, {len(failures)} failures, {elapsed:.1f}s")
    assert ok, failures[:5]


# -- criterion 4: open-question searches are deterministic -----------------------------


@pytest.mark.slow
def test_criterion_4_q1_polynomial():
    cfg = SearchConfig(max_degree=4, coefficient_set=(-2, -1, 0, 1, 2))
    rep = search_open_q1(cfg)
    poly_hits = [h for h in rep.supporting_examples if h["scope"] == "polynomial"]
    ok = not poly_hits and rep.instances_checked == rep.expected_instances
    record("4", "open question 1, polynomials deg<=4 {-2..2}: zero hits", ok,
           f"{rep.instances_checked} instances, {len(poly_hits)} hits, {rep.elapsed:.1f}s")
    assert ok


@pytest.mark.slow
def test_criterion_4_q2_rational():
    cfg = SearchConfig(max_degree=2, coefficient_set=(-1, 0, 1), family=Family.RATIONAL_FUNCTION)
    a = search_open_q2(3, cfg)
    b = search_open_q2(3, SearchConfig(**{**cfg.__dict__, "parallelism": 2}))
    same = a.to_dict(include_elapsed=False) == b.to_dict(include_elapsed=False)
    ok = same and a.instances_checked == a.expected_instances > 0
    record("4", "open question 2, N=3 rational deg<=2 {-1,0,1}: reproducible report", ok,
           f"{a.instances_checked} instances, {a.distinct_functions} distinct, "
           f"{len(a.supporting_examples)} hits, identical across parallelism: {same}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
