import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parity_lab.cyclic import (
    PrimeModulus,
    UseParityModule,
    composition_class,
    is_prime,
    lemma_mod_holds,
    numeric_omega_check,
    proposition_c_assert,
    right_cyclic_classify,
    self_composition_assert,
    shift_decompose,
    theorem_f_a_assert,
)
from parity_lab.outcomes import Status
from parity_lab.poly import CyclicKind, InvalidModulus, UniPoly, cyclic_class

from .conftest import P, polys, rank, z

M2, M3, M5 = PrimeModulus(2), PrimeModulus(3), PrimeModulus(5)


def cyclic_maker_exists(p, N, max_deg):
    """Is there a non-constant f of degree <= max_deg with f(p) in some C_k?

    For fixed k, f(p) = a_0 + sum a_i p^i lies in C_k iff the parts of
    a_0 + sum a_i p^i off residue k cancel: a linear dependence question.
    """
    powers = [p**i for i in range(1, max_deg + 1)]
    top = max_deg * p.degree
    for k in range(N):
        def off(q):
            return [q.coeff(e) if e % N != k else 0 for e in range(top + 1)]

        rows = [off(q) for q in powers]
        if k != 0:
            rows.append(off(UniPoly.constant(1)))
        if rank(rows) < len(rows):
            return True
    return False


class TestPrimeModulus:
    @pytest.mark.parametrize("n", [2, 3, 5, 7, 11, 13, 2**61 - 1])
    def test_primes_accepted(self, n):
        assert PrimeModulus(n).N == n

    @pytest.mark.parametrize("n", [0, 1, 4, 9, 15, 561, 3215031751, 2**64 + 13, -3])
    def test_rejected(self, n):
        with pytest.raises(InvalidModulus):
            PrimeModulus(n)

    def test_is_prime_agrees_with_sieve(self):
        limit = 2000
        sieve = [True] * limit
        sieve[0] = sieve[1] = False
        for i in range(2, limit):
            if sieve[i]:
                for j in range(i * i, limit, i):
                    sieve[j] = False
        assert [is_prime(n) for n in range(limit)] == sieve

    def test_omega_is_primitive(self):
        w = M5.omega
        assert abs(w**5 - 1) < 1e-12
        assert all(abs(w**j - 1) > 1e-3 for j in range(1, 5))


class TestRightCyclic:
    def test_cube_of_shift_is_not(self):
        assert not right_cyclic_classify((z + 1) ** 3, M3).exists

    def test_quartic_example(self):
        r = right_cyclic_classify(z**4 + 2 * z + 5, M3)
        assert r.exists and r.residue == 1
        assert r.witness.as_poly() == (z - 5) ** 3
        assert sorted((r.witness.as_poly().compose(z**4 + 2 * z + 5)).exponents()) == [3, 6, 9, 12]

    def test_already_in_c0(self):
        r = right_cyclic_classify(z**6 + z**3, M3)
        assert r.exists and r.residue == 0

    def test_constant(self):
        r = right_cyclic_classify(UniPoly.constant(4), M3)
        assert r.exists and r.residue == 0

    def test_two_is_delegated(self):
        with pytest.raises(UseParityModule):
            right_cyclic_classify(z**2, M2)

    @settings(max_examples=300)
    @given(polys(max_degree=6), st.sampled_from([3, 5, 7]))
    def test_equivalence_and_witness(self, p, N):
        m = PrimeModulus(N)
        r = right_cyclic_classify(p, m)
        shifted = cyclic_class(p - p.at_zero(), N)
        assert r.exists == (shifted.kind is not CyclicKind.NOT_CYCLIC)
        if r.exists:
            assert cyclic_class(r.witness.as_poly().compose(p), N).in_c0

    @pytest.mark.parametrize("N", [3, 5])
    def test_only_if_for_polynomial_composers(self, N):
        # f of degree <= N + 1 cannot put p in C unless p - p(0) is cyclic
        m = PrimeModulus(N)
        for cs in itertools.product((-1, 0, 1), repeat=4):
            p = P(*cs)
            if p.is_constant():
                continue
            assert cyclic_maker_exists(p, N, N + 1) == right_cyclic_classify(p, m).exists, p


class TestCompositionClass:
    def test_examples(self):
        assert composition_class((z + 1) ** 3, z - 1, M3).is_class(0)
        assert composition_class(z**2, z**3, M2).is_class(0)
        assert composition_class(z**2, z**2 + z, M5).kind is CyclicKind.NOT_CYCLIC


class TestNonCyclicInner:
    def test_examples(self):
        assert proposition_c_assert(z**2 + 1, z**2 + z, M3).status is Status.HOLDS
        v = proposition_c_assert((z + 1) ** 3, z - 1, M3)
        assert v.status is Status.HYPOTHESES_UNMET and "q(0)" in v.reason
        v = proposition_c_assert(UniPoly.constant(5), z**2 + z, M3)
        assert v.status is Status.HYPOTHESES_UNMET and "constant" in v.reason


class TestCyclicFactors:
    def test_a_small_exhaustive(self):
        for N in (2, 3):
            m = PrimeModulus(N)
            for pc in itertools.product((-1, 0, 1), repeat=3):
                for qc in itertools.product((-1, 0, 1), repeat=3):
                    v = theorem_f_a_assert(P(*pc), P(0, *qc), m)
                    assert v.status is not Status.VIOLATION, v

    def test_shift_examples(self):
        d = shift_decompose((z - 1) ** 2, z**3 + 1, M2)
        assert d.r == z**3 and d.r_class.is_class(1)
        assert d.s == z**2 and d.s_class.is_class(0)
        assert d.conclusion_ok and d.verdict.status is Status.HOLDS
        d = shift_decompose((z + 1) ** 3, z - 1, M3)
        assert d.r == z and d.r_class.is_class(1)
        assert d.s == z**3 and d.s_class.is_class(0)
        d = shift_decompose(z, z + 1, M2)
        assert d.verdict.status is Status.HYPOTHESES_UNMET

    def test_b_small_exhaustive(self):
        for N in (2, 3):
            m = PrimeModulus(N)
            for pc in itertools.product((-1, 0, 1), repeat=4):
                for qc in itertools.product((-1, 1), (-1, 0, 1), (-1, 0, 1)):
                    d = shift_decompose(P(*pc), P(*qc), m)
                    assert d.verdict.status is not Status.VIOLATION, d


class TestSelfComposition:
    def test_examples(self):
        assert self_composition_assert(-z + 1, M2).status is Status.HYPOTHESES_UNMET
        assert (-z + 1).compose(-z + 1) == z
        assert self_composition_assert(z**4, M3).status is Status.HOLDS
        assert self_composition_assert(z**2, M2).status is Status.HOLDS

    @given(polys(max_degree=4), st.sampled_from([2, 3, 5]))
    def test_never_violated(self, p, N):
        assert self_composition_assert(p, PrimeModulus(N)).status is not Status.VIOLATION


class TestNumericOmega:
    def test_examples(self):
        assert numeric_omega_check(z**4 + 2 * z, 1, M3).passed
        assert not any(numeric_omega_check(z**2 + z, k, M3).passed for k in range(3))
        assert all(numeric_omega_check(UniPoly(), k, M5).passed for k in range(5))

    @settings(max_examples=200)
    @given(polys(max_degree=8), st.sampled_from([2, 3, 5, 7]))
    def test_agrees_with_exact(self, p, N):
        c = cyclic_class(p, N)
        for k in range(N):
            exact = c.kind is CyclicKind.ZERO or c.is_class(k)
            assert numeric_omega_check(p, k, PrimeModulus(N)).passed == exact


class TestResidueArithmetic:
    @pytest.mark.parametrize("N", [2, 3, 5, 7, 11, 13])
    def test_integer_property(self, N):
        checked = 0
        for m, n, r in itertools.product(range(1, 3 * N + 1), repeat=3):
            res = lemma_mod_holds(N, m, n, r)
            if res is None:
                assert n % N or (r - m) % N == 0
                continue
            checked += 1
            assert res
        assert checked > 0

    def test_hypothesis_filter(self):
        assert lemma_mod_holds(3, 1, 2, 2) is None
        assert lemma_mod_holds(3, 1, 3, 1) is None
        assert lemma_mod_holds(3, 1, 3, 2) is True
