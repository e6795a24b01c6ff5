import math
import random

import pytest

from seedgames import closedforms as cf
from seedgames.engine import generate, period_preperiod
from seedgames.enumeration import canonicalize, enumerate_seeds

from oracles import ref_is_maximal_independent, ref_q_strings


def oracle_agrees_with_engine(result, moves, seed=None):
    N, p = period_preperiod(moves, seed)
    if (N, p) != (result.preperiod, result.period):
        return False
    horizon = N + 3 * p + max(moves)
    return result.expand(horizon) == generate(moves, horizon, seed)


class TestSingle:
    def test_no_seed_is_alternation(self):
        r = cf.cf_single(1, "1")
        assert (r.period, r.preperiod) == (2, 0)
        assert r.pattern_text() == "(01)^inf"

    def test_complement_concat(self):
        r = cf.cf_single(2, "10")
        assert r.expand(8) == "01100110"
        assert r.period == 4

    def test_all_ones_seed(self):
        r = cf.cf_single(3, "111")
        assert r.pattern_text() == "(0^3 1^3)^inf"
        assert r.period == 6

    def test_reducible_block(self):
        assert cf.cf_single(3, "101").period == 2

    def test_engine_agreement_over_all_small_seeds(self):
        for a in (1, 2, 3, 4, 5):
            for s in range(1 << a):
                seed = format(s, f"0{a}b")
                assert oracle_agrees_with_engine(cf.cf_single(a, seed), [a], seed)

    def test_periods_single(self):
        assert cf.periods_single(1) == {2}
        assert cf.periods_single(4) == {8}
        assert cf.periods_single(6) == {4, 12}

    def test_periods_single_matches_enumeration(self):
        for a in (1, 2, 3, 4, 6, 8, 12):
            assert cf.periods_single(a) == enumerate_seeds([a]).periods


class TestPair:
    def test_odd_multiple_collapses(self):
        r = cf.cf_pair(1, 3)
        assert (r.period, r.pattern_text()) == (2, "(01)^inf")

    def test_35(self):
        r = cf.cf_pair(3, 5)
        assert (r.period, r.pattern_text()) == (8, "(0^3 1^5)^inf")

    def test_24(self):
        r = cf.cf_pair(2, 4)
        assert (r.period, r.pattern_text()) == (6, "(0^2 1^4)^inf")

    def test_engine_sweep(self):
        for a in range(1, 11):
            for b in range(a + 1, 12):
                assert oracle_agrees_with_engine(cf.cf_pair(a, b), [a, b])

    def test_periods_pair(self):
        assert cf.periods_pair(1, 2) == {3}
        assert cf.periods_pair(3, 5) == {2, 8}
        assert cf.periods_pair(2, 4) == {3, 6}

    def test_periods_pair_matches_enumeration(self):
        for a in range(1, 8):
            for b in range(a + 1, 9):
                assert cf.periods_pair(a, b) == enumerate_seeds([a, b]).periods, (a, b)


class TestCounting:
    TABLE_Q = [0, 2, 3, 2, 5, 5, 7, 10, 12, 17, 22, 29, 39, 51, 68, 90, 119, 158, 209, 277]
    TABLE_NP = [0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 7, 8, 11, 13]
    TABLE_N = [0, 1, 1, 1, 1, 2, 1, 2, 2, 3, 2, 4, 3, 5, 6, 7, 7, 11, 11, 16]

    def test_perrin_initial(self):
        assert [cf.perrin(i) for i in range(5)] == [3, 0, 2, 3, 2]

    def test_table_rows(self):
        assert [cf.perrin(l) for l in range(1, 21)] == self.TABLE_Q
        assert [cf.n_prime(l) for l in range(1, 21)] == self.TABLE_NP
        assert [cf.n_total(l) for l in range(1, 21)] == self.TABLE_N

    def test_spot_values(self):
        assert (cf.perrin(14), cf.n_prime(14), cf.n_total(14)) == (51, 3, 5)
        assert (cf.perrin(20), cf.n_prime(20), cf.n_total(20)) == (277, 13, 16)
        assert cf.n_prime(4) == 0 and cf.n_prime(6) == 0

    def test_q_strings_small(self):
        assert cf.q_strings(2) == {"01", "10"}
        assert cf.q_strings(3) == {"011", "101", "110"}
        assert cf.q_strings(6) == {"010101", "101010", "011011", "101101", "110110"}

    def test_q_strings_match_block_concatenations(self):
        for l in range(1, 15):
            assert cf.q_strings(l) == ref_q_strings(l)
            assert len(cf.q_strings(l)) == cf.perrin(l)

    def test_rotation_class_identity(self):
        # summing d * (classes of each dividing length) recovers the raw count
        for l in range(1, 25):
            assert sum(d * cf.n_prime(d) for d in range(1, l + 1) if l % d == 0) == cf.perrin(l)

    def test_gcd_refinement_reduces_to_coprime(self):
        for p in range(1, 31):
            assert cf.n_prime_gcd(p, 1) == cf.n_prime(p)

    def test_gcd_refined_zero_pattern(self):
        # classes of length exactly L vanish iff L = g, L = 4g, or (L, g) = (6, 1)
        for L in range(1, 37):
            for g in range(1, L + 1):
                if L % g:
                    continue
                expected_zero = L == g or L == 4 * g or (L, g) == (6, 1)
                assert (cf.n_prime_gcd(L, g) == 0) == expected_zero, (L, g)

    def test_gcd_counts_match_enumeration_24(self):
        atlas = enumerate_seeds([2, 4])
        counts = {length: len(v) for length, v in atlas.distinct_periodicities().items()}
        assert counts[6] == cf.n_prime_gcd(6, 2)
        for p in atlas.periods:
            assert counts[p] == cf.n_prime_gcd(p, math.gcd(p, 2)), p

    def test_plastic_constant_rounding(self):
        for l in range(10, 41):
            assert round(cf.PLASTIC_CONSTANT ** l) == cf.perrin(l)
        z, zbar = cf.PLASTIC_COMPLEX_ROOTS
        for root in (cf.PLASTIC_CONSTANT, z, zbar):
            assert abs(root ** 3 - root - 1) < 1e-12


class TestMisCycleCounts:
    def test_triangle(self):
        assert cf.mis_cycle_count(3) == (3, 1)

    def test_fourteen(self):
        assert cf.mis_cycle_count(14) == (51, 5)

    def test_matches_q_and_n(self):
        for l in range(3, 17):
            labeled, unlabeled = cf.mis_cycle_count(l)
            assert labeled == cf.perrin(l)
            assert unlabeled == cf.n_total(l)

    def test_string_vertex_correspondence(self):
        # zeros of (01)^2 (011)^2 name the vertices of a maximal independent set
        word = "01" * 2 + "011" * 2
        vertices = [i for i, ch in enumerate(word) if ch == "0"]
        assert vertices == [0, 2, 4, 7]  # {1,3,5,8} in 1-indexed terms
        assert ref_is_maximal_independent(vertices, 10)
        assert word in cf.q_strings(10)


class TestSigma:
    def test_worked_example(self):
        x = "01" + "011" * 4
        assert cf.sigma(5, 14, x) == "0011100111" + "0111"

    def test_identity(self):
        assert cf.sigma(1, 7, "0110100") == "0110100"

    def test_inverse(self):
        rng = random.Random(3)
        for _ in range(100):
            p = rng.randint(2, 40)
            a = rng.choice([x for x in range(1, p) if math.gcd(x, p) == 1])
            bits = "".join(rng.choice("01") for _ in range(p))
            assert cf.sigma_inverse(a, p, cf.sigma(a, p, bits)) == bits

    def test_gcd_requirement(self):
        with pytest.raises(ValueError):
            cf.sigma(2, 14, "0" * 14)

    def test_length_requirement(self):
        with pytest.raises(ValueError):
            cf.sigma(3, 14, "01")


class TestOneBC:
    def test_both_odd(self):
        r = cf.cf_1bc(3, 5)
        assert (r.case, r.period, r.preperiod) == ("i", 2, 0)
        assert r.pattern_text() == "(01)^inf"

    def test_b_odd_c_even(self):
        r = cf.cf_1bc(3, 4)
        assert (r.case, r.period, r.preperiod) == ("ii", 7, 0)
        assert r.expand(7) == "0101111"

    def test_quadratic_preperiod_spot(self):
        r = cf.cf_1bc(6, 21)
        assert (r.case, r.period, r.preperiod) == ("vii", 22, 51)

    def test_case_tags(self):
        assert cf.cf_1bc(4, 5).case == "iii"
        assert cf.cf_1bc(4, 6).case == "iv"   # r = 1
        assert cf.cf_1bc(6, 24).case == "v"   # r = 3 odd
        assert cf.cf_1bc(4, 12).case == "vi"  # r = 2 = b-2
        assert cf.cf_1bc(6, 14).case == "ix"  # q = gamma = 2
        assert cf.cf_1bc(8, 20).case == "viii"

    def test_engine_sweep_small(self):
        for b in range(2, 26):
            for c in range(b + 1, 26):
                r = cf.cf_1bc(b, c)
                assert oracle_agrees_with_engine(r, [1, b, c]), (b, c, r.case)

    def test_domain(self):
        with pytest.raises(ValueError):
            cf.cf_1bc(1, 5)
        with pytest.raises(ValueError):
            cf.cf_1bc(5, 5)


class TestKnownTriples:
    def test_listed_values(self):
        known = {t.moves: t for t in cf.cf_known_3set_examples(s_max=3, k_max=3)}
        assert known[(4, 9, 46)].period == 55
        assert known[(4, 9, 46)].preperiod == 87
        assert known[(6, 13, 68)].period == 81
        assert known[(6, 13, 68)].preperiod == 203
        assert known[(3, 5, 9)].period == 2
        assert known[(3, 5, 9)].preperiod == 11

    def test_engine_agreement(self):
        for t in cf.cf_known_3set_examples(s_max=3, k_max=9):
            assert period_preperiod(t.moves) == (t.preperiod, t.period), t


class TestABplusAB:
    def test_fig4_instance(self):
        r = cf.cf_ab_apb(13, 29)
        assert (r.period, r.preperiod, r.case) == (793, 0, "quadratic")

    def test_one_above_double(self):
        for a in range(1, 21):
            r = cf.cf_ab_apb(a, 2 * a + 1)
            assert r.period == 4 * a * a + 3 * a, a

    def test_linear_case(self):
        r = cf.cf_ab_apb(2, 4)
        assert (r.period, r.case) == (8, "linear")

    def test_engine_sweep_small(self):
        for a in range(1, 17):
            for b in range(a + 1, 18):
                r = cf.cf_ab_apb(a, b)
                assert oracle_agrees_with_engine(r, [a, b, a + b]), (a, b, r.case)

    def test_period_structure_classes(self):
        # both regimes appear and the quadratic one scales superlinearly
        assert cf.cf_ab_apb(19, 39).case == "quadratic"
        assert cf.cf_ab_apb(19, 39).period == 19 * (2 * 39 + 1)
        assert cf.cf_ab_apb(5, 9).case == "linear"
