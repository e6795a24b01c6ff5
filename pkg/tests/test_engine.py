import pytest

from seedgames.engine import (
    ALL_POSITIVE,
    CUBES,
    SQUARES,
    BudgetError,
    MoveSet,
    aperiodicity_certificate,
    check_pure_periodic,
    check_translating_zeros,
    decompose,
    find_periodicity,
    generate,
    generate_infinite,
    is_extension,
    losing_positions,
    mode_seed,
    normalize_seed,
    period_bound,
    period_preperiod,
    step,
)

from oracles import ref_generate, ref_periodicity


class TestMoveSet:
    def test_normalization(self):
        A = MoveSet([7, 2, 4])
        assert A.moves == (2, 4, 7)
        assert A.alpha == 7
        assert A.g == 1
        assert MoveSet([2, 14, 16]).g == 2

    def test_invalid(self):
        with pytest.raises(ValueError):
            MoveSet([])
        with pytest.raises(ValueError):
            MoveSet([0, 2])
        with pytest.raises(ValueError):
            MoveSet([-1])


class TestSeeds:
    def test_empty_means_all_ones(self):
        assert normalize_seed("", [1, 2, 3, 4]) == "1111"
        assert normalize_seed(None, [1, 2, 3, 4]) == "1111"

    def test_short_seeds_pad_left_with_ones(self):
        assert normalize_seed("01", [3]) == "101"

    def test_long_seeds_keep_last_alpha(self):
        assert normalize_seed("010110", [1, 4]) == "0110"

    def test_rejects_junk(self):
        with pytest.raises(ValueError):
            normalize_seed("012", [2])

    def test_mode_seeds(self):
        assert mode_seed("misere", [2, 4, 7]) == "0011111"
        assert mode_seed("greedy", [1, 3]) == "000"
        assert mode_seed("misere", [1]) == "0"
        with pytest.raises(ValueError):
            mode_seed("nimber", [1])


class TestStep:
    def test_singleton(self):
        assert step("1", [1]) == ("0", 0)

    def test_all_ones_window_loses(self):
        assert step("1111111", [2, 4, 7]) == ("1111110", 0)

    def test_win_via_deeper_zero(self):
        # window <w(n-2), w(n-1)> = <0, 1>: the 2-move reaches the zero
        assert step("01", [1, 2]) == ("11", 1)

    def test_width_checked(self):
        with pytest.raises(ValueError):
            step("111", [2, 4, 7])


class TestGenerate:
    def test_247_prefix(self):
        assert generate([2, 4, 7], 10) == "0011110110"

    def test_full_range_moves(self):
        assert generate([1, 2, 3], 8) == "01110111"

    def test_seeded_35(self):
        assert generate([3, 5], 16, "0110") == "0111110001111100"

    def test_matches_reference_on_misc_games(self):
        for moves, seed in [([1], "0"), ([2, 5], "01101"), ([3, 4, 9], None),
                            ([2, 4], "0000"), ([1, 5, 6], "0111")]:
            assert generate(moves, 120, seed) == ref_generate(moves, seed, 120)

    def test_long_generation_uses_same_bits(self):
        # crosses the accelerated-path threshold
        bits = generate([2, 4, 7], 5000)
        assert bits[:10] == "0011110110"
        assert bits == ref_generate([2, 4, 7], None, 5000)


class TestFindPeriodicity:
    def test_247(self):
        rep = find_periodicity([2, 4, 7])
        assert (rep.preperiod, rep.period) == (4, 3)
        assert rep.prefix == "0011"
        assert rep.cycle == "110"
        assert rep.sequence(10) == "0011110110"

    def test_superfamily_seed(self):
        assert period_preperiod([2, 14, 16], "0111111") == (0, 870)

    def test_35_against_naive_scan(self):
        rep = find_periodicity([3, 5])
        bits = generate([3, 5], 64)
        assert ref_periodicity(bits, 16) == (0, 8)
        assert (rep.preperiod, rep.period) == (0, 8)
        assert rep.cycle == "00011111"

    def test_random_games_match_naive_scan(self):
        import random

        rng = random.Random(7)
        for _ in range(60):
            k = rng.randint(1, 3)
            moves = sorted(rng.sample(range(1, 11), k))
            seed = "".join(rng.choice("01") for _ in range(moves[-1]))
            N, p = period_preperiod(moves, seed)
            bits = generate(moves, 4 * (N + p) + 40, seed)
            assert ref_periodicity(bits, N + p + 10) == (N, p)

    def test_report_roundtrips_as_json(self):
        import json

        rep = find_periodicity([2, 4, 7])
        payload = json.loads(rep.to_json())
        assert payload == {
            "moves": [2, 4, 7],
            "seed": "1111111",
            "preperiod": 4,
            "period": 3,
            "prefix": "0011",
            "cycle": "110",
        }

    def test_state_budget_error_without_fallback(self):
        # alpha > 64 forces the hash-map walk
        with pytest.raises(BudgetError):
            period_preperiod([1, 70], state_budget=5, allow_constant_memory=False)

    def test_constant_memory_fallback_agrees(self):
        n_small = period_preperiod([1, 70], state_budget=5)
        assert n_small == period_preperiod([1, 70], state_budget=1 << 20)

    def test_step_budget_error(self):
        with pytest.raises(BudgetError):
            period_preperiod([1, 34, 35], step_budget=10)


class TestDecompose:
    def test_trivial_gcd(self):
        A = MoveSet([3, 5])
        assert decompose(A, "10110") == [(A, "10110")]

    def test_all_ones_splits(self):
        assert decompose([2, 4], "1111") == [
            (MoveSet([1, 2]), "11"),
            (MoveSet([1, 2]), "11"),
        ]

    def test_superfamily_components(self):
        # {2,14,16} with seed 1^9 0 1^6 splits into no-seed and 1^4 0 1^3
        parts = decompose([2, 14, 16], "0111111")
        assert parts == [
            (MoveSet([1, 7, 8]), "11111111"),
            (MoveSet([1, 7, 8]), "11110111"),
        ]
        assert [period_preperiod(m, s) for m, s in parts] == [(0, 15), (0, 29)]

    def test_index_arithmetic(self):
        seed = "010011101011"
        parts = decompose([3, 9, 12], seed)
        assert [s for _, s in parts] == [seed[0::3], seed[1::3], seed[2::3]]
        assert [s for _, s in parts] == ["0010", "1101", "0111"]
        assert all(m == MoveSet([1, 3, 4]) for m, _ in parts)

    def test_interleaving_reproduces_sequence(self):
        seed = "0110010111001101"
        parts = decompose([2, 14, 16], seed)
        comp = [generate(m, 50, s) for m, s in parts]
        full = generate([2, 14, 16], 100, seed)
        assert full == "".join(comp[i % 2][i // 2] for i in range(100))


class TestExtensions:
    def test_odd_extensions_of_singleton(self):
        assert is_extension([1], None, 3)

    def test_seeded_pair_counterexample(self):
        assert not is_extension([3, 5], "0110", 11)

    def test_247_differs_from_24(self):
        assert not is_extension([2, 4], None, 7)

    def test_existing_move_rejected(self):
        with pytest.raises(ValueError):
            is_extension([2, 4], None, 4)


class TestTranslatingZeros:
    def test_35_pure_over_8(self):
        assert check_translating_zeros([3, 5], 8)

    def test_247_not_pure_over_3(self):
        assert not check_translating_zeros([2, 4, 7], 3)

    def test_1bc_single_value_shortcut(self):
        # for {1,b,c} the test collapses to the bit at b+c-1
        for b, c in [(3, 4), (4, 6), (5, 12), (6, 21)]:
            w = generate([1, b, c], b + c)
            assert check_translating_zeros([1, b, c], b + c) == (w[b + c - 1] == "1")


class TestPurePeriodic:
    def test_full_range_game(self):
        assert check_pure_periodic([1, 2, 3], None, 4)

    def test_247(self):
        assert not check_pure_periodic([2, 4, 7], None, 3)

    def test_singleton_double_period(self):
        for a in (1, 2, 5):
            for seed in ("0" * a, "1" * a, "10" * a):
                assert check_pure_periodic([a], seed, 2 * a)


class TestPeriodBound:
    def test_247(self):
        assert period_bound([2, 4, 7]) == 112
        N, p = period_preperiod([2, 4, 7])
        assert N + p == 7 <= 112

    def test_singleton(self):
        assert period_bound([1]) == 2

    def test_tight_for_12(self):
        assert period_bound([1, 2]) == 3
        assert period_preperiod([1, 2]) == (0, 3)


class TestInfiniteSets:
    def test_squares_losing_positions(self):
        bits = generate_infinite(SQUARES, 50)
        assert losing_positions(bits)[:6] == [0, 2, 5, 7, 10, 12]

    def test_all_positive(self):
        assert generate_infinite(ALL_POSITIVE, 5) == "01111"

    def test_cubes_have_no_small_periodicity(self):
        bits = generate_infinite(CUBES, 6000)
        cert = aperiodicity_certificate(bits, 1500)
        assert cert.ok and cert.counterexample is None

    def test_certificate_finds_real_periodicity(self):
        cert = aperiodicity_certificate(generate([2, 4, 7], 500), 100)
        assert not cert.ok
        assert cert.counterexample == (4, 3)
