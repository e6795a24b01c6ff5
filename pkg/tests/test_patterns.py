import random

import pytest

from seedgames.patterns import (
    Bit,
    Concat,
    InfiniteTail,
    PatternRangeError,
    PatternSyntaxError,
    Power,
    expand,
    finite_length,
    from_bits,
    from_periodicity,
    has_infinite_tail,
    parse,
    render,
    split_tail,
)


class TestParse:
    def test_simple_power(self):
        assert parse("(01)^3") == Power(Concat((Bit(0), Bit(1))), 3)
        assert expand(parse("(01)^3")) == "010101"

    def test_247_structure(self):
        e = parse("0^2 1^2 (1^2 0)^inf")
        assert expand(e, 12) == "001111011011"

    def test_whitespace_ignored(self):
        assert parse(" 0^2   1^2 ") == parse("0^2 1^2")

    def test_syntax_error_position(self):
        with pytest.raises(PatternSyntaxError) as exc:
            parse("0^2 1^(")
        assert exc.value.position == 6

    def test_inf_must_be_last(self):
        with pytest.raises(PatternSyntaxError):
            parse("(01)^inf 1")
        with pytest.raises(PatternSyntaxError):
            parse("(0^inf) 1")

    def test_exponent_required_and_bounded(self):
        with pytest.raises(PatternSyntaxError):
            parse("0^")
        with pytest.raises(PatternSyntaxError):
            parse("0^9999999999999999")

    def test_empty_pattern(self):
        with pytest.raises(PatternSyntaxError):
            parse("")
        with pytest.raises(PatternSyntaxError):
            parse("()")


class TestRender:
    def test_run_length_form(self):
        assert render(from_bits("0011")) == "0^2 1^2"

    def test_cycle_of_35(self):
        assert render(from_bits("00011111")) == "0^3 1^5"

    def test_infinite_tail(self):
        assert render(InfiniteTail(Concat((Bit(0), Bit(1))))) == "(01)^inf"

    def test_prefix_plus_tail(self):
        assert render(from_periodicity("0", "101")) == "0 (101)^inf"
        assert render(from_periodicity("0011", "110")) == "0^2 1^2 (1^2 0)^inf"

    def test_roundtrip_on_random_text(self):
        rng = random.Random(5)

        def rand_expr(depth, top):
            roll = rng.random()
            if depth == 0 or roll < 0.4:
                return Bit(rng.randint(0, 1))
            if roll < 0.7:
                return Power(rand_expr(depth - 1, False), rng.randint(0, 5))
            parts = tuple(rand_expr(depth - 1, False) for _ in range(rng.randint(1, 4)))
            e = Concat(parts)
            if top and rng.random() < 0.3:
                return Concat(parts + (InfiniteTail(rand_expr(depth - 1, False)),))
            return e

        for _ in range(300):
            e = rand_expr(3, top=True)
            assert parse(render(e)) == e

    def test_render_parse_canonicalizes(self):
        for text in ["0 0 1 1", "(0)(1)", "0^1", "((01))^2"]:
            canon = render(parse(text))
            assert render(parse(canon)) == canon
            assert expand(parse(canon)) == expand(parse(text))


class TestExpand:
    def test_infinite_prefixes(self):
        assert expand(parse("(01)^inf"), 5) == "01010"

    def test_full_range_example(self):
        assert expand(parse("(0 1^3)^inf"), 8) == "01110111"

    def test_finite_overrun(self):
        with pytest.raises(PatternRangeError):
            expand(parse("1^2"), 5)

    def test_zero_exponent_is_empty(self):
        assert expand(parse("0^0 1^3")) == "111"
        assert finite_length(parse("0^0")) == 0

    def test_power_length_homomorphism(self):
        rng = random.Random(11)
        for _ in range(200):
            bits = "".join(rng.choice("01") for _ in range(rng.randint(1, 12)))
            k = rng.randint(0, 6)
            e = from_bits(bits)
            assert finite_length(Power(e, k)) == k * len(bits)
            assert expand(Power(e, k)) == bits * k

    def test_expand_defaults_to_full_finite_length(self):
        assert expand(parse("0^2 (10)^2")) == "001010"


class TestSplitTail:
    def test_247(self):
        assert split_tail(parse("0^2 1^2 (1^2 0)^inf")) == ("0011", "110")

    def test_pure(self):
        assert split_tail(parse("(01)^inf")) == ("", "01")

    def test_arithmetic_progression_game(self):
        assert split_tail(parse("0 (101)^inf")) == ("0", "101")

    def test_requires_tail(self):
        with pytest.raises(ValueError):
            split_tail(parse("0^2 1^2"))
        assert not has_infinite_tail(parse("0^2"))
        assert has_infinite_tail(parse("0^2 1^inf"))
