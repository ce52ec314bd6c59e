"""Text grammars: parsing, canonical emission, round trips."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artifact import (AutomorphismSpec, MixedMatrix, MixedWord, ParseError,
                      RingContext, SkewGenerators, SkewPoly, emit_gens,
                      emit_matrix, int_poly_str, parse_element, parse_gens,
                      parse_int_poly, parse_matrix, parse_poly)

_CTX = RingContext(2, (1, 1, 1))
_AUT = AutomorphismSpec(_CTX, 1)

WORKED_MATRIX_FILE = """m: 2
h: 1+x+x^2
r: 2
s: 3
rows:
1 1+w | 2+2*w 2 2
w 0 | 2*w 0 2
w 1 | 2+w 1+3*w 0
0 1+w | 2*w 2 1
"""

SEVEN_SEVEN_GENS_FILE = """m: 2
h: 1+x+x^2
r: 7
s: 7
t: 1
f: 1+x+x^3
l: 1+x^2
g: 1+2*x+3*x^2+x^3+x^4
a: 3+x
"""


class TestElements:
    @pytest.mark.parametrize("text,coeffs", [
        ("0", (0,)),
        ("2+2*w", (2, 2)),
        ("3*w", (0, 3)),
        ("w^2", (3, 3)),
        ("1+w+w^2", (0, 0)),
        ("-1", (3,)),
        ("2-w", (2, 3)),
    ])
    def test_ring_values(self, text, coeffs):
        assert parse_element(text, _CTX) == _CTX.ring(coeffs)

    def test_field_values(self):
        assert parse_element("w^2", _CTX, ring=False) == _CTX.field((1, 1))
        assert parse_element("1+w", _CTX, ring=False) == _CTX.field((1, 1))

    def test_canonical_emission(self):
        for e in _CTX.all_ring_elems():
            assert parse_element(str(e), _CTX) == e
            assert str(parse_element(str(e), _CTX)) == str(e)

    def test_degree_one_generator_is_modulus_root(self):
        ctx1 = RingContext(1, (1, 1))
        assert parse_element("w", ctx1) == ctx1.ring((3,))
        assert parse_element("w", ctx1, ring=False) == ctx1.field((1,))

    @pytest.mark.parametrize("text,column", [
        ("w^", 2),
        ("", 0),
        ("1+", 2),
        ("*w", 0),
        ("w^x", 2),
    ])
    def test_error_positions(self, text, column):
        with pytest.raises(ParseError) as info:
            parse_element(text, _CTX)
        assert info.value.column == column
        assert info.value.line == 0


class TestPolynomials:
    def test_worked_example_string(self):
        p = parse_poly("(1+2*w)*x^3+3", _AUT)
        assert p == SkewPoly(_AUT, [_CTX.ring((3,)), _CTX.ring_zero(),
                                    _CTX.ring_zero(), _CTX.ring((1, 2))],
                             True)
        assert str(p) == "3+(1+2*w)*x^3"

    def test_negative_normalisation(self):
        assert str(parse_poly("x^2-1", _AUT)) == "3+x^2"
        assert str(parse_poly("x^2-1", _AUT, ring=False)) == "1+x^2"

    def test_like_terms_collapse(self):
        assert str(parse_poly("x+x", _AUT)) == "2*x"
        assert parse_poly("x-x", _AUT).is_zero

    def test_unit_coefficient_parenthesised(self):
        p = parse_poly("(w)*x", _AUT)
        assert str(p) == "(w)*x"

    def test_bare_tokens(self):
        assert parse_poly("x", _AUT) == SkewPoly.x_power(_AUT, 1)
        assert parse_poly("w", _AUT) == SkewPoly(_AUT, [_CTX.ring((0, 1))],
                                                 True)
        assert parse_poly("5", _AUT) == SkewPoly.from_ints(_AUT, [1])

    def test_exponent_cap(self):
        with pytest.raises(ParseError):
            parse_poly("x^5000", _AUT)

    def test_error_inside_coefficient(self):
        with pytest.raises(ParseError) as info:
            parse_poly("(1+w*x", _AUT)
        assert info.value.column == 4

    @given(st.lists(st.integers(0, 15), max_size=5))
    def test_round_trip_is_fixpoint(self, idx):
        p = SkewPoly(_AUT, [_CTX.ring_from_index(i) for i in idx], True)
        text = str(p)
        again = parse_poly(text, _AUT)
        assert again == p
        assert str(again) == text

    @given(st.lists(st.integers(0, 3), max_size=6))
    def test_field_round_trip(self, idx):
        p = SkewPoly(_AUT, [_CTX.field_from_index(i) for i in idx], False)
        assert parse_poly(str(p), _AUT, ring=False) == p


class TestIntPolynomials:
    def test_round_trip(self):
        for coeffs in ((1, 1, 1), (3, 1, 2, 1), (1,), (0, 1)):
            assert parse_int_poly(int_poly_str(coeffs)) == coeffs

    def test_negative_coefficient(self):
        assert parse_int_poly("x^2-1") == (-1, 0, 1)

    def test_rejects_w(self):
        with pytest.raises(ParseError):
            parse_int_poly("1+w")


class TestMatrixFiles:
    def test_worked_file_round_trip(self):
        ctx, mat = parse_matrix(WORKED_MATRIX_FILE)
        assert ctx == _CTX
        assert mat.r == 2 and mat.s == 3 and len(mat) == 4
        assert mat[0] == MixedWord(
            ctx, [ctx.field((1,)), ctx.field((1, 1))],
            [ctx.ring((2, 2)), ctx.ring((2,)), ctx.ring((2,))])
        assert emit_matrix(mat) == WORKED_MATRIX_FILE
        ctx2, mat2 = parse_matrix(emit_matrix(mat))
        assert mat2 == mat

    def test_header_order_free(self):
        shuffled = ("s: 3\nr: 2\nh: 1+x+x^2\nm: 2\nrows:\n"
                    "0 0 | 0 0 0\n")
        _, mat = parse_matrix(shuffled)
        assert mat.r == 2 and mat.s == 3

    def test_binary_only_and_quaternary_only_rows(self):
        _, mat = parse_matrix("m: 2\nh: 1+x+x^2\nr: 2\ns: 0\nrows:\n"
                              "1 w |\n")
        assert mat[0] == MixedWord(_CTX, [_CTX.field((1,)),
                                          _CTX.field((0, 1))], [])
        _, mat = parse_matrix("m: 2\nh: 1+x+x^2\nr: 0\ns: 2\nrows:\n"
                              "| 2 3*w\n")
        assert mat[0].r == 0 and mat[0].s == 2

    def test_missing_header(self):
        with pytest.raises(ParseError) as info:
            parse_matrix("m: 2\nh: 1+x+x^2\nr: 2\nrows:\n")
        assert "s" in info.value.message

    def test_unknown_header(self):
        with pytest.raises(ParseError):
            parse_matrix("m: 2\nh: 1+x+x^2\nr: 1\ns: 1\nz: 9\nrows:\n")

    def test_wrong_entry_count(self):
        text = "m: 2\nh: 1+x+x^2\nr: 2\ns: 1\nrows:\n1 | 2\n"
        with pytest.raises(ParseError) as info:
            parse_matrix(text)
        assert info.value.line == 5

    def test_entry_error_position(self):
        text = "m: 2\nh: 1+x+x^2\nr: 1\ns: 1\nrows:\n1 | w^\n"
        with pytest.raises(ParseError) as info:
            parse_matrix(text)
        assert info.value.line == 5
        assert info.value.column == 6

    def test_missing_bar(self):
        text = "m: 2\nh: 1+x+x^2\nr: 1\ns: 1\nrows:\n1 w\n"
        with pytest.raises(ParseError):
            parse_matrix(text)


class TestGensFiles:
    def test_seven_seven_round_trip(self):
        ctx, autom, gens = parse_gens(SEVEN_SEVEN_GENS_FILE)
        assert autom.t == 1
        assert gens.case == "ii"
        assert gens.f == SkewPoly.from_ints(autom, [1, 1, 0, 1], False)
        assert gens.g == SkewPoly.from_ints(autom, [1, 2, 3, 1, 1], True)
        assert emit_gens(gens) == SEVEN_SEVEN_GENS_FILE
        _, _, again = parse_gens(emit_gens(gens))
        assert again == gens

    def test_t_defaults_to_one(self):
        _, autom, _ = parse_gens("m: 2\nh: 1+x+x^2\nr: 2\ns: 2\n"
                                 "f: 1+x\n")
        assert autom.t == 1

    def test_field_and_ring_parts_separated(self):
        _, _, gens = parse_gens("m: 2\nh: 1+x+x^2\nr: 0\ns: 4\n"
                                "g: 1+x^2\na: w\n")
        assert gens.g.ring and gens.a.ring
        assert gens.a == SkewPoly(_AUT, [_CTX.ring((0, 1))], True)

    def test_empty_tuple_allowed(self):
        _, _, gens = parse_gens("m: 2\nh: 1+x+x^2\nr: 2\ns: 2\n")
        assert gens.case == "binary"
        assert gens.f is None

    def test_duplicate_header_rejected(self):
        with pytest.raises(ParseError):
            parse_gens("m: 2\nm: 2\nh: 1+x+x^2\nr: 1\ns: 1\n")

    def test_component_constraint_surfaces(self):
        with pytest.raises(Exception):
            parse_gens("m: 2\nh: 1+x+x^2\nr: 0\ns: 4\na: w\n")


class TestElementStrategyRoundTrip:
    @given(st.integers(0, 15))
    def test_every_ring_element(self, i):
        e = _CTX.ring_from_index(i)
        assert parse_element(str(e), _CTX) == e

    @given(st.integers(0, 63))
    def test_degree_three_elements(self, i):
        ctx = RingContext(3, (3, 1, 2, 1))
        e = ctx.ring_from_index(i)
        assert parse_element(str(e), ctx) == e
