import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from degbell.bosonalg import (
    Annihilate,
    Create,
    DegPower,
    NormalForm,
    Number,
    ParseError,
    Product,
    Scalar,
    ScalarMul,
    Sum,
    apply_as_diff_operator,
    commutation_chain_check,
    creation_weighted_power,
    deg_number_power,
    monomial_product,
    naive_normal_order,
    naive_word_normal_order,
    normal_order,
    parse,
    poly,
    random_word,
    stirling_prediction,
    theorem1_check,
    word_expr,
    x_power,
)
from degbell.exactnum import deg_falling
from degbell.stirbell import stirling_table

from conftest import GRID, LAMBDA_GRID

HALF = Fraction(1, 2)
NF = NormalForm

words = st.lists(st.sampled_from(["a", "ad"]), max_size=8).map(tuple)


class TestParser:
    def test_juxtaposition(self):
        assert parse("a ad") == Product((Annihilate(), Create()))

    def test_degenerate_power(self):
        assert parse("(N + 2)_{3, 1/2}") == DegPower(Number(), 3, HALF, Fraction(2))

    def test_unbalanced(self):
        with pytest.raises(ParseError) as exc:
            parse("(a ad")
        assert exc.value.offset == 5
        assert ")" in exc.value.expected

    def test_whitespace_insensitive(self):
        assert parse("aad") == parse("a ad") == parse("  a   ad ")
        assert parse("(N+2)_{3,1/2}") == parse("( N + 2 ) _ { 3 , 1/2 }")

    def test_star_and_sums(self):
        assert parse("a * ad + 3") == Sum((Product((Annihilate(), Create())), Scalar(Fraction(3))))
        assert parse("N - 1/2") == Sum((Number(), ScalarMul(Fraction(-1), Scalar(HALF))))

    def test_negative_lambda_and_shift(self):
        e = parse("(N - 1)_{2, -1/3}")
        assert e == DegPower(Number(), 2, Fraction(-1, 3), Fraction(-1))

    def test_grouping(self):
        assert normal_order(parse("(a + ad)(a - ad)")) == normal_order(parse("a a - a ad + ad a - ad ad"))

    @pytest.mark.parametrize(
        "text, offset",
        [("a +", 3), ("(N)_{2 1}", 7), ("x", 0), ("1/0", 2), ("a )", 2), ("", 0), ("(N)_{2, 1/}", 10)],
    )
    def test_errors_carry_offsets(self, text, offset):
        with pytest.raises(ParseError) as exc:
            parse(text)
        assert exc.value.offset == offset

    def test_error_is_value_error(self):
        with pytest.raises(ValueError):
            parse("a ad)")


class TestMonomialProduct:
    def test_no_swaps(self):
        assert monomial_product(2, 0, 3, 1) == NF({(5, 1): 1})
        assert monomial_product(1, 2, 0, 4) == NF({(1, 6): 1})

    def test_commutator(self):
        assert monomial_product(0, 1, 1, 0) == NF({(1, 1): 1, (0, 0): 1})

    def test_double(self):
        assert monomial_product(0, 2, 2, 0) == NF({(2, 2): 1, (1, 1): 4, (0, 0): 2})

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
    def test_matches_naive(self, i, j, k, l):
        word = ("ad",) * i + ("a",) * j + ("ad",) * k + ("a",) * l
        assert monomial_product(i, j, k, l) == naive_word_normal_order(word)


class TestNormalOrder:
    def test_examples(self):
        assert normal_order(parse("a ad")) == NF({(1, 1): 1, (0, 0): 1})
        assert normal_order(parse("ad a")) == NF({(1, 1): 1})
        assert normal_order(parse("N N")) == NF({(1, 1): 1, (2, 2): 1})

    def test_naive_rewriter_examples(self):
        assert naive_word_normal_order(("ad", "a", "ad", "a")) == NF({(1, 1): 1, (2, 2): 1})
        assert naive_word_normal_order(("a", "ad")) == NF({(1, 1): 1, (0, 0): 1})

    @settings(max_examples=150, deadline=None)
    @given(words)
    def test_confluence_against_naive(self, word):
        assert normal_order(word_expr(word)) == naive_word_normal_order(word)

    @settings(max_examples=40, deadline=None)
    @given(words, words)
    def test_associative(self, u, v):
        lhs = normal_order(word_expr(u)) * normal_order(word_expr(v))
        assert lhs == normal_order(word_expr(u + v))

    def test_linearity(self):
        e1, e2 = parse("a ad ad"), parse("(N + 1)_{2, 1/3} a")
        c = Fraction(-2, 7)
        combined = normal_order(Sum((e1, ScalarMul(c, e2))))
        assert combined == normal_order(e1) + normal_order(e2).scale(c)

    def test_no_zero_coefficients(self):
        nf = normal_order(parse("a ad - ad a - 1"))
        assert nf.is_zero() and len(nf) == 0

    def test_text_output(self):
        assert str(NF({(1, 1): 1, (0, 0): 1})) == "1 (ad)^1 a^1 + 1"
        assert str(NF({(0, 2): Fraction(-1, 2), (2, 0): 3, (1, 1): 1})) == "3 (ad)^2 + 1 (ad)^1 a^1 - 1/2 a^2"
        assert str(NF()) == "0"

    def test_deg_power_matches_naive_expansion(self):
        for n, r, lam in [(3, 1, HALF), (4, 2, Fraction(-1, 3)), (5, 0, 2)]:
            expr = DegPower(Number(), n, lam, Fraction(r))
            assert normal_order(expr) == naive_normal_order(expr)


class TestDegeneratePowers:
    def test_deg_number_power_examples(self):
        assert deg_number_power(0, 3, HALF) == NF.identity()
        assert deg_number_power(1, 2, 7) == NF({(1, 1): 1, (0, 0): 2})
        assert deg_number_power(2, 1, HALF) == NF({(2, 2): 1, (1, 1): Fraction(5, 2), (0, 0): HALF})

    def test_creation_weighted_examples(self):
        assert creation_weighted_power(0, 2, 5) == NF({(2, 0): 1})
        assert creation_weighted_power(1, 1, 5) == NF({(2, 1): 1, (1, 0): 1})
        want = NF({(3, 2): 1, (2, 1): Fraction(5, 2), (1, 0): HALF})
        assert creation_weighted_power(2, 1, HALF) == want
        naive = naive_normal_order(Product((DegPower(Number(), 2, HALF), Create())))
        assert naive == want

    @pytest.mark.parametrize("r, lam", GRID)
    def test_theorem1_grid(self, r, lam):
        rep = theorem1_check(8, r, lam)
        assert rep.ok, rep.failures[:1]

    def test_integral_power_gives_stirling2(self):
        table = stirling_table(8, 0, 0)
        for k in range(9):
            nf = normal_order(Product((Number(),) * k))
            assert nf == NF({(l, l): table.entry(k, l) for l in range(k + 1)})

    @pytest.mark.parametrize("lam", LAMBDA_GRID)
    def test_degenerate_power_gives_degenerate_stirling(self, lam):
        for k in range(9):
            assert normal_order(DegPower(Number(), k, lam)) == stirling_prediction(k, 0, lam)

    def test_second_display_index_shift(self):
        # (N)_{n-r}(ad)^r a^r at (ad)^k a^k is the (r, lam) entry (n-r, k-r)
        r, lam = 2, Fraction(-1, 3)
        table = stirling_table(6, r, lam)
        for n in range(r, 9):
            nf = normal_order(Product((DegPower(Number(), n - r, lam), Create(), Create(), Annihilate(), Annihilate())))
            for k in range(r, n + 1):
                assert nf[k, k] == table.entry(n - r, k - r)


class TestCommutationChain:
    def test_examples(self):
        assert commutation_chain_check(0, 0, 0)
        assert commutation_chain_check(1, 0, 1)
        assert commutation_chain_check(3, 2, HALF)

    @pytest.mark.parametrize("r, lam", GRID)
    def test_grid(self, r, lam):
        for k in range(7):
            assert commutation_chain_check(k, r, lam)

    def test_detects_a_wrong_shift(self):
        wrong = Product((Create(), DegPower(Number(), 2, HALF, Fraction(1)), Annihilate()))
        right = Product((Number(), DegPower(Number(), 2, HALF, -HALF)))
        assert normal_order(wrong) != normal_order(right)


class TestDiffOperator:
    def test_identity(self):
        p = poly([1, -2, Fraction(1, 3)])
        assert apply_as_diff_operator(NF.identity(), p) == p

    def test_number_operator_is_euler(self):
        for m in range(8):
            assert apply_as_diff_operator(NF({(1, 1): 1}), x_power(m)) == x_power(m, m)

    def test_deg_power_example(self):
        nf = deg_number_power(2, 1, HALF)
        assert apply_as_diff_operator(nf, x_power(3)) == x_power(3, 14)

    def test_commutation_relation(self):
        # d/dx x - x d/dx = 1 on a generic polynomial
        p = poly([3, 1, -4, 1, 5])
        assert apply_as_diff_operator(normal_order(parse("a ad - ad a")), p) == p

    @pytest.mark.parametrize("r, lam", GRID)
    def test_eigen_action(self, r, lam):
        for n in range(9):
            nf = deg_number_power(n, r, lam)
            for m in range(11):
                assert apply_as_diff_operator(nf, x_power(m)) == x_power(m, deg_falling(m + r, n, lam))

    def test_weighted_form_shifts_degree(self):
        # (x d/dx)_{n,lam} x^r f  with f = x^m gives (m + r)_{n,lam} x^(m+r)
        r, lam = 2, HALF
        nf = creation_weighted_power(3, r, lam)
        for m in range(6):
            assert apply_as_diff_operator(nf, x_power(m)) == x_power(m + r, deg_falling(m + r, 3, lam))


def test_random_words_are_seeded():
    a = [random_word(random.Random(3)) for _ in range(5)]
    b = [random_word(random.Random(3)) for _ in range(5)]
    assert a == b


def test_normal_form_is_hashable_and_immutable():
    nf = NF({(1, 0): 2})
    assert hash(nf) == hash(NF({(1, 0): Fraction(2)}))
    with pytest.raises(TypeError):
        nf.terms[(0, 0)] = 1
