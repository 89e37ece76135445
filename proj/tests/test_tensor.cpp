#include "gtlie/io.hpp"
#include "gtlie/random.hpp"
#include "gtlie/tensor.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace gtlie;

namespace {

const auto G2 = AlgebraContext::genus0(2, 6);

TensorSeries S(const AlgebraContext& ctx, const char* text) { return parse_series(ctx, text); }

}  // namespace

TEST_SUITE("tensor")
{
    TEST_CASE("add")
    {
        CHECK(add(S(G2, "x1"), S(G2, "-x1")).is_zero());
        CHECK(add(S(G2, "1 + x1"), S(G2, "x1")) == S(G2, "1 + 2 x1"));
        Rng rng(7);
        const TensorSeries a = random_series(rng, G2, 0, 6, 5);
        CHECK(add(a, TensorSeries(G2)) == a);
    }

    TEST_CASE("add across contexts throws")
    {
        const auto other = AlgebraContext::genus0(3, 6);
        CHECK_THROWS_AS(add(S(G2, "x1"), S(other, "x1")), ContextMismatch);
        CHECK_THROWS_AS(concat_product(S(G2, "x1"), S(G2.with_degree(5), "x1")), ContextMismatch);
    }

    TEST_CASE("concat_product")
    {
        CHECK(concat_product(S(G2, "1 + x1"), S(G2, "1 + x2")) == S(G2, "1 + x1 + x2 + x1x2"));
        const TensorSeries sq = concat_product(S(G2, "x1"), S(G2, "x1"));
        CHECK(sq.size() == 1);
        CHECK(sq.coefficient(genus0_word(G2, {1, 1})) == 1);
        const auto d2 = AlgebraContext::genus0(2, 2);
        CHECK(concat_product(S(d2, "x1x2"), S(d2, "x1")).is_zero());
    }

    TEST_CASE("truncation drops high words on insertion")
    {
        const auto d2 = AlgebraContext::genus0(2, 2);
        TensorSeries a(d2);
        a.add_term(genus0_word(d2, {1, 2, 1}), Rational(3));
        CHECK(a.is_zero());
        a.add_term(genus0_word(d2, {1, 2}), Rational(0));
        CHECK(a.is_zero());
    }

    TEST_CASE("coefficients cancel to nothing")
    {
        TensorSeries a(G2);
        a.add_term(genus0_word(G2, {2}), make_rational(1, 3));
        a.add_term(genus0_word(G2, {2}), make_rational(-1, 3));
        CHECK(a.is_zero());
        CHECK(a.size() == 0);
    }

    TEST_CASE("letters outside the alphabet are rejected")
    {
        TensorSeries a(G2);
        CHECK_THROWS_AS(a.add_term(Word{Letter(2)}, Rational(1)), PreconditionError);
        CHECK_THROWS_AS(generator_series(G2, 3), PreconditionError);
        CHECK_THROWS_AS(generator_series(G2, 0), PreconditionError);
    }

    TEST_CASE("contexts validate their parameters")
    {
        CHECK_THROWS_AS(AlgebraContext::genus0(0, 4), PreconditionError);
        CHECK_THROWS_AS(AlgebraContext::genus0(2, -1), PreconditionError);
        CHECK_THROWS_AS(AlgebraContext::genus0(2, AlgebraContext::kMaxDegree + 1), PreconditionError);
        CHECK_THROWS_AS(AlgebraContext::symplectic(0, 4), PreconditionError);
    }

    TEST_CASE("multi_product")
    {
        const MultiSeries<2> a = tensor_product(S(G2, "x1"), S(G2, "1"));
        const MultiSeries<2> b = tensor_product(S(G2, "1"), S(G2, "x2"));
        CHECK(multi_product<2>(a, b) == tensor_product(S(G2, "x1"), S(G2, "x2")));
        const MultiSeries<2> one = tensor_product(S(G2, "1"), S(G2, "1"));
        Rng rng(3);
        const MultiSeries<2> m = tensor_product(random_series(rng, G2, 0, 3, 3), random_series(rng, G2, 0, 3, 3));
        CHECK(multi_product<2>(one, m) == m);
        CHECK(multi_product<2>(m, one) == m);
        CHECK(multi_product<2>(tensor_product(S(G2, "x1"), S(G2, "x2")), tensor_product(S(G2, "x2"), S(G2, "x1"))) ==
              tensor_product(S(G2, "x1x2"), S(G2, "x2x1")));
    }

    TEST_CASE("multi_product truncates in total degree")
    {
        const auto d3 = AlgebraContext::genus0(2, 3);
        const MultiSeries<2> a = tensor_product(S(d3, "x1x1"), S(d3, "x2"));
        CHECK(multi_product<2>(a, a).is_zero());
    }

    TEST_CASE("filtration_degree")
    {
        CHECK(filtration_degree(S(G2, "1 + x1")) == 0);
        CHECK(filtration_degree(S(G2, "x1x2 - x2x1")) == 2);
        CHECK(filtration_degree(TensorSeries(G2)) == kInfiniteDegree);
    }

    TEST_CASE("concat_product is associative and unital")
    {
        Rng rng(11);
        const TensorSeries one = unit_series(G2);
        for (int i = 0; i < 30; ++i) {
            const TensorSeries a = random_series(rng, G2, 0, 4, 4), b = random_series(rng, G2, 0, 4, 4), c = random_series(rng, G2, 0, 4, 4);
            CHECK(concat_product(concat_product(a, b), c) == concat_product(a, concat_product(b, c)));
            CHECK(concat_product(one, a) == a);
            CHECK(concat_product(a, one) == a);
        }
    }

    TEST_CASE("concat_product matches the oracle")
    {
        Rng rng(12);
        for (int i = 0; i < 30; ++i) {
            const TensorSeries a = random_series(rng, G2, 0, 4, 4), b = random_series(rng, G2, 0, 4, 4);
            const auto expected = oracle::to_series(G2, oracle::multiply(oracle::from_series(a), oracle::from_series(b), G2.degree()));
            CHECK(concat_product(a, b) == expected);
        }
    }

    TEST_CASE("multi_product agrees slotwise on decomposables")
    {
        Rng rng(13);
        for (int i = 0; i < 20; ++i) {
            const TensorSeries a = random_series(rng, G2, 0, 2, 2), b = random_series(rng, G2, 0, 2, 2);
            const TensorSeries c = random_series(rng, G2, 0, 2, 2), d = random_series(rng, G2, 0, 2, 2);
            CHECK(multi_product<2>(tensor_product(a, b), tensor_product(c, d)) == tensor_product(concat_product(a, c), concat_product(b, d)));
        }
    }

    TEST_CASE("filtration is superadditive under products")
    {
        Rng rng(14);
        for (int i = 0; i < 30; ++i) {
            const TensorSeries a = random_series(rng, G2, 1, 3, 3), b = random_series(rng, G2, 1, 3, 3);
            const TensorSeries ab = concat_product(a, b);
            if (!ab.is_zero()) CHECK(filtration_degree(ab) >= filtration_degree(a) + filtration_degree(b));
        }
    }

    TEST_CASE("stored terms respect the invariants")
    {
        Rng rng(15);
        for (int i = 0; i < 20; ++i) {
            const TensorSeries a = power(random_series(rng, G2, 0, 3, 3), 3);
            for (const auto& [w, c] : a.terms()) {
                CHECK(w.size() <= G2.degree());
                CHECK(c != 0);
            }
        }
    }

    TEST_CASE("power and commutator")
    {
        CHECK(power(S(G2, "x1 + x2"), 0) == unit_series(G2));
        CHECK(power(S(G2, "x1 + x2"), 2) == S(G2, "x1x1 + x1x2 + x2x1 + x2x2"));
        CHECK(commutator(S(G2, "x1"), S(G2, "x2")) == S(G2, "x1x2 - x2x1"));
    }

    TEST_CASE("algebra morphisms expand letter images")
    {
        const auto sp = AlgebraContext::symplectic(2, 4);
        LetterImages images{sp, {parse_series(sp, "A1B1"), parse_series(sp, "B2 + A2")}};
        CHECK(apply_algebra_morphism(S(G2, "x1x2"), images) == parse_series(sp, "A1B1B2 + A1B1A2"));
        CHECK(apply_algebra_morphism(S(G2, "x1x1x2"), images).is_zero());
    }

    TEST_CASE("words")
    {
        const Word w = genus0_word(G2, {1, 2, 2});
        CHECK(w.reversed() == genus0_word(G2, {2, 2, 1}));
        CHECK(w.rotated(1) == genus0_word(G2, {2, 2, 1}));
        CHECK(w.slice(1, 2) == genus0_word(G2, {2, 2}));
        CHECK(Word{} < Word{Letter(1)});
        CHECK(Word{Letter(1)} < Word{Letter(0), Letter(0)});
        Word big;
        for (int i = 0; i < Word::kCapacity; ++i) big.push_back(0);
        CHECK_THROWS_AS(big.push_back(0), std::length_error);
    }
}
