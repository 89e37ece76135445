#include "gtlie/intersection.hpp"
#include "gtlie/io.hpp"
#include "gtlie/random.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace gtlie;

namespace {

TensorSeries S(const AlgebraContext& ctx, const char* text) { return parse_series(ctx, text); }

MultiSeries<2> pair(const AlgebraContext& ctx, std::initializer_list<std::tuple<const char*, const char*, int>> terms)
{
    MultiSeries<2> m(ctx);
    for (const auto& [l, r, c] : terms) m += Rational(c) * tensor_product(S(ctx, l), S(ctx, r));
    return m;
}

/// x_i ⋔ Y ⋔ x_j evaluated by the oracle contraction on the closed kernel.
TensorSeries rho_on_letters_oracle(const AlgebraContext& ctx, int i, int j)
{
    const int D = ctx.degree();
    oracle::Poly kernel;
    for (int k = 1; k <= ctx.rank(); ++k)
        for (int l = 1; l < k; ++l) oracle::add_to(kernel, {k - 1, l - 1}, Rational(-1));
    const auto f = oracle::z2_over_expm1_neg(D);
    for (int k = 0; k < ctx.rank(); ++k)
        for (int m = 1; m <= D; ++m) oracle::add_to(kernel, std::vector<int>(static_cast<std::size_t>(m), k), f[static_cast<std::size_t>(m)]);
    const oracle::Poly xi{{{i - 1}, Rational(1)}}, xj{{{j - 1}, Rational(1)}};
    return oracle::to_series(ctx, oracle::mt_genus0(oracle::mt_genus0(xi, kernel, D), xj, D));
}

}  // namespace

TEST_SUITE("intersection")
{
    TEST_CASE("OmegaElement validation")
    {
        const auto sp = AlgebraContext::symplectic(2, 6);
        CHECK_NOTHROW(OmegaElement(symplectic_form(sp)));
        CHECK_NOTHROW(OmegaElement(symplectic_form(sp) + S(sp, "A1A1B2")));
        CHECK_THROWS_AS(OmegaElement(symplectic_form(sp) + S(sp, "A1")), PreconditionError);
        CHECK_THROWS_AS(OmegaElement(symplectic_form(sp) + S(sp, "1")), PreconditionError);
        CHECK_THROWS_AS(OmegaElement(S(sp, "A1B1 - B1A1")), PreconditionError);
        CHECK_THROWS_AS(OmegaElement(S(AlgebraContext::genus0(2, 4), "x1x2")), PreconditionError);
    }

    TEST_CASE("rho_theta characterization at Omega = omega")
    {
        const auto sp = AlgebraContext::symplectic(1, 7);
        const OmegaElement om(symplectic_form(sp));
        const TensorSeries e = exp(-om.series());
        for (const char* x : {"A1", "B1"}) {
            CHECK(truncate(rho_theta(om, S(sp, x), e), 6) == truncate(S(sp, x), 6));
            CHECK(rho_theta(om, unit_series(sp), e).is_zero());
        }
    }

    TEST_CASE("rho_theta characterization at random Omega")
    {
        Rng rng(41);
        const auto work = AlgebraContext::symplectic(2, 7);
        for (int i = 0; i < 5; ++i) {
            const TensorSeries o = symplectic_form(work) + random_series(rng, work, 3, 7, 3);
            const OmegaElement om(o);
            const TensorSeries s = apply_series(s_series(7), o);
            for (const char* x : {"A1", "B1", "A2", "B2"}) {
                const TensorSeries X = S(work, x);
                CHECK(truncate(rho_theta(om, X, exp(-o)), 6) == truncate(X, 6));
                CHECK(truncate(rho_theta(om, X, o), 6) == truncate(concat_product(concat_product(X, s), o) - X, 6));
            }
        }
    }

    TEST_CASE("rho_std on letters matches the oracle")
    {
        const auto g2 = AlgebraContext::genus0(2, 6);
        // hand expansion: only kernel words starting with x_i and ending with x_j survive
        CHECK(rho_std(S(g2, "x1"), S(g2, "x2")).is_zero());
        CHECK(rho_std(S(g2, "x2"), S(g2, "x1")) == S(g2, "-x2x1"));
        CHECK(rho_std(S(g2, "x1"), S(g2, "x1")) == apply_series(z2_over_expm1_neg_series(6), S(g2, "x1")));
        const auto g3 = AlgebraContext::genus0(3, 6);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) CHECK(rho_std(generator_series(g3, i), generator_series(g3, j)) == rho_on_letters_oracle(g3, i, j));
    }

    TEST_CASE("rho_std kills constants and only sees augmented parts")
    {
        const auto g2 = AlgebraContext::genus0(2, 6);
        Rng rng(42);
        for (int i = 0; i < 10; ++i) {
            const TensorSeries a = random_series(rng, g2, 0, 4, 3), b = random_series(rng, g2, 0, 4, 3);
            CHECK(rho_std(unit_series(g2), b).is_zero());
            CHECK(rho_std(a, unit_series(g2)).is_zero());
            CHECK(rho_std(a + unit_series(g2, Rational(5)), b - unit_series(g2, Rational(2))) == rho_std(a, b));
            const TensorSeries c = random_series(rng, g2, 1, 3, 2);
            CHECK(rho_std(a + c, b) == rho_std(a, b) + rho_std(c, b));
        }
    }

    TEST_CASE("rho_std kernel is the closed Theorem Y side")
    {
        const auto g3 = AlgebraContext::genus0(3, 6);
        CHECK(rho_std_kernel(g3) == theorem_y_lhs(g3));
    }

    TEST_CASE("embedded rho_std agrees with rho_theta at the embedded Xi")
    {
        Rng rng(43);
        const auto ctx = AlgebraContext::genus0(2, 4);
        const OmegaElement om(embed(xi(ctx)));
        for (int i = 0; i < 5; ++i) {
            const TensorSeries a = random_series(rng, ctx, 0, 3, 3), b = random_series(rng, ctx, 0, 3, 3);
            CHECK(embed(rho_std(a, b)) == rho_theta(om, embed(a), embed(b)));
        }
    }

    TEST_CASE("k_tensor")
    {
        const auto g2 = AlgebraContext::genus0(2, 5);
        CHECK(k_tensor(g2, 1, 2).is_zero());
        CHECK(k_tensor(g2, 2, 1) == pair(g2, {{"x2x1", "1", 1}, {"x2", "x1", -1}, {"x1", "x2", -1}, {"1", "x1x2", 1}}));
        const MultiSeries<2> kk = k_tensor(g2, 1, 1);
        CHECK(homogeneous_part(kk, 1) == pair(g2, {{"x1", "1", 1}, {"1", "x1", -1}}));
        CHECK(homogeneous_part(kk, 0).is_zero());
        // degree 2: (1⊗S)Δ(x1^2/2) = (x1^2 ⊗ 1 - 2 x1 ⊗ x1 + 1 ⊗ x1^2)/2
        MultiSeries<2> d2(g2);
        d2.add_term({genus0_word(g2, {1, 1}), Word{}}, make_rational(1, 2));
        d2.add_term({genus0_word(g2, {1}), genus0_word(g2, {1})}, Rational(-1));
        d2.add_term({Word{}, genus0_word(g2, {1, 1})}, make_rational(1, 2));
        CHECK(homogeneous_part(kk, 2) == d2);
        CHECK_THROWS_AS(k_tensor(g2, 3, 1), PreconditionError);
    }

    TEST_CASE("kappa_std on generators is -K")
    {
        for (int n = 1; n <= 3; ++n) {
            const auto ctx = AlgebraContext::genus0(n, 6);
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    const auto x = generator_series(ctx, k), y = generator_series(ctx, l);
                    CHECK(kappa_std(x, y) == -k_tensor(ctx, k, l));
                    CHECK(kappa_std(x, y, 1) == k_tensor(ctx, k, l));
                }
        }
    }

    TEST_CASE("kappa_std edge cases")
    {
        const auto g2 = AlgebraContext::genus0(2, 5);
        CHECK(kappa_std(unit_series(g2), S(g2, "x1x2 + x2")).is_zero());
        CHECK(kappa_std(S(g2, "x1"), S(g2, "x2")).is_zero());
        CHECK_THROWS_AS(kappa_std(S(g2, "x1"), S(g2, "x2"), 0), PreconditionError);
        const auto g3 = AlgebraContext::genus0(3, 5);
        CHECK_THROWS_AS(kappa_std(S(g2, "x1"), S(g3, "x2")), ContextMismatch);
    }

    TEST_CASE("kappa_std is bilinear")
    {
        const auto g2 = AlgebraContext::genus0(2, 5);
        Rng rng(44);
        for (int i = 0; i < 5; ++i) {
            const TensorSeries a = random_series(rng, g2, 1, 3, 2), b = random_series(rng, g2, 1, 3, 2), c = random_series(rng, g2, 1, 2, 2);
            CHECK(kappa_std(a + c, b) == kappa_std(a, b) + kappa_std(c, b));
            CHECK(kappa_std(a, Rational(3) * b) == Rational(3) * kappa_std(a, b));
        }
    }
}
