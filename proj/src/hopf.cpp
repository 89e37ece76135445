#include "gtlie/hopf.hpp"

#include <algorithm>

namespace gtlie {

namespace {

/// All 2^m splittings of w into (subsequence, complementary subsequence).
template <typename Emit>
void for_each_splitting(const Word& w, Emit&& emit)
{
    const unsigned m = static_cast<unsigned>(w.size());
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        Word left, right;
        for (unsigned i = 0; i < m; ++i) {
            if ((mask >> i) & 1ul)
                left.push_back(w[static_cast<int>(i)]);
            else
                right.push_back(w[static_cast<int>(i)]);
        }
        emit(left, right);
    }
}

}  // namespace

MultiSeries<2> coproduct(const TensorSeries& a)
{
    MultiSeries<2> r(a.context());
    for (const auto& [w, c] : a.terms())
        for_each_splitting(w, [&](const Word& l, const Word& rt) { r.add_term({l, rt}, c); });
    return r;
}

template <std::size_t K>
MultiSeries<K + 1> coproduct_slot(const MultiSeries<K>& m, std::size_t slot)
{
    MultiSeries<K + 1> r(m.context());
    for (const auto& [k, c] : m.terms()) {
        for_each_splitting(k[slot], [&](const Word& l, const Word& rt) {
            WordTuple<K + 1> key;
            for (std::size_t i = 0, j = 0; i < K; ++i) {
                if (i == slot) {
                    key[j++] = l;
                    key[j++] = rt;
                } else {
                    key[j++] = k[i];
                }
            }
            r.add_term(key, c);
        });
    }
    return r;
}

template MultiSeries<3> coproduct_slot<2>(const MultiSeries<2>&, std::size_t);
template MultiSeries<4> coproduct_slot<3>(const MultiSeries<3>&, std::size_t);

TensorSeries antipode(const TensorSeries& a)
{
    TensorSeries r(a.context());
    for (const auto& [w, c] : a.terms()) r.add_term(w.reversed(), (w.size() % 2 == 0) ? c : Rational(-c));
    return r;
}

Rational counit(const TensorSeries& a) { return a.coefficient(Word{}); }

TensorSeries counit_slot(const MultiSeries<2>& m, std::size_t slot)
{
    TensorSeries r(m.context());
    for (const auto& [k, c] : m.terms())
        if (k[slot].empty()) r.add_term(k[1 - slot], c);
    return r;
}

// ---------------------------------------------------------------------------

PowerSeries1D operator*(const PowerSeries1D& a, const PowerSeries1D& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    return PowerSeries1D(std::move(c));
}

PowerSeries1D operator+(const PowerSeries1D& a, const PowerSeries1D& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a[i] + b[i];
    return PowerSeries1D(std::move(c));
}

PowerSeries1D operator-(const PowerSeries1D& a, const PowerSeries1D& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a[i] - b[i];
    return PowerSeries1D(std::move(c));
}

bool operator==(const PowerSeries1D& a, const PowerSeries1D& b)
{
    const int n = std::max(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

PowerSeries1D PowerSeries1D::inverse() const
{
    if (c_.empty() || sgn(c_[0]) == 0) throw PreconditionError("power series inverse needs a nonzero constant term");
    std::vector<Rational> r(c_.size());
    r[0] = 1 / c_[0];
    for (int m = 1; m <= order(); ++m) {
        Rational acc;
        for (int i = 1; i <= m; ++i) acc += (*this)[i] * r[static_cast<std::size_t>(m - i)];
        r[static_cast<std::size_t>(m)] = -acc / c_[0];
    }
    return PowerSeries1D(std::move(r));
}

PowerSeries1D PowerSeries1D::shift_up() const
{
    std::vector<Rational> r(c_.size());
    for (int m = 1; m <= order(); ++m) r[static_cast<std::size_t>(m)] = c_[static_cast<std::size_t>(m - 1)];
    return PowerSeries1D(std::move(r));
}

PowerSeries1D PowerSeries1D::truncated(int order) const
{
    std::vector<Rational> r(static_cast<std::size_t>(order + 1));
    for (int m = 0; m <= order; ++m) r[static_cast<std::size_t>(m)] = (*this)[m];
    return PowerSeries1D(std::move(r));
}

PowerSeries1D exp_series(int order)
{
    std::vector<Rational> c(static_cast<std::size_t>(order + 1));
    for (int m = 0; m <= order; ++m) c[static_cast<std::size_t>(m)] = 1 / factorial(static_cast<unsigned>(m));
    return PowerSeries1D(std::move(c));
}

PowerSeries1D log1p_series(int order)
{
    std::vector<Rational> c(static_cast<std::size_t>(order + 1));
    for (int m = 1; m <= order; ++m) c[static_cast<std::size_t>(m)] = make_rational(m % 2 == 1 ? 1 : -1, m);
    return PowerSeries1D(std::move(c));
}

PowerSeries1D s_series(int order)
{
    // e^{-z} - 1 = -z g(z) with g(z) = Σ (-1)^m z^m/(m+1)!, so
    // s(z) = (1 - 1/g(z)) / z.
    std::vector<Rational> g(static_cast<std::size_t>(order + 2));
    for (int m = 0; m <= order + 1; ++m)
        g[static_cast<std::size_t>(m)] = Rational(m % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(m + 1));
    const PowerSeries1D inv = PowerSeries1D(std::move(g)).inverse();
    std::vector<Rational> s(static_cast<std::size_t>(order + 1));
    for (int m = 0; m <= order; ++m) s[static_cast<std::size_t>(m)] = -inv[m + 1];
    return PowerSeries1D(std::move(s));
}

PowerSeries1D z_over_expm1_neg_series(int order)
{
    // Solve (e^{-z} - 1) h(z) = z coefficientwise.
    auto e = [](int i) -> Rational { return Rational(i % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(i)); };
    std::vector<Rational> h(static_cast<std::size_t>(order + 1));
    for (int m = 0; m <= order; ++m) {
        Rational rhs = (m == 0) ? Rational(1) : Rational(0);
        for (int i = 2; i <= m + 1; ++i) rhs -= e(i) * h[static_cast<std::size_t>(m + 1 - i)];
        h[static_cast<std::size_t>(m)] = rhs / e(1);
    }
    return PowerSeries1D(std::move(h));
}

PowerSeries1D z2_over_expm1_neg_series(int order) { return z_over_expm1_neg_series(order).shift_up(); }

Rational bernoulli(int two_m)
{
    if (two_m < 2 || two_m % 2 != 0) throw PreconditionError("bernoulli: argument must be an even positive integer");
    return -factorial(static_cast<unsigned>(two_m)) * s_series(two_m - 1)[two_m - 1];
}

TensorSeries apply_series(const PowerSeries1D& f, const TensorSeries& u)
{
    const int fd = filtration_degree(u);
    if (fd < 1) throw PreconditionError("apply_series: argument must lie in T_{>=1}");
    const AlgebraContext& ctx = u.context();
    if (f.order() < 0) return TensorSeries(ctx);
    const int top = (fd == kInfiniteDegree) ? 0 : std::min(f.order(), ctx.degree() / fd);
    TensorSeries r = unit_series(ctx, f[top]);
    for (int m = top - 1; m >= 0; --m) {
        r = concat_product(r, u);
        r.add_term(Word{}, f[m]);
    }
    return r;
}

TensorSeries exp(const TensorSeries& u)
{
    if (filtration_degree(u) < 1) throw PreconditionError("exp: argument must lie in T_{>=1}");
    return apply_series(exp_series(u.context().degree()), u);
}

TensorSeries log(const TensorSeries& a)
{
    if (counit(a) != 1) throw PreconditionError("log: argument must have counit 1");
    return apply_series(log1p_series(a.context().degree()), a - unit_series(a.context()));
}

TensorSeries bch(const TensorSeries& u, const TensorSeries& v)
{
    require_same_context(u.context(), v.context(), "bch");
    if (filtration_degree(u) < 1 || filtration_degree(v) < 1) throw PreconditionError("bch: arguments must lie in T_{>=1}");
    return log(concat_product(exp(u), exp(v)));
}

// ---------------------------------------------------------------------------

GroupWord::GroupWord(const std::vector<Syllable>& syllables)
{
    for (const auto& s : syllables) push(s);
}

void GroupWord::push(Syllable s)
{
    if (s.generator < 1) throw PreconditionError("group generator indices are 1-based");
    if (s.exponent == 0) return;
    if (!syllables_.empty() && syllables_.back().generator == s.generator) {
        syllables_.back().exponent += s.exponent;
        if (syllables_.back().exponent == 0) syllables_.pop_back();
        return;
    }
    syllables_.push_back(s);
}

GroupWord GroupWord::boundary_product(int n)
{
    std::vector<Syllable> s;
    for (int k = 1; k <= n; ++k) s.push_back({k, 1});
    return GroupWord(s);
}

GroupWord GroupWord::operator*(const GroupWord& other) const
{
    GroupWord r = *this;
    for (const auto& s : other.syllables_) r.push(s);
    return r;
}

GroupWord GroupWord::inverse() const
{
    GroupWord r;
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) r.push({it->generator, -it->exponent});
    return r;
}

TensorSeries theta_std(const AlgebraContext& ctx, const GroupWord& w)
{
    if (!ctx.is_genus0()) throw PreconditionError("theta_std needs a genus-0 context");
    TensorSeries r = unit_series(ctx);
    for (const auto& s : w.syllables()) {
        const TensorSeries x = letter_series(ctx, ctx.generator(s.generator), Rational(s.exponent));
        r = concat_product(r, exp(x));
    }
    return r;
}

bool is_group_like(const TensorSeries& a)
{
    return counit(a) == 1 && coproduct(a) == tensor_product(a, a);
}

}  // namespace gtlie
