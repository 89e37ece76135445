#include "gtlie/rational.hpp"

#include "gtlie/errors.hpp"

#include <stdexcept>

namespace gtlie {

Rational make_rational(long num, long den)
{
    if (den == 0) throw PreconditionError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw PreconditionError("empty rational");
    if (s.front() == '+') s.erase(0, 1);
    const auto slash = s.find('/');
    auto digits_ok = [](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = (allow_sign && part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(s, true)) throw PreconditionError("malformed rational: " + std::string(text));
    } else {
        if (!digits_ok(s.substr(0, slash), true) || !digits_ok(s.substr(slash + 1), false))
            throw PreconditionError("malformed rational: " + std::string(text));
    }
    Rational q;
    if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) throw PreconditionError("malformed rational: " + std::string(text));
    q.canonicalize();
    return q;
}

Rational factorial(unsigned m)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace gtlie
