#include "gtlie/context.hpp"

#include "gtlie/errors.hpp"

#include <charconv>
#include <string>

namespace gtlie {

AlgebraContext::AlgebraContext(Mode mode, int rank, int degree) : mode_(mode), rank_(rank), degree_(degree)
{
    if (rank < 1) throw PreconditionError("alphabet rank must be >= 1");
    if (degree < 1 || degree > kMaxDegree)
        throw PreconditionError("truncation degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
    if (letter_count() > 255) throw PreconditionError("alphabet too large");
}

AlgebraContext AlgebraContext::genus0(int n, int degree) { return AlgebraContext(Mode::genus0, n, degree); }
AlgebraContext AlgebraContext::symplectic(int g, int degree) { return AlgebraContext(Mode::symplectic, g, degree); }
AlgebraContext AlgebraContext::with_degree(int degree) const { return AlgebraContext(mode_, rank_, degree); }

int AlgebraContext::pairing(Letter a, Letter b) const
{
    if (mode_ != Mode::symplectic) throw PreconditionError("intersection pairing needs a symplectic context");
    if (a / 2 != b / 2) return 0;
    if (a % 2 == 0 && b % 2 == 1) return 1;
    if (a % 2 == 1 && b % 2 == 0) return -1;
    return 0;
}

std::string AlgebraContext::letter_name(Letter a) const
{
    if (mode_ == Mode::genus0) return "x" + std::to_string(a + 1);
    return (a % 2 == 0 ? "A" : "B") + std::to_string(a / 2 + 1);
}

namespace {

int parse_index(std::string_view digits)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) throw PreconditionError("malformed letter index: " + std::string(digits));
    return v;
}

}  // namespace

Letter AlgebraContext::parse_letter(std::string_view text) const
{
    if (text.empty()) throw PreconditionError("empty letter");
    if (mode_ == Mode::genus0) {
        if (text.front() == 'x') text.remove_prefix(1);
        return generator(parse_index(text));
    }
    const char kind = text.front();
    const int i = parse_index(text.substr(1));
    if (kind == 'A') return a_letter(i);
    if (kind == 'B') return b_letter(i);
    throw PreconditionError("symplectic letters are A<i> or B<i>: " + std::string(text));
}

Letter AlgebraContext::generator(int k) const
{
    if (mode_ != Mode::genus0) throw PreconditionError("x_k letters need a genus-0 context");
    if (k < 1 || k > rank_) throw PreconditionError("generator index " + std::to_string(k) + " out of range 1.." + std::to_string(rank_));
    return static_cast<Letter>(k - 1);
}

Letter AlgebraContext::a_letter(int i) const
{
    if (mode_ != Mode::symplectic) throw PreconditionError("A_i letters need a symplectic context");
    if (i < 1 || i > rank_) throw PreconditionError("symplectic index out of range");
    return static_cast<Letter>(2 * (i - 1));
}

Letter AlgebraContext::b_letter(int i) const { return static_cast<Letter>(a_letter(i) + 1); }

std::string AlgebraContext::describe() const
{
    return (mode_ == Mode::genus0 ? "genus0(n=" : "symplectic(g=") + std::to_string(rank_) + ", D=" + std::to_string(degree_) + ")";
}

void require_same_context(const AlgebraContext& a, const AlgebraContext& b, std::string_view op)
{
    if (!(a == b)) throw ContextMismatch(std::string(op) + ": context mismatch " + a.describe() + " vs " + b.describe());
}

}  // namespace gtlie
