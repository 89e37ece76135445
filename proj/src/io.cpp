#include "gtlie/io.hpp"

#include <cctype>
#include <sstream>

namespace gtlie {

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_commas(std::string_view text)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(trim(cur));
    if (parts.size() == 1 && parts[0].empty()) parts.clear();
    return parts;
}

template <std::size_t K>
json tuple_to_json(const AlgebraContext& ctx, const WordTuple<K>& t)
{
    json arr = json::array();
    for (const auto& w : t) arr.push_back(word_to_json(ctx, w));
    return arr;
}

template <typename S, typename F>
json series_json(const S& a, F&& key_fields)
{
    json j = context_to_json(a.context());
    json terms = json::array();
    for (const auto& [k, c] : a.terms()) {
        json t = json::object();
        key_fields(t, k);
        t["coeff"] = to_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

std::string word_text(const AlgebraContext& ctx, const Word& w)
{
    if (w.empty()) return "1";
    std::string s;
    for (int i = 0; i < w.size(); ++i) {
        if (i) s += '*';
        s += ctx.letter_name(w[i]);
    }
    return s;
}

// Joins "c key" terms as "a + b - c", dropping unit coefficients.
template <typename S, typename F>
std::string series_text(const S& a, F&& key_text)
{
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : a.terms()) {
        Rational mag = abs(c);
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        const std::string body = key_text(k);
        if (body == "1") {
            out += to_string(mag);
        } else if (mag == 1) {
            out += body;
        } else {
            out += to_string(mag) + " " + body;
        }
    }
    return out;
}

class SeriesParser {
public:
    SeriesParser(const AlgebraContext& ctx, std::string_view text) : ctx_(ctx), s_(text) {}

    TensorSeries parse()
    {
        TensorSeries r(ctx_);
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        bool first = true;
        while (true) {
            skip();
            if (pos_ == s_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [word, coeff] = term();
            r.add_term(word, sign * coeff);
        }
        return r;
    }

private:
    std::pair<Word, Rational> term()
    {
        Rational coeff(1);
        bool any = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            any = true;
            skip();
            if (pos_ < s_.size() && peek() == '*') {
                ++pos_;
                skip();
            }
        }
        Word w;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            w.push_back(ctx_.parse_letter(s_.substr(start, pos_ - start)));
            any = true;
            skip();
            if (pos_ < s_.size() && peek() == '*') {
                ++pos_;
                skip();
                if (pos_ == s_.size() || !std::isalpha(static_cast<unsigned char>(peek()))) fail("dangling '*'");
            }
        }
        if (!any) fail("expected a term");
        return {w, coeff};
    }

    Rational number()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ < s_.size() && peek() == '/') {
            ++pos_;
            if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("bad fraction");
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        return parse_rational(s_.substr(start, pos_ - start));
    }

    char peek() const { return s_[pos_]; }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw PreconditionError("cannot parse series '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    const AlgebraContext& ctx_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

json context_to_json(const AlgebraContext& ctx)
{
    json j = json::object();
    if (ctx.is_genus0()) {
        j["mode"] = "genus0";
        j["n"] = ctx.rank();
    } else {
        j["mode"] = "symplectic";
        j["g"] = ctx.rank();
    }
    j["degree"] = ctx.degree();
    return j;
}

AlgebraContext context_from_json(const json& j)
{
    try {
        const std::string mode = j.at("mode").get<std::string>();
        const int degree = j.at("degree").get<int>();
        if (mode == "genus0") return AlgebraContext::genus0(j.at("n").get<int>(), degree);
        if (mode == "symplectic") return AlgebraContext::symplectic(j.at("g").get<int>(), degree);
        throw PreconditionError("unknown mode '" + mode + "'");
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("malformed context: ") + e.what());
    }
}

json word_to_json(const AlgebraContext& ctx, const Word& w)
{
    json arr = json::array();
    for (Letter a : w) {
        if (ctx.is_genus0())
            arr.push_back(int(a) + 1);
        else
            arr.push_back(ctx.letter_name(a));
    }
    return arr;
}

Word word_from_json(const AlgebraContext& ctx, const json& j)
{
    if (!j.is_array()) throw PreconditionError("word must be a JSON array");
    Word w;
    for (const auto& e : j) {
        if (e.is_number_integer())
            w.push_back(ctx.parse_letter(std::to_string(e.get<int>())));
        else if (e.is_string())
            w.push_back(ctx.parse_letter(e.get<std::string>()));
        else
            throw PreconditionError("word letters must be integers or strings");
    }
    return w;
}

json to_json(const TensorSeries& a)
{
    return series_json(a, [&](json& t, const Word& w) { t["word"] = word_to_json(a.context(), w); });
}

json to_json(const CyclicSeries& a)
{
    return series_json(a, [&](json& t, const Word& w) { t["cyclic_word"] = word_to_json(a.context(), w); });
}

json to_json(const MultiSeries<2>& a)
{
    return series_json(a, [&](json& t, const WordTuple<2>& k) { t["words"] = tuple_to_json(a.context(), k); });
}

json to_json(const MultiSeries<3>& a)
{
    return series_json(a, [&](json& t, const WordTuple<3>& k) { t["words"] = tuple_to_json(a.context(), k); });
}

json to_json(const CoactionSeries& a)
{
    // Second slot is a necklace.
    return series_json(a, [&](json& t, const WordTuple<2>& k) {
        t["words"] = json::array({word_to_json(a.context(), k[0])});
        t["cyclic_word"] = word_to_json(a.context(), k[1]);
    });
}

json to_json(const CyclicBiSeries& a)
{
    return series_json(a, [&](json& t, const WordTuple<2>& k) { t["cyclic_words"] = tuple_to_json(a.context(), k); });
}

json to_json(const CyclicTriSeries& a)
{
    return series_json(a, [&](json& t, const WordTuple<3>& k) { t["cyclic_words"] = tuple_to_json(a.context(), k); });
}

TensorSeries tensor_series_from_json(const json& j)
{
    const AlgebraContext ctx = context_from_json(j);
    TensorSeries r(ctx);
    if (!j.contains("terms") || !j["terms"].is_array()) throw PreconditionError("series JSON needs a \"terms\" array");
    for (const auto& t : j["terms"]) {
        if (!t.contains("word") || !t.contains("coeff")) throw PreconditionError("term needs \"word\" and \"coeff\"");
        r.add_term(word_from_json(ctx, t["word"]), parse_rational(t["coeff"].get<std::string>()));
    }
    return r;
}

CyclicSeries cyclic_series_from_json(const json& j)
{
    const AlgebraContext ctx = context_from_json(j);
    CyclicSeries r(ctx);
    if (!j.contains("terms") || !j["terms"].is_array()) throw PreconditionError("series JSON needs a \"terms\" array");
    for (const auto& t : j["terms"]) {
        if (!t.contains("cyclic_word") || !t.contains("coeff")) throw PreconditionError("term needs \"cyclic_word\" and \"coeff\"");
        r.add_term(word_from_json(ctx, t["cyclic_word"]), parse_rational(t["coeff"].get<std::string>()));
    }
    return r;
}

std::string to_text(const TensorSeries& a)
{
    return series_text(a, [&](const Word& w) { return word_text(a.context(), w); });
}

std::string to_text(const CyclicSeries& a)
{
    return series_text(a, [&](const Word& w) { return "|" + word_text(a.context(), w) + "|"; });
}

std::string to_text(const MultiSeries<2>& a)
{
    return series_text(a, [&](const WordTuple<2>& k) { return "[" + word_text(a.context(), k[0]) + " (x) " + word_text(a.context(), k[1]) + "]"; });
}

std::string to_text(const CoactionSeries& a)
{
    return series_text(a, [&](const WordTuple<2>& k) { return "[" + word_text(a.context(), k[0]) + " (x) |" + word_text(a.context(), k[1]) + "|]"; });
}

std::string to_text(const CyclicBiSeries& a)
{
    return series_text(a, [&](const WordTuple<2>& k) { return "|" + word_text(a.context(), k[0]) + "| (x) |" + word_text(a.context(), k[1]) + "|"; });
}

std::string to_text(const CyclicTriSeries& a)
{
    return series_text(a, [&](const WordTuple<3>& k) {
        return "|" + word_text(a.context(), k[0]) + "| (x) |" + word_text(a.context(), k[1]) + "| (x) |" + word_text(a.context(), k[2]) + "|";
    });
}

TensorSeries parse_series(const AlgebraContext& ctx, std::string_view text) { return SeriesParser(ctx, text).parse(); }

Word parse_word(const AlgebraContext& ctx, std::string_view text)
{
    Word w;
    for (const auto& part : split_commas(text)) {
        if (part.empty()) throw PreconditionError("empty letter in word '" + std::string(text) + "'");
        w.push_back(ctx.parse_letter(part));
    }
    return w;
}

GroupWord parse_group_word(std::string_view text)
{
    std::vector<GroupWord::Syllable> syl;
    for (const auto& part : split_commas(text)) {
        std::string gen = part, ex = "1";
        if (auto p = part.find('^'); p != std::string::npos) {
            gen = trim(part.substr(0, p));
            ex = trim(part.substr(p + 1));
        }
        if (!gen.empty() && (gen[0] == 'g' || gen[0] == 'x')) gen = gen.substr(1);
        try {
            std::size_t used = 0;
            const int k = std::stoi(gen, &used);
            if (used != gen.size() || k < 1) throw std::invalid_argument("index");
            std::size_t used2 = 0;
            const int e = std::stoi(ex, &used2);
            if (used2 != ex.size()) throw std::invalid_argument("exponent");
            syl.push_back({k, e});
        } catch (const std::logic_error&) {
            throw PreconditionError("bad group-word syllable '" + part + "'");
        }
    }
    return GroupWord(syl);
}

}  // namespace gtlie
