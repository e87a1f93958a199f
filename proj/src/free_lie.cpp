#include "hcyl/free_lie.hpp"

#include "hcyl/error.hpp"

#include <cctype>
#include <charconv>
#include <mutex>

namespace hcyl {

namespace {

using Terms = NcSeries::Terms;

void accumulate(Terms& terms, const Word& w, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

Terms mul_terms(const Terms& a, const Terms& b)
{
    Terms out;
    Word buf;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            buf = wa;
            buf.insert(buf.end(), wb.begin(), wb.end());
            accumulate(out, buf, ca * cb);
        }
    return out;
}

Terms commutator_terms(const Terms& a, const Terms& b)
{
    Terms out = mul_terms(a, b);
    for (const auto& [w, c] : mul_terms(b, a))
        accumulate(out, w, -c);
    return out;
}

NcSeries as_series(int rank, int degree, const Terms& terms)
{
    NcSeries s(rank, degree);
    for (const auto& [w, c] : terms)
        s.add_term(w, c);
    return s;
}

void check_same(const LieElement& a, const LieElement& b)
{
    if (a.rank() != b.rank())
        throw Error(ErrorCode::rank_mismatch, "Lie element ranks differ");
    if (a.degree() != b.degree())
        throw Error(ErrorCode::weight_mismatch, "Lie element degrees differ: " + std::to_string(a.degree()) +
                                                    " vs " + std::to_string(b.degree()));
}

// Right-normed bracket [w_1,[w_2,...,w_n]] in the tensor algebra.
Terms right_normed(const Word& w, std::size_t from = 0)
{
    Terms out;
    if (from + 1 == w.size()) {
        out.emplace(Word{w[from]}, 1);
        return out;
    }
    Terms head;
    head.emplace(Word{w[from]}, 1);
    return commutator_terms(head, right_normed(w, from + 1));
}

} // namespace

bool is_lyndon(const Word& w)
{
    const std::size_t n = w.size();
    if (n == 0)
        return false;
    for (std::size_t r = 1; r < n; ++r) {
        // compare w with its rotation starting at r
        for (std::size_t i = 0; i < n; ++i) {
            auto a = w[i];
            auto b = w[(r + i) % n];
            if (a < b)
                break;
            if (a > b)
                return false;
            if (i + 1 == n)
                return false; // periodic
        }
    }
    return true;
}

std::vector<Word> lyndon_words(int m, int n)
{
    if (m < 1 || n < 1)
        throw Error(ErrorCode::out_of_range, "lyndon_words needs m >= 1 and n >= 1");
    std::vector<Word> out;
    Word w{0};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == n)
            out.push_back(w);
        std::size_t period = w.size();
        while (static_cast<int>(w.size()) < n)
            w.push_back(w[w.size() - period]);
        while (!w.empty() && w.back() == m - 1)
            w.pop_back();
        if (!w.empty())
            ++w.back();
    }
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& w)
{
    if (w.size() < 2)
        throw Error(ErrorCode::malformed, "standard factorization needs a word of length >= 2");
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word v(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (is_lyndon(v))
            return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), std::move(v)};
    }
    // unreachable: the last letter is always Lyndon
    return {Word(w.begin(), w.end() - 1), Word{w.back()}};
}

std::string bracket_string(const Word& w)
{
    if (w.size() == 1)
        return "g" + std::to_string(w[0] + 1);
    auto [u, v] = standard_factorization(w);
    return "[" + bracket_string(u) + "," + bracket_string(v) + "]";
}

std::int64_t dim_lie(int m, int n)
{
    if (m < 1 || n < 1)
        throw Error(ErrorCode::out_of_range, "dim_lie needs m >= 1 and n >= 1");
    auto mobius = [](int d) {
        int result = 1;
        for (int p = 2; p * p <= d; ++p) {
            if (d % p == 0) {
                d /= p;
                if (d % p == 0)
                    return 0;
                result = -result;
            }
        }
        if (d > 1)
            result = -result;
        return result;
    };
    std::int64_t sum = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        std::int64_t p = 1;
        for (int i = 0; i < n / d; ++i)
            p *= m;
        sum += mobius(d) * p;
    }
    return sum / n;
}

LieElement::LieElement(int rank, int degree) : rank_(rank), degree_(degree)
{
    if (rank < 1)
        throw Error(ErrorCode::out_of_range, "Lie element rank must be at least 1");
    if (degree < 1)
        throw Error(ErrorCode::out_of_range, "Lie element degree must be at least 1");
}

LieElement LieElement::basis(int rank, const Word& lyndon)
{
    LieElement e(rank, static_cast<int>(lyndon.size()));
    e.add_term(lyndon, 1);
    return e;
}

LieElement LieElement::generator(int rank, int gen)
{
    return basis(rank, Word{static_cast<std::uint8_t>(gen)});
}

Rational LieElement::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add_term(const Word& lyndon, const Rational& c)
{
    if (static_cast<int>(lyndon.size()) != degree_)
        throw Error(ErrorCode::weight_mismatch, "basis word length differs from element degree");
    for (auto g : lyndon)
        if (g >= rank_)
            throw Error(ErrorCode::out_of_range, "basis word letter out of range");
    if (!is_lyndon(lyndon))
        throw Error(ErrorCode::malformed, "basis key is not a Lyndon word");
    accumulate(terms_, lyndon, c);
}

LieElement& LieElement::operator+=(const LieElement& other)
{
    check_same(*this, other);
    for (const auto& [w, c] : other.terms_)
        accumulate(terms_, w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& other)
{
    check_same(*this, other);
    for (const auto& [w, c] : other.terms_)
        accumulate(terms_, w, -c);
    return *this;
}

std::string LieElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1)
            out += hcyl::to_string(mag) + "*";
        out += bracket_string(w);
    }
    return out;
}

LieElement operator+(LieElement a, const LieElement& b)
{
    a += b;
    return a;
}

LieElement operator-(LieElement a, const LieElement& b)
{
    a -= b;
    return a;
}

LieElement operator*(const Rational& c, const LieElement& a)
{
    LieElement out(a.rank(), a.degree());
    if (c == 0)
        return out;
    for (const auto& [w, x] : a.terms())
        out.add_term(w, c * x);
    return out;
}

const NcSeries::Terms& lyndon_tensor(const Word& lyndon)
{
    static std::mutex mutex;
    static std::map<Word, Terms> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(lyndon); it != cache.end())
            return it->second;
    }
    Terms t;
    if (lyndon.size() == 1) {
        t.emplace(lyndon, 1);
    } else {
        auto [u, v] = standard_factorization(lyndon);
        t = commutator_terms(lyndon_tensor(u), lyndon_tensor(v));
    }
    std::lock_guard lock(mutex);
    // std::map never invalidates references, so handing out the stored value is safe.
    return cache.try_emplace(lyndon, std::move(t)).first->second;
}

NcSeries to_tensor(const LieElement& u)
{
    Terms acc;
    for (const auto& [w, c] : u.terms())
        for (const auto& [mono, x] : lyndon_tensor(w))
            accumulate(acc, mono, c * x);
    return as_series(u.rank(), u.degree(), acc);
}

LieElement from_tensor(const NcSeries& s, int degree)
{
    LieElement out(s.rank(), degree);
    Terms rest;
    for (const auto& [mono, c] : s.terms()) {
        if (static_cast<int>(mono.size()) != degree)
            throw Error(ErrorCode::not_lie, "series is not homogeneous of degree " + std::to_string(degree));
        rest.emplace_hint(rest.end(), mono, c);
    }
    while (!rest.empty()) {
        auto [w, c] = *rest.begin();
        if (!is_lyndon(w))
            throw Error(ErrorCode::not_lie, "series is not a Lie polynomial (leading monomial is not Lyndon)");
        out.add_term(w, c);
        for (const auto& [mono, x] : lyndon_tensor(w))
            accumulate(rest, mono, -c * x);
    }
    return out;
}

NcSeries dynkin_projection(const NcSeries& s, int degree)
{
    if (degree < 1)
        throw Error(ErrorCode::out_of_range, "Dynkin projection needs degree >= 1");
    Terms acc;
    for (const auto& [mono, c] : s.terms()) {
        if (static_cast<int>(mono.size()) != degree)
            throw Error(ErrorCode::not_lie, "series is not homogeneous of degree " + std::to_string(degree));
        for (const auto& [w, x] : right_normed(mono))
            accumulate(acc, w, c * x / degree);
    }
    NcSeries out(s.rank(), s.cap());
    for (const auto& [w, c] : acc)
        out.add_term(w, c);
    return out;
}

LieElement lie_bracket(const LieElement& u, const LieElement& v)
{
    if (u.rank() != v.rank())
        throw Error(ErrorCode::rank_mismatch, "Lie element ranks differ");
    int degree = u.degree() + v.degree();
    const NcSeries su = to_tensor(u), sv = to_tensor(v);
    Terms tu(su.terms().begin(), su.terms().end());
    Terms tv(sv.terms().begin(), sv.terms().end());
    return from_tensor(as_series(u.rank(), degree, commutator_terms(tu, tv)), degree);
}

LieElement from_leading(const GroupWord& w, int cap)
{
    LeadingTerm lead = leading_term(w, cap);
    return from_tensor(lead.term.with_cap(lead.degree), lead.degree);
}

GroupWord lyndon_word_lift(int rank, const Word& lyndon)
{
    if (lyndon.size() == 1)
        return GroupWord::generator(rank, lyndon[0]);
    auto [u, v] = standard_factorization(lyndon);
    return commutator(lyndon_word_lift(rank, u), lyndon_word_lift(rank, v));
}

namespace {

class BracketParser {
public:
    BracketParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

    LieElement parse()
    {
        LieElement e = expr();
        skip();
        if (pos_ != text_.size())
            fail("trailing characters");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorCode::syntax, "position " + std::to_string(pos_) + ": " + msg);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c)
    {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    LieElement expr()
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            LieElement a = expr();
            expect(',');
            LieElement b = expr();
            expect(']');
            return lie_bracket(a, b);
        }
        GroupWord g = parse_word(gen_token(), rank_);
        if (g.length() != 1 || g.letters()[0].sign != 1)
            fail("expected a generator");
        return LieElement::generator(rank_, g.letters()[0].gen);
    }

    std::string_view gen_token()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a generator");
        return text_.substr(start, pos_ - start);
    }

    std::string_view text_;
    int rank_;
    std::size_t pos_ = 0;
};

} // namespace

LieElement parse_lie_bracket(std::string_view text, int rank)
{
    return BracketParser(text, rank).parse();
}

} // namespace hcyl
