#include "hcyl/free_group.hpp"

#include "hcyl/error.hpp"

#include <cctype>
#include <charconv>

namespace hcyl {

namespace {

void check_rank(int rank)
{
    if (rank < 1)
        throw Error(ErrorCode::out_of_range, "rank must be at least 1, got " + std::to_string(rank));
}

void check_same_rank(const GroupWord& u, const GroupWord& v)
{
    if (u.rank() != v.rank())
        throw Error(ErrorCode::rank_mismatch, "word ranks differ: " + std::to_string(u.rank()) + " vs " +
                                                  std::to_string(v.rank()));
}

// Appends `l` to a reduced word, cancelling against the last letter.
void push_reduced(std::vector<Letter>& out, Letter l)
{
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
        out.pop_back();
    else
        out.push_back(l);
}

class Parser {
public:
    Parser(std::string_view text, int rank) : text_(text), rank_(rank) {}

    GroupWord parse()
    {
        GroupWord w = word();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorCode::syntax, "position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c)
    {
        if (!at(c))
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    GroupWord word()
    {
        GroupWord w(rank_);
        while (true) {
            skip_space();
            if (pos_ == text_.size())
                return w;
            char c = text_[pos_];
            if (c == ',' || c == ']' || c == ')')
                return w;
            w = multiply(w, term());
        }
    }

    GroupWord term()
    {
        GroupWord t(rank_);
        if (at('[')) {
            ++pos_;
            GroupWord u = word();
            expect(',');
            GroupWord v = word();
            expect(']');
            t = commutator(u, v);
        } else if (at('(')) {
            ++pos_;
            t = word();
            expect(')');
        } else {
            t = generator();
        }
        if (at('^')) {
            ++pos_;
            t = power(t, integer());
        }
        return t;
    }

    long integer()
    {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string_view digits = text_.substr(start, pos_ - start);
        if (!digits.empty() && digits[0] == '+')
            digits.remove_prefix(1);
        long value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            pos_ = start;
            fail("expected integer exponent");
        }
        return value;
    }

    GroupWord generator()
    {
        skip_space();
        std::size_t start = pos_;
        if (pos_ == text_.size())
            fail("expected generator");
        char kind = text_[pos_];
        if (kind != 'x' && kind != 'y' && kind != 'g')
            fail("expected generator name x<i>, y<i> or g<i>");
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        int index = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + dstart, text_.data() + pos_, index);
        if (ec != std::errc{} || dstart == pos_ || index < 1) {
            pos_ = start;
            fail("malformed generator name");
        }
        int gen = kind == 'g' ? index - 1 : (kind == 'x' ? 2 * index - 2 : 2 * index - 1);
        if (gen >= rank_)
            throw Error(ErrorCode::out_of_range, "position " + std::to_string(start) + ": generator " +
                                                     std::string(text_.substr(start, pos_ - start)) +
                                                     " out of range for rank " + std::to_string(rank_));
        return GroupWord::generator(rank_, gen);
    }

    std::string_view text_;
    int rank_;
    std::size_t pos_ = 0;
};

} // namespace

GroupWord::GroupWord(int rank) : rank_(rank)
{
    check_rank(rank);
}

GroupWord::GroupWord(int rank, std::vector<Letter> letters) : rank_(rank)
{
    check_rank(rank);
    letters_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.gen < 0 || l.gen >= rank)
            throw Error(ErrorCode::out_of_range,
                        "generator index " + std::to_string(l.gen + 1) + " out of range 1.." + std::to_string(rank));
        if (l.sign != 1 && l.sign != -1)
            throw Error(ErrorCode::malformed, "letter exponent must be +1 or -1");
        push_reduced(letters_, l);
    }
}

GroupWord GroupWord::generator(int rank, int gen, int sign)
{
    return GroupWord(rank, {Letter{gen, sign}});
}

std::string generator_name(int rank, int gen, Naming naming)
{
    bool symplectic = naming == Naming::symplectic || (naming == Naming::automatic && rank % 2 == 0);
    if (!symplectic)
        return "g" + std::to_string(gen + 1);
    return (gen % 2 == 0 ? "x" : "y") + std::to_string(gen / 2 + 1);
}

std::string GroupWord::to_string(Naming naming) const
{
    if (letters_.empty())
        return "1";
    std::string out;
    for (const Letter& l : letters_) {
        if (!out.empty())
            out += ' ';
        out += generator_name(rank_, l.gen, naming);
        if (l.sign < 0)
            out += "^-1";
    }
    return out;
}

GroupWord parse_word(std::string_view text, int rank)
{
    check_rank(rank);
    // "1" denotes the identity, matching to_string.
    std::string_view trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.remove_prefix(1);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.remove_suffix(1);
    if (trimmed == "1")
        return GroupWord(rank);
    return Parser(text, rank).parse();
}

GroupWord multiply(const GroupWord& u, const GroupWord& v)
{
    check_same_rank(u, v);
    std::vector<Letter> out = u.letters();
    for (const Letter& l : v.letters())
        push_reduced(out, l);
    return GroupWord(u.rank(), std::move(out));
}

GroupWord invert(const GroupWord& u)
{
    std::vector<Letter> out;
    out.reserve(u.length());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
        out.push_back(Letter{it->gen, -it->sign});
    return GroupWord(u.rank(), std::move(out));
}

GroupWord power(const GroupWord& u, long exponent)
{
    GroupWord base = exponent < 0 ? invert(u) : u;
    GroupWord out(u.rank());
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
        out = multiply(out, base);
    return out;
}

GroupWord commutator(const GroupWord& u, const GroupWord& v)
{
    check_same_rank(u, v);
    return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

// Genus 0 has no generators; the empty relator is returned in rank 1 since
// words need a positive rank.
GroupWord surface_relator(int genus)
{
    if (genus < 0)
        throw Error(ErrorCode::out_of_range, "genus must be non-negative");
    int rank = genus == 0 ? 1 : 2 * genus;
    GroupWord out(rank);
    for (int i = 0; i < genus; ++i)
        out = multiply(out, commutator(GroupWord::generator(rank, 2 * i), GroupWord::generator(rank, 2 * i + 1)));
    return out;
}

} // namespace hcyl
