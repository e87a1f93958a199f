#include "hcyl/nc_series.hpp"

#include "hcyl/error.hpp"

namespace hcyl {

namespace {

void check_compatible(const NcSeries& p, const NcSeries& q)
{
    if (p.rank() != q.rank())
        throw Error(ErrorCode::rank_mismatch,
                    "series ranks differ: " + std::to_string(p.rank()) + " vs " + std::to_string(q.rank()));
    if (p.cap() != q.cap())
        throw Error(ErrorCode::cap_mismatch,
                    "series caps differ: " + std::to_string(p.cap()) + " vs " + std::to_string(q.cap()));
}

void accumulate(NcSeries::Terms& terms, const Monomial& mono, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

} // namespace

NcSeries::NcSeries(int rank, int cap) : rank_(rank), cap_(cap)
{
    if (rank < 1)
        throw Error(ErrorCode::out_of_range, "series rank must be at least 1");
    if (cap < 0)
        throw Error(ErrorCode::out_of_range, "series cap must be non-negative");
}

NcSeries NcSeries::one(int rank, int cap)
{
    NcSeries s(rank, cap);
    s.add_term({}, 1);
    return s;
}

NcSeries NcSeries::variable(int rank, int cap, int gen)
{
    if (gen < 0 || gen >= rank)
        throw Error(ErrorCode::out_of_range, "variable index out of range");
    NcSeries s(rank, cap);
    s.add_term({static_cast<std::uint8_t>(gen)}, 1);
    return s;
}

Rational NcSeries::coefficient(const Monomial& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NcSeries::add_term(const Monomial& mono, const Rational& coeff)
{
    if (static_cast<int>(mono.size()) > cap_)
        return;
    for (auto g : mono)
        if (g >= rank_)
            throw Error(ErrorCode::out_of_range, "monomial index out of range");
    accumulate(terms_, mono, coeff);
}

NcSeries NcSeries::homogeneous_part(int degree) const
{
    NcSeries out(rank_, cap_);
    for (const auto& [mono, c] : terms_)
        if (static_cast<int>(mono.size()) == degree)
            out.terms_.emplace_hint(out.terms_.end(), mono, c);
    return out;
}

int NcSeries::lowest_positive_degree() const
{
    int best = -1;
    for (const auto& [mono, c] : terms_) {
        int d = static_cast<int>(mono.size());
        if (d >= 1 && (best < 0 || d < best))
            best = d;
    }
    return best;
}

NcSeries NcSeries::with_cap(int cap) const
{
    NcSeries out(rank_, cap);
    for (const auto& [mono, c] : terms_)
        if (static_cast<int>(mono.size()) <= cap)
            out.terms_.emplace_hint(out.terms_.end(), mono, c);
    return out;
}

std::string NcSeries::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool unit = mag == 1;
        if (!unit || mono.empty())
            out += hcyl::to_string(mag);
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (i > 0 || !unit)
                out += ' ';
            out += "t" + std::to_string(mono[i] + 1);
        }
    }
    return out;
}

NcSeries series_add(const NcSeries& p, const NcSeries& q)
{
    check_compatible(p, q);
    NcSeries out = p;
    for (const auto& [mono, c] : q.terms())
        out.add_term(mono, c);
    return out;
}

NcSeries series_sub(const NcSeries& p, const NcSeries& q)
{
    check_compatible(p, q);
    NcSeries out = p;
    for (const auto& [mono, c] : q.terms())
        out.add_term(mono, -c);
    return out;
}

NcSeries series_scale(const NcSeries& p, const Rational& c)
{
    NcSeries out(p.rank(), p.cap());
    if (c == 0)
        return out;
    for (const auto& [mono, a] : p.terms())
        out.add_term(mono, a * c);
    return out;
}

NcSeries series_mul(const NcSeries& p, const NcSeries& q)
{
    check_compatible(p, q);
    NcSeries::Terms acc;
    Monomial buf;
    for (const auto& [m1, c1] : p.terms()) {
        for (const auto& [m2, c2] : q.terms()) {
            if (static_cast<int>(m1.size() + m2.size()) > p.cap())
                continue;
            buf = m1;
            buf.insert(buf.end(), m2.begin(), m2.end());
            accumulate(acc, buf, c1 * c2);
        }
    }
    NcSeries out(p.rank(), p.cap());
    for (const auto& [mono, c] : acc)
        out.add_term(mono, c);
    return out;
}

NcSeries magnus_expand(const GroupWord& w, int cap)
{
    if (cap < 1)
        throw Error(ErrorCode::out_of_range, "Magnus cap must be at least 1");
    // Right multiplication by 1 + t_i, or by 1 - t_i + t_i^2 - ... for an
    // inverse letter, touches each existing term independently.
    NcSeries::Terms terms;
    terms.emplace(Monomial{}, 1);
    for (const Letter& l : w.letters()) {
        NcSeries::Terms next;
        auto g = static_cast<std::uint8_t>(l.gen);
        for (const auto& [mono, c] : terms) {
            accumulate(next, mono, c);
            Monomial m = mono;
            Rational coeff = c;
            while (static_cast<int>(m.size()) < cap) {
                m.push_back(g);
                if (l.sign < 0)
                    coeff = -coeff;
                accumulate(next, m, coeff);
                if (l.sign > 0)
                    break;
            }
        }
        terms = std::move(next);
    }
    NcSeries out(w.rank(), cap);
    for (const auto& [mono, c] : terms)
        out.add_term(mono, c);
    return out;
}

bool LcsWeight::at_least(int n, int cap) const noexcept
{
    switch (kind) {
    case Kind::finite: return value >= n;
    case Kind::exceeds_cap: return n <= cap + 1;
    case Kind::infinite: return true;
    }
    return false;
}

std::string LcsWeight::to_string() const
{
    switch (kind) {
    case Kind::finite: return std::to_string(value);
    case Kind::exceeds_cap: return "exceeds cap";
    case Kind::infinite: return "infinite";
    }
    return "?";
}

LcsWeight lcs_weight(const GroupWord& w, int cap)
{
    if (w.is_identity())
        return LcsWeight::infinite();
    int d = magnus_expand(w, cap).lowest_positive_degree();
    return d < 0 ? LcsWeight::exceeds_cap() : LcsWeight::finite(d);
}

LeadingTerm leading_term(const GroupWord& w, int cap)
{
    if (w.is_identity())
        throw Error(ErrorCode::infinite_weight, "the identity word has no leading term");
    NcSeries s = magnus_expand(w, cap);
    int d = s.lowest_positive_degree();
    if (d < 0)
        throw Error(ErrorCode::exceeds_cap, "weight of '" + w.to_string() + "' exceeds cap " + std::to_string(cap));
    return {d, s.homogeneous_part(d)};
}

} // namespace hcyl
