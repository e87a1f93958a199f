#include "hcyl/dn_space.hpp"

#include "hcyl/error.hpp"

#include <mutex>

namespace hcyl {

HVector HVector::basis(int rank, int gen)
{
    if (gen < 0 || gen >= rank)
        throw Error(ErrorCode::out_of_range, "H basis index out of range");
    HVector v{rank, std::vector<Rational>(static_cast<std::size_t>(rank))};
    v.coords[static_cast<std::size_t>(gen)] = 1;
    return v;
}

bool HVector::is_zero() const
{
    for (const auto& c : coords)
        if (c != 0)
            return false;
    return true;
}

HTensorLie::HTensorLie(int rank, int lie_degree) : rank_(rank), degree_(lie_degree)
{
    if (rank < 1 || lie_degree < 1)
        throw Error(ErrorCode::out_of_range, "H (x) L_n needs rank >= 1 and n >= 1");
}

Rational HTensorLie::coefficient(int h, const Word& w) const
{
    auto it = terms_.find({h, w});
    return it == terms_.end() ? Rational(0) : it->second;
}

void HTensorLie::add_term(int h, const Word& lyndon, const Rational& c)
{
    if (h < 0 || h >= rank_)
        throw Error(ErrorCode::out_of_range, "H index out of range");
    if (static_cast<int>(lyndon.size()) != degree_ || !is_lyndon(lyndon))
        throw Error(ErrorCode::malformed, "L_n key must be a Lyndon word of length " + std::to_string(degree_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace({h, lyndon}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void HTensorLie::add_tensor(int h, const LieElement& u, const Rational& c)
{
    if (u.rank() != rank_)
        throw Error(ErrorCode::rank_mismatch, "Lie factor rank differs");
    if (u.degree() != degree_)
        throw Error(ErrorCode::weight_mismatch, "Lie factor has degree " + std::to_string(u.degree()) +
                                                    ", expected " + std::to_string(degree_));
    for (const auto& [w, x] : u.terms())
        add_term(h, w, c * x);
}

void HTensorLie::add_tensor(const HVector& h, const LieElement& u)
{
    if (h.rank != rank_ || static_cast<int>(h.coords.size()) != rank_)
        throw Error(ErrorCode::rank_mismatch, "H vector rank differs");
    for (int i = 0; i < rank_; ++i)
        if (h.coords[static_cast<std::size_t>(i)] != 0)
            add_tensor(i, u, h.coords[static_cast<std::size_t>(i)]);
}

HTensorLie& HTensorLie::operator+=(const HTensorLie& other)
{
    if (other.rank_ != rank_ || other.degree_ != degree_)
        throw Error(ErrorCode::weight_mismatch, "H (x) L_n elements of different shape");
    for (const auto& [key, c] : other.terms_)
        add_term(key.first, key.second, c);
    return *this;
}

HTensorLie& HTensorLie::operator-=(const HTensorLie& other)
{
    if (other.rank_ != rank_ || other.degree_ != degree_)
        throw Error(ErrorCode::weight_mismatch, "H (x) L_n elements of different shape");
    for (const auto& [key, c] : other.terms_)
        add_term(key.first, key.second, -c);
    return *this;
}

std::string HTensorLie::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1)
            out += hcyl::to_string(mag) + "*";
        out += "g" + std::to_string(key.first + 1) + "(x)" + bracket_string(key.second);
    }
    return out;
}

HTensorLie operator+(HTensorLie a, const HTensorLie& b)
{
    a += b;
    return a;
}

HTensorLie operator-(HTensorLie a, const HTensorLie& b)
{
    a -= b;
    return a;
}

HTensorLie operator*(const Rational& c, const HTensorLie& a)
{
    HTensorLie out(a.rank(), a.lie_degree());
    for (const auto& [key, x] : a.terms())
        out.add_term(key.first, key.second, c * x);
    return out;
}

LieElement bracket_contraction(const HTensorLie& theta)
{
    LieElement out(theta.rank(), theta.lie_degree() + 1);
    for (const auto& [key, c] : theta.terms()) {
        LieElement b = lie_bracket(LieElement::generator(theta.rank(), key.first), LieElement::basis(theta.rank(), key.second));
        out += c * b;
    }
    return out;
}

bool dn_contains(const HTensorLie& theta)
{
    return bracket_contraction(theta).is_zero();
}

HTensorCoordinates::HTensorCoordinates(int rank, int lie_degree)
    : rank_(rank), degree_(lie_degree), words_(lyndon_words(rank, lie_degree))
{
    for (int i = 0; i < static_cast<int>(words_.size()); ++i)
        index_.emplace(words_[static_cast<std::size_t>(i)], i);
}

int HTensorCoordinates::column(int h, const Word& w) const
{
    auto it = index_.find(w);
    if (it == index_.end() || h < 0 || h >= rank_)
        throw Error(ErrorCode::out_of_range, "no coordinate for this H (x) L_n key");
    return h * static_cast<int>(words_.size()) + it->second;
}

SparseVector HTensorCoordinates::to_vector(const HTensorLie& theta) const
{
    if (theta.rank() != rank_ || theta.lie_degree() != degree_)
        throw Error(ErrorCode::weight_mismatch, "element does not live in this H (x) L_n");
    SparseVector v;
    for (const auto& [key, c] : theta.terms())
        v.emplace(column(key.first, key.second), c);
    return v;
}

HTensorLie HTensorCoordinates::from_vector(const SparseVector& v) const
{
    HTensorLie out(rank_, degree_);
    const int n = static_cast<int>(words_.size());
    for (const auto& [col, c] : v)
        out.add_term(col / n, words_[static_cast<std::size_t>(col % n)], c);
    return out;
}

namespace {

DnBasis compute_dn_basis(int m, int n)
{
    HTensorCoordinates coords(m, n);
    std::vector<Word> target = lyndon_words(m, n + 1);
    std::map<Word, int> target_index;
    for (int i = 0; i < static_cast<int>(target.size()); ++i)
        target_index.emplace(target[static_cast<std::size_t>(i)], i);

    std::vector<SparseVector> columns(static_cast<std::size_t>(coords.size()));
    for (int h = 0; h < m; ++h) {
        for (const Word& w : lyndon_words(m, n)) {
            LieElement image = lie_bracket(LieElement::generator(m, h), LieElement::basis(m, w));
            SparseVector& col = columns[static_cast<std::size_t>(coords.column(h, w))];
            for (const auto& [tw, c] : image.terms())
                col.emplace(target_index.at(tw), c);
        }
    }
    DnBasis out{m, n, {}};
    for (const SparseVector& k : kernel_basis(columns))
        out.basis.push_back(coords.from_vector(k));
    return out;
}

} // namespace

const DnBasis& dn_basis(int m, int n)
{
    if (m < 2 || n < 1)
        throw Error(ErrorCode::out_of_range, "dn_basis needs m >= 2 and n >= 1");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, DnBasis> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({m, n}); it != cache.end())
            return it->second;
    }
    DnBasis b = compute_dn_basis(m, n);
    std::lock_guard lock(mutex);
    return cache.try_emplace({m, n}, std::move(b)).first->second;
}

} // namespace hcyl
