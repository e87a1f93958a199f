#include "hcyl/johnson.hpp"

#include "hcyl/error.hpp"

#include <algorithm>

namespace hcyl {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void require_even(const FreeEndo& h)
{
    if (h.rank() % 2)
        throw Error(ErrorCode::precondition, "rank " + std::to_string(h.rank()) + " is odd; a genus needs rank 2g");
}

GroupWord defect(const FreeEndo& h, int gen)
{
    return invert(GroupWord::generator(h.rank(), gen)) * h.image(gen);
}

GroupWord lift_word(int rank, const Word& lyndon, LiftStyle style)
{
    if (lyndon.size() == 1)
        return GroupWord::generator(rank, lyndon[0]);
    auto [u, v] = standard_factorization(lyndon);
    GroupWord a = lift_word(rank, u, style), b = lift_word(rank, v, style);
    if (style == LiftStyle::forward)
        return commutator(a, b);
    return invert(a) * invert(b) * a * b;
}

} // namespace

FreeEndo::FreeEndo(int rank, std::vector<GroupWord> images)
    : rank_(rank), images_(std::move(images))
{
    if (rank < 1)
        throw Error(ErrorCode::out_of_range, "rank must be at least 1");
    if (static_cast<int>(images_.size()) != rank)
        throw Error(ErrorCode::rank_mismatch, "expected " + std::to_string(rank) + " generator images, got " +
                                                  std::to_string(images_.size()));
    for (const GroupWord& w : images_)
        if (w.rank() != rank)
            throw Error(ErrorCode::rank_mismatch, "generator image " + w.to_string() + " has rank " +
                                                      std::to_string(w.rank()));
}

FreeEndo FreeEndo::identity(int rank)
{
    std::vector<GroupWord> images;
    for (int i = 0; i < rank; ++i)
        images.push_back(GroupWord::generator(rank, i));
    return FreeEndo(rank, std::move(images));
}

GroupWord apply(const FreeEndo& h, const GroupWord& w)
{
    if (w.rank() != h.rank())
        throw Error(ErrorCode::rank_mismatch, "word rank " + std::to_string(w.rank()) + " vs endomorphism rank " +
                                                  std::to_string(h.rank()));
    std::vector<Letter> out;
    for (const Letter& l : w.letters()) {
        const GroupWord& img = h.image(l.gen);
        if (l.sign > 0) {
            out.insert(out.end(), img.letters().begin(), img.letters().end());
        } else {
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
                out.push_back({it->gen, -it->sign});
        }
    }
    return GroupWord(h.rank(), std::move(out));
}

FreeEndo compose(const FreeEndo& h1, const FreeEndo& h2)
{
    if (h1.rank() != h2.rank())
        throw Error(ErrorCode::rank_mismatch, "endomorphism ranks differ");
    std::vector<GroupWord> images;
    for (const GroupWord& w : h2.images())
        images.push_back(apply(h1, w));
    return FreeEndo(h1.rank(), std::move(images));
}

std::vector<std::vector<Integer>> abelianization(const FreeEndo& h)
{
    std::vector<std::vector<Integer>> m(idx(h.rank()), std::vector<Integer>(idx(h.rank()), 0));
    for (int j = 0; j < h.rank(); ++j)
        for (const Letter& l : h.image(j).letters())
            m[idx(l.gen)][idx(j)] += l.sign;
    return m;
}

Integer determinant(std::vector<std::vector<Integer>> m)
{
    // Bareiss fraction-free elimination.
    const std::size_t n = m.size();
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n ? Integer(sign * m[n - 1][n - 1]) : Integer(1);
}

bool is_automorphism_mod(const FreeEndo& h, int n)
{
    if (n < 2)
        throw Error(ErrorCode::out_of_range, "level must be at least 2");
    return abs(determinant(abelianization(h))) == 1;
}

bool is_A0(const FreeEndo& h, int n)
{
    require_even(h);
    if (!is_automorphism_mod(h, n))
        return false;
    const GroupWord omega = surface_relator(h.rank() / 2);
    const int cap = n + 2;
    return lcs_weight(invert(omega) * apply(h, omega), cap).at_least(n + 1, cap);
}

HTensorLie johnson_map(const FreeEndo& h, int n)
{
    require_even(h);
    if (n < 1)
        throw Error(ErrorCode::out_of_range, "level must be at least 1");
    std::vector<LieElement> psi;
    for (int a = 0; a < h.rank(); ++a) {
        const GroupWord d = defect(h, a);
        const LcsWeight w = lcs_weight(d, n);
        if (!w.at_least(n, n))
            throw Error(ErrorCode::precondition,
                        "h is not the identity on F/F_" + std::to_string(n) + ": " + generator_name(h.rank(), a) +
                            "^-1 h(" + generator_name(h.rank(), a) + ") has weight " + w.to_string());
        psi.push_back(w.is_finite() && w.value == n ? from_leading(d, n) : LieElement(h.rank(), n));
    }
    if (!is_A0(h, n + 1))
        throw Error(ErrorCode::precondition, "h does not lie in A_0(F/F_" + std::to_string(n + 1) +
                                                 "): not unimodular on H_1 or omega not fixed modulo F_" +
                                                 std::to_string(n + 2));
    HTensorLie out(h.rank(), n);
    for (int i = 0; i < h.rank() / 2; ++i) {
        out.add_tensor(2 * i, psi[idx(2 * i + 1)]);
        out.add_tensor(2 * i + 1, psi[idx(2 * i)], -1);
    }
    return out;
}

GroupWord lift_lie(const LieElement& u, LiftStyle style)
{
    std::vector<GroupWord> parts;
    for (const auto& [w, c] : u.terms()) {
        if (!is_integer(c))
            throw Error(ErrorCode::not_integral, "coefficient " + to_string(c) + " of " + bracket_string(w) +
                                                     " is not an integer; no group word lifts it");
        parts.push_back(power(lift_word(u.rank(), w, style), c.get_num().get_si()));
    }
    if (style == LiftStyle::alternative)
        std::reverse(parts.begin(), parts.end());
    GroupWord out(u.rank());
    for (const GroupWord& p : parts)
        out = out * p;
    if (style == LiftStyle::alternative && !out.is_identity()) {
        // one weight deeper, so the class is unchanged; makes the lift differ
        // from the forward one even when both are products of generators
        for (int j = 0; j < u.rank(); ++j) {
            const GroupWord c = commutator(out, GroupWord::generator(u.rank(), j));
            if (!c.is_identity()) {
                out = out * c;
                break;
            }
        }
    }
    return out;
}

FreeEndo realize(const HTensorLie& theta, LiftStyle style)
{
    const int rank = theta.rank(), n = theta.lie_degree();
    if (rank % 2)
        throw Error(ErrorCode::precondition, "rank " + std::to_string(rank) + " is odd; a genus needs rank 2g");
    if (!dn_contains(theta))
        throw Error(ErrorCode::not_in_kernel, "theta is not in D_" + std::to_string(n) + "(H): its bracket is " +
                                                  bracket_contraction(theta).to_string());
    std::vector<LieElement> coeff(idx(rank), LieElement(rank, n));
    for (const auto& [key, c] : theta.terms()) {
        const auto& [h, w] = key;
        coeff[idx(h)].add_term(w, c);
    }
    std::vector<GroupWord> images;
    for (int i = 0; i < rank / 2; ++i) {
        // x_i (x) a_i - y_i (x) b_i: a_i is the x_i-coefficient, b_i minus the y_i-coefficient
        const LieElement& a = coeff[idx(2 * i)];
        const LieElement b = Rational(-1) * coeff[idx(2 * i + 1)];
        images.push_back(GroupWord::generator(rank, 2 * i) * lift_lie(b, style));
        images.push_back(GroupWord::generator(rank, 2 * i + 1) * lift_lie(a, style));
    }
    return FreeEndo(rank, std::move(images));
}

int weight_level(const FreeEndo& h, int cap)
{
    if (cap < 1)
        throw Error(ErrorCode::out_of_range, "cap must be at least 1");
    if (!is_automorphism_mod(h, 2))
        throw Error(ErrorCode::precondition, "weight_level needs an automorphism of H_1");
    int level = cap;
    for (int a = 0; a < h.rank(); ++a) {
        const LcsWeight w = lcs_weight(defect(h, a), cap);
        if (w.is_finite())
            level = std::min(level, w.value);
    }
    return level;
}

} // namespace hcyl
