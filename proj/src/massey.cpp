#include "hcyl/massey.hpp"

#include "hcyl/error.hpp"

namespace hcyl {

namespace {

int exact_weight(const GroupWord& w, int cap)
{
    const LcsWeight lw = lcs_weight(w, cap);
    if (lw.kind == LcsWeight::Kind::infinite)
        throw Error(ErrorCode::infinite_weight, "the identity word has no Massey class");
    if (!lw.is_finite())
        throw Error(ErrorCode::exceeds_cap, "weight of " + w.to_string() + " exceeds cap " + std::to_string(cap));
    return lw.value;
}

} // namespace

Integer massey_eval(const Monomial& index, const GroupWord& w, int cap)
{
    if (index.empty())
        throw Error(ErrorCode::out_of_range, "index sequence must be non-empty");
    for (auto i : index)
        if (i >= w.rank())
            throw Error(ErrorCode::out_of_range, "index " + std::to_string(i + 1) + " exceeds rank " +
                                                     std::to_string(w.rank()));
    const int n = exact_weight(w, cap);
    if (n != static_cast<int>(index.size()))
        throw Error(ErrorCode::weight_mismatch, "|I| = " + std::to_string(index.size()) + " but " + w.to_string() +
                                                    " has weight " + std::to_string(n));
    return magnus_expand(w, n).coefficient(index).get_num();
}

LieElement mu_hat(const GroupWord& w, int cap)
{
    const int n = exact_weight(w, cap), m = w.rank();
    NcSeries s(m, n);
    Monomial index(static_cast<std::size_t>(n), 0);
    while (true) {
        s.add_term(index, massey_eval(index, w, n));
        int i = n - 1;
        while (i >= 0 && index[static_cast<std::size_t>(i)] == m - 1)
            index[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++index[static_cast<std::size_t>(i)];
    }
    return from_tensor(s, n);
}

MuElement mu_element(const std::vector<std::pair<HVector, GroupWord>>& pairs, int rank, int cap)
{
    if (pairs.empty())
        return {HTensorLie(rank, 1), true};
    int n = -1;
    for (const auto& [u, w] : pairs) {
        if (u.rank != rank || w.rank() != rank)
            throw Error(ErrorCode::rank_mismatch, "pair rank differs from " + std::to_string(rank));
        const int k = exact_weight(w, cap);
        if (n >= 0 && k != n)
            throw Error(ErrorCode::weight_mismatch, "mixed weights " + std::to_string(n) + " and " + std::to_string(k));
        n = k;
    }
    HTensorLie out(rank, n);
    for (const auto& [u, w] : pairs)
        out.add_tensor(u, from_leading(w, cap));
    return {out, dn_contains(out)};
}

} // namespace hcyl
