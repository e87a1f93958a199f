#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcyl/error.hpp"
#include "hcyl/johnson.hpp"

#include <random>

using namespace hcyl;

namespace {

using Mat = std::vector<std::vector<long>>;

Mat identity(int n)
{
    Mat m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

Mat mul(const Mat& a, const Mat& b)
{
    const std::size_t n = a.size();
    Mat c(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

Mat transpose(const Mat& a)
{
    Mat t = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            t[i][j] = a[j][i];
    return t;
}

Mat symplectic_j(int genus)
{
    Mat j(static_cast<std::size_t>(2 * genus), std::vector<long>(static_cast<std::size_t>(2 * genus), 0));
    for (int i = 0; i < genus; ++i) {
        j[static_cast<std::size_t>(2 * i)][static_cast<std::size_t>(2 * i + 1)] = 1;
        j[static_cast<std::size_t>(2 * i + 1)][static_cast<std::size_t>(2 * i)] = -1;
    }
    return j;
}

// Linear endomorphism g_j -> prod_i g_i^{M_ij}.
FreeEndo linear_endo(const Mat& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<GroupWord> images;
    for (int j = 0; j < n; ++j) {
        GroupWord w(n);
        for (int i = 0; i < n; ++i)
            w = w * power(GroupWord::generator(n, i), m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        images.push_back(w);
    }
    return FreeEndo(n, images);
}

HTensorLie tensor(int rank, int degree, std::initializer_list<std::tuple<int, const char*, int>> terms)
{
    HTensorLie t(rank, degree);
    for (auto [h, br, c] : terms)
        t.add_tensor(h, parse_lie_bracket(br, rank), c);
    return t;
}

FreeEndo endo(int rank, std::initializer_list<const char*> words)
{
    std::vector<GroupWord> images;
    for (const char* w : words)
        images.push_back(parse_word(w, rank));
    return FreeEndo(rank, images);
}

} // namespace

TEST_CASE("endomorphism basics")
{
    const FreeEndo swap = endo(2, {"y1", "x1"});
    CHECK(compose(swap, swap) == FreeEndo::identity(2));
    CHECK(apply(swap, parse_word("[x1,y1]", 2)) == parse_word("[y1,x1]", 2));
    const FreeEndo t = endo(2, {"x1 y1", "y1"});
    CHECK(abelianization(t) == std::vector<std::vector<Integer>>{{1, 0}, {1, 1}});
    CHECK(determinant(abelianization(t)) == 1);
    CHECK(determinant(abelianization(swap)) == -1);
    CHECK(determinant({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}) == 18);
    CHECK(is_automorphism_mod(t, 5));
    CHECK_FALSE(is_automorphism_mod(endo(2, {"x1^2", "y1"}), 3));
}

TEST_CASE("A0 at level two matches the symplectic condition")
{
    std::mt19937_64 rng(17);
    const Mat j = symplectic_j(2);
    int symplectic = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Mat m = identity(4);
        const bool plain = rng() % 2;
        for (int step = 0; step < 3; ++step) {
            Mat e = identity(4);
            if (plain) {
                const int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
                if (a != b)
                    e[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<long>(rng() % 3) - 1;
            } else {
                // symplectic transvection u -> u + c (v . u) v, i.e. I + c v v^T J
                std::vector<long> v(4);
                for (long& x : v)
                    x = static_cast<long>(rng() % 3) - 1;
                const long c = rng() % 2 ? 1 : -1;
                for (std::size_t r = 0; r < 4; ++r)
                    for (std::size_t col = 0; col < 4; ++col) {
                        long vj = 0;
                        for (std::size_t k = 0; k < 4; ++k)
                            vj += v[k] * j[k][col];
                        e[r][col] += c * v[r] * vj;
                    }
            }
            m = mul(m, e);
        }
        const bool expected = mul(mul(transpose(m), j), m) == j;
        symplectic += expected;
        CHECK(is_A0(linear_endo(m), 2) == expected);
    }
    CHECK(symplectic > 20);
}

TEST_CASE("johnson map of simple automorphisms")
{
    CHECK(johnson_map(FreeEndo::identity(2), 1).is_zero());
    // x1 -> x1 y1 : defect y1 at x1
    const FreeEndo t = endo(2, {"x1 y1", "y1"});
    CHECK(johnson_map(t, 1) == tensor(2, 1, {{1, "g2", -1}}));
    // conjugation by x1 is inner: level-2 defects only
    const FreeEndo c = endo(2, {"x1", "x1 y1 x1^-1"});
    CHECK(is_A0(c, 2));
    CHECK_FALSE(is_A0(c, 3));
    CHECK(weight_level(c, 4) == 2);
    CHECK(weight_level(FreeEndo::identity(2), 4) == 4);
}

TEST_CASE("preconditions name the generator")
{
    try {
        johnson_map(endo(2, {"x1 y1", "y1"}), 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition);
        CHECK(std::string(e.what()).find("x1") != std::string::npos);
    }
}

TEST_CASE("lifts")
{
    const LieElement u = parse_lie_bracket("[g1,[g1,g2]]", 2) - parse_lie_bracket("[[g1,g2],g2]", 2);
    for (LiftStyle style : {LiftStyle::forward, LiftStyle::alternative}) {
        const GroupWord w = lift_lie(u, style);
        CHECK(from_leading(w, 4) == u);
    }
    CHECK(lift_lie(u, LiftStyle::forward) != lift_lie(u, LiftStyle::alternative));
    const LieElement g = LieElement::generator(2, 0);
    CHECK(lift_lie(g, LiftStyle::alternative) != lift_lie(g));
    CHECK(from_leading(lift_lie(g, LiftStyle::alternative), 3) == g);
    try {
        lift_lie(Rational(1, 2) * LieElement::basis(2, {0, 1}));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_integral);
    }
}

TEST_CASE("realization round trips")
{
    for (auto [m, n] : {std::pair{2, 3}, std::pair{4, 2}}) {
        for (const HTensorLie& theta : dn_basis(m, n).basis) {
            const FreeEndo h = realize(theta);
            CHECK(is_A0(h, n + 1));
            CHECK(johnson_map(h, n) == theta);
            CHECK(johnson_map(realize(theta, LiftStyle::alternative), n) == theta);
        }
    }
    // additivity: the map is a homomorphism on the kernel
    const auto& b = dn_basis(4, 2).basis;
    const FreeEndo h = compose(realize(b[0]), realize(b[1]));
    CHECK(johnson_map(h, 2) == b[0] + b[1]);
}

TEST_CASE("degree one: symmetric terms are not realizable by this construction")
{
    // x1 (x) y1 + y1 (x) x1 sends x1 to x1 x1^-1 = 1
    const HTensorLie theta = tensor(2, 1, {{0, "g2", 1}, {1, "g1", 1}});
    CHECK(dn_contains(theta));
    const FreeEndo h = realize(theta);
    CHECK(h.image(0).is_identity());
    CHECK_FALSE(is_automorphism_mod(h, 2));
    // antisymmetric-free terms do work
    const HTensorLie ok = tensor(2, 1, {{0, "g1", 1}});
    CHECK(dn_contains(ok));
    CHECK(johnson_map(realize(ok), 1) == ok);
}

TEST_CASE("kernel is required")
{
    const HTensorLie bad = tensor(2, 1, {{0, "g2", 1}});
    try {
        realize(bad);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_in_kernel);
    }
}
