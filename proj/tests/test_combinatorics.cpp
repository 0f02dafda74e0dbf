#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "szego/combinatorics.hpp"
#include "szego/errors.hpp"

using namespace szego;
using namespace szego::comb;

namespace {

RationalVector vec(std::initializer_list<int> xs) {
    RationalVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

// Test-side enumeration of sum_tau f(M_m, M_{m-1}) kept independent of the
// library's permutation loop (recursive index placement instead of
// next_permutation).
template <typename F>
void for_each_permutation(int m, F&& fn) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == m) {
            fn(perm);
            return;
        }
        for (int v = 1; v <= m; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            perm[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
}

Rational ghd_lhs_oracle(const RationalVector& a, int n) {
    const int m = static_cast<int>(a.size());
    Rational sum(0);
    for_each_permutation(m, [&](const std::vector<int>& perm) {
        Rational pfx(0), mm(0), mprev(0);
        for (int i = 0; i < m; ++i) {
            pfx += a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)];
            if (pfx > mm) mm = pfx;
            if (i < m - 1 && pfx > mprev) mprev = pfx;
        }
        sum += pow_nat(mm, static_cast<unsigned>(n)) - pow_nat(mprev, static_cast<unsigned>(n));
    });
    return sum;
}

RationalVector random_vector(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 3);
    RationalVector a;
    for (int i = 0; i < m; ++i) a.emplace_back(num(rng), den(rng));
    return a;
}

}  // namespace

TEST_CASE("prefix_max_stat definition cases") {
    CHECK(prefix_max_stat(vec({1, -2, 3}), 3) == Rational(2));
    CHECK(prefix_max_stat(vec({-1, -5}), 2) == Rational(0));
    CHECK(prefix_max_stat(vec({7, -3, 9}), 0) == Rational(0));
    CHECK_THROWS_AS(prefix_max_stat(vec({1}), 2), std::out_of_range);
    CHECK_THROWS_AS(prefix_max_stat(vec({1}), -1), std::out_of_range);
}

TEST_CASE("prefix_max_stat scales under positive rational dilation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 6);
        const auto a = random_vector(rng, m);
        const Rational c(1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 3));
        RationalVector ca;
        for (const auto& x : a) ca.push_back(c * x);
        CHECK(prefix_max_stat(ca, m) == c * prefix_max_stat(a, m));
    }
}

TEST_CASE("hd_sides small cases") {
    auto [l1, r1] = hd_sides(vec({1, -1}));
    CHECK(l1 == Rational(0));
    CHECK(r1 == Rational(0));

    auto [l2, r2] = hd_sides(vec({2, -1}));
    CHECK(l2 == Rational(1));
    CHECK(r2 == Rational(1));

    // Single entry: 0! = 1 and M_1 - M_0 = (c)_+.
    auto [l3, r3] = hd_sides({Rational(-3, 2)});
    CHECK(l3 == Rational(0));
    CHECK(r3 == Rational(0));
    auto [l4, r4] = hd_sides({Rational(5, 3)});
    CHECK(l4 == Rational(5, 3));
    CHECK(r4 == Rational(5, 3));
}

TEST_CASE("hd cap is enforced") {
    RationalVector big(10, Rational(1));
    CHECK_THROWS_AS(hd_sides(big), CapError);
    CHECK_THROWS_AS(ghd_lhs(big, 2), CapError);
    CHECK_THROWS_AS(ghd_rhs(big, 2), CapError);
    CHECK_THROWS_AS(bst_multisets(big), CapError);
}

TEST_CASE("ghd_lhs frozen examples") {
    CHECK(ghd_lhs(vec({2, -1}), 2) == Rational(1));
    CHECK(ghd_lhs(vec({1, 1, -1}), 2) == Rational(2));
    CHECK(ghd_lhs(vec({-3, -4}), 1) == Rational(0));
    CHECK(ghd_lhs(vec({-3, -4}), 3) == Rational(0));
    // Against the test-side enumerator.
    CHECK(ghd_lhs(vec({2, -1, 3, -2}), 3) == ghd_lhs_oracle(vec({2, -1, 3, -2}), 3));
}

TEST_CASE("ghd_rhs frozen examples") {
    CHECK(ghd_rhs(vec({2, -1}), 2) == Rational(1));
    CHECK(ghd_rhs(vec({1, 1, -1}), 2) == Rational(2));
    CHECK(ghd_rhs({Rational(7, 2)}, 1) == Rational(7, 2));
    CHECK(ghd_rhs({Rational(-7, 2)}, 1) == Rational(0));
}

TEST_CASE("ghd identity holds exactly on random rational vectors") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 6);
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto a = random_vector(rng, m);
        const Rational lhs = ghd_lhs(a, n);
        CHECK(lhs == ghd_rhs(a, n));
        CHECK(lhs == ghd_lhs_oracle(a, n));

        // Both sides are symmetrized: invariant under input shuffles.
        auto b = a;
        std::shuffle(b.begin(), b.end(), rng);
        CHECK(ghd_lhs(b, n) == lhs);
    }
}

TEST_CASE("ghd with n = 1 degenerates to Hunt-Dyson") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 7);
        const auto a = random_vector(rng, m);
        auto [lhs, rhs] = hd_sides(a);
        CHECK(lhs == rhs);
        CHECK(ghd_lhs(a, 1) == lhs);
        CHECK(ghd_rhs(a, 1) == lhs);
    }
}

TEST_CASE("cycle_decompose canonical form") {
    auto id3 = cycle_decompose(Permutation::identity(3));
    REQUIRE(id3.size() == 3);
    CHECK(id3[0] == std::vector<int>{1});
    CHECK(id3[1] == std::vector<int>{2});
    CHECK(id3[2] == std::vector<int>{3});

    auto c3 = cycle_decompose(Permutation({2, 3, 1}));
    REQUIRE(c3.size() == 1);
    CHECK(c3[0] == std::vector<int>{1, 2, 3});

    auto swap12 = cycle_decompose(Permutation({2, 1, 3}));
    REQUIRE(swap12.size() == 2);
    CHECK(swap12[0] == std::vector<int>{1, 2});
    CHECK(swap12[1] == std::vector<int>{3});

    CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("compositions are lexicographic and complete") {
    auto c = compositions(5, 2);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == Composition{1, 4});
    CHECK(c[3] == Composition{4, 1});
    CHECK(compositions(3, 3).size() == 1);
    CHECK(compositions(3, 4).empty());
    // Total count over all part numbers is 2^(m-1).
    int total = 0;
    for (int j = 1; j <= 6; ++j) total += static_cast<int>(compositions(6, j).size());
    CHECK(total == 32);
}

TEST_CASE("bst_multisets frozen example and structure") {
    auto [left, right] = bst_multisets(vec({2, -1, -1}));
    CHECK(left == right);
    RationalMultiset expect;
    expect.insert(Rational(0), 2);
    expect.insert(Rational(1), 2);
    expect.insert(Rational(2), 2);
    CHECK(left == expect);
    CHECK(left.total() == 6);
    CHECK(left.str() == "{0 x 2, 1 x 2, 2 x 2}");

    auto [l2, r2] = bst_multisets(vec({-1, -2}));
    RationalMultiset zz;
    zz.insert(Rational(0), 2);
    CHECK(l2 == zz);
    CHECK(r2 == zz);
}

TEST_CASE("bst multiset equality on random rational vectors") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 7);
        const auto a = random_vector(rng, m);
        auto [left, right] = bst_multisets(a);
        CHECK(left == right);
    }
}

TEST_CASE("bst right side matches the m = 3 cycle pattern") {
    // For (a1,a2,a3) the right side must consist of the six cycle-type values.
    const Rational a1(3), a2(-1, 2), a3(-2);
    auto [left, right] = bst_multisets({a1, a2, a3});
    RationalMultiset expect;
    expect.insert(positive_part(a1 + a2 + a3), 2);  // (123), (132)
    expect.insert(positive_part(a1 + a2) + positive_part(a3));
    expect.insert(positive_part(a1 + a3) + positive_part(a2));
    expect.insert(positive_part(a2 + a3) + positive_part(a1));
    expect.insert(positive_part(a1) + positive_part(a2) + positive_part(a3));
    CHECK(right == expect);
    CHECK(left == expect);
}

TEST_CASE("StepDistribution validation") {
    CHECK_THROWS_AS(StepDistribution({Rational(1)}, {Rational(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(StepDistribution({Rational(1), Rational(1)}, {Rational(1, 2), Rational(1, 2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(StepDistribution({Rational(1), Rational(2)}, {Rational(3, 2), Rational(-1, 2)}),
                    std::invalid_argument);
}

TEST_CASE("rw_plus_moment small cases") {
    StepDistribution pm1({Rational(-1), Rational(1)}, {Rational(1, 2), Rational(1, 2)});
    CHECK(rw_plus_moment(pm1, 2, 1) == Rational(1, 2));
    CHECK(rw_plus_moment(pm1, 1, 2) == Rational(1, 2));
    StepDistribution neg({Rational(-1), Rational(-2)}, {Rational(1, 2), Rational(1, 2)});
    CHECK(rw_plus_moment(neg, 3, 2) == Rational(0));
}

TEST_CASE("rw_max_moment frozen values and base case") {
    StepDistribution pm1({Rational(-1), Rational(1)}, {Rational(1, 2), Rational(1, 2)});
    CHECK(rw_max_moment(pm1, 2, 1) == Rational(3, 4));
    CHECK(rw_max_moment(pm1, 2, 2) == Rational(5, 4));
    CHECK(rw_max_moment(pm1, 1, 3) == rw_plus_moment(pm1, 1, 3));

    StepDistribution det1({Rational(1)}, {Rational(1)});
    CHECK(rw_max_moment_oracle(det1, 3, 2) == Rational(9));
    StepDistribution zero({Rational(0)}, {Rational(1)});
    CHECK(rw_max_moment_oracle(zero, 4, 2) == Rational(0));
}

TEST_CASE("rw_max_moment equals the path-enumeration oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        const Rational p1(1 + static_cast<int>(rng() % 3), 6);
        const Rational p2(1 + static_cast<int>(rng() % 2), 6);
        const Rational p3 = Rational(1) - p1 - p2;
        StepDistribution dist({Rational(-1), Rational(0), Rational(1)}, {p1, p2, p3});
        Rational prev(0);
        for (int m = 1; m <= 6; ++m) {
            for (int n = 1; n <= 3; ++n)
                CHECK(rw_max_moment(dist, m, n) == rw_max_moment_oracle(dist, m, n));
            // Monotone in m at fixed n (pathwise M_m >= M_{m-1}).
            const Rational cur = rw_max_moment(dist, m, 2);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("rw oracle path cap") {
    StepDistribution pm1({Rational(-1), Rational(1)}, {Rational(1, 2), Rational(1, 2)});
    CHECK_THROWS_AS(rw_max_moment_oracle(pm1, 30, 1, 1000), CapError);
}
