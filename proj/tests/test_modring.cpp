#include <gtest/gtest.h>

#include <random>

#include <hopfgal/modring.hpp>

using namespace hopfgal;

TEST(ModArith, PosmodAndInverse) {
    EXPECT_EQ(posmod(-7, 5), 3);
    EXPECT_EQ(posmod(10, 5), 0);
    for (i64 m : {7, 9, 25, 81})
        for (i64 a = 1; a < m; ++a)
            if (std::gcd(a, m) == 1) {
                EXPECT_EQ(a * inv_mod(a, m) % m, 1);
            }
    EXPECT_THROW(inv_mod(3, 9), std::logic_error);
}

TEST(ModArith, FactorizeAndOrders) {
    auto f = factorize(2 * 2 * 3 * 49);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], (std::pair<i64, int>{2, 2}));
    EXPECT_EQ(f[2], (std::pair<i64, int>{7, 2}));
    EXPECT_EQ(valuation(48, 2), 4);
    EXPECT_EQ(mult_order(2, 7), 3);
    EXPECT_EQ(mult_order(3, 7), 6);
    EXPECT_TRUE(is_prime(343 / 49));
    EXPECT_FALSE(is_prime(1));
    EXPECT_EQ(pow_mod(2, 10, 1000), 24);
}

// Random consistent systems over Z/M are solved, and the result satisfies
// every row; an inconsistent row is detected.
TEST(SolveMod, RandomConsistentSystems) {
    std::mt19937_64 rng(11);
    for (i64 M : {4, 8, 9, 12, 27, 36, 81, 225}) {
        for (int trial = 0; trial < 20; ++trial) {
            int n = 6, m = 9;
            std::uniform_int_distribution<i64> d(0, M - 1);
            std::vector<i64> x(n);
            for (auto& v : x) v = d(rng);
            std::vector<SparseRow> rows;
            std::vector<i64> rhs;
            for (int r = 0; r < m; ++r) {
                SparseRow row;
                i64 b = 0;
                for (int c = 0; c < n; ++c) {
                    i64 a = d(rng);
                    if (rng() % 3 == 0) a = a * factorize(M)[0].first % M;  // non-unit coefficient
                    row.push_back({c, a});
                    b += a % M * x[c] % M;
                }
                rows.push_back(row);
                rhs.push_back(posmod(b, M));
            }
            auto emit = [&](auto&& sink) {
                for (size_t r = 0; r < rows.size(); ++r) sink(rows[r], rhs[r]);
            };
            auto sol = solve_mod(n, M, emit);
            ASSERT_TRUE(sol.has_value());
            for (size_t r = 0; r < rows.size(); ++r) {
                i64 acc = 0;
                for (auto [c, a] : rows[r]) acc = posmod(acc + a % M * (*sol)[c], M);
                EXPECT_EQ(acc, rhs[r]);
            }
        }
    }
}

TEST(SolveMod, DetectsInconsistency) {
    // 3x = 1 has no solution modulo 9; 2x = 1 has none modulo 4.
    for (auto [M, a] : {std::pair<i64, i64>{9, 3}, {4, 2}, {12, 6}}) {
        auto emit = [&](auto&& sink) { sink(SparseRow{{0, a}}, 1); };
        EXPECT_FALSE(solve_mod(1, M, emit).has_value());
    }
    // 3x = 3 (mod 9) has a solution.
    auto ok = [&](auto&& sink) { sink(SparseRow{{0, 3}}, 3); };
    auto s = solve_mod(1, 9, ok);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(3 * (*s)[0] % 9, 3);
}

// Howell form keeps the hidden relation: 3 x0 + x1 = 0 (mod 9) implies
// 3 x1 = 0, which clashes with 3 x1 = 3.
TEST(LocalEchelon, HowellClosure) {
    LocalEchelon bad(3, 2, 2);
    bad.insert(SparseRow{{0, 3}, {1, 1}}, 0);
    bad.insert(SparseRow{{1, 3}}, 3);
    EXPECT_TRUE(bad.inconsistent());

    LocalEchelon good(3, 2, 2);
    good.insert(SparseRow{{0, 3}, {1, 1}}, 3);
    good.insert(SparseRow{{1, 3}}, 0);
    ASSERT_FALSE(good.inconsistent());
    auto x = good.solve();
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(posmod(3 * (*x)[0] + (*x)[1], 9), 3);
    EXPECT_EQ(posmod(3 * (*x)[1], 9), 0);
}

TEST(LocalSmith, DiagonalValuations) {
    // diag(1, 3, 9) modulo 27 after mixing rows and columns
    std::vector<std::vector<i64>> A = {{1, 3, 9}, {2, 9, 18}, {0, 0, 9}};
    auto s = local_smith(A, 3, 3, 3);
    std::vector<int> v = s.diag_val;
    std::sort(v.begin(), v.end());
    EXPECT_EQ(v, (std::vector<int>{0, 1, 2}));
}
