#include <gtest/gtest.h>

#include <stable_schur/partitions.hpp>

#include "oracles.hpp"

using namespace stable_schur;

namespace {

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t v = 1;
    while (e-- > 0) v *= b;
    return v;
}

}  // namespace

TEST(Partition, RejectsBadParts) {
    EXPECT_THROW(Partition({1, 2}), DomainError);
    EXPECT_THROW(Partition({2, -1}), DomainError);
    EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
}

TEST(Partition, ParseAndFormat) {
    EXPECT_EQ(parse_partition("[3, 1,1]"), Partition({3, 1, 1}));
    EXPECT_EQ(parse_partition("[]"), Partition());
    EXPECT_EQ(parse_partition("∅"), Partition());
    EXPECT_EQ(to_string(Partition({2, 2})), "[2,2]");
    EXPECT_EQ(to_string(Partition()), "[]");
    EXPECT_THROW(parse_partition("[1,,2]"), DomainError);
    EXPECT_THROW(parse_partition("3,1"), DomainError);
    EXPECT_THROW(parse_partition("[1,3]"), DomainError);
    for (const auto& p : partitions_up_to(7)) EXPECT_EQ(parse_partition(to_string(p)), p);
}

TEST(Partition, ConjugateExamples) {
    EXPECT_EQ(conjugate(Partition()), Partition());
    EXPECT_EQ(conjugate(Partition({2, 1})), Partition({2, 1}));
    EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
}

TEST(Partition, ConjugateIsInvolutionPreservingSize) {
    for (const auto& p : partitions_up_to(10)) {
        EXPECT_EQ(conjugate(conjugate(p)), p);
        EXPECT_EQ(conjugate(p).size(), p.size());
    }
}

TEST(Partition, CountsMatchPartitionNumbers) {
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(static_cast<int>(partitions_of(n).size()), p[n]) << n;
}

TEST(Partition, SubpartitionsAreContained) {
    Partition lam{3, 2, 1};
    int total = 0;
    for (int s = 0; s <= lam.size(); ++s)
        for (const auto& mu : subpartitions(lam, s)) {
            EXPECT_TRUE(contains(lam, mu));
            EXPECT_EQ(mu.size(), s);
            ++total;
        }
    // Order ideals of the staircase (3,2,1): Catalan(4) = 14.
    EXPECT_EQ(total, 14);
}

TEST(SytCount, Examples) {
    EXPECT_EQ(syt_count(Partition({1})), 1);
    EXPECT_EQ(syt_count(Partition({2, 1})), 2);
    EXPECT_EQ(syt_count(Partition({2, 2})), 2);
    EXPECT_EQ(syt_count(Partition()), 1);
}

TEST(SytCount, MatchesBruteForce) {
    for (const auto& p : partitions_up_to(8)) EXPECT_EQ(syt_count(p), oracle::syt_by_permutations(p.parts())) << to_string(p);
}

TEST(SchurDim, Examples) {
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(schur_dim(Partition({1}), n), n);
    EXPECT_EQ(schur_dim(Partition({1, 1}), 4), 6);
    EXPECT_EQ(schur_dim(Partition({2, 1}), 2), 2);
    EXPECT_EQ(schur_dim(Partition({1, 1, 1}), 2), 0);
}

TEST(SchurDim, MatchesSemistandardCount) {
    for (const auto& p : partitions_up_to(5))
        for (int n = 0; n <= 5; ++n) EXPECT_EQ(schur_dim(p, n), oracle::ssyt_count(p.parts(), n)) << to_string(p) << " n=" << n;
}

TEST(SchurDim, PolynomialFormAgrees) {
    for (const auto& p : partitions_up_to(6)) {
        Polynomial poly = schur_dim_polynomial(p);
        EXPECT_EQ(poly.degree(), p.size());
        for (int n = 0; n <= 10; ++n) EXPECT_EQ(poly(Rational(n)), Rational(schur_dim(p, n))) << to_string(p);
    }
}

TEST(SchurDim, TensorSumRule) {
    for (int r = 0; r <= 6; ++r)
        for (int n = 0; n <= 8; ++n) {
            std::int64_t total = 0;
            for (const auto& lam : partitions_of(r)) total += syt_count(lam) * schur_dim(lam, n);
            EXPECT_EQ(total, ipow(n, r)) << "r=" << r << " n=" << n;
        }
}

TEST(LrCoefficient, Examples) {
    Partition l31{3, 1};
    EXPECT_EQ(lr_coefficient(l31, Partition(), l31), 1);
    EXPECT_EQ(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({2})), 1);
    EXPECT_EQ(lr_coefficient(Partition({2, 1}), Partition({1}), Partition({1, 1})), 1);
    EXPECT_EQ(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})), 2);
    EXPECT_EQ(lr_coefficient(Partition({2}), Partition({1, 1}), Partition()), 0);
}

TEST(LrCoefficient, MatchesSchurPolynomialProducts) {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 6 && b <= 3; ++b)
            for (const auto& mu : partitions_of(a))
                for (const auto& nu : partitions_of(b)) {
                    auto expansion = oracle::schur_product(mu.parts(), nu.parts());
                    for (const auto& lam : partitions_of(a + b)) {
                        auto it = expansion.find(lam.parts());
                        std::int64_t expected = it == expansion.end() ? 0 : it->second;
                        EXPECT_EQ(lr_coefficient(lam, mu, nu), expected)
                            << to_string(lam) << " " << to_string(mu) << " " << to_string(nu);
                    }
                }
}

TEST(LrCoefficient, Symmetry) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : partitions_of(n))
            for (int a = 0; a <= n; ++a)
                for (const auto& mu : subpartitions(lam, a))
                    for (const auto& nu : partitions_of(n - a)) ASSERT_EQ(lr_coefficient(lam, mu, nu), lr_coefficient(lam, nu, mu));
}

TEST(LrCoefficient, PieriCorners) {
    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            std::int64_t total = 0;
            for (const auto& lam : partitions_of(n + 1)) total += lr_coefficient(lam, mu, Partition({1}));
            // Addable corners: one per distinct part plus one for a new row.
            int corners = 1;
            for (int i = 0; i < mu.length(); ++i)
                if (i == 0 || mu[i] != mu[i - 1]) ++corners;
            EXPECT_EQ(total, corners) << to_string(mu);
        }
}

TEST(LrCoefficient, SumOverProductRecoversDimension) {
    // s_mu s_nu evaluated at n ones: dim S_mu(C^n) dim S_nu(C^n).
    Partition mu{2, 1}, nu{2};
    for (int n = 0; n <= 5; ++n) {
        std::int64_t total = 0;
        for (const auto& lam : partitions_of(5)) total += lr_coefficient(lam, mu, nu) * schur_dim(lam, n);
        EXPECT_EQ(total, schur_dim(mu, n) * schur_dim(nu, n));
    }
}

TEST(LrCoefficient, CacheSnapshotRoundTrip) {
    lr_coefficient(Partition({4, 2, 1}), Partition({2, 1}), Partition({2, 1, 1}));
    auto snap = lr_cache_snapshot();
    EXPECT_FALSE(snap.empty());
    lr_cache_seed(snap);
    EXPECT_EQ(lr_cache_snapshot().size(), snap.size());
}

TEST(Rational, ParseRejectsZeroDenominator) {
    EXPECT_EQ(parse_rational("4/6"), make_rational(2, 3));
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("x"), DomainError);
    EXPECT_EQ(make_rational(4, 2).get_den(), 1);
}
