#include <gtest/gtest.h>

#include <stable_schur/stable_rep.hpp>

#include "oracles.hpp"

using namespace stable_schur;

namespace {

constexpr auto O = GroupFamily::Orthogonal;
constexpr auto Sp = GroupFamily::Symplectic;
constexpr auto GL = GroupFamily::GeneralLinear;

StableClass simple(GroupFamily f, std::initializer_list<std::pair<Label, std::int64_t>> terms) {
    StableClass c(f, Basis::Simple);
    for (const auto& [l, k] : terms) c.add(l, k);
    return c;
}

StableClass injective(GroupFamily f, std::initializer_list<std::pair<Label, std::int64_t>> terms) {
    StableClass c(f, Basis::Injective);
    for (const auto& [l, k] : terms) c.add(l, k);
    return c;
}

Label L(std::initializer_list<int> p) { return label(Partition(p)); }

}  // namespace

TEST(Labels, ParseAndFormat) {
    EXPECT_EQ(parse_family("Sp"), Sp);
    EXPECT_THROW(parse_family("SO"), DomainError);
    EXPECT_EQ(parse_label(O, "[2,1]"), L({2, 1}));
    EXPECT_EQ(parse_label(GL, "[[2],[1,1]]"), label(Partition({2}), Partition({1, 1})));
    EXPECT_EQ(parse_label(GL, "[[],[]]"), Label{});
    EXPECT_EQ(parse_label(GL, "[[1],[]]"), label(Partition({1}), Partition()));
    EXPECT_EQ(to_string(GL, label(Partition({2}), Partition({1}))), "[[2],[1]]");
    EXPECT_THROW(parse_label(GL, "[2]"), DomainError);
    EXPECT_THROW(check_label(O, label(Partition({1}), Partition({1}))), DomainError);
}

TEST(StableClassArith, CancelsAndPrints) {
    StableClass a = injective(O, {{L({2}), 1}});
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(to_string(a - injective(O, {{L({}), 1}})), "[S_[2]] - [S_[]]");
    EXPECT_EQ(to_string(StableClass(O, Basis::Simple)), "0");
    EXPECT_THROW(a += StableClass(Sp, Basis::Injective), DomainError);
    EXPECT_THROW(a += StableClass(O, Basis::Simple), DomainError);
}

TEST(Branching, Examples) {
    EXPECT_EQ(branch_multiplicity(O, L({1}), L({1})), 1);
    EXPECT_EQ(branch_multiplicity(O, L({2}), L({})), 1);
    EXPECT_EQ(branch_multiplicity(O, L({1, 1}), L({})), 0);
    EXPECT_EQ(branch_multiplicity(Sp, L({1, 1}), L({})), 1);
    EXPECT_EQ(branch_multiplicity(Sp, L({2}), L({})), 0);
    EXPECT_EQ(branch_multiplicity(GL, label(Partition({1}), Partition({1})), Label{}), 1);
}

TEST(Branching, InjectiveToSimpleExamples) {
    EXPECT_EQ(injective_to_simples(injective(O, {{L({1}), 1}})), simple(O, {{L({1}), 1}}));
    EXPECT_EQ(injective_to_simples(injective(O, {{L({2}), 1}})), simple(O, {{L({2}), 1}, {L({}), 1}}));
    EXPECT_EQ(injective_to_simples(injective(O, {{L({2}), 1}, {L({1, 1}), 1}})),
              simple(O, {{L({2}), 1}, {L({1, 1}), 1}, {L({}), 1}}));
}

TEST(Branching, SimpleToInjectiveExamples) {
    EXPECT_EQ(simples_to_injectives(simple(O, {{L({1}), 1}})), injective(O, {{L({1}), 1}}));
    EXPECT_EQ(simples_to_injectives(simple(O, {{L({2}), 1}})), injective(O, {{L({2}), 1}, {L({}), -1}}));
    EXPECT_EQ(simples_to_injectives(simple(O, {{L({1, 1}), 1}})), injective(O, {{L({1, 1}), 1}}));
    EXPECT_THROW(simples_to_injectives(injective(O, {})), DomainError);
}

TEST(Branching, OrthogonalRowMatchesLittlewood) {
    // S_(2,2) restricted: L(2,2) + L(2) + L() from the even-row sum.
    StableClass got = injective_to_simples(injective(O, {{L({2, 2}), 1}}));
    EXPECT_EQ(got, simple(O, {{L({2, 2}), 1}, {L({2}), 1}, {L({1, 1}), 0}, {L({}), 1}}));
}

TEST(Branching, Unitriangular) {
    for (auto f : {O, Sp})
        for (int n = 0; n <= 8; ++n)
            for (const auto& lam : partitions_of(n)) {
                EXPECT_EQ(branch_multiplicity(f, label(lam), label(lam)), 1);
                StableClass row = injective_to_simples(StableClass::single(f, Basis::Injective, label(lam)));
                for (const auto& [mu, b] : row.terms()) {
                    EXPECT_GT(b, 0);
                    if (mu != label(lam)) EXPECT_LT(label_size(mu), label_size(label(lam)));
                }
            }
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const auto& al : partitions_of(a))
                for (const auto& be : partitions_of(b)) {
                    Label lab = label(al, be);
                    EXPECT_EQ(branch_multiplicity(GL, lab, lab), 1);
                    StableClass row = injective_to_simples(StableClass::single(GL, Basis::Injective, lab));
                    for (const auto& [mu, k] : row.terms())
                        if (mu != lab) EXPECT_LT(label_size(mu), label_size(lab));
                }
}

TEST(Branching, RoundTrip) {
    for (auto f : {O, Sp}) {
        StableClass all(f, Basis::Injective);
        std::int64_t k = 1;
        for (int n = 0; n <= 6; ++n)
            for (const auto& lam : partitions_of(n)) {
                StableClass one = StableClass::single(f, Basis::Injective, label(lam));
                EXPECT_EQ(simples_to_injectives(injective_to_simples(one)), one);
                EXPECT_EQ(injective_to_simples(simples_to_injectives(StableClass::single(f, Basis::Simple, label(lam)))),
                          StableClass::single(f, Basis::Simple, label(lam)));
                all.add(label(lam), (k++ % 7) - 3);
            }
        EXPECT_EQ(simples_to_injectives(injective_to_simples(all)), all);
    }
    StableClass gl(GL, Basis::Injective);
    gl.add(label(Partition({2}), Partition({1})), 2);
    gl.add(label(Partition({1, 1}), Partition({1, 1})), -1);
    EXPECT_EQ(simples_to_injectives(injective_to_simples(gl)), gl);
}

TEST(Branching, BrauerCount) {
    for (int k = 0; k <= 5; ++k) {
        std::int64_t total = 0;
        for (const auto& lam : partitions_of(2 * k)) total += syt_count(lam) * branch_multiplicity(O, label(lam), Label{});
        EXPECT_EQ(total, oracle::perfect_matchings(2 * k)) << "k=" << k;
    }
}

TEST(Branching, FlippedConventionSwapsFamilies) {
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (int s = n; s >= 0; s -= 2)
                for (const auto& mu : subpartitions(lam, s))
                    EXPECT_EQ(branch_multiplicity(O, label(lam), label(mu), BranchingConvention::Flipped),
                              branch_multiplicity(Sp, label(lam), label(mu)));
}

TEST(Branching, GlTrace) {
    StableClass t = injective_to_simples(StableClass::single(GL, Basis::Injective, label(Partition({1}), Partition({1}))));
    EXPECT_EQ(t.coeff(Label{}), 1);
    EXPECT_EQ(t.coeff(label(Partition({1}), Partition({1}))), 1);
    EXPECT_EQ(t.terms().size(), 2u);
}

TEST(TensorPower, Examples) {
    EXPECT_EQ(decompose_tensor_power(O, 0), injective(O, {{L({}), 1}}));
    EXPECT_EQ(decompose_tensor_power(O, 3), injective(O, {{L({3}), 1}, {L({2, 1}), 2}, {L({1, 1, 1}), 1}}));
    EXPECT_EQ(to_string(decompose_tensor_power(O, 3)), "[S_[3]] + 2[S_[2,1]] + [S_[1,1,1]]");
    EXPECT_EQ(decompose_tensor_power(GL, 1, 1), injective(GL, {{label(Partition({1}), Partition({1})), 1}}));
    EXPECT_THROW(decompose_tensor_power(O, 1, 1), DomainError);
    EXPECT_THROW(decompose_tensor_power(O, -1), DomainError);
}

TEST(TensorPower, SquaredMultiplicitiesSumToFactorial) {
    // Σ f^λ · f^λ = r!
    for (int r = 0; r <= 7; ++r) {
        std::int64_t total = 0, fact = 1;
        for (int i = 2; i <= r; ++i) fact *= i;
        StableClass t = decompose_tensor_power(O, r);
        for (const auto& [l, k] : t.terms()) total += k * syt_count(l.first);
        EXPECT_EQ(total, fact);
    }
}
