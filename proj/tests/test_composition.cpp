#include <gtest/gtest.h>

#include "partopus/composition.hpp"

using namespace partopus;

namespace {

std::size_t subdivision_terms(const Partition& t, const Partition& outer, const std::vector<Partition>& inners) {
    std::size_t n = 0;
    for (const auto& s : enumerate_subdivisions(t, outer, inners)) n += expanded_term_count(s, static_cast<int>(inners.size()));
    return n;
}

std::vector<Partition> small_family() {
    std::vector<Partition> fam;
    for (int d = 0; d <= 2; ++d)
        for (int b = 0; b <= 2; ++b)
            for (const auto& p : partitions_with(d, b, true)) fam.push_back(p);
    return fam;
}

}  // namespace

TEST(Subdivisions, CountsForThreeIntoTwoFour) {
    PMap x = symbol_map("x", Partition{3}), y = symbol_map("y", Partition{2, 4});
    const std::vector<std::pair<Partition, std::size_t>> want{{Partition{2, 6}, 3}, {Partition{3, 5}, 6}, {Partition{4, 4}, 3}};
    for (const auto& [t, n] : want) {
        EXPECT_EQ(compose_component(x, {y}, t).size(), n) << t.str();
        EXPECT_EQ(subdivision_terms(t, Partition{3}, {Partition{2, 4}}), n) << t.str();
    }
}

TEST(Subdivisions, ZeroSlotInner) {
    PMap x = symbol_map("x", Partition{4}), y = symbol_map("y", Partition{1, 0});
    EXPECT_EQ(enumerate_subdivisions(Partition{2, 2}, Partition{4}, Partition{1, 0}).size(), 6u);
    EXPECT_EQ(compose_component(x, {y}, Partition{2, 2}).size(), 12u);
}

TEST(Subdivisions, UnreachableTargetThrows) {
    EXPECT_THROW(enumerate_subdivisions(Partition{1, 1}, Partition{3}, Partition{2}), std::invalid_argument);
}

TEST(Subdivisions, TargetsMatchRawProduct) {
    auto fam = small_family();
    for (const auto& p : fam)
        for (const auto& q : fam) {
            if (!p.regular() && p.total() == 0) continue;
            ASSERT_EQ(composition_targets(p, {q}), star_raw(p, q)) << p.str() << " " << q.str();
        }
}

TEST(Subdivisions, EveryTermCountedOnce) {
    for (const auto& p : regular_partitions_up_to(2))
        for (const auto& q : small_family()) {
            PMap x = symbol_map("x", p), y = symbol_map("y", q);
            for (const auto& t : composition_targets(p, {q}).support())
                ASSERT_EQ(compose_component(x, {y}, t).size(), subdivision_terms(t, p, {q})) << p.str() << " " << q.str() << " " << t.str();
        }
}

TEST(Shuffles, Multinomial) {
    EXPECT_EQ(shuffle_count({2, 2}), 6u);
    EXPECT_EQ(shuffle_count({1, 1, 1}), 6u);
    EXPECT_EQ(shuffle_count({3, 0, 2}), 10u);
    EXPECT_EQ(shuffle_count({}), 1u);
}

TEST(Compose, TwoInnerMapsDisplay) {
    PMap x = symbol_map("x", Partition{3});
    PMap y1 = symbol_map("y1", Partition{2}), y2 = symbol_map("y2", Partition{3});
    FormalSum s = compose_component(x, {y1, y2}, Partition{6});
    EXPECT_EQ(s.str(),
              "-(-1)^{|a||y1|+|a||y2|+|b||y2|+|c||y2|} x(a,y1(b,c),y2(d,e,f)) + "
              "(-1)^{|a||y2|+|b||y2|+|c||y2|} x(y1(a,b),c,y2(d,e,f)) + "
              "(-1)^{|a||y2|+|b||y2|} x(y1(a,b),y2(c,d,e),f)");
}

TEST(Compose, IdentityInsertionMultiplies) {
    PMap id{"id", Partition{1}, Parity{}, FormalSum::of(Expr::generator(placeholder(0)))};
    for (int i = 1; i <= 5; ++i) {
        PMap x = symbol_map("x", Partition{i});
        FormalSum s = compose_component(x, {id}, Partition{i});
        FormalSum want = FormalSum::of(Expr::apply("x", std::nullopt, default_args(Partition{i})), i);
        EXPECT_TRUE(equal(s, want)) << i << ": " << s.str();
    }
}

TEST(Compose, PairMapsCoverProduct) {
    PMap x = symbol_map("x", Partition{1, 2}), y = symbol_map("y", Partition{2, 3});
    auto parts = compose_pair(x, y);
    std::vector<Partition> got;
    for (const auto& [t, s] : parts)
        if (!s.empty()) got.push_back(t);
    EXPECT_EQ(got, star(Partition{1, 2}, Partition{2, 3}).support());
}

TEST(Compose, TildeOnlyChangesSigns) {
    PMap x = symbol_map("x", Partition{2, 1}), y = symbol_map("y", Partition{1, 1});
    for (const auto& t : composition_targets(Partition{2, 1}, {Partition{1, 1}}).support()) {
        auto plain = compose_component(x, {y}, t);
        auto tilde = compose_component(x, {y}, t, {SignRule::total, true});
        EXPECT_TRUE(equal_up_to_sign(plain, tilde)) << t.str();
    }
}

TEST(Chain, AssociatorOfEvenProduct) {
    ChainSymbol m{"m", 2, 0}, a{"a", 0, std::nullopt}, b{"b", 0, std::nullopt}, c{"c", 0, std::nullopt};
    EXPECT_EQ(expand_chain(m, {{m}, {a, b, c}}).normalized().str(), "-m(a,m(b,c)) + m(m(a,b),c)");
}

// one element per group: every ordering, each with the sign of the permutation
TEST(Chain, SeparateGroupsGiveAllOrders) {
    const std::size_t fact[] = {1, 1, 2, 6, 24, 120};
    for (int n = 1; n <= 5; ++n) {
        ChainSymbol x{"x", n, 0};
        std::vector<std::vector<ChainSymbol>> groups;
        for (int k = 0; k < n; ++k) groups.push_back({ChainSymbol{generator_name(k), 0, 0}});
        FormalSum s = expand_chain(x, groups).normalized();
        ASSERT_EQ(s.size(), fact[n]);
        for (const auto& t : s.terms()) {
            std::vector<int> perm;
            for (const auto& e : t.expr.slots[0]) perm.push_back(e.head[0] - 'a');
            int inv = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
            // even elements: d = -1 so each swap costs one sign
            EXPECT_EQ(t.coeff, inv % 2 ? -1 : 1) << t.expr.str();
        }
    }
}

TEST(Chain, TooManySymbols) {
    ChainSymbol x{"x", 13, 0};
    std::vector<ChainSymbol> g;
    for (int k = 0; k < 13; ++k) g.push_back({generator_name(k), 0, 0});
    EXPECT_THROW(expand_chain(x, {g}), std::invalid_argument);
}
