#include <gtest/gtest.h>

#include <functional>

#include "partopus/errors.hpp"
#include "partopus/partition.hpp"

using namespace partopus;

namespace {

PartitionVector pv(const char* s) { return PartitionVector::parse(s); }

// oracle: distribute the i-1 leftover points over q's slots as nondecreasing
// words, one slot of p at a time
PartitionVector oracle_star(const Partition& p, const Partition& q) {
    PartitionVector out(Form::raw);
    const int s = static_cast<int>(q.size());
    for (std::size_t l = 0; l < p.size(); ++l) {
        const int i = p[l];
        if (i < 1) continue;
        std::vector<int> word(i - 1, 0);
        std::function<void(int)> rec = [&](int k) {
            if (k == i - 1) {
                for (int a = 1; a < i - 1; ++a)
                    if (word[a] < word[a - 1]) return;
                std::vector<int> slots(p.slots().begin(), p.slots().begin() + l);
                std::vector<int> ins(q.slots());
                for (int w : word) ++ins[w];
                slots.insert(slots.end(), ins.begin(), ins.end());
                slots.insert(slots.end(), p.slots().begin() + l + 1, p.slots().end());
                out.add(Partition(slots));
                return;
            }
            for (int v = 0; v < s; ++v) {
                word[k] = v;
                rec(k + 1);
            }
        };
        rec(0);
    }
    return out;
}

}  // namespace

TEST(Partition, ParseAndPrint) {
    Partition p = Partition::parse("(1|2|3)");
    EXPECT_EQ(p.str(), "(1|2|3)");
    EXPECT_EQ(p.d(), 5);
    EXPECT_EQ(p.dbar(), 2);
    EXPECT_TRUE(p.regular());
    EXPECT_FALSE(Partition::parse("(1|0|3)").regular());
    EXPECT_EQ(Partition::parse(" ( 4 | 0 ) ").str(), "(4|0)");
}

TEST(Partition, ParseErrorsCarryPosition) {
    try {
        Partition::parse("(1|x)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(Partition::parse("(1|2"), ParseError);
    EXPECT_THROW(Partition::parse("(1)x"), ParseError);
}

TEST(Partition, CanonicalOrder) {
    EXPECT_LT(Partition({1}), Partition({2}));
    EXPECT_LT(Partition({1, 1}), Partition({3}));  // d first
    EXPECT_LT(Partition({3}), Partition({1, 2}));
}

TEST(Partition, JsonRoundTrip) {
    Partition p{1, 0, 3};
    EXPECT_EQ(partition_from_json(to_json(p)), p);
    PartitionVector v = pv("(2|6)+(3|5)-(4|4)");
    EXPECT_EQ(PartitionVector::from_json(v.to_json()), v);
    EXPECT_EQ(PartitionVector::parse(v.str()), v);
}

// reference values
TEST(Product, GoldenValues) {
    EXPECT_EQ(star(Partition{1, 1, 4}, Partition{1, 3}), pv("(1|3|1|4)+(1|1|3|4)+(1|1|4|3)+(1|1|2|5)+(1|1|1|6)"));
    EXPECT_EQ(star(Partition{3}, Partition{2, 4}), pv("(2|6)+(3|5)+(4|4)"));
    EXPECT_EQ(star(Partition{1, 2}, Partition{2, 3}), pv("(2|3|2)+(1|2|4)+(1|3|3)"));
    EXPECT_EQ(star(Partition{2}, Partition{1, 0, 3}), pv("(1|0|4)+(1|1|3)+(2|0|3)"));
    EXPECT_EQ(star(Partition{1, 0, 3}, Partition{2}), pv("(2|0|3)+(1|0|4)"));
    EXPECT_EQ(star(Partition{4}, Partition{1, 0}), pv("(1|3)+(2|2)+(3|1)+(4|0)"));
    EXPECT_TRUE(star(Partition{0}, Partition{2, 5}).empty());
    EXPECT_EQ(star(Partition{1}, Partition{1}).str(), "(1)");
}

TEST(Product, HigherProductGolden) {
    auto v = higher_product(Partition{1, 2}, Partition{2, 3}, {{Partition{2}, Partition{3, 4}}});
    EXPECT_EQ(v, pv("(5|4|3)+(2|5|5)+(2|6|4)"));
}

TEST(Product, HigherProductRejectsIrregular) {
    EXPECT_THROW(higher_product(Partition{2}, Partition{2}, {{Partition{1}}}), std::invalid_argument);
    EXPECT_THROW(higher_product(Partition{1, 1}, Partition{2, 0}, {{Partition{1}}}), std::invalid_argument);
}

TEST(Product, MatchesWordOracle) {
    std::vector<Partition> fam;
    for (int d = 0; d <= 3; ++d)
        for (int b = 0; b <= 3; ++b) {
            auto ps = partitions_with(d, b, true);
            fam.insert(fam.end(), ps.begin(), ps.end());
        }
    for (const auto& p : fam)
        for (const auto& q : fam) ASSERT_EQ(star_raw(p, q), oracle_star(p, q)) << p.str() << " * " << q.str();
}

TEST(Product, DegreesAdd) {
    auto fam = regular_partitions_up_to(3);
    for (const auto& p : fam)
        for (const auto& q : fam)
            for (const auto& t : star(p, q).support()) {
                EXPECT_EQ(t.d(), p.d() + q.d());
                EXPECT_EQ(t.dbar(), p.dbar() + q.dbar());
            }
}

TEST(Product, OneIsLeftIdentity) {
    for (const auto& q : regular_partitions_up_to(4)) EXPECT_EQ(star(Partition{1}, q), PartitionVector{q});
}

TEST(Product, ReductionSetsCoefficientsToOne) {
    auto raw = star_raw(Partition{2, 2}, Partition{1});
    EXPECT_EQ(raw.coeff(Partition{2, 2}), 2);
    EXPECT_EQ(star(Partition{2, 2}, Partition{1}).coeff(Partition{2, 2}), 1);
}

TEST(PreLie, HoldsThroughTotalDegreeFour) {
    auto fam = regular_partitions_up_to(4);
    std::size_t n = 0;
    for (const auto& a : fam)
        for (const auto& b : fam)
            for (const auto& c : fam) {
                if (a.d() + b.d() + c.d() > 4) continue;
                ++n;
                ASSERT_EQ(pre_lie_defect(a, b, c), pre_lie_defect(a, c, b)) << a.str() << b.str() << c.str();
            }
    EXPECT_EQ(n, 351u);
}

// reduction hides (1|2|3) on one side only
TEST(PreLie, FailsAtTotalDegreeFive) {
    Partition a{1, 1}, b{3}, c{1, 2};
    EXPECT_NE(pre_lie_defect(a, b, c), pre_lie_defect(a, c, b));
}

TEST(PreLie, ZeroSlotCounterexample) {
    for (int i = 2; i <= 4; ++i)
        for (int j = 1; j <= 3; ++j) {
            EXPECT_EQ(pre_lie_defect(Partition{i}, Partition{0}, Partition{j}), PartitionVector{Partition{i + j - 2}});
            EXPECT_TRUE(pre_lie_defect(Partition{i}, Partition{j}, Partition{0}).empty());
        }
}

TEST(Bracket, JacobiThroughTotalDegreeThree) {
    auto fam = regular_partitions_up_to(3);
    for (const auto& a : fam)
        for (const auto& b : fam)
            for (const auto& c : fam) {
                if (a.d() + b.d() + c.d() > 3) continue;
                PartitionVector A{a}, B{b}, C{c};
                auto j = bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) + bracket(C, bracket(A, B));
                ASSERT_TRUE(j.empty()) << a.str() << b.str() << c.str() << " -> " << j.str();
            }
}

TEST(Bracket, Antisymmetric) {
    auto fam = regular_partitions_up_to(3);
    for (const auto& a : fam)
        for (const auto& b : fam) EXPECT_EQ(bracket(a, b), bracket(b, a) * -1);
}

TEST(Enumeration, Compositions) {
    EXPECT_EQ(compositions(2, 3).size(), 6u);
    EXPECT_EQ(compositions(0, 0).size(), 1u);
    EXPECT_TRUE(compositions(1, 0).empty());
    EXPECT_EQ(partitions_with(5, 2, false).size(), 10u);  // C(5,2)
    EXPECT_EQ(regular_partitions_up_to(3).size(), 1u + 2u + 4u + 8u);
}
