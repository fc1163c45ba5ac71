#include <gtest/gtest.h>

#include <set>

#include "partopus/master_identity.hpp"

using namespace partopus;

namespace {

Expr g(const char* n) { return Expr::generator(n); }
Expr m(const Partition& p, std::vector<std::vector<Expr>> slots) {
    return Expr::apply(structure_symbol(p), structure_degree(p), std::move(slots));
}

// brute force: every pair with target in outer*inner
std::set<std::pair<Partition, Partition>> factor_oracle(const Partition& t) {
    std::vector<Partition> cands;
    for (int d = 0; d <= t.d(); ++d)
        for (int b = 0; b <= t.dbar(); ++b)
            for (const auto& p : partitions_with(d, b, false)) cands.push_back(p);
    std::set<std::pair<Partition, Partition>> out;
    auto inners = cands;
    inners.push_back(Partition{1, 0});
    inners.push_back(Partition{0, 1});
    for (const auto& o : cands)
        for (const auto& i : inners)
            if (star_raw(o, i).coeff(t) > 0) out.insert({o, i});
    return out;
}

}  // namespace

TEST(Factorizations, MatchBruteForce) {
    for (const auto& t : regular_partitions_up_to(4)) {
        std::set<std::pair<Partition, Partition>> got;
        for (const auto& f : factorizations(t)) {
            got.insert({f.outer, f.inner});
            EXPECT_EQ(f.multiplicity, star_raw(f.outer, f.inner).coeff(t));
        }
        EXPECT_EQ(got, factor_oracle(t)) << t.str();
    }
}

TEST(Factorizations, RejectIrregularTarget) { EXPECT_THROW(factorizations(Partition{2, 0}), std::invalid_argument); }

TEST(Factorizations, TypeTwoForOneTwoThree) {
    std::set<std::pair<Partition, Partition>> ii;
    for (const auto& f : factorizations(Partition{1, 2, 3}))
        if (f.type_ii()) ii.insert({f.outer, f.inner});
    std::set<std::pair<Partition, Partition>> want{{Partition{1, 5}, Partition{0, 1}},
                                                    {Partition{1, 5}, Partition{1, 0}},
                                                    {Partition{3, 3}, Partition{0, 1}},
                                                    {Partition{3, 3}, Partition{1, 0}}};
    EXPECT_EQ(ii, want);
}

TEST(TypeOne, RowsForOneTwoThree) {
    auto rows = type_i_rows(Partition{1, 2, 3});
    ASSERT_EQ(rows.size(), 17u);
    std::multiset<std::size_t> counts, want{1, 6, 2, 1, 2, 2, 4, 3, 1, 6, 1, 2, 2, 5, 2, 3, 6};
    std::size_t total = 0;
    for (const auto& r : rows) {
        counts.insert(r.subdivisions);
        total += r.subdivisions;
        for (const auto& t : r.terms.terms()) EXPECT_EQ(t.expr.node_count(), 8u);
    }
    EXPECT_EQ(counts, want);
    EXPECT_EQ(total, 49u);
}

TEST(TypeTwo, Coefficients) {
    std::set<long> mags;
    const FormalSum with = type_ii_terms(Partition{1, 2, 3}), without = type_ii_terms(Partition{1, 2, 3}, false);
    for (const auto& t : with.terms()) mags.insert(std::abs(Rational(t.coeff).get_num().get_si()));
    EXPECT_EQ(mags, (std::set<long>{3, 5}));
    for (const auto& t : without.terms()) EXPECT_EQ(abs(t.coeff), 1);
    EXPECT_EQ(with.size(), 13u);
}

TEST(Identity, OneTwoDisplayUpToSign) {
    const Partition p1{1}, p2{2}, p3{3}, p11{1, 1}, p12{1, 2};
    const Expr a = g("a"), b = g("b"), c = g("c");
    std::vector<Expr> want{
        m(p1, {{m(p12, {{a}, {b, c}})}}),
        m(p2, {{b, m(p11, {{a}, {c}})}}),
        m(p2, {{m(p11, {{a}, {b}}), c}}),
        m(p11, {{a}, {m(p2, {{b, c}})}}),
        m(p12, {{a}, {b, m(p1, {{c}})}}),
        m(p12, {{a}, {m(p1, {{b}}), c}}),
        m(p12, {{m(p1, {{a}})}, {b, c}}),
    };
    FormalSum s;
    for (const auto& e : want) s += FormalSum::of(e);
    for (const auto& e : {m(p3, {{a, b, c}}), m(p3, {{b, a, c}}), m(p3, {{b, c, a}})}) s += FormalSum::of(e, 3);
    auto r = master_identity(p12);
    EXPECT_EQ(r.rows.size(), 4u);
    EXPECT_TRUE(equal_up_to_sign(r.total(), s)) << r.total().str();
}

TEST(Identity, KvzDropsCoefficients) {
    IdentityOptions o;
    o.type_ii_coefficients = false;
    auto r = master_identity(Partition{1, 2}, o);
    for (const auto& t : r.type_ii.terms()) EXPECT_EQ(abs(t.coeff), 1);
    EXPECT_EQ(r.type_ii.size(), 3u);
}

// A-infinity and all-ones pieces close up on themselves
TEST(Identity, SubstructuresClose) {
    IdentityOptions ai;
    ai.filter = SymbolFilter::a_infinity;
    for (int n = 1; n <= 5; ++n) {
        auto r = master_identity(Partition{n}, ai);
        EXPECT_EQ(r.rows.size(), static_cast<std::size_t>(n));
        EXPECT_TRUE(r.type_ii.empty());
        for (const auto& row : r.rows) {
            EXPECT_EQ(row.f.outer.size(), 1u);
            EXPECT_EQ(row.f.inner.size(), 1u);
        }
    }
    IdentityOptions ones;
    ones.filter = SymbolFilter::ones;
    for (int n = 1; n <= 4; ++n) {
        Partition t(std::vector<int>(n, 1));
        auto r = master_identity(t, ones);
        EXPECT_FALSE(r.rows.empty());
        for (const auto& row : r.rows)
            for (const auto& p : {row.f.outer, row.f.inner})
                for (int k : p.slots()) EXPECT_EQ(k, 1);
    }
}

TEST(Identity, JsonShape) {
    auto j = master_identity(Partition{1, 2}).to_json();
    for (const char* k : {"target", "type_i", "type_ii", "options"}) EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["rows"].size(), 4u);
    EXPECT_EQ(FormalSum::from_json(j["type_ii"]).size(), 3u);
}

TEST(Identity, StructureSymbols) {
    EXPECT_EQ(structure_symbol(Partition{1, 2}), "m(1|2)");
    EXPECT_EQ(structure_degree(Partition{1}), 1);
    EXPECT_EQ(structure_degree(Partition{2}), 0);
    EXPECT_EQ(structure_degree(Partition{1, 2}), -2);
}
