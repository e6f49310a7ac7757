#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dsf;

namespace {

IntVector iv(std::initializer_list<long long> x) { return IntVector(x.begin(), x.end()); }

EngineOptions workers(unsigned w) {
    EngineOptions o;
    o.workers = w;
    return o;
}

} // namespace

TEST(Engine, DefaultBoxes) {
    const auto r2 = enumerate_eigen_lattice(2, default_bounds(2));
    EXPECT_EQ(r2.count, 4u);
    const auto r3 = enumerate_eigen_lattice(3, default_bounds(3));
    std::vector<IntVector> pts;
    for (const auto& p : r3.points) pts.push_back(to_int_vector(p));
    EXPECT_EQ(pts, (std::vector<IntVector>{iv({0, 0, 0, 0}), iv({1, 2, 0, 0})}));
}

TEST(Engine, ForcedRelationHolds) {
    const auto r = enumerate_eigen_lattice(2, iv({0, 2, 1}));
    for (const auto& p : r.points) EXPECT_EQ(p[1], p[2]);
    EXPECT_EQ(r.count, 2u);
    EXPECT_THROW(enumerate_eigen_lattice(2, iv({3, 5, 5})), InputError);
}

TEST(Engine, MatchesPalindromeOracle) {
    for (int m = 2; m <= 6; ++m) {
        const auto r = enumerate_eigen_lattice(m, default_bounds(m));
        std::set<oracle::Row> got(r.points.begin(), r.points.end());
        EXPECT_EQ(got, oracle::qf_by_palindromes(m)) << m;
        EXPECT_EQ(r.count, got.size());
    }
}

TEST(Engine, EveryPointIsFixedAndBoxed) {
    for (int m = 2; m <= 8; ++m) {
        const auto d = d_matrix(static_cast<std::size_t>(m));
        for (const auto& p : enumerate_eigen_lattice(m, default_bounds(m)).points) {
            const auto z = to_int_vector(p);
            ASSERT_EQ(z * d, z);
            ASSERT_TRUE(in_box(z, default_bounds(m)));
        }
    }
}

TEST(Engine, CountOnlyAgreesWithListing) {
    for (int m = 2; m <= 8; ++m) {
        EngineOptions o;
        o.count_only = true;
        const auto c = enumerate_eigen_lattice(m, default_bounds(m), o);
        EXPECT_TRUE(c.points.empty());
        EXPECT_EQ(c.count, enumerate_eigen_lattice(m, default_bounds(m)).count) << m;
    }
}

TEST(Engine, WorkerCountDoesNotChangeOutput) {
    for (int m : {5, 8, 9}) {
        const auto a = enumerate_eigen_lattice(m, default_bounds(m), workers(1));
        for (unsigned w : {2u, 3u, 8u}) {
            const auto b = enumerate_eigen_lattice(m, default_bounds(m), workers(w));
            EXPECT_EQ(a.count, b.count);
            EXPECT_EQ(a.points, b.points) << m << " " << w;
        }
        EXPECT_TRUE(std::is_sorted(a.points.begin(), a.points.end()));
    }
}

TEST(Engine, LeafCap) {
    EngineOptions o;
    o.max_leaves = 10;
    EXPECT_THROW(enumerate_eigen_lattice(6, default_bounds(6), o), ResourceCapError);
    EXPECT_THROW(enumerate_eigen_lattice(2, iv({1, 1}), {}), InputError);
}

TEST(Classes, SmallM) {
    EXPECT_EQ(ds_fvectors(2, ParityClass::matching).points,
              (std::vector<IntVector>{iv({0, 1, 1}), iv({1, 0, 0}), iv({1, 1, 1})}));
    EXPECT_EQ(ds_fvectors(2, ParityClass::opposite).points, (std::vector<IntVector>{iv({1, 2, 0})}));
    EXPECT_EQ(ds_fvectors(3, ParityClass::matching).points, (std::vector<IntVector>{iv({1, 2, 0, 0})}));
    EXPECT_EQ(ds_fvectors(2, ParityClass::all).count, 5u);
}

TEST(Classes, Multiplicities) {
    EXPECT_EQ(*ds_fvectors(2, ParityClass::matching, {}, true).total_multiplicity, 5);
    EXPECT_EQ(*ds_fvectors(2, ParityClass::opposite, {}, true).total_multiplicity, 1);
    for (int m = 2; m <= 4; ++m) {
        const auto oracle = oracle_powerset(m);
        EXPECT_EQ(total_ds_count(m, ParityClass::matching), oracle.systems_matching) << m;
        EXPECT_EQ(total_ds_count(m, ParityClass::opposite), oracle.systems_opposite) << m;
    }
}

TEST(Table4, RowsUpToNine) {
    for (int m = 2; m <= 9; ++m) {
        const auto row = table4_row(m);
        const auto want = *table4_expected(m);
        EXPECT_EQ(row.col1, want[0]) << m;
        EXPECT_EQ(row.col2, want[1]) << m;
        EXPECT_EQ(row.col3, want[2]) << m;
        EXPECT_TRUE(row.disjoint) << m;
    }
    EXPECT_FALSE(table4_expected(11).has_value());
}

TEST(Oracles, BoxAgreesWithEngine) {
    for (int m = 2; m <= 6; ++m) {
        const auto box = oracle_box(m);
        EXPECT_EQ(box.matching, ds_fvectors(m, ParityClass::matching).points) << m;
        EXPECT_EQ(box.opposite, ds_fvectors(m, ParityClass::opposite).points) << m;
    }
    EXPECT_EQ(oracle_box(5).matching.size(), 7u);
    EXPECT_EQ(oracle_box(6).opposite.size(), 41u);
    EXPECT_THROW(oracle_box(8), ResourceCapError);
}

TEST(Oracles, PowersetAgreesWithEngine) {
    const std::array<std::array<std::size_t, 3>, 3> sizes = {{{2, 3, 1}, {3, 1, 7}, {4, 19, 5}}};
    for (auto [m, a, b] : sizes) {
        const auto p = oracle_powerset(static_cast<int>(m));
        EXPECT_EQ(p.scanned, std::uint64_t{1} << (1u << m));
        EXPECT_EQ(p.sets.matching.size(), a);
        EXPECT_EQ(p.sets.opposite.size(), b);
        EXPECT_EQ(p.sets.matching, ds_fvectors(static_cast<int>(m), ParityClass::matching).points);
        EXPECT_EQ(p.sets.opposite, ds_fvectors(static_cast<int>(m), ParityClass::opposite).points);
    }
    EXPECT_THROW(oracle_powerset(5), ResourceCapError);
}

TEST(GeneratingFunction, ReproducesColumnThree) {
    for (int m = 2; m <= 7; ++m) EXPECT_TRUE(genfun_identity_check(m).ok()) << m;
}
