#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dsf;

namespace {

IntVector iv(std::initializer_list<long long> x) { return IntVector(x.begin(), x.end()); }

std::vector<IntVector> listed(int m, const BoundsVector& b) {
    const auto r = enumerate_eigen_lattice(m, b);
    std::vector<IntVector> out;
    for (const auto& p : r.points) out.push_back(to_int_vector(p));
    return out;
}

} // namespace

TEST(Polytopes, MembershipExamples) {
    EXPECT_TRUE(contains(make_polytope(PolytopeLabel::Qf, 2), iv({1, 1, 1})));
    EXPECT_TRUE(contains(make_polytope(PolytopeLabel::Qh, 2), iv({1, -1, 1})));
    EXPECT_FALSE(contains(make_polytope(PolytopeLabel::Qf, 2), iv({0, 1, 0})));
    EXPECT_TRUE(contains(make_polytope(PolytopeLabel::Pi, 2), iv({1, 2, 1})));
    EXPECT_FALSE(contains(make_polytope(PolytopeLabel::Pi, 2), iv({1, 3, 1})));
    EXPECT_TRUE(contains(make_polytope(PolytopeLabel::Pf, 2), iv({0, 1, 1})));
    EXPECT_FALSE(contains(make_polytope(PolytopeLabel::Pf, 2), iv({1, 1, 1})));
    const RatVector half = {Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    EXPECT_TRUE(contains(make_polytope(PolytopeLabel::Qf, 2), half));
}

TEST(Polytopes, Validation) {
    EXPECT_THROW(make_polytope(PolytopeLabel::Pf, 3), InputError);
    EXPECT_THROW(make_polytope(PolytopeLabel::Qf, 2, iv({1, 1})), InputError);
    EXPECT_THROW(make_polytope(PolytopeLabel::Qf, 2, iv({1, -1, 1})), InputError);
    EXPECT_THROW(contains(make_polytope(PolytopeLabel::Qf, 2), iv({1, 1})), InputError);
}

TEST(Polytopes, LatticePointsAtTwo) {
    const std::vector<IntVector> qf = {iv({0, 0, 0}), iv({0, 1, 1}), iv({1, 0, 0}), iv({1, 1, 1})};
    EXPECT_EQ(listed(2, default_bounds(2)), qf);
    const auto s = s_matrix(2);
    std::set<IntVector> qh;
    for (const auto& z : qf) qh.insert(z * s);
    EXPECT_EQ(qh, (std::set<IntVector>{iv({0, 0, 0}), iv({1, -2, 1}), iv({0, 1, 0}), iv({1, -1, 1})}));
    for (const auto& h : qh) EXPECT_TRUE(contains(make_polytope(PolytopeLabel::Qh, 2), h));
}

TEST(Polytopes, QhRelationsAndSubstitution) {
    std::mt19937_64 rng(3);
    for (int m = 2; m <= 8; ++m) {
        EXPECT_EQ(qh_center_dimension(m), static_cast<std::size_t>((m + 2) / 2));
        const auto n = static_cast<std::size_t>(m);
        const auto s = s_matrix(n);
        const auto handle = make_polytope(PolytopeLabel::Qh, m);
        std::vector<IntVector> probes;
        for (const auto& z : listed(m, default_bounds(m))) probes.push_back(z * s);
        for (int t = 0; t < 30; ++t) probes.push_back(oracle::random_vector(rng, m, -3, 3));
        for (const auto& x : probes) {
            const bool full = contains(handle, x);
            EXPECT_EQ(full, contains_Qh_by_relations(to_rat_vector(x), m, n + 1)) << m;
            EXPECT_EQ(full, contains_Qh_by_relations(to_rat_vector(x), m, qh_relation_columns(m))) << m;
            if (!full) continue;
            for (int k = 1; k <= (m + 1) / 2; ++k) EXPECT_EQ(x[k - 1], x[m - k + 1]);
        }
    }
}

TEST(Multiplicity, ClosedFormExamples) {
    EXPECT_EQ(multiplicity(iv({0, 1, 1}), 2), 2);
    EXPECT_EQ(multiplicity(iv({1, 2, 0, 0}), 3), 3);
    EXPECT_EQ(multiplicity(iv({0, 0, 0, 0}), 3), 1);
    EXPECT_THROW(multiplicity(iv({2, 0, 0}), 2), InputError);
}

TEST(Multiplicity, AgreesWithPowersetCount) {
    for (int m = 2; m <= 3; ++m)
        for (const auto& [f, n] : oracle::systems_per_fvector(m)) EXPECT_EQ(multiplicity(oracle::to_int(f), m), n);
}

TEST(Prism, EvenM) {
    for (int m : {2, 4, 6, 8}) {
        const auto qf = listed(m, default_bounds(m));
        BoundsVector pb = default_bounds(m);
        pb[0] = 0;
        const auto pf = listed(m, pb);
        if (m == 2) {
            EXPECT_EQ(pf, (std::vector<IntVector>{iv({0, 0, 0}), iv({0, 1, 1})}));
        }
        const auto r = prism_check(m, qf, pf);
        EXPECT_TRUE(r.ok()) << m;
        EXPECT_EQ(qf.size(), 2 * pf.size());
    }
    EXPECT_THROW(prism_check(3, {}, {}), InputError);
}
