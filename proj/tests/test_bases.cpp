#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dsf;

namespace {

IntVector iv(std::initializer_list<long long> x) { return IntVector(x.begin(), x.end()); }
RatVector rv(std::initializer_list<long long> x) { return to_rat_vector(iv(x)); }

} // namespace

TEST(Bases, CanonicalVectors) {
    EXPECT_EQ(basis(2, BasisKind::Fup).vectors[1], iv({1, 1, 0}));
    EXPECT_EQ(basis(2, BasisKind::Hdot).vectors[0], iv({1, -2, 1}));
    EXPECT_EQ(basis(2, BasisKind::Fdown).vectors[0], iv({0, 0, 1}));
    EXPECT_EQ(basis(4, BasisKind::S).matrix(), IntMatrix::identity(5));
}

TEST(Bases, EachFamilyHasFullRank) {
    for (int m = 2; m <= 8; ++m)
        for (auto kind : kAllBasisKinds) EXPECT_EQ(rank(basis(m, kind).matrix()), static_cast<std::size_t>(m) + 1);
}

TEST(Bases, ChainValidation) {
    EXPECT_THROW(bases_from_chain(3, {0, 1, 3}), InputError);            // too short
    EXPECT_THROW(bases_from_chain(3, {0, 1, 6, 7}), InputError);         // not nested
    EXPECT_THROW(bases_from_chain(3, {0, 3, 7, 7}), InputError);         // wrong sizes
    EXPECT_NO_THROW(bases_from_chain(3, {0, 4, 6, 7}));
}

TEST(Coords, Examples) {
    EXPECT_EQ(coords(fh_bar(FH::h, 1, 2), basis(2, BasisKind::Hdot)), rv({1, 0, 0}));
    // f(2^[2]-bar;3) = (1,2,0,0) = -[0,0] + 2 [0,{1}] in the Fup basis.
    EXPECT_EQ(coords(fh_bar(FH::f, 2, 3), basis(3, BasisKind::Fup)), rv({-1, 2, 0, 0}));
    const auto w = iv({4, -1, 7, 0, 2});
    EXPECT_EQ(coords(w, basis(4, BasisKind::S)), to_rat_vector(w));
    EXPECT_THROW(coords(iv({1, 2}), basis(4, BasisKind::S)), InputError);
}

TEST(FhBar, ClosedFormsAndDirect) {
    EXPECT_EQ(fh_bar(FH::h, 1, 2), iv({1, -2, 1}));
    EXPECT_EQ(fh_bar(FH::f, 2, 3), iv({1, 2, 0, 0}));
    EXPECT_EQ(fh_bar(FH::h, 2, 2), iv({1, 0, -1}));
    for (int m = 2; m <= 9; ++m)
        for (int k = 1; k <= m; ++k)
            for (FH kind : {FH::f, FH::h}) EXPECT_EQ(fh_bar(kind, k, m), fh_bar_direct(kind, k, m)) << m << " " << k;
    EXPECT_THROW(fh_bar(FH::f, 0, 3), InputError);
    EXPECT_THROW(fh_bar(FH::f, 4, 3), InputError);
}

TEST(Table1, SampleEntries) {
    EXPECT_EQ(table1_entry(Table1Row::f_Hdown, 1, 2, 2), Rational(1));
    EXPECT_EQ(table1_entry(Table1Row::h, 1, 0, 2), Rational(1));
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(table1_entry(Table1Row::h_Hup, k, k, 5), Rational(0));
}

TEST(Table1, CorrectedVariantMatchesEverywhere) {
    for (int m = 2; m <= 8; ++m) {
        const auto r = verify_table1(m, FormulaVariant::corrected);
        EXPECT_TRUE(r.ok()) << m << ": " << r.failure_count();
        EXPECT_EQ(r.checks(), 12u * m * (m + 1));
    }
}

// The printed f / Fdown row drops the sign (-1)^(m-l) on its first term; the
// other eleven rows are exact as printed.
TEST(Table1, PrintedVariantFailsOnlyOnFdownRow) {
    for (int m = 2; m <= 8; ++m) {
        const auto r = verify_table1(m, FormulaVariant::printed);
        EXPECT_GT(r.failure_count(), 0u) << m;
        for (const auto& f : r.failures()) EXPECT_EQ(f.label, "f_Fdown");
    }
}

TEST(Table1, ParsingRejectsUnknownRows) {
    EXPECT_THROW(parse_table1_row("f_Gdown"), InputError);
    EXPECT_THROW(parse_variant("draft"), InputError);
    EXPECT_THROW(parse_basis_kind("Q"), InputError);
}
