#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dsf;
using dsf::io::json;

TEST(Io, FaceSystemRoundTripIsCanonical) {
    const auto doc = json::parse(R"({"m": 3, "faces": [[3, 1], [], [2], [1, 2, 3]]})");
    const auto phi = io::parse_face_system(doc);
    const auto out = io::face_system(phi);
    EXPECT_EQ(out.dump(), R"({"m":3,"faces":[[],[2],[1,3],[1,2,3]]})");
    EXPECT_EQ(io::parse_face_system(out), phi);
}

TEST(Io, FaceSystemErrors) {
    for (const char* bad : {R"([])", R"({"faces": []})", R"({"m": 2})", R"({"m": 2.5, "faces": []})",
                            R"({"m": 1, "faces": []})", R"({"m": 2, "faces": [1]})", R"({"m": 2, "faces": [["1"]]})",
                            R"({"m": 2, "faces": [[3]]})", R"({"m": 2, "faces": [[1], [1]]})"})
        EXPECT_THROW(io::parse_face_system(json::parse(bad)), InputError) << bad;
    EXPECT_THROW(io::read_face_system("/nonexistent/face.json"), InputError);
}

TEST(Io, IntegersWidenToStrings) {
    EXPECT_EQ(io::integer(Integer(-7)).dump(), "-7");
    const Integer wide = Integer(1) << 70;
    EXPECT_EQ(io::integer(wide).dump(), "\"1180591620717411303424\"");
    EXPECT_EQ(io::big(Integer(5)).dump(), "\"5\"");
}

TEST(Io, MatrixEntriesAreExactStrings) {
    const auto p = subspace_projector(SubspaceLabel::H, 2);
    const auto j = io::matrix(p);
    EXPECT_EQ(j["rows"], 3);
    EXPECT_EQ(j["entries"][0][0], "1/6");
    EXPECT_EQ(j["entries"][0][1], "-1/3");
    EXPECT_EQ(io::matrix(s_matrix(2))["entries"][0].dump(), R"(["1","-2","1"])");
}

TEST(Io, ReportsCarryFailureRecords) {
    VerificationReport r("demo");
    r.expect_equal(Integer(1), Integer(2), 4, "label", {1, 2});
    r.note("a note");
    const auto j = io::report(r);
    EXPECT_EQ(j["ok"], false);
    EXPECT_EQ(j["failure_count"], 1);
    EXPECT_EQ(j["failures"][0]["indices"].dump(), "[1,2]");
    EXPECT_EQ(j["failures"][0]["expected"], "1");
    EXPECT_EQ(j["failures"][0]["got"], "2");
    EXPECT_EQ(j["notes"][0], "a note");
}

TEST(Io, EnumerationOmitsTiming) {
    const auto rep = ds_fvectors(2, ParityClass::matching, {}, true);
    const auto j = io::enumeration(rep);
    EXPECT_FALSE(j.contains("wall_time_seconds"));
    EXPECT_EQ(j["total_multiplicity"], "5");
    EXPECT_EQ(j["points"].dump(), "[[0,1,1],[1,0,0],[1,1,1]]");
}

TEST(Io, CsvHeader) {
    const std::vector<IntVector> rows = {IntVector{1, 0, 0}};
    EXPECT_EQ(io::csv_rows(rows, 3), "x0,x1,x2\n1,0,0\n");
}
