#pragma once

// JSON and CSV rendering. Integers that fit in int64 are JSON numbers, wider
// ones decimal strings; rationals and matrix entries are always strings
// ("p" or "p/q"). Nothing time-dependent is serialized.

#include "dsf/verify.hpp"

#include "json.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace dsf::io {

using json = nlohmann::ordered_json;

inline json integer(const Integer& v) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min(), hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

/// Always a decimal string (multiplicities, totals).
inline json big(const Integer& v) { return v.str(); }

inline json vector(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(integer(x));
    return a;
}

inline json vector(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline json vectors(const std::vector<IntVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(vector(v));
    return a;
}

template <class S>
json matrix(const Matrix<S>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
        rows.push_back(std::move(r));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline json polynomial(const Polynomial& p) {
    json c = json::array();
    for (const auto& x : p.coefficients()) c.push_back(x.str());
    return {{"ascending", std::move(c)}, {"text", p.str("l")}};
}

inline json face_system(const FaceSystem& phi) {
    json faces = json::array();
    for (const auto& f : phi.faces()) faces.push_back(f);
    return {{"m", phi.m()}, {"faces", std::move(faces)}};
}

/// Parses {"m": int, "faces": [[int, ...], ...]}; InputError on any defect.
inline FaceSystem parse_face_system(const json& doc) {
    if (!doc.is_object()) throw InputError("face-system document must be an object");
    if (!doc.contains("m") || !doc["m"].is_number_integer()) throw InputError("face-system document needs integer 'm'");
    if (!doc.contains("faces") || !doc["faces"].is_array()) throw InputError("face-system document needs array 'faces'");
    const auto m = doc["m"].get<std::int64_t>();
    if (m < 2 || m > kMaxGroundSet) throw InputError("'m' must lie in [2," + std::to_string(kMaxGroundSet) + "]");
    std::vector<Face> faces;
    for (const auto& f : doc["faces"]) {
        if (!f.is_array()) throw InputError("each face must be an array of integers");
        Face face;
        for (const auto& e : f) {
            if (!e.is_number_integer()) throw InputError("face elements must be integers");
            const auto v = e.get<std::int64_t>();
            if (v < 1 || v > m) throw InputError("face element " + std::to_string(v) + " outside [1," + std::to_string(m) + "]");
            face.push_back(static_cast<int>(v));
        }
        faces.push_back(std::move(face));
    }
    return FaceSystem(static_cast<int>(m), faces);
}

inline FaceSystem read_face_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open face-system file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
    return parse_face_system(doc);
}

inline json failure(const FailureRecord& f) {
    return {{"suite", f.suite}, {"m", f.m},           {"label", f.label},
            {"indices", f.indices}, {"expected", f.expected}, {"got", f.got}};
}

inline json report(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures()) failures.push_back(failure(f));
    return {{"suite", r.suite()},  {"ok", r.ok()},          {"checks", r.checks()}, {"failure_count", r.failure_count()},
            {"failures", failures}, {"notes", r.notes()}};
}

inline json enumeration(const EnumerationReport& r) {
    json out = {{"m", r.m},
                {"class", std::string(name_of(r.parity))},
                {"bounds", vector(r.bounds)},
                {"count_only", r.count_only},
                {"count", r.count}};
    if (!r.count_only) out["points"] = vectors(r.points);
    if (r.total_multiplicity) out["total_multiplicity"] = big(*r.total_multiplicity);
    return out;
}

/// Header x0..x{n-1}, then one row per vector.
template <class V>
std::string csv_rows(const std::vector<V>& rows, std::size_t width) {
    std::ostringstream out;
    for (std::size_t i = 0; i < width; ++i) out << (i ? "," : "") << "x" << i;
    out << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << to_string(r[i]);
        out << "\n";
    }
    return out.str();
}

} // namespace dsf::io
