// dsf: command-line front end. Exit codes: 0 ok, 1 identity failure,
// 2 input error, 3 resource cap.

#include "dsf/dsf.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using dsf::io::json;

enum class Format { json, csv, text };

constexpr int kExitOk = 0, kExitFailure = 1, kExitInput = 2, kExitCap = 3;

struct Output {
    std::string body;
    int status = kExitOk;
};

dsf::Integer parse_integer(const std::string& s) {
    if (s.empty()) throw dsf::InputError("empty number");
    std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
    if (i == s.size()) throw dsf::InputError("malformed number '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw dsf::InputError("malformed number '" + s + "'");
    return dsf::Integer(s[0] == '+' ? s.substr(1) : s);
}

dsf::Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return dsf::Rational(parse_integer(s));
    const dsf::Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw dsf::InputError("zero denominator in '" + s + "'");
    return dsf::Rational(parse_integer(s.substr(0, slash)), den);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

dsf::IntVector parse_int_list(const std::string& s) {
    dsf::IntVector v;
    for (const auto& x : split(s, ',')) v.push_back(parse_integer(x));
    return v;
}

dsf::RatVector parse_rat_list(const std::string& s) {
    dsf::RatVector v;
    for (const auto& x : split(s, ',')) v.push_back(parse_rational(x));
    return v;
}

/// "5" or "2..6"
std::vector<int> parse_m_range(const std::string& s) {
    const auto dots = s.find("..");
    auto to_int = [&](const std::string& t) {
        const dsf::Integer v = parse_integer(t);
        if (v < 2 || v > 64) throw dsf::InputError("m=" + t + " outside [2,64]");
        return static_cast<int>(v);
    };
    if (dots == std::string::npos) return {to_int(s)};
    const int lo = to_int(s.substr(0, dots)), hi = to_int(s.substr(dots + 2));
    if (lo > hi) throw dsf::InputError("empty m range '" + s + "'");
    std::vector<int> ms;
    for (int m = lo; m <= hi; ++m) ms.push_back(m);
    return ms;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

std::string tuple_text(const json& arr) {
    std::string s = "(";
    for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? "," : "") + scalar_text(arr[i]);
    return s + ")";
}

/// key: value lines; arrays of scalars as tuples, arrays of arrays one per line.
void render_text(const json& doc, const std::string& prefix, std::ostringstream& out) {
    for (const auto& [key, v] : doc.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (v.is_object()) {
            render_text(v, name, out);
        } else if (v.is_array() && !v.empty() && (v[0].is_array() || v[0].is_object())) {
            out << name << ":\n";
            for (const auto& e : v) {
                if (e.is_array()) {
                    out << "  " << tuple_text(e) << "\n";
                } else {
                    std::ostringstream sub;
                    render_text(e, "", sub);
                    std::string line = sub.str();
                    std::replace(line.begin(), line.end(), '\n', ' ');
                    while (!line.empty() && line.back() == ' ') line.pop_back();
                    out << "  " << line << "\n";
                }
            }
        } else if (v.is_array()) {
            out << name << ": " << tuple_text(v) << "\n";
        } else {
            out << name << ": " << scalar_text(v) << "\n";
        }
    }
}

std::string render(const json& doc, Format format) {
    if (format == Format::text) {
        std::ostringstream out;
        render_text(doc, "", out);
        return out.str();
    }
    return doc.dump(2) + "\n";
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    return s + "\n";
}

std::string csv_header(std::vector<std::string> lead, std::size_t width) {
    for (std::size_t i = 0; i < width; ++i) lead.push_back("x" + std::to_string(i));
    return csv_line(lead);
}

template <class V>
std::vector<std::string> cells(const std::vector<V>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(dsf::to_string(x));
    return out;
}

template <class S>
std::string matrix_csv(const dsf::Matrix<S>& a) {
    std::string s = csv_header({}, a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) s += csv_line(cells(a.row(i)));
    return s;
}

dsf::EngineOptions engine_options(unsigned workers, std::uint64_t max_leaves, bool count_only = false) {
    if (workers < 1) throw dsf::InputError("--workers must be at least 1");
    dsf::EngineOptions opt;
    opt.workers = workers;
    opt.count_only = count_only;
    if (max_leaves > 0) opt.max_leaves = max_leaves;
    return opt;
}

struct Config {
    std::string format = "json";
    std::string output;
    int m = 0;
    unsigned workers = 1;
    std::uint64_t max_leaves = 0;
    // matrix / basis / table1 / projector
    std::string name;
    std::string variant = "printed";
    std::string row;
    int k = 0;
    bool charpoly = false;
    // vectors
    std::string faces;
    // spaces
    std::string which;
    // enumerate
    std::string parity = "matching";
    std::string side = "f";
    std::string bounds;
    bool count_only = false;
    bool multiplicities = false;
    // table4
    int min_m = 2;
    int max_m = 10;
    // verify
    std::string suite = "all";
    std::string m_range;
    // contains
    std::string polytope;
    std::string point;
};

Output cmd_matrix(const Config& c, Format f) {
    const auto name = dsf::parse_matrix_name(c.name);
    const auto a = dsf::build_matrix(name, c.m);
    if (f == Format::csv) return {matrix_csv(a)};
    json doc = {{"command", "matrix"}, {"name", std::string(dsf::name_of(name))}, {"m", c.m},
                {"matrix", dsf::io::matrix(a)}};
    if (c.charpoly) {
        if (name != dsf::MatrixName::U) throw dsf::InputError("--charpoly is available for U only");
        const auto p = dsf::char_poly_U(c.m);
        doc["char_poly"] = dsf::io::polynomial(p);
        doc["eigenvalue_one_multiplicity"] = p.root_multiplicity(1);
    }
    return {render(doc, f)};
}

Output cmd_vectors(const Config& c, Format f) {
    const auto phi = dsf::io::read_face_system(c.faces);
    const auto lf = dsf::long_f(phi);
    const auto lh = dsf::long_h(phi);
    const auto size = phi.size();
    std::optional<dsf::ClassicalVectors> classical;
    if (size && *size >= 1) classical = dsf::classical_fh(phi);
    if (f == Format::csv) {
        std::string s = csv_header({"vector"}, lf.size());
        auto row = [&](const std::string& label, const dsf::IntVector& v) {
            auto r = cells(v);
            r.insert(r.begin(), label);
            s += csv_line(r);
        };
        row("long_f", lf);
        row("long_h", lh);
        return {s};
    }
    json doc = {{"command", "vectors"},
                {"system", dsf::io::face_system(phi)},
                {"m", phi.m()},
                {"count", phi.count()},
                {"size", size ? json(*size) : json(nullptr)},
                {"long_f", dsf::io::vector(lf)},
                {"long_h", dsf::io::vector(lh)}};
    doc["classical"] = classical ? json{{"f", dsf::io::vector(classical->f)}, {"h", dsf::io::vector(classical->h)}}
                                 : json(nullptr);
    doc["eta"] = size ? json(dsf::eta(phi)) : json(nullptr);
    doc["ds"] = dsf::is_ds(phi);
    doc["ds_family"] = size ? json(dsf::is_ds_family(phi)) : json(nullptr);
    doc["complex"] = dsf::is_complex(phi);
    return {render(doc, f)};
}

Output cmd_basis(const Config& c, Format f) {
    const auto kind = dsf::parse_basis_kind(c.name);
    const auto& b = dsf::basis(c.m, kind);
    if (f == Format::csv) {
        std::string s = csv_header({}, b.vectors.size());
        for (const auto& v : b.vectors) s += csv_line(cells(v));
        return {s};
    }
    json doc = {{"command", "basis"}, {"kind", std::string(dsf::name_of(kind))}, {"m", c.m},
                {"vectors", dsf::io::vectors(b.vectors)}};
    return {render(doc, f)};
}

Output cmd_table1(const Config& c, Format f) {
    dsf::require_m(c.m);
    const auto variant = dsf::parse_variant(c.variant);
    std::vector<dsf::Table1Row> rows;
    if (c.row.empty())
        rows.assign(dsf::kAllTable1Rows.begin(), dsf::kAllTable1Rows.end());
    else
        rows.push_back(dsf::parse_table1_row(c.row));
    std::vector<int> ks;
    if (c.k != 0) {
        dsf::require_k(c.k, c.m);
        ks.push_back(c.k);
    } else {
        for (int k = 1; k <= c.m; ++k) ks.push_back(k);
    }
    json entries = json::array();
    std::string s = csv_header({"row", "k", "agrees"}, static_cast<std::size_t>(c.m) + 1);
    for (auto r : rows)
        for (int k : ks) {
            dsf::RatVector closed;
            for (int l = 0; l <= c.m; ++l) closed.push_back(dsf::table1_entry(r, k, l, c.m, variant));
            const auto direct = dsf::table1_direct(r, k, c.m);
            const bool agrees = closed == direct;
            entries.push_back({{"row", std::string(dsf::name_of(r))},
                               {"k", k},
                               {"closed_form", dsf::io::vector(closed)},
                               {"direct", dsf::io::vector(direct)},
                               {"agrees", agrees}});
            auto line = cells(closed);
            line.insert(line.begin(), {std::string(dsf::name_of(r)), std::to_string(k), agrees ? "true" : "false"});
            s += csv_line(line);
        }
    if (f == Format::csv) return {s};
    json doc = {{"command", "table1"}, {"m", c.m}, {"variant", c.variant}, {"entries", entries}};
    return {render(doc, f)};
}

Output cmd_spaces(const Config& c, Format f) {
    dsf::require_m(c.m);
    std::vector<std::string> names = {"Eh", "H", "Ef", "F", "generators"};
    if (!c.which.empty()) {
        if (std::find(names.begin(), names.end(), c.which) == names.end())
            throw dsf::InputError("unknown space '" + c.which + "' (expected Eh, H, Ef, F or generators)");
        names = {c.which};
    } else if (f == Format::csv) {
        throw dsf::InputError("csv output needs --which");
    }
    auto family = [&](const std::string& n) {
        return n == "generators" ? dsf::cone_generators(c.m) : dsf::subspace_basis(dsf::parse_subspace(n), c.m).vectors;
    };
    if (f == Format::csv) {
        std::string s = csv_header({}, static_cast<std::size_t>(c.m) + 1);
        for (const auto& v : family(names[0])) s += csv_line(cells(v));
        return {s};
    }
    json doc = {{"command", "spaces"}, {"m", c.m}};
    json spaces = json::object();
    for (const auto& n : names) spaces[n] = dsf::io::vectors(family(n));
    doc["spaces"] = spaces;
    doc["hyperplane_indices"] = dsf::hyperplane_indices(c.m);
    return {render(doc, f)};
}

Output cmd_enumerate(const Config& c, Format f) {
    dsf::require_m(c.m);
    if (c.side != "f" && c.side != "h") throw dsf::InputError("--side must be f or h");
    const auto opt = engine_options(c.workers, c.max_leaves, c.count_only);
    json doc = {{"command", "enumerate"}};
    std::vector<dsf::IntVector> points;
    bool listed = !c.count_only;
    if (!c.bounds.empty()) {
        // Raw engine: all lattice points of the D(m)-fixed space in the box, zero included.
        if (c.multiplicities) throw dsf::InputError("--multiplicities needs a parity class, not --bounds");
        const auto b = parse_int_list(c.bounds);
        if (b.size() != static_cast<std::size_t>(c.m) + 1) throw dsf::InputError("--bounds must have m+1 entries");
        for (const auto& x : b)
            if (x < 0 || x > std::numeric_limits<std::int64_t>::max() / 4) throw dsf::InputError("bounds out of range");
        const auto r = dsf::enumerate_eigen_lattice(c.m, b, opt);
        for (const auto& p : r.points) points.push_back(dsf::to_int_vector(p));
        doc["m"] = c.m;
        doc["class"] = "box";
        doc["bounds"] = dsf::io::vector(b);
        doc["count_only"] = c.count_only;
        doc["count"] = r.count;
    } else {
        const auto rep = dsf::ds_fvectors(c.m, dsf::parse_parity(c.parity), opt, c.multiplicities);
        listed = !rep.count_only;
        points = rep.points;
        doc.update(dsf::io::enumeration(rep));
        if (!listed) doc.erase("points");
    }
    if (c.side == "h" && listed) {
        const auto s = dsf::s_matrix(static_cast<std::size_t>(c.m));
        for (auto& p : points) p = p * s;
        std::sort(points.begin(), points.end());
    }
    doc["side"] = c.side;
    if (listed) doc["points"] = dsf::io::vectors(points);
    if (f == Format::csv) {
        if (!listed) return {"count\n" + std::to_string(doc["count"].get<std::uint64_t>()) + "\n"};
        return {dsf::io::csv_rows(points, static_cast<std::size_t>(c.m) + 1)};
    }
    return {render(doc, f)};
}

Output cmd_table4(const Config& c, Format f) {
    if (c.min_m < 2 || c.max_m < c.min_m) throw dsf::InputError("need 2 <= --min-m <= --max-m");
    if (c.max_m > dsf::kEngineMaxM) throw dsf::InputError("--max-m above the engine limit");
    const auto opt = engine_options(c.workers, c.max_leaves);
    json rows = json::array();
    std::string s = csv_line({"m", "col1", "col2", "col3", "expected1", "expected2", "expected3", "match", "disjoint"});
    bool all_ok = true;
    for (int m = c.min_m; m <= c.max_m; ++m) {
        const auto r = dsf::table4_row(m, opt);
        const auto want = dsf::table4_expected(m);
        const bool match = !want || ((*want)[0] == r.col1 && (*want)[1] == r.col2 && (*want)[2] == r.col3);
        all_ok = all_ok && match && r.disjoint;
        json row = {{"m", m}, {"col1", r.col1}, {"col2", r.col2}, {"col3", r.col3}};
        row["expected"] = want ? json(*want) : json(nullptr);
        row["match"] = match;
        row["disjoint"] = r.disjoint;
        rows.push_back(row);
        auto e = [&](int i) { return want ? std::to_string((*want)[i]) : std::string(); };
        s += csv_line({std::to_string(m), std::to_string(r.col1), std::to_string(r.col2), std::to_string(r.col3), e(0),
                       e(1), e(2), match ? "true" : "false", r.disjoint ? "true" : "false"});
    }
    const int status = all_ok ? kExitOk : kExitFailure;
    if (f == Format::csv) return {s, status};
    json doc = {{"command", "table4"}, {"ok", all_ok}, {"rows", rows}};
    return {render(doc, f), status};
}

Output cmd_verify(const Config& c, Format f) {
    const auto suite = dsf::parse_suite(c.suite);
    const auto ms = parse_m_range(c.m_range);
    dsf::VerifyOptions opt;
    opt.variant = dsf::parse_variant(c.variant);
    opt.engine = engine_options(c.workers, c.max_leaves);
    json reports = json::array();
    std::size_t checks = 0, failures = 0;
    std::string s = csv_line({"suite", "m", "label", "indices", "expected", "got"});
    for (int m : ms) {
        const auto r = dsf::run_suite(suite, m, opt);
        checks += r.checks();
        failures += r.failure_count();
        json entry = dsf::io::report(r);
        entry["m"] = m;
        reports.push_back(entry);
        for (const auto& fr : r.failures()) {
            std::string idx;
            for (std::size_t i = 0; i < fr.indices.size(); ++i) idx += (i ? " " : "") + std::to_string(fr.indices[i]);
            s += csv_line({fr.suite, std::to_string(fr.m), fr.label, idx, fr.expected, fr.got});
        }
    }
    const int status = failures == 0 ? kExitOk : kExitFailure;
    if (f == Format::csv) return {s, status};
    json doc = {{"command", "verify"}, {"suite", c.suite}, {"variant", c.variant}, {"m", ms},
                {"ok", failures == 0}, {"checks", checks}, {"failure_count", failures}, {"reports", reports}};
    return {render(doc, f), status};
}

Output cmd_projector(const Config& c, Format f) {
    dsf::require_m(c.m);
    json doc = {{"command", "projector"}, {"m", c.m}};
    dsf::ExactMatrix p;
    if (c.name == "H" || c.name == "F") {
        p = dsf::subspace_projector(dsf::parse_subspace(c.name), c.m);
        doc["target"] = c.name;
    } else if (c.name == "f" || c.name == "h") {
        const auto kind = dsf::parse_fh(c.name);
        dsf::require_k(c.k, c.m);
        p = dsf::rank1_projector(kind, c.k, c.m);
        doc["target"] = c.name + "-bar";
        doc["k"] = c.k;
        const auto variant = dsf::parse_variant(c.variant);
        bool agrees = true;
        for (int i = 0; i <= c.m; ++i)
            for (int j = 0; j <= c.m; ++j)
                agrees = agrees && dsf::rank1_projector_entry(kind, c.k, i, j, c.m, variant) == p(i, j);
        doc["variant"] = c.variant;
        doc["closed_form_agrees"] = agrees;
    } else {
        throw dsf::InputError("projector target must be H, F, f or h");
    }
    if (f == Format::csv) return {matrix_csv(p)};
    doc["idempotent"] = dsf::is_idempotent(p);
    doc["symmetric"] = p.is_symmetric();
    doc["matrix"] = dsf::io::matrix(p);
    return {render(doc, f)};
}

Output cmd_contains(const Config& c, Format f) {
    const auto label = dsf::parse_polytope(c.polytope);
    std::optional<dsf::BoundsVector> b;
    if (!c.bounds.empty()) b = parse_int_list(c.bounds);
    const auto handle = dsf::make_polytope(label, c.m, b);
    const auto x = parse_rat_list(c.point);
    const bool inside = dsf::contains(handle, x);
    json doc = {{"command", "contains"},
                {"polytope", std::string(dsf::name_of(label))},
                {"m", c.m},
                {"bounds", dsf::io::vector(handle.bounds)},
                {"point", dsf::io::vector(x)},
                {"contains", inside}};
    const bool lattice = std::all_of(x.begin(), x.end(), [](const dsf::Rational& q) { return dsf::is_integral(q); });
    doc["lattice_point"] = lattice;
    if (inside && lattice && (label == dsf::PolytopeLabel::Qf || label == dsf::PolytopeLabel::Pi) && !b) {
        dsf::IntVector z;
        for (const auto& q : x) z.push_back(numerator(q));
        doc["multiplicity"] = dsf::io::big(dsf::multiplicity(z, c.m));
    }
    if (f == Format::csv)
        return {csv_line({"polytope", "m", "contains"}) +
                csv_line({std::string(dsf::name_of(label)), std::to_string(c.m), inside ? "true" : "false"})};
    return {render(doc, f)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact long f/h-vector toolkit for face systems in a simplex"};
    app.require_subcommand(1);
    app.fallthrough();
    Config c;
    app.add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output,-o", c.output, "write to this file instead of stdout");
    app.add_option("--workers", c.workers, "enumeration threads")->envname("DSF_WORKERS");
    app.add_option("--max-leaves", c.max_leaves, "enumeration leaf cap")->envname("DSF_MAX_LEAVES");

    auto add_m = [&](CLI::App* sub) { sub->add_option("--m", c.m, "ground set size")->required(); };

    auto* matrix = app.add_subcommand("matrix", "dump U, T, I, S, S_inv or D");
    matrix->add_option("name", c.name)->required();
    add_m(matrix);
    matrix->add_flag("--charpoly", c.charpoly, "also print the characteristic polynomial (U only)");

    auto* vectors = app.add_subcommand("vectors", "long and classical f/h-vectors of a face-system file");
    vectors->add_option("--faces", c.faces)->required();

    auto* basis = app.add_subcommand("basis", "one of the six chain bases");
    basis->add_option("kind", c.name, "S, Hdot, Fup, Hup, Fdown or Hdown")->required();
    add_m(basis);

    auto* table1 = app.add_subcommand("table1", "closed-form coordinates of the 2^[k]-bar vectors");
    add_m(table1);
    table1->add_option("--row", c.row);
    table1->add_option("--k", c.k);
    table1->add_option("--variant", c.variant)->check(CLI::IsMember({"printed", "corrected"}));

    auto* spaces = app.add_subcommand("spaces", "spanning sets of Eh, H, Ef, F and the cone generators");
    add_m(spaces);
    spaces->add_option("--which", c.which);

    auto* enumerate = app.add_subcommand("enumerate", "long f-vectors of DS-systems");
    add_m(enumerate);
    enumerate->add_option("--class", c.parity, "matching, opposite or all")
        ->check(CLI::IsMember({"matching", "opposite", "all"}));
    enumerate->add_option("--side", c.side, "f (long f-vectors) or h (long h-vectors)");
    enumerate->add_option("--bounds", c.bounds, "comma-separated box b0..bm; lists all fixed points of D(m)");
    enumerate->add_flag("--count-only", c.count_only);
    enumerate->add_flag("--multiplicities", c.multiplicities, "also total the face systems behind the points");

    auto* table4 = app.add_subcommand("table4", "counts of DS f-vectors per parity class");
    table4->add_option("--max-m", c.max_m);
    table4->add_option("--min-m", c.min_m);

    auto* verify = app.add_subcommand("verify", "run identity suites");
    verify->add_option("--suite", c.suite);
    verify->add_option("--m", c.m_range, "m or a range lo..hi")->required();
    verify->add_option("--variant", c.variant)->check(CLI::IsMember({"printed", "corrected"}));

    auto* projector = app.add_subcommand("projector", "orthogonal projector onto H, F, or lin of an f/h bar vector");
    projector->add_option("target", c.name, "H, F, f or h")->required();
    add_m(projector);
    projector->add_option("--k", c.k);
    projector->add_option("--variant", c.variant)->check(CLI::IsMember({"printed", "corrected"}));

    auto* contains = app.add_subcommand("contains", "membership in Qf, Pf, Qh or Pi");
    contains->add_option("polytope", c.polytope)->required();
    add_m(contains);
    contains->add_option("--point", c.point, "comma-separated, entries p or p/q")->required();
    contains->add_option("--bounds", c.bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    const Format format = c.format == "csv" ? Format::csv : c.format == "text" ? Format::text : Format::json;
    try {
        Output out;
        if (*matrix) out = cmd_matrix(c, format);
        else if (*vectors) out = cmd_vectors(c, format);
        else if (*basis) out = cmd_basis(c, format);
        else if (*table1) out = cmd_table1(c, format);
        else if (*spaces) out = cmd_spaces(c, format);
        else if (*enumerate) out = cmd_enumerate(c, format);
        else if (*table4) out = cmd_table4(c, format);
        else if (*verify) out = cmd_verify(c, format);
        else if (*projector) out = cmd_projector(c, format);
        else if (*contains) out = cmd_contains(c, format);

        if (c.output.empty()) {
            std::cout << out.body;
        } else {
            std::ofstream file(c.output, std::ios::binary);
            if (!file) throw dsf::InputError("cannot write '" + c.output + "'");
            file << out.body;
        }
        return out.status;
    } catch (const dsf::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const dsf::ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\nestimate: " << e.estimate().str() << "\n";
        return kExitCap;
    }
}
